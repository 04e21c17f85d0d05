#include "ccx/fixed_point.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ccx {

BaseHyperplanes base_hyperplane_set(const CubeComplex& x, const GroupAction& a) {
  BaseHyperplanes out;
  std::set<Hyperplane> seen;
  for (const auto& gen : a.generators()) {
    std::vector<Hyperplane> s_i = hyperplanes_between(x, a.base(), gen.aut(a.base()));
    for (const Hyperplane& h : s_i) {
      if (seen.insert(h).second) out.all.push_back(h);
    }
    out.per_generator.push_back(std::move(s_i));
  }
  std::sort(out.all.begin(), out.all.end());
  return out;
}

std::int64_t far_distance_threshold(std::size_t size_s, int d) {
  return static_cast<std::int64_t>(size_s) * disjoint_triple_threshold(d);
}

FarSearch find_far_element(const CubeComplex& x, const GroupAction& a, std::int64_t n,
                           std::size_t cap) {
  if (n < 0) throw Error(Errc::InvalidArguments, "threshold must be >= 0");
  const VertexId v = a.base();
  auto stop = [&](const VertexId& w, const Word&) { return x.distance(v, w) >= n; };
  WordSearch search = word_bfs(a, v, cap, stop);
  if (search.hit) return FarElement{search.hit_word, x.distance(v, search.hit_vertex)};
  if (search.closed) {
    AllBounded bounded;
    for (const auto& [w, word] : search.visited) bounded.orbit.push_back(w);
    std::sort(bounded.orbit.begin(), bounded.orbit.end());
    return bounded;
  }
  throw Error(Errc::BudgetExceeded,
              "word search hit the cap of " + std::to_string(cap) +
                  " images with no far element and no finite closure");
}

TranslatedPath build_translated_path(const CubeComplex& x, const GroupAction& a, const Word& g) {
  TranslatedPath out;
  out.vertices.push_back(a.base());
  Automorphism prefix_aut = Automorphism::identity(x);
  Word prefix_word;
  std::map<std::string, std::vector<VertexId>> geodesic_cache;
  for (const std::string& letter : g) {
    const auto& gen = a.generator(letter);
    auto it = geodesic_cache.find(letter);
    if (it == geodesic_cache.end()) {
      it = geodesic_cache.emplace(letter, x.geodesic(a.base(), gen.aut(a.base()))).first;
    }
    const std::vector<VertexId>& lambda = it->second;
    for (std::size_t t = 0; t + 1 < lambda.size(); ++t) {
      VertexId tail = prefix_aut(lambda[t]);
      VertexId head = prefix_aut(lambda[t + 1]);
      ProvenancedHyperplane pe;
      pe.hyperplane = hyperplane_of(x, OrientedEdge(tail, head));
      pe.base = hyperplane_of(x, OrientedEdge(lambda[t], lambda[t + 1]));
      pe.prefix = prefix_word;
      out.vertices.push_back(std::move(head));
      out.edges.push_back(std::move(pe));
    }
    prefix_aut = Automorphism::compose(prefix_aut, gen.aut);
    prefix_word.push_back(letter);
  }
  return out;
}

namespace {

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

ResolutionOutcome fixed_point_or_witness(const CubeComplex& x, const GroupAction& a,
                                      const ClassifyBudget& budget) {
  const VertexId v = a.base();
  BaseHyperplanes s = base_hyperplane_set(x, a);
  const int d = x.dimension();
  const std::int64_t n = far_distance_threshold(s.all.size(), d);

  if (s.all.empty()) {
    // Every generator fixes the base vertex.
    return FixedPoint{Cube({v}, 0)};
  }

  FarSearch far;
  try {
    far = find_far_element(x, a, n, budget.orbit_cap);
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    UndecidedReport report;
    report.reason = e.what();
    return report;
  }

  if (const auto* bounded = std::get_if<AllBounded>(&far)) {
    return FixedPoint{bounded_orbit_fixed_cube(x, a, bounded->orbit)};
  }

  const FarElement& fe = std::get<FarElement>(far);
  TranslatedPath alpha = build_translated_path(x, a, fe.word);
  const VertexId gv = alpha.vertices.back();

  // T = the provenanced walls separating v from g(v); every separating
  // wall is crossed by the path, and the first crossing fixes its
  // provenance.
  std::vector<ProvenancedHyperplane> separating;
  std::set<Hyperplane> taken;
  for (const ProvenancedHyperplane& pe : alpha.edges) {
    if (taken.count(pe.hyperplane)) continue;
    if (side(x, pe.hyperplane, v) != side(x, pe.hyperplane, gv)) {
      taken.insert(pe.hyperplane);
      separating.push_back(pe);
    }
  }
  if (static_cast<std::int64_t>(separating.size()) != x.distance(v, gv) ||
      static_cast<std::int64_t>(separating.size()) < n) {
    throw Error(Errc::InternalError,
                "separating wall count disagrees with the distance (implementation falsified)");
  }

  // Bucket by base hyperplane; std::map iterates bases canonically.
  std::map<Hyperplane, std::vector<ProvenancedHyperplane>> buckets;
  for (const ProvenancedHyperplane& pe : separating) buckets[pe.base].push_back(pe);

  UndecidedReport report;
  report.far_word = fe.word;
  for (const auto& [base, members] : buckets) report.bucket_sizes.emplace_back(base, members.size());

  const std::int64_t per_bucket = disjoint_triple_threshold(d);
  const std::vector<ProvenancedHyperplane>* bucket = nullptr;
  for (const auto& [base, members] : buckets) {
    if (static_cast<std::int64_t>(members.size()) >= per_bucket) {
      bucket = &members;
      break;
    }
  }
  if (!bucket) {
    throw Error(Errc::InternalError, "no bucket reached the pigeonhole bound (implementation falsified)");
  }

  std::vector<Hyperplane> ks;
  ks.reserve(bucket->size());
  for (const ProvenancedHyperplane& pe : *bucket) ks.push_back(pe.hyperplane);
  std::optional<DisjointTriple> triple = find_disjoint_triple(x, ks);
  if (!triple) {
    throw Error(Errc::InternalError, "disjoint triple missing above threshold");
  }
  report.triple = triple->hyperplanes;
  if (!triple->separator) {
    throw Error(Errc::InternalError,
                "no separating wall among three disjoint walls that each separate v from g(v)");
  }

  auto prefix_of = [&](const Hyperplane& h) -> const Word& {
    for (const ProvenancedHyperplane& pe : *bucket) {
      if (pe.hyperplane == h) return pe.prefix;
    }
    throw Error(Errc::InternalError, "triple member missing from its bucket");
  };

  // Reindex: middle = separating wall h2·J; outer pair ordered
  // canonically as h1·J, h3·J.
  const int mid = *triple->separator;
  int o1 = (mid + 1) % 3;
  int o2 = (mid + 2) % 3;
  if (triple->hyperplanes[o2] < triple->hyperplanes[o1]) std::swap(o1, o2);
  const Word& h1 = prefix_of(triple->hyperplanes[o1]);
  const Word& h2 = prefix_of(triple->hyperplanes[mid]);
  const Word& h3 = prefix_of(triple->hyperplanes[o2]);

  const Word cand_a = concat(h2, a.inverse_word(h1));
  const Word cand_b = concat(h3, a.inverse_word(h1));
  const Word cand_ba = concat(cand_b, a.inverse_word(cand_a));

  std::vector<Word> tried;
  for (const Word& w : {cand_a, cand_b, cand_ba}) {
    tried.push_back(w);
    ClassifyResult res = classify(x, evaluate(a, w), v, budget);
    if (const auto* cert = std::get_if<HyperbolicCert>(&res)) {
      return HyperbolicWitness{w, *cert, tried};
    }
  }
  report.reason = "all three candidate words exhausted their classification budgets";
  report.failed_candidates = tried;
  return report;
}

}  // namespace ccx
