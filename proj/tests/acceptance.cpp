// Acceptance suite: one pass/fail line per criterion, exit 0 iff all
// criteria hold. Every tolerance and threshold is pinned here.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ccx/fuzz.hpp"

using namespace ccx;

namespace {

struct Criterion {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
  json report;  // deterministic payload, no wall times
};

VertexId lat1(std::int64_t v) { return VertexId::scalar(v); }

Criterion make_criterion(int id, std::string title) {
  Criterion c;
  c.id = id;
  c.title = std::move(title);
  return c;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Criterion 1: on the [0,5]^2 window (d=2, threshold 8), every one of
// the C(10,8)=45 eight-wall subsets yields a verified disjoint triple.
Criterion criterion1() {
  Criterion c = make_criterion(1, "Disjoint wall triples, exhaustive: all 45 eight-wall subsets of the [0,5]^2 window");
  auto start = std::chrono::steady_clock::now();
  CubeComplex w = lattice_window(2, 0, 5);
  std::vector<Hyperplane> walls = all_hyperplanes(w);
  json triples = json::array();
  bool ok = w.dimension() == 2 && walls.size() == 10 && disjoint_triple_threshold(2) == 8;
  if (!ok) c.detail = "window setup unexpected";
  std::size_t subsets = 0;
  for (std::size_t a = 0; a < walls.size() && ok; ++a) {
    for (std::size_t b = a + 1; b < walls.size() && ok; ++b) {
      // Subset = all walls except positions a and b.
      std::vector<Hyperplane> s;
      for (std::size_t i = 0; i < walls.size(); ++i) {
        if (i != a && i != b) s.push_back(walls[i]);
      }
      ++subsets;
      std::optional<DisjointTriple> triple;
      try {
        triple = find_disjoint_triple(w, s);
      } catch (const Error& e) {
        ok = false;
        c.detail = std::string("pipeline raised: ") + e.what();
        break;
      }
      if (!triple) {
        ok = false;
        c.detail = "NotFound at threshold";
        break;
      }
      for (int i = 0; i < 3 && ok; ++i) {
        for (int j = i + 1; j < 3 && ok; ++j) {
          if (brute_force_crosses(w, triple->hyperplanes[i], triple->hyperplanes[j])) {
            ok = false;
            c.detail = "triple crosses per the brute-force oracle";
          }
        }
      }
      json jt = json::array();
      for (const auto& h : triple->hyperplanes) jt.push_back(hyperplane_to_json(w, h));
      triples.push_back(jt);
    }
  }
  c.seconds = seconds_since(start);
  if (ok && subsets != 45) {
    ok = false;
    c.detail = "expected 45 subsets, saw " + std::to_string(subsets);
  }
  if (ok && c.seconds >= 5.0) {
    ok = false;
    c.detail = "runtime bound exceeded";
  }
  c.pass = ok;
  if (ok) c.detail = "45 subsets, every triple verified non-crossing";
  c.report = json{{"subsets", subsets}, {"triples", triples}};
  return c;
}

Criterion fuzz_criterion(int id, const std::string& title, std::size_t cases, std::uint64_t seed,
                         const std::string& suite, double time_bound) {
  Criterion c = make_criterion(id, title);
  auto start = std::chrono::steady_clock::now();
  json report = run_fuzz(cases, seed, {suite});
  c.seconds = seconds_since(start);
  const auto& s = report.at("suites").at(suite);
  std::size_t fail = s.at("fail").get<std::size_t>();
  std::size_t pass = s.at("pass").get<std::size_t>();
  std::size_t skipped = s.at("skipped").get<std::size_t>();
  c.pass = fail == 0 && pass > 0;
  c.detail = std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
             std::to_string(skipped) + " skipped";
  if (!c.pass) c.detail += "; failures: " + s.at("failures").dump();
  if (time_bound > 0 && c.seconds >= time_bound) {
    c.pass = false;
    c.detail += "; runtime bound exceeded";
  }
  c.report = std::move(report);
  return c;
}

// Criterion 7: the infinite dihedral action on the line yields a
// hyperbolic witness that re-certifies, with estimate exactly 2 at n=8.
Criterion criterion7() {
  Criterion c = make_criterion(7, "Hyperbolic witness: infinite dihedral acting on the line");
  auto start = std::chrono::steady_clock::now();
  CubeComplex z1 = CubeComplex::lattice(1);
  Automorphism s = Automorphism::affine({-1}, {0}, {0});
  Automorphism t = Automorphism::affine({-1}, {0}, {2});
  GroupAction dihedral(z1, {{"s", s}, {"t", t}}, lat1(0));

  bool ok = true;
  std::string why;
  // Both generators certify elliptic individually (fixed walls at 0, 1).
  ClassifyResult rs = classify(z1, s, lat1(0));
  ClassifyResult rt = classify(z1, t, lat1(0));
  const auto* es = std::get_if<EllipticCert>(&rs);
  const auto* et = std::get_if<EllipticCert>(&rt);
  if (!es || !(es->cube == Cube({lat1(0)}, 0))) {
    ok = false;
    why = "s did not certify elliptic at vertex 0";
  }
  if (ok && (!et || !(et->cube == Cube({lat1(1)}, 0)))) {
    ok = false;
    why = "t did not certify elliptic at vertex 1";
  }

  ResolutionOutcome outcome = fixed_point_or_witness(z1, dihedral);
  const auto* witness = std::get_if<HyperbolicWitness>(&outcome);
  if (ok && !witness) {
    ok = false;
    why = "no hyperbolic witness within default budgets";
  }
  json joutcome = outcome_to_json(z1, outcome);
  Rational estimate{0, 1};
  if (ok) {
    Automorphism g = evaluate(dihedral, witness->word);
    ClassifyResult again = classify(z1, g, lat1(0));
    const auto* cert = std::get_if<HyperbolicCert>(&again);
    if (!cert || !verify_hyperbolic_cert(z1, g, *cert)) {
      ok = false;
      why = "witness word did not re-certify from scratch";
    }
    estimate = translation_length_estimate(z1, g, lat1(0), 8);
    if (ok && !(estimate == Rational{2, 1})) {
      ok = false;
      why = "estimate at n=8 is not exactly 2";
    }
  }
  c.seconds = seconds_since(start);
  if (ok && c.seconds >= 5.0) {
    ok = false;
    why = "runtime bound exceeded";
  }
  c.pass = ok;
  c.detail = ok ? "witness word certified and re-certified, estimate 2" : why;
  c.report = json{{"outcome", joutcome},
                  {"estimate", json{{"num", estimate.num}, {"den", estimate.den}}}};
  return c;
}

// Criterion 8: the three classification examples plus certificate
// mutual exclusion over a fuzzed corpus.
Criterion criterion8() {
  Criterion c = make_criterion(8, "Classification certificates and mutual exclusion");
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  json examples = json::object();

  CubeComplex z1 = CubeComplex::lattice(1);
  Automorphism t2 = Automorphism::affine({1}, {0}, {2});
  ClassifyResult r1 = classify(z1, t2, lat1(0));
  if (!std::holds_alternative<HyperbolicCert>(r1)) {
    ok = false;
    why = "translation by 2 not hyperbolic";
  }
  examples["translation"] = certificate_to_json(z1, r1);

  CubeComplex sq =
      CubeComplex::finite({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  Automorphism rot = Automorphism::permutation({1, 2, 3, 0});
  ClassifyResult r2 = classify(sq, rot, *sq.vertex_by_name("a"));
  const auto* ell = std::get_if<EllipticCert>(&r2);
  if (ok && (!ell || ell->cube.dimension() != 2 || ell->cube.vertices().size() != 4)) {
    ok = false;
    why = "rotation did not certify elliptic on the square";
  }
  examples["rotation"] = certificate_to_json(sq, r2);

  CubeComplex z2 = CubeComplex::lattice(2);
  Automorphism glide = Automorphism::affine({1, -1}, {0, 1}, {1, 0});
  ClassifyResult r3 = classify(z2, glide, VertexId({0, 0}));
  if (ok && !std::holds_alternative<HyperbolicCert>(r3)) {
    ok = false;
    why = "glide not hyperbolic";
  }
  if (ok && !(translation_length_estimate(z2, glide, VertexId({0, 0}), 6) == Rational{1, 1})) {
    ok = false;
    why = "glide estimate at n=6 is not exactly 1";
  }
  examples["glide"] = certificate_to_json(z2, r3);

  // Mutual exclusion on the examples themselves.
  for (auto [x, g] : {std::pair<const CubeComplex*, const Automorphism*>{&z1, &t2},
                      {&sq, &rot},
                      {&z2, &glide}}) {
    auto [hyp, el] = classify_both(*x, *g, x->base_vertex());
    if (hyp && el) {
      ok = false;
      why = "both certificate kinds fired for one map";
    }
  }

  // And across a fuzzed corpus (the theorem_a suite asserts it per case).
  json fuzz_report = run_fuzz(120, 80001, {"theorem_a"});
  if (ok && fuzz_report.at("suites").at("theorem_a").at("fail").get<std::size_t>() != 0) {
    ok = false;
    why = "mutual exclusion or soundness failed on the fuzz corpus";
  }

  c.seconds = seconds_since(start);
  c.pass = ok;
  c.detail = ok ? "three examples certified; corpus clean" : why;
  c.report = json{{"examples", examples}, {"fuzz", fuzz_report}};
  return c;
}

// Criterion 9: Fix(S ∪ T) ⊆ Fix(S) ∩ Fix(T) over corpus cases with
// random generator subsets.
Criterion criterion9() {
  Criterion c = make_criterion(9, "Filtering containment Fix(S∪T) ⊆ Fix(S) ∩ Fix(T)");
  auto start = std::chrono::steady_clock::now();
  constexpr std::size_t kCases = 120;
  bool ok = true;
  std::string why;
  std::size_t checked = 0;
  constexpr Family kFamilies[] = {Family::Tree, Family::Staircase, Family::Product};
  for (std::size_t i = 0; i < kCases && ok; ++i) {
    const std::uint64_t seed = 90001 + i;
    json doc = generate_complex(seed, kFamilies[i % 3]);
    CubeComplex x = parse_complex(doc);
    std::vector<Automorphism> gens = automorphism_search(x);
    Rng rng(seed ^ 0xf1f7e41ull);
    auto subset = [&]() {
      std::vector<Automorphism> out;
      for (const Automorphism& g : gens) {
        if (rng.below(2) == 0) out.push_back(g);
      }
      return out;
    };
    std::vector<Automorphism> s = subset();
    std::vector<Automorphism> t = subset();
    try {
      FixIntersectionReport report = fix_intersection(x, s, t);
      if (!report.contained) {
        ok = false;
        why = "containment flag false at seed " + std::to_string(seed);
      }
      ++checked;
    } catch (const Error& e) {
      ok = false;
      why = std::string("violation at seed ") + std::to_string(seed) + ": " + e.what();
    }
  }
  c.seconds = seconds_since(start);
  c.pass = ok && checked == kCases;
  c.detail = ok ? std::to_string(checked) + " cases contained" : why;
  c.report = json{{"cases", checked}, {"all_contained", ok}};
  return c;
}

std::vector<Criterion> run_all() {
  std::vector<Criterion> out;
  out.push_back(criterion1());
  out.push_back(fuzz_criterion(2, "Disjoint wall triples, fuzz: sampled S at/above threshold over 500 cases",
                               500, 20001, "prop1", 60.0));
  out.push_back(fuzz_criterion(3, "Distance-hyperplane duality on corpus complexes <= 40 vertices",
                               300, 30001, "distance_count", 0.0));
  out.push_back(fuzz_criterion(4, "Theta oracle equivalence on corpus complexes <= 40 vertices",
                               300, 40001, "theta_oracle", 0.0));
  out.push_back(fuzz_criterion(5, "Helly common cubes for every pairwise-crossing family", 300,
                               50001, "helly", 0.0));
  out.push_back(fuzz_criterion(6, "Fixed-point resolution over 300 full-automorphism-group actions", 300,
                               60001, "theorem_a", 60.0));
  out.push_back(criterion7());
  out.push_back(criterion8());
  out.push_back(criterion9());
  return out;
}

}  // namespace

int main() {
  std::vector<Criterion> first = run_all();

  // Criterion 10: identical seeds reproduce byte-identical reports.
  Criterion c10 = make_criterion(10, "Determinism: criteria 1-9 reports byte-identical on rerun");
  {
    auto start = std::chrono::steady_clock::now();
    std::vector<Criterion> second = run_all();
    c10.pass = first.size() == second.size();
    for (std::size_t i = 0; c10.pass && i < first.size(); ++i) {
      if (first[i].report.dump(2) != second[i].report.dump(2)) {
        c10.pass = false;
        c10.detail = "criterion " + std::to_string(first[i].id) + " report differs";
      }
    }
    c10.seconds = seconds_since(start);
    if (c10.pass) c10.detail = "all nine reports identical";
  }

  bool all_pass = true;
  auto print = [&](const Criterion& c) {
    std::printf("[%2d] %s  %s (%.2f s) — %s\n", c.id, c.pass ? "PASS" : "FAIL", c.title.c_str(),
                c.seconds, c.detail.c_str());
    if (!c.pass) all_pass = false;
  };
  for (const Criterion& c : first) print(c);
  print(c10);
  std::printf("%s\n", all_pass ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
