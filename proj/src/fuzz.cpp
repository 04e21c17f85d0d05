#include "ccx/fuzz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace ccx {

const char* family_name(Family f) {
  switch (f) {
    case Family::Tree: return "tree";
    case Family::Staircase: return "staircase";
    case Family::Product: return "product";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Corpus generation

namespace {

struct RawGraph {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
};

// Uniform random tree on n vertices via Prüfer decoding.
RawGraph random_tree(Rng& rng, std::size_t n) {
  RawGraph g;
  for (std::size_t i = 0; i < n; ++i) g.names.push_back("v" + std::to_string(i));
  if (n == 1) return g;
  std::vector<std::size_t> code(n >= 2 ? n - 2 : 0);
  for (auto& c : code) c = rng.below(n);
  std::vector<int> degree(n, 1);
  for (std::size_t c : code) ++degree[c];
  std::set<std::size_t> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] == 1) leaves.insert(i);
  }
  for (std::size_t c : code) {
    std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.edges.emplace_back(g.names[leaf], g.names[c]);
    if (--degree[c] == 1) leaves.insert(c);
  }
  auto it = leaves.begin();
  std::size_t a = *it++;
  std::size_t b = *it;
  g.edges.emplace_back(g.names[a], g.names[b]);
  return g;
}

// Monotone staircase ideal in a Z^2 window: columns of non-increasing
// heights. Downward-closed, hence median-closed and connected.
RawGraph random_staircase(Rng& rng, std::size_t max_w, std::size_t max_h, std::size_t* repairs) {
  const std::size_t w = 2 + rng.below(max_w - 1);
  std::vector<std::int64_t> heights(w);
  heights[0] = 1 + static_cast<std::int64_t>(rng.below(max_h));
  for (std::size_t i = 1; i < w; ++i) {
    heights[i] = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(heights[i - 1])));
  }
  std::set<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::size_t xc = 0; xc < w; ++xc) {
    for (std::int64_t yc = 0; yc < heights[xc]; ++yc) cells.emplace(xc, yc);
  }
  // Median-closure repair: insert coordinatewise medians until stable
  // (a no-op for ideals; the count is reported for the invariant suite).
  if (repairs) *repairs = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<std::int64_t, std::int64_t>> list(cells.begin(), cells.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i; j < list.size(); ++j) {
        for (std::size_t k = j; k < list.size(); ++k) {
          std::array<std::int64_t, 3> xs{list[i].first, list[j].first, list[k].first};
          std::array<std::int64_t, 3> ys{list[i].second, list[j].second, list[k].second};
          std::sort(xs.begin(), xs.end());
          std::sort(ys.begin(), ys.end());
          if (cells.emplace(xs[1], ys[1]).second) {
            grew = true;
            if (repairs) ++*repairs;
          }
        }
      }
    }
  }
  RawGraph g;
  auto name = [](std::int64_t xc, std::int64_t yc) {
    return std::to_string(xc) + "," + std::to_string(yc);
  };
  for (const auto& [xc, yc] : cells) g.names.push_back(name(xc, yc));
  for (const auto& [xc, yc] : cells) {
    if (cells.count({xc + 1, yc})) g.edges.emplace_back(name(xc, yc), name(xc + 1, yc));
    if (cells.count({xc, yc + 1})) g.edges.emplace_back(name(xc, yc), name(xc, yc + 1));
  }
  return g;
}

RawGraph product_graph(const RawGraph& a, const RawGraph& b) {
  RawGraph g;
  auto name = [](const std::string& u, const std::string& w) { return u + "|" + w; };
  for (const auto& u : a.names) {
    for (const auto& w : b.names) g.names.push_back(name(u, w));
  }
  for (const auto& [u1, u2] : a.edges) {
    for (const auto& w : b.names) g.edges.emplace_back(name(u1, w), name(u2, w));
  }
  for (const auto& u : a.names) {
    for (const auto& [w1, w2] : b.edges) g.edges.emplace_back(name(u, w1), name(u, w2));
  }
  return g;
}

json graph_doc(const RawGraph& g, const std::string& name) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
  return json{{"type", "finite"}, {"vertices", g.names}, {"edges", std::move(edges)}, {"name", name}};
}

}  // namespace

json generate_complex(std::uint64_t seed, Family family) {
  for (int attempt = 0; attempt < 5; ++attempt) {
    Rng rng(seed * 6364136223846793005ull + static_cast<std::uint64_t>(attempt) + 1);
    RawGraph g;
    std::size_t repairs = 0;
    switch (family) {
      case Family::Tree:
        g = random_tree(rng, 2 + rng.below(49));
        break;
      case Family::Staircase:
        g = random_staircase(rng, 8, 8, &repairs);
        break;
      case Family::Product: {
        RawGraph a = rng.below(2) == 0 ? random_tree(rng, 2 + rng.below(6))
                                       : random_staircase(rng, 2, 3, nullptr);
        RawGraph b = rng.below(2) == 0 ? random_tree(rng, 2 + rng.below(6))
                                       : random_staircase(rng, 2, 3, nullptr);
        g = product_graph(a, b);
        break;
      }
    }
    json doc = graph_doc(g, std::string(family_name(family)) + "-" + std::to_string(seed));
    try {
      CubeComplex x = parse_complex(doc);
      MedianCheck check = x.verify_median_graph();
      if (check.ok() && repairs == 0) return doc;
    } catch (const Error&) {
      // retry with a perturbed stream
    }
  }
  throw Error(Errc::GenerationFailed,
              "could not generate a median complex for seed " + std::to_string(seed));
}

// ---------------------------------------------------------------------------
// Automorphism search: one backtracking run per stabilizer-chain level.

namespace {

struct SearchContext {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<int> degree;
  std::vector<std::size_t> base;  // BFS order from vertex 0
};

// First adjacency-preserving completion of the partial map, filling
// base positions from `pos` on; candidate targets ascend.
bool extend(const SearchContext& ctx, std::size_t pos, std::vector<std::int64_t>& map,
            std::vector<bool>& used) {
  if (pos == ctx.n) return true;
  const std::size_t v = ctx.base[pos];
  for (std::size_t t = 0; t < ctx.n; ++t) {
    if (used[t] || ctx.degree[v] != ctx.degree[t]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < pos; ++k) {
      const std::size_t w = ctx.base[k];
      if (ctx.adj[v][w] != ctx.adj[t][static_cast<std::size_t>(map[w])]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[v] = static_cast<std::int64_t>(t);
    used[t] = true;
    if (extend(ctx, pos + 1, map, used)) return true;
    used[t] = false;
    map[v] = -1;
  }
  return false;
}

std::set<std::size_t> orbit_of(std::size_t v, const std::vector<std::vector<std::int64_t>>& gens) {
  std::set<std::size_t> orbit{v};
  std::vector<std::size_t> queue{v};
  while (!queue.empty()) {
    std::size_t u = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      auto w = static_cast<std::size_t>(g[u]);
      if (orbit.insert(w).second) queue.push_back(w);
    }
  }
  return orbit;
}

}  // namespace

std::vector<Automorphism> automorphism_search(const CubeComplex& x) {
  const std::size_t n = x.vertex_count();
  if (n > 60) throw Error(Errc::SizeExceeded, "automorphism search supports up to 60 vertices");
  SearchContext ctx;
  ctx.n = n;
  ctx.adj.assign(n, std::vector<bool>(n, false));
  ctx.degree.assign(n, 0);
  for (const OrientedEdge& e : x.edges()) {
    auto u = static_cast<std::size_t>(e.tail.coords()[0]);
    auto v = static_cast<std::size_t>(e.head.coords()[0]);
    ctx.adj[u][v] = ctx.adj[v][u] = true;
    ++ctx.degree[u];
    ++ctx.degree[v];
  }
  // BFS base order binds adjacency constraints early.
  {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.erase(queue.begin());
      ctx.base.push_back(u);
      for (std::size_t w = 0; w < n; ++w) {
        if (ctx.adj[u][w] && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<std::vector<std::int64_t>> gens;
  for (std::size_t level = n; level-- > 0;) {
    const std::size_t v = ctx.base[level];
    for (std::size_t t = 0; t < n; ++t) {
      if (t == v || ctx.degree[t] != ctx.degree[v]) continue;
      if (orbit_of(v, gens).count(t)) continue;  // already reachable
      std::vector<std::int64_t> map(n, -1);
      std::vector<bool> used(n, false);
      bool feasible = true;
      for (std::size_t k = 0; k < level; ++k) {
        const std::size_t w = ctx.base[k];
        map[w] = static_cast<std::int64_t>(w);
        used[w] = true;
        if (ctx.adj[v][w] != ctx.adj[t][w]) feasible = false;
      }
      if (!feasible || used[t]) continue;
      map[v] = static_cast<std::int64_t>(t);
      used[t] = true;
      if (extend(ctx, level + 1, map, used)) gens.push_back(map);
    }
  }

  std::vector<Automorphism> out;
  out.reserve(gens.size());
  for (auto& g : gens) out.push_back(Automorphism::permutation(std::move(g)));
  return out;
}

FuzzCase make_fuzz_case(std::uint64_t seed, Family family, bool with_action) {
  FuzzCase fc;
  fc.seed = seed;
  fc.complex_doc = generate_complex(seed, family);
  fc.expectation = "FixedPointExpected";
  if (with_action) {
    CubeComplex x = parse_complex(fc.complex_doc);
    std::vector<Automorphism> gens = automorphism_search(x);
    std::vector<std::pair<std::string, Automorphism>> named;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      named.emplace_back("a" + std::to_string(i), gens[i]);
    }
    VertexId base = x.vertices()[Rng(seed ^ 0xac710ull).below(x.vertex_count())];
    GroupAction action(x, std::move(named), std::move(base));
    fc.action_doc = serialize_action(action);
  }
  return fc;
}

// ---------------------------------------------------------------------------
// Independent oracles

bool brute_force_crosses(const CubeComplex& x, const Hyperplane& h1, const Hyperplane& h2) {
  const OrientedEdge& e1 = h1.representative();
  const OrientedEdge& e2 = h2.representative();
  bool quadrant[2][2] = {{false, false}, {false, false}};
  for (const VertexId& w : x.vertices()) {
    std::int64_t a = x.distance(w, e1.head) - x.distance(w, e1.tail);
    std::int64_t b = x.distance(w, e2.head) - x.distance(w, e2.tail);
    quadrant[a < 0 ? 1 : 0][b < 0 ? 1 : 0] = true;
  }
  return quadrant[0][0] && quadrant[0][1] && quadrant[1][0] && quadrant[1][1];
}

std::vector<std::vector<OrientedEdge>> square_closure_theta_classes(const CubeComplex& x) {
  std::vector<OrientedEdge> edges = x.edges();
  std::map<std::pair<VertexId, VertexId>, std::size_t> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[{edges[i].tail, edges[i].head}] = i;
  auto edge_id = [&](const VertexId& a, const VertexId& b) {
    return a < b ? index.at({a, b}) : index.at({b, a});
  };
  std::vector<std::size_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  for (const VertexId& v : x.vertices()) {
    std::vector<VertexId> ns = x.neighbors(v);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      for (std::size_t j = i + 1; j < ns.size(); ++j) {
        // Common neighbors w != v complete a square v,u1,w,u2; opposite
        // edges are Θ-related.
        for (const VertexId& w : x.neighbors(ns[i])) {
          if (w == v) continue;
          if (x.distance(w, ns[j]) == 1) {
            unite(edge_id(v, ns[i]), edge_id(ns[j], w));
            unite(edge_id(v, ns[j]), edge_id(ns[i], w));
          }
        }
      }
    }
  }

  std::map<std::size_t, std::vector<OrientedEdge>> classes;
  for (std::size_t i = 0; i < edges.size(); ++i) classes[find(i)].push_back(edges[i]);
  std::vector<std::vector<OrientedEdge>> out;
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Suites

std::vector<std::string> fuzz_suite_names() {
  return {"helly", "prop1", "theorem_a", "theta_oracle", "distance_count"};
}

namespace {

struct SuiteStats {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  json failures = json::array();
};

void record(SuiteStats& stats, std::size_t case_index, std::uint64_t seed, const std::string& detail) {
  stats.fail += 1;
  stats.failures.push_back(json{{"case", case_index}, {"seed", seed}, {"detail", detail}});
}

// All pairwise-crossing families of size 1..d admit a common cube.
void suite_helly(const CubeComplex& x, SuiteStats& stats, std::size_t ci, std::uint64_t seed) {
  std::vector<Hyperplane> hs = all_hyperplanes(x);
  const int d = x.dimension();
  std::vector<std::vector<bool>> cross(hs.size(), std::vector<bool>(hs.size(), false));
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      cross[i][j] = cross[j][i] = crosses(x, hs[i], hs[j]);
    }
  }
  std::vector<std::vector<std::size_t>> cliques;
  for (std::size_t i = 0; i < hs.size(); ++i) cliques.push_back({i});
  std::size_t checked = 0;
  while (!cliques.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& clique : cliques) {
      std::vector<Hyperplane> family;
      for (std::size_t i : clique) family.push_back(hs[i]);
      ++checked;
      try {
        Cube cube = helly_common_cube(x, family);
        std::vector<Hyperplane> duals = dual_hyperplanes(x, cube);
        for (const Hyperplane& f : family) {
          if (!std::binary_search(duals.begin(), duals.end(), f)) {
            record(stats, ci, seed, "helly cube misses a family member");
            return;
          }
        }
      } catch (const Error& e) {
        record(stats, ci, seed, std::string("helly failed: ") + e.what());
        return;
      }
      if (static_cast<int>(clique.size()) >= d) continue;
      for (std::size_t j = clique.back() + 1; j < hs.size(); ++j) {
        bool all = true;
        for (std::size_t i : clique) {
          if (!cross[i][j]) {
            all = false;
            break;
          }
        }
        if (all) {
          auto bigger = clique;
          bigger.push_back(j);
          next.push_back(std::move(bigger));
        }
      }
    }
    cliques = std::move(next);
  }
  (void)checked;
  stats.pass += 1;
}

// Sampled duplicate-free S at or above threshold always yield a triple
// verified pairwise non-crossing by the brute-force oracle.
void suite_prop1(const CubeComplex& x, SuiteStats& stats, std::size_t ci, std::uint64_t seed) {
  std::vector<Hyperplane> hs = all_hyperplanes(x);
  const int d = x.dimension();
  const std::int64_t thr = disjoint_triple_threshold(d);
  if (static_cast<std::int64_t>(hs.size()) < thr) {
    stats.skipped += 1;
    return;
  }
  Rng rng(seed ^ 0x9e3779b9ull);
  for (int run = 0; run < 21; ++run) {
    std::vector<Hyperplane> s;
    if (run == 0) {
      s = hs;
    } else {
      std::vector<std::size_t> idx(hs.size());
      std::iota(idx.begin(), idx.end(), 0);
      for (std::size_t i = idx.size(); i-- > 1;) {
        std::swap(idx[i], idx[rng.below(i + 1)]);
      }
      const std::size_t size =
          static_cast<std::size_t>(thr) + rng.below(hs.size() - static_cast<std::size_t>(thr) + 1);
      for (std::size_t i = 0; i < size; ++i) s.push_back(hs[idx[i]]);
    }
    std::optional<DisjointTriple> triple;
    try {
      triple = find_disjoint_triple(x, s);
    } catch (const Error& e) {
      record(stats, ci, seed, std::string("prop1 raised: ") + e.what());
      return;
    }
    if (!triple) {
      record(stats, ci, seed, "prop1 returned NotFound at/above threshold");
      return;
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (brute_force_crosses(x, triple->hyperplanes[i], triple->hyperplanes[j])) {
          record(stats, ci, seed, "prop1 triple crosses per the brute-force oracle");
          return;
        }
      }
    }
  }
  stats.pass += 1;
}

void suite_theorem_a(const CubeComplex& x, const FuzzCase& fc, SuiteStats& stats, std::size_t ci,
                     std::uint64_t seed) {
  GroupAction action = parse_action(fc.action_doc, x);
  ResolutionOutcome outcome = fixed_point_or_witness(x, action);
  const auto* fp = std::get_if<FixedPoint>(&outcome);
  if (!fp) {
    record(stats, ci, seed, "finite case did not resolve to a fixed point");
    return;
  }
  for (const auto& gen : action.generators()) {
    if (!(map_cube(gen.aut, fp->cube) == fp->cube)) {
      record(stats, ci, seed, "generator " + gen.name + " moves the fixed cube");
      return;
    }
  }
  // Certificate mutual exclusion on sampled words; on a finite complex
  // the hyperbolic search must stay empty.
  Rng rng(seed ^ 0x51ed2701ull);
  ClassifyBudget generous;
  generous.radius = 128;
  for (int w = 0; w < 5 && !action.generators().empty(); ++w) {
    Word word;
    const std::size_t len = 1 + rng.below(3);
    for (std::size_t i = 0; i < len; ++i) {
      word.push_back(action.generators()[rng.below(action.generators().size())].name);
    }
    auto [hyp, ell] = classify_both(x, evaluate(action, word), action.base(), generous);
    if (hyp && ell) {
      record(stats, ci, seed, "both certificate kinds for one word (mutual exclusion broken)");
      return;
    }
    if (hyp) {
      record(stats, ci, seed, "hyperbolic certificate on a finite complex");
      return;
    }
  }
  stats.pass += 1;
}

void suite_theta_oracle(const CubeComplex& x, SuiteStats& stats, std::size_t ci,
                        std::uint64_t seed) {
  if (x.vertex_count() > 40) {
    stats.skipped += 1;
    return;
  }
  std::vector<std::vector<OrientedEdge>> classes = square_closure_theta_classes(x);
  std::map<std::pair<VertexId, VertexId>, std::size_t> class_of;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const OrientedEdge& e : classes[c]) class_of[{e.tail, e.head}] = c;
  }
  std::vector<OrientedEdge> edges = x.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i; j < edges.size(); ++j) {
      bool lib = theta_related(x, edges[i], edges[j]);
      bool oracle = class_of.at({edges[i].tail, edges[i].head}) ==
                    class_of.at({edges[j].tail, edges[j].head});
      if (lib != oracle) {
        record(stats, ci, seed, "theta_related disagrees with the square-closure oracle");
        return;
      }
    }
  }
  stats.pass += 1;
}

void suite_distance_count(const CubeComplex& x, SuiteStats& stats, std::size_t ci,
                          std::uint64_t seed) {
  if (x.vertex_count() > 40) {
    stats.skipped += 1;
    return;
  }
  std::vector<Hyperplane> hs = all_hyperplanes(x);
  const auto& verts = x.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      std::int64_t d = x.distance(verts[i], verts[j]);
      std::vector<Hyperplane> between = hyperplanes_between(x, verts[i], verts[j]);
      if (static_cast<std::int64_t>(between.size()) != d) {
        record(stats, ci, seed, "|hyperplanes_between| differs from the distance");
        return;
      }
      std::int64_t separating = 0;
      for (const Hyperplane& h : hs) {
        if (side(x, h, verts[i]) != side(x, h, verts[j])) ++separating;
      }
      if (separating != d) {
        record(stats, ci, seed, "separating wall count differs from the distance");
        return;
      }
    }
  }
  stats.pass += 1;
}

}  // namespace

json run_fuzz(std::size_t n_cases, std::uint64_t seed0, const std::vector<std::string>& suites) {
  if (n_cases < 1) throw Error(Errc::InvalidArguments, "need at least one case");
  if (suites.empty()) throw Error(Errc::InvalidArguments, "no suites selected");
  const std::vector<std::string> known = fuzz_suite_names();
  for (const std::string& s : suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw Error(Errc::InvalidArguments, "unknown suite '" + s + "'");
    }
  }
  const bool needs_action =
      std::find(suites.begin(), suites.end(), "theorem_a") != suites.end();

  std::map<std::string, SuiteStats> stats;
  for (const std::string& s : suites) stats[s];

  constexpr Family kFamilies[] = {Family::Tree, Family::Staircase, Family::Product};
  for (std::size_t ci = 0; ci < n_cases; ++ci) {
    const std::uint64_t seed = seed0 + ci;
    FuzzCase fc = make_fuzz_case(seed, kFamilies[ci % 3], needs_action);
    CubeComplex x = parse_complex(fc.complex_doc);
    for (const std::string& s : suites) {
      try {
        if (s == "helly") {
          suite_helly(x, stats[s], ci, seed);
        } else if (s == "prop1") {
          suite_prop1(x, stats[s], ci, seed);
        } else if (s == "theorem_a") {
          suite_theorem_a(x, fc, stats[s], ci, seed);
        } else if (s == "theta_oracle") {
          suite_theta_oracle(x, stats[s], ci, seed);
        } else if (s == "distance_count") {
          suite_distance_count(x, stats[s], ci, seed);
        }
      } catch (const Error& e) {
        record(stats[s], ci, seed, std::string("unexpected error: ") + e.what());
      }
    }
  }

  json jsuites = json::object();
  bool any_fail = false;
  for (const auto& [name, st] : stats) {
    jsuites[name] = json{{"pass", st.pass},
                         {"fail", st.fail},
                         {"skipped", st.skipped},
                         {"failures", st.failures}};
    if (st.fail > 0) any_fail = true;
  }
  return json{{"cases", n_cases}, {"seed", seed0}, {"ok", !any_fail}, {"suites", std::move(jsuites)}};
}

}  // namespace ccx
