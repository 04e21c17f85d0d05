#pragma once

// Shared fixtures and independent oracles for the test suites. Oracles
// use only adjacency/distance primitives so they stay independent of
// the operations they check.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ccx/fixed_point.hpp"
#include "ccx/fuzz.hpp"
#include "ccx/io.hpp"

namespace helpers {

using namespace ccx;

inline CubeComplex path3() {
  return CubeComplex::finite({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

inline CubeComplex square() {
  return CubeComplex::finite({"a", "b", "c", "d"},
                             {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

inline CubeComplex cycle(int n, bool check_median) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
  return CubeComplex::finite(names, edges, check_median);
}

inline CubeComplex triangle(bool check_median) {
  return CubeComplex::finite({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, check_median);
}

// Rooted tree: root has `branching` children, every internal vertex has
// branching-1 further children, to the given depth.
inline CubeComplex uniform_tree(int branching, int depth) {
  std::vector<std::string> names{"n0"};
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::size_t> frontier{0};
  std::size_t next = 1;
  for (int d = 0; d < depth; ++d) {
    std::vector<std::size_t> layer;
    for (std::size_t p : frontier) {
      int kids = (d == 0) ? branching : branching - 1;
      for (int k = 0; k < kids; ++k) {
        names.push_back("n" + std::to_string(next));
        edges.emplace_back(names[p], names[next]);
        layer.push_back(next);
        ++next;
      }
    }
    frontier = std::move(layer);
  }
  return CubeComplex::finite(names, edges);
}

inline VertexId lat(std::initializer_list<std::int64_t> coords) {
  return VertexId(std::vector<std::int64_t>(coords));
}

inline Hyperplane lattice_wall(const CubeComplex& x, int axis, std::int64_t wall) {
  std::vector<std::int64_t> t(x.rank(), 0), h(x.rank(), 0);
  t[axis] = wall;
  h[axis] = wall + 1;
  return Hyperplane(OrientedEdge(VertexId(t), VertexId(h)));
}

// Infinite dihedral action on the line: s(x) = -x, t(x) = 2-x, base 0.
inline GroupAction dihedral_action(const CubeComplex& line) {
  Automorphism s = Automorphism::affine({-1}, {0}, {0});
  Automorphism t = Automorphism::affine({-1}, {0}, {2});
  return GroupAction(line, {{"s", s}, {"t", t}}, VertexId::scalar(0));
}

// 90-degree rotation of the single square a->b->c->d->a.
inline GroupAction square_rotation(const CubeComplex& sq) {
  Automorphism rot = Automorphism::permutation({1, 2, 3, 0});
  return GroupAction(sq, {{"r", rot}}, *sq.vertex_by_name("a"));
}

// --- Oracles ---------------------------------------------------------------

// All geodesics from x to y by recursive descent over closer neighbors.
inline std::vector<std::vector<VertexId>> all_geodesics(const CubeComplex& x, const VertexId& from,
                                                        const VertexId& to) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> cur{from};
  std::function<void(const VertexId&)> rec = [&](const VertexId& at) {
    if (at == to) {
      out.push_back(cur);
      return;
    }
    std::int64_t remaining = x.distance(at, to);
    for (const VertexId& n : x.neighbors(at)) {
      if (x.distance(n, to) == remaining - 1) {
        cur.push_back(n);
        rec(n);
        cur.pop_back();
      }
    }
  };
  rec(from);
  return out;
}

// First vertex triple (canonical order) whose median count differs from
// one, scanning interval conditions directly.
inline std::optional<std::array<VertexId, 3>> first_median_violation(const CubeComplex& x) {
  const auto& vs = x.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        std::size_t count = 0;
        std::int64_t dij = x.distance(vs[i], vs[j]);
        std::int64_t djk = x.distance(vs[j], vs[k]);
        std::int64_t dik = x.distance(vs[i], vs[k]);
        for (const VertexId& w : vs) {
          if (x.distance(vs[i], w) + x.distance(w, vs[j]) == dij &&
              x.distance(vs[j], w) + x.distance(w, vs[k]) == djk &&
              x.distance(vs[i], w) + x.distance(w, vs[k]) == dik) {
            ++count;
          }
        }
        if (count != 1) return std::array<VertexId, 3>{vs[i], vs[j], vs[k]};
      }
    }
  }
  return std::nullopt;
}

// Every adjacency-preserving bijection of a small finite complex, by
// filtering all permutations.
inline std::vector<std::vector<std::int64_t>> brute_force_automorphisms(const CubeComplex& x) {
  const std::size_t n = x.vertex_count();
  std::vector<std::int64_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::int64_t>(i);
  std::vector<OrientedEdge> edges = x.edges();
  std::set<std::pair<std::int64_t, std::int64_t>> eset;
  for (const OrientedEdge& e : edges) {
    auto a = e.tail.coords()[0], b = e.head.coords()[0];
    eset.insert(std::minmax(a, b));
  }
  std::vector<std::vector<std::int64_t>> out;
  do {
    bool ok = true;
    for (const OrientedEdge& e : edges) {
      auto a = perm[e.tail.coords()[0]], b = perm[e.head.coords()[0]];
      if (!eset.count(std::minmax(a, b))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Order of the group generated by permutation automorphisms (closure
// under composition).
inline std::size_t group_order(const CubeComplex& x, const std::vector<Automorphism>& gens) {
  std::set<std::vector<std::int64_t>> elements;
  std::vector<std::int64_t> id(x.vertex_count());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::int64_t>(i);
  elements.insert(id);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::int64_t>> snapshot(elements.begin(), elements.end());
    for (const auto& e : snapshot) {
      for (const Automorphism& g : gens) {
        const auto& table = g.perm_table();
        std::vector<std::int64_t> composed(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) composed[i] = table[e[i]];
        if (elements.insert(composed).second) grew = true;
      }
    }
  }
  return elements.size();
}

}  // namespace helpers
