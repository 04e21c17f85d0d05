#include "ccx/hyperplane.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ccx {

namespace {

void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

void check_edge(const CubeComplex& x, const OrientedEdge& e) {
  require(x.contains(e.tail) && x.contains(e.head) && x.distance(e.tail, e.head) == 1,
          Errc::InvalidArguments, "not an edge of the complex");
}

// Orientation-matched Θ test: e = (a,b), f = (c,d).
bool theta_match(const CubeComplex& x, const OrientedEdge& e, const OrientedEdge& f) {
  std::int64_t dac = x.distance(e.tail, f.tail);
  std::int64_t dbd = x.distance(e.head, f.head);
  if (dac != dbd) return false;
  std::int64_t dad = x.distance(e.tail, f.head);
  std::int64_t dbc = x.distance(e.head, f.tail);
  return dad == dbc && dad == dac + 1;
}

// The coordinate in which the endpoints of a lattice edge differ.
int lattice_axis(const OrientedEdge& e) {
  for (std::size_t i = 0; i < e.tail.arity(); ++i) {
    if (e.tail.coords()[i] != e.head.coords()[i]) return static_cast<int>(i);
  }
  throw Error(Errc::InternalError, "degenerate lattice edge");
}

// Which factor of a product an edge moves in: 0 = left, 1 = right.
int product_factor(const CubeComplex& x, const OrientedEdge& e) {
  std::size_t left_arity = x.factor(0).arity();
  for (std::size_t i = 0; i < left_arity; ++i) {
    if (e.tail.coords()[i] != e.head.coords()[i]) return 0;
  }
  return 1;
}

VertexId block(const VertexId& v, std::size_t begin, std::size_t end) {
  return VertexId({v.coords().begin() + begin, v.coords().begin() + end});
}

VertexId join(const VertexId& a, const VertexId& b) {
  std::vector<std::int64_t> c = a.coords();
  c.insert(c.end(), b.coords().begin(), b.coords().end());
  return VertexId(std::move(c));
}

// Project a product hyperplane onto its factor; reps embed the factor
// rep alongside the other factor's base vertex, so the block is already
// canonical in the factor.
Hyperplane project_to_factor(const CubeComplex& x, const Hyperplane& h, int f) {
  std::size_t la = x.factor(0).arity();
  std::size_t begin = f == 0 ? 0 : la;
  std::size_t end = f == 0 ? la : la + x.factor(1).arity();
  return Hyperplane(
      OrientedEdge(block(h.representative().tail, begin, end),
                   block(h.representative().head, begin, end)));
}

}  // namespace

bool theta_related(const CubeComplex& x, const OrientedEdge& e, const OrientedEdge& f) {
  check_edge(x, e);
  check_edge(x, f);
  return theta_match(x, e, f) || theta_match(x, e, f.reversed());
}

Hyperplane hyperplane_of(const CubeComplex& x, const OrientedEdge& e) {
  check_edge(x, e);
  switch (x.kind()) {
    case CubeComplex::Kind::Lattice: {
      int axis = lattice_axis(e);
      std::int64_t wall = std::min(e.tail.coords()[axis], e.head.coords()[axis]);
      std::vector<std::int64_t> t(x.arity(), 0), h(x.arity(), 0);
      t[axis] = wall;
      h[axis] = wall + 1;
      return Hyperplane(OrientedEdge(VertexId(std::move(t)), VertexId(std::move(h))));
    }
    case CubeComplex::Kind::Product: {
      int f = product_factor(x, e);
      const CubeComplex& fx = x.factor(f);
      std::size_t la = x.factor(0).arity();
      std::size_t begin = f == 0 ? 0 : la;
      std::size_t end = f == 0 ? la : la + x.factor(1).arity();
      Hyperplane inner = hyperplane_of(fx, OrientedEdge(block(e.tail, begin, end),
                                                        block(e.head, begin, end)));
      const CubeComplex& other = x.factor(1 - f);
      VertexId ob = other.base_vertex();
      if (f == 0) {
        return Hyperplane(OrientedEdge(join(inner.representative().tail, ob),
                                       join(inner.representative().head, ob)));
      }
      return Hyperplane(OrientedEdge(join(ob, inner.representative().tail),
                                     join(ob, inner.representative().head)));
    }
    case CubeComplex::Kind::Finite: {
      // The class minimum over all member edges, oriented (min, max).
      std::optional<OrientedEdge> best;
      for (const OrientedEdge& f : x.edges()) {
        if (!(theta_match(x, e, f) || theta_match(x, e, f.reversed()))) continue;
        if (!best || f < *best) best = f;  // edges() yields tail < head
      }
      if (!best) throw Error(Errc::InternalError, "edge not found in its own Θ-class");
      return Hyperplane(*best);
    }
  }
  throw Error(Errc::InternalError, "unknown backend");
}

std::vector<Hyperplane> hyperplanes_between(const CubeComplex& x, const VertexId& a,
                                            const VertexId& b) {
  std::vector<VertexId> path = x.geodesic(a, b);
  std::vector<Hyperplane> out;
  std::set<Hyperplane> seen;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Hyperplane h = hyperplane_of(x, OrientedEdge(path[i], path[i + 1]));
    if (!seen.insert(h).second) {
      throw Error(Errc::InternalError, "geodesic crosses a hyperplane twice (non-median input?)");
    }
    out.push_back(std::move(h));
  }
  return out;
}

Side side(const CubeComplex& x, const Hyperplane& h, const VertexId& w) {
  std::int64_t dt = x.distance(w, h.representative().tail);
  std::int64_t dh = x.distance(w, h.representative().head);
  if (dt == dh) {
    throw Error(Errc::InternalError, "vertex equidistant from a wall (non-median input?)");
  }
  return dh < dt ? Side::Plus : Side::Minus;
}

bool crosses(const CubeComplex& x, const Hyperplane& h1, const Hyperplane& h2) {
  require(!(h1 == h2), Errc::InvalidArguments, "crosses() needs two distinct hyperplanes");
  switch (x.kind()) {
    case CubeComplex::Kind::Lattice:
      return lattice_axis(h1.representative()) != lattice_axis(h2.representative());
    case CubeComplex::Kind::Product: {
      int f1 = product_factor(x, h1.representative());
      int f2 = product_factor(x, h2.representative());
      if (f1 != f2) return true;
      return crosses(x.factor(f1), project_to_factor(x, h1, f1), project_to_factor(x, h2, f2));
    }
    case CubeComplex::Kind::Finite:
      break;
  }

  const OrientedEdge& e1 = h1.representative();
  const OrientedEdge& e2 = h2.representative();
  // Both endpoints of e1 lie on one side of h2 and vice versa; three of
  // the four quadrants are therefore inhabited by rep endpoints and only
  // the opposite corner needs a witness.
  Side s2 = side(x, h2, e1.tail);
  Side s1 = side(x, h1, e2.tail);
  VertexId p = s1 == Side::Plus ? e1.tail : e1.head;  // h1-side = opposite(s1)
  VertexId q = s2 == Side::Plus ? e2.tail : e2.head;  // h2-side = opposite(s2)
  auto in_missing_quadrant = [&](const VertexId& w) {
    return side(x, h1, w) == opposite(s1) && side(x, h2, w) == opposite(s2);
  };
  // Median probes over the rep endpoints, then the interval hull scan.
  for (const VertexId& r : {e1.tail, e1.head, e2.tail, e2.head}) {
    if (in_missing_quadrant(x.median(p, q, r))) return true;
  }
  for (const VertexId& w : x.interval(p, q)) {
    if (in_missing_quadrant(w)) return true;
  }
  return false;
}

bool separates(const CubeComplex& x, const Hyperplane& h, const Hyperplane& h1,
               const Hyperplane& h2) {
  require(!(h == h1) && !(h == h2) && !(h1 == h2), Errc::PreconditionViolated,
          "separates() needs three distinct hyperplanes");
  require(!crosses(x, h, h1) && !crosses(x, h, h2) && !crosses(x, h1, h2),
          Errc::PreconditionViolated, "separates() needs pairwise non-crossing hyperplanes");
  Side s1 = side(x, h, h1.representative().tail);
  Side s2 = side(x, h, h2.representative().tail);
  return s1 != s2;
}

std::vector<Hyperplane> max_pairwise_intersecting(const CubeComplex& x,
                                                  std::span<const Hyperplane> S) {
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      require(!(S[i] == S[j]), Errc::InvalidArguments, "hyperplane list has duplicates");
    }
  }
  const int d = x.dimension();
  std::vector<Hyperplane> T;
  for (const Hyperplane& h : S) {
    bool all = true;
    for (const Hyperplane& t : T) {
      if (!crosses(x, h, t)) {
        all = false;
        break;
      }
    }
    if (all) {
      T.push_back(h);
      if (static_cast<int>(T.size()) > d) {
        throw Error(Errc::DimensionViolation,
                    "pairwise-intersecting family larger than the dimension bound " +
                        std::to_string(d));
      }
    }
  }
  return T;
}

std::vector<std::pair<Hyperplane, int>> bucket_map_q(const CubeComplex& x,
                                                     std::span<const Hyperplane> S,
                                                     std::span<const Hyperplane> T) {
  std::vector<std::pair<Hyperplane, int>> out;
  for (const Hyperplane& j : S) {
    if (std::find(T.begin(), T.end(), j) != T.end()) continue;
    int q = 0;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (!crosses(x, j, T[i])) {
        q = static_cast<int>(i) + 1;
        break;
      }
    }
    if (q == 0) {
      throw Error(Errc::InternalError, "hyperplane crosses the whole maximal set (q undefined)");
    }
    out.emplace_back(j, q);
  }
  return out;
}

std::int64_t disjoint_triple_threshold(int d) {
  return static_cast<std::int64_t>(d) + static_cast<std::int64_t>(d) * (d + 1);
}

std::optional<DisjointTriple> find_disjoint_triple(const CubeComplex& x,
                                                   std::span<const Hyperplane> S) {
  const int d = x.dimension();
  const bool guaranteed = static_cast<std::int64_t>(S.size()) >= disjoint_triple_threshold(d);

  // Crossing results are memoized for the run; the pipeline re-tests
  // many pairs.
  std::map<std::pair<Hyperplane, Hyperplane>, bool> memo;
  auto crossed = [&](const Hyperplane& a, const Hyperplane& b) {
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool r = crosses(x, a, b);
    memo.emplace(key, r);
    return r;
  };

  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      require(!(S[i] == S[j]), Errc::InvalidArguments, "hyperplane list has duplicates");
    }
  }

  std::vector<Hyperplane> T;
  for (const Hyperplane& h : S) {
    bool all = true;
    for (const Hyperplane& t : T) {
      if (!crossed(h, t)) {
        all = false;
        break;
      }
    }
    if (all) {
      T.push_back(h);
      if (static_cast<int>(T.size()) > d) {
        throw Error(Errc::DimensionViolation,
                    "pairwise-intersecting family larger than the dimension bound " +
                        std::to_string(d));
      }
    }
  }

  // Buckets B_i = q^{-1}(i), members kept in S order.
  std::vector<std::vector<Hyperplane>> buckets(T.size());
  for (const Hyperplane& j : S) {
    if (std::find(T.begin(), T.end(), j) != T.end()) continue;
    int q = 0;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (!crossed(j, T[i])) {
        q = static_cast<int>(i) + 1;
        break;
      }
    }
    if (q == 0) {
      throw Error(Errc::InternalError, "hyperplane crosses the whole maximal set (q undefined)");
    }
    buckets[q - 1].push_back(j);
  }

  auto fail = [&]() -> std::optional<DisjointTriple> {
    if (guaranteed) {
      throw Error(Errc::InternalError,
                  "disjoint triple guaranteed at or above threshold but the pipeline failed "
                  "(non-median input?)");
    }
    return std::nullopt;
  };

  std::size_t bucket_index = buckets.size();
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    if (static_cast<int>(buckets[i].size()) >= d + 1) {
      bucket_index = i;
      break;
    }
  }
  if (bucket_index == buckets.size()) return fail();

  const std::vector<Hyperplane>& B = buckets[bucket_index];
  for (std::size_t s = 0; s < B.size(); ++s) {
    for (std::size_t t = s + 1; t < B.size(); ++t) {
      if (!crossed(B[s], B[t])) {
        DisjointTriple triple;
        triple.hyperplanes = {T[bucket_index], B[s], B[t]};
        for (int i = 0; i < 3; ++i) {
          const Hyperplane& mid = triple.hyperplanes[i];
          const Hyperplane& a = triple.hyperplanes[(i + 1) % 3];
          const Hyperplane& b = triple.hyperplanes[(i + 2) % 3];
          if (side(x, mid, a.representative().tail) != side(x, mid, b.representative().tail)) {
            triple.separator = i;
            break;
          }
        }
        return triple;
      }
    }
  }
  return fail();
}

Cube helly_common_cube(const CubeComplex& x, std::span<const Hyperplane> F) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      require(!(F[i] == F[j]), Errc::InvalidArguments, "hyperplane family has duplicates");
      require(crosses(x, F[i], F[j]), Errc::PreconditionViolated,
              "helly_common_cube needs a pairwise-crossing family");
    }
  }
  require(static_cast<int>(F.size()) <= x.dimension(), Errc::PreconditionViolated,
          "family larger than the complex dimension");
  const int k = static_cast<int>(F.size());
  for (const Cube& c : x.cubes()) {
    if (c.dimension() != k) continue;
    std::vector<Hyperplane> duals = dual_hyperplanes(x, c);
    bool all = true;
    for (const Hyperplane& f : F) {
      if (!std::binary_search(duals.begin(), duals.end(), f)) {
        all = false;
        break;
      }
    }
    if (all) return c;
  }
  throw Error(Errc::HellyViolation, "no common cube for a pairwise-crossing family");
}

std::vector<Hyperplane> all_hyperplanes(const CubeComplex& x) {
  std::vector<OrientedEdge> es = x.edges();
  std::vector<bool> assigned(es.size(), false);
  std::vector<Hyperplane> out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (assigned[i]) continue;
    // First unassigned edge in canonical order is the class minimum.
    out.emplace_back(es[i]);
    for (std::size_t j = i; j < es.size(); ++j) {
      if (!assigned[j] && (theta_match(x, es[i], es[j]) || theta_match(x, es[i], es[j].reversed()))) {
        assigned[j] = true;
      }
    }
  }
  return out;
}

std::vector<OrientedEdge> member_edges(const CubeComplex& x, const Hyperplane& h) {
  const OrientedEdge& rep = h.representative();
  std::vector<OrientedEdge> out;
  for (const OrientedEdge& f : x.edges()) {
    if (theta_match(x, rep, f)) {
      out.push_back(f);
    } else if (theta_match(x, rep, f.reversed())) {
      out.push_back(f.reversed());
    }
  }
  return out;
}

std::vector<Hyperplane> dual_hyperplanes(const CubeComplex& x, const Cube& c) {
  std::set<Hyperplane> duals;
  const auto& vs = c.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (x.distance(vs[i], vs[j]) == 1) duals.insert(hyperplane_of(x, OrientedEdge(vs[i], vs[j])));
    }
  }
  return {duals.begin(), duals.end()};
}

}  // namespace ccx
