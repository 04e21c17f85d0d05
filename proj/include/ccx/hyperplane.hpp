#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "ccx/complex.hpp"

namespace ccx {

/// A hyperplane is a Θ-class of edges, named by its canonical
/// representative. The representative's orientation fixes the positive
/// halfspace (the head side). Equality and the canonical order compare
/// representatives.
class Hyperplane {
 public:
  Hyperplane() = default;
  explicit Hyperplane(OrientedEdge rep) : rep_(std::move(rep)) {}

  const OrientedEdge& representative() const { return rep_; }

  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;

 private:
  OrientedEdge rep_;
};

enum class Side { Minus, Plus };

inline Side opposite(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }

/// One halfspace of a hyperplane.
struct Halfspace {
  Hyperplane hyperplane;
  Side sign = Side::Plus;
  Halfspace complement() const { return {hyperplane, opposite(sign)}; }
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Θ (Djoković–Winkler) relation via the distance criterion: for some
/// matching orientation, d(a,c) = d(b,d) and d(a,d) = d(b,c) = d(a,c)+1.
bool theta_related(const CubeComplex& x, const OrientedEdge& e, const OrientedEdge& f);

/// Canonical hyperplane dual to an edge. Idempotent on representatives.
Hyperplane hyperplane_of(const CubeComplex& x, const OrientedEdge& e);

/// Hyperplanes dual to the edges of the deterministic geodesic from `a`
/// to `b`, in traversal order. Length = distance, no duplicates.
std::vector<Hyperplane> hyperplanes_between(const CubeComplex& x, const VertexId& a,
                                            const VertexId& b);

/// Which halfspace of `h` contains `w`: Plus iff w is closer to the
/// representative's head than to its tail.
Side side(const CubeComplex& x, const Hyperplane& h, const VertexId& w);

/// True iff all four (sign, sign) quadrants of the two hyperplanes are
/// inhabited. Requires h1 != h2.
bool crosses(const CubeComplex& x, const Hyperplane& h1, const Hyperplane& h2);

/// True iff h separates h1 from h2. Preconditions: the three hyperplanes
/// are pairwise distinct and pairwise non-crossing (PreconditionViolated).
bool separates(const CubeComplex& x, const Hyperplane& h, const Hyperplane& h1,
               const Hyperplane& h2);

/// Greedy scan of S in the given order admitting a hyperplane iff it
/// crosses every member admitted so far; the result is maximal in S.
/// DimensionViolation if the result exceeds the complex dimension.
std::vector<Hyperplane> max_pairwise_intersecting(const CubeComplex& x,
                                                  std::span<const Hyperplane> S);

/// Provenance map q: for J in S−T, the least 1-based index i with J not
/// crossing T[i-1]. Total whenever T is maximal; InternalError if some J
/// crosses all of T.
std::vector<std::pair<Hyperplane, int>> bucket_map_q(const CubeComplex& x,
                                                     std::span<const Hyperplane> S,
                                                     std::span<const Hyperplane> T);

/// Three pairwise non-crossing hyperplanes of S found by the
/// maximal-set / bucket / pigeonhole pipeline. `separator` is the index
/// (0..2) of the member separating the other two, when one does.
struct DisjointTriple {
  std::array<Hyperplane, 3> hyperplanes;
  std::optional<int> separator;
};

/// Threshold d + d(d+1) above which a disjoint triple must exist.
std::int64_t disjoint_triple_threshold(int d);

/// Runs the pipeline on duplicate-free S. At or above the threshold the
/// result is guaranteed (InternalError otherwise — non-median input);
/// below it the pipeline is best-effort and may return nullopt.
std::optional<DisjointTriple> find_disjoint_triple(const CubeComplex& x,
                                                   std::span<const Hyperplane> S);

/// A |F|-cube all of whose dual hyperplanes include F (pairwise-crossing
/// F, |F| <= d, finite backend). HellyViolation if none exists.
Cube helly_common_cube(const CubeComplex& x, std::span<const Hyperplane> F);

/// Every Θ-class of a finite complex, canonical order.
std::vector<Hyperplane> all_hyperplanes(const CubeComplex& x);

/// Member edges of a hyperplane on a finite backend, co-oriented with
/// the representative, canonical order. Recomputed per call.
std::vector<OrientedEdge> member_edges(const CubeComplex& x, const Hyperplane& h);

/// The hyperplanes dual to the edges of a cube (each Θ-class once).
std::vector<Hyperplane> dual_hyperplanes(const CubeComplex& x, const Cube& c);

}  // namespace ccx
