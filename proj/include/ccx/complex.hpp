#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccx/cube.hpp"
#include "ccx/error.hpp"
#include "ccx/vertex.hpp"

namespace ccx {

namespace detail {
class Backend;
}

/// Result of the median-graph check on a finite complex. `violation`
/// holds the first vertex triple (canonical order) whose median count
/// differs from one, together with that count.
struct MedianCheck {
  std::optional<std::array<VertexId, 3>> violation;
  std::size_t median_count = 1;
  bool ok() const { return !violation.has_value(); }
};

/// A connected, locally finite median graph presented behind a uniform
/// adjacency oracle. Three backends: explicit finite graphs, integer
/// lattices Z^n, and binary products. Values are immutable after
/// construction and safe to share across threads.
class CubeComplex {
 public:
  enum class Kind { Finite, Lattice, Product };

  static constexpr std::size_t kDefaultBallCap = 100000;

  /// Builds a finite complex from named vertices and unoriented edges.
  /// Rejects disconnected or (unless `check_median` is false) non-median
  /// input with a hard error.
  static CubeComplex finite(std::vector<std::string> names,
                            std::vector<std::pair<std::string, std::string>> edges,
                            bool check_median = true);
  static CubeComplex lattice(int rank);
  static CubeComplex product(CubeComplex left, CubeComplex right);

  Kind kind() const;
  bool is_finite() const { return kind() == Kind::Finite; }
  /// Length of the coordinate tuple encoding a vertex.
  std::size_t arity() const;
  /// Maximal cube dimension: exhaustive for finite, structural otherwise.
  int dimension() const;
  VertexId base_vertex() const;
  bool contains(const VertexId& v) const;
  /// Neighbors in canonical (lexicographic) order.
  std::vector<VertexId> neighbors(const VertexId& v) const;

  std::int64_t distance(const VertexId& x, const VertexId& y) const;
  /// I(x,y) = vertices on some geodesic from x to y, canonical order.
  std::vector<VertexId> interval(const VertexId& x, const VertexId& y) const;
  /// The deterministic geodesic: at each step the canonically smallest
  /// neighbor strictly closer to the target.
  std::vector<VertexId> geodesic(const VertexId& x, const VertexId& y) const;
  /// The unique vertex in I(x,y) ∩ I(y,z) ∩ I(x,z); MedianViolation if
  /// the input graph is not median (reachable only on unchecked input).
  VertexId median(const VertexId& x, const VertexId& y, const VertexId& z) const;

  /// Finite backends only.
  MedianCheck verify_median_graph() const;
  std::size_t vertex_count() const;
  const std::vector<VertexId>& vertices() const;
  /// Unoriented edges as (tail < head), canonical order.
  std::vector<OrientedEdge> edges() const;
  std::string vertex_name(const VertexId& v) const;
  std::optional<VertexId> vertex_by_name(const std::string& name) const;

  /// All induced hypercube subgraphs (0-cubes up), ordered by dimension
  /// then canonical vertex list. WindowRequired on infinite backends.
  const std::vector<Cube>& cubes() const;
  /// Induced cubes whose vertices all lie in `window`; works on any
  /// backend and is how infinite backends expose cube enumeration.
  std::vector<Cube> cubes_in(std::span<const VertexId> window) const;

  /// Vertices within distance `radius` of `center`, canonical order.
  /// BudgetExceeded if more than `cap` vertices are reached.
  std::vector<VertexId> ball_vertices(const VertexId& center, int radius,
                                      std::size_t cap = kDefaultBallCap) const;
  /// Induced subcomplex on ball_vertices, materialized as a finite
  /// complex (names carried over). Not median-verified: balls of median
  /// graphs need not be median.
  CubeComplex ball(const VertexId& center, int radius,
                   std::size_t cap = kDefaultBallCap) const;

  /// Lattice backends: the rank n of Z^n.
  int rank() const;
  /// Product backends: the factor complexes.
  const CubeComplex& factor(int i) const;
  /// Structural equality of backend descriptions (same kind, names,
  /// edges / rank / factors).
  bool same_structure(const CubeComplex& other) const;

  const detail::Backend& backend() const { return *impl_; }

 private:
  explicit CubeComplex(std::shared_ptr<const detail::Backend> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::Backend> impl_;
};

/// Materializes the box [lo, hi]^rank of Z^rank as a finite complex;
/// handy for window-restricted cube and hyperplane queries.
CubeComplex lattice_window(int rank, std::int64_t lo, std::int64_t hi);

}  // namespace ccx
