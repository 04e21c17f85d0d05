#pragma once

#include <string>
#include <vector>

#include "ccx/vertex.hpp"

namespace ccx {

/// An induced hypercube subgraph, the combinatorial witness for fixed
/// points: a simplicial action fixes a point iff it stabilizes a cube
/// setwise, and the cube's barycenter names that point.
class Cube {
 public:
  Cube() = default;
  /// `vertices` need not be sorted; they are canonicalized here.
  Cube(std::vector<VertexId> vertices, int dimension);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  int dimension() const { return dim_; }
  bool contains(const VertexId& v) const;

  /// Barycenter label, e.g. "b(0)|(1)" for the edge between 0 and 1.
  std::string label() const;

  friend auto operator<=>(const Cube& a, const Cube& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.vertices_ <=> b.vertices_;
  }
  friend bool operator==(const Cube& a, const Cube& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  std::vector<VertexId> vertices_;  // sorted canonically
  int dim_ = 0;
};

}  // namespace ccx
