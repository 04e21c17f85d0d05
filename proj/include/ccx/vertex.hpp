#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ccx {

/// A vertex of a cube complex 1-skeleton.
///
/// Every backend encodes its vertices as a fixed-arity integer tuple:
/// finite = [input index], lattice rank n = the n coordinates, product =
/// concatenation of the factor tuples. Lexicographic comparison of the
/// tuple is the canonical order used for every deterministic tie-break.
class VertexId {
 public:
  VertexId() = default;
  explicit VertexId(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  static VertexId scalar(std::int64_t v) { return VertexId({v}); }

  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::size_t arity() const { return coords_.size(); }

  friend auto operator<=>(const VertexId&, const VertexId&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<std::int64_t> coords_;
};

/// An edge with a chosen direction; tail and head are adjacent vertices.
struct OrientedEdge {
  VertexId tail;
  VertexId head;

  OrientedEdge() = default;
  OrientedEdge(VertexId t, VertexId h) : tail(std::move(t)), head(std::move(h)) {}

  OrientedEdge reversed() const { return {head, tail}; }
  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

struct VertexIdHash {
  std::size_t operator()(const VertexId& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int64_t c : v.coords()) {
      h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace ccx
