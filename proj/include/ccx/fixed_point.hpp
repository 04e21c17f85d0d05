#pragma once

#include <array>
#include <optional>
#include <variant>

#include "ccx/action.hpp"

namespace ccx {

/// Per-generator wall sets S_i = hyperplanes crossed by the chosen
/// geodesic from the base vertex to its image, plus their deduplicated
/// union in canonical order.
struct BaseHyperplanes {
  std::vector<std::vector<Hyperplane>> per_generator;  // aligned with action generators
  std::vector<Hyperplane> all;
};
BaseHyperplanes base_hyperplane_set(const CubeComplex& x, const GroupAction& a);

/// |S| * (d + d(d+1)): an orbit point this far away forces enough wall
/// translates for the disjoint-triple argument.
std::int64_t far_distance_threshold(std::size_t size_s, int d);

/// Word-tree BFS (deduplicated by image vertex) until some word moves
/// the base vertex at least N away, or the orbit closes finitely.
/// Shortest-then-lexicographic word wins. BudgetExceeded if the cap is
/// hit first.
struct FarElement {
  Word word;
  std::int64_t distance = 0;
};
struct AllBounded {
  std::vector<VertexId> orbit;  // canonical order
};
using FarSearch = std::variant<FarElement, AllBounded>;
FarSearch find_far_element(const CubeComplex& x, const GroupAction& a, std::int64_t n,
                           std::size_t cap);

/// An edge-wall of the translated path together with how it arose:
/// hyperplane = evaluate(prefix) applied to base.
struct ProvenancedHyperplane {
  Hyperplane hyperplane;
  Hyperplane base;
  Word prefix;
};

/// The concatenation of translated generator geodesics connecting v to
/// g(v), with per-edge provenance. Zero-length segments contribute no
/// edges.
struct TranslatedPath {
  std::vector<VertexId> vertices;
  std::vector<ProvenancedHyperplane> edges;  // one per consecutive vertex pair
};
TranslatedPath build_translated_path(const CubeComplex& x, const GroupAction& a, const Word& g);

struct FixedPoint {
  Cube cube;
};
struct HyperbolicWitness {
  Word word;
  HyperbolicCert certificate;
  std::vector<Word> candidates_tried;
};
struct UndecidedReport {
  std::string reason;
  std::optional<Word> far_word;
  std::vector<std::pair<Hyperplane, std::size_t>> bucket_sizes;
  std::optional<std::array<Hyperplane, 3>> triple;
  std::vector<Word> failed_candidates;
};
using ResolutionOutcome = std::variant<FixedPoint, HyperbolicWitness, UndecidedReport>;

/// Full pipeline: bounded orbit -> invariant cube; otherwise extract a
/// far word, bucket the separating walls of its translated path by base
/// hyperplane, pull a pairwise-disjoint wall triple out of a pigeonhole
/// bucket and certify one of the three induced candidate words
/// hyperbolic. Undecided only on budget exhaustion, never refutation.
ResolutionOutcome fixed_point_or_witness(const CubeComplex& x, const GroupAction& a,
                                      const ClassifyBudget& budget = {});

}  // namespace ccx
