#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccx/io.hpp"

namespace ccx {

/// Deterministic splitmix64 stream; identical across platforms, unlike
/// the standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

enum class Family { Tree, Staircase, Product };
const char* family_name(Family f);

/// A seed-reproducible finite median complex document: uniform random
/// trees (Prüfer decode), monotone staircase ideals in a Z^2 window, or
/// explicit products of two smaller cases. Every output passes
/// verify_median_graph; GenerationFailed after bounded retries.
json generate_complex(std::uint64_t seed, Family family);

/// Generators of the full automorphism group of a finite complex
/// (<= 60 vertices, SizeExceeded otherwise): one backtracking search per
/// stabilizer-chain level with orbit pruning.
std::vector<Automorphism> automorphism_search(const CubeComplex& x);

struct FuzzCase {
  std::uint64_t seed = 0;
  json complex_doc;
  json action_doc;
  std::string expectation;  // FixedPointExpected | WitnessExpected | Unknown
};
FuzzCase make_fuzz_case(std::uint64_t seed, Family family, bool with_action);

/// Known suite names: helly, prop1, theorem_a, theta_oracle,
/// distance_count.
std::vector<std::string> fuzz_suite_names();

/// Runs the selected invariant suites over n generated cases; the report
/// is deterministic for a fixed (n_cases, seed0, suites) triple and
/// carries reproducer seeds for every failure.
json run_fuzz(std::size_t n_cases, std::uint64_t seed0, const std::vector<std::string>& suites);

// Test oracles, deliberately independent of the operations they check
// (distance/adjacency only).
bool brute_force_crosses(const CubeComplex& x, const Hyperplane& h1, const Hyperplane& h2);
std::vector<std::vector<OrientedEdge>> square_closure_theta_classes(const CubeComplex& x);

}  // namespace ccx
