#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ccx/complex.hpp"
#include "ccx/hyperplane.hpp"

namespace ccx {

/// A simplicial symmetry of a complex. Finite complexes use a total
/// vertex permutation, lattices a signed coordinate permutation plus a
/// translation, products a pair of factor automorphisms with an optional
/// factor swap. Immutable; composition and inverse stay in the same
/// representation.
class Automorphism {
 public:
  enum class Kind { Permutation, Affine, Product };

  /// index -> index table; must be a permutation.
  static Automorphism permutation(std::vector<std::int64_t> table);
  /// v'_i = signs[i] * v[perm[i]] + translate[i]; signs in {-1, +1}.
  static Automorphism affine(std::vector<int> signs, std::vector<int> perm,
                             std::vector<std::int64_t> translate);
  /// swapped: (a,b) -> (left(b), right(a)); factors must have equal arity.
  static Automorphism product_pair(Automorphism left, Automorphism right, bool swapped);
  static Automorphism identity(const CubeComplex& x);

  Kind kind() const;
  std::size_t arity() const;

  VertexId operator()(const VertexId& v) const;
  Automorphism inverse() const;
  /// f after g: compose(f, g)(v) = f(g(v)).
  static Automorphism compose(const Automorphism& f, const Automorphism& g);

  bool operator==(const Automorphism& other) const;

  // Representation accessors (io layer).
  const std::vector<std::int64_t>& perm_table() const;
  const std::vector<int>& affine_signs() const;
  const std::vector<int>& affine_perm() const;
  const std::vector<std::int64_t>& affine_translate() const;
  const Automorphism& product_left() const;
  const Automorphism& product_right() const;
  bool product_swapped() const;

 private:
  struct Perm {
    std::vector<std::int64_t> table;
    bool operator==(const Perm&) const = default;
  };
  struct Affine {
    std::vector<int> signs;
    std::vector<int> perm;
    std::vector<std::int64_t> translate;
    bool operator==(const Affine&) const = default;
  };
  struct Prod {
    std::shared_ptr<const Automorphism> left;
    std::shared_ptr<const Automorphism> right;
    bool swapped = false;
  };
  explicit Automorphism(std::variant<Perm, Affine, Prod> data) : data_(std::move(data)) {}
  std::variant<Perm, Affine, Prod> data_;
};

/// Adjacency-preservation check. Finite backends are checked
/// exhaustively; lattice and product backends are checked structurally
/// plus on a sampled ball of radius 3 around the base vertex. Returns
/// the first violating edge (canonical order), or nullopt when the map
/// is a verified automorphism.
std::optional<OrientedEdge> verify_automorphism(const CubeComplex& x, const Automorphism& phi);

Hyperplane map_hyperplane(const CubeComplex& x, const Automorphism& phi, const Hyperplane& h);
Cube map_cube(const Automorphism& phi, const Cube& c);

/// A word over the generator names of an action; evaluates right to
/// left: apply([a,b], v) = a(b(v)).
using Word = std::vector<std::string>;

/// A finitely generated simplicial action: named, verified generators
/// (closed under inverses — missing inverses are derived under the
/// reserved suffix "^-1") and a base vertex.
class GroupAction {
 public:
  struct Generator {
    std::string name;
    Automorphism aut;
    std::size_t inverse;  // index of the inverse generator
  };

  GroupAction(CubeComplex complex, std::vector<std::pair<std::string, Automorphism>> generators,
              VertexId base);

  const CubeComplex& complex() const { return complex_; }
  const VertexId& base() const { return base_; }
  std::span<const Generator> generators() const { return gens_; }
  std::size_t user_generator_count() const { return user_count_; }
  const Generator& generator(const std::string& name) const;  // UnknownGenerator

  Word inverse_word(const Word& w) const;

 private:
  CubeComplex complex_;
  std::vector<Generator> gens_;
  std::size_t user_count_ = 0;
  VertexId base_;
};

VertexId apply_word(const GroupAction& a, const Word& w, const VertexId& v);
Automorphism evaluate(const GroupAction& a, const Word& w);

/// Breadth-first closure of {start} under the generators, words tracked
/// per image vertex (first = shortest-then-lexicographic). `stop` is
/// probed on every discovered node in discovery order; a true result
/// ends the search with hit=true.
struct WordSearch {
  std::vector<std::pair<VertexId, Word>> visited;  // discovery order, includes start
  bool closed = false;                             // full orbit enumerated
  bool hit = false;
  VertexId hit_vertex;
  Word hit_word;
};
WordSearch word_bfs(const GroupAction& a, const VertexId& start, std::size_t cap,
                    const std::function<bool(const VertexId&, const Word&)>& stop);

/// Orbit of v under the action, halting at `cap` vertices. When capped,
/// `farthest` carries the deepest vertex reached and its word.
struct OrbitResult {
  std::vector<VertexId> vertices;  // canonical order
  bool capped = false;
  std::optional<VertexId> farthest;
  Word farthest_word;
};
OrbitResult orbit(const CubeComplex& x, const GroupAction& a, const VertexId& v, std::size_t cap);

struct ClassifyBudget {
  int power = 8;
  int radius = 12;
  std::size_t orbit_cap = 20000;
  std::size_t ball_cap = CubeComplex::kDefaultBallCap;
};

/// Elliptic witness: a setwise-invariant cube.
struct EllipticCert {
  Cube cube;
};

/// Hyperbolic witness: a wall H with (g^-k H, H, g^k H) pairwise
/// disjoint and H separating the outer two (a skewered hyperplane).
struct HyperbolicCert {
  Hyperplane wall;
  std::array<Hyperplane, 3> triple;  // g^-k H, H, g^k H
  int power = 1;
};

struct UndecidedInfo {
  int power_tried = 0;
  int radius_tried = 0;
  std::string note;
};

using Certificate = std::variant<EllipticCert, HyperbolicCert>;
using ClassifyResult = std::variant<EllipticCert, HyperbolicCert, UndecidedInfo>;

ClassifyResult classify(const CubeComplex& x, const Automorphism& g, const VertexId& v,
                        const ClassifyBudget& budget = {});

/// Runs both searches to exhaustion regardless of early success; used to
/// assert the certificates' mutual exclusion on fuzz corpora.
std::pair<std::optional<HyperbolicCert>, std::optional<EllipticCert>> classify_both(
    const CubeComplex& x, const Automorphism& g, const VertexId& v,
    const ClassifyBudget& budget = {});

bool verify_hyperbolic_cert(const CubeComplex& x, const Automorphism& g,
                            const HyperbolicCert& cert);
bool verify_elliptic_cert(const Automorphism& g, const EllipticCert& cert);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};
Rational make_rational(std::int64_t num, std::int64_t den);

/// distance(v, g^n(v)) / n as a reduced rational; a lower-bound style
/// estimate of the stable translation length, no exactness contract.
Rational translation_length_estimate(const CubeComplex& x, const Automorphism& g,
                                     const VertexId& v, int n);

/// Fix(S): vertices fixed by every member plus cubes setwise invariant
/// under every member. The fixed vertex set is checked median-closed.
struct FixSet {
  std::vector<VertexId> vertices;  // canonical order
  std::vector<Cube> cubes;         // canonical order
};
FixSet fix_set(const CubeComplex& x, std::span<const Automorphism> S);

/// Fix(S ∪ T) vs Fix(S) ∩ Fix(T) with the containment asserted
/// (FilteringViolation if it ever failed).
struct FixIntersectionReport {
  FixSet fix_union;
  FixSet fix_s;
  FixSet fix_t;
  bool contained = false;
};
FixIntersectionReport fix_intersection(const CubeComplex& x, std::span<const Automorphism> S,
                                       std::span<const Automorphism> T);

/// The Bruhat–Tits step at desk scale: given a complete finite orbit
/// closed under the generators, returns a cube inside the orbit's convex
/// hull that every generator stabilizes setwise.
Cube bounded_orbit_fixed_cube(const CubeComplex& x, const GroupAction& a,
                              std::span<const VertexId> orbit);

}  // namespace ccx
