#include "ccx/action.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ccx {

namespace {

void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Automorphism

Automorphism Automorphism::permutation(std::vector<std::int64_t> table) {
  std::vector<bool> hit(table.size(), false);
  for (std::int64_t t : table) {
    require(t >= 0 && t < static_cast<std::int64_t>(table.size()) && !hit[t],
            Errc::InvalidArguments, "permutation table is not a bijection");
    hit[t] = true;
  }
  return Automorphism(Perm{std::move(table)});
}

Automorphism Automorphism::affine(std::vector<int> signs, std::vector<int> perm,
                                  std::vector<std::int64_t> translate) {
  const std::size_t n = signs.size();
  require(perm.size() == n && translate.size() == n, Errc::InvalidArguments,
          "affine parts must have equal rank");
  require(n >= 1, Errc::InvalidArguments, "affine map needs rank >= 1");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    require(p >= 0 && p < static_cast<int>(n) && !hit[p], Errc::InvalidArguments,
            "affine perm is not a permutation");
    hit[p] = true;
  }
  for (int s : signs) {
    require(s == 1 || s == -1, Errc::InvalidArguments, "affine signs must be +1 or -1");
  }
  return Automorphism(Affine{std::move(signs), std::move(perm), std::move(translate)});
}

Automorphism Automorphism::product_pair(Automorphism left, Automorphism right, bool swapped) {
  require(!swapped || left.arity() == right.arity(), Errc::InvalidArguments,
          "factor swap needs factors of equal arity");
  Prod p;
  p.left = std::make_shared<Automorphism>(std::move(left));
  p.right = std::make_shared<Automorphism>(std::move(right));
  p.swapped = swapped;
  return Automorphism(std::move(p));
}

Automorphism Automorphism::identity(const CubeComplex& x) {
  switch (x.kind()) {
    case CubeComplex::Kind::Finite: {
      std::vector<std::int64_t> table(x.vertex_count());
      std::iota(table.begin(), table.end(), 0);
      return permutation(std::move(table));
    }
    case CubeComplex::Kind::Lattice: {
      int n = x.rank();
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      return affine(std::vector<int>(n, 1), std::move(perm), std::vector<std::int64_t>(n, 0));
    }
    case CubeComplex::Kind::Product:
      return product_pair(identity(x.factor(0)), identity(x.factor(1)), false);
  }
  throw Error(Errc::InternalError, "unknown backend");
}

Automorphism::Kind Automorphism::kind() const {
  if (std::holds_alternative<Perm>(data_)) return Kind::Permutation;
  if (std::holds_alternative<Affine>(data_)) return Kind::Affine;
  return Kind::Product;
}

std::size_t Automorphism::arity() const {
  if (const auto* p = std::get_if<Perm>(&data_)) {
    (void)p;
    return 1;
  }
  if (const auto* a = std::get_if<Affine>(&data_)) return a->signs.size();
  const auto& pr = std::get<Prod>(data_);
  return pr.left->arity() + pr.right->arity();
}

VertexId Automorphism::operator()(const VertexId& v) const {
  require(v.arity() == arity(), Errc::InvalidArguments, "vertex arity does not match the map");
  if (const auto* p = std::get_if<Perm>(&data_)) {
    std::int64_t i = v.coords()[0];
    require(i >= 0 && i < static_cast<std::int64_t>(p->table.size()), Errc::InvalidArguments,
            "vertex index out of range");
    return VertexId::scalar(p->table[i]);
  }
  if (const auto* a = std::get_if<Affine>(&data_)) {
    const std::size_t n = a->signs.size();
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = static_cast<std::int64_t>(a->signs[i]) * v.coords()[a->perm[i]] + a->translate[i];
    }
    return VertexId(std::move(out));
  }
  const auto& pr = std::get<Prod>(data_);
  const std::size_t la = pr.left->arity();
  VertexId a({v.coords().begin(), v.coords().begin() + la});
  VertexId b({v.coords().begin() + la, v.coords().end()});
  VertexId ia = pr.swapped ? (*pr.left)(b) : (*pr.left)(a);
  VertexId ib = pr.swapped ? (*pr.right)(a) : (*pr.right)(b);
  std::vector<std::int64_t> c = ia.coords();
  c.insert(c.end(), ib.coords().begin(), ib.coords().end());
  return VertexId(std::move(c));
}

Automorphism Automorphism::inverse() const {
  if (const auto* p = std::get_if<Perm>(&data_)) {
    std::vector<std::int64_t> inv(p->table.size());
    for (std::size_t i = 0; i < p->table.size(); ++i) inv[p->table[i]] = static_cast<std::int64_t>(i);
    return permutation(std::move(inv));
  }
  if (const auto* a = std::get_if<Affine>(&data_)) {
    const std::size_t n = a->signs.size();
    std::vector<int> pinv(n);
    for (std::size_t i = 0; i < n; ++i) pinv[a->perm[i]] = static_cast<int>(i);
    std::vector<int> signs(n);
    std::vector<int> perm(n);
    std::vector<std::int64_t> translate(n);
    for (std::size_t j = 0; j < n; ++j) {
      int i = pinv[j];
      signs[j] = a->signs[i];
      perm[j] = i;
      translate[j] = -static_cast<std::int64_t>(a->signs[i]) * a->translate[i];
    }
    return affine(std::move(signs), std::move(perm), std::move(translate));
  }
  const auto& pr = std::get<Prod>(data_);
  if (!pr.swapped) return product_pair(pr.left->inverse(), pr.right->inverse(), false);
  return product_pair(pr.right->inverse(), pr.left->inverse(), true);
}

Automorphism Automorphism::compose(const Automorphism& f, const Automorphism& g) {
  require(f.kind() == g.kind() && f.arity() == g.arity(), Errc::InvalidArguments,
          "cannot compose maps of different shapes");
  if (const auto* fp = std::get_if<Perm>(&f.data_)) {
    const auto& gp = std::get<Perm>(g.data_);
    std::vector<std::int64_t> table(gp.table.size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = fp->table[gp.table[i]];
    return permutation(std::move(table));
  }
  if (const auto* fa = std::get_if<Affine>(&f.data_)) {
    const auto& ga = std::get<Affine>(g.data_);
    const std::size_t n = fa->signs.size();
    std::vector<int> signs(n);
    std::vector<int> perm(n);
    std::vector<std::int64_t> translate(n);
    for (std::size_t i = 0; i < n; ++i) {
      int j = fa->perm[i];
      signs[i] = fa->signs[i] * ga.signs[j];
      perm[i] = ga.perm[j];
      translate[i] = static_cast<std::int64_t>(fa->signs[i]) * ga.translate[j] + fa->translate[i];
    }
    return affine(std::move(signs), std::move(perm), std::move(translate));
  }
  const auto& fp = std::get<Prod>(f.data_);
  const auto& gp = std::get<Prod>(g.data_);
  const Automorphism& g_for_left = fp.swapped ? *gp.right : *gp.left;
  const Automorphism& g_for_right = fp.swapped ? *gp.left : *gp.right;
  return product_pair(compose(*fp.left, g_for_left), compose(*fp.right, g_for_right),
                      fp.swapped != gp.swapped);
}

bool Automorphism::operator==(const Automorphism& other) const {
  if (data_.index() != other.data_.index()) return false;
  if (const auto* p = std::get_if<Perm>(&data_)) return *p == std::get<Perm>(other.data_);
  if (const auto* a = std::get_if<Affine>(&data_)) return *a == std::get<Affine>(other.data_);
  const auto& x = std::get<Prod>(data_);
  const auto& y = std::get<Prod>(other.data_);
  return x.swapped == y.swapped && *x.left == *y.left && *x.right == *y.right;
}

const std::vector<std::int64_t>& Automorphism::perm_table() const {
  return std::get<Perm>(data_).table;
}
const std::vector<int>& Automorphism::affine_signs() const { return std::get<Affine>(data_).signs; }
const std::vector<int>& Automorphism::affine_perm() const { return std::get<Affine>(data_).perm; }
const std::vector<std::int64_t>& Automorphism::affine_translate() const {
  return std::get<Affine>(data_).translate;
}
const Automorphism& Automorphism::product_left() const { return *std::get<Prod>(data_).left; }
const Automorphism& Automorphism::product_right() const { return *std::get<Prod>(data_).right; }
bool Automorphism::product_swapped() const { return std::get<Prod>(data_).swapped; }

// ---------------------------------------------------------------------------
// Verification

namespace {

std::optional<OrientedEdge> sampled_ball_check(const CubeComplex& x, const Automorphism& phi,
                                               int radius) {
  for (const VertexId& w : x.ball_vertices(x.base_vertex(), radius)) {
    VertexId fw = phi(w);
    require(x.contains(fw), Errc::InvalidArguments, "map leaves the complex");
    for (const VertexId& n : x.neighbors(w)) {
      if (w < n && x.distance(fw, phi(n)) != 1) return OrientedEdge(w, n);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<OrientedEdge> verify_automorphism(const CubeComplex& x, const Automorphism& phi) {
  switch (x.kind()) {
    case CubeComplex::Kind::Finite: {
      require(phi.kind() == Automorphism::Kind::Permutation &&
                  phi.perm_table().size() == x.vertex_count(),
              Errc::InvalidArguments, "finite complex needs a full vertex permutation");
      for (const OrientedEdge& e : x.edges()) {
        if (x.distance(phi(e.tail), phi(e.head)) != 1) return e;
      }
      return std::nullopt;
    }
    case CubeComplex::Kind::Lattice: {
      require(phi.kind() == Automorphism::Kind::Affine &&
                  phi.arity() == static_cast<std::size_t>(x.rank()),
              Errc::InvalidArguments, "lattice needs a signed-permutation affine map of its rank");
      return sampled_ball_check(x, phi, 3);
    }
    case CubeComplex::Kind::Product: {
      require(phi.kind() == Automorphism::Kind::Product, Errc::InvalidArguments,
              "product complex needs a product automorphism");
      require(phi.product_left().arity() ==
                  (phi.product_swapped() ? x.factor(1).arity() : x.factor(0).arity()),
              Errc::InvalidArguments, "product automorphism arity mismatch");
      if (phi.product_swapped()) {
        require(x.factor(0).same_structure(x.factor(1)), Errc::InvalidArguments,
                "factor swap needs structurally identical factors");
        if (auto v = verify_automorphism(x.factor(0), phi.product_left())) return *v;
        if (auto v = verify_automorphism(x.factor(1), phi.product_right())) return *v;
      } else {
        if (auto v = verify_automorphism(x.factor(0), phi.product_left())) return *v;
        if (auto v = verify_automorphism(x.factor(1), phi.product_right())) return *v;
      }
      return sampled_ball_check(x, phi, 3);
    }
  }
  throw Error(Errc::InternalError, "unknown backend");
}

Hyperplane map_hyperplane(const CubeComplex& x, const Automorphism& phi, const Hyperplane& h) {
  return hyperplane_of(x, OrientedEdge(phi(h.representative().tail), phi(h.representative().head)));
}

Cube map_cube(const Automorphism& phi, const Cube& c) {
  std::vector<VertexId> out;
  out.reserve(c.vertices().size());
  for (const VertexId& v : c.vertices()) out.push_back(phi(v));
  return Cube(std::move(out), c.dimension());
}

// ---------------------------------------------------------------------------
// GroupAction

GroupAction::GroupAction(CubeComplex complex,
                         std::vector<std::pair<std::string, Automorphism>> generators,
                         VertexId base)
    : complex_(std::move(complex)), base_(std::move(base)) {
  require(complex_.contains(base_), Errc::InvalidArguments, "base vertex is not in the complex");
  std::set<std::string> names;
  for (auto& [name, aut] : generators) {
    require(names.insert(name).second, Errc::InvalidArguments, "duplicate generator name: " + name);
    if (auto violation = verify_automorphism(complex_, aut)) {
      throw Error(Errc::InvalidArguments,
                  "generator " + name + " breaks adjacency at edge " + violation->tail.to_string() +
                      "--" + violation->head.to_string());
    }
    gens_.push_back({name, std::move(aut), 0});
  }
  user_count_ = gens_.size();
  // Derive missing inverses (symmetric generating set).
  for (std::size_t i = 0; i < user_count_; ++i) {
    Automorphism inv = gens_[i].aut.inverse();
    std::size_t found = gens_.size();
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      if (gens_[j].aut == inv) {
        found = j;
        break;
      }
    }
    if (found == gens_.size()) {
      std::string name = gens_[i].name + "^-1";
      require(names.insert(name).second, Errc::InvalidArguments,
              "generator name collides with the reserved inverse name " + name);
      gens_.push_back({std::move(name), std::move(inv), i});
      found = gens_.size() - 1;
    }
    gens_[i].inverse = found;
    gens_[found].inverse = i;
  }
}

const GroupAction::Generator& GroupAction::generator(const std::string& name) const {
  for (const Generator& g : gens_) {
    if (g.name == name) return g;
  }
  throw Error(Errc::UnknownGenerator, "unknown generator: " + name);
}

Word GroupAction::inverse_word(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Generator& g = generator(*it);
    out.push_back(gens_[g.inverse].name);
  }
  return out;
}

VertexId apply_word(const GroupAction& a, const Word& w, const VertexId& v) {
  VertexId cur = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = a.generator(*it).aut(cur);
  return cur;
}

Automorphism evaluate(const GroupAction& a, const Word& w) {
  Automorphism acc = Automorphism::identity(a.complex());
  for (const std::string& name : w) acc = Automorphism::compose(acc, a.generator(name).aut);
  return acc;
}

// ---------------------------------------------------------------------------
// Word BFS

WordSearch word_bfs(const GroupAction& a, const VertexId& start, std::size_t cap,
                    const std::function<bool(const VertexId&, const Word&)>& stop) {
  require(cap >= 1, Errc::InvalidArguments, "cap must be >= 1");
  WordSearch result;
  std::unordered_set<VertexId, VertexIdHash> seen{start};
  result.visited.emplace_back(start, Word{});
  if (stop && stop(start, Word{})) {
    result.hit = true;
    result.hit_vertex = start;
    result.hit_word = {};
    return result;
  }
  // Layered BFS; within a layer the generator loop is outer so that new
  // words of equal length appear in lexicographic order (the new letter
  // is prepended: word(g(u)) = [g] ++ word(u)).
  std::vector<std::size_t> layer{0};  // indices into visited
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t gi = 0; gi < a.generators().size(); ++gi) {
      const auto& gen = a.generators()[gi];
      for (std::size_t pi : layer) {
        VertexId image = gen.aut(result.visited[pi].first);
        if (!seen.insert(image).second) continue;
        if (result.visited.size() == cap) {
          // One more vertex would exceed the cap: report a truncated search.
          return result;
        }
        Word w;
        w.reserve(result.visited[pi].second.size() + 1);
        w.push_back(gen.name);
        w.insert(w.end(), result.visited[pi].second.begin(), result.visited[pi].second.end());
        result.visited.emplace_back(image, std::move(w));
        next.push_back(result.visited.size() - 1);
        if (stop && stop(result.visited.back().first, result.visited.back().second)) {
          result.hit = true;
          result.hit_vertex = result.visited.back().first;
          result.hit_word = result.visited.back().second;
          return result;
        }
      }
    }
    layer = std::move(next);
  }
  result.closed = true;
  return result;
}

OrbitResult orbit(const CubeComplex& x, const GroupAction& a, const VertexId& v, std::size_t cap) {
  WordSearch search = word_bfs(a, v, cap, nullptr);
  OrbitResult out;
  for (const auto& [w, word] : search.visited) out.vertices.push_back(w);
  std::sort(out.vertices.begin(), out.vertices.end());
  out.capped = !search.closed;
  if (out.capped) {
    std::int64_t best = -1;
    for (const auto& [w, word] : search.visited) {
      std::int64_t d = x.distance(v, w);
      if (d > best || (d == best && w < *out.farthest)) {
        best = d;
        out.farthest = w;
        out.farthest_word = word;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

std::optional<HyperbolicCert> hyperbolic_search(const CubeComplex& x, const Automorphism& g,
                                                const VertexId& v, int max_power) {
  VertexId gv = g(v);
  if (gv == v) return std::nullopt;
  std::vector<Hyperplane> walls = hyperplanes_between(x, v, gv);
  Automorphism ginv = g.inverse();
  Automorphism fwd = g;     // g^k
  Automorphism bwd = ginv;  // g^-k
  for (int k = 1; k <= max_power; ++k) {
    if (k > 1) {
      fwd = Automorphism::compose(g, fwd);
      bwd = Automorphism::compose(ginv, bwd);
    }
    for (const Hyperplane& h : walls) {
      Hyperplane hp = map_hyperplane(x, fwd, h);
      Hyperplane hm = map_hyperplane(x, bwd, h);
      if (hp == h || hm == h || hp == hm) continue;
      if (crosses(x, h, hp) || crosses(x, h, hm) || crosses(x, hp, hm)) continue;
      if (side(x, h, hm.representative().tail) != side(x, h, hp.representative().tail)) {
        return HyperbolicCert{h, {hm, h, hp}, k};
      }
    }
  }
  return std::nullopt;
}

bool cube_invariant(const Automorphism& g, const Cube& c) { return map_cube(g, c) == c; }

std::optional<EllipticCert> elliptic_search(const CubeComplex& x, const Automorphism& g,
                                            const VertexId& v, int max_radius,
                                            std::size_t ball_cap) {
  if (x.is_finite()) {
    // Equivalent to growing balls: order candidates by the radius at
    // which the cube is fully inside the ball, then canonically.
    std::vector<std::pair<std::int64_t, const Cube*>> order;
    for (const Cube& c : x.cubes()) {
      std::int64_t r = 0;
      for (const VertexId& w : c.vertices()) r = std::max(r, x.distance(v, w));
      if (r <= max_radius) order.emplace_back(r, &c);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [r, c] : order) {
      if (cube_invariant(g, *c)) return EllipticCert{*c};
    }
    return std::nullopt;
  }
  for (int r = 0; r <= max_radius; ++r) {
    std::vector<VertexId> ball;
    try {
      ball = x.ball_vertices(v, r, ball_cap);
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded) break;
      throw;
    }
    for (const Cube& c : x.cubes_in(ball)) {
      if (cube_invariant(g, c)) return EllipticCert{c};
    }
  }
  return std::nullopt;
}

}  // namespace

ClassifyResult classify(const CubeComplex& x, const Automorphism& g, const VertexId& v,
                        const ClassifyBudget& budget) {
  if (auto h = hyperbolic_search(x, g, v, budget.power)) return *h;
  if (auto e = elliptic_search(x, g, v, budget.radius, budget.ball_cap)) return *e;
  return UndecidedInfo{budget.power, budget.radius, "both searches exhausted their budgets"};
}

std::pair<std::optional<HyperbolicCert>, std::optional<EllipticCert>> classify_both(
    const CubeComplex& x, const Automorphism& g, const VertexId& v, const ClassifyBudget& budget) {
  return {hyperbolic_search(x, g, v, budget.power),
          elliptic_search(x, g, v, budget.radius, budget.ball_cap)};
}

bool verify_hyperbolic_cert(const CubeComplex& x, const Automorphism& g,
                            const HyperbolicCert& cert) {
  Automorphism fwd = g;
  Automorphism bwd = g.inverse();
  for (int k = 1; k < cert.power; ++k) {
    fwd = Automorphism::compose(g, fwd);
    bwd = Automorphism::compose(g.inverse(), bwd);
  }
  Hyperplane hm = map_hyperplane(x, bwd, cert.wall);
  Hyperplane hp = map_hyperplane(x, fwd, cert.wall);
  if (!(hm == cert.triple[0]) || !(cert.wall == cert.triple[1]) || !(hp == cert.triple[2])) {
    return false;
  }
  if (hp == cert.wall || hm == cert.wall || hp == hm) return false;
  if (crosses(x, cert.wall, hp) || crosses(x, cert.wall, hm) || crosses(x, hp, hm)) return false;
  return separates(x, cert.wall, hm, hp);
}

bool verify_elliptic_cert(const Automorphism& g, const EllipticCert& cert) {
  return cube_invariant(g, cert.cube);
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  require(den != 0, Errc::InvalidArguments, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Rational translation_length_estimate(const CubeComplex& x, const Automorphism& g,
                                     const VertexId& v, int n) {
  require(n >= 1, Errc::InvalidArguments, "estimate needs n >= 1");
  VertexId cur = v;
  for (int i = 0; i < n; ++i) cur = g(cur);
  return make_rational(x.distance(v, cur), n);
}

// ---------------------------------------------------------------------------
// Fixed sets

FixSet fix_set(const CubeComplex& x, std::span<const Automorphism> S) {
  FixSet out;
  for (const VertexId& v : x.vertices()) {
    bool fixed = true;
    for (const Automorphism& g : S) {
      if (!(g(v) == v)) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.vertices.push_back(v);
  }
  for (const Cube& c : x.cubes()) {
    bool invariant = true;
    for (const Automorphism& g : S) {
      if (!cube_invariant(g, c)) {
        invariant = false;
        break;
      }
    }
    if (invariant) out.cubes.push_back(c);
  }
  // Fixed vertex sets of simplicial actions are median-closed; the check
  // runs over unordered triples (repeats are trivially closed) and skips
  // the full vertex set.
  std::set<VertexId> fixed(out.vertices.begin(), out.vertices.end());
  if (fixed.size() < x.vertex_count()) {
    const auto& f = out.vertices;
    const auto& all = x.vertices();
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        const std::int64_t dij = x.distance(f[i], f[j]);
        for (std::size_t k = j + 1; k < f.size(); ++k) {
          const std::int64_t djk = x.distance(f[j], f[k]);
          const std::int64_t dik = x.distance(f[i], f[k]);
          for (const VertexId& w : all) {
            if (x.distance(f[i], w) + x.distance(w, f[j]) == dij &&
                x.distance(f[j], w) + x.distance(w, f[k]) == djk &&
                x.distance(f[i], w) + x.distance(w, f[k]) == dik) {
              if (!fixed.count(w)) {
                throw Error(Errc::InternalError, "fixed vertex set is not median-closed");
              }
              break;  // medians are unique on verified input
            }
          }
        }
      }
    }
  }
  return out;
}

FixIntersectionReport fix_intersection(const CubeComplex& x, std::span<const Automorphism> S,
                                       std::span<const Automorphism> T) {
  std::vector<Automorphism> both(S.begin(), S.end());
  both.insert(both.end(), T.begin(), T.end());
  FixIntersectionReport report;
  report.fix_union = fix_set(x, both);
  report.fix_s = fix_set(x, S);
  report.fix_t = fix_set(x, T);
  auto in_both_v = [&](const VertexId& v) {
    return std::binary_search(report.fix_s.vertices.begin(), report.fix_s.vertices.end(), v) &&
           std::binary_search(report.fix_t.vertices.begin(), report.fix_t.vertices.end(), v);
  };
  auto in_both_c = [&](const Cube& c) {
    return std::binary_search(report.fix_s.cubes.begin(), report.fix_s.cubes.end(), c) &&
           std::binary_search(report.fix_t.cubes.begin(), report.fix_t.cubes.end(), c);
  };
  report.contained = true;
  for (const VertexId& v : report.fix_union.vertices) {
    if (!in_both_v(v)) report.contained = false;
  }
  for (const Cube& c : report.fix_union.cubes) {
    if (!in_both_c(c)) report.contained = false;
  }
  if (!report.contained) {
    throw Error(Errc::FilteringViolation, "Fix(S ∪ T) is not contained in Fix(S) ∩ Fix(T)");
  }
  return report;
}

Cube bounded_orbit_fixed_cube(const CubeComplex& x, const GroupAction& a,
                              std::span<const VertexId> orbit) {
  require(!orbit.empty(), Errc::NoInvariantCube, "orbit is empty");
  std::set<VertexId> hull(orbit.begin(), orbit.end());
  for (const VertexId& v : hull) {
    for (const auto& gen : a.generators()) {
      if (!hull.count(gen.aut(v))) {
        throw Error(Errc::NoInvariantCube, "orbit is not closed under the generators");
      }
    }
  }
  // Geodesic convex hull: close under pairwise intervals.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<VertexId> snapshot(hull.begin(), hull.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        for (const VertexId& w : x.interval(snapshot[i], snapshot[j])) {
          if (hull.insert(w).second) grew = true;
        }
      }
    }
    if (hull.size() > CubeComplex::kDefaultBallCap) {
      throw Error(Errc::BudgetExceeded, "convex hull exceeded the vertex cap");
    }
  }
  std::vector<VertexId> hull_list(hull.begin(), hull.end());
  for (const Cube& c : x.cubes_in(hull_list)) {
    bool invariant = true;
    for (const auto& gen : a.generators()) {
      if (!cube_invariant(gen.aut, c)) {
        invariant = false;
        break;
      }
    }
    if (invariant) return c;
  }
  throw Error(Errc::NoInvariantCube, "no invariant cube in the orbit hull");
}

}  // namespace ccx
