#include "ccx/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ccx {
namespace detail {

class Backend {
 public:
  virtual ~Backend() = default;
  virtual CubeComplex::Kind kind() const = 0;
  virtual std::size_t arity() const = 0;
  virtual int dimension() const = 0;
  virtual VertexId base_vertex() const = 0;
  virtual bool contains(const VertexId& v) const = 0;
  virtual std::vector<VertexId> neighbors(const VertexId& v) const = 0;
  virtual std::int64_t distance(const VertexId& x, const VertexId& y) const = 0;
  virtual std::vector<VertexId> interval(const VertexId& x, const VertexId& y) const = 0;
  virtual VertexId median(const VertexId& x, const VertexId& y, const VertexId& z) const = 0;
};

std::vector<Cube> enumerate_cubes_impl(const Backend& backend, std::span<const VertexId> window);

namespace {

void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Finite backend: explicit graph, vertices are [index], input order is the
// canonical order.

class FiniteBackend final : public Backend {
 public:
  FiniteBackend(std::vector<std::string> names,
                std::vector<std::pair<std::string, std::string>> edge_names, bool check_median)
      : names_(std::move(names)) {
    require(!names_.empty(), Errc::InvalidArguments, "finite complex needs at least one vertex");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      auto [it, fresh] = index_.emplace(names_[i], static_cast<std::int32_t>(i));
      require(fresh, Errc::InvalidArguments, "duplicate vertex name: " + names_[i]);
    }
    adj_.resize(names_.size());
    std::set<std::pair<std::int32_t, std::int32_t>> seen;
    for (const auto& [a, b] : edge_names) {
      auto ia = index_.find(a);
      auto ib = index_.find(b);
      require(ia != index_.end(), Errc::InvalidArguments, "edge endpoint not a vertex: " + a);
      require(ib != index_.end(), Errc::InvalidArguments, "edge endpoint not a vertex: " + b);
      std::int32_t u = ia->second, v = ib->second;
      require(u != v, Errc::InvalidArguments, "self-loop at vertex: " + a);
      auto key = std::minmax(u, v);
      require(seen.insert(key).second, Errc::InvalidArguments, "duplicate edge: " + a + "--" + b);
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());

    auto d0 = bfs(0);
    for (std::size_t i = 0; i < d0.size(); ++i) {
      require(d0[i] >= 0, Errc::Disconnected, "finite complex is disconnected at vertex: " + names_[i]);
    }

    if (names_.size() <= kMatrixCap) {
      matrix_.resize(names_.size());
      for (std::size_t i = 0; i < names_.size(); ++i) matrix_[i] = bfs(static_cast<std::int32_t>(i));
    }

    vertices_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
      vertices_.push_back(VertexId::scalar(static_cast<std::int64_t>(i)));
    }

    if (check_median) {
      MedianCheck check = verify_median_graph();
      if (!check.ok()) {
        const auto& t = *check.violation;
        throw Error(Errc::MedianViolation,
                    "not a median graph: triple (" + name_of(t[0]) + "," + name_of(t[1]) + "," +
                        name_of(t[2]) + ") has " + std::to_string(check.median_count) + " medians");
      }
    }
  }

  CubeComplex::Kind kind() const override { return CubeComplex::Kind::Finite; }
  std::size_t arity() const override { return 1; }
  VertexId base_vertex() const override { return vertices_[0]; }

  bool contains(const VertexId& v) const override {
    return v.arity() == 1 && v.coords()[0] >= 0 &&
           v.coords()[0] < static_cast<std::int64_t>(names_.size());
  }

  std::vector<VertexId> neighbors(const VertexId& v) const override {
    std::vector<VertexId> out;
    out.reserve(adj_[idx(v)].size());
    for (std::int32_t n : adj_[idx(v)]) out.push_back(vertices_[n]);
    return out;
  }

  std::int64_t distance(const VertexId& x, const VertexId& y) const override {
    if (!matrix_.empty()) return matrix_[idx(x)][idx(y)];
    return bfs(idx(x))[idx(y)];
  }

  std::vector<VertexId> interval(const VertexId& x, const VertexId& y) const override {
    auto dx = row(idx(x));
    auto dy = row(idx(y));
    std::int32_t d = dx[idx(y)];
    std::vector<VertexId> out;
    for (std::size_t w = 0; w < names_.size(); ++w) {
      if (dx[w] + dy[w] == d) out.push_back(vertices_[w]);
    }
    return out;
  }

  VertexId median(const VertexId& x, const VertexId& y, const VertexId& z) const override {
    auto dx = row(idx(x));
    auto dy = row(idx(y));
    auto dz = row(idx(z));
    std::int32_t dxy = dx[idx(y)], dyz = dy[idx(z)], dxz = dx[idx(z)];
    std::optional<VertexId> found;
    std::size_t count = 0;
    for (std::size_t w = 0; w < names_.size(); ++w) {
      if (dx[w] + dy[w] == dxy && dy[w] + dz[w] == dyz && dx[w] + dz[w] == dxz) {
        ++count;
        if (!found) found = vertices_[w];
      }
    }
    if (count != 1) {
      throw Error(Errc::MedianViolation, "median count " + std::to_string(count) + " for triple (" +
                                             name_of(x) + "," + name_of(y) + "," + name_of(z) + ")");
    }
    return *found;
  }

  int dimension() const override {
    ensure_cubes();
    return dim_;
  }

  const std::vector<Cube>& cubes() const {
    ensure_cubes();
    return cubes_;
  }

  MedianCheck verify_median_graph() const {
    const std::size_t n = names_.size();
    require(n <= kVerifyCap, Errc::SizeExceeded,
            "median verification supported up to " + std::to_string(kVerifyCap) + " vertices");
    // Interval bitsets per ordered pair; the triple check is AND + popcount.
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::int32_t>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = row(static_cast<std::int32_t>(i));
    std::vector<std::uint64_t> bits(n * n * words, 0);
    auto pair_bits = [&](std::size_t a, std::size_t b) { return bits.data() + (a * n + b) * words; };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        std::uint64_t* p = pair_bits(a, b);
        std::int32_t d = rows[a][b];
        for (std::size_t w = 0; w < n; ++w) {
          if (rows[a][w] + rows[b][w] == d) p[w / 64] |= 1ull << (w % 64);
        }
        if (a != b) std::copy(p, p + words, pair_bits(b, a));
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        const std::uint64_t* pxy = pair_bits(x, y);
        for (std::size_t z = y + 1; z < n; ++z) {
          const std::uint64_t* pyz = pair_bits(y, z);
          const std::uint64_t* pxz = pair_bits(x, z);
          std::size_t count = 0;
          for (std::size_t w = 0; w < words; ++w) count += std::popcount(pxy[w] & pyz[w] & pxz[w]);
          if (count != 1) {
            MedianCheck bad;
            bad.violation = {vertices_[x], vertices_[y], vertices_[z]};
            bad.median_count = count;
            return bad;
          }
        }
      }
    }
    return {};
  }

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::string& name_of(const VertexId& v) const { return names_[idx(v)]; }

  std::optional<VertexId> by_name(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return vertices_[it->second];
  }

  std::vector<OrientedEdge> edges() const {
    std::vector<OrientedEdge> out;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      for (std::int32_t v : adj_[u]) {
        if (v > static_cast<std::int32_t>(u)) out.emplace_back(vertices_[u], vertices_[v]);
      }
    }
    return out;
  }

 private:
  static constexpr std::size_t kMatrixCap = 2048;
  static constexpr std::size_t kVerifyCap = 800;

  std::int32_t idx(const VertexId& v) const { return static_cast<std::int32_t>(v.coords()[0]); }

  std::vector<std::int32_t> bfs(std::int32_t from) const {
    std::vector<std::int32_t> dist(names_.size(), -1);
    std::deque<std::int32_t> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
      std::int32_t u = queue.front();
      queue.pop_front();
      for (std::int32_t v : adj_[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return dist;
  }

  std::vector<std::int32_t> row(std::int32_t from) const {
    if (!matrix_.empty()) return matrix_[from];
    return bfs(from);
  }

  void ensure_cubes() const {
    std::call_once(cubes_once_, [this] {
      cubes_ = enumerate_cubes_impl(*this, vertices_);
      int d = 0;
      for (const Cube& c : cubes_) d = std::max(d, c.dimension());
      dim_ = std::max(1, d);
    });
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::int32_t> index_;
  std::vector<std::vector<std::int32_t>> adj_;
  std::vector<std::vector<std::int32_t>> matrix_;
  std::vector<VertexId> vertices_;

  mutable std::once_flag cubes_once_;
  mutable std::vector<Cube> cubes_;
  mutable int dim_ = 1;
};

// ---------------------------------------------------------------------------
// Lattice backend: Z^n with the L1 metric; all answers structural.

class LatticeBackend final : public Backend {
 public:
  explicit LatticeBackend(int rank) : rank_(rank) {
    require(rank >= 1, Errc::InvalidArguments, "lattice rank must be >= 1");
  }

  CubeComplex::Kind kind() const override { return CubeComplex::Kind::Lattice; }
  std::size_t arity() const override { return static_cast<std::size_t>(rank_); }
  int dimension() const override { return rank_; }
  VertexId base_vertex() const override { return VertexId(std::vector<std::int64_t>(rank_, 0)); }
  bool contains(const VertexId& v) const override {
    return v.arity() == static_cast<std::size_t>(rank_);
  }

  std::vector<VertexId> neighbors(const VertexId& v) const override {
    std::vector<VertexId> out;
    out.reserve(2 * rank_);
    for (int i = 0; i < rank_; ++i) {
      for (std::int64_t step : {std::int64_t{-1}, std::int64_t{1}}) {
        auto c = v.coords();
        c[i] += step;
        out.emplace_back(std::move(c));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::int64_t distance(const VertexId& x, const VertexId& y) const override {
    std::int64_t d = 0;
    for (int i = 0; i < rank_; ++i) d += std::llabs(x.coords()[i] - y.coords()[i]);
    return d;
  }

  std::vector<VertexId> interval(const VertexId& x, const VertexId& y) const override {
    std::vector<std::int64_t> lo(rank_), hi(rank_);
    for (int i = 0; i < rank_; ++i) {
      lo[i] = std::min(x.coords()[i], y.coords()[i]);
      hi[i] = std::max(x.coords()[i], y.coords()[i]);
    }
    // Box enumeration in lexicographic order (last coordinate fastest).
    std::vector<VertexId> out;
    std::vector<std::int64_t> cur = lo;
    while (true) {
      out.emplace_back(cur);
      int i = rank_ - 1;
      while (i >= 0 && cur[i] == hi[i]) {
        cur[i] = lo[i];
        --i;
      }
      if (i < 0) break;
      ++cur[i];
    }
    return out;
  }

  VertexId median(const VertexId& x, const VertexId& y, const VertexId& z) const override {
    std::vector<std::int64_t> m(rank_);
    for (int i = 0; i < rank_; ++i) {
      std::array<std::int64_t, 3> c{x.coords()[i], y.coords()[i], z.coords()[i]};
      std::sort(c.begin(), c.end());
      m[i] = c[1];
    }
    return VertexId(std::move(m));
  }

  int rank() const { return rank_; }

 private:
  int rank_;
};

// ---------------------------------------------------------------------------
// Product backend: binary product; a vertex is the concatenation of the
// factor tuples and the metric is the sum of the factor metrics.

class ProductBackend final : public Backend {
 public:
  ProductBackend(CubeComplex left, CubeComplex right)
      : left_(std::move(left)), right_(std::move(right)) {}

  CubeComplex::Kind kind() const override { return CubeComplex::Kind::Product; }
  std::size_t arity() const override { return left_.arity() + right_.arity(); }
  int dimension() const override { return left_.dimension() + right_.dimension(); }
  VertexId base_vertex() const override { return join(left_.base_vertex(), right_.base_vertex()); }

  bool contains(const VertexId& v) const override {
    if (v.arity() != arity()) return false;
    auto [a, b] = split(v);
    return left_.contains(a) && right_.contains(b);
  }

  std::vector<VertexId> neighbors(const VertexId& v) const override {
    auto [a, b] = split(v);
    std::vector<VertexId> out;
    for (const VertexId& n : left_.neighbors(a)) out.push_back(join(n, b));
    for (const VertexId& n : right_.neighbors(b)) out.push_back(join(a, n));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::int64_t distance(const VertexId& x, const VertexId& y) const override {
    auto [xa, xb] = split(x);
    auto [ya, yb] = split(y);
    return left_.distance(xa, ya) + right_.distance(xb, yb);
  }

  std::vector<VertexId> interval(const VertexId& x, const VertexId& y) const override {
    auto [xa, xb] = split(x);
    auto [ya, yb] = split(y);
    auto ia = left_.interval(xa, ya);
    auto ib = right_.interval(xb, yb);
    std::vector<VertexId> out;
    out.reserve(ia.size() * ib.size());
    for (const VertexId& a : ia) {
      for (const VertexId& b : ib) out.push_back(join(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  VertexId median(const VertexId& x, const VertexId& y, const VertexId& z) const override {
    auto [xa, xb] = split(x);
    auto [ya, yb] = split(y);
    auto [za, zb] = split(z);
    return join(left_.median(xa, ya, za), right_.median(xb, yb, zb));
  }

  std::pair<VertexId, VertexId> split(const VertexId& v) const {
    const auto& c = v.coords();
    std::vector<std::int64_t> a(c.begin(), c.begin() + left_.arity());
    std::vector<std::int64_t> b(c.begin() + left_.arity(), c.end());
    return {VertexId(std::move(a)), VertexId(std::move(b))};
  }

  VertexId join(const VertexId& a, const VertexId& b) const {
    std::vector<std::int64_t> c = a.coords();
    c.insert(c.end(), b.coords().begin(), b.coords().end());
    return VertexId(std::move(c));
  }

  const CubeComplex& left() const { return left_; }
  const CubeComplex& right() const { return right_; }

 private:
  CubeComplex left_;
  CubeComplex right_;
};

// ---------------------------------------------------------------------------
// Induced-hypercube enumeration over a vertex window. Cubes are built by
// translating a (k-1)-cube along a new edge direction and verifying the
// candidate set exactly, so the routine is sound on any induced subgraph.

namespace {

struct WindowGraph {
  std::vector<VertexId> verts;  // sorted
  std::unordered_map<VertexId, std::vector<VertexId>, VertexIdHash> adj;

  WindowGraph(const Backend& b, std::span<const VertexId> window) {
    verts.assign(window.begin(), window.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::unordered_set<VertexId, VertexIdHash> inside(verts.begin(), verts.end());
    for (const VertexId& v : verts) {
      std::vector<VertexId> ns;
      for (const VertexId& n : b.neighbors(v)) {
        if (inside.count(n)) ns.push_back(n);
      }
      adj.emplace(v, std::move(ns));
    }
  }

  bool adjacent(const VertexId& a, const VertexId& b) const {
    const auto& ns = adj.at(a);
    return std::find(ns.begin(), ns.end(), b) != ns.end();
  }
};

bool is_induced_hypercube(const WindowGraph& g, const std::vector<VertexId>& verts, int dim) {
  if (verts.size() != (std::size_t{1} << dim)) return false;
  std::set<VertexId> member(verts.begin(), verts.end());
  if (member.size() != verts.size()) return false;

  // Greedy bitmask labeling by BFS from the canonical corner.
  std::map<VertexId, unsigned> label;
  std::vector<VertexId> order{verts.front()};
  label[verts.front()] = 0;
  unsigned next_bit = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId u = order[i];
    for (const VertexId& w : g.adj.at(u)) {
      if (!member.count(w) || label.count(w)) continue;
      unsigned lw = 0;
      if (label[u] == 0) {
        if (next_bit >= static_cast<unsigned>(dim)) return false;
        lw = 1u << next_bit++;
      } else {
        for (const VertexId& p : g.adj.at(w)) {
          auto it = label.find(p);
          if (it != label.end() && member.count(p)) lw |= it->second;
        }
      }
      label[w] = lw;
      order.push_back(w);
    }
  }
  if (label.size() != verts.size()) return false;
  std::set<unsigned> used;
  for (const auto& [v, l] : label) {
    if (l >= (1u << dim)) return false;
    if (!used.insert(l).second) return false;
  }
  // Adjacency inside the set must be exactly Hamming distance one.
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      bool adj = g.adjacent(verts[i], verts[j]);
      bool ham1 = std::popcount(label[verts[i]] ^ label[verts[j]]) == 1;
      if (adj != ham1) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Cube> enumerate_cubes_impl(const Backend& backend, std::span<const VertexId> window) {
  WindowGraph g(backend, window);
  std::vector<Cube> out;

  // Indexed layout: q[mask] with q[0] the corner and bit b flipping one
  // edge direction.
  std::vector<std::vector<VertexId>> level;
  level.reserve(g.verts.size());
  for (const VertexId& v : g.verts) {
    out.emplace_back(std::vector<VertexId>{v}, 0);
    level.push_back({v});
  }

  int dim = 1;
  while (!level.empty()) {
    std::set<std::vector<VertexId>> found;
    std::vector<std::vector<VertexId>> next;
    for (const auto& q : level) {
      std::set<VertexId> qset(q.begin(), q.end());
      for (const VertexId& u : g.adj.at(q[0])) {
        if (qset.count(u)) continue;
        const std::size_t half = q.size();
        std::vector<VertexId> part(half);
        part[0] = u;
        bool ok = true;
        for (std::size_t mask = 1; mask < half && ok; ++mask) {
          const std::size_t bit = mask & (~mask + 1);
          const VertexId& parent = q[mask ^ bit];
          const VertexId& fparent = part[mask ^ bit];
          // Partner of q[mask]: common neighbor of q[mask] and fparent
          // other than parent (unique in median graphs; the smallest is
          // taken and the exact check below rejects bad completions).
          std::optional<VertexId> partner;
          for (const VertexId& w : g.adj.at(q[mask])) {
            if (w == parent) continue;
            if (g.adjacent(w, fparent) && (!partner || w < *partner)) partner = w;
          }
          if (!partner) {
            ok = false;
            break;
          }
          part[mask] = *partner;
        }
        if (!ok) continue;
        std::vector<VertexId> all = q;
        all.insert(all.end(), part.begin(), part.end());
        std::vector<VertexId> sorted = all;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        if (found.count(sorted)) continue;
        if (!is_induced_hypercube(g, sorted, dim)) continue;
        found.insert(std::move(sorted));
        next.push_back(std::move(all));
      }
    }
    for (const auto& s : found) out.emplace_back(s, dim);
    level = std::move(next);
    ++dim;
  }

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cube

Cube::Cube(std::vector<VertexId> vertices, int dimension)
    : vertices_(std::move(vertices)), dim_(dimension) {
  std::sort(vertices_.begin(), vertices_.end());
}

bool Cube::contains(const VertexId& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::string Cube::label() const {
  std::string s = "b";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += "|";
    s += vertices_[i].to_string();
  }
  return s;
}

// ---------------------------------------------------------------------------
// CubeComplex

namespace {

void check_vertex(const CubeComplex& x, const VertexId& v) {
  if (!x.contains(v)) {
    throw Error(Errc::InvalidArguments, "vertex " + v.to_string() + " is not in the complex");
  }
}

const detail::FiniteBackend& finite_backend(const CubeComplex& x) {
  if (x.kind() != CubeComplex::Kind::Finite) {
    throw Error(Errc::WindowRequired, "operation requires a finite complex (or a window)");
  }
  return static_cast<const detail::FiniteBackend&>(x.backend());
}

}  // namespace

CubeComplex CubeComplex::finite(std::vector<std::string> names,
                                std::vector<std::pair<std::string, std::string>> edges,
                                bool check_median) {
  return CubeComplex(
      std::make_shared<detail::FiniteBackend>(std::move(names), std::move(edges), check_median));
}

CubeComplex CubeComplex::lattice(int rank) {
  return CubeComplex(std::make_shared<detail::LatticeBackend>(rank));
}

CubeComplex CubeComplex::product(CubeComplex left, CubeComplex right) {
  return CubeComplex(std::make_shared<detail::ProductBackend>(std::move(left), std::move(right)));
}

CubeComplex::Kind CubeComplex::kind() const { return impl_->kind(); }
std::size_t CubeComplex::arity() const { return impl_->arity(); }
int CubeComplex::dimension() const { return impl_->dimension(); }
VertexId CubeComplex::base_vertex() const { return impl_->base_vertex(); }
bool CubeComplex::contains(const VertexId& v) const { return impl_->contains(v); }

std::vector<VertexId> CubeComplex::neighbors(const VertexId& v) const {
  check_vertex(*this, v);
  return impl_->neighbors(v);
}

std::int64_t CubeComplex::distance(const VertexId& x, const VertexId& y) const {
  check_vertex(*this, x);
  check_vertex(*this, y);
  return impl_->distance(x, y);
}

std::vector<VertexId> CubeComplex::interval(const VertexId& x, const VertexId& y) const {
  check_vertex(*this, x);
  check_vertex(*this, y);
  return impl_->interval(x, y);
}

std::vector<VertexId> CubeComplex::geodesic(const VertexId& x, const VertexId& y) const {
  check_vertex(*this, x);
  check_vertex(*this, y);
  std::vector<VertexId> path{x};
  VertexId cur = x;
  std::int64_t remaining = impl_->distance(x, y);
  while (remaining > 0) {
    bool advanced = false;
    for (const VertexId& n : impl_->neighbors(cur)) {
      if (impl_->distance(n, y) == remaining - 1) {
        path.push_back(n);
        cur = n;
        --remaining;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw Error(Errc::InternalError, "geodesic step found no closer neighbor");
  }
  return path;
}

VertexId CubeComplex::median(const VertexId& x, const VertexId& y, const VertexId& z) const {
  check_vertex(*this, x);
  check_vertex(*this, y);
  check_vertex(*this, z);
  return impl_->median(x, y, z);
}

MedianCheck CubeComplex::verify_median_graph() const {
  return finite_backend(*this).verify_median_graph();
}
std::size_t CubeComplex::vertex_count() const { return finite_backend(*this).vertex_count(); }
const std::vector<VertexId>& CubeComplex::vertices() const {
  return finite_backend(*this).vertices();
}
std::vector<OrientedEdge> CubeComplex::edges() const { return finite_backend(*this).edges(); }

std::string CubeComplex::vertex_name(const VertexId& v) const {
  if (kind() == Kind::Finite) return finite_backend(*this).name_of(v);
  return v.to_string();
}

std::optional<VertexId> CubeComplex::vertex_by_name(const std::string& name) const {
  return finite_backend(*this).by_name(name);
}

const std::vector<Cube>& CubeComplex::cubes() const { return finite_backend(*this).cubes(); }

std::vector<Cube> CubeComplex::cubes_in(std::span<const VertexId> window) const {
  for (const VertexId& v : window) check_vertex(*this, v);
  return detail::enumerate_cubes_impl(*impl_, window);
}

std::vector<VertexId> CubeComplex::ball_vertices(const VertexId& center, int radius,
                                                 std::size_t cap) const {
  check_vertex(*this, center);
  if (radius < 0) throw Error(Errc::InvalidArguments, "ball radius must be >= 0");
  std::unordered_set<VertexId, VertexIdHash> seen{center};
  std::deque<std::pair<VertexId, int>> queue{{center, 0}};
  if (cap < 1) throw Error(Errc::BudgetExceeded, "ball cap must admit the center");
  while (!queue.empty()) {
    auto [v, d] = queue.front();
    queue.pop_front();
    if (d == radius) continue;
    for (const VertexId& n : impl_->neighbors(v)) {
      if (seen.insert(n).second) {
        if (seen.size() > cap) {
          throw Error(Errc::BudgetExceeded, "ball exceeds the vertex cap of " + std::to_string(cap));
        }
        queue.emplace_back(n, d + 1);
      }
    }
  }
  std::vector<VertexId> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

CubeComplex CubeComplex::ball(const VertexId& center, int radius, std::size_t cap) const {
  std::vector<VertexId> verts = ball_vertices(center, radius, cap);
  std::unordered_set<VertexId, VertexIdHash> inside(verts.begin(), verts.end());
  std::vector<std::string> names;
  names.reserve(verts.size());
  for (const VertexId& v : verts) names.push_back(vertex_name(v));
  std::vector<std::pair<std::string, std::string>> edge_names;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (const VertexId& n : impl_->neighbors(verts[i])) {
      if (verts[i] < n && inside.count(n)) edge_names.emplace_back(names[i], vertex_name(n));
    }
  }
  return CubeComplex::finite(std::move(names), std::move(edge_names), /*check_median=*/false);
}

int CubeComplex::rank() const {
  if (kind() != Kind::Lattice) {
    throw Error(Errc::InvalidArguments, "rank() requires a lattice backend");
  }
  return static_cast<const detail::LatticeBackend&>(*impl_).rank();
}

const CubeComplex& CubeComplex::factor(int i) const {
  if (kind() != Kind::Product) {
    throw Error(Errc::InvalidArguments, "factor() requires a product backend");
  }
  const auto& pb = static_cast<const detail::ProductBackend&>(*impl_);
  if (i == 0) return pb.left();
  if (i == 1) return pb.right();
  throw Error(Errc::InvalidArguments, "factor index must be 0 or 1");
}

bool CubeComplex::same_structure(const CubeComplex& other) const {
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Lattice:
      return rank() == other.rank();
    case Kind::Product:
      return factor(0).same_structure(other.factor(0)) && factor(1).same_structure(other.factor(1));
    case Kind::Finite: {
      const auto& a = finite_backend(*this);
      const auto& b = finite_backend(other);
      if (a.vertex_count() != b.vertex_count()) return false;
      for (const VertexId& v : a.vertices()) {
        if (a.name_of(v) != b.name_of(v)) return false;
      }
      return edges() == other.edges();
    }
  }
  return false;
}

CubeComplex lattice_window(int rank, std::int64_t lo, std::int64_t hi) {
  if (rank < 1 || hi < lo) throw Error(Errc::InvalidArguments, "bad lattice window");
  CubeComplex z = CubeComplex::lattice(rank);
  VertexId a(std::vector<std::int64_t>(rank, lo));
  VertexId b(std::vector<std::int64_t>(rank, hi));
  std::vector<VertexId> box = z.interval(a, b);
  std::vector<std::string> names;
  names.reserve(box.size());
  for (const VertexId& v : box) names.push_back(v.to_string());
  std::unordered_set<VertexId, VertexIdHash> inside(box.begin(), box.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (const VertexId& n : z.neighbors(box[i])) {
      if (box[i] < n && inside.count(n)) edges.emplace_back(names[i], n.to_string());
    }
  }
  return CubeComplex::finite(std::move(names), std::move(edges), /*check_median=*/true);
}

}  // namespace ccx
