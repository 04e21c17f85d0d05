#include <doctest.h>

#include <atomic>
#include <thread>

#include "helpers.hpp"

using namespace ccx;
using helpers::lat;

TEST_CASE("distance on the lattice is the L1 metric") {
  CubeComplex z2 = CubeComplex::lattice(2);
  CHECK(z2.distance(lat({0, 0}), lat({3, 2})) == 5);
  CHECK(z2.distance(lat({-4, 7}), lat({-4, 7})) == 0);
}

TEST_CASE("distance on a path") {
  CubeComplex p = helpers::path3();
  VertexId a = *p.vertex_by_name("a"), c = *p.vertex_by_name("c");
  CHECK(p.distance(a, c) == 2);
  CHECK(p.distance(a, a) == 0);
}

TEST_CASE("interval of a unit square and degenerate cases") {
  CubeComplex z2 = CubeComplex::lattice(2);
  auto box = z2.interval(lat({0, 0}), lat({1, 1}));
  CHECK(box == std::vector<VertexId>{lat({0, 0}), lat({0, 1}), lat({1, 0}), lat({1, 1})});
  CHECK(z2.interval(lat({2, 2}), lat({2, 2})) == std::vector<VertexId>{lat({2, 2})});

  CubeComplex p = helpers::path3();
  auto i = p.interval(*p.vertex_by_name("a"), *p.vertex_by_name("c"));
  CHECK(i.size() == 3);
}

TEST_CASE("geodesics are deterministic and canonical") {
  CubeComplex z2 = CubeComplex::lattice(2);
  auto straight = z2.geodesic(lat({0, 0}), lat({2, 0}));
  CHECK(straight == std::vector<VertexId>{lat({0, 0}), lat({1, 0}), lat({2, 0})});
  CHECK(z2.geodesic(lat({1, 1}), lat({1, 1})) == std::vector<VertexId>{lat({1, 1})});

  // Oracle: enumerate every geodesic (0,0) -> (1,1); there are exactly
  // two and the canonical tie-break selects the (0,1) route.
  auto all = helpers::all_geodesics(z2, lat({0, 0}), lat({1, 1}));
  CHECK(all.size() == 2);
  auto picked = z2.geodesic(lat({0, 0}), lat({1, 1}));
  CHECK(picked == std::vector<VertexId>{lat({0, 0}), lat({0, 1}), lat({1, 1})});
  CHECK(std::find(all.begin(), all.end(), picked) != all.end());
  CHECK(picked == z2.geodesic(lat({0, 0}), lat({1, 1})));
}

TEST_CASE("medians on the lattice are coordinatewise") {
  CubeComplex z2 = CubeComplex::lattice(2);
  CHECK(z2.median(lat({0, 0}), lat({2, 0}), lat({0, 2})) == lat({0, 0}));
  CHECK(z2.median(lat({0, 0}), lat({2, 2}), lat({2, 0})) == lat({2, 0}));
  CHECK(z2.median(lat({5, 1}), lat({5, 1}), lat({-3, 9})) == lat({5, 1}));
}

TEST_CASE("median graph verification accepts squares and rejects 6-cycles and triangles") {
  CHECK(helpers::square().verify_median_graph().ok());

  CubeComplex c6 = helpers::cycle(6, /*check_median=*/false);
  MedianCheck check = c6.verify_median_graph();
  REQUIRE_FALSE(check.ok());
  // Oracle: first violating triple in canonical order by direct scan.
  auto expected = helpers::first_median_violation(c6);
  REQUIRE(expected.has_value());
  CHECK(*check.violation == *expected);

  CubeComplex k3 = helpers::triangle(/*check_median=*/false);
  MedianCheck tri = k3.verify_median_graph();
  REQUIRE_FALSE(tri.ok());
  CHECK(*tri.violation == *helpers::first_median_violation(k3));
}

TEST_CASE("non-median input is rejected at load unless unchecked") {
  CHECK_THROWS_AS(helpers::cycle(6, /*check_median=*/true), Error);
  CHECK_NOTHROW(helpers::cycle(6, /*check_median=*/false));
}

TEST_CASE("median violation error is reachable only on unchecked input") {
  CubeComplex c6 = helpers::cycle(6, /*check_median=*/false);
  bool threw = false;
  try {
    // The antipodal triple of the 6-cycle has no median.
    c6.median(*c6.vertex_by_name("c0"), *c6.vertex_by_name("c2"), *c6.vertex_by_name("c4"));
  } catch (const Error& e) {
    threw = e.code() == Errc::MedianViolation;
  }
  CHECK(threw);
}

TEST_CASE("cube enumeration of the single square") {
  CubeComplex sq = helpers::square();
  const auto& cubes = sq.cubes();
  int count0 = 0, count1 = 0, count2 = 0;
  for (const Cube& c : cubes) {
    if (c.dimension() == 0) ++count0;
    if (c.dimension() == 1) ++count1;
    if (c.dimension() == 2) ++count2;
  }
  CHECK(count0 == 4);
  CHECK(count1 == 4);
  CHECK(count2 == 1);
  CHECK(sq.dimension() == 2);
}

TEST_CASE("trees have dimension one and no squares") {
  CubeComplex t = helpers::uniform_tree(3, 3);
  for (const Cube& c : t.cubes()) CHECK(c.dimension() <= 1);
  CHECK(t.dimension() == 1);
}

TEST_CASE("the unit window of Z^3 holds one 3-cube") {
  CubeComplex w = lattice_window(3, 0, 1);
  CHECK(w.dimension() == 3);
  int count3 = 0;
  for (const Cube& c : w.cubes()) {
    if (c.dimension() == 3) ++count3;
  }
  CHECK(count3 == 1);
  CHECK(w.vertex_count() == 8);
}

TEST_CASE("cubes on infinite backends need a window") {
  CubeComplex z3 = CubeComplex::lattice(3);
  CHECK_THROWS_AS(z3.cubes(), Error);
  auto window = z3.interval(lat({0, 0, 0}), lat({1, 1, 1}));
  int count3 = 0;
  for (const Cube& c : z3.cubes_in(window)) {
    if (c.dimension() == 3) ++count3;
  }
  CHECK(count3 == 1);
}

TEST_CASE("balls count vertices exactly") {
  CubeComplex z2 = CubeComplex::lattice(2);
  CHECK(z2.ball_vertices(lat({0, 0}), 1).size() == 5);
  CHECK(z2.ball_vertices(lat({0, 0}), 0).size() == 1);

  // Oracle: direct count on the 3-regular depth-3 tree, radius 2 from
  // the root = 1 + 3 + 6.
  CubeComplex t = helpers::uniform_tree(3, 3);
  VertexId root = *t.vertex_by_name("n0");
  std::size_t direct = 0;
  for (const VertexId& v : t.vertices()) {
    if (t.distance(root, v) <= 2) ++direct;
  }
  CHECK(direct == 10);
  CHECK(t.ball_vertices(root, 2).size() == 10);
  CHECK(t.ball(root, 2).vertex_count() == 10);
}

TEST_CASE("ball cap raises BudgetExceeded") {
  CubeComplex z2 = CubeComplex::lattice(2);
  CHECK_THROWS_AS(z2.ball_vertices(lat({0, 0}), 50, 10), Error);
}

TEST_CASE("lattice and product structural answers match the explicit window") {
  CubeComplex z2 = CubeComplex::lattice(2);
  CubeComplex w = lattice_window(2, 0, 3);
  // The window's canonical order equals the box enumeration order.
  auto box = z2.interval(lat({0, 0}), lat({3, 3}));
  REQUIRE(w.vertex_count() == box.size());
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (std::size_t j = 0; j < box.size(); ++j) {
      CHECK(w.distance(w.vertices()[i], w.vertices()[j]) == z2.distance(box[i], box[j]));
    }
  }
  CHECK(w.dimension() == z2.dimension());

  // Product of two paths vs the explicit product graph.
  CubeComplex p = helpers::path3();
  CubeComplex prod = CubeComplex::product(p, p);
  CHECK(prod.dimension() == 2);
  std::vector<VertexId> window;
  for (const VertexId& a : p.vertices()) {
    for (const VertexId& b : p.vertices()) {
      window.push_back(VertexId({a.coords()[0], b.coords()[0]}));
    }
  }
  CubeComplex grid = lattice_window(2, 0, 2);  // the 3x3 grid is the same graph
  for (const VertexId& u : window) {
    for (const VertexId& v : window) {
      CHECK(prod.distance(u, v) ==
            grid.distance(*grid.vertex_by_name(u.to_string()), *grid.vertex_by_name(v.to_string())));
    }
  }
}

TEST_CASE("intervals are closed under medians") {
  CubeComplex z2 = CubeComplex::lattice(2);
  auto box = z2.interval(lat({0, 0}), lat({2, 2}));
  std::set<VertexId> inside(box.begin(), box.end());
  for (const VertexId& u : box) {
    for (const VertexId& w : box) {
      for (const VertexId& z : box) {
        CHECK(inside.count(z2.median(u, w, z)) == 1);
      }
    }
  }
}

namespace {

// Brute-force hypercube count: test every vertex subset of size 2^k for
// induced isomorphism with Q_k via permutation search over the subset.
std::size_t brute_force_cube_count(const ccx::CubeComplex& x, int k) {
  using ccx::VertexId;
  const auto& vs = x.vertices();
  const std::size_t size = std::size_t{1} << k;
  std::vector<std::size_t> pick;
  std::size_t found = 0;
  // Q_k adjacency on bitmask labels.
  auto q_adjacent = [&](std::size_t a, std::size_t b) {
    std::size_t d = a ^ b;
    return d && !(d & (d - 1));
  };
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (pick.size() == size) {
      // Try every assignment of labels to the picked vertices.
      std::vector<std::size_t> perm(size);
      for (std::size_t i = 0; i < size; ++i) perm[i] = i;
      do {
        bool ok = true;
        for (std::size_t i = 0; i < size && ok; ++i) {
          for (std::size_t j = i + 1; j < size && ok; ++j) {
            bool adj = x.distance(vs[pick[i]], vs[pick[j]]) == 1;
            if (adj != q_adjacent(perm[i], perm[j])) ok = false;
          }
        }
        if (ok) {
          ++found;
          return;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (std::size_t i = from; i < vs.size(); ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return found;
}

}  // namespace

TEST_CASE("cube enumeration matches the brute-force subset oracle") {
  // Small cases keep the subset search tractable.
  CubeComplex w = lattice_window(2, 0, 2);
  // L-shaped grid region: three squares sharing a corner column.
  CubeComplex ell = CubeComplex::finite(
      {"00", "10", "20", "01", "11", "21", "02", "12"},
      {{"00", "10"}, {"10", "20"}, {"01", "11"}, {"11", "21"}, {"02", "12"},
       {"00", "01"}, {"01", "02"}, {"10", "11"}, {"11", "12"}, {"20", "21"}});
  for (const CubeComplex* x : {&w, &ell}) {
    std::map<int, std::size_t> counted;
    for (const Cube& c : x->cubes()) counted[c.dimension()] += 1;
    CHECK(counted[0] == x->vertex_count());
    CHECK(counted[1] == x->edges().size());
    for (int k = 2; k <= 3; ++k) {
      CHECK(counted[k] == brute_force_cube_count(*x, k));
    }
  }
}

TEST_CASE("verified complexes never raise on medians") {
  for (std::uint64_t seed : {3ull, 4ull}) {
    CubeComplex x = parse_complex(generate_complex(seed, Family::Staircase));
    REQUIRE(x.verify_median_graph().ok());
    if (x.vertex_count() > 16) continue;
    for (const VertexId& a : x.vertices()) {
      for (const VertexId& b : x.vertices()) {
        for (const VertexId& c : x.vertices()) {
          CHECK_NOTHROW(x.median(a, b, c));
        }
      }
    }
  }
}

TEST_CASE("pure reads are safe from concurrent threads") {
  CubeComplex w = lattice_window(2, 0, 4);
  std::atomic<int> failures{0};
  auto worker = [&] {
    for (int rep = 0; rep < 50; ++rep) {
      for (const VertexId& u : w.vertices()) {
        if (w.distance(w.vertices()[0], u) > 8) failures.fetch_add(1);
      }
      if (w.cubes().empty()) failures.fetch_add(1);
      if (w.dimension() != 2) failures.fetch_add(1);
    }
  };
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  CHECK(failures.load() == 0);
}
