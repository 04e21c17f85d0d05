#include <doctest.h>

#include "helpers.hpp"

using namespace ccx;
using helpers::lat;
using helpers::lattice_wall;

TEST_CASE("theta relation on the lattice") {
  CubeComplex z2 = CubeComplex::lattice(2);
  OrientedEdge e(lat({0, 0}), lat({0, 1}));
  OrientedEdge f(lat({1, 0}), lat({1, 1}));
  OrientedEdge g(lat({0, 0}), lat({1, 0}));
  CHECK(theta_related(z2, e, f));
  CHECK_FALSE(theta_related(z2, e, g));
  CHECK(theta_related(z2, e, e));
  CHECK(theta_related(z2, e, e.reversed()));
}

TEST_CASE("hyperplane canonicalization") {
  CubeComplex z2 = CubeComplex::lattice(2);
  Hyperplane h = hyperplane_of(z2, OrientedEdge(lat({5, 3}), lat({6, 3})));
  CHECK(h == lattice_wall(z2, 0, 5));
  CHECK(hyperplane_to_json(z2, h) == json({{"axis", 0}, {"wall", 5}}));

  CubeComplex sq = helpers::square();
  auto v = [&](const char* n) { return *sq.vertex_by_name(n); };
  Hyperplane ab = hyperplane_of(sq, OrientedEdge(v("a"), v("b")));
  Hyperplane dc = hyperplane_of(sq, OrientedEdge(v("d"), v("c")));
  CHECK(ab == dc);
  // Idempotent on representatives.
  CHECK(hyperplane_of(sq, ab.representative()) == ab);
  CHECK(hyperplane_of(z2, h.representative()) == h);
}

TEST_CASE("hyperplanes between two vertices follow the geodesic") {
  CubeComplex z2 = CubeComplex::lattice(2);
  auto walls = hyperplanes_between(z2, lat({0, 0}), lat({2, 0}));
  REQUIRE(walls.size() == 2);
  CHECK(walls[0] == lattice_wall(z2, 0, 0));
  CHECK(walls[1] == lattice_wall(z2, 0, 1));
  CHECK(hyperplanes_between(z2, lat({1, 1}), lat({1, 1})).empty());

  CubeComplex p = helpers::path3();
  auto tree_walls = hyperplanes_between(p, *p.vertex_by_name("a"), *p.vertex_by_name("c"));
  CHECK(tree_walls.size() == 2);
  CHECK_FALSE(tree_walls[0] == tree_walls[1]);
}

TEST_CASE("halfspace sides") {
  CubeComplex z2 = CubeComplex::lattice(2);
  Hyperplane h = lattice_wall(z2, 0, 0);
  CHECK(side(z2, h, lat({3, 7})) == Side::Plus);
  CHECK(side(z2, h, h.representative().head) == Side::Plus);
  CHECK(side(z2, h, h.representative().tail) == Side::Minus);
  Halfspace plus{h, Side::Plus};
  CHECK(plus.complement().complement() == plus);
}

TEST_CASE("crossing predicate on lattice, tree and finite windows") {
  CubeComplex z2 = CubeComplex::lattice(2);
  CHECK(crosses(z2, lattice_wall(z2, 0, 0), lattice_wall(z2, 1, 0)));
  CHECK_FALSE(crosses(z2, lattice_wall(z2, 0, 0), lattice_wall(z2, 0, 3)));

  CubeComplex tree = helpers::uniform_tree(3, 2);
  auto walls = all_hyperplanes(tree);
  for (std::size_t i = 0; i < walls.size(); ++i) {
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      CHECK_FALSE(crosses(tree, walls[i], walls[j]));
    }
  }

  // Against the brute-force oracle on a finite window.
  CubeComplex w = lattice_window(2, 0, 3);
  auto wh = all_hyperplanes(w);
  REQUIRE(wh.size() == 6);
  for (std::size_t i = 0; i < wh.size(); ++i) {
    for (std::size_t j = i + 1; j < wh.size(); ++j) {
      CHECK(crosses(w, wh[i], wh[j]) == brute_force_crosses(w, wh[i], wh[j]));
    }
  }
}

TEST_CASE("crossing agrees with the brute-force oracle on generated corpora") {
  // The contract pins crosses() to the all-vertex quadrant scan.
  for (std::uint64_t seed = 100; seed < 109; ++seed) {
    Family family = static_cast<Family>(seed % 3);
    CubeComplex x = parse_complex(generate_complex(seed, family));
    if (x.vertex_count() > 40) continue;
    auto walls = all_hyperplanes(x);
    for (std::size_t i = 0; i < walls.size(); ++i) {
      for (std::size_t j = i + 1; j < walls.size(); ++j) {
        CHECK(crosses(x, walls[i], walls[j]) == brute_force_crosses(x, walls[i], walls[j]));
      }
    }
  }
}

TEST_CASE("a disjoint triple may have no separating member") {
  // The three root edges of a tripod are pairwise disjoint but none
  // separates the other two.
  CubeComplex tree = helpers::uniform_tree(3, 2);
  auto walls = all_hyperplanes(tree);
  std::vector<Hyperplane> roots(walls.begin(), walls.begin() + 3);
  auto triple = find_disjoint_triple(tree, roots);
  REQUIRE(triple.has_value());
  std::set<Hyperplane> got(triple->hyperplanes.begin(), triple->hyperplanes.end());
  if (got == std::set<Hyperplane>(roots.begin(), roots.end())) {
    CHECK_FALSE(triple->separator.has_value());
  }
}

TEST_CASE("crossing is symmetric") {
  CubeComplex w = lattice_window(2, 0, 2);
  auto wh = all_hyperplanes(w);
  for (std::size_t i = 0; i < wh.size(); ++i) {
    for (std::size_t j = i + 1; j < wh.size(); ++j) {
      CHECK(crosses(w, wh[i], wh[j]) == crosses(w, wh[j], wh[i]));
    }
  }
}

TEST_CASE("product hyperplanes embed factor representatives") {
  CubeComplex pp = CubeComplex::product(CubeComplex::lattice(1), helpers::path3());
  Hyperplane left = hyperplane_of(pp, OrientedEdge(VertexId({3, 1}), VertexId({4, 1})));
  CHECK(left.representative().tail == VertexId({3, 0}));
  CHECK(left.representative().head == VertexId({4, 0}));
  Hyperplane right = hyperplane_of(pp, OrientedEdge(VertexId({-2, 0}), VertexId({-2, 1})));
  CHECK(right.representative().tail == VertexId({0, 0}));
  CHECK(right.representative().head == VertexId({0, 1}));

  // Different factors always cross; same factor recurses.
  CHECK(crosses(pp, left, right));
  Hyperplane left2 = hyperplane_of(pp, OrientedEdge(VertexId({0, 2}), VertexId({1, 2})));
  CHECK_FALSE(crosses(pp, left, left2));

  CHECK(side(pp, left, VertexId({10, 2})) == Side::Plus);
  CHECK(side(pp, left, VertexId({0, 0})) == Side::Minus);
  CHECK(separates(pp, left2, hyperplane_of(pp, OrientedEdge(VertexId({-1, 0}), VertexId({0, 0}))),
                  left));
}

TEST_CASE("separation of parallel walls") {
  CubeComplex z1 = CubeComplex::lattice(1);
  Hyperplane w0 = lattice_wall(z1, 0, 0), w1 = lattice_wall(z1, 0, 1), w2 = lattice_wall(z1, 0, 2);
  CHECK(separates(z1, w1, w0, w2));
  CHECK_FALSE(separates(z1, w0, w1, w2));
  CHECK(separates(z1, w1, w0, w2) == separates(z1, w1, w2, w0));

  CubeComplex z2 = CubeComplex::lattice(2);
  CHECK(separates(z2, lattice_wall(z2, 0, 5), lattice_wall(z2, 0, 0), lattice_wall(z2, 0, 9)));

  // Crossing inputs violate the precondition.
  bool threw = false;
  try {
    separates(z2, lattice_wall(z2, 0, 0), lattice_wall(z2, 1, 0), lattice_wall(z2, 0, 5));
  } catch (const Error& e) {
    threw = e.code() == Errc::PreconditionViolated;
  }
  CHECK(threw);
}

TEST_CASE("at most one wall of a disjoint triple separates the other two") {
  // Tripod: three disjoint edge-walls, none separating.
  CubeComplex tripod = CubeComplex::finite({"o", "a", "b", "c"}, {{"o", "a"}, {"o", "b"}, {"o", "c"}});
  auto walls = all_hyperplanes(tripod);
  REQUIRE(walls.size() == 3);
  int separating = 0;
  for (int i = 0; i < 3; ++i) {
    if (separates(tripod, walls[i], walls[(i + 1) % 3], walls[(i + 2) % 3])) ++separating;
  }
  CHECK(separating == 0);

  CubeComplex z1 = CubeComplex::lattice(1);
  separating = 0;
  std::array<Hyperplane, 3> line_walls{lattice_wall(z1, 0, 0), lattice_wall(z1, 0, 1),
                                       lattice_wall(z1, 0, 2)};
  for (int i = 0; i < 3; ++i) {
    if (separates(z1, line_walls[i], line_walls[(i + 1) % 3], line_walls[(i + 2) % 3])) {
      ++separating;
    }
  }
  CHECK(separating == 1);
}

TEST_CASE("greedy maximal pairwise-intersecting set") {
  CubeComplex z2 = CubeComplex::lattice(2);
  std::vector<Hyperplane> s{lattice_wall(z2, 0, 0), lattice_wall(z2, 1, 0), lattice_wall(z2, 0, 1)};
  auto t = max_pairwise_intersecting(z2, s);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == lattice_wall(z2, 0, 0));
  CHECK(t[1] == lattice_wall(z2, 1, 0));

  CubeComplex tree = helpers::uniform_tree(3, 2);
  auto tw = all_hyperplanes(tree);
  auto tt = max_pairwise_intersecting(tree, tw);
  REQUIRE(tt.size() == 1);
  CHECK(tt[0] == tw[0]);

  CHECK(max_pairwise_intersecting(z2, std::vector<Hyperplane>{}).empty());

  // The output crosses pairwise per the brute-force oracle and respects
  // the dimension bound.
  CubeComplex w = lattice_window(2, 0, 3);
  auto wh = all_hyperplanes(w);
  auto wt = max_pairwise_intersecting(w, wh);
  CHECK(static_cast<int>(wt.size()) <= w.dimension());
  for (std::size_t i = 0; i < wt.size(); ++i) {
    for (std::size_t j = i + 1; j < wt.size(); ++j) {
      CHECK(brute_force_crosses(w, wt[i], wt[j]));
    }
  }
}

TEST_CASE("bucket map q") {
  CubeComplex z2 = CubeComplex::lattice(2);
  std::vector<Hyperplane> s{lattice_wall(z2, 0, 0), lattice_wall(z2, 1, 0), lattice_wall(z2, 0, 1),
                            lattice_wall(z2, 0, 2)};
  std::vector<Hyperplane> t{lattice_wall(z2, 0, 0), lattice_wall(z2, 1, 0)};
  auto q = bucket_map_q(z2, s, t);
  REQUIRE(q.size() == 2);
  CHECK(q[0].first == lattice_wall(z2, 0, 1));
  CHECK(q[0].second == 1);
  CHECK(q[1].first == lattice_wall(z2, 0, 2));
  CHECK(q[1].second == 1);

  CHECK(bucket_map_q(z2, t, t).empty());

  CubeComplex tree = helpers::uniform_tree(3, 2);
  auto tw = all_hyperplanes(tree);
  std::vector<Hyperplane> s3(tw.begin(), tw.begin() + 3);
  std::vector<Hyperplane> t1{s3[0]};
  auto qt = bucket_map_q(tree, s3, t1);
  REQUIRE(qt.size() == 2);
  CHECK(qt[0].second == 1);
  CHECK(qt[1].second == 1);
}

TEST_CASE("disjoint triples on a tree at the d=1 threshold") {
  CubeComplex tree = helpers::uniform_tree(3, 2);
  REQUIRE(tree.dimension() == 1);
  CHECK(disjoint_triple_threshold(1) == 3);
  auto tw = all_hyperplanes(tree);
  std::vector<Hyperplane> s(tw.begin(), tw.begin() + 3);
  auto triple = find_disjoint_triple(tree, s);
  REQUIRE(triple.has_value());
  std::set<Hyperplane> got(triple->hyperplanes.begin(), triple->hyperplanes.end());
  CHECK(got == std::set<Hyperplane>(s.begin(), s.end()));
}

TEST_CASE("disjoint triple pipeline on eight lattice walls") {
  CubeComplex z2 = CubeComplex::lattice(2);
  CHECK(disjoint_triple_threshold(2) == 8);
  std::vector<Hyperplane> s;
  for (int c = 0; c < 4; ++c) s.push_back(lattice_wall(z2, 0, c));
  for (int c = 0; c < 4; ++c) s.push_back(lattice_wall(z2, 1, c));

  // Oracle: among all C(8,3) triples, the pairwise non-crossing ones are
  // exactly the 8 one-axis (parallel) triples.
  std::size_t disjoint_triples = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      for (std::size_t k = j + 1; k < s.size(); ++k) {
        if (!crosses(z2, s[i], s[j]) && !crosses(z2, s[i], s[k]) && !crosses(z2, s[j], s[k])) {
          ++disjoint_triples;
        }
      }
    }
  }
  CHECK(disjoint_triples == 8);

  auto triple = find_disjoint_triple(z2, s);
  REQUIRE(triple.has_value());
  // Pipeline trace: T = [x0, y0]; bucket 1 = [x1, x2, x3]; first
  // non-crossing pair = (x1, x2); triple = (x0, x1, x2).
  CHECK(triple->hyperplanes[0] == lattice_wall(z2, 0, 0));
  CHECK(triple->hyperplanes[1] == lattice_wall(z2, 0, 1));
  CHECK(triple->hyperplanes[2] == lattice_wall(z2, 0, 2));
  REQUIRE(triple->separator.has_value());
  CHECK(triple->hyperplanes[*triple->separator] == lattice_wall(z2, 0, 1));
}

TEST_CASE("below threshold the pipeline may return NotFound") {
  CubeComplex z2 = CubeComplex::lattice(2);
  std::vector<Hyperplane> s{lattice_wall(z2, 0, 0), lattice_wall(z2, 1, 0)};
  CHECK_FALSE(find_disjoint_triple(z2, s).has_value());
}

TEST_CASE("helly common cubes") {
  CubeComplex sq = helpers::square();
  auto walls = all_hyperplanes(sq);
  REQUIRE(walls.size() == 2);
  Cube both = helly_common_cube(sq, walls);
  CHECK(both.dimension() == 2);
  CHECK(both.vertices().size() == 4);

  std::vector<Hyperplane> single{walls[0]};
  Cube edge = helly_common_cube(sq, single);
  CHECK(edge.dimension() == 1);
  auto duals = dual_hyperplanes(sq, edge);
  REQUIRE(duals.size() == 1);
  CHECK(duals[0] == walls[0]);

  CubeComplex w = lattice_window(3, 0, 1);
  auto ww = all_hyperplanes(w);
  REQUIRE(ww.size() == 3);
  Cube c3 = helly_common_cube(w, ww);
  CHECK(c3.dimension() == 3);
  CHECK(c3.vertices().size() == 8);
}

TEST_CASE("member edges are co-oriented with the representative") {
  CubeComplex w = lattice_window(2, 0, 2);
  for (const Hyperplane& h : all_hyperplanes(w)) {
    auto members = member_edges(w, h);
    CHECK(members.size() == 3);  // a wall of the 3x3 grid has 3 edges
    for (const OrientedEdge& e : members) {
      // Co-orientation: tails on the minus side, heads on the plus side.
      CHECK(side(w, h, e.tail) == Side::Minus);
      CHECK(side(w, h, e.head) == Side::Plus);
    }
  }
}

TEST_CASE("separation count equals distance on a finite window") {
  CubeComplex w = lattice_window(2, 0, 3);
  auto walls = all_hyperplanes(w);
  const auto& vs = w.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      std::int64_t separating = 0;
      for (const Hyperplane& h : walls) {
        if (side(w, h, vs[i]) != side(w, h, vs[j])) ++separating;
      }
      CHECK(separating == w.distance(vs[i], vs[j]));
      CHECK(hyperplanes_between(w, vs[i], vs[j]).size() ==
            static_cast<std::size_t>(w.distance(vs[i], vs[j])));
    }
  }
}
