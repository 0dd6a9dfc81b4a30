#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "latticeflow/triang.hpp"

using namespace lf;
using namespace lft;

namespace {

PointConfiguration square() { return PointConfiguration(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}})); }

std::vector<ZVec> random_points(std::mt19937& rng, int dim, int count, int range) {
  std::set<std::vector<long>> seen;
  std::vector<ZVec> out;
  std::uniform_int_distribution<long> d(0, range);
  while (static_cast<int>(out.size()) < count) {
    std::vector<long> p;
    for (int i = 0; i < dim; ++i) p.push_back(d(rng));
    if (!seen.insert(p).second) continue;
    ZVec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = p[static_cast<size_t>(i)];
    out.push_back(v);
  }
  return out;
}

PointConfiguration random_full_config(std::mt19937& rng, int dim, int count, int range) {
  for (;;) {
    PointConfiguration a(random_points(rng, dim, count, range));
    if (affine_dim(a, a.all()) == dim) return a;
  }
}

RatVector random_weights(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-1000000, 1000000);
  RatVector w(n);
  for (int i = 0; i < n; ++i) w(i) = Rational(d(rng), 997);
  return w;
}

}  // namespace

TEST_SUITE("triang") {
  TEST_CASE("trivial subdivision") {
    PointConfiguration simplex(pts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(trivial_subdivision(simplex).maximal_cells() == std::vector<Subset>{{0, 1, 2}});
    CHECK(trivial_subdivision(square()).maximal_cells().size() == 1);
    PointConfiguration big(t_1_1_10());
    CHECK(trivial_subdivision(big).maximal_cells() == std::vector<Subset>{big.all()});
    CHECK(check_axioms(trivial_subdivision(square())));
  }

  TEST_CASE("pull") {
    PointConfiguration simplex(pts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(pull(trivial_subdivision(simplex), 0).maximal_cells().size() == 1);
    auto sq = pull(trivial_subdivision(square()), 0);
    CHECK(sq.maximal_cells() == std::vector<Subset>{{0, 1, 3}, {0, 2, 3}});
    CHECK(sq.is_triangulation());
    CHECK(is_refinement(sq, trivial_subdivision(square())));

    // Pulling an interior point cones it over the boundary.
    PointConfiguration centered(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}));
    auto c = pull(trivial_subdivision(centered), 4);
    CHECK(c.maximal_cells().size() == 4);
    CHECK(check_axioms(c));
  }

  TEST_CASE("pulling keeps the subdivision axioms") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
      int dim = 2 + it % 2;
      PointConfiguration a = random_full_config(rng, dim, dim + 2 + it % 4, 3);
      Subdivision d = trivial_subdivision(a);
      std::vector<int> order = a.all();
      std::shuffle(order.begin(), order.end(), rng);
      for (int k = 0; k < 3; ++k) {
        Subdivision next = pull(d, order[static_cast<size_t>(k)]);
        CHECK(check_axioms(next));
        CHECK(is_refinement(next, d));
        d = next;
      }
    }
  }

  TEST_CASE("pulling triangulations") {
    std::vector<int> order{0, 1, 2, 3};
    do {
      auto t = pulling_triangulation(square(), order);
      CHECK(t.maximal_cells().size() == 2);
      CHECK(is_unimodular_triangulation(t));
    } while (std::next_permutation(order.begin(), order.end()));

    PointConfiguration tri(lattice_points_of(pts({{0, 0}, {3, 0}, {3, 1}})));
    REQUIRE(tri.size() == 5);
    auto verts = faces(tri).vertices;
    bool bad = false;
    do {
      bad = bad || !is_unimodular_triangulation(pulling_triangulation(tri, verts));
    } while (std::next_permutation(verts.begin(), verts.end()));
    CHECK(bad);

    try {
      pulling_triangulation(tri, std::vector<int>{0, 1});
      FAIL("expected NotVertexOrder");
    } catch (const Error& e) {
      CHECK(e.code() == "NotVertexOrder");
    }

    std::mt19937 rng(17);
    for (int it = 0; it < 40; ++it) {
      PointConfiguration a = random_full_config(rng, 2 + it % 2, 6, 3);
      auto t = pulling_triangulation(a);
      CHECK(t.is_triangulation());
      CHECK(check_axioms(t));
      CHECK(relint_partition(t));
      CHECK(regularity_certificate(t).has_value());
    }
  }

  TEST_CASE("facet width one iff all pullings unimodular") {
    std::mt19937 rng(99);
    for (auto& pc : paco_corpus()) {
      PointConfiguration a(pc.points);
      CHECK_MESSAGE(facet_width_one(a) == all_pullings_unimodular(a, rng, 7, 40), pc.name);
    }
  }

  TEST_CASE("regular subdivisions") {
    auto [t0, c0] = regular_subdivision(square(), RatVector::Zero(4));
    CHECK(t0 == trivial_subdivision(square()));
    CHECK(verify_certificate(t0, c0));

    std::mt19937 rng(3);
    for (int it = 0; it < 40; ++it) {
      PointConfiguration a = random_full_config(rng, 2 + it % 2, 5 + it % 4, 4);
      auto [d, cert] = regular_subdivision(a, random_weights(rng, a.size()));
      CHECK(d.is_triangulation());
      CHECK(verify_certificate(d, cert));
      CHECK(check_axioms(d));
      CHECK(relint_partition(d));
    }

    // Two cells; the top middle point is used, the bottom middle one is not.
    PointConfiguration rect(pts({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}));
    RatVector w(6);
    w << 0, 5, 0, 2, 1, 0;
    auto [r, rc] = regular_subdivision(rect, w);
    CHECK(r.maximal_cells() == std::vector<Subset>{{0, 2, 5}, {0, 3, 4, 5}});
    CHECK(r.unused() == Subset{1});
    CHECK(check_axioms(r));
    CHECK(verify_certificate(r, rc));
  }

  TEST_CASE("regularity decision") {
    auto cert = regularity_certificate(trivial_subdivision(square()));
    REQUIRE(cert);
    CHECK(cert->weights.isZero());

    // Two nested triangles with the twisted triangulation of the three quadrilaterals.
    PointConfiguration m(pts({{0, 0}, {4, 0}, {0, 4}, {1, 1}, {2, 1}, {1, 2}}));
    const int A = 0, B = 1, C = 2, a = 3, b = 4, c = 5;
    Subdivision twisted(m, {{A, B, b}, {A, b, a}, {B, C, c}, {B, c, b}, {C, A, a}, {C, a, c}, {a, b, c}});
    CHECK(twisted.maximal_cells().size() == 7);
    CHECK(check_axioms(twisted));
    CHECK_FALSE(regularity_certificate(twisted).has_value());
    // Flipping one diagonal breaks the cyclic twist; that triangulation is regular.
    Subdivision coherent(m, {{A, B, a}, {B, a, b}, {B, C, b}, {C, b, c}, {A, C, a}, {C, a, c}, {a, b, c}});
    CHECK(check_axioms(coherent));
    CHECK(regularity_certificate(coherent).has_value());

    // A non-subdivision: overlapping cells are rejected by the axiom checker.
    Subdivision overlap(square(), {{0, 1, 3}, {0, 1, 2}});
    CHECK_FALSE(check_axioms(overlap));
  }

  TEST_CASE("certificate transport through pulls") {
    std::mt19937 rng(13);
    for (int it = 0; it < 30; ++it) {
      PointConfiguration a = random_full_config(rng, 2 + it % 2, 7, 3);
      RatVector w(a.size());
      std::uniform_int_distribution<int> d(0, 2);
      for (int i = 0; i < a.size(); ++i) w(i) = d(rng);
      auto [s, cert] = regular_subdivision(a, w);
      for (int v : faces(a).vertices) {
        Subdivision next = pull(s, v);
        auto c2 = pull_certificate(next, cert, v);
        CHECK(verify_certificate(next, c2));
        CHECK(is_refinement(next, s));
        s = next;
        cert = c2;
      }
    }
  }

  TEST_CASE("hyperplane refinement") {
    PointConfiguration seg(pts({{0}, {1}, {2}}));
    auto cut = hyperplane_refine(trivial_subdivision(seg), IntVector::Ones(1), 1);
    CHECK(cut.maximal_cells() == std::vector<Subset>{{0, 1}, {1, 2}});

    PointConfiguration sq2(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 0}}));
    IntVector ex = IntVector::Zero(2);
    ex(0) = 1;
    try {
      hyperplane_refine(trivial_subdivision(sq2), ex, 1);
      FAIL("expected CutNotRepresentable");
    } catch (const Error& e) {
      CHECK(e.code() == "CutNotRepresentable");
    }

    auto big = hyperplane_subdivision_flow(transport_polytope({{1, 1, 10}, {3, 3, 3, 3}}));
    CHECK(big.sub.maximal_cells().size() == 5);
    CHECK(verify_certificate(big.sub, big.cert));
    CHECK(check_axioms(big.sub));
    auto small = hyperplane_subdivision_flow(transport_polytope({{1, 1, 3}, {1, 1, 1, 2}}));
    CHECK(small.sub.maximal_cells().size() == 2);
    CHECK(verify_certificate(small.sub, small.cert));

    // A unimodular simplex has no interior hyperplane.
    auto one = hyperplane_subdivision(PointConfiguration(pts({{0, 0}, {1, 0}, {0, 1}})));
    CHECK(one.sub.maximal_cells().size() == 1);
  }

  TEST_CASE("pulling-refined flow triangulations") {
    DirectedGraph k4(4);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    std::vector<FlowPolytope> polys = {transport_polytope({{1, 1, 10}, {3, 3, 3, 3}}),
                                       transport_polytope({{1, 1, 3}, {1, 1, 1, 2}}),
                                       transport_polytope({{2, 2}, {1, 3}}),
                                       FlowPolytope(k4, z({-2, 0, 0, 2}), ZVec::Zero(6), std::vector<Capacity>(6, 2))};
    for (auto& p : polys) {
      auto h = hyperplane_subdivision_flow(p);
      auto t = pulling_refinement(h);
      CHECK(t.sub.is_triangulation());
      CHECK(is_unimodular_triangulation(t.sub));
      CHECK(verify_certificate(t.sub, t.cert));
      CHECK(is_refinement(t.sub, h.sub));
      CHECK(relint_partition(t.sub));
      CHECK(t.sub.unused().empty());
    }
  }

  TEST_CASE("unimodularity") {
    CHECK(is_unimodular_triangulation(pulling_triangulation(square())));
    PointConfiguration cube(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    Subdivision five(cube, {{0, 3, 5, 6}, {1, 0, 3, 5}, {2, 0, 3, 6}, {4, 0, 5, 6}, {7, 3, 5, 6}});
    CHECK(five.is_triangulation());
    CHECK(check_axioms(five));
    CHECK_FALSE(is_unimodular_triangulation(five));
    try {
      is_unimodular_triangulation(trivial_subdivision(square()));
      FAIL("expected NotATriangulation");
    } catch (const Error& e) {
      CHECK(e.code() == "NotATriangulation");
    }
  }

  TEST_CASE("minimal nonfaces") {
    auto sq = pull(trivial_subdivision(square()), 0);
    CHECK(minimal_nonfaces(sq) == std::vector<Subset>{{1, 2}});
    PointConfiguration simplex(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(minimal_nonfaces(trivial_subdivision(simplex)).empty());
    PointConfiguration seg(pts({{0}, {1}, {2}}));
    CHECK(minimal_nonfaces(Subdivision(seg, {{0, 2}})) == std::vector<Subset>{{1}});

    // Oracle: brute force over all subsets.
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
      PointConfiguration a = random_full_config(rng, 2 + it % 2, 6, 3);
      auto t = pulling_triangulation(a);
      std::vector<Subset> brute;
      const int n = a.size();
      auto is_face = [&](const Subset& s) {
        for (auto& c : t.maximal_cells())
          if (std::includes(c.begin(), c.end(), s.begin(), s.end())) return true;
        return false;
      };
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Subset s;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) s.push_back(i);
        if (is_face(s)) continue;
        bool minimal = true;
        for (size_t k = 0; k < s.size() && minimal; ++k) {
          Subset u = s;
          u.erase(u.begin() + static_cast<long>(k));
          minimal = u.empty() || is_face(u);
        }
        if (minimal) brute.push_back(s);
      }
      auto got = minimal_nonfaces(t, n);
      std::sort(got.begin(), got.end());
      std::sort(brute.begin(), brute.end());
      CHECK(got == brute);
    }
  }
}
