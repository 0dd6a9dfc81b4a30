#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "latticeflow/flowpoly.hpp"

using namespace lf;
using namespace lft;

namespace {

DirectedGraph k4_acyclic() {
  DirectedGraph g(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
  return g;
}

std::vector<Capacity> caps(std::initializer_list<long> xs) {
  std::vector<Capacity> u;
  for (long x : xs) u.push_back(x < 0 ? Capacity{} : Capacity{x});
  return u;
}

// Recompute both sides of the cut inequality directly from U.
void check_cut(const FlowPolytope& p, const CutCertificate& c) {
  const DirectedGraph& g = p.graph();
  std::set<int> U(c.U.begin(), c.U.end());
  Integer cap = 0, dem = 0;
  for (int v : U) dem += p.demand()(v);
  for (int e = 0; e < g.num_edges(); ++e) {
    bool t = U.count(g.edge(e).tail), h = U.count(g.edge(e).head);
    bool enter = c.mirrored ? (t && !h) : (h && !t);
    bool leave = c.mirrored ? (h && !t) : (t && !h);
    if (enter) {
      REQUIRE(p.upper()[static_cast<size_t>(e)].has_value());
      cap += *p.upper()[static_cast<size_t>(e)];
    }
    if (leave) cap -= p.lower()(e);
  }
  if (c.mirrored) dem = -dem;
  CHECK(cap == c.capacity_side);
  CHECK(dem == c.demand_side);
  CHECK(c.demand_side > c.capacity_side);
}

// Naive oracle: every vector in the bounding box, filtered by membership.
std::vector<ZVec> box_points(const FlowPolytope& p) {
  const int ne = p.num_edges();
  std::vector<ZVec> out;
  ZVec f = p.lower();
  for (;;) {
    if (p.contains(f)) out.push_back(f);
    int e = ne - 1;
    while (e >= 0 && f(e) == p.upper_bound(e)) {
      f(e) = p.lower()(e);
      --e;
    }
    if (e < 0) break;
    ++f(e);
  }
  return out;
}

long box_size(const FlowPolytope& p) {
  long s = 1;
  for (int e = 0; e < p.num_edges(); ++e) s *= p.upper_bound(e) - p.lower()(e) + 1;
  return s;
}

DirectedGraph random_graph(std::mt19937& rng, int nv, int ne, bool acyclic) {
  DirectedGraph g(nv);
  std::uniform_int_distribution<int> pick(0, nv - 1);
  while (g.num_edges() < ne) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (acyclic && a > b) std::swap(a, b);
    g.add_edge(a, b);
  }
  return g;
}

// A random polytope, guaranteed nonempty when `nonempty` is set (d from a random flow).
FlowPolytope random_polytope(std::mt19937& rng, bool nonempty) {
  std::uniform_int_distribution<int> nvd(2, 4), ned(2, 6), coin(0, 3);
  for (;;) {
    int nv = nvd(rng), ne = ned(rng);
    DirectedGraph g = random_graph(rng, nv, ne, false);
    ZVec l = random_vec(rng, ne, 0, 1);
    std::vector<Capacity> u;
    for (int e = 0; e < ne; ++e) u.push_back(l(e) + coin(rng));
    ZVec d;
    if (nonempty) {
      ZVec f(ne);
      for (int e = 0; e < ne; ++e) f(e) = std::uniform_int_distribution<long>(l(e), *u[static_cast<size_t>(e)])(rng);
      d = net_flow(g, f);
    } else {
      d = random_vec(rng, nv, -2, 2);
      d(nv - 1) -= d.sum();
    }
    if (!d.isZero()) return FlowPolytope(g, d, l, u);
  }
}

int points_rank(const std::vector<ZVec>& pts) {
  if (pts.size() < 2) return 0;
  IntMatrix m(static_cast<Eigen::Index>(pts.size() - 1), pts[0].size());
  for (size_t i = 1; i < pts.size(); ++i) m.row(static_cast<Eigen::Index>(i - 1)) = cast_vec<Integer>(ZVec(pts[i] - pts[0])).transpose();
  return static_cast<int>(rank(m));
}

std::vector<ZVec> sorted(std::vector<ZVec> v) {
  std::sort(v.begin(), v.end(), [](const ZVec& a, const ZVec& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  });
  return v;
}

}  // namespace

TEST_SUITE("flowpoly") {
  TEST_CASE("construction errors") {
    DirectedGraph g(2);
    g.add_edge(0, 1);
    CHECK_THROWS_WITH_AS(FlowPolytope(g, z({0, 0}), z({0}), caps({1})), doctest::Contains("d = 0"), Error);
    try {
      FlowPolytope(g, z({-1, 1}), z({2}), caps({1}));
      FAIL("expected BoundViolation");
    } catch (const Error& e) {
      CHECK(e.code() == "BoundViolation");
    }
    DirectedGraph cyc(2);
    cyc.add_edge(0, 1);
    cyc.add_edge(1, 0);
    try {
      FlowPolytope(cyc, z({-1, 1}), z({0, 0}), caps({-1, 1}));
      FAIL("expected InfiniteCapacityOnCycle");
    } catch (const Error& e) {
      CHECK(e.code() == "InfiniteCapacityOnCycle");
    }
    try {
      FlowPolytope(g, z({-1, 1, 0}), z({0}), caps({1}));
      FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == "DimensionMismatch");
    }
  }

  TEST_CASE("feasible flow examples") {
    DirectedGraph g(2);
    g.add_edge(0, 1);
    auto r = feasible_flow(FlowPolytope(g, z({-1, 1}), z({0}), caps({1})));
    REQUIRE(std::holds_alternative<ZVec>(r));
    CHECK(std::get<ZVec>(r) == z({1}));

    FlowPolytope tight(g, z({-2, 2}), z({0}), caps({1}));
    auto c = feasible_flow(tight);
    REQUIRE(std::holds_alternative<CutCertificate>(c));
    const auto& cut = std::get<CutCertificate>(c);
    CHECK(cut.U == Subset{1});
    CHECK(cut.capacity_side == 1);
    CHECK(cut.demand_side == 2);
    check_cut(tight, cut);

    FlowPolytope unbalanced(g, z({-1, 2}), z({0}), caps({5}));
    auto ub = feasible_flow(unbalanced);
    REQUIRE(std::holds_alternative<CutCertificate>(ub));
    check_cut(unbalanced, std::get<CutCertificate>(ub));
    FlowPolytope unbalanced2(g, z({-2, 1}), z({0}), caps({5}));
    auto ub2 = feasible_flow(unbalanced2);
    REQUIRE(std::holds_alternative<CutCertificate>(ub2));
    CHECK(std::get<CutCertificate>(ub2).mirrored);
    check_cut(unbalanced2, std::get<CutCertificate>(ub2));

    auto t = transport_polytope({{1, 1, 10}, {3, 3, 3, 3}});
    auto tf = feasible_flow(t);
    REQUIRE(std::holds_alternative<ZVec>(tf));
    CHECK(t.contains(std::get<ZVec>(tf)));
  }

  TEST_CASE("feasible flow agrees with the box oracle") {
    std::mt19937 rng(11);
    int feasible = 0, infeasible = 0;
    for (int it = 0; it < 300; ++it) {
      FlowPolytope p = random_polytope(rng, it % 3 == 0);
      bool oracle = !box_points(p).empty();
      auto r = feasible_flow(p);
      if (std::holds_alternative<ZVec>(r)) {
        CHECK(oracle);
        CHECK(p.contains(std::get<ZVec>(r)));
        ++feasible;
      } else {
        CHECK_FALSE(oracle);
        check_cut(p, std::get<CutCertificate>(r));
        ++infeasible;
      }
    }
    CHECK(feasible > 30);
    CHECK(infeasible > 30);
  }

  TEST_CASE("enumeration of the 3x4 examples") {
    auto big = enumerate_lattice_points(transport_polytope({{1, 1, 10}, {3, 3, 3, 3}}));
    auto expect = t_1_1_10();
    std::reverse(expect.begin(), expect.end());
    CHECK(big == expect);

    auto small = enumerate_lattice_points(transport_polytope({{1, 1, 3}, {1, 1, 1, 2}}));
    auto expect13 = t_1_1_3();
    std::reverse(expect13.begin(), expect13.end());
    CHECK(small == expect13);

    // The smaller polytope is a translate of T(1,1,6 | 2,2,2,2).
    auto shifted = enumerate_lattice_points(transport_polytope({{1, 1, 6}, {2, 2, 2, 2}}));
    REQUIRE(shifted.size() == 16);
    ZVec ones = flat({{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 1, 1, 1}});
    for (size_t i = 0; i < 16; ++i) CHECK(ZVec(shifted[i] + ones) == big[i]);
  }

  TEST_CASE("enumeration agrees with the box oracle") {
    std::mt19937 rng(5);
    for (int it = 0; it < 150; ++it) {
      FlowPolytope p = random_polytope(rng, it % 2 == 0);
      REQUIRE(box_size(p) <= 1000000);
      auto pts = enumerate_lattice_points(p);
      CHECK(pts == box_points(p));
      CHECK(pts == sorted(pts));
      for (int stride : {2, 3, 100}) CHECK(enumerate_lattice_points(p, {stride, 0}) == pts);
    }
    // Unbounded capacities on an acyclic graph.
    for (int it = 0; it < 60; ++it) {
      DirectedGraph g = random_graph(rng, 4, 5, true);
      ZVec d = random_vec(rng, 4, -2, 2);
      d(3) -= d.sum();
      if (d.isZero()) continue;
      FlowPolytope p(g, d, ZVec::Zero(5), std::vector<Capacity>(5));
      CHECK(enumerate_lattice_points(p) == box_points(p));
    }
  }

  TEST_CASE("enumeration guard") {
    auto p = transport_polytope({{1, 1, 10}, {3, 3, 3, 3}});
    try {
      enumerate_lattice_points(p, {1, 10});
      FAIL("expected GuardExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == "GuardExceeded");
    }
    CHECK(enumerate_lattice_points(p, {1, 16}).size() == 16);
  }

  TEST_CASE("dimension") {
    auto t = transport_polytope({{1, 1, 10}, {3, 3, 3, 3}});
    auto rep = dimension(t);
    CHECK(rep.dim == 6);
    CHECK(rep.bound == 6);
    CHECK(rep.maximal);

    DirectedGraph g(2);
    g.add_edge(0, 1);
    CHECK(dimension(FlowPolytope(g, z({-1, 1}), z({0}), caps({3}))).dim == 0);
    try {
      dimension(FlowPolytope(g, z({-2, 2}), z({0}), caps({1})));
      FAIL("expected EmptyPolytope");
    } catch (const Error& e) {
      CHECK(e.code() == "EmptyPolytope");
    }

    FlowPolytope k4(k4_acyclic(), z({-2, 0, 0, 2}), ZVec::Zero(6), caps({2, 2, 2, 2, 2, 2}));
    auto k = dimension(k4);
    CHECK(k.dim == 3);
    CHECK(k.maximal);
    CHECK(points_rank(enumerate_lattice_points(k4)) == 3);

    std::mt19937 rng(23);
    for (int it = 0; it < 200; ++it) {
      FlowPolytope p = random_polytope(rng, true);
      auto pts = enumerate_lattice_points(p);
      auto r = dimension(p);
      CHECK(r.dim == points_rank(pts));
      CHECK(r.dim <= r.bound);
    }
  }

  TEST_CASE("vertices are lattice points") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> w(-1000, 1000);
    for (int it = 0; it < 60; ++it) {
      FlowPolytope p = random_polytope(rng, true);
      auto pts = enumerate_lattice_points(p);
      const int ne = p.num_edges();
      LpProblem lp(ne);
      IntMatrix a = incidence_matrix(p.graph());
      for (Eigen::Index v = 0; v < a.rows(); ++v) lp.add_eq(cast_vec<Rational>(IntVector(a.row(v).transpose())), Rational(p.demand()(v)));
      for (int e = 0; e < ne; ++e) {
        RatVector unit = RatVector::Zero(ne);
        unit(e) = 1;
        lp.add_ge(unit, Rational(p.lower()(e)));
        lp.add_le(unit, Rational(p.upper_bound(e)));
      }
      RatVector obj(ne);
      for (int e = 0; e < ne; ++e) obj(e) = w(rng);
      lp.objective = obj;
      auto res = solve_lp(lp);
      REQUIRE(res.status == LpStatus::Optimal);
      ZVec f(ne);
      for (int e = 0; e < ne; ++e) {
        REQUIRE(denominator(res.point(e)) == 1);
        f(e) = static_cast<std::int64_t>(numerator(res.point(e)));
      }
      CHECK(std::find(pts.begin(), pts.end(), f) != pts.end());

      PointConfiguration cfg(pts);
      for (int v : faces(cfg).vertices) CHECK(p.contains(cfg.point(v)));
    }
  }

  TEST_CASE("bvn decomposition examples") {
    auto b3 = transport_polytope({{1, 1, 1}, {1, 1, 1}});
    ZVec ones = flat({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    auto parts = bvn_decompose(b3, ones, 3);
    REQUIRE(parts.size() == 3);
    ZVec sum = ZVec::Zero(9);
    for (auto& q : parts) {
      CHECK(b3.contains(q));
      CHECK(q.maxCoeff() == 1);
      CHECK(q.sum() == 3);
      sum += q;
    }
    CHECK(sum == ones);

    auto t = transport_polytope({{1, 1, 10}, {3, 3, 3, 3}});
    auto m = t_1_1_10();
    CHECK(bvn_decompose(t, m[0], 1) == std::vector<ZVec>{m[0]});
    ZVec f = m[0] + m[5];
    auto two = bvn_decompose(t, f, 2);
    REQUIRE(two.size() == 2);
    CHECK(t.contains(two[0]));
    CHECK(t.contains(two[1]));
    CHECK(ZVec(two[0] + two[1]) == f);

    try {
      bvn_decompose(t, m[0], 2);
      FAIL("expected NotInDilate");
    } catch (const Error& e) {
      CHECK(e.code() == "NotInDilate");
    }
  }

  TEST_CASE("bvn decomposition on random dilates") {
    std::mt19937 rng(41);
    int with_lower = 0;
    for (int it = 0; it < 200; ++it) {
      FlowPolytope p = random_polytope(rng, true);
      auto pts = enumerate_lattice_points(p);
      REQUIRE(!pts.empty());
      int k = 1 + it % 5;
      ZVec f = ZVec::Zero(p.num_edges());
      for (int i = 0; i < k; ++i) f += pts[std::uniform_int_distribution<size_t>(0, pts.size() - 1)(rng)];
      auto parts = bvn_decompose(p, f, k);
      REQUIRE(static_cast<int>(parts.size()) == k);
      ZVec sum = ZVec::Zero(p.num_edges());
      for (auto& q : parts) {
        CHECK(p.contains(q));
        sum += q;
      }
      CHECK(sum == f);
      if (!p.lower().isZero()) ++with_lower;
    }
    CHECK(with_lower > 20);
  }

  TEST_CASE("transport polytopes") {
    auto b3 = transport_polytope({{1, 1, 1}, {1, 1, 1}});
    auto pts = enumerate_lattice_points(b3);
    CHECK(pts.size() == 6);
    PointConfiguration cfg(pts, flow_certificate(b3));
    CHECK(faces(cfg).vertices.size() == 6);
    for (auto& q : pts) {
      ZMat a = flow_to_matrix(q, 3, 3);
      CHECK(a.rowwise().sum() == ZVec::Ones(3));
      CHECK(a.colwise().sum().transpose() == ZVec::Ones(3));
      CHECK(matrix_to_flow(a) == q);
    }

    auto one = transport_polytope({{5}, {5}});
    CHECK(enumerate_lattice_points(one) == std::vector<ZVec>{z({5})});

    try {
      transport_polytope({{1, 2}, {1, 1}});
      FAIL("expected SumMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == "SumMismatch");
    }

    auto t = transport_polytope({{1, 1, 10}, {3, 3, 3, 3}});
    auto cert = flow_certificate(t);
    CHECK(cert.phi == IntVector::Ones(12));
    CHECK(cert.c == 12);
    CHECK(lattice_configuration(t).size() == 16);
  }

  TEST_CASE("chi") {
    auto c = chi({{1, 1, 6}, {2, 2, 2, 2}});
    std::vector<ChiPair> expect = {
        {{2}, {0, 1, 2}}, {{2}, {0, 1, 3}}, {{2}, {0, 2, 3}}, {{2}, {1, 2, 3}},
        {{0, 1}, {0}},    {{0, 1}, {1}},    {{0, 1}, {2}},    {{0, 1}, {3}},
    };
    std::sort(expect.begin(), expect.end());
    CHECK(c == expect);
    CHECK(chi({{1, 1, 10}, {3, 3, 3, 3}}).empty());
    CHECK(chi({{4}, {4}}).empty());
  }

  TEST_CASE("normalization") {
    TransportSpec clean{{1, 1, 10}, {3, 3, 3, 3}};
    auto id = normalize_transport(clean);
    CHECK(id.spec == clean);
    CHECK(id.shift.isZero());

    std::mt19937 rng(3);
    std::vector<TransportSpec> specs = {{{1, 1, 6}, {2, 2, 2, 2}}, {{1, 1, 3}, {1, 1, 1, 2}}, {{1, 1}, {1, 1}}, {{2, 1}, {1, 1, 1}}};
    for (int it = 0; it < 30; ++it) {
      TransportSpec s;
      int m = 2 + it % 2, n = 2 + it % 3;
      for (int i = 0; i < m; ++i) s.r.push_back(std::uniform_int_distribution<int>(1, 3)(rng));
      std::int64_t total = std::accumulate(s.r.begin(), s.r.end(), std::int64_t(0));
      if (total < n) continue;
      s.c.assign(static_cast<size_t>(n), 1);
      for (std::int64_t extra = total - n; extra > 0; --extra) ++s.c[std::uniform_int_distribution<size_t>(0, static_cast<size_t>(n) - 1)(rng)];
      specs.push_back(s);
    }
    for (auto& s : specs) {
      auto nz = normalize_transport(s);
      CHECK(chi(nz.spec).empty());
      auto before = enumerate_lattice_points(transport_polytope(s));
      auto after = enumerate_lattice_points(transport_polytope(nz.spec));
      ZVec shift = matrix_to_flow(nz.shift);
      std::vector<ZVec> moved;
      for (auto& q : before) moved.push_back(q + shift);
      CHECK(sorted(moved) == after);
    }
  }

  TEST_CASE("smoothness examples") {
    CHECK(is_smooth_transport({{1, 1, 10}, {3, 3, 3, 3}}));
    CHECK_FALSE(is_smooth_transport({{1, 1, 3}, {1, 1, 1, 2}}));
    CHECK(is_smooth_transport({{1, 1}, {1, 1}}));
    CHECK(is_smooth_general(enumerate_lattice_points(transport_polytope({{1, 1}, {1, 1}}))).smooth);

    auto tri = is_smooth_general(pts({{0, 0}, {3, 0}, {3, 1}}));
    CHECK_FALSE(tri.smooth);
    bool seen = false;
    for (auto& v : tri.vertices)
      if (v.vertex == 2) {
        CHECK(v.index == 3);
        CHECK(v.facets == 2);
        seen = true;
      }
    CHECK(seen);
    CHECK(is_smooth_general(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}})).smooth);
    CHECK_THROWS_AS(is_smooth_general(std::vector<ZVec>{}), Error);

    // Square pyramid: the apex is not simple.
    auto pyr = is_smooth_general(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
    CHECK_FALSE(pyr.smooth);
    for (auto& v : pyr.vertices)
      if (v.vertex == 4) CHECK(v.index == 0);
  }

  TEST_CASE("smoothness criteria agree on 3x4 margins up to 4") {
    int total = 0, smooth = 0;
    for (int r0 = 1; r0 <= 4; ++r0)
      for (int r1 = r0; r1 <= 4; ++r1)
        for (int r2 = r1; r2 <= 4; ++r2)
          for (int c0 = 1; c0 <= 4; ++c0)
            for (int c1 = c0; c1 <= 4; ++c1)
              for (int c2 = c1; c2 <= 4; ++c2)
                for (int c3 = c2; c3 <= 4; ++c3) {
                  if (r0 + r1 + r2 != c0 + c1 + c2 + c3) continue;
                  TransportSpec s{{r0, r1, r2}, {c0, c1, c2, c3}};
                  auto rep = is_smooth_general(enumerate_lattice_points(transport_polytope(s)));
                  CHECK_MESSAGE(rep.smooth == is_smooth_transport(s), "r=", r0, r1, r2, " c=", c0, c1, c2, c3);
                  if (rep.smooth) {
                    ++smooth;
                    for (auto& v : rep.vertices) CHECK(v.facets == rep.dim);
                  }
                  ++total;
                }
    MESSAGE("3x4 margin classes: ", total, ", smooth: ", smooth);
    CHECK(smooth > 0);
    CHECK(smooth < total);
  }

  TEST_CASE("hypersimplex") {
    auto h = hypersimplex_iso({{1, 1}, {1, 1}});
    CHECK(h.image.points() == pts({{0, 1}, {1, 0}}));
    auto h3 = hypersimplex_iso({{2, 1}, {1, 1, 1}});
    CHECK(h3.image.points() == pts({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    for (int i = 0; i < h3.image.size(); ++i) CHECK(transport_polytope(h3.spec).contains(h3.preimage(h3.image.point(i))));
    for (int n = 2; n <= 6; ++n)
      for (int r1 = 1; r1 < n; ++r1) {
        auto hs = hypersimplex_iso({{r1, n - r1}, std::vector<std::int64_t>(static_cast<size_t>(n), 1)});
        long binom = 1;
        for (int i = 0; i < r1; ++i) binom = binom * (n - i) / (i + 1);
        CHECK(hs.image.size() == binom);
      }
    try {
      hypersimplex_iso({{1, 1, 1}, {1, 1, 1}});
      FAIL("expected NotTwoRows");
    } catch (const Error& e) {
      CHECK(e.code() == "NotTwoRows");
    }
  }
}
