#include <random>

#include "doctest.h"
#include "latticeflow/exact.hpp"

using namespace lf;

namespace {

IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

RatVector rv(std::initializer_list<long> xs) {
  RatVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

bool is_row_hnf(const HnfResult& r) {
  const IntMatrix& h = r.h;
  Eigen::Index row = 0;
  for (auto c : r.pivot_cols) {
    if (h(row, c) <= 0) return false;
    for (Eigen::Index j = 0; j < c; ++j)
      if (h(row, j) != 0) return false;
    for (Eigen::Index i = row + 1; i < h.rows(); ++i)
      if (h(i, c) != 0) return false;
    for (Eigen::Index i = 0; i < row; ++i)
      if (h(i, c) < 0 || h(i, c) >= h(row, c)) return false;
    ++row;
  }
  for (Eigen::Index i = row; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) return false;
  return true;
}

// Lattice points of the half-open parallelepiped spanned by the rows of g.
long parallelepiped_count(const IntMatrix& g) {
  const Eigen::Index n = g.rows();
  std::vector<long> lo(n, 0), hi(n, 0);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      long v = g(i, j).convert_to<long>();
      (v < 0 ? lo : hi)[j] += v;
    }
  RatMatrix gt = cast_mat<Rational>(IntMatrix(g.transpose()));
  long count = 0;
  std::vector<long> x(lo);
  for (;;) {
    RatVector b(n);
    for (Eigen::Index j = 0; j < n; ++j) b(j) = x[j];
    auto lam = solve_linear(gt, b);
    bool inside = true;
    for (Eigen::Index i = 0; i < n; ++i)
      if ((*lam)(i) < 0 || (*lam)(i) >= 1) inside = false;
    if (inside) ++count;
    Eigen::Index k = 0;
    while (k < n && x[k] == hi[k]) x[k] = lo[k], ++k;
    if (k == n) break;
    ++x[k];
  }
  return count;
}

}  // namespace

TEST_SUITE("exactmath") {
  TEST_CASE("hnf examples") {
    auto id = hnf(IntMatrix::Identity(2, 2));
    CHECK(id.h == IntMatrix::Identity(2, 2));
    CHECK(id.u == IntMatrix::Identity(2, 2));
    auto a = hnf(imat({{1, 2}, {3, 4}}));
    CHECK(a.h(0, 0) * a.h(1, 1) == 2);
    auto b = hnf(imat({{2, 0}, {0, 3}}));
    CHECK(b.h(0, 0) * b.h(1, 1) == 6);
    CHECK(b.h == imat({{2, 0}, {0, 3}}));
  }

  TEST_CASE("hnf property: u*m == h, u unimodular, canonical shape") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ent(-5, 5), dim(1, 5);
    for (int it = 0; it < 300; ++it) {
      IntMatrix m(dim(rng), dim(rng));
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = ent(rng);
      auto r = hnf(m);
      CHECK(IntMatrix(r.u * m) == r.h);
      CHECK(abs(determinant(r.u)) == 1);
      CHECK(is_row_hnf(r));
    }
  }

  TEST_CASE("determinant agrees over Z and Q") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ent(-6, 6);
    for (int it = 0; it < 100; ++it) {
      IntMatrix m(4, 4);
      for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) m(i, j) = ent(rng);
      CHECK(Rational(determinant(m)) == determinant(cast_mat<Rational>(m)));
    }
  }

  TEST_CASE("lattice_index examples") {
    CHECK(lattice_index(IntMatrix(IntMatrix::Identity(2, 2))) == 1);
    CHECK(lattice_index(imat({{1, 0}, {-1, 3}})) == 3);
    CHECK(lattice_index(imat({{2, 0}})) == 2);
    CHECK(lattice_index(imat({{2, 3}})) == 1);
    CHECK_THROWS_AS(lattice_index(imat({{1, 2}, {2, 4}})), Error);
  }

  TEST_CASE("lattice_index equals parallelepiped count") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> ent(-4, 4), dim(1, 4);
    int done = 0;
    while (done < 120) {
      Eigen::Index n = dim(rng);
      if (n == 4 && done % 4) n = 3;  // keep the brute force cheap
      IntMatrix g(n, n);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = ent(rng);
      if (determinant(g) == 0) continue;
      CHECK(lattice_index(g) == parallelepiped_count(g));
      CHECK(lattice_index(g) == abs(determinant(g)));
      ++done;
    }
  }

  TEST_CASE("integer kernel is a primitive basis") {
    auto k = integer_kernel(imat({{1, 1, 1}}));
    REQUIRE(k.size() == 2);
    for (auto& v : k) CHECK(v.sum() == 0);
    IntMatrix g(2, 3);
    g.row(0) = k[0].transpose();
    g.row(1) = k[1].transpose();
    CHECK(lattice_index(g) == 1);
  }

  TEST_CASE("solve_lp examples") {
    LpProblem p(1);
    p.add_ge(rv({1}), 0);
    p.add_le(rv({1}), -1);
    auto c = solve_lp(p);
    CHECK(c.status == LpStatus::Infeasible);
    CHECK(check_witness(p, c));

    LpProblem q(1);
    q.add_eq(rv({1}), 1);
    auto d = solve_lp(q);
    REQUIRE(d.feasible());
    CHECK(d.point(0) == 1);

    // Separate (2,0) from conv{(0,0),(1,0)}: unknowns (phi1, phi2, c) with
    // phi(2,0) < c <= phi(a) for both segment endpoints.
    LpProblem s(3);
    s.add_lt(rv({2, 0, -1}), 0);
    s.add_ge(rv({0, 0, -1}), 0);
    s.add_ge(rv({1, 0, -1}), 0);
    auto e = solve_lp(s);
    REQUIRE(e.feasible());
    CHECK(check_point(s, e.point));
    Rational at_point = 2 * e.point(0);
    CHECK(at_point < 0);
    CHECK(at_point < e.point(0));
  }

  TEST_CASE("strict infeasibility produces a strict witness") {
    LpProblem p(1);
    p.add_lt(rv({1}), 0);
    p.add_ge(rv({1}), 0);
    auto c = solve_lp(p);
    CHECK(c.status == LpStatus::Infeasible);
    CHECK(check_witness(p, c));
  }

  TEST_CASE("random LPs: certificates verify and optima match vertex enumeration") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> ent(-4, 4), nrows(1, 6);
    for (int it = 0; it < 200; ++it) {
      LpProblem p(2);
      int k = nrows(rng);
      for (int i = 0; i < k; ++i) {
        RatVector a = rv({ent(rng), ent(rng)});
        if (it % 3 == 0 && i == 0)
          p.add_lt(a, ent(rng));
        else
          p.add_le(a, ent(rng));
      }
      // Keep the region bounded.
      for (long s : {1, -1}) {
        p.add_le(rv({s, 0}), 5);
        p.add_le(rv({0, s}), 5);
      }
      auto c = solve_lp(p);
      if (c.feasible())
        CHECK(check_point(p, c.point));
      else
        CHECK(check_witness(p, c));

      if (p.lt_a.rows()) continue;
      LpProblem q = p;
      q.objective = rv({ent(rng), ent(rng)});
      auto o = solve_lp(q);
      if (!c.feasible()) {
        CHECK(o.status == LpStatus::Infeasible);
        continue;
      }
      REQUIRE(o.status == LpStatus::Optimal);
      // Oracle: best objective among feasible pairwise intersection points.
      std::optional<Rational> best;
      for (Eigen::Index i = 0; i < q.le_a.rows(); ++i)
        for (Eigen::Index j = i + 1; j < q.le_a.rows(); ++j) {
          RatMatrix a(2, 2);
          a.row(0) = q.le_a.row(i);
          a.row(1) = q.le_a.row(j);
          if (determinant(a) == 0) continue;
          RatVector b(2);
          b << q.le_b(i), q.le_b(j);
          RatVector x = *solve_linear(a, b);
          if (!check_point(p, x)) continue;
          Rational v = q.objective->dot(x);
          if (!best || v > *best) best = v;
        }
      REQUIRE(best);
      CHECK(*o.value == *best);
    }
  }

  TEST_CASE("rational string round trip") {
    Rational q(Integer(-3), Integer(6));
    CHECK(to_string(q) == "-1/2");
    CHECK(rational_from_string("-1/2") == q);
    CHECK(rational_from_string("4") == 4);
  }
}
