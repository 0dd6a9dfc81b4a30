#include "latticeflow/exact.hpp"

#include <algorithm>
#include <utility>

namespace lf {

using Eigen::Index;

ZMat stack_rows(const std::vector<ZVec>& rows, Index cols) {
  if (cols < 0) cols = rows.empty() ? 0 : rows.front().size();
  ZMat m(static_cast<Index>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
  return m;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void swap_rows(IntMatrix& m, Index a, Index b) {
  if (a != b) m.row(a).swap(m.row(b));
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  HnfResult r;
  r.h = m;
  r.u = IntMatrix::Identity(m.rows(), m.rows());
  IntMatrix& h = r.h;
  IntMatrix& u = r.u;
  Index row = 0;
  for (Index col = 0; col < h.cols() && row < h.rows(); ++col) {
    // Euclid on the column below `row` until a single nonzero remains.
    for (;;) {
      Index best = -1;
      for (Index i = row; i < h.rows(); ++i)
        if (h(i, col) != 0 && (best < 0 || abs(h(i, col)) < abs(h(best, col)))) best = i;
      if (best < 0) break;
      swap_rows(h, row, best);
      swap_rows(u, row, best);
      bool done = true;
      for (Index i = row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Integer q = h(i, col) / h(row, col);
        h.row(i) -= q * h.row(row);
        u.row(i) -= q * u.row(row);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.row(row) = -h.row(row);
      u.row(row) = -u.row(row);
    }
    for (Index i = 0; i < row; ++i) {
      Integer q = floor_div(h(i, col), h(row, col));
      if (q != 0) {
        h.row(i) -= q * h.row(row);
        u.row(i) -= q * u.row(row);
      }
    }
    r.pivot_cols.push_back(col);
    ++row;
  }
  return r;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("NotSquare", "determinant of non-square matrix");
  const Index n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1, prev = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw Error("NotSquare", "determinant of non-square matrix");
  RatMatrix m = a;
  Rational det = 1;
  const Index n = m.rows();
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.row(k).swap(m.row(p));
      det = -det;
    }
    det *= m(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      m.row(i) -= f * m.row(k);
    }
  }
  return det;
}

std::vector<Index> rref(RatMatrix& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(row).swap(m.row(p));
    Rational inv = Rational(1) / m(row, col);
    m.row(row) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      m.row(i) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Index rank(const RatMatrix& m) {
  RatMatrix c = m;
  return static_cast<Index>(rref(c).size());
}

Index rank(const IntMatrix& m) { return hnf(m).rank(); }

std::vector<RatVector> nullspace(const RatMatrix& m) {
  RatMatrix r = m;
  auto piv = rref(r);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (auto c : piv) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<RatVector> basis;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    RatVector v = RatVector::Zero(m.cols());
    v(f) = 1;
    for (size_t k = 0; k < piv.size(); ++k) v(piv[k]) = -r(static_cast<Index>(k), f);
    basis.push_back(v);
  }
  return basis;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  HnfResult r = hnf(IntMatrix(m.transpose()));
  std::vector<IntVector> out;
  for (Index i = r.rank(); i < r.h.rows(); ++i) out.push_back(r.u.row(i).transpose());
  return out;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b) {
  RatMatrix aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  RatVector x = RatVector::Zero(m.cols());
  for (size_t k = 0; k < piv.size(); ++k) x(piv[k]) = aug(static_cast<Index>(k), m.cols());
  return x;
}

Integer lattice_index(const IntMatrix& g) {
  if (g.rows() == 0) return 1;
  HnfResult r = hnf(IntMatrix(g.transpose()));
  if (r.rank() != g.rows()) throw Error("DependentGenerators", "generators are linearly dependent");
  Integer prod = 1;
  for (Index i = 0; i < r.rank(); ++i) prod *= r.h(i, r.pivot_cols[static_cast<size_t>(i)]);
  return abs(prod);
}

Integer lattice_index(const std::vector<ZVec>& gens) {
  if (gens.empty()) return 1;
  return lattice_index(cast_mat<Integer>(stack_rows(gens)));
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, abs(v(i)));
  return g;
}

IntVector primitive(const RatVector& v) {
  Integer l = 1;
  for (Index i = 0; i < v.size(); ++i) l = lcm(l, Integer(denominator(v(i))));
  IntVector r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = Integer(numerator(v(i))) * (l / Integer(denominator(v(i))));
  Integer g = gcd_of(r);
  if (g > 1)
    for (Index i = 0; i < r.size(); ++i) r(i) /= g;
  return r;
}

std::string to_string(const Rational& q) { return q.str(); }

Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw Error("ParseError", "not a rational: " + s);
  }
}

// ---------------------------------------------------------------------------

LpProblem::LpProblem(Index n)
    : vars(n), eq_a(0, n), le_a(0, n), lt_a(0, n), eq_b(0), le_b(0), lt_b(0) {}

namespace {

void append_row(RatMatrix& a, RatVector& b, const RatVector& row, const Rational& rhs) {
  a.conservativeResize(a.rows() + 1, a.cols());
  a.row(a.rows() - 1) = row.transpose();
  b.conservativeResize(b.size() + 1);
  b(b.size() - 1) = rhs;
}

// Dense tableau over [A | I_art | rhs] with an explicit reduced-cost row.
struct Tableau {
  Index m = 0, n = 0;  // rows, structural columns
  RatMatrix t;         // m x (n + m + 1)
  RatVector z;         // reduced costs, n + m entries
  Rational zval;       // -objective value
  std::vector<Index> basis;

  Index rhs() const { return n + m; }

  void set_costs(const RatVector& c) {
    z = c;
    zval = 0;
    for (Index r = 0; r < m; ++r) {
      const Rational& cb = c(basis[static_cast<size_t>(r)]);
      if (cb == 0) continue;
      z -= cb * t.row(r).head(n + m).transpose();
      zval -= cb * t(r, rhs());
    }
  }

  void pivot(Index r, Index col) {
    Rational inv = Rational(1) / t(r, col);
    t.row(r) *= inv;
    for (Index i = 0; i < m; ++i) {
      if (i == r || t(i, col) == 0) continue;
      Rational f = t(i, col);
      t.row(i) -= f * t.row(r);
    }
    if (z(col) != 0) {
      Rational f = z(col);
      z -= f * t.row(r).head(n + m).transpose();
      zval -= f * t(r, rhs());
    }
    basis[static_cast<size_t>(r)] = col;
  }

  // Bland's rule. Returns -1 at optimum, otherwise the unbounded column.
  Index run(const std::vector<bool>& allowed) {
    for (;;) {
      Index enter = -1;
      for (Index j = 0; j < n + m; ++j)
        if (allowed[static_cast<size_t>(j)] && z(j) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return -1;
      Index leave = -1;
      Rational best;
      for (Index r = 0; r < m; ++r) {
        if (t(r, enter) <= 0) continue;
        Rational ratio = t(r, rhs()) / t(r, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[static_cast<size_t>(r)] < basis[static_cast<size_t>(leave)])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return enter;
      pivot(leave, enter);
    }
  }

  // y = c_B B^{-1}, read off the artificial columns.
  RatVector duals(const RatVector& c) const {
    RatVector y(m);
    for (Index r = 0; r < m; ++r) y(r) = c(n + r) - z(n + r);
    return y;
  }

  RatVector primal() const {
    RatVector x = RatVector::Zero(n);
    for (Index r = 0; r < m; ++r) {
      Index b = basis[static_cast<size_t>(r)];
      if (b < n) x(b) = t(r, rhs());
    }
    return x;
  }
};

}  // namespace

void LpProblem::add_eq(const RatVector& a, const Rational& b) { append_row(eq_a, eq_b, a, b); }
void LpProblem::add_le(const RatVector& a, const Rational& b) { append_row(le_a, le_b, a, b); }
void LpProblem::add_lt(const RatVector& a, const Rational& b) { append_row(lt_a, lt_b, a, b); }

LpCertificate solve_lp(const LpProblem& p) {
  const Index nv = p.vars;
  const Index ke = p.eq_a.rows(), kl = p.le_a.rows(), ks = p.lt_a.rows();
  const bool strict = ks > 0;
  // Columns: x+ (nv), x- (nv), le slacks, lt slacks, [t+, t-, s_t].
  const Index c_xp = 0, c_xm = nv, c_sl = 2 * nv, c_ss = c_sl + kl, c_t = c_ss + ks;
  const Index n = c_t + (strict ? 3 : 0);
  const Index m = ke + kl + ks + (strict ? 1 : 0);

  Tableau tb;
  tb.m = m;
  tb.n = n;
  tb.t = RatMatrix::Zero(m, n + m + 1);
  std::vector<int> flip(static_cast<size_t>(m), 1);
  auto put_x = [&](Index r, const auto& row) {
    for (Index j = 0; j < nv; ++j) {
      tb.t(r, c_xp + j) = row(j);
      tb.t(r, c_xm + j) = -row(j);
    }
  };
  Index r = 0;
  for (Index i = 0; i < ke; ++i, ++r) {
    put_x(r, p.eq_a.row(i));
    tb.t(r, tb.rhs()) = p.eq_b(i);
  }
  for (Index i = 0; i < kl; ++i, ++r) {
    put_x(r, p.le_a.row(i));
    tb.t(r, c_sl + i) = 1;
    tb.t(r, tb.rhs()) = p.le_b(i);
  }
  for (Index i = 0; i < ks; ++i, ++r) {
    put_x(r, p.lt_a.row(i));
    tb.t(r, c_ss + i) = 1;
    tb.t(r, c_t) = 1;
    tb.t(r, c_t + 1) = -1;
    tb.t(r, tb.rhs()) = p.lt_b(i);
  }
  if (strict) {
    tb.t(r, c_t) = 1;
    tb.t(r, c_t + 1) = -1;
    tb.t(r, c_t + 2) = 1;
    tb.t(r, tb.rhs()) = 1;
    ++r;
  }
  for (Index i = 0; i < m; ++i) {
    if (tb.t(i, tb.rhs()) < 0) {
      tb.t.row(i) = -tb.t.row(i);
      flip[static_cast<size_t>(i)] = -1;
    }
    tb.t(i, n + i) = 1;
    tb.basis.push_back(n + i);
  }

  auto unflip = [&](RatVector y) {
    for (Index i = 0; i < m; ++i)
      if (flip[static_cast<size_t>(i)] < 0) y(i) = -y(i);
    return y;
  };
  LpCertificate cert;
  auto set_witness = [&](const RatVector& lam) {
    cert.status = LpStatus::Infeasible;
    cert.y_eq = lam.segment(0, ke);
    cert.y_le = lam.segment(ke, kl);
    cert.y_lt = lam.segment(ke + kl, ks);
  };

  // Phase 1.
  RatVector c1 = RatVector::Zero(n + m);
  for (Index i = 0; i < m; ++i) c1(n + i) = 1;
  tb.set_costs(c1);
  std::vector<bool> allowed(static_cast<size_t>(n + m), true);
  tb.run(allowed);
  if (-tb.zval > 0) {
    // Phase-1 duals y give y^T A <= 0 and y.b > 0; the witness is -y.
    set_witness(RatVector(-unflip(tb.duals(c1))));
    if (!check_witness(p, cert)) throw Error("InternalError", "phase-1 witness failed to verify");
    return cert;
  }
  // Drive artificials out of the basis where possible.
  for (Index i = 0; i < m; ++i) {
    if (tb.basis[static_cast<size_t>(i)] < n) continue;
    for (Index j = 0; j < n; ++j)
      if (tb.t(i, j) != 0) {
        tb.pivot(i, j);
        break;
      }
  }
  for (Index j = n; j < n + m; ++j) allowed[static_cast<size_t>(j)] = false;

  auto extract_x = [&]() {
    RatVector z = tb.primal();
    return RatVector(z.segment(c_xp, nv) - z.segment(c_xm, nv));
  };

  if (strict) {
    RatVector c2 = RatVector::Zero(n + m);
    c2(c_t) = -1;
    c2(c_t + 1) = 1;
    tb.set_costs(c2);
    tb.run(allowed);
    Rational tstar = tb.zval;  // -(min of -t)
    if (tstar <= 0) {
      set_witness(RatVector(-unflip(tb.duals(c2))));
      if (!check_witness(p, cert)) throw Error("InternalError", "strict witness failed to verify");
      return cert;
    }
    if (!p.objective) {
      cert.status = LpStatus::Feasible;
      cert.point = extract_x();
      return cert;
    }
    LpProblem closure = p;
    for (Index i = 0; i < ks; ++i) closure.add_le(p.lt_a.row(i).transpose(), p.lt_b(i));
    closure.lt_a.resize(0, nv);
    closure.lt_b.resize(0);
    return solve_lp(closure);
  }

  if (!p.objective) {
    cert.status = LpStatus::Feasible;
    cert.point = extract_x();
    return cert;
  }
  RatVector c2 = RatVector::Zero(n + m);
  const Rational sgn = p.maximize ? Rational(-1) : Rational(1);
  for (Index j = 0; j < nv; ++j) {
    c2(c_xp + j) = sgn * (*p.objective)(j);
    c2(c_xm + j) = -sgn * (*p.objective)(j);
  }
  tb.set_costs(c2);
  Index ub = tb.run(allowed);
  cert.point = extract_x();
  if (ub >= 0) {
    cert.status = LpStatus::Unbounded;
    return cert;
  }
  cert.status = LpStatus::Optimal;
  cert.value = p.objective->dot(cert.point);
  return cert;
}

bool check_point(const LpProblem& p, const RatVector& x) {
  if (x.size() != p.vars) return false;
  for (Index i = 0; i < p.eq_a.rows(); ++i)
    if (p.eq_a.row(i).dot(x) != p.eq_b(i)) return false;
  for (Index i = 0; i < p.le_a.rows(); ++i)
    if (p.le_a.row(i).dot(x) > p.le_b(i)) return false;
  for (Index i = 0; i < p.lt_a.rows(); ++i)
    if (p.lt_a.row(i).dot(x) >= p.lt_b(i)) return false;
  return true;
}

bool check_witness(const LpProblem& p, const LpCertificate& c) {
  if (c.status != LpStatus::Infeasible) return false;
  if (c.y_eq.size() != p.eq_a.rows() || c.y_le.size() != p.le_a.rows() ||
      c.y_lt.size() != p.lt_a.rows())
    return false;
  for (Index i = 0; i < c.y_le.size(); ++i)
    if (c.y_le(i) < 0) return false;
  Rational strict_mass = 0;
  for (Index i = 0; i < c.y_lt.size(); ++i) {
    if (c.y_lt(i) < 0) return false;
    strict_mass += c.y_lt(i);
  }
  RatVector combo = RatVector::Zero(p.vars);
  Rational rhs = 0;
  if (p.eq_a.rows()) {
    combo += p.eq_a.transpose() * c.y_eq;
    rhs += c.y_eq.dot(p.eq_b);
  }
  if (p.le_a.rows()) {
    combo += p.le_a.transpose() * c.y_le;
    rhs += c.y_le.dot(p.le_b);
  }
  if (p.lt_a.rows()) {
    combo += p.lt_a.transpose() * c.y_lt;
    rhs += c.y_lt.dot(p.lt_b);
  }
  for (Index j = 0; j < combo.size(); ++j)
    if (combo(j) != 0) return false;
  return rhs < 0 || (rhs == 0 && strict_mass > 0);
}

}  // namespace lf
