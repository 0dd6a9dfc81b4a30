#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace lf {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using IntMatrix = Mat<Integer>;
using IntVector = Vec<Integer>;
using RatMatrix = Mat<Rational>;
using RatVector = Vec<Rational>;

// Machine-width integer vectors for combinatorial data (points, flows,
// exponents). Promoted to Integer/Rational before any exact kernel.
using ZVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using ZMat = Mat<std::int64_t>;

// Every domain error carries a stable code string, e.g. "DependentGenerators".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

template <class To, class From>
Mat<To> cast_mat(const Mat<From>& m) {
  Mat<To> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = To(m(i, j));
  return r;
}
template <class To, class From>
Vec<To> cast_vec(const Vec<From>& v) {
  Vec<To> r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = To(v(i));
  return r;
}

// Rows of the result are the given points.
ZMat stack_rows(const std::vector<ZVec>& rows, Eigen::Index cols = -1);

struct HnfResult {
  IntMatrix h;  // row-style Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

// Pivots positive, entries above a pivot reduced into [0, pivot).
HnfResult hnf(const IntMatrix& m);

// Fraction-free determinant (Bareiss).
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

Eigen::Index rank(const RatMatrix& m);
Eigen::Index rank(const IntMatrix& m);

// Reduced row echelon form over Q; returns pivot columns.
std::vector<Eigen::Index> rref(RatMatrix& m);

// Basis of {x : m x = 0} over Q, one vector per free column.
std::vector<RatVector> nullspace(const RatMatrix& m);

// A primitive integer basis of the integer kernel lattice {x in Z^n : m x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

// Some solution of m x = b, or nothing.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b);

// |Lambda_sat / Lambda_gen| for linearly independent gens (rows of g).
Integer lattice_index(const IntMatrix& g);
Integer lattice_index(const std::vector<ZVec>& gens);

Integer gcd_of(const IntVector& v);
IntVector primitive(const RatVector& v);  // positive multiple, gcd 1

std::string to_string(const Rational& q);  // "p/q" or "p"
Rational rational_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// Exact rational LP. Variables are free. Constraints:
//   eq_a x == eq_b,  le_a x <= le_b,  lt_a x < lt_b.
// Optional objective: maximize (or minimize) objective . x. When strict rows
// are present the objective is optimized over the closure after strict
// feasibility is established.

struct LpProblem {
  Eigen::Index vars = 0;
  RatMatrix eq_a, le_a, lt_a;
  RatVector eq_b, le_b, lt_b;
  std::optional<RatVector> objective;
  bool maximize = true;

  explicit LpProblem(Eigen::Index n = 0);
  void add_eq(const RatVector& a, const Rational& b);
  void add_le(const RatVector& a, const Rational& b);
  void add_ge(const RatVector& a, const Rational& b) { add_le(-a, -b); }
  void add_lt(const RatVector& a, const Rational& b);
  void add_gt(const RatVector& a, const Rational& b) { add_lt(-a, -b); }
};

enum class LpStatus { Feasible, Optimal, Unbounded, Infeasible };

struct LpCertificate {
  LpStatus status = LpStatus::Infeasible;
  RatVector point;               // Feasible / Optimal / Unbounded
  std::optional<Rational> value; // Optimal
  // Infeasible: multipliers with y^T A == 0 and y.b < 0, or y.b == 0 with some
  // strict multiplier positive. eq multipliers free, others nonnegative.
  RatVector y_eq, y_le, y_lt;

  bool feasible() const { return status != LpStatus::Infeasible; }
};

LpCertificate solve_lp(const LpProblem& p);

bool check_point(const LpProblem& p, const RatVector& x);
bool check_witness(const LpProblem& p, const LpCertificate& c);

}  // namespace lf
