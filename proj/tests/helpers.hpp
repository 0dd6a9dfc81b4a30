#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "latticeflow/exact.hpp"

namespace lft {

inline lf::ZVec z(std::initializer_list<long> xs) {
  lf::ZVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

inline std::vector<lf::ZVec> pts(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<lf::ZVec> out;
  for (auto& r : rows) out.push_back(z(r));
  return out;
}

inline lf::IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  lf::IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Row-major matrix literal flattened to a flow vector.
inline lf::ZVec flat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<long> xs;
  for (auto& r : rows)
    for (long v : r) xs.push_back(v);
  lf::ZVec out(static_cast<Eigen::Index>(xs.size()));
  for (size_t i = 0; i < xs.size(); ++i) out(static_cast<Eigen::Index>(i)) = xs[i];
  return out;
}

inline lf::ZVec random_vec(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  lf::ZVec v(n);
  for (int i = 0; i < n; ++i) v(i) = d(rng);
  return v;
}

}  // namespace lft
