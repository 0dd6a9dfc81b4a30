#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "latticeflow/triang.hpp"

namespace lft {

using lf::all_pullings_unimodular;
using lf::facet_width_one;

inline std::vector<lf::ZVec> lattice_points_of(const std::vector<lf::ZVec>& verts) {
  return lf::hull_lattice_points(verts);
}

// Lattice points of the 0/1-bounded transport polytope with margins r, c.
inline std::vector<lf::ZVec> unit_transport(const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& c) {
  lf::FlowPolytope t = lf::transport_polytope({r, c});
  lf::FlowPolytope u(t.graph(), t.demand(), t.lower(), std::vector<lf::Capacity>(r.size() * c.size(), 1));
  return lf::enumerate_lattice_points(u);
}

// Points sorted into descending lexicographic order, the numbering used for printed cell tables.
inline std::vector<lf::ZVec> descending(std::vector<lf::ZVec> p) {
  std::sort(p.begin(), p.end(), [](const lf::ZVec& a, const lf::ZVec& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  return p;
}

inline lf::PointConfiguration homogeneous(std::vector<lf::ZVec> p) {
  lf::PointConfiguration a(std::move(p));
  auto cert = lf::homogeneity_certificate(a);
  if (!cert) throw lf::Error("NotHomogeneous", "test configuration");
  a.set_certificate(cert);
  return a;
}

struct PacoCase {
  const char* name;
  std::vector<lf::ZVec> points;
};

// 0/1 configurations (facet width 1) and stretched simplices (width >= 2).
inline std::vector<PacoCase> paco_corpus() {
  std::vector<PacoCase> c;
  c.push_back({"unit square", pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}})});
  c.push_back({"unit triangle", pts({{0, 0}, {1, 0}, {0, 1}})});
  c.push_back({"square pyramid", pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}})});
  c.push_back({"triangular prism", pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}})});
  c.push_back({"unit cube", pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})});
  c.push_back({"hypersimplex 2,4", pts({{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}})});
  c.push_back({"birkhoff 3", pts({{1, 0, 0, 0, 1, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 0, 0, 0, 1},
                                  {0, 1, 0, 0, 0, 1, 1, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 1, 0, 1, 0, 0}})});
  c.push_back({"0/1 transport cell 113|1112", unit_transport({1, 1, 3}, {1, 1, 1, 2})});
  c.push_back({"0/1 transport cell 112|1111", unit_transport({1, 1, 2}, {1, 1, 1, 1})});
  c.push_back({"stretched segment", pts({{0}, {1}, {2}})});
  c.push_back({"stretched triangle 2", lattice_points_of(pts({{0, 0}, {2, 0}, {0, 1}}))});
  c.push_back({"stretched triangle 3", lattice_points_of(pts({{0, 0}, {3, 0}, {0, 1}}))});
  c.push_back({"triangle 3,1", lattice_points_of(pts({{0, 0}, {3, 0}, {3, 1}}))});
  c.push_back({"rectangle 2x1", lattice_points_of(pts({{0, 0}, {2, 0}, {0, 1}, {2, 1}}))});
  c.push_back({"stretched tetrahedron", lattice_points_of(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 2}}))});
  c.push_back({"empty tetrahedron", pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}})});
  c.push_back({"stretched simplex 4d", lattice_points_of(pts({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}}))});
  return c;
}

}  // namespace lft
