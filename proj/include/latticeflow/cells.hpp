#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "latticeflow/flowpoly.hpp"
#include "latticeflow/toric.hpp"
#include "latticeflow/triang.hpp"

namespace lf {

struct CellKey {
  ZVec k;  // one offset per edge
  bool operator==(const CellKey& o) const { return k == o.k; }
  bool operator<(const CellKey& o) const;
};

// Z_F(k): same graph, bounds max(l, k) and min(u, k + 1). Empty when the bounds cross.
std::optional<FlowPolytope> cell(const FlowPolytope& p, const CellKey& k);
// Z_F(k) - k: 0/1 bounds and demand d - I k.
std::optional<FlowPolytope> shifted_cell(const FlowPolytope& p, const CellKey& k);
std::vector<ZVec> cell_points(const FlowPolytope& p, const CellKey& k);

// Margins when p has the layout of transport_polytope (K_{m,n}, l = 0, no upper bounds).
std::optional<TransportSpec> transport_shape(const FlowPolytope& p);

struct CellType {
  ZVec d;                                      // shifted demand
  std::vector<std::int64_t> r, c;              // shifted margins as they occur (transport cells)
  ZVec canon_d;                                // lex-smaller of d and its complement
  std::vector<std::int64_t> canon_r, canon_c;  // sorted descending, lex-smaller of type and complement
  bool canonical = false;                      // the sorted type represents its complement class

  bool is_transport() const { return !r.empty(); }
  // Z^{1,1,3}_{2,1,1,1} for transport cells, Z_(-2,-1,1,2) otherwise.
  std::string label() const;
  // Canonical margins in ascending order, the way the cell tables print them.
  std::string canonical_label() const;
};

CellType transport_type(std::vector<std::int64_t> r, std::vector<std::int64_t> c);
CellType flow_type(const DirectedGraph& g, const ZVec& d);
CellType cell_type(const FlowPolytope& p, const CellKey& k);

struct FullCell {
  CellKey key;
  CellType type;
  Subset points;  // indices into enumerate_lattice_points(p)
};

// Maximal cells of the coordinate hyperplane subdivision, keyed by their minimal corner.
std::vector<FullCell> enumerate_full_cells(const FlowPolytope& p);

// Demand vectors allowed by the full-dimensional cell bounds, with canonical flags.
// Transport types come with sorted margins, ordered as in the printed catalog.
std::vector<CellType> feasible_cell_types(int m, int n);
std::vector<CellType> feasible_cell_types(const DirectedGraph& g);

struct CatalogRow {
  std::vector<std::int64_t> r, c;  // ascending margins
  int points = 0;
  int degree = 0;  // 0 for the zero ideal
  std::vector<Binomial> gens;
  std::optional<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> complement;  // ascending
  std::string label() const;
};
// Points of each cell are numbered in descending lexicographic order.
std::vector<CatalogRow> catalog_3x4();
std::vector<ZVec> unit_transport_points(const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& c);

struct CellFacet {
  Face face;                // in ambient coordinates, members index cell_points
  int edge = -1;            // coordinate of the box facet, -1 if none
  bool upper = false;       // f_e <= k_e + 1 instead of f_e >= k_e
  bool polytope_facet = false;
};
std::vector<CellFacet> cell_facets(const FlowPolytope& p, const CellKey& k);
std::vector<CellKey> neighbor_cells(const FlowPolytope& p, const CellKey& k);

// A + B + C = D + E + F, lists in role order.
struct CubicRelation {
  std::array<ZVec, 3> lhs, rhs;
};
// Points of a degree-3 binomial, lead side first. Throws NotCubic.
CubicRelation cubic_relation(const PointConfiguration& a, const Binomial& b);

struct Rescuer {
  enum class Kind { One, Three } kind = Kind::One;
  std::vector<ZVec> matrices;  // R, or R1 R2 R3
  CubicRelation roles;         // the relation with A..F in the roles used
};
bool verify_rescuer(const Rescuer& r);

struct RescueSearch {
  std::optional<Rescuer> found;
  std::size_t ambient_points = 0;
  std::size_t candidates = 0;  // role assignments and R1 choices examined
};
// Ambient points of neighbour cells come first, each group in lexicographic order.
RescueSearch rescuer_search(const FlowPolytope& p, const CubicRelation& rel,
                            const std::optional<CellKey>& home = std::nullopt);

struct HighDegreeFamily {
  int m = 0, n = 0;
  TransportSpec spec;
  ZMat shift;  // N: the lattice points of spec plus N form the configuration
  std::vector<ZMat> a1, a2;
  ZMat c, d, e;
  std::vector<std::pair<ZMat, std::int64_t>> lhs, rhs;  // relation, multiplicities
  int degree = 0;

  bool identity_holds() const;
  ZMat rhs_sum() const;
  // Binomial over a configuration containing every matrix of the relation (flattened).
  Binomial relation(const PointConfiguration& a) const;
  // Grevlex with E < A1 < A2 < everything else.
  TermOrder order_hint(const PointConfiguration& a) const;
};
// Throws OddDimension.
HighDegreeFamily high_degree_family(int m, int n);

// Throws SearchBoundExceeded when a needed fiber lies above the degree bound.
bool verify_min_generator(const PointConfiguration& a, const Binomial& b, const TermOrder& order, int search_bound = 8);

}  // namespace lf
