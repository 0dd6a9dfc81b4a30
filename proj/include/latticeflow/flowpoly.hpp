#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "latticeflow/graph.hpp"
#include "latticeflow/pconf.hpp"

namespace lf {

struct TransportSpec {
  std::vector<std::int64_t> r, c;
  int m() const { return static_cast<int>(r.size()); }
  int n() const { return static_cast<int>(c.size()); }
  bool operator==(const TransportSpec&) const = default;
};

// F = {f >= 0 : I_G f = d, l <= f <= u}. Throws ZeroDemand, BoundViolation,
// InfiniteCapacityOnCycle, DimensionMismatch.
class FlowPolytope {
 public:
  FlowPolytope(DirectedGraph g, ZVec d, ZVec l, std::vector<Capacity> u);
  explicit FlowPolytope(const FlowData& data) : FlowPolytope(data.g, data.d, data.l, data.u) {}

  const DirectedGraph& graph() const { return g_; }
  const ZVec& demand() const { return d_; }
  const ZVec& lower() const { return l_; }
  const std::vector<Capacity>& upper() const { return u_; }
  int num_edges() const { return g_.num_edges(); }
  // +inf replaced by sum |d_v| (valid on acyclic graphs).
  std::int64_t upper_bound(int e) const;
  FlowData data() const { return {g_, d_, l_, u_}; }

  bool contains(const ZVec& f) const;
  bool in_dilate(const ZVec& f, std::int64_t k) const;

 private:
  DirectedGraph g_;
  ZVec d_, l_;
  std::vector<Capacity> u_;
  std::int64_t total_ = 0;
};

// Violation of: sum_{enter U} u - sum_{leave U} l >= sum_{v in U} d_v.
// `mirrored` marks the reversed-graph form used when sum d < 0.
struct CutCertificate {
  std::vector<int> U;
  Integer capacity_side, demand_side;
  bool mirrored = false;
};

using FlowOrCut = std::variant<ZVec, CutCertificate>;

FlowOrCut feasible_flow(const FlowPolytope& p);
// Same with explicit per-edge bounds (hi nullopt = unbounded).
FlowOrCut feasible_flow(const DirectedGraph& g, const ZVec& d, const ZVec& lo,
                        const std::vector<Capacity>& hi);

struct EnumerateOptions {
  int exact_check_stride = 1;  // run the residual flow check every k edges
  std::size_t max_points = 0;  // 0 = no guard; otherwise GuardExceeded
};

// All integral points, lexicographic in edge order.
std::vector<ZVec> enumerate_lattice_points(const FlowPolytope& p, const EnumerateOptions& opt = {});

struct DimensionReport {
  int dim = 0;
  int bound = 0;  // |E| - |V| + #components
  bool maximal = false;
};
DimensionReport dimension(const FlowPolytope& p);

// f in k*F split into k lattice points of F. Throws NotInDilate.
std::vector<ZVec> bvn_decompose(const FlowPolytope& p, const ZVec& f, std::int64_t k);

// Directed K_{m,n}; edge (i, j) has index i*n + j, so flows are row-major matrices.
FlowPolytope transport_polytope(const TransportSpec& s);
ZMat flow_to_matrix(const ZVec& f, int m, int n);
ZVec matrix_to_flow(const ZMat& a);

// Homogeneity functional sum over sinks of phi_v (all-ones on transports).
HomogeneityCertificate flow_certificate(const FlowPolytope& p);
PointConfiguration lattice_configuration(const FlowPolytope& p, const EnumerateOptions& opt = {});

using ChiPair = std::pair<Subset, Subset>;  // 0-based rows I, columns J
std::vector<ChiPair> chi(const TransportSpec& s);

struct Normalization {
  TransportSpec spec;
  ZMat shift;  // T_spec = T_input + shift
};
Normalization normalize_transport(const TransportSpec& s);

bool is_smooth_transport(const TransportSpec& s);

struct VertexSmoothness {
  int vertex = 0;     // index into the input points
  int facets = 0;     // facets through the vertex
  Integer index = 0;  // lattice index of the normal cone generators (0 if not simplicial)
  bool unimodular = false;
};
struct SmoothnessReport {
  bool smooth = false;
  int dim = 0;
  std::vector<VertexSmoothness> vertices;
};
SmoothnessReport is_smooth_general(const std::vector<ZVec>& points);
SmoothnessReport is_smooth_general(const PointConfiguration& a);

// m = 2 only: drop the second row. Throws NotTwoRows.
struct HypersimplexIso {
  PointConfiguration image;
  TransportSpec spec;
  ZVec preimage(const ZVec& x) const;
};
HypersimplexIso hypersimplex_iso(const TransportSpec& s);

}  // namespace lf
