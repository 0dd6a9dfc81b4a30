#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latticeflow/exact.hpp"

namespace lf {

// nullopt means "no upper bound".
using Capacity = std::optional<std::int64_t>;

struct Edge {
  int tail = 0;
  int head = 0;
};

// Vertices and edges are ordered; edges are identified by position.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(int n);  // vertices "1".."n"
  explicit DirectedGraph(std::vector<std::string> ids);

  int add_vertex(std::string id);
  int add_edge(int tail, int head);  // throws SelfLoop

  int num_vertices() const { return static_cast<int>(ids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  int index_of(const std::string& id) const;  // throws UnknownVertex

  std::vector<int> in_edges(int v) const;   // head == v
  std::vector<int> out_edges(int v) const;  // tail == v
  bool is_acyclic() const;
  int num_components() const;  // weakly connected

  bool operator==(const DirectedGraph& o) const;

 private:
  std::vector<std::string> ids_;
  std::vector<Edge> edges_;
};

// inflow - outflow at every vertex.
ZVec net_flow(const DirectedGraph& g, const ZVec& f);

IntMatrix incidence_matrix(const DirectedGraph& g);

struct TuCertificate {
  std::vector<int> part1, part2;     // the row partition for the core rows
  std::vector<int> extension_rows;   // unit rows peeled off (identity extension)
};

// Sufficient-only total-unimodularity test: strips unit rows, then looks for a
// row 2-coloring satisfying the sign conditions on columns with two nonzeros.
std::optional<TuCertificate> tu_certificate(const IntMatrix& m);

// Every square minor in {0, 1, -1}. Guarded: min(rows, cols) <= 6.
bool tu_bruteforce(const IntMatrix& m);

struct FlowData {
  DirectedGraph g;
  ZVec d, l;
  std::vector<Capacity> u;
};

// Node splitting v -> (v', v''): edge (a, b) becomes (a', b''), plus splitter
// edges (v', v'') without upper bound. Demands d'_{v'} = -N, d'_{v''} = N + d_v.
struct BipartiteSplit {
  FlowData data;
  std::int64_t N = 0;
  int original_edges = 0;
  int original_vertices = 0;

  // f is a flow of the k-th dilate; the image is a flow of the k-th dilate.
  ZVec map(const ZVec& f, std::int64_t k = 1) const;
  ZVec unmap(const ZVec& g) const;
};

BipartiteSplit split_bipartite(const FlowData& in);

// Lower-bound elimination: new vertices v', v'' per v with edges (v', v) and
// (v, v''), original capacities reduced by l.
struct LowerBoundElimination {
  FlowData data;  // l is all zero
  ZVec original_lower;
  int original_edges = 0;

  ZVec map(const ZVec& f, std::int64_t k = 1) const;
  ZVec unmap(const ZVec& g, std::int64_t k = 1) const;
};

LowerBoundElimination eliminate_lower_bounds(const FlowData& in);

}  // namespace lf
