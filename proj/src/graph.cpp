#include "latticeflow/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace lf {

using Eigen::Index;

DirectedGraph::DirectedGraph(int n) {
  for (int i = 1; i <= n; ++i) ids_.push_back(std::to_string(i));
}

DirectedGraph::DirectedGraph(std::vector<std::string> ids) : ids_(std::move(ids)) {
  std::vector<std::string> s = ids_;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error("DuplicateVertex", "vertex ids must be distinct");
}

int DirectedGraph::add_vertex(std::string id) {
  if (std::find(ids_.begin(), ids_.end(), id) != ids_.end())
    throw Error("DuplicateVertex", "vertex id " + id + " already present");
  ids_.push_back(std::move(id));
  return num_vertices() - 1;
}

int DirectedGraph::add_edge(int tail, int head) {
  if (tail < 0 || head < 0 || tail >= num_vertices() || head >= num_vertices())
    throw Error("UnknownVertex", "edge endpoint out of range");
  if (tail == head) throw Error("SelfLoop", "self-loop at vertex " + ids_[static_cast<size_t>(tail)]);
  edges_.push_back({tail, head});
  return num_edges() - 1;
}

int DirectedGraph::index_of(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw Error("UnknownVertex", "no vertex " + id);
  return static_cast<int>(it - ids_.begin());
}

std::vector<int> DirectedGraph::in_edges(int v) const {
  std::vector<int> r;
  for (int e = 0; e < num_edges(); ++e)
    if (edges_[static_cast<size_t>(e)].head == v) r.push_back(e);
  return r;
}

std::vector<int> DirectedGraph::out_edges(int v) const {
  std::vector<int> r;
  for (int e = 0; e < num_edges(); ++e)
    if (edges_[static_cast<size_t>(e)].tail == v) r.push_back(e);
  return r;
}

bool DirectedGraph::is_acyclic() const {
  std::vector<int> indeg(static_cast<size_t>(num_vertices()), 0);
  for (auto& e : edges_) ++indeg[static_cast<size_t>(e.head)];
  std::queue<int> q;
  for (int v = 0; v < num_vertices(); ++v)
    if (!indeg[static_cast<size_t>(v)]) q.push(v);
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++seen;
    for (auto& e : edges_)
      if (e.tail == v && --indeg[static_cast<size_t>(e.head)] == 0) q.push(e.head);
  }
  return seen == num_vertices();
}

int DirectedGraph::num_components() const {
  std::vector<int> parent(static_cast<size_t>(num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  int comps = num_vertices();
  for (auto& e : edges_) {
    int a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[static_cast<size_t>(a)] = b;
      --comps;
    }
  }
  return comps;
}

bool DirectedGraph::operator==(const DirectedGraph& o) const {
  if (ids_ != o.ids_ || edges_.size() != o.edges_.size()) return false;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].tail != o.edges_[i].tail || edges_[i].head != o.edges_[i].head) return false;
  return true;
}

ZVec net_flow(const DirectedGraph& g, const ZVec& f) {
  ZVec r = ZVec::Zero(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e) {
    r(g.edge(e).head) += f(e);
    r(g.edge(e).tail) -= f(e);
  }
  return r;
}

IntMatrix incidence_matrix(const DirectedGraph& g) {
  IntMatrix a = IntMatrix::Zero(g.num_vertices(), g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    a(g.edge(e).tail, e) = -1;
    a(g.edge(e).head, e) = 1;
  }
  return a;
}

std::optional<TuCertificate> tu_certificate(const IntMatrix& m) {
  TuCertificate cert;
  std::vector<int> core;
  for (Index i = 0; i < m.rows(); ++i) {
    int nz = 0;
    bool unit = true;
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      ++nz;
      if (abs(m(i, j)) != 1) unit = false;
    }
    if (nz == 1 && unit)
      cert.extension_rows.push_back(static_cast<int>(i));
    else
      core.push_back(static_cast<int>(i));
  }
  // color[i]: -1 unassigned, else 0/1. Constraints from columns with two nonzeros.
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(m.rows()));
  for (Index j = 0; j < m.cols(); ++j) {
    std::vector<int> nz;
    for (int i : core) {
      const Integer& v = m(i, j);
      if (v == 0) continue;
      if (abs(v) != 1) return std::nullopt;
      nz.push_back(i);
    }
    if (nz.size() > 2) return std::nullopt;
    if (nz.size() == 2) {
      int a = nz[0], b = nz[1];
      int differ = (m(a, j) == m(b, j)) ? 1 : 0;
      adj[static_cast<size_t>(a)].push_back({b, differ});
      adj[static_cast<size_t>(b)].push_back({a, differ});
    }
  }
  std::vector<int> color(static_cast<size_t>(m.rows()), -1);
  for (int s : core) {
    if (color[static_cast<size_t>(s)] >= 0) continue;
    color[static_cast<size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, differ] : adj[static_cast<size_t>(v)]) {
        int want = color[static_cast<size_t>(v)] ^ differ;
        if (color[static_cast<size_t>(w)] < 0) {
          color[static_cast<size_t>(w)] = want;
          stack.push_back(w);
        } else if (color[static_cast<size_t>(w)] != want) {
          return std::nullopt;
        }
      }
    }
  }
  for (int i : core) (color[static_cast<size_t>(i)] ? cert.part2 : cert.part1).push_back(i);
  return cert;
}

namespace {

bool next_subset(std::vector<int>& s, int n) {
  int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[static_cast<size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++s[static_cast<size_t>(i)];
  for (int j = i + 1; j < k; ++j) s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
  return true;
}

}  // namespace

bool tu_bruteforce(const IntMatrix& m) {
  const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
  if (std::min(r, c) > 6) throw Error("TooLarge", "tu_bruteforce needs min(rows, cols) <= 6");
  for (int k = 1; k <= std::min(r, c); ++k) {
    std::vector<int> rs(static_cast<size_t>(k));
    std::iota(rs.begin(), rs.end(), 0);
    do {
      std::vector<int> cs(static_cast<size_t>(k));
      std::iota(cs.begin(), cs.end(), 0);
      do {
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub(i, j) = m(rs[static_cast<size_t>(i)], cs[static_cast<size_t>(j)]);
        if (abs(determinant(sub)) > 1) return false;
      } while (next_subset(cs, c));
    } while (next_subset(rs, r));
  }
  return true;
}

// ---------------------------------------------------------------------------

BipartiteSplit split_bipartite(const FlowData& in) {
  const DirectedGraph& g = in.g;
  const int nv = g.num_vertices(), ne = g.num_edges();
  BipartiteSplit s;
  s.original_edges = ne;
  s.original_vertices = nv;
  std::int64_t total = 0;
  for (int v = 0; v < nv; ++v) total += std::abs(in.d(v));
  // Splitter flow N - outflow(v) must stay nonnegative; on graphs with cycles
  // the outflow is bounded by the out-capacity rather than by the supply.
  s.N = total;
  if (!g.is_acyclic()) {
    for (int v = 0; v < nv; ++v) {
      std::int64_t cap = 0;
      for (int e : g.out_edges(v)) {
        if (!in.u[static_cast<size_t>(e)]) throw Error("Unbounded", "infinite capacity on a cyclic graph");
        cap += *in.u[static_cast<size_t>(e)];
      }
      s.N = std::max(s.N, cap);
    }
  }
  std::vector<std::string> ids;
  for (auto& id : g.ids()) ids.push_back(id + "'");
  for (auto& id : g.ids()) ids.push_back(id + "''");
  s.data.g = DirectedGraph(ids);
  s.data.d = ZVec(2 * nv);
  s.data.l = ZVec::Zero(ne + nv);
  for (int e = 0; e < ne; ++e) {
    s.data.g.add_edge(g.edge(e).tail, nv + g.edge(e).head);
    s.data.u.push_back(in.u[static_cast<size_t>(e)]);
    s.data.l(e) = in.l(e);
  }
  for (int v = 0; v < nv; ++v) {
    s.data.g.add_edge(v, nv + v);
    s.data.u.push_back(std::nullopt);
    s.data.d(v) = -s.N;
    s.data.d(nv + v) = s.N + in.d(v);
  }
  return s;
}

ZVec BipartiteSplit::map(const ZVec& f, std::int64_t k) const {
  ZVec r(original_edges + original_vertices);
  r.head(original_edges) = f;
  ZVec out = ZVec::Zero(original_vertices);
  for (int e = 0; e < original_edges; ++e) out(data.g.edge(e).tail) += f(e);
  for (int v = 0; v < original_vertices; ++v) r(original_edges + v) = k * N - out(v);
  return r;
}

ZVec BipartiteSplit::unmap(const ZVec& g) const { return g.head(original_edges); }

LowerBoundElimination eliminate_lower_bounds(const FlowData& in) {
  const DirectedGraph& g = in.g;
  const int nv = g.num_vertices(), ne = g.num_edges();
  for (int e = 0; e < ne; ++e) {
    const Capacity& u = in.u[static_cast<size_t>(e)];
    if (in.l(e) < 0 || (u && in.l(e) > *u))
      throw Error("BoundViolation", "lower bound exceeds upper bound on edge " + std::to_string(e + 1));
  }
  LowerBoundElimination r;
  r.original_edges = ne;
  r.original_lower = in.l;
  std::vector<std::string> ids = g.ids();
  for (auto& id : g.ids()) ids.push_back(id + "'");
  for (auto& id : g.ids()) ids.push_back(id + "''");
  r.data.g = DirectedGraph(ids);
  r.data.d = ZVec::Zero(3 * nv);
  r.data.d.head(nv) = in.d;
  r.data.l = ZVec::Zero(ne + 2 * nv);
  for (int e = 0; e < ne; ++e) {
    r.data.g.add_edge(g.edge(e).tail, g.edge(e).head);
    const Capacity& u = in.u[static_cast<size_t>(e)];
    r.data.u.push_back(u ? Capacity(*u - in.l(e)) : std::nullopt);
  }
  for (int v = 0; v < nv; ++v) {
    std::int64_t lin = 0, lout = 0;
    for (int e : g.in_edges(v)) lin += in.l(e);
    for (int e : g.out_edges(v)) lout += in.l(e);
    r.data.g.add_edge(nv + v, v);
    r.data.u.push_back(lin);
    r.data.g.add_edge(v, 2 * nv + v);
    r.data.u.push_back(lout);
    r.data.d(nv + v) = -lin;
    r.data.d(2 * nv + v) = lout;
  }
  return r;
}

ZVec LowerBoundElimination::map(const ZVec& f, std::int64_t k) const {
  ZVec r(data.g.num_edges());
  r.head(original_edges) = f - k * original_lower;
  for (int e = original_edges; e < data.g.num_edges(); ++e) r(e) = k * *data.u[static_cast<size_t>(e)];
  return r;
}

ZVec LowerBoundElimination::unmap(const ZVec& g, std::int64_t k) const {
  return g.head(original_edges) + k * original_lower;
}

}  // namespace lf
