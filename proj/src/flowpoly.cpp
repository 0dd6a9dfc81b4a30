#include "latticeflow/flowpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lf {

using Eigen::Index;

FlowPolytope::FlowPolytope(DirectedGraph g, ZVec d, ZVec l, std::vector<Capacity> u)
    : g_(std::move(g)), d_(std::move(d)), l_(std::move(l)), u_(std::move(u)) {
  if (d_.size() != g_.num_vertices() || l_.size() != g_.num_edges() ||
      static_cast<int>(u_.size()) != g_.num_edges())
    throw Error("DimensionMismatch", "demand/bound vectors do not match the graph");
  if (d_.isZero()) throw Error("ZeroDemand", "the demand vector d = 0 is not allowed");
  bool infinite = false;
  for (int e = 0; e < g_.num_edges(); ++e) {
    if (l_(e) < 0) throw Error("BoundViolation", "negative lower bound on edge " + std::to_string(e + 1));
    const Capacity& c = u_[static_cast<size_t>(e)];
    if (!c)
      infinite = true;
    else if (*c < l_(e))
      throw Error("BoundViolation", "lower bound exceeds upper bound on edge " + std::to_string(e + 1));
  }
  if (infinite && !g_.is_acyclic())
    throw Error("InfiniteCapacityOnCycle", "unbounded capacities require an acyclic graph");
  for (Index v = 0; v < d_.size(); ++v) total_ += std::abs(d_(v));
}

std::int64_t FlowPolytope::upper_bound(int e) const {
  const Capacity& c = u_[static_cast<size_t>(e)];
  return c ? *c : total_;
}

bool FlowPolytope::in_dilate(const ZVec& f, std::int64_t k) const {
  if (f.size() != num_edges()) return false;
  for (int e = 0; e < num_edges(); ++e) {
    if (f(e) < k * l_(e)) return false;
    const Capacity& c = u_[static_cast<size_t>(e)];
    if (c && f(e) > k * *c) return false;
  }
  return net_flow(g_, f) == ZVec(k * d_);
}

bool FlowPolytope::contains(const ZVec& f) const { return in_dilate(f, 1); }

FlowOrCut feasible_flow(const DirectedGraph& g, const ZVec& d, const ZVec& lo,
                        const std::vector<Capacity>& hi) {
  const int nv = g.num_vertices(), ne = g.num_edges();
  for (int e = 0; e < ne; ++e)
    if (hi[static_cast<size_t>(e)] && lo(e) > *hi[static_cast<size_t>(e)])
      throw Error("BoundViolation", "lower bound exceeds upper bound");
  std::int64_t sum = d.sum();
  if (sum != 0) {
    CutCertificate c;
    c.U.resize(static_cast<size_t>(nv));
    std::iota(c.U.begin(), c.U.end(), 0);
    c.capacity_side = 0;
    c.demand_side = sum > 0 ? sum : -sum;
    c.mirrored = sum < 0;
    return c;
  }
  std::vector<std::vector<int>> inc(static_cast<size_t>(nv));
  for (int e = 0; e < ne; ++e) {
    inc[static_cast<size_t>(g.edge(e).tail)].push_back(e);
    inc[static_cast<size_t>(g.edge(e).head)].push_back(e);
  }
  ZVec f = lo;
  ZVec ex = net_flow(g, f) - d;
  auto can_fwd = [&](int e) {
    const Capacity& c = hi[static_cast<size_t>(e)];
    return !c || f(e) < *c;
  };
  auto can_bwd = [&](int e) { return f(e) > lo(e); };
  std::vector<int> via(static_cast<size_t>(nv));
  std::vector<int> from(static_cast<size_t>(nv));
  for (;;) {
    std::vector<int> queue;
    std::fill(via.begin(), via.end(), -2);
    for (int v = 0; v < nv; ++v)
      if (ex(v) > 0) {
        via[static_cast<size_t>(v)] = -1;
        queue.push_back(v);
      }
    if (queue.empty()) break;
    int target = -1;
    for (size_t qi = 0; qi < queue.size() && target < 0; ++qi) {
      int x = queue[qi];
      for (int e : inc[static_cast<size_t>(x)]) {
        const Edge& ed = g.edge(e);
        int y = -1;
        if (ed.tail == x && can_fwd(e)) y = ed.head;
        if (ed.head == x && can_bwd(e)) y = ed.tail;
        if (y < 0 || via[static_cast<size_t>(y)] != -2) continue;
        via[static_cast<size_t>(y)] = e;
        from[static_cast<size_t>(y)] = x;
        if (ex(y) < 0) {
          target = y;
          break;
        }
        queue.push_back(y);
      }
    }
    if (target < 0) {
      // U = vertices that can reach T = {ex < 0} in the residual graph.
      std::vector<bool> inU(static_cast<size_t>(nv), false);
      std::vector<int> st;
      for (int v = 0; v < nv; ++v)
        if (ex(v) < 0) {
          inU[static_cast<size_t>(v)] = true;
          st.push_back(v);
        }
      while (!st.empty()) {
        int y = st.back();
        st.pop_back();
        for (int e : inc[static_cast<size_t>(y)]) {
          const Edge& ed = g.edge(e);
          int x = -1;
          if (ed.head == y && can_fwd(e)) x = ed.tail;
          if (ed.tail == y && can_bwd(e)) x = ed.head;
          if (x >= 0 && !inU[static_cast<size_t>(x)]) {
            inU[static_cast<size_t>(x)] = true;
            st.push_back(x);
          }
        }
      }
      CutCertificate c;
      c.capacity_side = 0;
      c.demand_side = 0;
      for (int v = 0; v < nv; ++v)
        if (inU[static_cast<size_t>(v)]) {
          c.U.push_back(v);
          c.demand_side += d(v);
        }
      for (int e = 0; e < ne; ++e) {
        bool t = inU[static_cast<size_t>(g.edge(e).tail)], h = inU[static_cast<size_t>(g.edge(e).head)];
        if (h && !t) c.capacity_side += *hi[static_cast<size_t>(e)];
        if (t && !h) c.capacity_side -= lo(e);
      }
      if (c.demand_side <= c.capacity_side) throw Error("InternalError", "cut certificate does not verify");
      return c;
    }
    // Bottleneck along the path.
    std::int64_t delta = -ex(target);
    int y = target;
    while (via[static_cast<size_t>(y)] != -1) {
      int e = via[static_cast<size_t>(y)];
      int x = from[static_cast<size_t>(y)];
      if (g.edge(e).tail == x) {
        if (hi[static_cast<size_t>(e)]) delta = std::min(delta, *hi[static_cast<size_t>(e)] - f(e));
      } else {
        delta = std::min(delta, f(e) - lo(e));
      }
      y = x;
    }
    delta = std::min(delta, ex(y));
    int sink = target;
    while (via[static_cast<size_t>(sink)] != -1) {
      int e = via[static_cast<size_t>(sink)];
      int x = from[static_cast<size_t>(sink)];
      f(e) += g.edge(e).tail == x ? delta : -delta;
      sink = x;
    }
    ex(target) += delta;
    ex(y) -= delta;
  }
  return f;
}

FlowOrCut feasible_flow(const FlowPolytope& p) {
  return feasible_flow(p.graph(), p.demand(), p.lower(), p.upper());
}

namespace {

struct Enumerator {
  const FlowPolytope& p;
  const EnumerateOptions& opt;
  const DirectedGraph& g;
  ZVec lo, hiv;
  std::vector<Capacity> hi;
  std::vector<ZVec> out;
  std::vector<std::vector<int>> in_e, out_e;

  Enumerator(const FlowPolytope& poly, const EnumerateOptions& o)
      : p(poly), opt(o), g(poly.graph()) {
    const int ne = g.num_edges();
    lo = p.lower();
    hiv = ZVec(ne);
    for (int e = 0; e < ne; ++e) hiv(e) = p.upper_bound(e);
    for (int v = 0; v < g.num_vertices(); ++v) {
      in_e.push_back(g.in_edges(v));
      out_e.push_back(g.out_edges(v));
    }
  }

  bool degree_ok() const {
    for (int v = 0; v < g.num_vertices(); ++v) {
      std::int64_t mn = 0, mx = 0;
      for (int e : in_e[static_cast<size_t>(v)]) mn += lo(e), mx += hiv(e);
      for (int e : out_e[static_cast<size_t>(v)]) mn -= hiv(e), mx -= lo(e);
      if (p.demand()(v) < mn || p.demand()(v) > mx) return false;
    }
    return true;
  }

  bool exact_ok() {
    hi.resize(static_cast<size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e) hi[static_cast<size_t>(e)] = hiv(e);
    return std::holds_alternative<ZVec>(feasible_flow(g, p.demand(), lo, hi));
  }

  void run(int e) {
    if (e == g.num_edges()) {
      if (net_flow(g, lo) == p.demand()) {
        out.push_back(lo);
        if (opt.max_points && out.size() > opt.max_points)
          throw Error("GuardExceeded", "more than " + std::to_string(opt.max_points) + " lattice points");
      }
      return;
    }
    const std::int64_t a = lo(e), b = hiv(e);
    for (std::int64_t v = a; v <= b; ++v) {
      lo(e) = hiv(e) = v;
      if (!degree_ok()) continue;
      int stride = std::max(1, opt.exact_check_stride);
      if ((e + 1) % stride == 0 && !exact_ok()) continue;
      run(e + 1);
    }
    lo(e) = a;
    hiv(e) = b;
  }
};

}  // namespace

std::vector<ZVec> enumerate_lattice_points(const FlowPolytope& p, const EnumerateOptions& opt) {
  Enumerator en(p, opt);
  if (!en.degree_ok() || !en.exact_ok()) return {};
  en.run(0);
  return std::move(en.out);
}

DimensionReport dimension(const FlowPolytope& p) {
  auto r = feasible_flow(p);
  if (!std::holds_alternative<ZVec>(r)) throw Error("EmptyPolytope", "flow polytope is empty");
  const ZVec f0 = std::get<ZVec>(r);
  const DirectedGraph& g = p.graph();
  std::vector<int> free_edges;
  for (int e = 0; e < g.num_edges(); ++e) {
    bool varies = false;
    if (f0(e) > p.lower()(e)) {
      std::vector<Capacity> hi = p.upper();
      hi[static_cast<size_t>(e)] = f0(e) - 1;
      varies = std::holds_alternative<ZVec>(feasible_flow(g, p.demand(), p.lower(), hi));
    }
    if (!varies && (!p.upper()[static_cast<size_t>(e)] || f0(e) < *p.upper()[static_cast<size_t>(e)])) {
      ZVec lo = p.lower();
      lo(e) = f0(e) + 1;
      if (!p.upper()[static_cast<size_t>(e)] || lo(e) <= *p.upper()[static_cast<size_t>(e)])
        varies = std::holds_alternative<ZVec>(feasible_flow(g, p.demand(), lo, p.upper()));
    }
    if (varies) free_edges.push_back(e);
  }
  IntMatrix a = incidence_matrix(g);
  IntMatrix sub(a.rows(), static_cast<Index>(free_edges.size()));
  for (size_t k = 0; k < free_edges.size(); ++k) sub.col(static_cast<Index>(k)) = a.col(free_edges[k]);
  DimensionReport rep;
  rep.dim = static_cast<int>(free_edges.size()) - static_cast<int>(rank(sub));
  rep.bound = g.num_edges() - g.num_vertices() + g.num_components();
  rep.maximal = rep.dim == rep.bound;
  return rep;
}

namespace {

std::vector<ZVec> peel_zero_lower(const FlowPolytope& p, ZVec f, std::int64_t k) {
  std::vector<ZVec> parts;
  const int ne = p.num_edges();
  for (std::int64_t t = k; t >= 1; --t) {
    ZVec lo(ne);
    std::vector<Capacity> hi(static_cast<size_t>(ne));
    for (int e = 0; e < ne; ++e) {
      const Capacity& u = p.upper()[static_cast<size_t>(e)];
      // The remainder must stay inside (t-1)*F.
      lo(e) = u ? std::max<std::int64_t>(0, f(e) - (t - 1) * *u) : 0;
      hi[static_cast<size_t>(e)] = u ? std::min(*u, f(e)) : f(e);
    }
    auto r = feasible_flow(p.graph(), p.demand(), lo, hi);
    if (!std::holds_alternative<ZVec>(r)) throw Error("InternalError", "no decomposition summand found");
    const ZVec& g = std::get<ZVec>(r);
    parts.push_back(g);
    f -= g;
  }
  return parts;
}

}  // namespace

std::vector<ZVec> bvn_decompose(const FlowPolytope& p, const ZVec& f, std::int64_t k) {
  if (k < 1 || !p.in_dilate(f, k)) throw Error("NotInDilate", "flow is not a lattice point of k*F");
  if (p.lower().isZero()) return peel_zero_lower(p, f, k);
  auto el = eliminate_lower_bounds(p.data());
  FlowPolytope q(el.data);
  std::vector<ZVec> parts;
  for (auto& g : peel_zero_lower(q, el.map(f, k), k)) parts.push_back(el.unmap(g, 1));
  return parts;
}

FlowPolytope transport_polytope(const TransportSpec& s) {
  const int m = s.m(), n = s.n();
  if (m == 0 || n == 0) throw Error("DegenerateInput", "empty margin vector");
  std::int64_t sr = 0, sc = 0;
  for (auto x : s.r) {
    if (x < 0) throw Error("NegativeMargin", "row sums must be nonnegative");
    sr += x;
  }
  for (auto x : s.c) {
    if (x < 0) throw Error("NegativeMargin", "column sums must be nonnegative");
    sc += x;
  }
  if (sr != sc) throw Error("SumMismatch", "row and column sums differ");
  std::vector<std::string> ids;
  for (int i = 1; i <= m; ++i) ids.push_back("r" + std::to_string(i));
  for (int j = 1; j <= n; ++j) ids.push_back("c" + std::to_string(j));
  DirectedGraph g(ids);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
  ZVec d(m + n);
  for (int i = 0; i < m; ++i) d(i) = -s.r[static_cast<size_t>(i)];
  for (int j = 0; j < n; ++j) d(m + j) = s.c[static_cast<size_t>(j)];
  return FlowPolytope(g, d, ZVec::Zero(m * n), std::vector<Capacity>(static_cast<size_t>(m * n), std::nullopt));
}

ZMat flow_to_matrix(const ZVec& f, int m, int n) {
  ZMat a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = f(i * n + j);
  return a;
}

ZVec matrix_to_flow(const ZMat& a) {
  ZVec f(a.rows() * a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) f(i * a.cols() + j) = a(i, j);
  return f;
}

HomogeneityCertificate flow_certificate(const FlowPolytope& p) {
  const DirectedGraph& g = p.graph();
  IntVector phi = IntVector::Zero(g.num_edges());
  Integer c = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (p.demand()(v) <= 0) continue;
    c += p.demand()(v);
    for (int e : g.in_edges(v)) phi(e) += 1;
    for (int e : g.out_edges(v)) phi(e) -= 1;
  }
  return {phi, c};
}

PointConfiguration lattice_configuration(const FlowPolytope& p, const EnumerateOptions& opt) {
  return PointConfiguration(enumerate_lattice_points(p, opt), flow_certificate(p));
}

std::vector<ChiPair> chi(const TransportSpec& s) {
  const int m = s.m(), n = s.n();
  std::vector<ChiPair> out;
  if (m < 2 || n < 2) return out;
  std::int64_t sr = std::accumulate(s.r.begin(), s.r.end(), std::int64_t(0));
  std::int64_t sc = std::accumulate(s.c.begin(), s.c.end(), std::int64_t(0));
  auto all_but = [](int size, int skip) {
    Subset x;
    for (int i = 0; i < size; ++i)
      if (i != skip) x.push_back(i);
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      // |I| * |J^C| = 1: I = {i}, J = [n] \ {j}.
      if (s.r[static_cast<size_t>(i)] == sc - s.c[static_cast<size_t>(j)]) out.push_back({{i}, all_but(n, j)});
      // |I^C| * |J| = 1: I = [m] \ {i}, J = {j}.
      if (sr - s.r[static_cast<size_t>(i)] == s.c[static_cast<size_t>(j)]) out.push_back({all_but(m, i), {j}});
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Normalization normalize_transport(const TransportSpec& s) {
  Normalization nz{s, ZMat::Zero(s.m(), s.n())};
  const int m = s.m(), n = s.n();
  size_t last = SIZE_MAX;
  for (;;) {
    auto ch = chi(nz.spec);
    if (ch.empty()) break;
    if (ch.size() >= last) throw Error("InternalError", "normalization did not shrink chi");
    last = ch.size();
    const auto& [I, J] = ch.front();
    int i0, j0;
    if (I.size() == 1 && static_cast<int>(J.size()) == n - 1) {
      i0 = I[0];
      j0 = 0;
      while (std::binary_search(J.begin(), J.end(), j0)) ++j0;
    } else {
      j0 = J[0];
      i0 = 0;
      while (std::binary_search(I.begin(), I.end(), i0)) ++i0;
    }
    std::int64_t total = std::accumulate(nz.spec.r.begin(), nz.spec.r.end(), std::int64_t(0));
    std::int64_t G = static_cast<std::int64_t>(m) * n * total;
    nz.spec.r[static_cast<size_t>(i0)] += G;
    nz.spec.c[static_cast<size_t>(j0)] += G;
    nz.shift(i0, j0) += G;
  }
  return nz;
}

bool is_smooth_transport(const TransportSpec& s) {
  const int m = s.m(), n = s.n();
  if (m > 24 || n > 24) throw Error("TooLarge", "subset enumeration limited to 24 rows/columns");
  TransportSpec t = normalize_transport(s).spec;
  std::map<std::int64_t, std::vector<unsigned>> by_sum;
  for (unsigned J = 1; J + 1 < (1u << n); ++J) {
    std::int64_t sum = 0;
    for (int j = 0; j < n; ++j)
      if (J >> j & 1) sum += t.c[static_cast<size_t>(j)];
    by_sum[sum].push_back(J);
  }
  for (unsigned I = 1; I + 1 < (1u << m); ++I) {
    std::int64_t sum = 0;
    for (int i = 0; i < m; ++i)
      if (I >> i & 1) sum += t.r[static_cast<size_t>(i)];
    auto it = by_sum.find(sum);
    if (it == by_sum.end()) continue;
    const long ni = __builtin_popcount(I);
    for (unsigned J : it->second) {
      const long nj = __builtin_popcount(J);
      if (ni * (n - nj) > 1 && (m - ni) * nj > 1) return false;
    }
  }
  return true;
}

SmoothnessReport is_smooth_general(const PointConfiguration& a) {
  if (a.size() < 1) throw Error("DegenerateInput", "no points");
  SmoothnessReport rep;
  FaceData fd = faces(a);
  AffineFrame fr = affine_frame(a, a.all());
  rep.dim = fd.dim;
  rep.smooth = true;
  for (int v : fd.vertices) {
    VertexSmoothness vs;
    vs.vertex = v;
    std::vector<IntVector> normals;
    for (auto& f : fd.facets)
      if (std::binary_search(f.members.begin(), f.members.end(), v)) {
        IntVector w = fr.basis * f.functional;  // quotient coordinates
        Integer g = gcd_of(w);
        for (Index i = 0; i < w.size(); ++i) w(i) /= g;
        normals.push_back(w);
      }
    vs.facets = static_cast<int>(normals.size());
    if (vs.facets == fd.dim) {
      IntMatrix w(fd.dim, fd.dim);
      for (int i = 0; i < fd.dim; ++i) w.row(i) = normals[static_cast<size_t>(i)].transpose();
      vs.index = fd.dim ? lattice_index(w) : Integer(1);
      vs.unimodular = vs.index == 1;
    }
    rep.smooth = rep.smooth && vs.unimodular;
    rep.vertices.push_back(vs);
  }
  return rep;
}

SmoothnessReport is_smooth_general(const std::vector<ZVec>& points) {
  if (points.empty()) throw Error("DegenerateInput", "no points");
  return is_smooth_general(PointConfiguration(points));
}

HypersimplexIso hypersimplex_iso(const TransportSpec& s) {
  if (s.m() != 2) throw Error("NotTwoRows", "hypersimplex isomorphism needs m = 2");
  const int n = s.n();
  std::vector<ZVec> img;
  for (auto& f : enumerate_lattice_points(transport_polytope(s))) img.push_back(f.head(n));
  return {PointConfiguration(img), s};
}

ZVec HypersimplexIso::preimage(const ZVec& x) const {
  const int n = spec.n();
  ZVec f(2 * n);
  f.head(n) = x;
  for (int j = 0; j < n; ++j) f(n + j) = spec.c[static_cast<size_t>(j)] - x(j);
  return f;
}

}  // namespace lf
