#include "latticeflow/cells.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace lf {

namespace {

using Margins = std::vector<std::int64_t>;

bool lex_less(const ZVec& a, const ZVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Margins sorted_desc(Margins v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

Margins ascending(Margins v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string join(const Margins& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string join(const ZVec& v) {
  return join(Margins(v.begin(), v.end()));
}

std::string margins_label(const Margins& r, const Margins& c) {
  return "Z^{" + join(r) + "}_{" + join(c) + "}";
}

ZVec concat(const Margins& a, const Margins& b) {
  ZVec v(static_cast<Eigen::Index>(a.size() + b.size()));
  for (size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = a[i];
  for (size_t j = 0; j < b.size(); ++j) v(static_cast<Eigen::Index>(a.size() + j)) = b[j];
  return v;
}

std::vector<Margins> nondecreasing(int len, std::int64_t lo, std::int64_t hi) {
  std::vector<Margins> out;
  Margins cur;
  auto rec = [&](auto&& self, std::int64_t from) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t x = from; x <= hi; ++x) {
      cur.push_back(x);
      self(self, x);
      cur.pop_back();
    }
  };
  if (lo <= hi) rec(rec, lo);
  return out;
}

bool on_undirected_cycle(const DirectedGraph& g, int v) {
  // v lies on a cycle iff some incident edge is not a bridge.
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.tail != v && ed.head != v) continue;
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.num_vertices()));
    for (int f = 0; f < g.num_edges(); ++f) {
      if (f == e) continue;
      adj[static_cast<size_t>(g.edge(f).tail)].push_back(g.edge(f).head);
      adj[static_cast<size_t>(g.edge(f).head)].push_back(g.edge(f).tail);
    }
    std::vector<char> seen(static_cast<size_t>(g.num_vertices()), 0);
    std::vector<int> stack{ed.tail};
    seen[static_cast<size_t>(ed.tail)] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<size_t>(x)])
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = 1;
          stack.push_back(y);
        }
    }
    if (seen[static_cast<size_t>(ed.head)]) return true;
  }
  return false;
}

Integer dot(const IntVector& w, const ZVec& x) {
  Integer s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += w(i) * Integer(x(i));
  return s;
}

ZVec flat(const ZMat& m) { return matrix_to_flow(m); }

}  // namespace

bool CellKey::operator<(const CellKey& o) const { return lex_less(k, o.k); }

std::optional<FlowPolytope> cell(const FlowPolytope& p, const CellKey& k) {
  const int E = p.num_edges();
  if (k.k.size() != E) throw Error("DimensionMismatch", "key has " + std::to_string(k.k.size()) + " entries");
  ZVec lo(E);
  std::vector<Capacity> hi(static_cast<size_t>(E));
  for (int e = 0; e < E; ++e) {
    lo(e) = std::max(p.lower()(e), k.k(e));
    std::int64_t h = k.k(e) + 1;
    if (const Capacity& u = p.upper()[static_cast<size_t>(e)]) h = std::min(h, *u);
    if (lo(e) > h) return std::nullopt;
    hi[static_cast<size_t>(e)] = h;
  }
  return FlowPolytope(p.graph(), p.demand(), lo, hi);
}

std::optional<FlowPolytope> shifted_cell(const FlowPolytope& p, const CellKey& k) {
  auto z = cell(p, k);
  if (!z) return std::nullopt;
  ZVec d = p.demand() - net_flow(p.graph(), k.k);
  // A zero demand is not a flow polytope here.
  if (d.isZero()) return std::nullopt;
  ZVec lo = z->lower() - k.k;
  std::vector<Capacity> hi = z->upper();
  for (int e = 0; e < p.num_edges(); ++e) hi[static_cast<size_t>(e)] = *hi[static_cast<size_t>(e)] - k.k(e);
  return FlowPolytope(p.graph(), d, lo, hi);
}

std::vector<ZVec> cell_points(const FlowPolytope& p, const CellKey& k) {
  auto z = cell(p, k);
  if (!z) return {};
  return enumerate_lattice_points(*z);
}

std::optional<TransportSpec> transport_shape(const FlowPolytope& p) {
  const DirectedGraph& g = p.graph();
  const int V = g.num_vertices(), E = g.num_edges();
  if (!p.lower().isZero()) return std::nullopt;
  for (const Capacity& u : p.upper())
    if (u) return std::nullopt;
  for (int m = 1; m < V; ++m) {
    int n = V - m;
    if (m * n != E) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        const Edge& ed = g.edge(i * n + j);
        ok = ed.tail == i && ed.head == m + j;
      }
    if (!ok) continue;
    TransportSpec s;
    for (int i = 0; i < m; ++i) s.r.push_back(-p.demand()(i));
    for (int j = 0; j < n; ++j) s.c.push_back(p.demand()(m + j));
    return s;
  }
  return std::nullopt;
}

std::string CellType::label() const {
  if (is_transport()) return margins_label(r, c);
  return "Z_(" + join(d) + ")";
}

std::string CellType::canonical_label() const {
  if (is_transport()) return margins_label(ascending(canon_r), ascending(canon_c));
  return "Z_(" + join(canon_d) + ")";
}

CellType transport_type(Margins r, Margins c) {
  CellType t;
  t.r = std::move(r);
  t.c = std::move(c);
  const auto m = static_cast<std::int64_t>(t.r.size()), n = static_cast<std::int64_t>(t.c.size());
  Margins nr;
  for (auto x : t.r) nr.push_back(-x);
  t.d = concat(nr, t.c);
  Margins sr = sorted_desc(t.r), sc = sorted_desc(t.c), cr, cc;
  for (auto x : t.r) cr.push_back(n - x);
  for (auto x : t.c) cc.push_back(m - x);
  cr = sorted_desc(cr);
  cc = sorted_desc(cc);
  ZVec own = concat(sr, sc), comp = concat(cr, cc);
  t.canonical = !lex_less(comp, own);
  t.canon_r = t.canonical ? sr : cr;
  t.canon_c = t.canonical ? sc : cc;
  Margins cn;
  for (auto x : t.canon_r) cn.push_back(-x);
  t.canon_d = concat(cn, t.canon_c);
  return t;
}

CellType flow_type(const DirectedGraph& g, const ZVec& d) {
  CellType t;
  t.d = d;
  ZVec comp = net_flow(g, ZVec::Ones(g.num_edges())) - d;
  t.canonical = !lex_less(comp, d);
  t.canon_d = t.canonical ? d : comp;
  return t;
}

CellType cell_type(const FlowPolytope& p, const CellKey& k) {
  if (auto s = transport_shape(p)) {
    const int m = s->m(), n = s->n();
    ZMat km = flow_to_matrix(k.k, m, n);
    Margins r, c;
    for (int i = 0; i < m; ++i) r.push_back(s->r[static_cast<size_t>(i)] - km.row(i).sum());
    for (int j = 0; j < n; ++j) c.push_back(s->c[static_cast<size_t>(j)] - km.col(j).sum());
    return transport_type(r, c);
  }
  return flow_type(p.graph(), p.demand() - net_flow(p.graph(), k.k));
}

std::vector<FullCell> enumerate_full_cells(const FlowPolytope& p) {
  CertifiedSubdivision cs = hyperplane_subdivision_flow(p);
  const PointConfiguration& a = cs.sub.config();
  const int full = dimension(p).dim;
  std::vector<FullCell> out;
  for (const Subset& s : cs.sub.maximal_cells()) {
    ZVec k = a.point(s.front());
    for (int i : s) k = k.cwiseMin(a.point(i));
    FullCell fc{CellKey{k}, cell_type(p, CellKey{k}), s};
    auto z = cell(p, fc.key);
    if (!z || dimension(*z).dim != full)
      throw Error("InternalError", "maximal cell is not a full-dimensional box cell");
    out.push_back(std::move(fc));
  }
  std::sort(out.begin(), out.end(), [](const FullCell& x, const FullCell& y) { return x.key < y.key; });
  return out;
}

std::vector<CellType> feasible_cell_types(int m, int n) {
  std::vector<CellType> out;
  for (const Margins& r : nondecreasing(m, 1, n - 1))
    for (const Margins& c : nondecreasing(n, 1, m - 1))
      if (std::accumulate(r.begin(), r.end(), std::int64_t(0)) == std::accumulate(c.begin(), c.end(), std::int64_t(0)))
        out.push_back(transport_type(r, c));
  auto key = [](const CellType& t) {
    Margins k{std::accumulate(t.r.begin(), t.r.end(), std::int64_t(0))};
    for (auto x : sorted_desc(t.r)) k.push_back(x);
    for (auto x : sorted_desc(t.c)) k.push_back(x);
    return k;
  };
  std::sort(out.begin(), out.end(), [&](const CellType& x, const CellType& y) { return key(x) < key(y); });
  return out;
}

std::vector<CellType> feasible_cell_types(const DirectedGraph& g) {
  const int V = g.num_vertices();
  std::vector<std::int64_t> lo(static_cast<size_t>(V)), hi(static_cast<size_t>(V));
  for (int v = 0; v < V; ++v) {
    auto in = static_cast<std::int64_t>(g.in_edges(v).size());
    auto out = static_cast<std::int64_t>(g.out_edges(v).size());
    int slack = on_undirected_cycle(g, v) ? 1 : 0;
    lo[static_cast<size_t>(v)] = -out + slack;
    hi[static_cast<size_t>(v)] = in - slack;
  }
  std::vector<CellType> res;
  ZVec d = ZVec::Zero(V);
  auto rec = [&](auto&& self, int v, std::int64_t sum) -> void {
    if (v == V) {
      if (sum == 0) res.push_back(flow_type(g, d));
      return;
    }
    for (std::int64_t x = lo[static_cast<size_t>(v)]; x <= hi[static_cast<size_t>(v)]; ++x) {
      d(v) = x;
      self(self, v + 1, sum + x);
    }
  };
  rec(rec, 0, 0);
  return res;
}

std::vector<ZVec> unit_transport_points(const Margins& r, const Margins& c) {
  FlowPolytope t = transport_polytope({r, c});
  FlowPolytope u(t.graph(), t.demand(), t.lower(), std::vector<Capacity>(r.size() * c.size(), 1));
  std::vector<ZVec> pts = enumerate_lattice_points(u);
  std::sort(pts.begin(), pts.end(), [](const ZVec& x, const ZVec& y) { return lex_less(y, x); });
  return pts;
}

std::string CatalogRow::label() const { return margins_label(r, c); }

std::vector<CatalogRow> catalog_3x4() {
  std::vector<CatalogRow> rows;
  for (const CellType& t : feasible_cell_types(3, 4)) {
    if (!t.canonical) continue;
    CatalogRow row;
    row.r = ascending(t.canon_r);
    row.c = ascending(t.canon_c);
    PointConfiguration a(unit_transport_points(row.r, row.c));
    a.set_certificate(homogeneity_certificate(a));
    CertifiedGenerators g = certified_generating_set(a);
    row.points = a.size();
    row.degree = g.set.degree;
    row.gens = g.set.gens;
    Margins cr, cc;
    for (auto x : row.r) cr.push_back(4 - x);
    for (auto x : row.c) cc.push_back(3 - x);
    cr = ascending(cr);
    cc = ascending(cc);
    if (cr != row.r || cc != row.c) row.complement = std::make_pair(cr, cc);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CellFacet> cell_facets(const FlowPolytope& p, const CellKey& k) {
  std::vector<ZVec> pts = cell_points(p, k);
  if (pts.empty()) return {};
  PointConfiguration cp(pts);
  std::vector<ZVec> ambient = enumerate_lattice_points(p);
  std::vector<CellFacet> out;
  for (Face& f : faces(cp).facets) {
    CellFacet cf;
    cf.polytope_facet = std::all_of(ambient.begin(), ambient.end(),
                                    [&](const ZVec& x) { return dot(f.functional, x) >= f.level; });
    std::vector<char> in(pts.size(), 0);
    for (int i : f.members) in[static_cast<size_t>(i)] = 1;
    for (int e = 0; e < p.num_edges() && cf.edge < 0; ++e)
      for (int side = 0; side < 2; ++side) {
        std::int64_t v = k.k(e) + side;
        bool members = true, others = false;
        for (size_t i = 0; i < pts.size(); ++i) {
          if (in[i]) members = members && pts[i](e) == v;
          else others = others || pts[i](e) != v;
        }
        if (members && others) {
          cf.edge = e;
          cf.upper = side == 1;
          break;
        }
      }
    cf.face = std::move(f);
    out.push_back(std::move(cf));
  }
  return out;
}

std::vector<CellKey> neighbor_cells(const FlowPolytope& p, const CellKey& k) {
  std::vector<FullCell> full = enumerate_full_cells(p);
  PointConfiguration ambient(enumerate_lattice_points(p));
  std::vector<ZVec> pts = cell_points(p, k);
  std::set<CellKey> found;
  for (const CellFacet& cf : cell_facets(p, k)) {
    if (cf.polytope_facet) continue;
    Subset members;
    for (int i : cf.face.members) members.push_back(ambient.find(pts[static_cast<size_t>(i)]));
    std::sort(members.begin(), members.end());
    for (const FullCell& fc : full) {
      if (fc.key == k) continue;
      if (std::includes(fc.points.begin(), fc.points.end(), members.begin(), members.end())) found.insert(fc.key);
    }
  }
  return {found.begin(), found.end()};
}

CubicRelation cubic_relation(const PointConfiguration& a, const Binomial& b) {
  if (degree(b.lead) != 3 || degree(b.trail) != 3) throw Error("NotCubic", to_string(b));
  CubicRelation r;
  for (auto [exp, side] : {std::pair{&b.lead, &r.lhs}, std::pair{&b.trail, &r.rhs}}) {
    size_t k = 0;
    for (Eigen::Index i = 0; i < exp->size(); ++i)
      for (std::int64_t t = 0; t < (*exp)(i); ++t) (*side)[k++] = a.point(static_cast<int>(i));
  }
  return r;
}

bool verify_rescuer(const Rescuer& r) {
  const auto& [A, B, C] = r.roles.lhs;
  const auto& [D, E, F] = r.roles.rhs;
  if (A + B + C != D + E + F) return false;
  if (r.kind == Rescuer::Kind::One) {
    if (r.matrices.size() != 1) return false;
    const ZVec& R = r.matrices[0];
    return R + A == E + F && R + D == B + C;
  }
  if (r.matrices.size() != 3) return false;
  const ZVec &R1 = r.matrices[0], &R2 = r.matrices[1], &R3 = r.matrices[2];
  return B + C == R1 + R2 && A + R1 == D + R3 && R2 + R3 == E + F;
}

RescueSearch rescuer_search(const FlowPolytope& p, const CubicRelation& rel, const std::optional<CellKey>& home) {
  std::vector<ZVec> ambient = enumerate_lattice_points(p);
  RescueSearch res;
  res.ambient_points = ambient.size();

  std::optional<CellKey> h = home;
  std::vector<FullCell> full = enumerate_full_cells(p);
  if (!h) {
    for (const FullCell& fc : full) {
      bool all = true;
      for (const auto* side : {&rel.lhs, &rel.rhs})
        for (const ZVec& x : *side) all = all && (x.array() >= fc.key.k.array()).all() &&
                                         (x.array() <= fc.key.k.array() + 1).all();
      if (all) {
        h = fc.key;
        break;
      }
    }
  }
  // Canonical order: points of neighbour cells outside the home cell, then the rest.
  std::vector<char> first(ambient.size(), 0);
  if (h) {
    std::set<int> home_pts;
    for (const FullCell& fc : full)
      if (fc.key == *h) home_pts.insert(fc.points.begin(), fc.points.end());
    for (const CellKey& nk : neighbor_cells(p, *h))
      for (const FullCell& fc : full)
        if (fc.key == nk)
          for (int i : fc.points)
            if (!home_pts.count(i)) first[static_cast<size_t>(i)] = 1;
  }
  std::vector<int> order(ambient.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(), [&](int i) { return first[static_cast<size_t>(i)] != 0; });
  std::vector<int> rank(ambient.size());
  for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);

  auto index_of = [&](const ZVec& x) -> int {
    if (!p.contains(x)) return -1;
    auto it = std::lower_bound(ambient.begin(), ambient.end(), x, lex_less);
    return it != ambient.end() && *it == x ? static_cast<int>(it - ambient.begin()) : -1;
  };
  auto roles = [&](int a, int d) {
    CubicRelation r;
    r.lhs = {rel.lhs[static_cast<size_t>(a)], rel.lhs[static_cast<size_t>((a + 1) % 3)],
             rel.lhs[static_cast<size_t>((a + 2) % 3)]};
    r.rhs = {rel.rhs[static_cast<size_t>(d)], rel.rhs[static_cast<size_t>((d + 1) % 3)],
             rel.rhs[static_cast<size_t>((d + 2) % 3)]};
    return r;
  };
  const ZVec S = rel.lhs[0] + rel.lhs[1] + rel.lhs[2];
  if (S != rel.rhs[0] + rel.rhs[1] + rel.rhs[2]) throw Error("NotARelation", "the two sides differ");

  int best = -1;
  for (int a = 0; a < 3; ++a)
    for (int d = 0; d < 3; ++d) {
      ++res.candidates;
      CubicRelation r = roles(a, d);
      int idx = index_of(S - r.lhs[0] - r.rhs[0]);
      if (idx < 0 || (best >= 0 && rank[static_cast<size_t>(idx)] >= best)) continue;
      best = rank[static_cast<size_t>(idx)];
      res.found = Rescuer{Rescuer::Kind::One, {ambient[static_cast<size_t>(idx)]}, r};
    }
  if (res.found) {
    if (!verify_rescuer(*res.found)) throw Error("InternalError", "rescuer identity failed");
    return res;
  }
  for (int i : order) {
    const ZVec& R1 = ambient[static_cast<size_t>(i)];
    for (int a = 0; a < 3; ++a)
      for (int d = 0; d < 3; ++d) {
        ++res.candidates;
        CubicRelation r = roles(a, d);
        ZVec R2 = r.lhs[1] + r.lhs[2] - R1, R3 = r.lhs[0] + R1 - r.rhs[0];
        if (index_of(R2) < 0 || index_of(R3) < 0) continue;
        res.found = Rescuer{Rescuer::Kind::Three, {R1, R2, R3}, r};
        if (!verify_rescuer(*res.found)) throw Error("InternalError", "rescuer identity failed");
        return res;
      }
  }
  return res;
}

// Family of high-degree Groebner elements on even shapes.

namespace {

ZMat blocks(const ZMat& tl, const ZMat& tr, const ZMat& bl, const ZMat& br) {
  ZMat m(tl.rows() + bl.rows(), tl.cols() + tr.cols());
  m << tl, tr, bl, br;
  return m;
}

}  // namespace

ZMat HighDegreeFamily::rhs_sum() const {
  ZMat s = ZMat::Zero(m, n);
  for (const auto& [mat, k] : rhs) s += k * mat;
  return s;
}

bool HighDegreeFamily::identity_holds() const {
  ZMat s = ZMat::Zero(m, n);
  for (const auto& [mat, k] : lhs) s += k * mat;
  return s == rhs_sum();
}

Binomial HighDegreeFamily::relation(const PointConfiguration& a) const {
  Binomial b{Exponent::Zero(a.size()), Exponent::Zero(a.size())};
  for (auto [side, exp] : {std::pair{&lhs, &b.lead}, std::pair{&rhs, &b.trail}})
    for (const auto& [mat, k] : *side) {
      int i = a.find(flat(mat));
      if (i < 0) throw Error("NotInConfiguration", "family matrix missing from the configuration");
      (*exp)(i) += k;
    }
  return b;
}

TermOrder HighDegreeFamily::order_hint(const PointConfiguration& a) const {
  // perm[0] is the largest variable.
  std::vector<int> rank(static_cast<size_t>(a.size()), 3);
  auto mark = [&](const ZMat& mat, int r) {
    int i = a.find(flat(mat));
    if (i < 0) throw Error("NotInConfiguration", "family matrix missing from the configuration");
    rank[static_cast<size_t>(i)] = r;
  };
  for (const ZMat& x : a2) mark(x, 2);
  for (const ZMat& x : a1) mark(x, 1);
  mark(e, 0);
  std::vector<int> perm(static_cast<size_t>(a.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int x, int y) { return rank[static_cast<size_t>(x)] > rank[static_cast<size_t>(y)]; });
  return TermOrder::grevlex(perm);
}

HighDegreeFamily high_degree_family(int m, int n) {
  if (m % 2 || n % 2) throw Error("OddDimension", std::to_string(m) + "x" + std::to_string(n));
  if (m < 4 || n < 4) throw Error("InvalidArgument", "need m, n >= 4");
  const int h = m / 2, w = n / 2;
  HighDegreeFamily f;
  f.m = m;
  f.n = n;
  const ZMat one = ZMat::Ones(h, w), zero = ZMat::Zero(h, w);
  auto unit = [&](int i, int j) {
    ZMat u = zero;
    u(i, j) = 1;
    return u;
  };
  auto hole = [&](int i, int j) { return ZMat(one - unit(i, j)); };

  f.e = blocks(one, zero, zero, one);
  f.d = blocks(zero, one, one, zero);
  f.c = ZMat::Zero(m, n);
  for (int i = 0; i < h; ++i) {
    f.c(i, 0) = 1;
    for (int j = w + 1; j < n; ++j) f.c(i, j) = 1;
    for (int j = 1; j <= w; ++j) f.c(h + i, j) = 1;
  }
  // 0-based j runs over the paper's 2..n/2.
  for (int i = 0; i < h; ++i)
    for (int j = 1; j < w; ++j) {
      ZMat a = blocks(unit(i, 0), hole(i, j), hole(i, 0), unit(i, j));
      (j == w - 1 ? f.a2 : f.a1).push_back(a);
    }
  for (int i = 0; i < h; ++i)
    for (int j = 1; j < w; ++j) f.a1.push_back(blocks(unit(i, j), hole(i, 0), hole(i, j), unit(i, 0)));

  for (const ZMat& x : f.a1) f.lhs.emplace_back(x, 1);
  for (const ZMat& x : f.a2) f.lhs.emplace_back(x, 1);
  const std::int64_t kc = w - 2, kd = (static_cast<std::int64_t>(m) * (n - 2) - n) / 2 + 1;
  if (kc > 0) f.rhs.emplace_back(f.c, kc);
  f.rhs.emplace_back(f.d, kd);
  f.rhs.emplace_back(f.e, 1);
  f.degree = m * (n - 2) / 2;

  const std::int64_t mn = static_cast<std::int64_t>(m) * n;
  f.spec.r.assign(static_cast<size_t>(m), w + mn);
  f.spec.c.assign(static_cast<size_t>(n), h);
  f.spec.c.back() = static_cast<std::int64_t>(m) * mn + h;
  f.shift = ZMat::Zero(m, n);
  f.shift.col(n - 1).setConstant(-mn);
  return f;
}

bool verify_min_generator(const PointConfiguration& a, const Binomial& b, const TermOrder& order, int search_bound) {
  if (!order.less(b.trail, b.lead)) throw Error("InvalidArgument", "lead is not the order-larger side");
  if (!is_in_ideal(a, b)) throw Error("NotInIdeal", to_string(b));
  // A proper divisor in the initial ideal implies a maximal proper divisor in it.
  for (Eigen::Index i = 0; i < b.lead.size(); ++i) {
    if (b.lead(i) == 0) continue;
    Exponent u = b.lead;
    u(i) -= 1;
    const auto d = static_cast<int>(degree(u));
    if (d < 2) continue;  // a single point is alone in its fiber
    if (d > search_bound)
      throw Error("SearchBoundExceeded", "fiber of degree " + std::to_string(d) + " above bound " +
                                             std::to_string(search_bound));
    std::vector<Exponent> fib;
    try {
      fib = fiber(a, pi(a, u), d, search_bound);
    } catch (const Error& e) {
      throw Error("SearchBoundExceeded", e.what());
    }
    for (const Exponent& v : fib)
      if (order.less(v, u)) return false;
  }
  return true;
}

}  // namespace lf
