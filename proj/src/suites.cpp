#include "latticeflow/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "latticeflow/cells.hpp"
#include "latticeflow/flowpoly.hpp"
#include "latticeflow/toric.hpp"
#include "latticeflow/triang.hpp"

namespace lf {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string vec_str(const ZVec& v) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  return os.str();
}

std::string describe(const FlowPolytope& p) {
  std::ostringstream os;
  os << "edges";
  for (auto& e : p.graph().edges()) os << " " << e.tail << ">" << e.head;
  os << " d=" << vec_str(p.demand()) << " l=" << vec_str(p.lower()) << " u=";
  for (int e = 0; e < p.num_edges(); ++e) os << (e ? "," : "") << p.upper_bound(e);
  return os.str();
}

// Up to 6 vertices and 8 edges, 1 <= u <= 3, demand of a random flow in the box with |d_v| <= 3.
std::optional<FlowPolytope> random_flow_polytope(Rng& rng, bool with_lower) {
  const int nv = uniform(rng, 2, 6);
  const int ne = uniform(rng, nv - 1, 8);
  DirectedGraph g(nv);
  for (int e = 0; e < ne; ++e) {
    int a = uniform(rng, 0, nv - 1), b = uniform(rng, 0, nv - 2);
    if (b >= a) ++b;
    g.add_edge(a, b);
  }
  ZVec l = ZVec::Zero(ne), f(ne);
  std::vector<Capacity> u(static_cast<size_t>(ne));
  for (int e = 0; e < ne; ++e) {
    const int ue = uniform(rng, 1, 3);
    u[static_cast<size_t>(e)] = ue;
    if (with_lower && uniform(rng, 0, 2) == 0) l(e) = uniform(rng, 1, ue);
    f(e) = uniform(rng, static_cast<int>(l(e)), ue);
  }
  ZVec d = net_flow(g, f);
  if (d.isZero() || d.cwiseAbs().maxCoeff() > 3) return std::nullopt;
  return FlowPolytope(g, d, l, u);
}

std::optional<std::vector<ZVec>> guarded_points(const FlowPolytope& p, std::size_t guard) {
  try {
    return enumerate_lattice_points(p, {1, guard});
  } catch (const Error& e) {
    if (e.code() != "GuardExceeded") throw;
    return std::nullopt;
  }
}

struct Tally {
  SuiteResult r;
  explicit Tally(std::string name) { r.name = std::move(name), r.pass = true; }
  void fail(const std::string& why) {
    if (r.pass) r.detail = why;
    r.pass = false;
  }
};

SuiteResult degree3(const SuiteOptions& opt) {
  Tally t("degree3");
  Rng rng(opt.seed);
  const int want = opt.count ? opt.count : 50;
  const std::size_t guard = opt.point_guard ? opt.point_guard : 60;
  std::map<int, int> degrees;
  int tries = 0, lowered = 0;
  while (t.r.cases < want && ++tries < 200 * want) {
    auto p = random_flow_polytope(rng, tries % 3 == 0);
    if (!p) continue;
    auto pts = guarded_points(*p, guard);
    if (!pts || pts->size() < 3 || dimension(*p).dim < 2) continue;
    PointConfiguration a(*pts, flow_certificate(*p));
    int deg = certified_generating_set(a).set.degree;
    ++degrees[deg];
    if (!p->lower().isZero()) ++lowered;
    if (deg > 3) t.fail("degree " + std::to_string(deg) + " for " + describe(*p));
    ++t.r.cases;
  }
  if (t.r.cases < want) t.fail("only " + std::to_string(t.r.cases) + " instances generated");
  if (t.r.pass) {
    std::ostringstream os;
    os << "generator degrees";
    for (auto [d, k] : degrees) os << " " << d << ":" << k;
    os << ", " << lowered << " with lower bounds";
    t.r.detail = os.str();
  }
  return t.r;
}

// Every 0/1 transport polytope with two rows and n <= 5 columns, up to row and column order.
SuiteResult cells2xn(const SuiteOptions&) {
  Tally t("cells2xn");
  int maxdeg = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::int64_t> c(static_cast<size_t>(n), 0);
    std::function<void(int, std::int64_t)> rec = [&](int j, std::int64_t top) {
      if (j == n) {
        std::int64_t s = 0;
        for (auto x : c) s += x;
        for (std::int64_t r2 = 0; 2 * r2 <= s; ++r2) {
          std::int64_t r1 = s - r2;
          if (s == 0 || r1 > n) continue;
          FlowPolytope tp = transport_polytope({{r1, r2}, c});
          FlowPolytope unit(tp.graph(), tp.demand(), tp.lower(), std::vector<Capacity>(static_cast<size_t>(2 * n), 1));
          auto pts = enumerate_lattice_points(unit);
          if (pts.empty()) continue;
          PointConfiguration a(pts, flow_certificate(unit));
          int deg = certified_generating_set(a).set.degree;
          maxdeg = std::max(maxdeg, deg);
          if (deg > 2) t.fail("degree " + std::to_string(deg) + " for r=" + std::to_string(r1) + "," + std::to_string(r2));
          ++t.r.cases;
        }
        return;
      }
      for (std::int64_t x = top; x >= 0; --x) {
        c[static_cast<size_t>(j)] = x;
        rec(j + 1, x);
      }
    };
    rec(0, 2);
  }
  if (t.r.pass) t.r.detail = "largest generator degree " + std::to_string(maxdeg);
  return t.r;
}

SuiteResult gb_bound(const SuiteOptions& opt) {
  Tally t("gb-bound");
  Rng rng(opt.seed);
  const int want = opt.count ? opt.count : 20;
  const std::size_t guard = opt.point_guard ? opt.point_guard : 60;
  int tries = 0, maxdeg = 0;
  while (t.r.cases < want && ++tries < 200 * want) {
    const int m = uniform(rng, 2, 3), n = uniform(rng, 2, 4);
    TransportSpec s;
    for (int i = 0; i < m; ++i) s.r.push_back(uniform(rng, 1, 4));
    for (int j = 0; j < n; ++j) s.c.push_back(uniform(rng, 1, 4));
    std::int64_t sr = 0, sc = 0;
    for (auto x : s.r) sr += x;
    for (auto x : s.c) sc += x;
    if (sr != sc) continue;
    FlowPolytope p = transport_polytope(s);
    auto pts = guarded_points(p, guard);
    if (!pts || pts->size() < 2) continue;
    std::string name = "T(" + vec_str(ZVec::Map(s.r.data(), m)) + " | " + vec_str(ZVec::Map(s.c.data(), n)) + ")";
    ++t.r.cases;
    CertifiedSubdivision tr = pulling_refinement(hyperplane_subdivision_flow(p));
    const PointConfiguration& a = tr.sub.config();
    if (!verify_certificate(tr.sub, tr.cert)) {
      t.fail(name + ": certificate rejected");
      continue;
    }
    if (!is_unimodular_triangulation(tr.sub)) {
      t.fail(name + ": not unimodular");
      continue;
    }
    TriangulationBasis b = gb_from_triangulation(a, tr.sub, tr.cert);
    for (auto& g : b.gb) {
      maxdeg = std::max<int>(maxdeg, static_cast<int>(g.degree()));
      if (g.degree() > m * n / 2) t.fail(name + ": degree " + std::to_string(g.degree()));
      if (g.lead.maxCoeff() > 1) t.fail(name + ": lead " + monomial_string(g.lead) + " not squarefree");
    }
    auto key = [](std::vector<Binomial> g) {
      std::vector<std::string> k;
      for (auto& x : g) k.push_back(to_string(x));
      std::sort(k.begin(), k.end());
      return k;
    };
    if (!is_reduced_groebner(b.gb, b.order) || key(buchberger_reduce(b.gb, b.order)) != key(b.gb))
      t.fail(name + ": basis changed under Buchberger reduction");
  }
  if (t.r.cases < want) t.fail("only " + std::to_string(t.r.cases) + " instances generated");
  if (t.r.pass) t.r.detail = "largest basis degree " + std::to_string(maxdeg);
  return t.r;
}

// 0/1 cells of random flow polytopes and transports, and stretched unimodular simplices.
SuiteResult paco(const SuiteOptions& opt) {
  Tally t("paco");
  Rng rng(opt.seed);
  std::mt19937 sampler(static_cast<unsigned>(opt.seed));
  const int want = opt.count ? opt.count : 30;
  const std::size_t guard = opt.point_guard ? opt.point_guard : 80;
  int cells = 0, stretched = 0, exhaustive = 0, tries = 0;
  auto check = [&](const std::vector<ZVec>& pts, bool expect_width_one, const std::string& name) {
    PointConfiguration a(pts);
    if (affine_dim(a, a.all()) < 1) return false;
    const bool w1 = facet_width_one(a);
    const bool pulls = all_pullings_unimodular(a, sampler, 7, 40);
    if (static_cast<int>(faces(a).vertices.size()) <= 7) ++exhaustive;
    if (w1 != pulls) t.fail(name + ": facet width one is " + (w1 ? "true" : "false") + " but pullings disagree");
    if (w1 != expect_width_one) t.fail(name + ": unexpected facet width");
    ++t.r.cases;
    return true;
  };
  while (cells < want && ++tries < 100 * want) {
    std::optional<FlowPolytope> p;
    if (tries % 2) {
      p = random_flow_polytope(rng, true);
    } else {
      const int m = uniform(rng, 2, 3), n = uniform(rng, 2, 3);
      TransportSpec s;
      for (int i = 0; i < m; ++i) s.r.push_back(uniform(rng, 1, 4));
      for (int j = 0; j < n; ++j) s.c.push_back(uniform(rng, 1, 4));
      std::int64_t diff = 0;
      for (auto x : s.r) diff += x;
      for (auto x : s.c) diff -= x;
      if (diff) continue;
      p = transport_polytope(s);
    }
    if (!p || !guarded_points(*p, guard)) continue;
    std::vector<ZVec> pts = enumerate_lattice_points(*p);
    auto full = enumerate_full_cells(*p);
    if (full.empty()) continue;
    const FullCell& fc = full[static_cast<size_t>(uniform(rng, 0, static_cast<int>(full.size()) - 1))];
    std::vector<ZVec> cp;
    for (int i : fc.points) cp.push_back(pts[static_cast<size_t>(i)]);
    if (check(cp, true, "cell " + fc.type.label() + " of " + describe(*p))) ++cells;
  }
  while (stretched < want) {
    const int d = uniform(rng, 1, 4), k = uniform(rng, 2, 3), j = uniform(rng, 0, d - 1);
    ZMat u = ZMat::Identity(d, d);
    for (int s = 0; s < 2 && d > 1; ++s) {
      int a = uniform(rng, 0, d - 1), b = uniform(rng, 0, d - 2);
      if (b >= a) ++b;
      u.row(a) += uniform(rng, -1, 1) * u.row(b);
    }
    std::vector<ZVec> verts{ZVec::Zero(d)};
    for (int i = 0; i < d; ++i) {
      ZVec e = ZVec::Zero(d);
      e(i) = i == j ? k : 1;
      verts.push_back(u.transpose() * e);
    }
    if (check(hull_lattice_points(verts), false, "simplex stretched by " + std::to_string(k) + " in dim " + std::to_string(d)))
      ++stretched;
  }
  if (cells < want) t.fail("only " + std::to_string(cells) + " cells generated");
  if (t.r.pass)
    t.r.detail = std::to_string(cells) + " cells, " + std::to_string(stretched) + " stretched simplices, " +
                 std::to_string(exhaustive) + " with every pulling order";
  return t.r;
}

SuiteResult bvn(const SuiteOptions& opt) {
  Tally t("bvn");
  Rng rng(opt.seed);
  const int want = opt.count ? opt.count : 100;
  const std::size_t guard = opt.point_guard ? opt.point_guard : 3000;
  int lowered = 0, tries = 0;
  while (t.r.cases < want && ++tries < 100 * want) {
    auto p = random_flow_polytope(rng, tries % 2 == 0);
    if (!p || !guarded_points(*p, guard)) continue;
    const FlowData base = p->data();
    for (std::int64_t k = uniform(rng, 1, 5); k >= 1; --k) {
      std::vector<Capacity> ku;
      for (int e = 0; e < p->num_edges(); ++e) ku.push_back(k * p->upper_bound(e));
      FlowPolytope kp(base.g, k * base.d, k * base.l, ku);
      auto pts = guarded_points(kp, guard);
      if (!pts) continue;
      if (pts->empty()) break;
      const ZVec& f = (*pts)[static_cast<size_t>(uniform(rng, 0, static_cast<int>(pts->size()) - 1))];
      auto parts = bvn_decompose(*p, f, k);
      ZVec sum = ZVec::Zero(f.size());
      bool members = static_cast<std::int64_t>(parts.size()) == k;
      for (auto& q : parts) sum += q, members &= p->contains(q);
      if (!members || sum != f) t.fail("k=" + std::to_string(k) + " f=" + vec_str(f) + " for " + describe(*p));
      if (!base.l.isZero()) ++lowered;
      ++t.r.cases;
      break;
    }
  }
  if (t.r.cases < want) t.fail("only " + std::to_string(t.r.cases) + " instances generated");
  if (lowered < want / 5) t.fail("only " + std::to_string(lowered) + " instances with lower bounds");
  if (t.r.pass) t.r.detail = std::to_string(lowered) + " with nonzero lower bounds";
  return t.r;
}

// Volume lemma, origin independence and the three volume computations on random simplices.
SuiteResult volume(const SuiteOptions& opt) {
  Tally t("volume");
  Rng rng(opt.seed);
  const int want = opt.count ? opt.count : 200;
  int three_way = 0;
  while (t.r.cases < want) {
    const int d = 1 + t.r.cases % 4;
    const int n = d + (uniform(rng, 0, 2) == 0 ? 1 : 0);
    std::vector<ZVec> ps;
    for (int i = 0; i <= d; ++i) {
      ZVec v(n);
      for (int e = 0; e < n; ++e) v(e) = uniform(rng, -3, 3);
      ps.push_back(v);
    }
    std::set<std::vector<std::int64_t>> distinct;
    for (auto& p : ps) distinct.insert({p.begin(), p.end()});
    if (distinct.size() != ps.size()) continue;
    PointConfiguration a(ps);
    if (!affinely_independent(a, a.all())) continue;
    const std::string name = "simplex #" + std::to_string(t.r.cases);
    ++t.r.cases;

    IntMatrix edges(d, n), local(d, d);
    AffineFrame fr = affine_frame(a, a.all());
    for (int i = 0; i < d; ++i) {
      for (int e = 0; e < n; ++e) edges(i, e) = ps[static_cast<size_t>(i + 1)](e) - ps[0](e);
      ZVec c = fr.coords(ps[static_cast<size_t>(i + 1)]);
      for (int e = 0; e < d; ++e) local(i, e) = c(e);
    }
    Integer by_index = lattice_index(edges);
    Integer by_det = abs(determinant(local));
    if (by_index != by_det) t.fail(name + ": lattice index and determinant differ");
    if (auto pc = parallelepiped_count(local, 200000)) {
      ++three_way;
      if (*pc != by_index || *pc != by_det) t.fail(name + ": parallelepiped count differs");
    }
    // Each vertex in turn at the origin.
    for (int s = 1; s <= d; ++s) {
      std::vector<ZVec> rot(ps.begin() + s, ps.end());
      rot.insert(rot.end(), ps.begin(), ps.begin() + s);
      PointConfiguration b(rot);
      if (simplex_volume(b, b.all()) != by_index) t.fail(name + ": volume depends on the origin");
    }
    for (auto& f : faces(a).facets)
      if (facet_width(a, a.all(), f.members) * simplex_volume(a, f.members) != by_index)
        t.fail(name + ": volume lemma fails");
  }
  if (t.r.pass) t.r.detail = std::to_string(three_way) + " with all three computations";
  return t.r;
}

}  // namespace

std::vector<std::string> suite_names() { return {"degree3", "cells2xn", "gb-bound", "paco", "bvn", "volume"}; }

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "degree3") return degree3(opt);
  if (name == "cells2xn") return cells2xn(opt);
  if (name == "gb-bound") return gb_bound(opt);
  if (name == "paco") return paco(opt);
  if (name == "bvn") return bvn(opt);
  if (name == "volume") return volume(opt);
  throw Error("UnknownSuite", name);
}

}  // namespace lf
