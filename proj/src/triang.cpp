#include "latticeflow/triang.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lf {

using Eigen::Index;

namespace {

RatVector to_rat(const ZVec& v) { return cast_vec<Rational>(v); }

bool subset_of(const Subset& a, const Subset& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::vector<Subset> maximal_only(std::vector<Subset> cells) {
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::vector<Subset> out;
  for (size_t i = 0; i < cells.size(); ++i) {
    bool contained = false;
    for (size_t j = 0; j < cells.size() && !contained; ++j)
      contained = j != i && cells[j].size() > cells[i].size() && subset_of(cells[i], cells[j]);
    if (!contained) out.push_back(cells[i]);
  }
  return out;
}

// Members of the facets of conv(s).
std::vector<Subset> cell_facets(const PointConfiguration& a, const Subset& s) {
  std::vector<Subset> out;
  if (affinely_independent(a, s)) {
    if (s.size() == 1) return out;
    for (size_t k = 0; k < s.size(); ++k) {
      Subset f = s;
      f.erase(f.begin() + static_cast<long>(k));
      out.push_back(f);
    }
    return out;
  }
  for (auto& f : faces(a, s).facets) out.push_back(f.members);
  return out;
}

Subset cell_vertices(const PointConfiguration& a, const Subset& s) {
  if (affinely_independent(a, s)) return s;
  return faces(a, s).vertices;
}

int config_dim(const PointConfiguration& a) { return affine_dim(a, a.all()); }

std::vector<int> lex_order(const PointConfiguration& a, Subset idx) {
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    const ZVec &p = a.point(x), &q = a.point(y);
    return std::lexicographical_compare(p.data(), p.data() + p.size(), q.data(), q.data() + q.size());
  });
  return idx;
}

// Affine coordinates of every point with respect to an affinely independent basis b spanning aff(A).
std::vector<RatVector> barycentric_all(const PointConfiguration& a, const Subset& b) {
  const Index n = a.ambient_dim(), k = static_cast<Index>(b.size());
  RatMatrix m(n + 1, k);
  for (Index c = 0; c < k; ++c) {
    m.col(c).head(n) = to_rat(a.point(b[static_cast<size_t>(c)]));
    m(n, c) = 1;
  }
  std::vector<RatVector> out;
  for (int j = 0; j < a.size(); ++j) {
    RatVector rhs(n + 1);
    rhs.head(n) = to_rat(a.point(j));
    rhs(n) = 1;
    auto x = solve_linear(m, rhs);
    if (!x) throw Error("DegenerateInput", "point outside the affine hull of a cell");
    out.push_back(*x);
  }
  return out;
}

Subset affine_basis(const PointConfiguration& a, const Subset& s) {
  Subset b;
  for (int j : s) {
    b.push_back(j);
    if (!affinely_independent(a, b)) b.pop_back();
  }
  return b;
}

}  // namespace

Subdivision::Subdivision(PointConfiguration a, std::vector<Subset> maximal_cells)
    : a_(std::move(a)), cells_(maximal_only(std::move(maximal_cells))) {
  for (auto& c : cells_)
    for (int i : c)
      if (i < 0 || i >= a_.size()) throw Error("IndexOutOfRange", "cell index outside the configuration");
}

bool Subdivision::is_cell(const Subset& s) const {
  Subset t = s;
  std::sort(t.begin(), t.end());
  for (auto& c : cells_) {
    if (!subset_of(t, c)) continue;
    if (t.empty() || t == c || affinely_independent(a_, c) || is_face(a_, c, t)) return true;
  }
  return false;
}

bool Subdivision::is_triangulation() const {
  for (auto& c : cells_)
    if (!affinely_independent(a_, c)) return false;
  return true;
}

Subset Subdivision::unused() const {
  std::vector<bool> used(static_cast<size_t>(a_.size()), false);
  for (auto& c : cells_)
    for (int i : c) used[static_cast<size_t>(i)] = true;
  Subset out;
  for (int i = 0; i < a_.size(); ++i)
    if (!used[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

Rational AffineFunctional::operator()(const ZVec& x) const {
  Rational v = c;
  for (Index i = 0; i < x.size(); ++i) v += lin(i) * Rational(x(i));
  return v;
}

Subdivision trivial_subdivision(const PointConfiguration& a) { return Subdivision(a, {a.all()}); }

Subdivision pull(const Subdivision& d, int i) {
  const PointConfiguration& a = d.config();
  if (i < 0 || i >= a.size()) throw Error("IndexOutOfRange", "pull index outside the configuration");
  std::vector<Subset> out;
  for (auto& s : d.maximal_cells()) {
    if (!std::binary_search(s.begin(), s.end(), i)) {
      out.push_back(s);
      continue;
    }
    auto fs = cell_facets(a, s);
    if (fs.empty()) {
      out.push_back(s);
      continue;
    }
    for (auto& f : fs) {
      if (std::binary_search(f.begin(), f.end(), i)) continue;
      Subset c = f;
      c.insert(std::lower_bound(c.begin(), c.end(), i), i);
      out.push_back(c);
    }
  }
  return Subdivision(a, out);
}

Subdivision pull_all(Subdivision d, const std::vector<int>& order) {
  for (int i : order) d = pull(d, i);
  return d;
}

Subdivision pulling_triangulation(const PointConfiguration& a, std::optional<std::vector<int>> order) {
  Subset verts = faces(a).vertices;
  std::vector<int> ord = order ? *order : lex_order(a, verts);
  std::vector<int> chk = ord;
  std::sort(chk.begin(), chk.end());
  if (chk != verts) throw Error("NotVertexOrder", "pulling order must be a permutation of the vertices");
  Subdivision d = pull_all(trivial_subdivision(a), ord);
  if (!d.is_triangulation()) throw Error("InternalError", "pulling at all vertices did not triangulate");
  return d;
}

std::optional<RegularityCertificate> verify_weights(const Subdivision& d, const RatVector& w) {
  const PointConfiguration& a = d.config();
  if (w.size() != a.size()) throw Error("DimensionMismatch", "one weight per point required");
  const Index n = a.ambient_dim();
  RegularityCertificate cert{w, {}};
  for (auto& s : d.maximal_cells()) {
    RatMatrix m(static_cast<Index>(s.size()), n + 1);
    RatVector rhs(static_cast<Index>(s.size()));
    for (size_t k = 0; k < s.size(); ++k) {
      m.row(static_cast<Index>(k)).head(n) = to_rat(a.point(s[k])).transpose();
      m(static_cast<Index>(k), n) = 1;
      rhs(static_cast<Index>(k)) = w(s[k]);
    }
    auto x = solve_linear(m, rhs);
    if (!x) return std::nullopt;
    AffineFunctional phi{x->head(n), (*x)(n)};
    for (int j = 0; j < a.size(); ++j)
      if (!std::binary_search(s.begin(), s.end(), j) && !(phi(a.point(j)) < w(j))) return std::nullopt;
    cert.functionals.push_back(phi);
  }
  return cert;
}

bool verify_certificate(const Subdivision& d, const RegularityCertificate& cert) {
  const PointConfiguration& a = d.config();
  if (cert.weights.size() != a.size() || cert.functionals.size() != d.maximal_cells().size()) return false;
  for (size_t c = 0; c < d.maximal_cells().size(); ++c) {
    const Subset& s = d.maximal_cells()[c];
    const AffineFunctional& phi = cert.functionals[c];
    if (phi.lin.size() != a.ambient_dim()) return false;
    for (int j = 0; j < a.size(); ++j) {
      Rational v = phi(a.point(j));
      bool in = std::binary_search(s.begin(), s.end(), j);
      if (in ? v != cert.weights(j) : !(v < cert.weights(j))) return false;
    }
  }
  return true;
}

std::pair<Subdivision, RegularityCertificate> regular_subdivision(const PointConfiguration& a, const RatVector& w) {
  if (w.size() != a.size()) throw Error("DimensionMismatch", "one weight per point required");
  Integer scale = 1;
  for (Index i = 0; i < w.size(); ++i) scale = boost::multiprecision::lcm(scale, denominator(w(i)));
  std::vector<ZVec> lifted;
  for (int i = 0; i < a.size(); ++i) {
    ZVec p(a.ambient_dim() + 1);
    p.head(a.ambient_dim()) = a.point(i);
    Rational h = w(i) * Rational(scale);
    p(a.ambient_dim()) = static_cast<std::int64_t>(numerator(h));
    lifted.push_back(p);
  }
  PointConfiguration lc(lifted);
  FaceData fd = faces(lc);
  std::vector<Subset> cells;
  if (fd.dim == config_dim(a)) {
    cells.push_back(a.all());
  } else {
    for (auto& f : fd.facets)
      if (f.functional(a.ambient_dim()) > 0) cells.push_back(f.members);
  }
  Subdivision d(a, cells);
  auto cert = verify_weights(d, w);
  if (!cert) throw Error("InternalError", "lower hull does not verify");
  return {d, *cert};
}

Subdivision hyperplane_refine(const Subdivision& d, const IntVector& psi, const Integer& c) {
  const PointConfiguration& a = d.config();
  if (psi.size() != a.ambient_dim()) throw Error("DimensionMismatch", "functional dimension");
  std::vector<Integer> val(static_cast<size_t>(a.size()));
  for (int j = 0; j < a.size(); ++j) val[static_cast<size_t>(j)] = psi.dot(cast_vec<Integer>(a.point(j))) - c;
  std::vector<Subset> out;
  for (auto& s : d.maximal_cells()) {
    bool pos = false, neg = false;
    Subset on, plus, minus;
    for (int j : s) {
      const Integer& v = val[static_cast<size_t>(j)];
      if (v > 0) pos = true;
      if (v < 0) neg = true;
      if (v >= 0) plus.push_back(j);
      if (v <= 0) minus.push_back(j);
      if (v == 0) on.push_back(j);
    }
    if (!pos || !neg) {
      out.push_back(s);
      continue;
    }
    if (on.empty()) throw Error("CutNotRepresentable", "hyperplane meets a cell in no configuration point");
    Hull h(a, on);
    Subset verts = cell_vertices(a, s);
    for (int p : verts) {
      if (val[static_cast<size_t>(p)] <= 0) continue;
      for (int q : verts) {
        if (val[static_cast<size_t>(q)] >= 0) continue;
        Rational vp(val[static_cast<size_t>(p)]), vq(val[static_cast<size_t>(q)]);
        RatVector x = (to_rat(a.point(q)) * vp - to_rat(a.point(p)) * vq) / (vp - vq);
        if (!h.contains(x)) throw Error("CutNotRepresentable", "a cut cell half is not spanned by configuration points");
      }
    }
    out.push_back(plus);
    out.push_back(minus);
  }
  return Subdivision(a, out);
}

RegularityCertificate refine_certificate(const Subdivision& refined, const RegularityCertificate& cert,
                                         const IntVector& psi, const Integer& c) {
  const PointConfiguration& a = refined.config();
  RatVector dist(a.size());
  for (int j = 0; j < a.size(); ++j) dist(j) = Rational(abs(psi.dot(cast_vec<Integer>(a.point(j))) - c));
  Rational delta = 1;
  for (int it = 0; it < 200; ++it, delta /= 2)
    if (auto r = verify_weights(refined, RatVector(cert.weights + dist * delta))) return *r;
  throw Error("InternalError", "no admissible delta for the hyperplane refinement");
}

RegularityCertificate pull_certificate(const Subdivision& pulled, const RegularityCertificate& cert, int i) {
  Rational eps = 1;
  for (int it = 0; it < 200; ++it, eps /= 2) {
    RatVector w = cert.weights;
    w(i) -= eps;
    if (auto r = verify_weights(pulled, w)) return *r;
  }
  throw Error("InternalError", "no admissible epsilon for the pull");
}

CertifiedSubdivision hyperplane_subdivision(const PointConfiguration& a) {
  CertifiedSubdivision cs{trivial_subdivision(a), {}};
  cs.cert = *verify_weights(cs.sub, RatVector::Zero(a.size()));
  const Index n = a.ambient_dim();
  for (Index e = 0; e < n; ++e) {
    std::int64_t lo = a.point(0)(e), hi = lo;
    for (auto& p : a.points()) lo = std::min(lo, p(e)), hi = std::max(hi, p(e));
    IntVector psi = IntVector::Zero(n);
    psi(e) = 1;
    for (std::int64_t k = lo + 1; k < hi; ++k) {
      Subdivision next = hyperplane_refine(cs.sub, psi, k);
      if (next == cs.sub) continue;
      cs.cert = refine_certificate(next, cs.cert, psi, k);
      cs.sub = std::move(next);
    }
  }
  return cs;
}

CertifiedSubdivision hyperplane_subdivision_flow(const FlowPolytope& p, const EnumerateOptions& opt) {
  return hyperplane_subdivision(lattice_configuration(p, opt));
}

CertifiedSubdivision pulling_refinement(const CertifiedSubdivision& d) {
  CertifiedSubdivision cs = d;
  const PointConfiguration& a = d.sub.config();
  for (int i : lex_order(a, a.all())) {
    Subdivision next = pull(cs.sub, i);
    if (next == cs.sub) continue;
    cs.cert = pull_certificate(next, cs.cert, i);
    cs.sub = std::move(next);
  }
  return cs;
}

namespace {

std::optional<RatVector> weight_lp(const Subdivision& d, bool full) {
  const PointConfiguration& a = d.config();
  const int N = a.size();
  const int dim = config_dim(a);
  const auto& cells = d.maximal_cells();
  LpProblem lp(N);
  for (size_t ci = 0; ci < cells.size(); ++ci) {
    const Subset& s = cells[ci];
    Subset b = affine_basis(a, s);
    if (static_cast<int>(b.size()) != dim + 1) throw Error("DegenerateInput", "maximal cell is not full-dimensional");
    auto lam = barycentric_all(a, b);
    auto row = [&](int j) {
      RatVector r = RatVector::Zero(N);
      for (size_t k = 0; k < b.size(); ++k) r(b[k]) += lam[static_cast<size_t>(j)](static_cast<Index>(k));
      r(j) -= 1;
      return r;
    };
    for (int j : s)
      if (!std::binary_search(b.begin(), b.end(), j)) lp.add_eq(row(j), 0);
    std::set<int> strict;
    if (full) {
      for (int j = 0; j < N; ++j)
        if (!std::binary_search(s.begin(), s.end(), j)) strict.insert(j);
    } else {
      Hull h(a, s);
      for (int j = 0; j < N; ++j)
        if (!std::binary_search(s.begin(), s.end(), j) && h.contains(a.point(j))) strict.insert(j);
      for (auto& f : cell_facets(a, s))
        for (size_t cj = 0; cj < cells.size(); ++cj)
          if (cj != ci && subset_of(f, cells[cj]))
            for (int j : cells[cj])
              if (!std::binary_search(s.begin(), s.end(), j)) strict.insert(j);
    }
    for (int j : strict) lp.add_lt(row(j), 0);
  }
  auto r = solve_lp(lp);
  if (!r.feasible()) return std::nullopt;
  return r.point;
}

}  // namespace

std::optional<RegularityCertificate> regularity_certificate(const Subdivision& d) {
  auto w = weight_lp(d, false);
  if (!w) return std::nullopt;
  if (auto c = verify_weights(d, *w)) return c;
  w = weight_lp(d, true);
  if (!w) return std::nullopt;
  auto c = verify_weights(d, *w);
  if (!c) throw Error("InternalError", "LP weights do not verify");
  return c;
}

bool is_unimodular_triangulation(const Subdivision& d) {
  if (!d.is_triangulation()) throw Error("NotATriangulation", "a maximal cell is not a simplex");
  for (auto& s : d.maximal_cells())
    if (simplex_volume(d.config(), s) != 1) return false;
  return true;
}

std::vector<Subset> minimal_nonfaces(const Subdivision& d, int size_bound) {
  if (!d.is_triangulation()) throw Error("NotATriangulation", "minimal nonfaces need a triangulation");
  const PointConfiguration& a = d.config();
  if (size_bound <= 0) size_bound = config_dim(a) + 2;
  std::vector<Subset> out;
  Subset unused = d.unused();
  for (int i : unused) out.push_back({i});
  std::set<Subset> level;  // faces of the current size
  for (int i = 0; i < a.size(); ++i)
    if (!std::binary_search(unused.begin(), unused.end(), i)) level.insert({i});
  auto faces_of_size = [&](size_t k) {
    std::set<Subset> fs;
    for (auto& s : d.maximal_cells()) {
      if (s.size() < k) continue;
      std::vector<bool> pick(s.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
      do {
        Subset t;
        for (size_t x = 0; x < s.size(); ++x)
          if (pick[x]) t.push_back(s[x]);
        fs.insert(t);
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return fs;
  };
  for (int k = 1; k < size_bound; ++k) {
    std::set<Subset> next = faces_of_size(static_cast<size_t>(k) + 1);
    for (auto& s : level)
      for (int j = s.back() + 1; j < a.size(); ++j) {
        if (std::binary_search(unused.begin(), unused.end(), j)) continue;
        Subset t = s;
        t.push_back(j);
        if (next.count(t)) continue;
        bool minimal = true;
        for (size_t drop = 0; drop + 1 < t.size() && minimal; ++drop) {
          Subset u = t;
          u.erase(u.begin() + static_cast<long>(drop));
          minimal = level.count(u) > 0;
        }
        if (minimal) out.push_back(t);
      }
    level = std::move(next);
    if (level.empty()) break;
  }
  return out;
}

bool check_axioms(const Subdivision& d) {
  const PointConfiguration& a = d.config();
  const int dim = config_dim(a);
  const Index n = a.ambient_dim();
  const auto& cells = d.maximal_cells();
  if (cells.empty()) return false;
  for (auto& s : cells)
    if (affine_dim(a, s) != dim) return false;
  // Closures cover I.
  std::vector<bool> covered(static_cast<size_t>(a.size()), false);
  for (auto& s : cells) {
    Hull h(a, s);
    for (int j = 0; j < a.size(); ++j)
      if (h.contains(a.point(j))) covered[static_cast<size_t>(j)] = true;
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) return false;
  // Two cells meet in a common face: an affine h with h = 0 on the intersection,
  // h < 0 on the rest of one cell, h > 0 on the rest of the other.
  for (size_t x = 0; x < cells.size(); ++x)
    for (size_t y = x + 1; y < cells.size(); ++y) {
      LpProblem lp(n + 1);
      auto row = [&](int j) {
        RatVector r(n + 1);
        r.head(n) = to_rat(a.point(j));
        r(n) = 1;
        return r;
      };
      for (int j : cells[x]) {
        if (std::binary_search(cells[y].begin(), cells[y].end(), j))
          lp.add_eq(row(j), 0);
        else
          lp.add_lt(row(j), 0);
      }
      for (int j : cells[y])
        if (!std::binary_search(cells[x].begin(), cells[x].end(), j)) lp.add_gt(row(j), 0);
      if (!solve_lp(lp).feasible()) return false;
    }
  // The cells fill conv(A): volumes add up.
  auto volume = [&](const Subset& s) {
    Integer v = 0;
    Subdivision t = pulling_triangulation(PointConfiguration([&] {
      std::vector<ZVec> p;
      for (int j : s) p.push_back(a.point(j));
      return p;
    }()));
    PointConfiguration sub = t.config();
    for (auto& c : t.maximal_cells()) v += simplex_volume(sub, c);
    return v;
  };
  if (dim > 0) {
    Integer total = 0;
    for (auto& s : cells) total += volume(s);
    if (total != volume(a.all())) return false;
  }
  return true;
}

bool is_refinement(const Subdivision& fine, const Subdivision& coarse) {
  for (auto& s : fine.maximal_cells()) {
    bool inside = false;
    for (auto& t : coarse.maximal_cells()) inside = inside || subset_of(s, t);
    if (!inside) return false;
  }
  return true;
}

bool relint_partition(const Subdivision& d) {
  if (!d.is_triangulation()) throw Error("NotATriangulation", "relative interiors are checked on triangulations");
  const PointConfiguration& a = d.config();
  const Index n = a.ambient_dim();
  for (int j = 0; j < a.size(); ++j) {
    std::set<Subset> carriers;
    for (auto& s : d.maximal_cells()) {
      RatMatrix m(n + 1, static_cast<Index>(s.size()));
      for (size_t k = 0; k < s.size(); ++k) {
        m.col(static_cast<Index>(k)).head(n) = to_rat(a.point(s[k]));
        m(n, static_cast<Index>(k)) = 1;
      }
      RatVector rhs(n + 1);
      rhs.head(n) = to_rat(a.point(j));
      rhs(n) = 1;
      auto lam = solve_linear(m, rhs);
      if (!lam) continue;
      bool inside = true;
      for (Index k = 0; k < lam->size(); ++k) inside = inside && (*lam)(k) >= 0;
      if (!inside) continue;
      Subset supp;
      for (size_t k = 0; k < s.size(); ++k)
        if ((*lam)(static_cast<Index>(k)) > 0) supp.push_back(s[k]);
      carriers.insert(supp);
    }
    if (carriers.size() != 1) return false;
  }
  return true;
}

bool all_pullings_unimodular(const PointConfiguration& a, std::mt19937& rng, int max_exhaustive, int samples) {
  const FaceData fd = faces(a);
  std::vector<int> v = fd.vertices;
  std::map<Subset, bool> seen;
  auto ok = [&](const std::vector<int>& ord) {
    Subdivision t = pull_all(trivial_subdivision(a), ord);
    if (!t.is_triangulation()) throw Error("InternalError", "pulling did not triangulate");
    for (auto& c : t.maximal_cells()) {
      auto it = seen.find(c);
      if (it == seen.end()) it = seen.emplace(c, simplex_volume(a, c) == 1).first;
      if (!it->second) return false;
    }
    return true;
  };
  if (static_cast<int>(v.size()) <= max_exhaustive) {
    std::sort(v.begin(), v.end());
    do {
      if (!ok(v)) return false;
    } while (std::next_permutation(v.begin(), v.end()));
    return true;
  }
  // A vertex, then the vertices of a facet missing it: the orders behind the converse.
  for (auto& f : fd.facets)
    for (int i : v) {
      if (std::binary_search(f.members.begin(), f.members.end(), i)) continue;
      std::vector<int> ord{i};
      for (int j : v)
        if (j != i && std::binary_search(f.members.begin(), f.members.end(), j)) ord.push_back(j);
      for (int j : v)
        if (std::find(ord.begin(), ord.end(), j) == ord.end()) ord.push_back(j);
      if (!ok(ord)) return false;
    }
  for (int s = 0; s < samples; ++s) {
    std::shuffle(v.begin(), v.end(), rng);
    if (!ok(v)) return false;
  }
  return true;
}

}  // namespace lf
