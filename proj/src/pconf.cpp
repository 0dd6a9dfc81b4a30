#include "latticeflow/pconf.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lf {

using Eigen::Index;

namespace {

IntVector to_int(const ZVec& v) { return cast_vec<Integer>(v); }

RatVector to_rat(const ZVec& v) { return cast_vec<Rational>(v); }

struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(size_t i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
  bool test(size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w.resize(w.size());
    for (size_t k = 0; k < w.size(); ++k) r.w[k] = w[k] & o.w[k];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (size_t k = 0; k < w.size(); ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
};

void make_primitive(IntVector& v) {
  Integer g = gcd_of(v);
  if (g > 1)
    for (Index i = 0; i < v.size(); ++i) v(i) /= g;
}

// Extreme rays of {h : h . (1, y_j) >= 0 for all j}; the y_j affinely span Z^d.
std::vector<IntVector> dd_rays(const std::vector<ZVec>& y, int d) {
  const size_t n = y.size();
  std::vector<IntVector> g(n);
  for (size_t j = 0; j < n; ++j) {
    g[j] = IntVector(d + 1);
    g[j](0) = 1;
    for (int k = 0; k < d; ++k) g[j](k + 1) = y[j](k);
  }
  // Initial simplicial cone from d+1 independent generators.
  std::vector<size_t> basis;
  {
    RatMatrix cur(0, d + 1);
    for (size_t j = 0; j < n && static_cast<int>(basis.size()) < d + 1; ++j) {
      RatMatrix next(cur.rows() + 1, d + 1);
      next.topRows(cur.rows()) = cur;
      next.row(cur.rows()) = cast_vec<Rational>(g[j]).transpose();
      if (rank(next) == next.rows()) {
        cur = next;
        basis.push_back(j);
      }
    }
    if (static_cast<int>(basis.size()) != d + 1) throw Error("InternalError", "frame is not full-dimensional");
  }
  RatMatrix gb(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) gb.row(i) = cast_vec<Rational>(g[basis[static_cast<size_t>(i)]]).transpose();
  // Columns of the inverse are the initial rays.
  RatMatrix aug(d + 1, 2 * (d + 1));
  aug.leftCols(d + 1) = gb;
  aug.rightCols(d + 1) = RatMatrix::Identity(d + 1, d + 1);
  rref(aug);
  RatMatrix inv = aug.rightCols(d + 1);

  struct Ray {
    IntVector h;
    Bits zero;
  };
  std::vector<Ray> rays;
  for (int k = 0; k <= d; ++k) {
    Ray r{primitive(RatVector(inv.col(k))), Bits(n)};
    for (int i = 0; i <= d; ++i)
      if (i != k) r.zero.set(basis[static_cast<size_t>(i)]);
    rays.push_back(std::move(r));
  }
  std::vector<bool> done(n, false);
  for (auto b : basis) done[b] = true;

  for (size_t j = 0; j < n; ++j) {
    if (done[j]) continue;
    std::vector<Integer> s(rays.size());
    std::vector<size_t> pos, neg;
    for (size_t r = 0; r < rays.size(); ++r) {
      s[r] = rays[r].h.dot(g[j]);
      if (s[r] > 0) pos.push_back(r);
      if (s[r] < 0) neg.push_back(r);
    }
    std::vector<Ray> next;
    next.reserve(rays.size());
    if (!neg.empty()) {
      for (size_t p : pos)
        for (size_t q : neg) {
          Bits common = rays[p].zero & rays[q].zero;
          bool adjacent = true;
          for (size_t r = 0; r < rays.size() && adjacent; ++r)
            if (r != p && r != q && common.subset_of(rays[r].zero)) adjacent = false;
          if (!adjacent) continue;
          Ray nr{IntVector(s[p] * rays[q].h - s[q] * rays[p].h), common};
          make_primitive(nr.h);
          nr.zero.set(j);
          next.push_back(std::move(nr));
        }
    }
    for (size_t r = 0; r < rays.size(); ++r) {
      if (s[r] < 0) continue;
      if (s[r] == 0) rays[r].zero.set(j);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
    done[j] = true;
  }
  std::vector<IntVector> out;
  for (auto& r : rays) out.push_back(r.h);
  return out;
}

std::vector<ZVec> subset_coords(const PointConfiguration& a, const Subset& j, const AffineFrame& f) {
  std::vector<ZVec> y;
  for (int i : j) y.push_back(f.coords(a.point(i)));
  return y;
}

Face face_from_ray(const Subset& j, const AffineFrame& f,
                   const std::vector<ZVec>& y, const IntVector& h) {
  Face face;
  IntVector w = h.tail(f.dim);
  for (size_t k = 0; k < j.size(); ++k) {
    Integer v = h(0) + w.dot(to_int(y[k]));
    if (v == 0) face.members.push_back(j[k]);
  }
  face.functional = f.left_inverse * w;
  face.level = face.functional.dot(to_int(f.origin)) - h(0);
  return face;
}

bool next_combination(std::vector<int>& s, int n) {
  int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[static_cast<size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++s[static_cast<size_t>(i)];
  for (int t = i + 1; t < k; ++t) s[static_cast<size_t>(t)] = s[static_cast<size_t>(t - 1)] + 1;
  return true;
}

}  // namespace

PointConfiguration::PointConfiguration(std::vector<ZVec> points,
                                       std::optional<HomogeneityCertificate> cert)
    : points_(std::move(points)) {
  dim_ = points_.empty() ? 0 : static_cast<int>(points_.front().size());
  for (auto& p : points_)
    if (p.size() != dim_) throw Error("DimensionMismatch", "points of different dimensions");
  std::vector<std::vector<std::int64_t>> keys;
  for (auto& p : points_) keys.emplace_back(p.data(), p.data() + p.size());
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw Error("DuplicatePoint", "configuration points must be distinct");
  set_certificate(std::move(cert));
}

void PointConfiguration::set_certificate(std::optional<HomogeneityCertificate> c) {
  if (c) {
    if (c->c == 0 || c->phi.size() != dim_) throw Error("BadCertificate", "homogeneity certificate malformed");
    for (auto& p : points_)
      if (c->phi.dot(to_int(p)) != c->c) throw Error("BadCertificate", "functional not constant on points");
  }
  cert_ = std::move(c);
}

Subset PointConfiguration::all() const {
  Subset s(points_.size());
  for (size_t i = 0; i < s.size(); ++i) s[i] = static_cast<int>(i);
  return s;
}

int PointConfiguration::find(const ZVec& p) const {
  for (size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == p) return static_cast<int>(i);
  return -1;
}

bool AffineFrame::contains(const ZVec& x) const {
  IntVector d = to_int(ZVec(x - origin));
  return perp.rows() == 0 || (perp * d).isZero();
}

ZVec AffineFrame::coords(const ZVec& x) const {
  IntVector d = to_int(ZVec(x - origin));
  IntVector l = left_inverse.transpose() * d;
  ZVec r(l.size());
  for (Index i = 0; i < l.size(); ++i) r(i) = l(i).convert_to<std::int64_t>();
  return r;
}

AffineFrame affine_frame(const PointConfiguration& a, const Subset& j) {
  if (j.empty()) throw Error("DegenerateInput", "affine frame of an empty subset");
  AffineFrame f;
  const Index n = a.ambient_dim();
  f.origin = a.point(j.front());
  IntMatrix diff(static_cast<Index>(j.size()) - 1, n);
  for (size_t k = 1; k < j.size(); ++k) diff.row(static_cast<Index>(k) - 1) = to_int(ZVec(a.point(j[k]) - f.origin)).transpose();
  auto perp = integer_kernel(diff);
  f.perp = IntMatrix(static_cast<Index>(perp.size()), n);
  for (size_t k = 0; k < perp.size(); ++k) f.perp.row(static_cast<Index>(k)) = perp[k].transpose();
  auto basis = integer_kernel(f.perp);
  f.dim = static_cast<int>(basis.size());
  f.basis = IntMatrix(f.dim, n);
  for (int k = 0; k < f.dim; ++k) f.basis.row(k) = basis[static_cast<size_t>(k)].transpose();
  HnfResult r = hnf(IntMatrix(f.basis.transpose()));
  f.left_inverse = IntMatrix(r.u.topRows(f.dim).transpose());
  if (IntMatrix(f.basis * f.left_inverse) != IntMatrix::Identity(f.dim, f.dim))
    throw Error("InternalError", "direction lattice not saturated");
  return f;
}

int affine_dim(const PointConfiguration& a, const Subset& j) {
  if (j.empty()) return -1;
  IntMatrix diff(static_cast<Index>(j.size()) - 1, a.ambient_dim());
  for (size_t k = 1; k < j.size(); ++k)
    diff.row(static_cast<Index>(k) - 1) = to_int(ZVec(a.point(j[k]) - a.point(j.front()))).transpose();
  return static_cast<int>(rank(diff));
}

bool affinely_independent(const PointConfiguration& a, const Subset& s) {
  return !s.empty() && affine_dim(a, s) == static_cast<int>(s.size()) - 1;
}

FaceData faces(const PointConfiguration& a, const Subset& j) {
  FaceData fd;
  AffineFrame f = affine_frame(a, j);
  fd.dim = f.dim;
  if (f.dim == 0) {
    fd.vertices = j;
    return fd;
  }
  auto y = subset_coords(a, j, f);
  for (auto& h : dd_rays(y, f.dim)) fd.facets.push_back(face_from_ray(j, f, y, h));
  std::sort(fd.facets.begin(), fd.facets.end(),
            [](const Face& x, const Face& z) { return x.members < z.members; });
  for (size_t k = 0; k < j.size(); ++k) {
    RatMatrix normals(0, f.dim);
    for (auto& face : fd.facets) {
      if (!std::binary_search(face.members.begin(), face.members.end(), j[k])) continue;
      normals.conservativeResize(normals.rows() + 1, f.dim);
      normals.row(normals.rows() - 1) = cast_vec<Rational>(IntVector(f.basis * face.functional)).transpose();
    }
    if (rank(normals) == f.dim) fd.vertices.push_back(j[k]);
  }
  return fd;
}

FaceData faces(const PointConfiguration& a) { return faces(a, a.all()); }

std::vector<Face> facets_bruteforce(const PointConfiguration& a, const Subset& j) {
  AffineFrame f = affine_frame(a, j);
  std::vector<Face> out;
  if (f.dim == 0) return out;
  auto y = subset_coords(a, j, f);
  const int d = f.dim, n = static_cast<int>(j.size());
  std::set<Subset> seen;
  std::vector<int> c(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = i;
  do {
    IntMatrix m(d - 1, d);
    for (int i = 1; i < d; ++i)
      m.row(i - 1) = to_int(ZVec(y[static_cast<size_t>(c[static_cast<size_t>(i)])] - y[static_cast<size_t>(c[0])])).transpose();
    auto ker = integer_kernel(m);
    if (ker.size() != 1) continue;
    IntVector w = ker[0];
    Integer base = w.dot(to_int(y[static_cast<size_t>(c[0])]));
    bool below = false, above = false;
    for (auto& yy : y) {
      Integer v = w.dot(to_int(yy));
      if (v < base) below = true;
      if (v > base) above = true;
    }
    if (below && above) continue;
    if (below) {
      w = -w;
      base = -base;
    }
    IntVector h(d + 1);
    h(0) = -base;
    h.tail(d) = w;
    Face face = face_from_ray(j, f, y, h);
    if (seen.insert(face.members).second) out.push_back(face);
  } while (next_combination(c, n));
  std::sort(out.begin(), out.end(), [](const Face& x, const Face& z) { return x.members < z.members; });
  return out;
}

bool is_vertex_lp(const PointConfiguration& a, const Subset& j, int i) {
  LpProblem p(a.ambient_dim());
  for (int k : j)
    if (k != i) p.add_lt(to_rat(ZVec(a.point(i) - a.point(k))), 0);
  return solve_lp(p).feasible();
}

std::optional<Face> face_certificate(const PointConfiguration& a, const Subset& j, const Subset& f) {
  const Index n = a.ambient_dim();
  LpProblem p(n + 1);
  for (int k : j) {
    RatVector row(n + 1);
    row.head(n) = to_rat(a.point(k));
    row(n) = -1;
    if (std::binary_search(f.begin(), f.end(), k))
      p.add_eq(row, 0);
    else
      p.add_gt(row, 0);
  }
  for (int k : f)
    if (!std::binary_search(j.begin(), j.end(), k)) return std::nullopt;
  auto c = solve_lp(p);
  if (!c.feasible()) return std::nullopt;
  IntVector sol = primitive(c.point);
  Face face;
  face.members = f;
  face.functional = sol.head(n);
  face.level = sol(n);
  return face;
}

Integer facet_width(const PointConfiguration& a, const Subset& j, const Subset& f) {
  FaceData fd = faces(a, j);
  AffineFrame fr = affine_frame(a, j);
  for (auto& face : fd.facets) {
    if (face.members != f) continue;
    Integer spread = 0;
    for (int k : j) spread = std::max(spread, face.functional.dot(to_int(a.point(k))) - face.level);
    Integer g = gcd_of(IntVector(fr.basis * face.functional));
    return spread / g;
  }
  throw Error("NotAFacet", "subset is not a facet");
}

std::optional<Integer> parallelepiped_count(const IntMatrix& g, long box_guard) {
  const Index k = g.rows();
  std::vector<long> lo(static_cast<size_t>(k), 0), hi(static_cast<size_t>(k), 0);
  double box = 1;  // only a size estimate for the guard
  for (Index c = 0; c < k; ++c) {
    for (Index r = 0; r < k; ++r) {
      long v = g(r, c).convert_to<long>();
      (v < 0 ? lo : hi)[static_cast<size_t>(c)] += v;
    }
    box *= static_cast<double>(hi[static_cast<size_t>(c)] - lo[static_cast<size_t>(c)] + 1);
  }
  if (box > static_cast<double>(box_guard)) return std::nullopt;
  RatMatrix gt = cast_mat<Rational>(IntMatrix(g.transpose()));
  RatMatrix aug(k, 2 * k);
  aug.leftCols(k) = gt;
  aug.rightCols(k) = RatMatrix::Identity(k, k);
  rref(aug);
  RatMatrix inv = aug.rightCols(k);
  Integer count = 0;
  std::vector<long> x(lo);
  for (;;) {
    RatVector b(k);
    for (Index c = 0; c < k; ++c) b(c) = x[static_cast<size_t>(c)];
    RatVector lam = inv * b;
    bool inside = true;
    for (Index i = 0; i < k && inside; ++i)
      if (lam(i) < 0 || lam(i) >= 1) inside = false;
    if (inside) ++count;
    Index c = 0;
    while (c < k && x[static_cast<size_t>(c)] == hi[static_cast<size_t>(c)]) {
      x[static_cast<size_t>(c)] = lo[static_cast<size_t>(c)];
      ++c;
    }
    if (c == k) break;
    ++x[static_cast<size_t>(c)];
  }
  return count;
}

Integer normalized_volume(const PointConfiguration& a, const Subset& s) {
  if (!affinely_independent(a, s)) throw Error("AffinelyDependent", "volume of a non-simplex");
  const Index k = static_cast<Index>(s.size()) - 1;
  if (k == 0) return 1;
  IntMatrix edges(k, a.ambient_dim());
  for (Index i = 0; i < k; ++i)
    edges.row(i) = to_int(ZVec(a.point(s[static_cast<size_t>(i + 1)]) - a.point(s[0]))).transpose();
  Integer by_index = lattice_index(edges);
  AffineFrame f = affine_frame(a, s);
  IntMatrix local(k, k);
  for (Index i = 0; i < k; ++i) local.row(i) = to_int(f.coords(a.point(s[static_cast<size_t>(i + 1)]))).transpose();
  if (abs(determinant(local)) != by_index) throw Error("InternalError", "volume methods disagree (det)");
  if (auto pc = parallelepiped_count(local); pc && *pc != by_index)
    throw Error("InternalError", "volume methods disagree (parallelepiped)");
  if (k == a.ambient_dim() && abs(determinant(edges)) != by_index)
    throw Error("InternalError", "volume methods disagree (ambient det)");
  return by_index;
}

bool is_unimodular_simplex(const PointConfiguration& a, const Subset& s) {
  return normalized_volume(a, s) == 1;
}

Integer simplex_volume(const PointConfiguration& a, const Subset& s) {
  if (!affinely_independent(a, s)) throw Error("AffinelyDependent", "volume of a non-simplex");
  const Index k = static_cast<Index>(s.size()) - 1;
  if (k == 0) return 1;
  IntMatrix edges(k, a.ambient_dim());
  for (Index i = 0; i < k; ++i)
    edges.row(i) = to_int(ZVec(a.point(s[static_cast<size_t>(i + 1)]) - a.point(s[0]))).transpose();
  return lattice_index(edges);
}

Hull::Hull(const PointConfiguration& a, const Subset& j) : frame_(affine_frame(a, j)) {
  fd_ = faces(a, j);
  for (auto& face : fd_.facets) {
    IntVector h(frame_.dim + 1);
    h(0) = face.functional.dot(to_int(frame_.origin)) - face.level;
    h.tail(frame_.dim) = frame_.basis * face.functional;
    rays_.push_back(h);
  }
}

bool Hull::contains(const RatVector& x) const {
  RatVector d = x - to_rat(frame_.origin);
  if (frame_.perp.rows() && !(cast_mat<Rational>(frame_.perp) * d).isZero()) return false;
  RatVector y = cast_mat<Rational>(frame_.left_inverse).transpose() * d;
  for (auto& h : rays_) {
    Rational v = Rational(h(0));
    for (Index i = 0; i < y.size(); ++i) v += Rational(h(i + 1)) * y(i);
    if (v < 0) return false;
  }
  return true;
}

bool Hull::contains(const ZVec& x) const {
  if (!frame_.contains(x)) return false;
  IntVector y = to_int(frame_.coords(x));
  for (auto& h : rays_)
    if (h(0) + h.tail(frame_.dim).dot(y) < 0) return false;
  return true;
}

Subset closure(const PointConfiguration& a, const Subset& j) {
  if (j.empty()) return {};
  Hull h(a, j);
  Subset out;
  for (int i = 0; i < a.size(); ++i)
    if (h.contains(a.point(i))) out.push_back(i);
  return out;
}

bool in_hull(const PointConfiguration& a, const Subset& j, const RatVector& x) {
  if (j.empty()) return false;
  return Hull(a, j).contains(x);
}

bool in_hull_lp(const PointConfiguration& a, const Subset& j, const RatVector& x) {
  const Index k = static_cast<Index>(j.size());
  LpProblem p(k);
  for (Index i = 0; i < k; ++i) {
    RatVector e = RatVector::Zero(k);
    e(i) = 1;
    p.add_ge(e, 0);
  }
  p.add_eq(RatVector::Ones(k), 1);
  for (Index c = 0; c < a.ambient_dim(); ++c) {
    RatVector row(k);
    for (Index i = 0; i < k; ++i) row(i) = a.point(j[static_cast<size_t>(i)])(c);
    p.add_eq(row, x(c));
  }
  return solve_lp(p).feasible();
}

std::optional<HomogeneityCertificate> homogeneity_certificate(
    const PointConfiguration& a, const std::vector<IntVector>& candidates) {
  if (a.size() == 0) return std::nullopt;
  for (auto& phi : candidates) {
    Integer c = phi.dot(to_int(a.point(0)));
    if (c == 0) continue;
    bool ok = true;
    for (auto& p : a.points())
      if (phi.dot(to_int(p)) != c) ok = false;
    if (ok) return HomogeneityCertificate{phi, c};
  }
  // phi . p = 1 on a linearly independent subset, then checked on every point.
  const int dim = a.ambient_dim();
  std::vector<ZVec> basis;
  for (auto& pt : a.points()) {
    if (static_cast<int>(basis.size()) == dim) break;
    basis.push_back(pt);
    if (rank(cast_mat<Rational>(stack_rows(basis, dim))) < static_cast<Eigen::Index>(basis.size())) basis.pop_back();
  }
  auto x = solve_linear(cast_mat<Rational>(stack_rows(basis, dim)),
                        RatVector::Ones(static_cast<Eigen::Index>(basis.size())));
  if (!x) return std::nullopt;
  for (auto& pt : a.points())
    if (x->dot(to_rat(pt)) != 1) return std::nullopt;
  IntVector phi = primitive(*x);
  Integer c = phi.dot(to_int(a.point(0)));
  if (c < 0) {
    phi = -phi;
    c = -c;
  }
  return HomogeneityCertificate{phi, c};
}

std::vector<ZVec> hull_lattice_points(const std::vector<ZVec>& verts) {
  const Index n = verts[0].size();
  ZVec lo = verts[0], hi = verts[0];
  for (auto& v : verts) lo = lo.cwiseMin(v), hi = hi.cwiseMax(v);
  PointConfiguration vc(verts);
  Hull h(vc, vc.all());
  std::vector<ZVec> out;
  ZVec x = lo;
  for (;;) {
    if (h.contains(x)) out.push_back(x);
    Index e = n - 1;
    while (e >= 0 && x(e) == hi(e)) x(e) = lo(e), --e;
    if (e < 0) break;
    ++x(e);
  }
  return out;
}

bool facet_width_one(const PointConfiguration& a) {
  for (auto& f : faces(a).facets)
    if (facet_width(a, a.all(), f.members) != 1) return false;
  return true;
}

}  // namespace lf
