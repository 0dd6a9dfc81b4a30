#include "latticeflow/toric.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <boost/functional/hash.hpp>

namespace lf {

namespace {

using Mono = std::vector<int>;  // sorted multiset of indices

struct VecHash {
  template <class T>
  size_t operator()(const std::vector<T>& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

Mono to_mono(const Exponent& u) {
  Mono m;
  for (Eigen::Index i = 0; i < u.size(); ++i)
    for (std::int64_t k = 0; k < u[i]; ++k) m.push_back(static_cast<int>(i));
  return m;
}

Exponent to_exp(int n, const Mono& m) {
  Exponent u = Exponent::Zero(n);
  for (int i : m) ++u[i];
  return u;
}

bool divides(const Exponent& a, const Exponent& b) { return (a.array() <= b.array()).all(); }

std::vector<std::int64_t> pi_key(const PointConfiguration& a, const Mono& m) {
  std::vector<std::int64_t> s(static_cast<size_t>(a.ambient_dim()), 0);
  for (int i : m)
    for (int e = 0; e < a.ambient_dim(); ++e) s[static_cast<size_t>(e)] += a.point(i)[e];
  return s;
}

// Multiset difference u - s, s a sub-multiset of u.
Mono minus(const Mono& u, const Mono& s) {
  Mono r;
  std::set_difference(u.begin(), u.end(), s.begin(), s.end(), std::back_inserter(r));
  return r;
}

Mono plus(const Mono& u, const Mono& t) {
  Mono r;
  std::merge(u.begin(), u.end(), t.begin(), t.end(), std::back_inserter(r));
  return r;
}

template <class F>
void sub_multisets(const Mono& u, size_t k, F&& f) {
  Mono cur;
  auto rec = [&](auto& self, size_t pos, size_t need) -> void {
    if (need == 0) {
      f(cur);
      return;
    }
    for (size_t j = pos; j + need <= u.size(); ++j) {
      if (j > pos && u[j] == u[j - 1]) continue;
      cur.push_back(u[j]);
      self(self, j + 1, need - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, k);
}

template <class F>
void all_multisets(int n, int d, F&& f) {
  Mono cur;
  auto rec = [&](auto& self, int lo, int need) -> void {
    if (need == 0) {
      f(cur);
      return;
    }
    for (int i = lo; i < n; ++i) {
      cur.push_back(i);
      self(self, i, need - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, d);
}

double multiset_count(int n, int d) {
  double c = 1;
  for (int k = 1; k <= d; ++k) c = c * (n + k - 1) / k;
  return c;
}

// Both sides of every binomial, for substitution inside a monomial.
struct Moves {
  std::unordered_map<Mono, std::vector<Mono>, VecHash> partner;
  std::set<size_t> sizes;

  void add(const Binomial& b) {
    Mono l = to_mono(b.lead), t = to_mono(b.trail);
    partner[l].push_back(t);
    partner[t].push_back(l);
    sizes.insert(l.size());
    sizes.insert(t.size());
  }

  template <class F>
  void neighbors(const Mono& u, F&& f) const {
    for (size_t k : sizes) {
      if (k == 0 || k > u.size()) continue;
      sub_multisets(u, k, [&](const Mono& s) {
        auto it = partner.find(s);
        if (it == partner.end()) return;
        Mono rest = minus(u, s);
        for (auto& t : it->second) f(plus(rest, t));
      });
    }
  }
};

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<size_t>(x)] != x) x = p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
    return x;
  }
  void unite(int x, int y) { p[static_cast<size_t>(find(x))] = find(y); }
};

constexpr double kMonomialGuard = 6e6;

// Minimal generators degree by degree.
struct GenEngine {
  const PointConfiguration& a;
  TermOrder ord;
  Moves moves;
  std::vector<Binomial> gens;
  std::optional<std::vector<std::int64_t>> first_disconnected;

  // Returns the number of generators added in degree d.
  size_t step(int d) {
    first_disconnected.reset();
    int n = a.size();
    if (multiset_count(n, d) > kMonomialGuard)
      throw Error("GuardExceeded", "too many degree-" + std::to_string(d) + " monomials");
    std::vector<Mono> monos;
    all_multisets(n, d, [&](const Mono& m) { monos.push_back(m); });
    std::unordered_map<Mono, int, VecHash> id;
    id.reserve(monos.size());
    for (size_t i = 0; i < monos.size(); ++i) id.emplace(monos[i], static_cast<int>(i));
    UnionFind uf(monos.size());
    for (size_t i = 0; i < monos.size(); ++i)
      moves.neighbors(monos[i], [&](const Mono& v) {
        auto it = id.find(v);
        if (it == id.end()) throw Error("NotHomogeneous", "a move changed the degree");
        uf.unite(static_cast<int>(i), it->second);
      });
    std::unordered_map<std::vector<std::int64_t>, std::vector<int>, VecHash> fibers;
    std::vector<std::vector<std::int64_t>> keys;
    for (size_t i = 0; i < monos.size(); ++i) {
      auto k = pi_key(a, monos[i]);
      auto [it, fresh] = fibers.try_emplace(k);
      if (fresh) keys.push_back(k);
      it->second.push_back(static_cast<int>(i));
    }
    std::vector<Binomial> fresh;
    for (auto& k : keys) {
      auto& f = fibers[k];
      if (f.size() < 2) continue;
      std::map<int, Exponent> least;  // component root -> least member
      for (int i : f) {
        Exponent u = to_exp(n, monos[static_cast<size_t>(i)]);
        auto [it, ins] = least.try_emplace(uf.find(i), u);
        if (!ins && ord.less(u, it->second)) it->second = u;
      }
      if (least.size() < 2) continue;
      if (!first_disconnected) first_disconnected = k;
      std::vector<Exponent> mins;
      for (auto& [r, u] : least) mins.push_back(u);
      std::sort(mins.begin(), mins.end(), [&](const Exponent& x, const Exponent& y) { return ord.less(x, y); });
      for (size_t c = 1; c < mins.size(); ++c) fresh.push_back(normalize({mins[c], mins[0]}, ord));
    }
    for (auto& b : fresh) {
      moves.add(b);
      gens.push_back(b);
    }
    return fresh.size();
  }
};

bool connected(const PointConfiguration& a, const Moves& moves, const Exponent& u, const Exponent& v) {
  if (u.size() != a.size() || v.size() != a.size()) throw Error("DimensionMismatch", "exponent length");
  if (pi(a, u) != pi(a, v)) return false;
  Mono s = to_mono(u), t = to_mono(v);
  if (s == t) return true;
  std::unordered_set<Mono, VecHash> seen{s};
  std::deque<Mono> q{s};
  while (!q.empty()) {
    Mono x = std::move(q.front());
    q.pop_front();
    bool found = false;
    moves.neighbors(x, [&](const Mono& y) {
      if (found || !seen.insert(y).second) return;
      if (y == t) found = true;
      q.push_back(y);
    });
    if (found) return true;
    if (seen.size() > 5000000) throw Error("GuardExceeded", "fiber search too large");
  }
  return false;
}

std::string exp_key_string(const IntVector& b) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ")";
  return os.str();
}

}  // namespace

Exponent unit_exponent(int n, int i) {
  Exponent u = Exponent::Zero(n);
  u[i] = 1;
  return u;
}

Exponent exponent_of(int n, const Subset& s) {
  Exponent u = Exponent::Zero(n);
  for (int i : s) u[i] += 1;
  return u;
}

TermOrder TermOrder::grevlex(int n) {
  TermOrder t;
  t.perm.resize(static_cast<size_t>(n));
  std::iota(t.perm.begin(), t.perm.end(), 0);
  return t;
}

TermOrder TermOrder::grevlex(std::vector<int> perm) {
  TermOrder t;
  std::vector<int> chk = perm;
  std::sort(chk.begin(), chk.end());
  for (size_t i = 0; i < chk.size(); ++i)
    if (chk[i] != static_cast<int>(i)) throw Error("InvalidOrder", "not a permutation");
  t.perm = std::move(perm);
  return t;
}

TermOrder TermOrder::weight(RatVector w, std::vector<int> perm) {
  TermOrder t = perm.empty() ? grevlex(static_cast<int>(w.size())) : grevlex(std::move(perm));
  if (t.perm.size() != static_cast<size_t>(w.size())) throw Error("InvalidOrder", "weight length");
  t.kind = Kind::Weight;
  t.w = w;
  // Shifting all weights by a constant keeps the order inside each degree and
  // makes the order a term order across degrees.
  Rational lo = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) lo = std::min(lo, w[i]);
  Integer den = 1;
  for (Eigen::Index i = 0; i < w.size(); ++i) den = boost::multiprecision::lcm(den, denominator(w[i]));
  if (denominator(lo) != 1) den = boost::multiprecision::lcm(den, denominator(lo));
  t.wi.resize(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    Rational s = (w[i] - lo + 1) * den;
    t.wi[i] = numerator(s);
  }
  return t;
}

int TermOrder::compare(const Exponent& a, const Exponent& b) const {
  size_t n = perm.size();
  if (static_cast<size_t>(a.size()) != n || static_cast<size_t>(b.size()) != n)
    throw Error("DimensionMismatch", "exponent length does not match the order");
  if (kind == Kind::Weight) {
    Integer wa = 0, wb = 0;
    for (size_t i = 0; i < n; ++i) {
      if (a[static_cast<Eigen::Index>(i)]) wa += wi[static_cast<Eigen::Index>(i)] * a[static_cast<Eigen::Index>(i)];
      if (b[static_cast<Eigen::Index>(i)]) wb += wi[static_cast<Eigen::Index>(i)] * b[static_cast<Eigen::Index>(i)];
    }
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  std::int64_t da = a.sum(), db = b.sum();
  if (da != db) return da < db ? -1 : 1;
  for (size_t k = n; k-- > 0;) {
    int i = perm[k];
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

Binomial normalize(Binomial b, const TermOrder& order, bool cancel) {
  if (cancel) {
    Exponent c = b.lead.cwiseMin(b.trail);
    b.lead -= c;
    b.trail -= c;
  }
  if (order.compare(b.lead, b.trail) < 0) std::swap(b.lead, b.trail);
  return b;
}

std::string monomial_string(const Exponent& u) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (!u[i]) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << i + 1;
    if (u[i] > 1) os << "^" << u[i];
  }
  if (first) os << "1";
  return os.str();
}

std::string to_string(const Binomial& b) { return monomial_string(b.lead) + " - " + monomial_string(b.trail); }

IntVector pi(const PointConfiguration& a, const Exponent& u) {
  if (u.size() != a.size()) throw Error("DimensionMismatch", "exponent length");
  IntVector s = IntVector::Zero(a.ambient_dim());
  for (int i = 0; i < a.size(); ++i)
    if (u[i])
      for (int e = 0; e < a.ambient_dim(); ++e) s[e] += Integer(a.point(i)[e]) * u[i];
  return s;
}

bool is_in_ideal(const PointConfiguration& a, const Binomial& b) { return pi(a, b.lead) == pi(a, b.trail); }

std::vector<Exponent> fiber(const PointConfiguration& a, const IntVector& b, int d, int degree_bound) {
  if (d < 0 || d > degree_bound) throw Error("DegreeTooLarge", "fiber degree " + std::to_string(d));
  if (b.size() != a.ambient_dim()) throw Error("DimensionMismatch", "target length");
  int n = a.size(), dim = a.ambient_dim();
  // Coordinates where every point is nonnegative bound the partial sums.
  std::vector<bool> nonneg(static_cast<size_t>(dim), true);
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < dim; ++e)
      if (a.point(i)[e] < 0) nonneg[static_cast<size_t>(e)] = false;
  std::vector<std::int64_t> target(static_cast<size_t>(dim));
  for (int e = 0; e < dim; ++e) {
    if (b[e] > Integer(std::numeric_limits<std::int64_t>::max() / 4) ||
        b[e] < Integer(std::numeric_limits<std::int64_t>::min() / 4))
      return {};
    target[static_cast<size_t>(e)] = b[e].convert_to<std::int64_t>();
  }
  auto enumerate = [&](int k, auto&& f) {
    Mono cur;
    std::vector<std::int64_t> sum(static_cast<size_t>(dim), 0);
    auto rec = [&](auto& self, int lo, int need) -> void {
      if (need == 0) {
        f(cur, sum);
        return;
      }
      for (int i = lo; i < n; ++i) {
        bool ok = true;
        for (int e = 0; e < dim; ++e) {
          sum[static_cast<size_t>(e)] += a.point(i)[e];
          if (nonneg[static_cast<size_t>(e)] && sum[static_cast<size_t>(e)] > target[static_cast<size_t>(e)]) ok = false;
        }
        if (ok) {
          cur.push_back(i);
          self(self, i, need - 1);
          cur.pop_back();
        }
        for (int e = 0; e < dim; ++e) sum[static_cast<size_t>(e)] -= a.point(i)[e];
      }
    };
    rec(rec, 0, k);
  };
  int d1 = d / 2, d2 = d - d1;
  std::unordered_map<std::vector<std::int64_t>, std::vector<Mono>, VecHash> left;
  enumerate(d1, [&](const Mono& m, const std::vector<std::int64_t>& s) { left[s].push_back(m); });
  std::vector<Mono> found;
  enumerate(d2, [&](const Mono& m, const std::vector<std::int64_t>& s) {
    std::vector<std::int64_t> need(static_cast<size_t>(dim));
    for (size_t e = 0; e < need.size(); ++e) need[e] = target[e] - s[e];
    auto it = left.find(need);
    if (it == left.end()) return;
    for (auto& p : it->second)
      if (p.empty() || m.empty() || p.back() <= m.front()) found.push_back(plus(p, m));
  });
  std::sort(found.begin(), found.end());
  std::vector<Exponent> out;
  for (auto& m : found) out.push_back(to_exp(n, m));
  return out;
}

GeneratingSet minimal_generating_set(const PointConfiguration& a, int dmax, const std::optional<TermOrder>& order) {
  if (!a.certificate()) throw Error("NotHomogeneous", "a homogeneity certificate is required");
  if (dmax < 2) throw Error("InvalidArgument", "dmax must be at least 2");
  GenEngine eng{a, order ? *order : TermOrder::grevlex(a.size()), {}, {}, {}};
  for (int d = 2; d <= dmax; ++d) {
    size_t added = eng.step(d);
    if (d == dmax && added)
      throw Error("BoundExceeded", "disconnected degree-" + std::to_string(d) + " fiber over " +
                                       exp_key_string(cast_vec<Integer>(ZVec(Eigen::Map<const ZVec>(
                                           eng.first_disconnected->data(),
                                           static_cast<Eigen::Index>(eng.first_disconnected->size()))))));
  }
  GeneratingSet out;
  out.gens = std::move(eng.gens);
  for (auto& g : out.gens) out.degree = std::max(out.degree, static_cast<int>(g.degree()));
  out.checked_through = dmax;
  return out;
}

bool connected_in_fiber(const PointConfiguration& a, const std::vector<Binomial>& gens, const Exponent& u,
                        const Exponent& v) {
  Moves m;
  for (auto& g : gens) m.add(g);
  return connected(a, m, u, v);
}

bool generates(const PointConfiguration& a, const std::vector<Binomial>& gens, const std::vector<Binomial>& basis) {
  Moves m;
  for (auto& g : gens) m.add(g);
  for (auto& b : basis)
    if (!connected(a, m, b.lead, b.trail)) return false;
  return true;
}

TriangulationBasis gb_from_triangulation(const PointConfiguration& a, const Subdivision& d,
                                         const RegularityCertificate& cert) {
  if (!a.certificate()) throw Error("NotHomogeneous", "a homogeneity certificate is required");
  if (d.config().points() != a.points()) throw Error("DimensionMismatch", "triangulation of another configuration");
  if (!is_unimodular_triangulation(d)) throw Error("NotUnimodular", "a maximal simplex has volume > 1");
  if (!verify_certificate(d, cert)) throw Error("NotCertified", "regularity certificate rejected");
  int n = a.size(), dim = a.ambient_dim();
  TriangulationBasis out{TermOrder::weight(cert.weights), {}};
  for (auto& f : minimal_nonfaces(d)) {
    RatVector b = RatVector::Zero(dim);
    for (int i : f)
      for (int e = 0; e < dim; ++e) b[e] += a.point(i)[e];
    std::optional<Exponent> lambda;
    for (auto& s : d.maximal_cells()) {
      RatMatrix m(dim, static_cast<Eigen::Index>(s.size()));
      for (size_t j = 0; j < s.size(); ++j)
        for (int e = 0; e < dim; ++e) m(e, static_cast<Eigen::Index>(j)) = a.point(s[j])[e];
      auto x = solve_linear(m, b);
      if (!x) continue;
      bool nonneg = true;
      for (Eigen::Index j = 0; j < x->size(); ++j)
        if ((*x)[j] < 0) nonneg = false;
      if (!nonneg) continue;
      Exponent l = Exponent::Zero(n);
      for (size_t j = 0; j < s.size(); ++j) {
        const Rational& c = (*x)[static_cast<Eigen::Index>(j)];
        if (denominator(c) != 1) throw Error("NonIntegralRepresentation", "nonface sum has fractional coordinates");
        l[s[j]] = numerator(c).convert_to<std::int64_t>();
      }
      lambda = l;
      break;
    }
    if (!lambda) throw Error("InternalError", "nonface sum lies in no cell cone");
    Binomial g{exponent_of(n, f), *lambda};
    if (out.order.compare(g.lead, g.trail) <= 0) throw Error("InternalError", "nonface is not the leading term");
    out.gb.push_back(g);
  }
  std::sort(out.gb.begin(), out.gb.end(), [&](const Binomial& x, const Binomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return out.order.less(x.lead, y.lead);
  });
  return out;
}

std::vector<Binomial> buchberger_reduce(const std::vector<Binomial>& gens, const TermOrder& order, int degree_guard,
                                        const PointConfiguration* a) {
  std::vector<Binomial> g;
  for (auto& b : gens) {
    if (a && !is_in_ideal(*a, b)) throw Error("NotInIdeal", to_string(b));
    if (b.lead == b.trail) continue;
    Binomial nb = normalize(b, order, false);
    if (std::find(g.begin(), g.end(), nb) == g.end()) g.push_back(nb);
  }
  auto nf = [&](Exponent m, const std::vector<bool>* alive, size_t skip) {
    for (bool changed = true; changed;) {
      changed = false;
      for (size_t k = 0; k < g.size(); ++k) {
        if (k == skip || (alive && !(*alive)[k])) continue;
        if (divides(g[k].lead, m)) {
          m = m - g[k].lead + g[k].trail;
          changed = true;
          break;
        }
      }
    }
    return m;
  };
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t j = 0; j < g.size(); ++j)
    for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const size_t none = static_cast<size_t>(-1);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if ((g[i].lead.cwiseMin(g[j].lead).array() == 0).all()) continue;  // coprime leads
    Exponent l = g[i].lead.cwiseMax(g[j].lead);
    Exponent p = nf(l - g[i].lead + g[i].trail, nullptr, none);
    Exponent q = nf(l - g[j].lead + g[j].trail, nullptr, none);
    if (p == q) continue;
    Binomial nb = normalize({p, q}, order, false);
    if (nb.degree() > degree_guard)
      throw Error("DegreeGuardExceeded", "S-pair remainder of degree " + std::to_string(nb.degree()));
    g.push_back(nb);
    for (size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  std::vector<bool> alive(g.size(), true);
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g.size() && alive[i]; ++j) {
      if (i == j || !alive[j]) continue;
      if (divides(g[j].lead, g[i].lead) && (g[j].lead != g[i].lead || j < i)) alive[i] = false;
    }
  std::vector<Binomial> out;
  for (size_t i = 0; i < g.size(); ++i)
    if (alive[i]) out.push_back({g[i].lead, nf(g[i].trail, &alive, i)});
  std::sort(out.begin(), out.end(), [&](const Binomial& x, const Binomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return order.less(x.lead, y.lead);
  });
  return out;
}

bool is_reduced_groebner(const std::vector<Binomial>& g, const TermOrder& order) {
  for (size_t i = 0; i < g.size(); ++i) {
    if (order.compare(g[i].lead, g[i].trail) <= 0) return false;
    for (size_t j = 0; j < g.size(); ++j)
      if (i != j && (divides(g[j].lead, g[i].lead) || divides(g[j].lead, g[i].trail))) return false;
  }
  auto nf = [&](Exponent m) {
    for (bool changed = true; changed;) {
      changed = false;
      for (auto& b : g)
        if (divides(b.lead, m)) {
          m = m - b.lead + b.trail;
          changed = true;
          break;
        }
    }
    return m;
  };
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) {
      Exponent l = g[i].lead.cwiseMax(g[j].lead);
      if (nf(l - g[i].lead + g[i].trail) != nf(l - g[j].lead + g[j].trail)) return false;
    }
  return true;
}

CertifiedGenerators certified_generating_set(const PointConfiguration& a, const CertifiedSubdivision& t) {
  CertifiedGenerators out{{}, gb_from_triangulation(a, t.sub, t.cert)};
  int top = 0;
  for (auto& b : out.basis.gb) top = std::max(top, static_cast<int>(b.degree()));
  GenEngine eng{a, TermOrder::grevlex(a.size()), {}, {}, {}};
  int k = 1;
  while (k < top) {
    eng.step(++k);
    bool done = true;
    for (auto& b : out.basis.gb)
      if (b.degree() > k && !connected(a, eng.moves, b.lead, b.trail)) {
        done = false;
        break;
      }
    if (done) break;
  }
  out.set.gens = std::move(eng.gens);
  for (auto& g : out.set.gens) out.set.degree = std::max(out.set.degree, static_cast<int>(g.degree()));
  out.set.checked_through = k;
  return out;
}

CertifiedGenerators certified_generating_set(const PointConfiguration& a) {
  return certified_generating_set(a, pulling_refinement(hyperplane_subdivision(a)));
}

namespace {

std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> exponent_set(const GeneratingSet& g) {
  std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> s;
  for (auto& b : g.gens) {
    std::vector<std::int64_t> l(b.lead.data(), b.lead.data() + b.lead.size());
    std::vector<std::int64_t> t(b.trail.data(), b.trail.data() + b.trail.size());
    if (t < l) std::swap(l, t);
    s.emplace(l, t);
  }
  return s;
}

}  // namespace

bool ideal_invariance_check(const PointConfiguration& a, const Transform& t, int dmax) {
  std::vector<ZVec> pts;
  for (auto& p : a.points()) {
    if (t.kind == Transform::Kind::Negate) {
      pts.push_back(-p);
    } else {
      if (t.v.size() != p.size()) throw Error("DimensionMismatch", "translation length");
      pts.push_back(p + t.v);
    }
  }
  PointConfiguration b(pts);
  auto cert = homogeneity_certificate(b);
  if (!cert) throw Error("HomogeneityBroken", "transformed configuration is not homogeneous");
  b.set_certificate(cert);
  return exponent_set(minimal_generating_set(a, dmax)) == exponent_set(minimal_generating_set(b, dmax));
}

bool face_degree_check(const PointConfiguration& a, const Subset& face, int dmax) {
  if (face.empty() || !is_face(a, a.all(), face)) throw Error("NotAFace", "subset is not a face");
  std::vector<ZVec> pts;
  for (int i : face) pts.push_back(a.point(i));
  PointConfiguration b(pts, a.certificate());
  GeneratingSet gb = minimal_generating_set(b, dmax), ga = minimal_generating_set(a, dmax);
  if (gb.degree > ga.degree) return false;
  std::vector<Binomial> lifted;
  for (auto& g : gb.gens) {
    Exponent l = Exponent::Zero(a.size()), r = Exponent::Zero(a.size());
    for (size_t j = 0; j < face.size(); ++j) {
      l[face[j]] = g.lead[static_cast<Eigen::Index>(j)];
      r[face[j]] = g.trail[static_cast<Eigen::Index>(j)];
    }
    if (!is_in_ideal(a, {l, r})) return false;
    lifted.push_back({l, r});
  }
  return generates(a, ga.gens, lifted);
}

}  // namespace lf
