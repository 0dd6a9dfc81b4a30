#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latticeflow/pconf.hpp"
#include "latticeflow/triang.hpp"

namespace lf {

using Exponent = ZVec;  // one count per configuration index

inline std::int64_t degree(const Exponent& u) { return u.sum(); }
Exponent unit_exponent(int n, int i);
Exponent exponent_of(int n, const Subset& s);  // 0/1 exponent of a subset

struct TermOrder {
  enum class Kind { Grevlex, Weight } kind = Kind::Grevlex;
  std::vector<int> perm;  // perm[0] is the largest variable; empty = identity
  RatVector w;            // Weight only
  IntVector wi;           // w shifted positive and scaled to integers; same order within a degree

  static TermOrder grevlex(int n);
  static TermOrder grevlex(std::vector<int> perm);
  static TermOrder weight(RatVector w, std::vector<int> perm = {});

  // -1, 0, 1 as a <, =, > b.
  int compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }
};

struct Binomial {
  Exponent lead, trail;
  bool operator==(const Binomial&) const = default;
  std::int64_t degree() const { return std::max(lf::degree(lead), lf::degree(trail)); }
};

// Lead made order-larger; common factor cancelled when `cancel`.
Binomial normalize(Binomial b, const TermOrder& order, bool cancel = true);
// "x3*x7 - x4*x6", 1-based.
std::string to_string(const Binomial& b);
std::string monomial_string(const Exponent& u);

IntVector pi(const PointConfiguration& a, const Exponent& u);
bool is_in_ideal(const PointConfiguration& a, const Binomial& b);

// All degree-d exponents with pi(u) = b, in lexicographic order. Throws DegreeTooLarge.
std::vector<Exponent> fiber(const PointConfiguration& a, const IntVector& b, int d, int degree_bound = 12);

struct GeneratingSet {
  int degree = 0;               // largest generator degree (0 = zero ideal)
  std::vector<Binomial> gens;   // by degree, then order
  int checked_through = 0;      // all fibers up to this degree are connected
};

// Fiber-graph connectivity for d = 2..dmax. Throws NotHomogeneous, BoundExceeded
// (new generators needed in degree dmax, so completeness is not established).
GeneratingSet minimal_generating_set(const PointConfiguration& a, int dmax,
                                     const std::optional<TermOrder>& order = std::nullopt);

// u, v connected in their fiber by the moves of gens (equivalently x^u - x^v in the ideal of gens).
bool connected_in_fiber(const PointConfiguration& a, const std::vector<Binomial>& gens, const Exponent& u,
                        const Exponent& v);
// Every binomial of `basis` lies in the ideal of gens.
bool generates(const PointConfiguration& a, const std::vector<Binomial>& gens, const std::vector<Binomial>& basis);

struct TriangulationBasis {
  TermOrder order;
  std::vector<Binomial> gb;
};

// Throws NotUnimodular, NotCertified, NotHomogeneous, NonIntegralRepresentation.
TriangulationBasis gb_from_triangulation(const PointConfiguration& a, const Subdivision& d,
                                         const RegularityCertificate& cert);

// Reduced Groebner basis of the ideal generated by gens. Throws DegreeGuardExceeded, NotInIdeal
// when a is given and some input fails is_in_ideal.
std::vector<Binomial> buchberger_reduce(const std::vector<Binomial>& gens, const TermOrder& order,
                                        int degree_guard = 16, const PointConfiguration* a = nullptr);
bool is_reduced_groebner(const std::vector<Binomial>& g, const TermOrder& order);

// Minimal generating set with completeness certified by a regular unimodular
// triangulation's Groebner basis; degree bound taken from that basis.
struct CertifiedGenerators {
  GeneratingSet set;
  TriangulationBasis basis;
};
CertifiedGenerators certified_generating_set(const PointConfiguration& a, const CertifiedSubdivision& t);
// Uses the pulling-refined hyperplane triangulation.
CertifiedGenerators certified_generating_set(const PointConfiguration& a);

struct Transform {
  enum class Kind { Translate, Negate } kind = Kind::Negate;
  ZVec v;
};
// Throws HomogeneityBroken.
bool ideal_invariance_check(const PointConfiguration& a, const Transform& t, int dmax);
// Throws NotAFace.
bool face_degree_check(const PointConfiguration& a, const Subset& face, int dmax);

}  // namespace lf
