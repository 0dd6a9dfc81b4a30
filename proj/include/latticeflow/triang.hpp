#pragma once

#include <optional>
#include <random>
#include <vector>

#include "latticeflow/flowpoly.hpp"
#include "latticeflow/pconf.hpp"

namespace lf {

// Stored by maximal cells; every face of a maximal cell is a cell.
class Subdivision {
 public:
  Subdivision() = default;
  Subdivision(PointConfiguration a, std::vector<Subset> maximal_cells);

  const PointConfiguration& config() const { return a_; }
  const std::vector<Subset>& maximal_cells() const { return cells_; }
  // True iff s is a face of some maximal cell.
  bool is_cell(const Subset& s) const;
  bool is_triangulation() const;
  // Indices lying in no cell.
  Subset unused() const;

  bool operator==(const Subdivision& o) const { return cells_ == o.cells_ && a_.points() == o.a_.points(); }

 private:
  PointConfiguration a_;
  std::vector<Subset> cells_;  // sorted, inclusion-maximal
};

struct AffineFunctional {
  RatVector lin;
  Rational c;
  Rational operator()(const ZVec& x) const;
};

struct RegularityCertificate {
  RatVector weights;
  std::vector<AffineFunctional> functionals;  // parallel to maximal_cells()
};

Subdivision trivial_subdivision(const PointConfiguration& a);
Subdivision pull(const Subdivision& d, int i);
// Default order: vertices in lexicographic order of their coordinates.
Subdivision pulling_triangulation(const PointConfiguration& a, std::optional<std::vector<int>> order = std::nullopt);
Subdivision pull_all(Subdivision d, const std::vector<int>& order);

// Lower hull of (a_i, w_i).
std::pair<Subdivision, RegularityCertificate> regular_subdivision(const PointConfiguration& a, const RatVector& w);

// Exact check of Eq. 2.2/2.3 for every maximal cell and every point; fills in the functionals.
std::optional<RegularityCertificate> verify_weights(const Subdivision& d, const RatVector& w);
bool verify_certificate(const Subdivision& d, const RegularityCertificate& cert);

// Splits of each maximal cell by psi(x) >= c / <= c. Throws CutNotRepresentable.
Subdivision hyperplane_refine(const Subdivision& d, const IntVector& psi, const Integer& c);

// Weight transport: w + delta |psi - c| and w - eps e_i, halving until exact verification passes.
RegularityCertificate refine_certificate(const Subdivision& refined, const RegularityCertificate& cert,
                                         const IntVector& psi, const Integer& c);
RegularityCertificate pull_certificate(const Subdivision& pulled, const RegularityCertificate& cert, int i);

struct CertifiedSubdivision {
  Subdivision sub;
  RegularityCertificate cert;
};

// Flow polytope lattice points cut by all x_e = k through the interior.
CertifiedSubdivision hyperplane_subdivision_flow(const FlowPolytope& p, const EnumerateOptions& opt = {});
CertifiedSubdivision hyperplane_subdivision(const PointConfiguration& a);
// Pull at every index in lexicographic point order, transporting the certificate.
CertifiedSubdivision pulling_refinement(const CertifiedSubdivision& d);

// Exact LP decision; nothing means provably not regular.
std::optional<RegularityCertificate> regularity_certificate(const Subdivision& d);

// Throws NotATriangulation.
bool is_unimodular_triangulation(const Subdivision& d);

// Inclusion-minimal subsets in no cell, up to the given size (0 = dim + 2).
std::vector<Subset> minimal_nonfaces(const Subdivision& d, int size_bound = 0);

// Subdivision axioms on maximal cells: pairwise intersections are faces of
// both, closures cover I, proper cells have full dimension.
bool check_axioms(const Subdivision& d);
bool is_refinement(const Subdivision& fine, const Subdivision& coarse);
// Every point lies in the relative interior of exactly one cell (triangulations).
bool relint_partition(const Subdivision& d);

// Every pulling order yields a unimodular triangulation. Exhaustive up to
// max_exhaustive vertices; above that, vertex-then-facet orders plus samples.
bool all_pullings_unimodular(const PointConfiguration& a, std::mt19937& rng, int max_exhaustive = 7,
                             int samples = 300);

}  // namespace lf
