#pragma once

#include <optional>
#include <vector>

#include "latticeflow/exact.hpp"

namespace lf {

using Subset = std::vector<int>;  // sorted configuration indices

struct HomogeneityCertificate {
  IntVector phi;
  Integer c;
};

class PointConfiguration {
 public:
  PointConfiguration() = default;
  // Throws DuplicatePoint, DimensionMismatch, BadCertificate.
  explicit PointConfiguration(std::vector<ZVec> points,
                              std::optional<HomogeneityCertificate> cert = std::nullopt);

  int size() const { return static_cast<int>(points_.size()); }
  int ambient_dim() const { return dim_; }
  const ZVec& point(int i) const { return points_[static_cast<size_t>(i)]; }
  const std::vector<ZVec>& points() const { return points_; }
  const std::optional<HomogeneityCertificate>& certificate() const { return cert_; }
  void set_certificate(std::optional<HomogeneityCertificate> c);
  Subset all() const;
  // Index of a point, or -1.
  int find(const ZVec& p) const;

 private:
  std::vector<ZVec> points_;
  int dim_ = 0;
  std::optional<HomogeneityCertificate> cert_;
};

// Integer affine coordinates of a subset inside the saturated lattice of its
// affine hull: x = origin + lambda * basis with lambda in Z^d.
struct AffineFrame {
  ZVec origin;
  IntMatrix basis;         // d x n, rows a basis of aff-direction lattice
  IntMatrix left_inverse;  // n x d, basis * left_inverse = I
  IntMatrix perp;          // rows: integer functionals vanishing on the direction space
  int dim = 0;

  bool contains(const ZVec& x) const;  // x in the affine hull
  ZVec coords(const ZVec& x) const;    // requires contains(x)
};

AffineFrame affine_frame(const PointConfiguration& a, const Subset& j);
int affine_dim(const PointConfiguration& a, const Subset& j);

// Minimum of the functional over the subset is `level`, attained exactly on members.
struct Face {
  Subset members;
  IntVector functional;
  Integer level;
};

struct FaceData {
  int dim = 0;
  std::vector<Face> facets;
  Subset vertices;
};

// Facets of conv(j) by double description on the homogenized cone; vertices
// are the points on dim-many independent facets.
FaceData faces(const PointConfiguration& a, const Subset& j);
FaceData faces(const PointConfiguration& a);

// Reference implementations: spanning-subset facet search and LP-separated vertices.
std::vector<Face> facets_bruteforce(const PointConfiguration& a, const Subset& j);
bool is_vertex_lp(const PointConfiguration& a, const Subset& j, int i);

// LP decision of "f is a face of j"; returns the supporting functional.
std::optional<Face> face_certificate(const PointConfiguration& a, const Subset& j, const Subset& f);
inline bool is_face(const PointConfiguration& a, const Subset& j, const Subset& f) {
  return face_certificate(a, j, f).has_value();
}

// Spread of the primitive facet normal on j. Throws NotAFacet.
Integer facet_width(const PointConfiguration& a, const Subset& j, const Subset& f);

// Throws AffinelyDependent. Cross-checks lattice index, parallelepiped count
// (when the box is small) and |det| (full-dimensional case).
Integer normalized_volume(const PointConfiguration& a, const Subset& s);
bool is_unimodular_simplex(const PointConfiguration& a, const Subset& s);
// Lattice index only, for hot loops. Throws AffinelyDependent.
Integer simplex_volume(const PointConfiguration& a, const Subset& s);

// Brute-force count of lattice points in the half-open parallelepiped spanned
// by the rows of g (full rank, square). Returns nullopt above the box guard.
std::optional<Integer> parallelepiped_count(const IntMatrix& g, long box_guard = 2000000);

// H-description of conv(j) inside its affine hull, for repeated membership tests.
class Hull {
 public:
  Hull(const PointConfiguration& a, const Subset& j);
  bool contains(const RatVector& x) const;
  bool contains(const ZVec& x) const;
  const AffineFrame& frame() const { return frame_; }
  const FaceData& face_data() const { return fd_; }

 private:
  AffineFrame frame_;
  FaceData fd_;
  std::vector<IntVector> rays_;  // (h0, w): h0 + w . coords >= 0
};

// Indices of all points of a inside conv(j).
Subset closure(const PointConfiguration& a, const Subset& j);
bool in_hull_lp(const PointConfiguration& a, const Subset& j, const RatVector& x);
bool in_hull(const PointConfiguration& a, const Subset& j, const RatVector& x);

// Candidates are tried first (e.g. flow functionals), then a linear solve.
std::optional<HomogeneityCertificate> homogeneity_certificate(
    const PointConfiguration& a, const std::vector<IntVector>& candidates = {});

bool affinely_independent(const PointConfiguration& a, const Subset& s);

// All lattice points of conv(verts), by box scan.
std::vector<ZVec> hull_lattice_points(const std::vector<ZVec>& verts);
// Every facet of conv(a) has width 1 on a.
bool facet_width_one(const PointConfiguration& a);

}  // namespace lf
