// Lattice polytopes: hull, face lattice, cones at faces and exact face integrals.
#pragma once

#include <optional>
#include <vector>

#include "emlattice/linalg.hpp"
#include "emlattice/multipoly.hpp"

namespace eml {

/// ⟨normal, x⟩ >= offset, normal primitive and pointing inward.
struct Facet {
  VecZ normal;
  Integer offset;
  std::vector<int> vertices;
};

struct Face {
  int id = 0;
  int dim = 0;
  /// Sorted vertex indices.
  std::vector<int> vertices;
  /// Lexicographically smallest vertex of the face.
  int ref_vertex = 0;
  /// Basis of L(f) ∩ Z^m.
  std::vector<VecZ> lattice_basis;
  /// Indices of the facets containing the face.
  std::vector<int> facets;
};

/// Affine lattice map t ↦ origin + basis·t from intrinsic coordinates.
struct AffineEmbedding {
  VecZ origin;
  std::vector<VecZ> basis;
};

class LatticePolytope {
 public:
  /// Geometry is stored in intrinsic coordinates; when the input is not
  /// full-dimensional (and allow_lower_dim is set) `embedding` maps back.
  static LatticePolytope build(const std::vector<VecZ>& points, bool allow_lower_dim = false);

  std::size_t dim() const { return dim_; }
  const std::vector<VecZ>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Sorted by dimension, then by vertex set; faces()[i].id == i.
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }
  /// The face equal to P.
  const Face& whole() const { return faces_.back(); }
  const std::optional<AffineEmbedding>& embedding() const { return embedding_; }
  /// Vertices in the caller's coordinates.
  std::vector<VecZ> ambient_vertices() const;

  int find_face(const std::vector<int>& vertex_set) const;
  /// True iff every vertex of a is a vertex of b.
  bool is_subface(const Face& a, const Face& b) const;
  /// Faces g ⊃ f with dim g = dim f + 1.
  std::vector<int> covering_faces(const Face& f) const;
  /// Faces g ⊂ f with dim g = dim f - 1.
  std::vector<int> facets_of(const Face& f) const;

 private:
  std::size_t dim_ = 0;
  std::vector<VecZ> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::optional<AffineEmbedding> embedding_;
};

/// Generators of the tangent cone C_P(f): primitive edge directions at the
/// reference vertex leaving f, plus ±(basis of L(f)).
std::vector<VecZ> tangent_cone(const LatticePolytope& p, const Face& f);

struct PointedConeT {
  std::size_t ambient_dim = 0;
  /// Basis of L(f); the cone lives in its Q-orthogonal complement.
  std::vector<VecQ> face_space;
  /// Projection matrix onto the complement of L(f).
  MatQ projection;
  /// Extreme rays: projections of w - v_f for each face covering f.
  std::vector<VecQ> generators;
  int source_face = 0;
};

PointedConeT transverse_cone(const LatticePolytope& p, const Face& f, const MatQ& q);

struct DelzantReport {
  bool delzant = true;
  /// Per vertex: incident edge count and |det| of primitive edge directions (0 if not square).
  std::vector<int> edge_count;
  std::vector<Integer> abs_det;
};

DelzantReport delzant_report(const LatticePolytope& p);
bool is_delzant(const LatticePolytope& p);

enum class ApexRule { Reference, Largest };

/// ∫_f φ for the measure normalized by L(f) ∩ Z^m (intrinsic coordinates).
Rational integrate_poly_over_face(const LatticePolytope& p, const Face& f, const MultiPoly& phi,
                                  ApexRule apex = ApexRule::Reference);

/// Lattice-normalized simplex integral: vertices in intrinsic coordinates,
/// lattice_basis spans their affine hull direction.
Rational integrate_over_simplex(const std::vector<VecQ>& simplex, const std::vector<VecZ>& lattice_basis,
                                const MultiPoly& phi);

/// [γ ∈ NP] = Σ_g (-1)^{dim g} [γ ∈ C⁺_{NP}(Ng)] for lattice γ in the box, and
/// the face-level characteristic-function identity at rational sample points.
bool euler_brion_window_check(const LatticePolytope& p, long n, long lo, long hi);

/// φ(origin + B t) as a polynomial in intrinsic coordinates t; identity when
/// the polytope is full-dimensional in its input coordinates.
MultiPoly pull_back(const LatticePolytope& p, const MultiPoly& phi);
/// Bᵀ Q B for the intrinsic lattice basis B.
MatQ pull_back_inner_product(const LatticePolytope& p, const MatQ& q);
/// Dimension of the coordinates the caller used to describe the polytope.
std::size_t ambient_dim(const LatticePolytope& p);

/// Membership in N·P using the facet inequalities.
bool in_dilate(const LatticePolytope& p, const VecQ& x, long n);

}  // namespace eml
