#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "randg/basis.hpp"
#include "randg/mesh.hpp"
#include "randg/quadrature.hpp"

namespace randg {

/// DG coefficients for all species at one time instant. Layout: species-major,
/// species s occupies [s * n_scalar_dofs, (s+1) * n_scalar_dofs).
using StateVector = Eigen::VectorXd;

struct JumpMean {
  Vec2 jump;
  double mean;
};

/// Two-sided trace operators: jump(u) = u+ n+ + u- n-, mean(u) = (u+ + u-)/2.
/// Both are invariant under swapping sides together with n -> -n.
JumpMean jump_and_mean(double u_plus, double u_minus, const Vec2& n_plus);

/// Boundary-face variant: mean(u) = u+, jump(u) = u+ n.
JumpMean boundary_jump_and_mean(double u_plus, const Vec2& n);

struct ElementGeometry {
  Vec2 v0;
  Eigen::Matrix2d jac;        // columns v1-v0, v2-v0
  Eigen::Matrix2d inv_jac;
  Eigen::Matrix2d inv_jac_t;
  double det;                 // |det(jac)| = 2 * area
};

/// Reference tables shared by all elements of one polynomial degree.
struct DegreeTables {
  int degree = 0;
  int nb = 0;
  QuadratureRule volume;       // exactness 2m+1
  Eigen::MatrixXd values;      // nq x nb
  Eigen::MatrixXd ddx, ddy;    // reference derivatives, nq x nb
};

/// Basis traces of one element on one face, evaluated at the face quadrature
/// points shared by both sides. Gradients are physical.
struct FaceSideTable {
  Eigen::MatrixXd values;      // nq x nb
  Eigen::MatrixXd gx, gy;      // nq x nb
};

struct FaceTables {
  SegmentRule rule;            // on [0,1] along the face
  std::vector<Vec2> points;    // physical quadrature points
  FaceSideTable plus;
  FaceSideTable minus;         // empty on boundary faces
};

/// Values and physical gradients of one scalar field on both sides of a face,
/// together with the derived jump and mean at each quadrature point. On
/// boundary faces the minus side is empty and mean/jump use the one-sided
/// definitions.
struct FaceTrace {
  Eigen::VectorXd u_plus, u_minus;
  Eigen::Matrix<double, Eigen::Dynamic, 2> grad_plus, grad_minus;
  std::vector<Vec2> jump;      // u+ n+ + u- n-
  Eigen::VectorXd mean;
};

/// The discontinuous finite element space: elementwise polynomials of the
/// per-element degree with no continuity between elements. Immutable after
/// construction; concurrent reads are safe.
class DgSpace {
 public:
  explicit DgSpace(const Mesh& mesh, int n_species = 6);

  const Mesh& mesh() const { return *mesh_; }
  int n_species() const { return n_species_; }
  int n_scalar_dofs() const { return n_scalar_; }
  int n_total_dofs() const { return n_scalar_ * n_species_; }

  int element_offset(int e) const { return offsets_[e]; }
  int local_size(int e) const { return local_sizes_[e]; }
  int element_degree(int e) const { return mesh_->element(e).degree; }

  /// Global coefficient index of (element, local basis index, species).
  int global_index(int e, int local, int species) const {
    return species * n_scalar_ + offsets_[e] + local;
  }

  const ElementGeometry& element_geometry(int e) const { return elem_geom_[e]; }
  const DegreeTables& degree_tables(int e) const { return degree_tables_[table_of_elem_[e]]; }
  const FaceTables& face_tables(int f) const { return face_tables_[f]; }
  const MeshQuantities& mesh_quantities() const { return quantities_; }

  /// u_h at a reference point of element e, from a scalar coefficient vector.
  double eval_scalar(const Eigen::VectorXd& scalar_coeffs, int e, const Vec2& ref_point) const;

  /// Elementwise L2 projection of a pointwise function onto the space.
  /// Throws std::invalid_argument if f returns a non-finite value.
  Eigen::VectorXd interpolate_scalar(const std::function<double(const Vec2&)>& f) const;

  /// Projection of an element-aware function (used for fields defined per
  /// compartment, which live on the meshed geometry rather than the circles).
  Eigen::VectorXd interpolate_scalar(
      const std::function<double(int elem, const Vec2&)>& f) const;

  /// Integral of the scalar DG field over one subdomain (or the whole domain).
  double integrate_scalar(const Eigen::VectorXd& scalar_coeffs) const;
  double integrate_scalar(const Eigen::VectorXd& scalar_coeffs, Subdomain sub) const;

  /// Traces of a scalar DG field on face f at the face quadrature points.
  FaceTrace evaluate_face_trace(const Eigen::VectorXd& scalar_coeffs, int f) const;

  /// Species block view of a full state vector.
  Eigen::VectorBlock<const StateVector> species_block(const StateVector& u, int species) const;
  Eigen::VectorBlock<StateVector> species_block(StateVector& u, int species) const;

 private:
  const Mesh* mesh_;
  int n_species_;
  int n_scalar_ = 0;
  std::vector<int> offsets_;
  std::vector<int> local_sizes_;
  std::vector<int> table_of_elem_;
  std::vector<ElementGeometry> elem_geom_;
  std::vector<DegreeTables> degree_tables_;
  std::vector<FaceTables> face_tables_;
  MeshQuantities quantities_;
};

}  // namespace randg
