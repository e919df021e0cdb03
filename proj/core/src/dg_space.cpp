#include "randg/dg_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace randg {

JumpMean jump_and_mean(double u_plus, double u_minus, const Vec2& n_plus) {
  return {u_plus * n_plus - u_minus * n_plus, 0.5 * (u_plus + u_minus)};
}

JumpMean boundary_jump_and_mean(double u_plus, const Vec2& n) {
  return {u_plus * n, u_plus};
}

namespace {

Vec2 clamp_to_reference(Vec2 p) {
  // Face pullbacks land on the reference triangle boundary up to roundoff.
  p.x() = std::max(p.x(), 0.0);
  p.y() = std::max(p.y(), 0.0);
  double s = p.x() + p.y();
  if (s > 1.0) p /= s;
  return p;
}

}  // namespace

DgSpace::DgSpace(const Mesh& mesh, int n_species) : mesh_(&mesh), n_species_(n_species) {
  if (n_species < 1) throw std::invalid_argument("DgSpace: n_species must be positive");

  const int ne = mesh.n_elements();
  offsets_.resize(ne);
  local_sizes_.resize(ne);
  table_of_elem_.resize(ne);
  elem_geom_.resize(ne);
  quantities_ = mesh.quantities();

  std::map<int, int> table_index;  // degree -> slot in degree_tables_
  for (int e = 0; e < ne; ++e) {
    const int m = mesh.element(e).degree;
    auto [it, inserted] = table_index.try_emplace(m, static_cast<int>(degree_tables_.size()));
    if (inserted) {
      DegreeTables t;
      t.degree = m;
      t.nb = basis_size(m);
      t.volume = triangle_quadrature(2 * m + 1);
      eval_basis_table(m, t.volume.points, t.values, t.ddx, t.ddy);
      degree_tables_.push_back(std::move(t));
    }
    table_of_elem_[e] = it->second;

    offsets_[e] = n_scalar_;
    local_sizes_[e] = basis_size(m);
    n_scalar_ += local_sizes_[e];

    auto v = mesh.element_vertices(e);
    ElementGeometry g;
    g.v0 = v[0];
    g.jac.col(0) = v[1] - v[0];
    g.jac.col(1) = v[2] - v[0];
    g.det = std::abs(g.jac.determinant());
    g.inv_jac = g.jac.inverse();
    g.inv_jac_t = g.inv_jac.transpose();
    elem_geom_[e] = g;
  }

  // Face trace tables: both sides are evaluated at the same physical points.
  const int nf = mesh.n_faces();
  face_tables_.resize(nf);
  for (int f = 0; f < nf; ++f) {
    const MeshFace& fc = mesh.face(f);
    int m_plus = mesh.element(fc.elem_plus).degree;
    int m_max = m_plus;
    if (fc.elem_minus >= 0) m_max = std::max(m_max, mesh.element(fc.elem_minus).degree);

    FaceTables& t = face_tables_[f];
    t.rule = segment_quadrature(2 * m_max + 1);
    const int nq = t.rule.size();
    const Vec2 a = mesh.vertex(fc.v[0]);
    const Vec2 b = mesh.vertex(fc.v[1]);
    t.points.resize(nq);
    for (int q = 0; q < nq; ++q) t.points[q] = a + t.rule.points[q] * (b - a);

    auto fill_side = [&](int elem, FaceSideTable& side) {
      const ElementGeometry& g = elem_geom_[elem];
      const int m = mesh.element(elem).degree;
      const int nb = basis_size(m);
      side.values.resize(nq, nb);
      side.gx.resize(nq, nb);
      side.gy.resize(nq, nb);
      for (int q = 0; q < nq; ++q) {
        Vec2 ref = clamp_to_reference(g.inv_jac * (t.points[q] - g.v0));
        BasisEval be = eval_basis(m, ref);
        side.values.row(q) = be.values.transpose();
        for (int k = 0; k < nb; ++k) {
          Vec2 grad = g.inv_jac_t * be.gradients.row(k).transpose();
          side.gx(q, k) = grad.x();
          side.gy(q, k) = grad.y();
        }
      }
    };
    fill_side(fc.elem_plus, t.plus);
    if (fc.elem_minus >= 0) fill_side(fc.elem_minus, t.minus);
  }
}

double DgSpace::eval_scalar(const Eigen::VectorXd& scalar_coeffs, int e, const Vec2& ref_point) const {
  BasisEval be = eval_basis(element_degree(e), ref_point);
  return be.values.dot(scalar_coeffs.segment(offsets_[e], local_sizes_[e]));
}

Eigen::VectorXd DgSpace::interpolate_scalar(const std::function<double(const Vec2&)>& f) const {
  return interpolate_scalar([&f](int, const Vec2& x) { return f(x); });
}

Eigen::VectorXd DgSpace::interpolate_scalar(
    const std::function<double(int elem, const Vec2&)>& f) const {
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(n_scalar_);
  for (int e = 0; e < mesh_->n_elements(); ++e) {
    const DegreeTables& t = degree_tables(e);
    const ElementGeometry& g = elem_geom_[e];
    Eigen::VectorXd fvals(t.volume.size());
    for (int q = 0; q < t.volume.size(); ++q) {
      Vec2 x = g.v0 + g.jac * t.volume.point(q);
      double v = f(e, x);
      if (!std::isfinite(v)) {
        throw std::invalid_argument("interpolate_scalar: non-finite function value");
      }
      fvals[q] = v;
    }
    // Reference mass matrix is I/2, so c_k = 2 int_T f phi_k.
    coeffs.segment(offsets_[e], local_sizes_[e]) =
        2.0 * t.values.transpose() * (t.volume.weights.cwiseProduct(fvals));
  }
  return coeffs;
}

double DgSpace::integrate_scalar(const Eigen::VectorXd& scalar_coeffs) const {
  double total = 0.0;
  for (int e = 0; e < mesh_->n_elements(); ++e) {
    // int_kappa u_h = area * c_0 (first mode is the constant 1).
    total += mesh_->element_area(e) * scalar_coeffs[offsets_[e]];
  }
  return total;
}

double DgSpace::integrate_scalar(const Eigen::VectorXd& scalar_coeffs, Subdomain sub) const {
  double total = 0.0;
  for (int e = 0; e < mesh_->n_elements(); ++e) {
    if (mesh_->element(e).subdomain != sub) continue;
    total += mesh_->element_area(e) * scalar_coeffs[offsets_[e]];
  }
  return total;
}

FaceTrace DgSpace::evaluate_face_trace(const Eigen::VectorXd& scalar_coeffs, int f) const {
  const MeshFace& fc = mesh_->face(f);
  const FaceTables& t = face_tables_[f];
  const int nq = t.rule.size();

  FaceTrace tr;
  auto side_eval = [&](int elem, const FaceSideTable& side, Eigen::VectorXd& u,
                       Eigen::Matrix<double, Eigen::Dynamic, 2>& grad) {
    auto c = scalar_coeffs.segment(offsets_[elem], local_sizes_[elem]);
    u = side.values * c;
    grad.resize(nq, 2);
    grad.col(0) = side.gx * c;
    grad.col(1) = side.gy * c;
  };
  side_eval(fc.elem_plus, t.plus, tr.u_plus, tr.grad_plus);

  tr.jump.resize(nq);
  tr.mean.resize(nq);
  if (fc.elem_minus >= 0) {
    side_eval(fc.elem_minus, t.minus, tr.u_minus, tr.grad_minus);
    for (int q = 0; q < nq; ++q) {
      JumpMean jm = jump_and_mean(tr.u_plus[q], tr.u_minus[q], fc.normal);
      tr.jump[q] = jm.jump;
      tr.mean[q] = jm.mean;
    }
  } else {
    for (int q = 0; q < nq; ++q) {
      JumpMean jm = boundary_jump_and_mean(tr.u_plus[q], fc.normal);
      tr.jump[q] = jm.jump;
      tr.mean[q] = jm.mean;
    }
  }
  return tr;
}

Eigen::VectorBlock<const StateVector> DgSpace::species_block(const StateVector& u, int species) const {
  return u.segment(species * n_scalar_, n_scalar_);
}

Eigen::VectorBlock<StateVector> DgSpace::species_block(StateVector& u, int species) const {
  return u.segment(species * n_scalar_, n_scalar_);
}

}  // namespace randg
