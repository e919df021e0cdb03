#pragma once

#include <Eigen/Dense>

#include "randg/geometry.hpp"

namespace randg {

/// Number of polynomial basis functions of total degree <= m on a triangle.
int basis_size(int degree);

struct BasisEval {
  Eigen::VectorXd values;                            // nb
  Eigen::Matrix<double, Eigen::Dynamic, 2> gradients;  // nb x 2, reference derivatives
};

/// Evaluates the modal (Dubiner) basis of total degree <= m on the unit
/// reference triangle {x,y >= 0, x+y <= 1}. The basis is orthogonal with
/// int_T phi_k phi_l = delta_kl / 2, and the first function is the constant 1,
/// so the element mass matrix of an affine element is its area times the
/// identity. Throws std::invalid_argument for negative degree or points
/// outside the closed reference triangle.
BasisEval eval_basis(int degree, const Vec2& reference_point);

/// Batch evaluation at many reference points; rows of `points` are (x, y).
/// Outputs: values (nq x nb), ddx/ddy (nq x nb) reference derivatives.
void eval_basis_table(int degree, const Eigen::Matrix<double, Eigen::Dynamic, 2>& points,
                      Eigen::MatrixXd& values, Eigen::MatrixXd& ddx, Eigen::MatrixXd& ddy);

/// Jacobi polynomial P_n^(alpha,beta) and its derivative at x (helper shared
/// with the quadrature module and tests).
double jacobi_poly(int n, double alpha, double beta, double x);
double jacobi_poly_derivative(int n, double alpha, double beta, double x);

}  // namespace randg
