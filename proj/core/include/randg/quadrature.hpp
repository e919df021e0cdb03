#pragma once

#include <Eigen/Dense>

#include "randg/geometry.hpp"

namespace randg {

/// Quadrature on the unit reference triangle {x,y >= 0, x+y <= 1}.
/// Weights are positive and sum to the reference measure 1/2.
struct QuadratureRule {
  Eigen::Matrix<double, Eigen::Dynamic, 2> points;
  Eigen::VectorXd weights;
  int exactness;  // polynomial total degree integrated exactly
  int size() const { return static_cast<int>(weights.size()); }
  Vec2 point(int q) const { return points.row(q).transpose(); }
};

/// Quadrature on the reference segment [0,1].
struct SegmentRule {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;
  int exactness;
  int size() const { return static_cast<int>(weights.size()); }
};

/// Gauss-Jacobi rule with weight (1-x)^alpha (1+x)^beta on [-1,1],
/// computed by the Golub-Welsch eigenvalue method. n points integrate
/// weighted polynomials of degree 2n-1 exactly.
void gauss_jacobi(int n, double alpha, double beta, Eigen::VectorXd& points,
                  Eigen::VectorXd& weights);

SegmentRule segment_quadrature(int exactness);

/// Collapsed (Duffy) tensor rule: Gauss-Legendre x Gauss-Jacobi(1,0),
/// exact for the requested total degree.
QuadratureRule triangle_quadrature(int exactness);

}  // namespace randg
