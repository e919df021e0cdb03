#include "randg/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace randg {

void gauss_jacobi(int n, double alpha, double beta, Eigen::VectorXd& points,
                  Eigen::VectorXd& weights) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: need at least one point");

  // Jacobi matrix of the monic three-term recurrence.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  auto diag = [&](int k) {
    double s = 2.0 * k + alpha + beta;
    if (k == 0) return (beta - alpha) / (alpha + beta + 2.0);
    return (beta * beta - alpha * alpha) / (s * (s + 2.0));
  };
  auto offdiag = [&](int k) {  // b_k for k >= 1
    double s = 2.0 * k + alpha + beta;
    return 4.0 * k * (k + alpha) * (k + beta) * (k + alpha + beta) /
           (s * s * (s + 1.0) * (s - 1.0));
  };
  for (int k = 0; k < n; ++k) J(k, k) = diag(k);
  for (int k = 1; k < n; ++k) {
    double b = std::sqrt(offdiag(k));
    J(k, k - 1) = b;
    J(k - 1, k) = b;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  // Total weight-function mass: 2^(a+b+1) B(a+1, b+1).
  double mu0 = std::pow(2.0, alpha + beta + 1.0) *
               std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                        std::lgamma(alpha + beta + 2.0));
  points = es.eigenvalues();
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double first = es.eigenvectors()(0, i);
    weights[i] = mu0 * first * first;
  }
}

SegmentRule segment_quadrature(int exactness) {
  if (exactness < 0) throw std::invalid_argument("segment_quadrature: negative exactness");
  int n = exactness / 2 + 1;  // Gauss-Legendre: 2n-1 >= exactness
  Eigen::VectorXd x, w;
  gauss_jacobi(n, 0.0, 0.0, x, w);
  SegmentRule rule;
  rule.points = (x.array() + 1.0) / 2.0;
  rule.weights = w / 2.0;
  rule.exactness = 2 * n - 1;
  return rule;
}

QuadratureRule triangle_quadrature(int exactness) {
  if (exactness < 0) throw std::invalid_argument("triangle_quadrature: negative exactness");
  int n = exactness / 2 + 1;

  Eigen::VectorXd xu, wu;  // Legendre direction
  gauss_jacobi(n, 0.0, 0.0, xu, wu);
  Eigen::VectorXd xv, wv;  // Jacobi(1,0) direction absorbs the Duffy Jacobian
  gauss_jacobi(n, 1.0, 0.0, xv, wv);

  // Duffy map (u,v) in [0,1]^2 -> (x,y) = (u(1-v), v); dx dy = (1-v) du dv.
  QuadratureRule rule;
  rule.points.resize(n * n, 2);
  rule.weights.resize(n * n);
  int q = 0;
  for (int i = 0; i < n; ++i) {
    double u = (xu[i] + 1.0) / 2.0;
    double pu = wu[i] / 2.0;
    for (int j = 0; j < n; ++j) {
      double v = (xv[j] + 1.0) / 2.0;
      double pv = wv[j] / 4.0;  // includes the (1-v) factor
      rule.points(q, 0) = u * (1.0 - v);
      rule.points(q, 1) = v;
      rule.weights[q] = pu * pv;
      ++q;
    }
  }
  rule.exactness = 2 * n - 1;
  return rule;
}

}  // namespace randg
