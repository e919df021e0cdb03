#include "randg/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace randg {

int basis_size(int degree) {
  if (degree < 0) throw std::invalid_argument("basis_size: negative degree");
  return (degree + 1) * (degree + 2) / 2;
}

double jacobi_poly(int n, double alpha, double beta, double x) {
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p = 0.5 * (alpha - beta + (alpha + beta + 2.0) * x);
  for (int k = 2; k <= n; ++k) {
    double s = 2.0 * k + alpha + beta;
    double c1 = 2.0 * k * (k + alpha + beta) * (s - 2.0);
    double c2 = (s - 1.0) * (alpha * alpha - beta * beta);
    double c3 = (s - 2.0) * (s - 1.0) * s;
    double c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
    double p_next = ((c2 + c3 * x) * p - c4 * p_prev) / c1;
    p_prev = p;
    p = p_next;
  }
  return p;
}

double jacobi_poly_derivative(int n, double alpha, double beta, double x) {
  if (n == 0) return 0.0;
  return 0.5 * (n + alpha + beta + 1.0) * jacobi_poly(n - 1, alpha + 1.0, beta + 1.0, x);
}

namespace {

// Dubiner mode (i,j) on the (-1,1)x(-1,1) collapsed triangle, with value and
// (r,s) derivatives. The (1-b)/2 powers keep every expression polynomial; the
// collapsed coordinate a is immaterial where its factor vanishes.
void dubiner_mode(int i, int j, double r, double s, double& val, double& dr, double& ds) {
  double b = s;
  double a = (s < 1.0 - 1e-14) ? 2.0 * (1.0 + r) / (1.0 - s) - 1.0 : -1.0;

  double f = jacobi_poly(i, 0.0, 0.0, a);
  double df = jacobi_poly_derivative(i, 0.0, 0.0, a);
  double g = jacobi_poly(j, 2.0 * i + 1.0, 0.0, b);
  double dg = jacobi_poly_derivative(j, 2.0 * i + 1.0, 0.0, b);

  double c = std::sqrt((2.0 * i + 1.0) * (i + j + 1.0) / 2.0);
  double half1mb = 0.5 * (1.0 - b);
  double hpow = std::pow(half1mb, i);          // ((1-b)/2)^i
  double hpow1 = (i >= 1) ? std::pow(half1mb, i - 1) : 0.0;

  val = c * f * g * hpow;
  dr = (i >= 1) ? c * df * g * hpow1 : 0.0;
  ds = c * f * dg * hpow;
  if (i >= 1) {
    ds += c * hpow1 * (0.5 * df * (1.0 + a) * g - 0.5 * i * f * g);
  }
}

}  // namespace

BasisEval eval_basis(int degree, const Vec2& p) {
  if (degree < 0) throw std::invalid_argument("eval_basis: negative degree");
  const double tol = 1e-12;
  if (p.x() < -tol || p.y() < -tol || p.x() + p.y() > 1.0 + tol) {
    throw std::invalid_argument("eval_basis: point outside reference triangle");
  }

  const int nb = basis_size(degree);
  BasisEval out;
  out.values.resize(nb);
  out.gradients.resize(nb, 2);

  // Unit triangle -> (-1,1) collapsed triangle; d/dx = 2 d/dr, d/dy = 2 d/ds.
  double r = 2.0 * p.x() - 1.0;
  double s = 2.0 * p.y() - 1.0;
  const double scale = std::sqrt(2.0);

  int k = 0;
  for (int d = 0; d <= degree; ++d) {
    for (int i = 0; i <= d; ++i) {
      int j = d - i;
      double v, dr, ds;
      dubiner_mode(i, j, r, s, v, dr, ds);
      out.values[k] = scale * v;
      out.gradients(k, 0) = 2.0 * scale * dr;
      out.gradients(k, 1) = 2.0 * scale * ds;
      ++k;
    }
  }
  return out;
}

void eval_basis_table(int degree, const Eigen::Matrix<double, Eigen::Dynamic, 2>& points,
                      Eigen::MatrixXd& values, Eigen::MatrixXd& ddx, Eigen::MatrixXd& ddy) {
  const int nq = static_cast<int>(points.rows());
  const int nb = basis_size(degree);
  values.resize(nq, nb);
  ddx.resize(nq, nb);
  ddy.resize(nq, nb);
  for (int q = 0; q < nq; ++q) {
    BasisEval e = eval_basis(degree, points.row(q).transpose());
    values.row(q) = e.values.transpose();
    ddx.row(q) = e.gradients.col(0).transpose();
    ddy.row(q) = e.gradients.col(1).transpose();
  }
}

}  // namespace randg
