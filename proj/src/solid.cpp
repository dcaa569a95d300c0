#include "trifsi/solid.hpp"

#include <cmath>

namespace trifsi {

StressSplit stress_split(const MatN& b, double J, const SolidMaterial& mat) {
  if (!(J > 0.0)) throw InvertedElementError("stress_split: J must be positive");
  const int nd = static_cast<int>(b.rows());
  StressSplit out;
  out.s = (mat.mu / J) * (b - (b.trace() / nd) * MatN::Identity(nd, nd));
  if (mat.inv_lambda > 0.0) {
    const double lambda = 1.0 / mat.inv_lambda;
    out.p = (lambda * std::log(J) - mat.mu + mat.mu * b.trace() / nd) / J;
  }
  return out;
}

JLinearization linearize_J(double J, const MatN& F_inv, const MatN& grad_dd) {
  const double t = (F_inv * grad_dd).trace();
  return {J * t, t};
}

KinematicsQP update_kinematics(const KinematicsQP& kin, const MatN& grad_dd) {
  const int nd = static_cast<int>(kin.F.rows());
  const MatN f = MatN::Identity(nd, nd) + grad_dd;
  const double detf = f.determinant();
  if (!(detf > 0.0))
    throw InvertedElementError("update_kinematics: incremental deformation is inverted");
  KinematicsQP out;
  out.F = f * kin.F;
  out.J = detf * kin.J;
  out.b = f * kin.b * f.transpose();
  return out;
}

double bdf2_acceleration(double d_new, double d_n, double d_nm1, double d_nm2, double dt) {
  return (2.0 * d_new - 5.0 * d_n + 4.0 * d_nm1 - d_nm2) / (dt * dt);
}

Vec bdf2_acceleration(const Vec& d_new, const Vec& d_n, const Vec& d_nm1, const Vec& d_nm2,
                      double dt) {
  return (2.0 * d_new - 5.0 * d_n + 4.0 * d_nm1 - d_nm2) / (dt * dt);
}

SolidTaus tau_solid(double h, const SolidMaterial& mat) {
  if (!(h > 0.0)) throw DomainError("tau_solid: h must be positive");
  constexpr double c1 = 4.0, c2 = 0.1, c3 = 0.1;
  return {h * h / (c1 * mat.mu), c2 * 2.0 * mat.mu, c3 * 2.0 * mat.mu};
}

}  // namespace trifsi
