#pragma once

#include <optional>

#include "trifsi/core.hpp"

namespace trifsi {

struct SolidMaterial {
  double rho = 1.0;         // kg/m^3
  double mu = 1.0;          // shear modulus, Pa
  double inv_lambda = 0.0;  // 1/Pa; 0 encodes lambda = infinity (incompressible)
  VecN body_force = VecN::Zero(2);  // acceleration, m/s^2; momentum load is rho*f

  void check() const {
    if (!(rho > 0.0) || !(mu > 0.0) || inv_lambda < 0.0)
      throw ConfigError("solid material requires rho > 0, mu > 0, inv_lambda >= 0");
  }
};

// Neo-Hookean Cauchy stress split. s is always the deviatoric part; the
// pressure is returned only for finite lambda, otherwise it is an independent
// unknown and the constitutive row degenerates to ln J = 0.
struct StressSplit {
  MatN s;                   // deviatoric, trace-free
  std::optional<double> p;  // nullopt = incompressible constraint
};

StressSplit stress_split(const MatN& b, double J, const SolidMaterial& mat);

// Directional linearization of the Jacobian determinant and its logarithm:
// delta_J = J * tr(F^-1 grad_dd), delta_lnJ = tr(F^-1 grad_dd). grad_dd must
// be the displacement-increment gradient in the configuration F maps from.
struct JLinearization {
  double delta_J = 0.0;
  double delta_lnJ = 0.0;
};

JLinearization linearize_J(double J, const MatN& F_inv, const MatN& grad_dd);

// Per-quadrature-point total kinematic state, accumulated multiplicatively
// across updated-Lagrangian steps.
struct KinematicsQP {
  MatN F;
  double J = 1.0;
  MatN b;

  static KinematicsQP identity(int dim) {
    return {MatN::Identity(dim, dim), 1.0, MatN::Identity(dim, dim)};
  }
};

// Applies the incremental deformation f = I + grad_dd (gradient taken in the
// last converged configuration): F <- f F, J <- det(f) J, b <- f b f^T.
KinematicsQP update_kinematics(const KinematicsQP& kin, const MatN& grad_dd);

// BDF2 approximation of the second time derivative.
double bdf2_acceleration(double d_new, double d_n, double d_nm1, double d_nm2, double dt);
Vec bdf2_acceleration(const Vec& d_new, const Vec& d_n, const Vec& d_nm1, const Vec& d_nm2,
                      double dt);

// Element stabilization parameters; h is the effective element size (diameter
// divided by the polynomial order).
struct SolidTaus {
  double tau1 = 0.0;
  double tau2 = 0.0;
  double tau3 = 0.0;
};

SolidTaus tau_solid(double h, const SolidMaterial& mat);

}  // namespace trifsi
