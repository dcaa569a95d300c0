#pragma once

#include <vector>

#include "trifsi/core.hpp"

namespace trifsi {

// tau_t for a second-order-in-time sub-scale with the FE-scale stencil:
// (rho*gamma1/dt^2 + 1/tau_K)^-1. gamma1 = 2 for BDF2, 1 for the BDF1 start,
// 0 recovers the quasi-static tau_K.
double tau_t(double tau_K, double rho, double gamma1, double dt);

// Per-quadrature-point sub-scale storage. Histories rotate only when a time
// step is accepted; current values may be rewritten every nonlinear iteration.
class SubscaleStore {
 public:
  // Solid layout: vector sub-scale with three history levels plus quasi-static
  // stress/pressure sub-scales. Fluid layout: one history level.
  static SubscaleStore solid(int n_qp, int dim);
  static SubscaleStore fluid(int n_qp, int dim);

  int n_qp() const { return n_qp_; }
  int dim() const { return dim_; }
  int history_levels() const { return levels_; }

  // Current-step values.
  VecN vec(int q) const { return slot(q, 0); }
  void set_vec(int q, const VecN& v) { set_slot(q, 0, v); }
  VecN vec_history(int q, int level) const { return slot(q, level); }

  // History combination for the second-order stencil: 5 y^n - 4 y^{n-1} + y^{n-2}.
  VecN theta(int q) const;

  Vec& s_comp() { return s_; }
  Vec& p_comp() { return p_; }
  const Vec& s_comp() const { return s_; }
  const Vec& p_comp() const { return p_; }

  // Shifts history levels down and keeps the current values in level 1.
  void rotate();
  void clear();

 private:
  SubscaleStore(int n_qp, int dim, int levels, int nsym);
  VecN slot(int q, int level) const;
  void set_slot(int q, int level, const VecN& v);

  int n_qp_ = 0;
  int dim_ = 0;
  int levels_ = 0;  // history levels beyond the current slot
  Vec data_;        // (levels+1) * dim per qp, slot-major
  Vec s_;           // nsym per qp
  Vec p_;           // 1 per qp
};

// Solid sub-scale update: d = tau_t1*(R1 + rho*theta/dt^2), s = tau2*R2,
// p = tau3*R3. With dynamic=false the quasi-static form d = tau1K*R1 is used
// and the history term dropped.
struct SolidSgsParams {
  double tau1_K = 0.0;
  double tau2 = 0.0;
  double tau3 = 0.0;
  double rho = 0.0;
  double gamma1 = 2.0;
  double dt = 1.0;
  bool dynamic = true;
};

void update_solid_subscales(SubscaleStore& store, int q, const VecN& R1, const VecN& R2_sym,
                            double R3, const SolidSgsParams& p);

// Integrand of <rho a_breve, e_h>: (1 - tau_t/tau_K) R1 - (tau_t/tau_K) rho theta/dt^2.
VecN subscale_acceleration_term(const SubscaleStore& store, int q, const VecN& R1,
                                const SolidSgsParams& p);

// Fluid sub-scale update (backward Euler in time for the velocity sub-scale):
// u = (rho/dt + 1/tau1K)^-1 (R1 + rho*u^n/dt), s = tau2*R2, p = tau3*R3.
struct FluidSgsParams {
  double tau1_K = 0.0;
  double tau2 = 0.0;
  double tau3 = 0.0;
  double rho = 0.0;
  double dt = 1.0;
  bool dynamic = true;
};

void update_fluid_subscales(SubscaleStore& store, int q, const VecN& R1, const VecN& R2_sym,
                            double R3, const FluidSgsParams& p);

}  // namespace trifsi
