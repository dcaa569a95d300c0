#include "trifsi/sgs.hpp"

namespace trifsi {

double tau_t(double tau_K, double rho, double gamma1, double dt) {
  return 1.0 / (rho * gamma1 / (dt * dt) + 1.0 / tau_K);
}

SubscaleStore::SubscaleStore(int n_qp, int dim, int levels, int nsym)
    : n_qp_(n_qp), dim_(dim), levels_(levels) {
  data_ = Vec::Zero(static_cast<Eigen::Index>(n_qp) * (levels + 1) * dim);
  s_ = Vec::Zero(static_cast<Eigen::Index>(n_qp) * nsym);
  p_ = Vec::Zero(n_qp);
}

SubscaleStore SubscaleStore::solid(int n_qp, int dim) {
  return SubscaleStore(n_qp, dim, 3, sym_components(dim));
}

SubscaleStore SubscaleStore::fluid(int n_qp, int dim) {
  return SubscaleStore(n_qp, dim, 1, sym_components(dim));
}

VecN SubscaleStore::slot(int q, int level) const {
  VecN v(dim_);
  const Eigen::Index base = (static_cast<Eigen::Index>(q) * (levels_ + 1) + level) * dim_;
  for (int i = 0; i < dim_; ++i) v[i] = data_[base + i];
  return v;
}

void SubscaleStore::set_slot(int q, int level, const VecN& v) {
  const Eigen::Index base = (static_cast<Eigen::Index>(q) * (levels_ + 1) + level) * dim_;
  for (int i = 0; i < dim_; ++i) data_[base + i] = v[i];
}

VecN SubscaleStore::theta(int q) const {
  return 5.0 * slot(q, 1) - 4.0 * slot(q, 2) + slot(q, 3);
}

void SubscaleStore::rotate() {
  for (int q = 0; q < n_qp_; ++q)
    for (int l = levels_; l >= 1; --l) set_slot(q, l, slot(q, l - 1));
}

void SubscaleStore::clear() {
  data_.setZero();
  s_.setZero();
  p_.setZero();
}

void update_solid_subscales(SubscaleStore& store, int q, const VecN& R1, const VecN& R2_sym,
                            double R3, const SolidSgsParams& p) {
  if (p.dynamic) {
    const double tt = tau_t(p.tau1_K, p.rho, p.gamma1, p.dt);
    store.set_vec(q, tt * (R1 + p.rho / (p.dt * p.dt) * store.theta(q)));
  } else {
    store.set_vec(q, p.tau1_K * R1);
  }
  const int nsym = sym_components(store.dim());
  for (int c = 0; c < nsym; ++c) store.s_comp()[q * nsym + c] = p.tau2 * R2_sym[c];
  store.p_comp()[q] = p.tau3 * R3;
}

VecN subscale_acceleration_term(const SubscaleStore& store, int q, const VecN& R1,
                                const SolidSgsParams& p) {
  if (!p.dynamic) return VecN::Zero(store.dim());
  const double tt = tau_t(p.tau1_K, p.rho, p.gamma1, p.dt);
  const double kappa = tt / p.tau1_K;
  return (1.0 - kappa) * R1 - kappa * (p.rho / (p.dt * p.dt)) * store.theta(q);
}

void update_fluid_subscales(SubscaleStore& store, int q, const VecN& R1, const VecN& R2_sym,
                            double R3, const FluidSgsParams& p) {
  if (p.dynamic) {
    const double tt = 1.0 / (p.rho / p.dt + 1.0 / p.tau1_K);
    store.set_vec(q, tt * (R1 + p.rho / p.dt * store.vec_history(q, 1)));
  } else {
    store.set_vec(q, p.tau1_K * R1);
  }
  const int nsym = sym_components(store.dim());
  for (int c = 0; c < nsym; ++c) store.s_comp()[q * nsym + c] = p.tau2 * R2_sym[c];
  store.p_comp()[q] = p.tau3 * R3;
}

}  // namespace trifsi
