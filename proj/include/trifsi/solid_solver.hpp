#pragma once

#include <array>
#include <map>

#include "trifsi/linear_system.hpp"
#include "trifsi/sgs.hpp"
#include "trifsi/solid.hpp"

namespace trifsi {

struct NewtonReport {
  bool converged = false;
  int iterations = 0;  // residual evaluations performed
  std::vector<double> residuals;
  std::string message;
};

struct SolidOptions {
  double newton_tol = 1e-8;  // relative to the first residual of the step
  int newton_max_iters = 25;
  bool quasistatic = false;   // drops inertia (gamma1 = 0)
  bool stabilization = true;  // VMS terms; off gives the plain Galerkin problem
  bool dynamic_subscales = true;
  int n_threads = 1;
  SolveCfg linear;
};

struct SolidDirichlet {
  std::string tag;
  std::array<int, 3> mask = {1, 1, 1};
  VecN value;  // prescribed total displacement
};

struct SolidTractionBc {
  std::string tag;
  VecN value;             // traction, Pa
  double ramp_time = 0.0;  // linear ramp from 0; 0 means constant
};

// Nodal displacement / stress / pressure unknowns with the time history needed
// by the BDF2 stencil.
struct SolidState {
  Vec d;      // last accepted displacement
  Vec d_nm1;
  Vec d_nm2;
  Vec s;      // nodal deviatoric stress, sym components
  Vec p;      // nodal pressure, positive in traction
  Vec a;      // acceleration at the last accepted step
  Vec v;      // velocity at the last accepted step
};

// Updated-Lagrangian three-field solver. Within a step the geometry is frozen
// at the last converged configuration; the mesh moves on commit.
class SolidSolver {
 public:
  SolidSolver(Mesh mesh, SolidMaterial mat, SolidOptions opts = {});

  Mesh& mesh() { return mesh_; }
  const Mesh& mesh() const { return mesh_; }
  const SolidState& state() const { return state_; }
  const SubscaleStore& subscales() const { return sgs_; }
  const DofMap& dofs() const { return dofs_; }
  const SolidMaterial& material() const { return mat_; }
  double time() const { return time_; }
  int step_index() const { return step_; }

  void add_dirichlet(const SolidDirichlet& bc) { dirichlet_.push_back(bc); }
  void add_traction(const SolidTractionBc& bc) { tractions_.push_back(bc); }
  // Interface load: one traction vector per mesh node (only nodes of `tag` are used).
  void set_nodal_traction(const std::string& tag, std::vector<VecN> per_node);
  void set_initial_velocity(const Vec& v0);

  // Step lifecycle. solve() may be called repeatedly between begin_step and
  // commit_step (the coupling loop re-solves with updated interface loads).
  void begin_step(double dt);
  NewtonReport solve();
  void commit_step();
  NewtonReport step(double dt);  // begin + solve + commit

  // Trial (current iterate) fields, valid between begin_step and commit_step.
  Vec trial_displacement() const { return state_.d + w_; }
  const Vec& trial_stress() const { return s_; }
  const Vec& trial_pressure() const { return p_; }
  Vec trial_velocity() const;

  // Test hooks: the tangent is the exact derivative of the residual at the
  // frozen linearization state, which these expose directly.
  Vec pack_trial() const;
  void set_trial(const Vec& y);
  void freeze_linearization();
  SparseSystem assemble(bool want_matrix, bool update_store = false);
  Vec residual() { return assemble(false).b; }

  double elem_qp_offset(int e) const { return qp_offset_[e]; }

 private:
  void init_qp_data();
  std::vector<DirichletBc> build_constraints() const;
  void element_kernel(int e, bool want_matrix, bool update_store, bool frozen,
                      ElementContribution& out);
  void traction_contributions(Vec& rhs) const;

  Mesh mesh_;
  SolidMaterial mat_;
  SolidOptions opts_;
  DofMap dofs_;
  SolidState state_;
  SubscaleStore sgs_;

  std::vector<KinematicsQP> kin_;
  std::vector<int> qp_offset_;
  std::vector<double> h_elem_;

  std::vector<SolidDirichlet> dirichlet_;
  std::vector<SolidTractionBc> tractions_;
  std::map<std::string, std::vector<VecN>> nodal_tractions_;

  double time_ = 0.0;
  double dt_ = 0.0;
  int step_ = 0;
  bool in_step_ = false;
  double gamma1_ = 2.0;
  Vec accel_hist_;  // theta combination of displacement history / dt^2

  // trial: step displacement increment and total stress/pressure iterates
  Vec w_, s_, p_;
  // frozen linearization state for the adjoint coefficients
  Vec wc_, sc_, pc_;
};

}  // namespace trifsi
