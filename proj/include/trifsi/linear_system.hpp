#pragma once

#include <functional>
#include <vector>

#include "trifsi/dof_map.hpp"

namespace trifsi {

struct SparseSystem {
  SpMat A;
  Vec b;
};

struct SolverReport {
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;
};

struct SolveCfg {
  enum class Method { direct, bicgstab };
  Method method = Method::direct;
  double tol = 1e-10;
  int max_iterations = 2000;
};

// Per-element contribution: local matrix (may be empty when only a residual is
// wanted), local rhs and the global scatter indices.
struct ElementContribution {
  std::vector<int> dofs;
  Mat Ke;
  Vec Fe;
};

using ElementSource = std::function<void(int elem, ElementContribution& out)>;

// Scatter-adds n_elems contributions into a global system. With n_threads > 1
// elements are processed in chunks; buffers are merged in element order, so
// the result is bitwise equal to the serial assembly.
SparseSystem assemble(int n_dofs, int n_elems, const ElementSource& source, int n_threads = 1);

// Assembles only the rhs (element matrices ignored).
Vec assemble_rhs(int n_dofs, int n_elems, const ElementSource& source, int n_threads = 1);

// Row replacement with symmetric column elimination: constrained rows become
// identity rows with rhs equal to the prescribed value, and the constrained
// columns are moved to the rhs.
void apply_constraints(SparseSystem& sys, const std::vector<DirichletBc>& bcs);

// Direct sparse factorization by default. Throws SolverError (carrying the
// report in its message) on a singular matrix; an iterative solve that fails
// to reach cfg.tol returns report.converged = false.
std::pair<Vec, SolverReport> solve_linear(const SparseSystem& sys, const SolveCfg& cfg = {});

// Prefactored constrained operator for repeated solves with changing
// constraint values (used by the mesh motion module).
class ConstrainedOperator {
 public:
  ConstrainedOperator(SpMat A_unconstrained, std::vector<int> constrained_dofs);
  // values[i] prescribes the dof constrained_dofs[i]; rhs is the unconstrained load.
  Vec solve(const Vec& rhs, const std::vector<double>& values) const;

 private:
  SpMat A_;  // original operator, kept for column elimination
  std::vector<int> cdofs_;
  std::vector<char> is_constrained_;
  Eigen::SparseLU<SpMat> lu_;
};

}  // namespace trifsi
