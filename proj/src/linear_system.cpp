#include "trifsi/linear_system.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseLU>
#include <future>
#include <sstream>

namespace trifsi {

namespace {

using Triplet = Eigen::Triplet<double>;

struct Buffers {
  std::vector<Triplet> trips;
  Vec rhs;
};

Buffers run_chunk(int n_dofs, int begin, int end, const ElementSource& source, bool want_matrix) {
  Buffers buf;
  buf.rhs = Vec::Zero(n_dofs);
  ElementContribution c;
  for (int e = begin; e < end; ++e) {
    c.dofs.clear();
    c.Ke.resize(0, 0);
    c.Fe.resize(0);
    source(e, c);
    const int n = static_cast<int>(c.dofs.size());
    for (int i = 0; i < n; ++i)
      if (c.dofs[i] < 0 || c.dofs[i] >= n_dofs) throw Error("assembly index out of range");
    if (c.Fe.size() > 0) {
      if (c.Fe.size() != n) throw Error("element rhs size mismatch");
      for (int i = 0; i < n; ++i) buf.rhs[c.dofs[i]] += c.Fe[i];
    }
    if (want_matrix && c.Ke.size() > 0) {
      if (c.Ke.rows() != n || c.Ke.cols() != n) throw Error("element matrix size mismatch");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (c.Ke(i, j) != 0.0) buf.trips.emplace_back(c.dofs[i], c.dofs[j], c.Ke(i, j));
    }
  }
  return buf;
}

std::vector<Buffers> run_parallel(int n_dofs, int n_elems, const ElementSource& source,
                                  int n_threads, bool want_matrix) {
  n_threads = std::max(1, n_threads);
  const int chunk = (n_elems + n_threads - 1) / std::max(1, n_threads);
  std::vector<std::future<Buffers>> futs;
  for (int begin = 0; begin < n_elems; begin += chunk) {
    const int end = std::min(begin + chunk, n_elems);
    if (n_threads == 1) {
      std::promise<Buffers> p;
      p.set_value(run_chunk(n_dofs, begin, end, source, want_matrix));
      futs.push_back(p.get_future());
    } else {
      futs.push_back(std::async(std::launch::async, run_chunk, n_dofs, begin, end,
                                std::cref(source), want_matrix));
    }
  }
  std::vector<Buffers> out;
  out.reserve(futs.size());
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

}  // namespace

SparseSystem assemble(int n_dofs, int n_elems, const ElementSource& source, int n_threads) {
  auto bufs = run_parallel(n_dofs, n_elems, source, n_threads, true);
  SparseSystem sys;
  sys.b = Vec::Zero(n_dofs);
  std::size_t total = 0;
  for (const auto& b : bufs) total += b.trips.size();
  std::vector<Triplet> all;
  all.reserve(total);
  for (auto& b : bufs) {
    all.insert(all.end(), b.trips.begin(), b.trips.end());
    sys.b += b.rhs;
  }
  sys.A.resize(n_dofs, n_dofs);
  sys.A.setFromTriplets(all.begin(), all.end());
  return sys;
}

Vec assemble_rhs(int n_dofs, int n_elems, const ElementSource& source, int n_threads) {
  auto bufs = run_parallel(n_dofs, n_elems, source, n_threads, false);
  Vec rhs = Vec::Zero(n_dofs);
  for (const auto& b : bufs) rhs += b.rhs;
  return rhs;
}

void apply_constraints(SparseSystem& sys, const std::vector<DirichletBc>& bcs) {
  if (bcs.empty()) return;
  const int n = static_cast<int>(sys.A.rows());
  std::vector<char> constrained(n, 0);
  Vec values = Vec::Zero(n);
  for (const auto& bc : bcs) {
    constrained[bc.dof] = 1;
    values[bc.dof] = bc.value;
  }
  // Column elimination into the rhs, then wipe constrained rows/columns.
  for (int k = 0; k < sys.A.outerSize(); ++k) {
    for (SpMat::InnerIterator it(sys.A, k); it; ++it) {
      const int r = static_cast<int>(it.row());
      const int c = static_cast<int>(it.col());
      if (constrained[c] && !constrained[r]) sys.b[r] -= it.value() * values[c];
      if (constrained[r] || constrained[c]) it.valueRef() = 0.0;
    }
  }
  sys.A.prune(0.0);
  std::vector<Triplet> diag;
  for (const auto& bc : bcs) diag.emplace_back(bc.dof, bc.dof, 1.0);
  SpMat D(n, n);
  D.setFromTriplets(diag.begin(), diag.end());
  sys.A += D;
  for (const auto& bc : bcs) sys.b[bc.dof] = bc.value;
}

std::pair<Vec, SolverReport> solve_linear(const SparseSystem& sys, const SolveCfg& cfg) {
  SolverReport rep;
  Vec x;
  if (cfg.method == SolveCfg::Method::direct) {
    Eigen::SparseLU<SpMat> lu;
    lu.analyzePattern(sys.A);
    lu.factorize(sys.A);
    if (lu.info() != Eigen::Success) {
      throw SolverError("sparse factorization failed (singular matrix?)");
    }
    x = lu.solve(sys.b);
    rep.iterations = 1;
  } else {
    Eigen::BiCGSTAB<SpMat> it;
    it.setTolerance(cfg.tol);
    it.setMaxIterations(cfg.max_iterations);
    it.compute(sys.A);
    x = it.solve(sys.b);
    rep.iterations = static_cast<int>(it.iterations());
  }
  const double bnorm = sys.b.norm();
  rep.residual = (sys.A * x - sys.b).norm() / (bnorm > 0.0 ? bnorm : 1.0);
  rep.converged = rep.residual <= cfg.tol;
  return {std::move(x), rep};
}

ConstrainedOperator::ConstrainedOperator(SpMat A, std::vector<int> constrained_dofs)
    : A_(std::move(A)), cdofs_(std::move(constrained_dofs)) {
  const int n = static_cast<int>(A_.rows());
  is_constrained_.assign(n, 0);
  for (int d : cdofs_) is_constrained_[d] = 1;
  SpMat M = A_;
  for (int k = 0; k < M.outerSize(); ++k)
    for (SpMat::InnerIterator it(M, k); it; ++it)
      if (is_constrained_[it.row()] || is_constrained_[it.col()]) it.valueRef() = 0.0;
  M.prune(0.0);
  std::vector<Eigen::Triplet<double>> diag;
  for (int d : cdofs_) diag.emplace_back(d, d, 1.0);
  SpMat D(n, n);
  D.setFromTriplets(diag.begin(), diag.end());
  M += D;
  lu_.analyzePattern(M);
  lu_.factorize(M);
  if (lu_.info() != Eigen::Success) throw SolverError("mesh motion operator is singular");
}

Vec ConstrainedOperator::solve(const Vec& rhs, const std::vector<double>& values) const {
  if (values.size() != cdofs_.size()) throw DomainError("constraint value count mismatch");
  const int n = static_cast<int>(A_.rows());
  Vec g = Vec::Zero(n);
  for (std::size_t i = 0; i < cdofs_.size(); ++i) g[cdofs_[i]] = values[i];
  Vec b = rhs - A_ * g;
  for (std::size_t i = 0; i < cdofs_.size(); ++i) b[cdofs_[i]] = values[i];
  return lu_.solve(b);
}

}  // namespace trifsi
