#ifndef MAXWELL_KRYLOV_HPP
#define MAXWELL_KRYLOV_HPP

#include <functional>
#include <string>
#include <vector>

#include "maxwell/sparse.hpp"
#include "maxwell/system.hpp"

namespace maxwell {

enum class Smoother { Jacobi, SymmetricGaussSeidel };

struct SolverConfig {
  double outer_tol = 1e-8;
  int outer_maxit = 200;
  int restart = 100;
  double inner_tol = 1e-2;
  int inner_maxit = 2000;
  Smoother smoother = Smoother::SymmetricGaussSeidel;
};

enum class SolveStatus { Converged, MaxIterations, Stagnated };

struct SolveStats {
  int iterations = 0;
  double final_relres = 0.0;
  std::vector<double> residual_history;  // history[0] = 1
  std::vector<double> div_b_history;     // ||D B^l||_inf per iterate
  double wall_time_ms = 0.0;
  SolveStatus status = SolveStatus::Converged;
};

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Stationary smoother used as the inner CG/GMRES preconditioner.
class SmootherOp {
 public:
  SmootherOp(const SparseMatrix& a, Smoother kind);
  std::vector<double> apply(const std::vector<double>& r) const;

 private:
  const SparseMatrix* a_;
  Smoother kind_;
  std::vector<double> inv_diag_;
};

/// Preconditioned CG on an SPD matrix; relative residual stopping.
/// Throws SolverError if negative curvature is detected.
std::vector<double> pcg(const SparseMatrix& a, const SmootherOp& m,
                        const std::vector<double>& b, double tol, int maxit,
                        int* iters_out = nullptr);

/// Preconditioned GMRES(30) for the inner diagonal-block solves.
std::vector<double> gmres_inner(const SparseMatrix& a, const SmootherOp& m,
                                const std::vector<double>& b, double tol,
                                int maxit, int* iters_out = nullptr);

using BlockPrecondFn = std::function<BlockVector(const BlockVector&)>;

/// Right-preconditioned flexible GMRES on the 3-field system. When
/// div_op is given, the max-norm divergence of the B block of every
/// Krylov iterate is recorded in SolveStats::div_b_history.
BlockVector fgmres(const SystemOperator& op, const BlockPrecondFn& precond,
                   const BlockVector& b, const BlockVector& x0,
                   const SolverConfig& cfg, SolveStats& stats,
                   const SparseMatrix* div_op = nullptr);

}  // namespace maxwell

#endif  // MAXWELL_KRYLOV_HPP
