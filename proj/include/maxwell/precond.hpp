#ifndef MAXWELL_PRECOND_HPP
#define MAXWELL_PRECOND_HPP

#include <string>

#include "maxwell/krylov.hpp"
#include "maxwell/system.hpp"

namespace maxwell {

/// Sparse Schur complements of the exact block factorization,
///   S_E = (tau/2) K^T Mb K + (2/tau) Me + Z,
///   S_p = (tau/2) G^T Me G + (2/tau) Mp.
struct SchurComplements {
  SparseMatrix S_E;
  SparseMatrix S_p;
};

SchurComplements build_schur(const AssembledForms& forms,
                             const IncidenceMatrices& inc, double tau);

enum class PrecondKind { W_D, W_L, W_U, X_LD, X_DU, X_LDU };

const char* precond_name(PrecondKind kind);
PrecondKind precond_from_name(const std::string& name);

struct PrecondConfig {
  double inner_tol = 1e-2;  // Q_E, Q_p solve tolerance
  int inner_maxit = 2000;
  Smoother smoother = Smoother::SymmetricGaussSeidel;
  double qb_tol = 1e-10;  // exact scaled mass solve for Q_B
  int qb_maxit = 10000;
};

/// The six block preconditioners. Q_B is the exact ((2/tau) Mb)^-1
/// (CG to qb_tol); Q_E and Q_p are CG solves on the Schur complements
/// to inner_tol. Triangular kinds substitute through the off-diagonal
/// blocks; the X family applies the closed-form inverses of the
/// unitriangular LDU factors.
class Preconditioner {
 public:
  Preconditioner(PrecondKind kind, const SystemOperator& op,
                 SchurComplements schur, PrecondConfig cfg = {});

  BlockVector apply(const BlockVector& v) const;
  BlockPrecondFn as_fn() const;

  PrecondKind kind() const { return kind_; }
  const SchurComplements& schur() const { return schur_; }

  // Diagonal-block solves, exposed for the oracle tests.
  std::vector<double> apply_QB(const std::vector<double>& v) const;
  std::vector<double> apply_QE(const std::vector<double>& v) const;
  std::vector<double> apply_Qp(const std::vector<double>& v) const;

 private:
  BlockVector apply_diag(const BlockVector& v) const;

  PrecondKind kind_;
  const SystemOperator* op_;
  SchurComplements schur_;
  PrecondConfig cfg_;
  SmootherOp mb_smoother_;
  SmootherOp se_smoother_;
  SmootherOp sp_smoother_;
};

/// Max elementwise error of A - L D U, computed by explicit sparse
/// block products (no cancellation shortcuts).
double verify_ldu(const AssembledForms& forms, const IncidenceMatrices& inc,
                  double tau);

double max_abs_entry(const SparseMatrix& a);

}  // namespace maxwell

#endif  // MAXWELL_PRECOND_HPP
