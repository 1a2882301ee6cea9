#include "maxwell/precond.hpp"

#include <cmath>
#include <utility>

namespace maxwell {

SchurComplements build_schur(const AssembledForms& forms,
                             const IncidenceMatrices& inc, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("time step must be positive");
  SchurComplements s;
  SparseMatrix MbK = spgemm(forms.Mb, inc.Kd);
  SparseMatrix KtMbK = spgemm(transpose(inc.Kd), MbK);
  s.S_E = add_scaled(add_scaled(KtMbK, tau / 2.0, forms.Me, 2.0 / tau), 1.0,
                     forms.Z, 1.0);
  SparseMatrix MeG = spgemm(forms.Me, inc.Gd);
  SparseMatrix GtMeG = spgemm(transpose(inc.Gd), MeG);
  s.S_p = add_scaled(GtMeG, tau / 2.0, forms.Mp, 2.0 / tau);
  return s;
}

const char* precond_name(PrecondKind kind) {
  switch (kind) {
    case PrecondKind::W_D: return "WD";
    case PrecondKind::W_L: return "WL";
    case PrecondKind::W_U: return "WU";
    case PrecondKind::X_LD: return "XLD";
    case PrecondKind::X_DU: return "XDU";
    case PrecondKind::X_LDU: return "XLDU";
  }
  return "?";
}

PrecondKind precond_from_name(const std::string& name) {
  if (name == "WD") return PrecondKind::W_D;
  if (name == "WL") return PrecondKind::W_L;
  if (name == "WU") return PrecondKind::W_U;
  if (name == "XLD") return PrecondKind::X_LD;
  if (name == "XDU") return PrecondKind::X_DU;
  if (name == "XLDU") return PrecondKind::X_LDU;
  throw std::invalid_argument("unknown preconditioner kind: " + name);
}

Preconditioner::Preconditioner(PrecondKind kind, const SystemOperator& op,
                               SchurComplements schur, PrecondConfig cfg)
    : kind_(kind),
      op_(&op),
      schur_(std::move(schur)),
      cfg_(cfg),
      mb_smoother_(op.Mb(), cfg.smoother),
      se_smoother_(schur_.S_E, cfg.smoother),
      sp_smoother_(schur_.S_p, cfg.smoother) {}

std::vector<double> Preconditioner::apply_QB(const std::vector<double>& v) const {
  // ((2/tau) Mb)^-1, solved to qb_tol so D (Q_B Mb K x) stays at the
  // roundoff level of D K x = 0.
  try {
    std::vector<double> x = pcg(op_->Mb(), mb_smoother_, v, cfg_.qb_tol,
                                cfg_.qb_maxit);
    scale(op_->tau() / 2.0, x);
    return x;
  } catch (const SolverError& e) {
    throw SolverError(std::string("B block: ") + e.what());
  }
}

std::vector<double> Preconditioner::apply_QE(const std::vector<double>& v) const {
  if (v.empty()) return {};
  try {
    return pcg(schur_.S_E, se_smoother_, v, cfg_.inner_tol, cfg_.inner_maxit);
  } catch (const SolverError& e) {
    throw SolverError(std::string("E block: ") + e.what());
  }
}

std::vector<double> Preconditioner::apply_Qp(const std::vector<double>& v) const {
  if (v.empty()) return {};
  try {
    return pcg(schur_.S_p, sp_smoother_, v, cfg_.inner_tol, cfg_.inner_maxit);
  } catch (const SolverError& e) {
    throw SolverError(std::string("p block: ") + e.what());
  }
}

BlockVector Preconditioner::apply_diag(const BlockVector& v) const {
  BlockVector y;
  y.B = apply_QB(v.B);
  y.E = apply_QE(v.E);
  y.p = apply_Qp(v.p);
  return y;
}

BlockVector Preconditioner::apply(const BlockVector& v) const {
  const SystemOperator& op = *op_;
  const double half_tau = op.tau() / 2.0;
  BlockVector y;
  switch (kind_) {
    case PrecondKind::W_D:
      return apply_diag(v);

    case PrecondKind::W_L: {
      // Forward substitution with off-diagonal blocks -K^T Mb, -G^T Me.
      y.B = apply_QB(v.B);
      std::vector<double> rhs_e = v.E;
      op.MbK().apply_transpose_add(y.B, 1.0, rhs_e);
      y.E = apply_QE(rhs_e);
      std::vector<double> rhs_p = v.p;
      op.MeG().apply_transpose_add(y.E, 1.0, rhs_p);
      y.p = apply_Qp(rhs_p);
      return y;
    }

    case PrecondKind::W_U: {
      // Backward substitution with off-diagonal blocks Mb K, Me G.
      y.p = apply_Qp(v.p);
      std::vector<double> rhs_e = v.E;
      axpy(-1.0, op.MeG().apply(y.p), rhs_e);
      y.E = apply_QE(rhs_e);
      std::vector<double> rhs_b = v.B;
      axpy(-1.0, op.MbK().apply(y.E), rhs_b);
      y.B = apply_QB(rhs_b);
      return y;
    }

    case PrecondKind::X_LD: {
      BlockVector w = v;
      op.K().apply_transpose_add(w.B, half_tau, w.E);
      op.G().apply_transpose_add(w.E, half_tau, w.p);
      return apply_diag(w);
    }

    case PrecondKind::X_DU: {
      BlockVector w = apply_diag(v);
      axpy(-half_tau, op.G().apply(w.p), w.E);
      axpy(-half_tau, op.K().apply(w.E), w.B);
      return w;
    }

    case PrecondKind::X_LDU: {
      BlockVector w = v;
      op.K().apply_transpose_add(w.B, half_tau, w.E);
      op.G().apply_transpose_add(w.E, half_tau, w.p);
      w = apply_diag(w);
      axpy(-half_tau, op.G().apply(w.p), w.E);
      axpy(-half_tau, op.K().apply(w.E), w.B);
      return w;
    }
  }
  throw std::logic_error("unreachable preconditioner kind");
}

BlockPrecondFn Preconditioner::as_fn() const {
  return [this](const BlockVector& v) { return apply(v); };
}

double max_abs_entry(const SparseMatrix& a) {
  double m = 0.0;
  for (double v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

double verify_ldu(const AssembledForms& forms, const IncidenceMatrices& inc,
                  double tau) {
  const double ht = tau / 2.0;
  SparseMatrix A11 = add_scaled(forms.Mb, 2.0 / tau,
                                SparseMatrix(forms.Mb.rows(), forms.Mb.cols()),
                                0.0);
  SchurComplements s = build_schur(forms, inc, tau);

  SparseMatrix Kt = transpose(inc.Kd);
  SparseMatrix Gt = transpose(inc.Gd);

  // Blocks of L D U via explicit products.
  SparseMatrix l21 = spgemm(Kt, A11);  // times -tau/2 below
  SparseMatrix l32 = spgemm(Gt, s.S_E);

  SparseMatrix ldu12 = spgemm(A11, inc.Kd);  // times tau/2
  SparseMatrix ldu21 = l21;                  // times -tau/2
  SparseMatrix ldu22 =
      add_scaled(spgemm(l21, inc.Kd), -ht * ht, s.S_E, 1.0);
  SparseMatrix ldu23 = spgemm(s.S_E, inc.Gd);  // times tau/2
  SparseMatrix ldu32 = l32;                    // times -tau/2
  SparseMatrix ldu33 =
      add_scaled(spgemm(l32, inc.Gd), -ht * ht, s.S_p, 1.0);

  // Corresponding blocks of A.
  SparseMatrix a12 = spgemm(forms.Mb, inc.Kd);
  SparseMatrix a21 = spgemm(Kt, forms.Mb);
  SparseMatrix a22 = add_scaled(forms.Me, 2.0 / tau, forms.Z, 1.0);
  SparseMatrix a23 = spgemm(forms.Me, inc.Gd);
  SparseMatrix a32 = spgemm(Gt, forms.Me);

  double err = 0.0;
  auto track = [&err](const SparseMatrix& diff) {
    err = std::max(err, max_abs_entry(diff));
  };
  track(add_scaled(ldu12, ht, a12, -1.0));
  track(add_scaled(ldu21, -ht, a21, 1.0));
  track(add_scaled(ldu22, 1.0, a22, -1.0));
  track(add_scaled(ldu23, ht, a23, -1.0));
  track(add_scaled(ldu32, -ht, a32, 1.0));
  track(add_scaled(ldu33, 1.0, forms.Mp, -2.0 / tau));
  return err;
}

}  // namespace maxwell
