#include "maxwell/krylov.hpp"

#include <chrono>
#include <cmath>

namespace maxwell {

SmootherOp::SmootherOp(const SparseMatrix& a, Smoother kind)
    : a_(&a), kind_(kind) {
  inv_diag_.resize(a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    double d = a.coeff(r, r);
    if (!(d > 0.0))
      throw SolverError("smoother: nonpositive diagonal at row " +
                        std::to_string(r));
    inv_diag_[r] = 1.0 / d;
  }
}

std::vector<double> SmootherOp::apply(const std::vector<double>& r) const {
  const SparseMatrix& a = *a_;
  const int n = a.rows();
  std::vector<double> x(n, 0.0);
  if (kind_ == Smoother::Jacobi) {
    for (int i = 0; i < n; ++i) x[i] = inv_diag_[i] * r[i];
    return x;
  }
  // Symmetric Gauss-Seidel: forward sweep, then backward sweep.
  for (int i = 0; i < n; ++i) {
    double s = r[i];
    for (int k = a.row_ptr()[i]; k < a.row_ptr()[i + 1]; ++k) {
      int c = a.col_idx()[k];
      if (c < i) s -= a.values()[k] * x[c];
    }
    x[i] = inv_diag_[i] * s;
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = r[i];
    for (int k = a.row_ptr()[i]; k < a.row_ptr()[i + 1]; ++k) {
      int c = a.col_idx()[k];
      if (c != i) s -= a.values()[k] * x[c];
    }
    x[i] = inv_diag_[i] * s;
  }
  return x;
}

std::vector<double> pcg(const SparseMatrix& a, const SmootherOp& m,
                        const std::vector<double>& b, double tol, int maxit,
                        int* iters_out) {
  const int n = a.rows();
  std::vector<double> x(n, 0.0);
  std::vector<double> r = b;
  const double bnorm = norm2(b);
  if (iters_out) *iters_out = 0;
  if (bnorm == 0.0) return x;

  std::vector<double> z = m.apply(r);
  std::vector<double> p = z;
  double rz = dot(r, z);
  for (int it = 1; it <= maxit; ++it) {
    std::vector<double> ap = a.apply(p);
    double pap = dot(p, ap);
    if (pap <= 0.0)
      throw SolverError("pcg: negative curvature, matrix is not SPD");
    double alpha = rz / pap;
    axpy(alpha, p, x);
    axpy(-alpha, ap, r);
    if (iters_out) *iters_out = it;
    if (norm2(r) <= tol * bnorm) return x;
    z = m.apply(r);
    double rz_new = dot(r, z);
    double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  return x;
}

std::vector<double> gmres_inner(const SparseMatrix& a, const SmootherOp& m,
                                const std::vector<double>& b, double tol,
                                int maxit, int* iters_out) {
  const int n = a.rows();
  const int restart = 30;
  std::vector<double> x(n, 0.0);
  const double bnorm = norm2(b);
  if (iters_out) *iters_out = 0;
  if (bnorm == 0.0) return x;

  int total = 0;
  while (total < maxit) {
    std::vector<double> r = b;
    axpy(-1.0, a.apply(x), r);
    double beta = norm2(r);
    if (beta <= tol * bnorm) break;

    std::vector<std::vector<double>> v{r};
    scale(1.0 / beta, v[0]);
    std::vector<std::vector<double>> z;
    std::vector<std::vector<double>> h;
    std::vector<double> cs, sn, g{beta};
    int j = 0;
    for (; j < restart && total < maxit; ++j, ++total) {
      z.push_back(m.apply(v[j]));
      std::vector<double> w = a.apply(z[j]);
      h.emplace_back(j + 2, 0.0);
      for (int i = 0; i <= j; ++i) {
        h[j][i] = dot(w, v[i]);
        axpy(-h[j][i], v[i], w);
      }
      h[j][j + 1] = norm2(w);
      for (int i = 0; i < j; ++i) {
        double t = cs[i] * h[j][i] + sn[i] * h[j][i + 1];
        h[j][i + 1] = -sn[i] * h[j][i] + cs[i] * h[j][i + 1];
        h[j][i] = t;
      }
      double hsub = h[j][j + 1];
      double denom = std::hypot(h[j][j], hsub);
      if (denom == 0.0) {
        ++j;
        ++total;
        break;
      }
      cs.push_back(h[j][j] / denom);
      sn.push_back(hsub / denom);
      h[j][j] = denom;
      h[j][j + 1] = 0.0;
      g.push_back(-sn[j] * g[j]);
      g[j] *= cs[j];
      if (std::abs(g[j + 1]) <= tol * bnorm || hsub == 0.0) {
        ++j;
        ++total;
        break;
      }
      v.push_back(w);
      scale(1.0 / hsub, v.back());
    }
    // back substitution for the j columns used
    std::vector<double> y(j, 0.0);
    for (int i = j - 1; i >= 0; --i) {
      double s = g[i];
      for (int k2 = i + 1; k2 < j; ++k2) s -= h[k2][i] * y[k2];
      y[i] = s / h[i][i];
    }
    for (int i = 0; i < j; ++i) axpy(y[i], z[i], x);
    if (iters_out) *iters_out = total;
    std::vector<double> rr = b;
    axpy(-1.0, a.apply(x), rr);
    if (norm2(rr) <= tol * bnorm) break;
  }
  return x;
}

BlockVector fgmres(const SystemOperator& op, const BlockPrecondFn& precond,
                   const BlockVector& b, const BlockVector& x0,
                   const SolverConfig& cfg, SolveStats& stats,
                   const SparseMatrix* div_op) {
  const auto t_start = std::chrono::steady_clock::now();
  stats = SolveStats{};

  auto record_div = [&](const BlockVector& x) {
    if (div_op) stats.div_b_history.push_back(norm_inf(div_op->apply(x.B)));
  };

  BlockVector x = x0;
  BlockVector r = b;
  axpy(-1.0, op.apply(x), r);
  const double res0 = norm2(r);
  stats.residual_history.push_back(1.0);
  record_div(x);
  if (res0 == 0.0) {
    stats.final_relres = 0.0;
    stats.status = SolveStatus::Converged;
    return x;
  }

  int total = 0;
  bool converged = false;
  bool stagnated = false;
  while (total < cfg.outer_maxit && !converged && !stagnated) {
    BlockVector r_cycle = b;
    axpy(-1.0, op.apply(x), r_cycle);
    double beta = norm2(r_cycle);
    if (beta <= cfg.outer_tol * res0) break;

    std::vector<BlockVector> v{r_cycle};
    scale(1.0 / beta, v[0]);
    std::vector<BlockVector> z;       // preconditioned directions
    std::vector<std::vector<double>> h;
    std::vector<double> cs, sn, g{beta};

    int j = 0;
    for (; j < cfg.restart && total < cfg.outer_maxit && !converged; ++j) {
      z.push_back(precond(v[j]));
      BlockVector w = op.apply(z[j]);
      h.emplace_back(j + 2, 0.0);
      for (int i = 0; i <= j; ++i) {
        h[j][i] = dot(w, v[i]);
        axpy(-h[j][i], v[i], w);
      }
      h[j][j + 1] = norm2(w);

      for (int i = 0; i < j; ++i) {
        double t = cs[i] * h[j][i] + sn[i] * h[j][i + 1];
        h[j][i + 1] = -sn[i] * h[j][i] + cs[i] * h[j][i + 1];
        h[j][i] = t;
      }
      double denom = std::hypot(h[j][j], h[j][j + 1]);
      bool breakdown = denom == 0.0 || h[j][j + 1] == 0.0;
      if (denom == 0.0) {
        z.pop_back();
        h.pop_back();
        stagnated = true;
        break;
      }
      cs.push_back(h[j][j] / denom);
      sn.push_back(h[j][j + 1] / denom);
      double hsub = h[j][j + 1];
      h[j][j] = denom;
      h[j][j + 1] = 0.0;
      g.push_back(-sn[j] * g[j]);
      g[j] *= cs[j];

      ++total;
      double relres = std::abs(g[j + 1]) / res0;
      stats.residual_history.push_back(relres);

      // Current iterate, for divergence instrumentation.
      if (div_op) {
        std::vector<double> y(j + 1, 0.0);
        for (int i = j; i >= 0; --i) {
          double s = g[i];
          for (int k2 = i + 1; k2 <= j; ++k2) s -= h[k2][i] * y[k2];
          y[i] = s / h[i][i];
        }
        BlockVector xi = x;
        for (int i = 0; i <= j; ++i) axpy(y[i], z[i], xi);
        record_div(xi);
      }

      if (relres <= cfg.outer_tol) {
        converged = true;
      } else if (breakdown) {
        // Happy breakdown without meeting the tolerance: the Krylov space
        // is exhausted; report it instead of looping silently.
        stagnated = true;
      } else {
        v.push_back(w);
        scale(1.0 / hsub, v.back());
      }
    }

    // Update x with the columns accumulated in this cycle.
    int used = static_cast<int>(z.size());
    if (used > 0) {
      std::vector<double> y(used, 0.0);
      for (int i = used - 1; i >= 0; --i) {
        double s = g[i];
        for (int k2 = i + 1; k2 < used; ++k2) s -= h[k2][i] * y[k2];
        y[i] = s / h[i][i];
      }
      for (int i = 0; i < used; ++i) axpy(y[i], z[i], x);
    }
  }

  BlockVector r_final = b;
  axpy(-1.0, op.apply(x), r_final);
  stats.final_relres = norm2(r_final) / res0;
  stats.iterations = total;
  if (converged || stats.final_relres <= cfg.outer_tol)
    stats.status = SolveStatus::Converged;
  else if (stagnated)
    stats.status = SolveStatus::Stagnated;
  else
    stats.status = SolveStatus::MaxIterations;

  stats.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - t_start)
          .count();
  return x;
}

}  // namespace maxwell
