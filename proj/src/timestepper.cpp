#include "maxwell/timestepper.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "maxwell/whitney.hpp"

namespace maxwell {

double decay_rate(double gamma) {
  return (1.0 - std::sqrt(1.0 + 4.0 / gamma)) / 2.0;
}

namespace {

Vec3 centered(const Vec3& x) {
  return {x[0] - 0.5, x[1] - 0.5, x[2] - 0.5};
}

/// Edge-space load vector of a vector field: per free edge, the integral
/// of f against the Whitney edge function, 4-point tet rule.
std::vector<double> load_curl(const TetMesh& mesh, const DofMaps& dofs,
                              const VectorField& f) {
  static const TetRule4 rule;
  std::vector<double> load(dofs.e_dofs(), 0.0);
  for (int t = 0; t < mesh.num_tets(); ++t) {
    TetGeometry geo(mesh, t);
    for (int q = 0; q < 4; ++q) {
      Vec3 fx = f(geo.point(rule.point[q]));
      const double w = rule.weight[q] * geo.volume;
      for (int le = 0; le < 6; ++le) {
        int g = dofs.edge_free[mesh.tet_to_edges[t][le].index];
        if (g < 0) continue;
        load[g] += w * vdot(fx, geo.edge_basis(le, rule.point[q]));
      }
    }
  }
  return load;
}

}  // namespace

VectorField reference_decay_E(double gamma) {
  const double r = decay_rate(gamma);
  return [r](const Vec3& p) -> Vec3 {
    Vec3 x = centered(p);
    double n = std::sqrt(vdot(x, x));
    double amp = std::exp(r * n) / (n * n) * (r * r - r / n);
    return {0.0, amp * x[2], -amp * x[1]};
  };
}

VectorField reference_decay_B(double gamma) {
  const double r = decay_rate(gamma);
  return [r](const Vec3& p) -> Vec3 {
    Vec3 x = centered(p);
    double n = std::sqrt(vdot(x, x));
    double e = std::exp(r * n);
    double c1 = (r * r - 3.0 * r / n + 3.0 / (n * n)) / (n * n * n);
    // This radial term carries an extra 1/n relative to the angular one;
    // without it the field is not divergence-free.
    double c2 = (2.0 * r / n - 2.0 / (n * n)) / n;
    return {e * (c1 * (x[2] * x[2] + x[1] * x[1]) + c2),
            e * (-c1 * x[0] * x[1]), e * (-c1 * x[0] * x[2])};
  };
}

void write_step_log(const std::string& path,
                    const std::vector<StepLogRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "step,time,iterations,relres,energy,divB_inf\n";
  char buf[256];
  for (const StepLogRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%g,%d,%g,%.17g,%g\n", r.step, r.time,
                  r.iterations, r.relres, r.energy, r.div_b);
    out << buf;
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

TimeStepper::TimeStepper(const TetMesh& mesh, const DofMaps& dofs,
                         const IncidenceMatrices& inc,
                         const AssembledForms& forms, ProblemSetup setup)
    : mesh_(&mesh),
      dofs_(&dofs),
      inc_(&inc),
      forms_(&forms),
      setup_(std::move(setup)),
      op_(build_system(setup_.tau, forms, inc, false)) {}

TimeState TimeStepper::initialize() const {
  TimeState state;
  state.x = op_.zero_vector();

  if (setup_.curl_potential) {
    std::vector<double> pot =
        interp_curl(*mesh_, *dofs_, setup_.curl_potential);
    state.x.B = inc_->Kd.apply(pot);
  } else if (setup_.B0) {
    state.x.B = interp_div(*mesh_, *dofs_, setup_.B0);
  }

  if (setup_.E0) {
    state.x.E = interp_curl(*mesh_, *dofs_, setup_.E0);
    if (op_.p_size() > 0) {
      // Remove the discrete-gradient component of E^0.
      SparseMatrix GtMeG =
          spgemm(transpose(inc_->Gd), spgemm(forms_->Me, inc_->Gd));
      std::vector<double> rhs(op_.p_size(), 0.0);
      spgemm(forms_->Me, inc_->Gd)
          .apply_transpose_add(state.x.E, 1.0, rhs);
      SmootherOp smoother(GtMeG, Smoother::SymmetricGaussSeidel);
      std::vector<double> q = pcg(GtMeG, smoother, rhs, 1e-13, 20000);
      axpy(-1.0, inc_->Gd.apply(q), state.x.E);
    }
  }

  double div0 = div_b_inf(state.x);
  state.solenoidal_warning =
      div0 > 1e-9 * std::max(1.0, norm_inf(state.x.B));
  state.x_prev = state.x;
  return state;
}

BlockVector TimeStepper::assemble_rhs(const TimeState& state) const {
  const BlockVector& prev = state.x;
  const double two_over_tau = 2.0 / setup_.tau;
  BlockVector g = op_.zero_vector();

  g.B = op_.Mb().apply(prev.B);
  scale(two_over_tau, g.B);
  axpy(-1.0, op_.MbK().apply(prev.E), g.B);

  g.E = op_.Me().apply(prev.E);
  scale(two_over_tau, g.E);
  axpy(-1.0, op_.MeG().apply(prev.p), g.E);
  op_.MbK().apply_transpose_add(prev.B, 1.0, g.E);
  axpy(-1.0, op_.Z().apply(prev.E), g.E);
  if (setup_.current) {
    const double t_prev = state.step * setup_.tau;
    const double t_next = t_prev + setup_.tau;
    const TimeVectorField& j = setup_.current;
    std::vector<double> jload = load_curl(
        *mesh_, *dofs_, [&](const Vec3& x) -> Vec3 {
          Vec3 a = j(x, t_next), b = j(x, t_prev);
          return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
        });
    axpy(-1.0, jload, g.E);
  }

  g.p = op_.Mp().apply(prev.p);
  scale(two_over_tau, g.p);
  op_.MeG().apply_transpose_add(prev.E, 1.0, g.p);
  return g;
}

StepResult TimeStepper::step(TimeState& state, const Preconditioner& precond,
                             const SolverConfig& cfg) const {
  StepResult result;
  BlockVector rhs = assemble_rhs(state);
  BlockVector x = fgmres(op_, precond.as_fn(), rhs, state.x, cfg,
                         result.stats, &inc_->Dd);
  if (result.stats.status == SolveStatus::MaxIterations) {
    result.accepted = false;
    result.diagnostics =
        "step " + std::to_string(state.step + 1) +
        " rejected: FGMRES reached outer_maxit with relative residual " +
        std::to_string(result.stats.final_relres);
    result.energy = energy(state);
    result.div_b_max = div_b_inf(state.x);
    return result;
  }
  state.x_prev = state.x;
  state.x = std::move(x);
  ++state.step;
  result.energy = energy(state);
  result.div_b_max = div_b_inf(state.x);
  return result;
}

double TimeStepper::energy(const TimeState& state) const {
  const BlockVector& x = state.x;
  return dot(x.B, op_.Mb().apply(x.B)) + dot(x.E, op_.Me().apply(x.E)) +
         dot(x.p, op_.Mp().apply(x.p));
}

double TimeStepper::div_b_inf(const BlockVector& x) const {
  return norm_inf(inc_->Dd.apply(x.B));
}

}  // namespace maxwell
