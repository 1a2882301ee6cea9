#ifndef MAXWELL_TIMESTEPPER_HPP
#define MAXWELL_TIMESTEPPER_HPP

#include <functional>
#include <optional>
#include <string>

#include "maxwell/complex.hpp"
#include "maxwell/krylov.hpp"
#include "maxwell/precond.hpp"
#include "maxwell/system.hpp"

namespace maxwell {

/// Decay rate of the reference exponentially-decaying solution,
/// r = (1 - sqrt(1 + 4/gamma)) / 2; r(0.05) = -4.
double decay_rate(double gamma);

using TimeVectorField = std::function<Vec3(const Vec3&, double)>;

struct ProblemSetup {
  double gamma = 0.05;
  double tau = 0.1;
  int steps = 20;
  VectorField B0;  // initial magnetic field (optional)
  VectorField E0;  // initial electric field (optional)
  TimeVectorField current;  // source j(x, t) with div j = 0; null means 0

  /// When set, B^0 is taken as the discrete curl K * interp_curl(curl_potential),
  /// which is solenoidal to integer exactness.
  VectorField curl_potential;
};

/// Reference decaying fields centered on the box midpoint; meaningful on
/// cavity domains that exclude the center. For qualitative decay runs.
VectorField reference_decay_E(double gamma);
VectorField reference_decay_B(double gamma);

struct TimeState {
  int step = 0;
  BlockVector x;       // current (B, E, p)
  BlockVector x_prev;  // previous step
  bool solenoidal_warning = false;
};

struct StepResult {
  SolveStats stats;
  bool accepted = true;
  double energy = 0.0;
  double div_b_max = 0.0;
  std::string diagnostics;
};

/// One row of the per-step CSV log.
struct StepLogRow {
  int step = 0;
  double time = 0.0;
  int iterations = 0;
  double relres = 0.0;
  double energy = 0.0;
  double div_b = 0.0;
};

/// Columns: step, time, iterations, relres, energy, divB_inf.
void write_step_log(const std::string& path,
                    const std::vector<StepLogRow>& rows);

class TimeStepper {
 public:
  TimeStepper(const TetMesh& mesh, const DofMaps& dofs,
              const IncidenceMatrices& inc, const AssembledForms& forms,
              ProblemSetup setup);

  /// B^0 / E^0 interpolation; E^0 has its discrete-gradient component
  /// removed (G^T Me G q = G^T Me E^0, E^0 <- E^0 - G q); p^0 = 0.
  TimeState initialize() const;

  BlockVector assemble_rhs(const TimeState& state) const;

  /// One Crank-Nicolson step. Non-convergence rejects the step and
  /// leaves the state untouched.
  StepResult step(TimeState& state, const Preconditioner& precond,
                  const SolverConfig& cfg) const;

  /// mu^-1-, eps-, and L2-weighted energy of the current state.
  double energy(const TimeState& state) const;
  double div_b_inf(const BlockVector& x) const;

  const SystemOperator& system() const { return op_; }

 private:
  const TetMesh* mesh_;
  const DofMaps* dofs_;
  const IncidenceMatrices* inc_;
  const AssembledForms* forms_;
  ProblemSetup setup_;
  SystemOperator op_;
};

}  // namespace maxwell

#endif  // MAXWELL_TIMESTEPPER_HPP
