#ifndef MAXWELL_BENCH_HPP
#define MAXWELL_BENCH_HPP

#include <string>
#include <vector>

#include "maxwell/mesh.hpp"
#include "maxwell/precond.hpp"

namespace maxwell {

/// Material scenario of one experiment cell. Jump scenarios place the
/// jump value on a shell of cells around the box center (see
/// CoefficientField::box_band_jump); the other coefficient stays 1.
struct Scenario {
  enum class Kind { Constant, EpsJump, MuJump };
  Kind kind = Kind::Constant;
  double jump = 1.0;

  std::string name() const;
  static Scenario parse(const std::string& text);
  bool operator==(const Scenario&) const = default;
};

struct ExperimentPlan {
  DomainKind mesh_kind = DomainKind::Box;
  std::vector<int> ns;
  std::vector<double> taus;
  std::vector<PrecondKind> kinds;
  std::vector<Scenario> scenarios;
  int steps = 20;
  int report_step = 2;  // 1-based step whose iteration count is reported
  double gamma = 0.05;

  void validate() const;  // throws std::invalid_argument
};

struct ResultRow {
  int n = 0;
  double tau = 0.0;
  PrecondKind kind = PrecondKind::W_D;
  Scenario scenario;
  int iters = -1;  // -1 marks a failed cell
  double time_ms = 0.0;      // wall time over all steps
  double div_b_max = 0.0;    // max over all recorded iterates
  double energy_drift = 0.0;  // final minus initial energy
  std::string note;          // failure diagnostics, empty on success

  bool ok() const { return iters >= 0; }
};

struct ResultTable {
  std::vector<ResultRow> rows;
  bool all_ok() const;
};

/// Max threads the solver kernels may use; reads SOLVER_THREADS (>= 1),
/// defaulting to 1. The kernels are sequential, so this is a cap, not a
/// promise of speedup.
int solver_threads();

ResultTable run_plan(const ExperimentPlan& plan);

// Column order: mesh, tau, kind, scenario, iters, time_ms, divB_max,
// energy_drift; rows stably sorted by that key.
void emit_csv(const ResultTable& table, const std::string& path);
void emit_markdown(const ResultTable& table, const std::string& path);
ResultTable read_csv(const std::string& path);

}  // namespace maxwell

#endif  // MAXWELL_BENCH_HPP
