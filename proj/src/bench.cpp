#include "maxwell/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "maxwell/assembly.hpp"
#include "maxwell/timestepper.hpp"

namespace maxwell {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// Shell of cells carrying the coefficient jump, chosen to intersect every
// mesh in the desk-scale ladder.
constexpr double kJumpBandLo = 0.25;
constexpr double kJumpBandHi = 0.375;

CoefficientField scenario_coefficients(const TetMesh& mesh,
                                       const Scenario& s) {
  switch (s.kind) {
    case Scenario::Kind::Constant:
      return CoefficientField::constant(mesh, 1.0, 1.0);
    case Scenario::Kind::EpsJump:
      return CoefficientField::box_band_jump(mesh, kJumpBandLo, kJumpBandHi,
                                             s.jump, 1.0);
    case Scenario::Kind::MuJump:
      return CoefficientField::box_band_jump(mesh, kJumpBandLo, kJumpBandHi,
                                             1.0, s.jump);
  }
  throw std::logic_error("unreachable scenario kind");
}

// Default fields driving every benchmark cell: a solenoidal B^0 via the
// curl potential and a smooth E^0; no current source.
ProblemSetup default_setup(double gamma, double tau, int steps) {
  ProblemSetup setup;
  setup.gamma = gamma;
  setup.tau = tau;
  setup.steps = steps;
  setup.curl_potential = [](const Vec3& x) -> Vec3 {
    return {x[1] * x[2] * (1.0 - x[1]) * (1.0 - x[2]),
            x[2] * x[0] * (1.0 - x[2]) * (1.0 - x[0]),
            x[0] * x[1] * (1.0 - x[0]) * (1.0 - x[1])};
  };
  setup.E0 = [](const Vec3& x) -> Vec3 {
    return {x[1] * (1.0 - x[1]) * x[2], x[0] * x[2] * (1.0 - x[2]),
            x[0] * x[1] * (1.0 - x[0])};
  };
  return setup;
}

}  // namespace

std::string Scenario::name() const {
  switch (kind) {
    case Kind::Constant: return "const";
    case Kind::EpsJump: return "eps-jump:" + format_double(jump);
    case Kind::MuJump: return "mu-jump:" + format_double(jump);
  }
  return "?";
}

Scenario Scenario::parse(const std::string& text) {
  Scenario s;
  if (text == "const") return s;
  auto with_prefix = [&](const std::string& prefix, Kind kind) {
    if (text.rfind(prefix, 0) != 0) return false;
    s.kind = kind;
    size_t pos = 0;
    std::string num = text.substr(prefix.size());
    s.jump = std::stod(num, &pos);
    if (pos != num.size() || !(s.jump > 0.0))
      throw std::invalid_argument("bad jump value in scenario: " + text);
    return true;
  };
  if (with_prefix("eps-jump:", Kind::EpsJump)) return s;
  if (with_prefix("mu-jump:", Kind::MuJump)) return s;
  throw std::invalid_argument("unknown scenario: " + text);
}

void ExperimentPlan::validate() const {
  if (ns.empty() || taus.empty() || kinds.empty() || scenarios.empty())
    throw std::invalid_argument("experiment plan has an empty axis");
  for (int n : ns)
    if (n < 1) throw std::invalid_argument("mesh size must be >= 1");
  for (double t : taus)
    if (!(t > 0.0)) throw std::invalid_argument("time step must be positive");
  for (const Scenario& s : scenarios)
    if (!(s.jump > 0.0))
      throw std::invalid_argument("jump value must be positive");
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (report_step < 1)
    throw std::invalid_argument("report step must be >= 1");
}

bool ResultTable::all_ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ResultRow& r) { return r.ok(); });
}

int solver_threads() {
  const char* env = std::getenv("SOLVER_THREADS");
  if (!env || !*env) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

namespace {
void sort_rows(std::vector<ResultRow>& rows);
}

ResultTable run_plan(const ExperimentPlan& plan) {
  plan.validate();
  ResultTable table;
  for (int n : plan.ns) {
    DomainSpec spec;
    spec.kind = plan.mesh_kind;
    spec.n = n;
    TetMesh mesh = generate(spec);
    DofMaps dofs = build_dof_maps(mesh);
    IncidenceMatrices inc = build_incidence(mesh, dofs);
    for (const Scenario& scenario : plan.scenarios) {
      CoefficientField coeff = scenario_coefficients(mesh, scenario);
      AssembledForms forms = assemble_all(mesh, dofs, coeff, plan.gamma);
      for (double tau : plan.taus) {
        TimeStepper stepper(mesh, dofs, inc, forms,
                            default_setup(plan.gamma, tau, plan.steps));
        SchurComplements schur = build_schur(forms, inc, tau);
        for (PrecondKind kind : plan.kinds) {
          ResultRow row;
          row.n = n;
          row.tau = tau;
          row.kind = kind;
          row.scenario = scenario;
          try {
            Preconditioner precond(kind, stepper.system(), schur);
            SolverConfig cfg;
            TimeState state = stepper.initialize();
            const double energy0 = stepper.energy(state);
            double time_ms = 0.0, div_max = stepper.div_b_inf(state.x);
            int report_iters = 0;
            bool failed = false;
            for (int s = 1; s <= plan.steps; ++s) {
              StepResult result = stepper.step(state, precond, cfg);
              time_ms += result.stats.wall_time_ms;
              for (double d : result.stats.div_b_history)
                div_max = std::max(div_max, d);
              if (!result.accepted) {
                row.note = result.diagnostics;
                failed = true;
                break;
              }
              // Report the configured step's count; fall back to the last
              // step when the run is shorter than report_step.
              if (s == plan.report_step ||
                  (plan.report_step > plan.steps && s == plan.steps))
                report_iters = result.stats.iterations;
              row.energy_drift = result.energy - energy0;
            }
            row.time_ms = time_ms;
            row.div_b_max = div_max;
            if (!failed) row.iters = report_iters;
          } catch (const std::exception& e) {
            row.iters = -1;
            row.note = e.what();
          }
          table.rows.push_back(row);
        }
      }
    }
  }
  sort_rows(table.rows);
  return table;
}

namespace {

void sort_rows(std::vector<ResultRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& a, const ResultRow& b) {
                     return std::make_tuple(a.n, -a.tau, static_cast<int>(a.kind),
                                            a.scenario.name()) <
                            std::make_tuple(b.n, -b.tau, static_cast<int>(b.kind),
                                            b.scenario.name());
                   });
}

const char* kCsvHeader = "mesh,tau,kind,scenario,iters,time_ms,divB_max,energy_drift";

}  // namespace

void emit_csv(const ResultTable& table, const std::string& path) {
  std::vector<ResultRow> rows = table.rows;
  sort_rows(rows);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << kCsvHeader << "\n";
  for (const ResultRow& r : rows) {
    out << r.n << ',' << format_double(r.tau) << ',' << precond_name(r.kind)
        << ',' << r.scenario.name() << ',' << r.iters << ','
        << format_double(r.time_ms) << ',' << format_double(r.div_b_max)
        << ',' << format_double(r.energy_drift) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_markdown(const ResultTable& table, const std::string& path) {
  std::vector<ResultRow> rows = table.rows;
  sort_rows(rows);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "| mesh | tau | kind | scenario | iters | time_ms | divB_max | "
         "energy_drift |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const ResultRow& r : rows) {
    out << "| " << r.n << " | " << format_double(r.tau) << " | "
        << precond_name(r.kind) << " | " << r.scenario.name() << " | "
        << r.iters << " | " << format_double(r.time_ms) << " | "
        << format_double(r.div_b_max) << " | "
        << format_double(r.energy_drift) << " |\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

ResultTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::runtime_error("bad CSV header in " + path);
  ResultTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 8)
      throw std::runtime_error("bad CSV row in " + path + ": " + line);
    ResultRow r;
    r.n = std::stoi(fields[0]);
    r.tau = std::stod(fields[1]);
    r.kind = precond_from_name(fields[2]);
    r.scenario = Scenario::parse(fields[3]);
    r.iters = std::stoi(fields[4]);
    r.time_ms = std::stod(fields[5]);
    r.div_b_max = std::stod(fields[6]);
    r.energy_drift = std::stod(fields[7]);
    table.rows.push_back(r);
  }
  return table;
}

}  // namespace maxwell
