#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "maxwell/bench.hpp"

using namespace maxwell;

namespace {

ExperimentPlan tiny_plan() {
  ExperimentPlan plan;
  plan.ns = {1};
  plan.taus = {0.2};
  plan.kinds = {PrecondKind::X_LDU};
  plan.scenarios = {Scenario{}};
  plan.steps = 4;
  plan.report_step = 2;
  return plan;
}

int count_lines(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  int n = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++n;
  return n;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("scenario names roundtrip through parse") {
  Scenario c;
  CHECK(c.name() == "const");
  CHECK(Scenario::parse("const") == c);

  Scenario e{Scenario::Kind::EpsJump, 1e-6};
  CHECK(Scenario::parse(e.name()) == e);
  Scenario m{Scenario::Kind::MuJump, 100.0};
  CHECK(Scenario::parse(m.name()) == m);

  CHECK_THROWS_AS((void)Scenario::parse("shear-jump:2"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)Scenario::parse("eps-jump:zero"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)Scenario::parse("eps-jump:-1"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)Scenario::parse("eps-jump:1x"),
                  std::invalid_argument);
}

TEST_CASE("plan validation rejects empty or bad axes") {
  ExperimentPlan p = tiny_plan();
  p.ns.clear();
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = tiny_plan();
  p.ns = {0};
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = tiny_plan();
  p.taus = {-0.1};
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = tiny_plan();
  p.scenarios = {Scenario{Scenario::Kind::EpsJump, 0.0}};
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = tiny_plan();
  p.steps = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = tiny_plan();
  p.report_step = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  tiny_plan().validate();  // the baseline itself is fine
}

TEST_CASE("single-cell run produces one sane row") {
  ResultTable t = run_plan(tiny_plan());
  REQUIRE(t.rows.size() == 1);
  const ResultRow& r = t.rows[0];
  CHECK(t.all_ok());
  CHECK(r.n == 1);
  CHECK(r.tau == 0.2);
  CHECK(r.kind == PrecondKind::X_LDU);
  CHECK(r.scenario == Scenario{});
  CHECK(r.iters >= 1);
  CHECK(r.time_ms > 0.0);
  CHECK(r.div_b_max <= 1e-9);
  CHECK(r.energy_drift <= 0.0);
  CHECK(r.note.empty());
}

TEST_CASE("csv roundtrip preserves the table") {
  ExperimentPlan plan = tiny_plan();
  plan.ns = {1, 2};
  plan.kinds = {PrecondKind::W_D, PrecondKind::X_LDU};
  ResultTable t = run_plan(plan);
  REQUIRE(t.rows.size() == 4);

  const std::string path = "/tmp/test_bench_roundtrip.csv";
  emit_csv(t, path);
  ResultTable back = read_csv(path);
  REQUIRE(back.rows.size() == t.rows.size());
  for (size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(back.rows[i].n == t.rows[i].n);
    CHECK(back.rows[i].tau == doctest::Approx(t.rows[i].tau));
    CHECK(back.rows[i].kind == t.rows[i].kind);
    CHECK(back.rows[i].scenario == t.rows[i].scenario);
    CHECK(back.rows[i].iters == t.rows[i].iters);
    CHECK(back.rows[i].div_b_max ==
          doctest::Approx(t.rows[i].div_b_max).epsilon(1e-5));
  }
  std::remove(path.c_str());
}

TEST_CASE("rows come out sorted by mesh, tau (descending), kind") {
  ExperimentPlan plan = tiny_plan();
  plan.ns = {2, 1};
  plan.taus = {0.1, 0.2};
  plan.kinds = {PrecondKind::X_LDU, PrecondKind::W_D};
  ResultTable t = run_plan(plan);
  REQUIRE(t.rows.size() == 8);
  for (size_t i = 1; i < t.rows.size(); ++i) {
    const ResultRow& a = t.rows[i - 1];
    const ResultRow& b = t.rows[i];
    bool ordered = a.n < b.n ||
                   (a.n == b.n && a.tau > b.tau) ||
                   (a.n == b.n && a.tau == b.tau &&
                    static_cast<int>(a.kind) < static_cast<int>(b.kind));
    CHECK(ordered);
  }
}

TEST_CASE("empty table emits a header-only csv") {
  const std::string path = "/tmp/test_bench_empty.csv";
  emit_csv(ResultTable{}, path);
  CHECK(count_lines(path) == 1);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "mesh,tau,kind,scenario,iters,time_ms,divB_max,energy_drift");
  CHECK(read_csv(path).rows.empty());
  std::remove(path.c_str());
}

TEST_CASE("read_csv rejects malformed input") {
  const std::string path = "/tmp/test_bench_bad.csv";
  {
    std::ofstream out(path);
    out << "wrong,header\n";
  }
  CHECK_THROWS(read_csv(path));
  {
    std::ofstream out(path);
    out << "mesh,tau,kind,scenario,iters,time_ms,divB_max,energy_drift\n"
        << "2,0.1,WD,const,5\n";
  }
  CHECK_THROWS(read_csv(path));
  std::remove(path.c_str());
  CHECK_THROWS(read_csv("/tmp/does_not_exist_bench.csv"));
}

TEST_CASE("markdown emits one table row per result row") {
  ExperimentPlan plan = tiny_plan();
  plan.kinds = {PrecondKind::W_D, PrecondKind::W_L};
  ResultTable t = run_plan(plan);
  const std::string path = "/tmp/test_bench_table.md";
  emit_markdown(t, path);
  std::ifstream in(path);
  std::string line;
  int pipe_rows = 0;
  while (std::getline(in, line))
    if (!line.empty() && line[0] == '|') ++pipe_rows;
  // header + separator + one row per result
  CHECK(pipe_rows == 2 + static_cast<int>(t.rows.size()));
  std::remove(path.c_str());
}

TEST_CASE("jump scenarios change the operator but stay solvable") {
  ExperimentPlan plan = tiny_plan();
  plan.ns = {2};
  plan.scenarios = {Scenario{},
                    Scenario{Scenario::Kind::EpsJump, 1e4},
                    Scenario{Scenario::Kind::MuJump, 1e-4}};
  ResultTable t = run_plan(plan);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.all_ok());
  for (const ResultRow& r : t.rows) {
    CHECK(r.iters >= 1);
    CHECK(r.iters <= 30);
  }
}

TEST_CASE("solver_threads reads the environment with a floor of one") {
  unsetenv("SOLVER_THREADS");
  CHECK(solver_threads() == 1);
  setenv("SOLVER_THREADS", "4", 1);
  CHECK(solver_threads() == 4);
  setenv("SOLVER_THREADS", "0", 1);
  CHECK(solver_threads() == 1);
  setenv("SOLVER_THREADS", "junk", 1);
  CHECK(solver_threads() == 1);
  unsetenv("SOLVER_THREADS");
}

}  // TEST_SUITE
