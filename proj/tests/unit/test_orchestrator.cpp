#include <cmath>

#include "annuflow/orchestrator.hpp"
#include "doctest.h"

using namespace annuflow;

namespace {

StudyConfig paper_study(ModelKind kind, int n_nodes,
                        std::vector<double> cycles) {
  StudyConfig config;
  config.model = builtin_model(kind);
  NondimParams p;
  p.re = 10.0;
  p.pe = 1000.0;
  p.p_f = 1.0;
  p.p_g = 5.0;
  p.p_beta = config.model.beta;
  p.p_gamma = 72.0 * config.model.gamma;
  config.nondim = p;
  config.n_nodes = n_nodes;
  config.cycles = std::move(cycles);
  return config;
}

}  // namespace

TEST_CASE("non-dimensional groups from physical inputs") {
  PhysicalInputs in;
  in.r_i = 1.0;
  in.r_o = 1.2;
  in.omega_bar = 1.0;
  in.f_theta = 1.0;
  in.f_z = 1.0;
  in.a_grad = 0.0;
  in.b_grad = 0.0;
  in.rho_f = 2500.0;
  in.mu0_bar = 10.0;
  in.d_c = 4e-5;

  const ConstitutiveModel model = builtin_model(ModelKind::Model1);
  const NondimParams p = derive_nondim(in, model);
  CHECK(p.p_g == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(p.p_gamma == doctest::Approx(125.28).epsilon(1e-12));
  CHECK(p.p_beta == 1.0);
  CHECK(p.re == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(p.pe == doctest::Approx(1000.0).epsilon(1e-12));
  CHECK(p.p_f == 1.0);
  CHECK(p.p_a == 0.0);
  CHECK(p.p_b == 0.0);

  in.a_grad = 3000.0;
  const NondimParams forced = derive_nondim(in, model);
  CHECK(forced.p_a == doctest::Approx(1.0).epsilon(1e-12));

  PhysicalInputs degenerate = in;
  degenerate.r_o = degenerate.r_i;
  CHECK_THROWS_AS(derive_nondim(degenerate, model), std::invalid_argument);
  PhysicalInputs no_diff = in;
  no_diff.d_c = 0.0;
  CHECK_THROWS_AS(derive_nondim(no_diff, model), std::invalid_argument);
}

TEST_CASE("study validation") {
  StudyConfig config = paper_study(ModelKind::Model1, 51, {1.0});
  CHECK_NOTHROW(validate(config));

  StudyConfig both = config;
  both.physical = PhysicalInputs{};
  CHECK_THROWS_AS(validate(both), std::invalid_argument);

  StudyConfig neither = config;
  neither.nondim.reset();
  CHECK_THROWS_AS(validate(neither), std::invalid_argument);

  StudyConfig no_cycles = config;
  no_cycles.cycles.clear();
  CHECK_THROWS_AS(validate(no_cycles), std::invalid_argument);

  StudyConfig bad_model = config;
  bad_model.model.gamma = -2.0;
  CHECK_THROWS_AS(validate(bad_model), std::invalid_argument);
}

TEST_CASE("cycle zero returns the exact initial data") {
  StudyConfig config = paper_study(ModelKind::Model1, 41, {0.0});
  const RunResult result = run(config);
  REQUIRE_FALSE(result.aborted);
  REQUIRE(result.snapshots.size() == 1);
  const Snapshot& snap = result.snapshots[0];
  CHECK(snap.t_hat == 0.0);
  CHECK(snap.cycle == 0.0);
  for (int j = 0; j < 41; ++j) {
    CHECK(snap.v[j] == 0.0);
    CHECK(snap.w[j] == 0.0);
    CHECK(snap.c[j] == 0.1);
    CHECK(snap.h[j] == 0.0);
    // mu0(0.1) * (p_beta)^n(0.1) with p_beta = 1: exp(2.13).
    CHECK(snap.mu[j] == doctest::Approx(8.4148668114401293).epsilon(1e-13));
  }
}

TEST_CASE("identical configurations give bit-identical snapshots") {
  StudyConfig config = paper_study(ModelKind::Model2a, 51, {0.25});
  const RunResult first = run(config);
  const RunResult second = run(config);
  REQUIRE_FALSE(first.aborted);
  REQUIRE(first.snapshots.size() == second.snapshots.size());
  for (std::size_t k = 0; k < first.snapshots.size(); ++k) {
    const Snapshot& a = first.snapshots[k];
    const Snapshot& b = second.snapshots[k];
    for (int j = 0; j < 51; ++j) {
      CHECK(a.v[j] == b.v[j]);
      CHECK(a.w[j] == b.w[j]);
      CHECK(a.c[j] == b.c[j]);
      CHECK(a.mu[j] == b.mu[j]);
      CHECK(a.h[j] == b.h[j]);
    }
  }
  CHECK(first.stats.accepted_steps == second.stats.accepted_steps);
  CHECK(first.stats.rhs_evals == second.stats.rhs_evals);
}

TEST_CASE("concentration history is model independent") {
  const std::vector<double> cycles = {1.5};
  StudyConfig newton = paper_study(ModelKind::Newtonian, 51, cycles);
  StudyConfig model1 = paper_study(ModelKind::Model1, 51, cycles);
  const RunResult a = run(newton);
  const RunResult b = run(model1);
  REQUIRE_FALSE(a.aborted);
  REQUIRE_FALSE(b.aborted);
  double dc = 0.0;
  for (int j = 0; j < 51; ++j) {
    dc = std::max(dc, std::abs(a.snapshots[0].c[j] - b.snapshots[0].c[j]));
  }
  CHECK(dc < 3e-5);
}

TEST_CASE("axial velocity is identically zero without a pressure gradient") {
  StudyConfig config = paper_study(ModelKind::Newtonian, 51, {1.5});
  const RunResult result = run(config);
  REQUIRE_FALSE(result.aborted);
  for (int j = 0; j < 51; ++j) CHECK(result.snapshots[0].w[j] == 0.0);
}

TEST_CASE("feedback switch regulates the layer mean") {
  // Fast diffusion so the optimum is reached within a few cycles; once the
  // wall seals, the layer mean hovers at the optimum instead of climbing
  // towards the secreted value.
  StudyConfig config = paper_study(ModelKind::Newtonian, 51, {3.0});
  config.nondim->pe = 50.0;
  config.bc.kind = BcKind::FeedbackSwitch;
  config.bc.c_tilde = 0.3;
  config.bc.c_bar = 0.25;
  config.bc.r_bar_hat = 0.75;
  const RunResult result = run(config);
  REQUIRE_FALSE(result.aborted);
  const Snapshot& snap = result.snapshots.back();
  const double mean = mean_concentration(snap.c, result.grid, 0.75);
  CHECK(mean == doctest::Approx(0.25).epsilon(0.08));
  CHECK(mean < 0.28);  // a permanently secreting wall would exceed this
  for (int j = 0; j < 51; ++j) {
    CHECK(snap.c[j] >= 0.1 - 1e-9);
    CHECK(snap.c[j] <= 0.3 + 1e-9);
  }
}
