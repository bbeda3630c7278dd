#include "annuflow/config.hpp"
#include "doctest.h"

using namespace annuflow;

namespace {

const char* kPaperConfig = R"(# reference study
[model]
model = model1

[nondim]
re = 10
pe = 1000
p_f = 1
p_g = 5
p_beta = 1
p_gamma = 125.28
p_a = 0
p_b = 0

[grid]
n_nodes = 201

[output]
cycles = 3.5, 12.5, 34.5
)";

}  // namespace

TEST_CASE("reference study parses") {
  const ParsedConfig parsed = parse_config(kPaperConfig);
  const StudyConfig& s = parsed.study;
  CHECK(s.model.kind == ModelKind::Model1);
  CHECK(s.model.alpha == 21.3);
  REQUIRE(s.nondim.has_value());
  CHECK(s.nondim->re == 10.0);
  CHECK(s.nondim->pe == 1000.0);
  CHECK(s.nondim->p_g == 5.0);
  CHECK(s.nondim->p_gamma == 125.28);
  CHECK(s.n_nodes == 201);
  REQUIRE(s.cycles.size() == 3);
  CHECK(s.cycles[0] == 3.5);
  CHECK(s.cycles[2] == 34.5);
  CHECK(s.bc.kind == BcKind::Ramp);
  CHECK(s.wall.kind == WallDrive::Kind::Oscillating);
  // Echo preserves file order.
  CHECK(parsed.entries.front()[0] == "model");
  CHECK(parsed.entries.front()[1] == "model");
}

TEST_CASE("negative p_gamma is rejected") {
  std::string text = kPaperConfig;
  const auto pos = text.find("p_gamma = 125.28");
  text.replace(pos, 16, "p_gamma = -1");
  CHECK_THROWS_WITH_AS(parse_config(text),
                       doctest::Contains("p_gamma"), ConfigError);
}

TEST_CASE("exactly one parameter group") {
  std::string text = kPaperConfig;
  text += R"(
[geometry]
r_i = 1
r_o = 1.2
omega_bar = 1
f_theta = 1
f_z = 1
a_grad = 0
b_grad = 0
rho_f = 2500
mu0_bar = 10
d_c = 4e-5
)";
  CHECK_THROWS_WITH_AS(parse_config(text), doctest::Contains("exactly one"),
                       ConfigError);
}

TEST_CASE("geometry group derives the parameters inside run configs") {
  const char* text = R"(
[model]
model = newtonian

[geometry]
r_i = 1
r_o = 1.2
omega_bar = 1
f_theta = 1
f_z = 1
a_grad = 0
b_grad = 0
rho_f = 2500
mu0_bar = 10
d_c = 4e-5

[output]
cycles = 0.5
)";
  const ParsedConfig parsed = parse_config(text);
  REQUIRE(parsed.study.physical.has_value());
  CHECK(parsed.study.physical->rho_f == 2500.0);
  CHECK_FALSE(parsed.study.nondim.has_value());
}

TEST_CASE("unknown keys and malformed lines carry line numbers") {
  std::string text = kPaperConfig;
  text += "typo_key = 3\n";  // inside [output]
  try {
    parse_config(text);
    FAIL("expected ConfigError");
  } catch (const ConfigError& err) {
    CHECK(err.line > 0);
    CHECK(std::string(err.what()).find("typo_key") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_config("[grid]\nn_nodes 33\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[nope]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n_nodes = 33\n"), ConfigError);  // no section
  CHECK_THROWS_AS(parse_config("[grid]\nn_nodes = 33\nn_nodes = 34\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("[grid]\nn_nodes = many\n"), ConfigError);
}

TEST_CASE("bc and integrator sections") {
  std::string text = kPaperConfig;
  text += R"(
[bc]
mode = feedback
c_tilde = 0.32
c_bar = 0.26
r_bar_hat = 0.7
wall = constant
wall_value = 2

[integrator]
rel_tol = 1e-7
dt_max = 0.02
max_newton = 9
)";
  const ParsedConfig parsed = parse_config(text);
  CHECK(parsed.study.bc.kind == BcKind::FeedbackSwitch);
  CHECK(parsed.study.bc.c_tilde == 0.32);
  CHECK(parsed.study.bc.c_bar == 0.26);
  CHECK(parsed.study.bc.r_bar_hat == 0.7);
  CHECK(parsed.study.wall.kind == WallDrive::Kind::Constant);
  CHECK(parsed.study.wall.constant_value == 2.0);
  CHECK(parsed.study.integrator.rel_tol == 1e-7);
  CHECK(parsed.study.integrator.dt_max == 0.02);
  CHECK(parsed.study.integrator.max_newton == 9);
  // untouched defaults survive
  CHECK(parsed.study.integrator.safety == 0.9);
}

TEST_CASE("model overrides go through the dissipation check") {
  std::string text = kPaperConfig;
  text.replace(text.find("model = model1"), 14,
               "model = model1\ngamma = -0.5");
  CHECK_THROWS_WITH_AS(parse_config(text), doctest::Contains("gamma"),
                       ConfigError);
}

TEST_CASE("missing mandatory pieces") {
  CHECK_THROWS_WITH_AS(parse_config("[output]\ncycles = 1\n"),
                       doctest::Contains("model"), ConfigError);
  const char* no_cycles = R"(
[model]
model = newtonian
[nondim]
re = 10
pe = 1000
p_f = 1
p_g = 5
p_beta = 1
p_gamma = 0
p_a = 0
p_b = 0
)";
  CHECK_THROWS_WITH_AS(parse_config(no_cycles), doctest::Contains("cycles"),
                       ConfigError);
}
