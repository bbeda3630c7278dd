#include "annuflow/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "annuflow/integrator.hpp"
#include "annuflow/ode_system.hpp"
#include "annuflow/oracle.hpp"
#include "annuflow/orchestrator.hpp"
#include "annuflow/snapshot_io.hpp"

namespace annuflow::acceptance {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Pinned gates of the verification suite.
constexpr double kSteadyTol = 1e-6;           // criteria 1-2 at N = 401
constexpr double kCouetteBudgetSeconds = 30.0;
constexpr double kOrderLo = 3.5;              // error-ratio window per h or dt halving
constexpr double kOrderHi = 4.5;
constexpr double kAxialNullity = 1e-12;       // criterion 5
constexpr double kCBoundSlack = 1e-9;         // criterion 6 range slack
constexpr double kRoundoffSlack = 1e-12;      // monotonicity / concavity sign noise
constexpr double kSelfConvergenceTol = 1e-4;  // criterion 12, N = 201 vs 401
// Criterion 6 cross-model agreement: ten times the integrator's weighted
// tolerance at the concentration scale, with the default tolerances.
constexpr double kCModelAgreement = 10.0 * (1e-6 * 0.3 + 1e-8);

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(3);
  out << x;
  return out.str();
}

NondimParams paper_nondim(const ConstitutiveModel& model, double p_a,
                          double p_b) {
  NondimParams p;
  p.re = 10.0;
  p.pe = 1000.0;
  p.p_f = 1.0;
  p.p_g = 5.0;  // r_i = 1, r_o = 1.2
  p.p_beta = model.beta;
  p.p_gamma = 72.0 * model.gamma;  // 2 gamma r_o^2 / (r_o - r_i)^2
  p.p_a = p_a;
  p.p_b = p_b;
  return p;
}

StudyConfig paper_study(ModelKind kind, int n_nodes, std::vector<double> cycles,
                        double p_a = 0.0, double p_b = 0.0) {
  StudyConfig config;
  config.model = builtin_model(kind);
  config.nondim = paper_nondim(config.model, p_a, p_b);
  config.n_nodes = n_nodes;
  config.cycles = std::move(cycles);
  return config;
}

int mid_node(int n_nodes) { return (n_nodes - 1) / 2; }  // r = 0.5 for odd n

double max_abs(const Vector& v) { return v.lpNorm<Eigen::Infinity>(); }

// Concentration history tracked across every accepted step of a run.
struct CHistory {
  double c_min = std::numeric_limits<double>::infinity();
  double c_max = -std::numeric_limits<double>::infinity();
  bool outer_exact_after_ramp = true;

  StepObserver observer(int n_nodes) {
    return [this, n_nodes](double t, const Vector& u, const StepReport&) {
      for (int j = 0; j < n_nodes; ++j) {
        const double c = u[c_index(j)];
        c_min = std::min(c_min, c);
        c_max = std::max(c_max, c);
      }
      if (t >= 2.0 && u[c_index(n_nodes - 1)] != 0.3) {
        outer_exact_after_ramp = false;
      }
    };
  }
};

constexpr ModelKind kAllKinds[] = {ModelKind::Newtonian, ModelKind::Model1,
                                   ModelKind::Model2a, ModelKind::Model2b};
constexpr ModelKind kReactingKinds[] = {ModelKind::Model1, ModelKind::Model2a,
                                        ModelKind::Model2b};

struct SharedStudies {
  int n_nodes = 0;
  std::vector<double> cycles;
  RunResult results[4];
  CHistory histories[4];
  bool ok = true;
  std::string problem;
};

int kind_slot(ModelKind kind) { return static_cast<int>(kind); }

SharedStudies run_nograd_studies(bool fast) {
  SharedStudies shared;
  shared.n_nodes = fast ? 101 : 201;
  shared.cycles = fast ? std::vector<double>{3.5, 8.5, 12.5}
                       : std::vector<double>{3.5, 12.5, 34.5};
  for (ModelKind kind : kAllKinds) {
    const int slot = kind_slot(kind);
    StudyConfig config = paper_study(kind, shared.n_nodes, shared.cycles);
    shared.results[slot] =
        run(config, shared.histories[slot].observer(shared.n_nodes));
    if (shared.results[slot].aborted) {
      shared.ok = false;
      shared.problem = std::string(to_string(kind)) + " study aborted: " +
                       shared.results[slot].abort_reason;
    }
  }
  return shared;
}

// ---- criteria 1-3: steady oracles and spatial order ----------------------

struct SteadyOutcome {
  double error = std::numeric_limits<double>::quiet_NaN();
  double seconds = 0.0;
  bool ok = false;
};

SteadyOutcome steady_error(bool couette, int n_nodes) {
  StudyConfig config;
  config.model = builtin_model(ModelKind::Newtonian);
  NondimParams p = paper_nondim(config.model, couette ? 0.0 : 1.0, 0.0);
  p.p_gamma = 0.0;
  config.nondim = p;
  config.n_nodes = n_nodes;
  config.integrator.newton_tol = 1e-13;
  config.integrator.dt_max = 0.5;
  config.wall = WallDrive::constant(couette ? 2.0 : 0.0);
  config.cycles = {200.0 / kTwoPi};

  SteadyOutcome outcome;
  const RunResult result = run(config);
  outcome.seconds = result.wall_seconds;
  if (result.aborted) return outcome;
  const Snapshot& snap = result.snapshots.back();
  double err = 0.0;
  if (couette) {
    const oracle::CouetteSolution sol = oracle::couette(2.0, 5.0);
    for (int j = 0; j < n_nodes; ++j) {
      err = std::max(err, std::abs(snap.v[j] - sol(result.grid.node(j))));
    }
  } else {
    // (1/Re) div_z(w) + 1 = 0 at Re = 10: scaled gradient 10.
    const oracle::PoiseuilleSolution sol = oracle::poiseuille_annulus(10.0, 5.0);
    for (int j = 0; j < n_nodes; ++j) {
      err = std::max(err, std::abs(snap.w[j] - sol(result.grid.node(j))));
    }
  }
  outcome.error = err;
  outcome.ok = true;
  return outcome;
}

CriterionResult criterion_couette(bool fast) {
  const int n = fast ? 101 : 401;
  const double tol = fast ? kSteadyTol * 16.0 : kSteadyTol;
  const SteadyOutcome outcome = steady_error(true, n);
  CriterionResult result{1, "steady Couette velocity vs closed form", false, ""};
  result.pass = outcome.ok && outcome.error <= tol &&
                outcome.seconds <= kCouetteBudgetSeconds;
  result.detail = "max error " + fmt(outcome.error) + " (tol " + fmt(tol) +
                  ") in " + fmt(outcome.seconds) + " s at N=" +
                  std::to_string(n) + (fast ? ", fast variant" : "");
  return result;
}

CriterionResult criterion_poiseuille(bool fast) {
  const int n = fast ? 101 : 401;
  const double tol = fast ? kSteadyTol * 16.0 : kSteadyTol;
  const SteadyOutcome outcome = steady_error(false, n);
  CriterionResult result{2, "steady annular Poiseuille velocity vs closed form",
                         false, ""};
  result.pass = outcome.ok && outcome.error <= tol;
  result.detail = "max error " + fmt(outcome.error) + " (tol " + fmt(tol) +
                  ") at N=" + std::to_string(n) +
                  (fast ? ", fast variant" : "");
  return result;
}

CriterionResult criterion_spatial_order(bool fast) {
  const std::vector<int> grids =
      fast ? std::vector<int>{51, 101} : std::vector<int>{51, 101, 201};
  CriterionResult result{3, "spatial order two on the steady oracles", false, ""};
  std::string detail;
  bool pass = true;
  for (const bool couette : {true, false}) {
    std::vector<double> errors;
    for (int n : grids) {
      const SteadyOutcome outcome = steady_error(couette, n);
      if (!outcome.ok) {
        result.detail = "steady run aborted";
        return result;
      }
      errors.push_back(outcome.error);
    }
    detail += couette ? "couette ratios" : "; poiseuille ratios";
    for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
      const double ratio = errors[k] / errors[k + 1];
      pass = pass && ratio >= kOrderLo && ratio <= kOrderHi;
      detail += " " + fmt(ratio);
    }
  }
  result.pass = pass;
  result.detail = detail + " (window [3.5, 4.5])";
  return result;
}

// ---- criterion 4: temporal order against the dense propagator ------------

CriterionResult criterion_temporal_order() {
  // Linear concentration subsystem on 21 nodes with Pe = 1, sealed inner
  // wall, fixed outer value; v and w stay pinned at zero.
  const int n = 21;
  StudyConfig base;
  base.model = builtin_model(ModelKind::Newtonian);
  NondimParams params = paper_nondim(base.model, 0.0, 0.0);
  params.pe = 1.0;
  params.p_gamma = 0.0;
  const RadialGrid grid = build_grid(n, params.p_g);

  BcMode fixed_outer;
  fixed_outer.kind = BcKind::FeedbackSwitch;
  fixed_outer.c_tilde = 0.2;
  fixed_outer.c_bar = 1.0;  // layer mean can never reach 1: Dirichlet forever
  fixed_outer.r_bar_hat = 0.75;
  const BoundaryConditions bc{WallDrive::constant(0.0), fixed_outer};
  AnnulusSystem system(grid, base.model, params, bc);

  // Reduced operator over the differential concentration rows (the outer
  // node is pinned): dc/dt = A c + b, probed through the linear residual.
  const int reduced = n - 1;
  Vector u_base = Vector::Zero(3 * n);
  for (int j = 0; j < n; ++j) u_base[c_index(j)] = 0.0;
  system.begin_step(0.0, u_base);
  system.apply_constraints(0.0, u_base);
  Vector f_base(3 * n), f(3 * n);
  system.eval_rhs(0.0, u_base, f_base);
  Vector b(reduced);
  for (int j = 0; j < reduced; ++j) b[j] = f_base[c_index(j)];
  Matrix a = Matrix::Zero(reduced, reduced);
  for (int k = 0; k < reduced; ++k) {
    Vector u = u_base;
    u[c_index(k)] += 0.5;
    system.eval_rhs(0.0, u, f);
    for (int j = 0; j < reduced; ++j) {
      a(j, k) = (f[c_index(j)] - f_base[c_index(j)]) / 0.5;
    }
  }

  // Smooth, boundary-compatible initial profile.
  Vector c0(n);
  for (int j = 0; j < n; ++j) {
    const double r = grid.node(j);
    c0[j] = 0.1 + 0.1 * r * r;
  }
  Vector c0_red(reduced);
  for (int j = 0; j < reduced; ++j) c0_red[j] = c0[j];
  const Vector c_eq = a.fullPivLu().solve(-b);
  const Vector exact =
      c_eq + oracle::dense_propagator(a, 1.0) * (c0_red - c_eq);

  IntegratorConfig config;
  config.newton_tol = 1e-13;
  Integrator integrator(system, config);
  auto global_error = [&](double dt) {
    Vector u0 = Vector::Zero(3 * n);
    for (int j = 0; j < n; ++j) u0[c_index(j)] = c0[j];
    const Vector u = integrator.integrate_fixed_dt(0.0, u0, 1.0, dt);
    double err = 0.0;
    for (int j = 0; j < reduced; ++j) {
      err = std::max(err, std::abs(u[c_index(j)] - exact[j]));
    }
    return err;
  };

  CriterionResult result{4, "temporal order two vs matrix-exponential oracle",
                         false, ""};
  const double e1 = global_error(0.1);
  const double e2 = global_error(0.05);
  const double e3 = global_error(0.025);
  const double r1 = e1 / e2;
  const double r2 = e2 / e3;
  result.pass = r1 >= kOrderLo && r1 <= kOrderHi && r2 >= kOrderLo &&
                r2 <= kOrderHi;
  result.detail = "ratios " + fmt(r1) + " " + fmt(r2) + " (window [3.5, 4.5])";
  return result;
}

// ---- criteria 5-8, 10: shared no-gradient paper studies -------------------

CriterionResult criterion_axial_nullity(const SharedStudies& shared) {
  CriterionResult result{5, "axial velocity identically zero without gradient",
                         false, ""};
  if (!shared.ok) {
    result.detail = shared.problem;
    return result;
  }
  double worst = 0.0;
  for (ModelKind kind : kAllKinds) {
    for (const Snapshot& snap : shared.results[kind_slot(kind)].snapshots) {
      worst = std::max(worst, max_abs(snap.w));
    }
  }
  result.pass = worst <= kAxialNullity;
  result.detail = "max |w| = " + fmt(worst) + " (tol 1e-12)";
  return result;
}

CriterionResult criterion_concentration(const SharedStudies& shared) {
  CriterionResult result{6, "concentration bounds, wall value, monotonicity, "
                            "model independence",
                         false, ""};
  if (!shared.ok) {
    result.detail = shared.problem;
    return result;
  }
  bool bounds_ok = true, outer_ok = true, monotone_ok = true;
  double c_lo = 1.0, c_hi = 0.0;
  for (ModelKind kind : kAllKinds) {
    const CHistory& history = shared.histories[kind_slot(kind)];
    c_lo = std::min(c_lo, history.c_min);
    c_hi = std::max(c_hi, history.c_max);
    bounds_ok = bounds_ok && history.c_min >= 0.1 - kCBoundSlack &&
                history.c_max <= 0.3 + kCBoundSlack;
    outer_ok = outer_ok && history.outer_exact_after_ramp;
    for (const Snapshot& snap : shared.results[kind_slot(kind)].snapshots) {
      if (snap.t_hat <= 2.0) continue;
      for (int j = 0; j + 1 < shared.n_nodes; ++j) {
        if (snap.c[j + 1] - snap.c[j] < -kRoundoffSlack) monotone_ok = false;
      }
    }
  }
  // All four models see the same concentration history.
  double model_spread = 0.0;
  const RunResult& reference = shared.results[kind_slot(ModelKind::Newtonian)];
  for (ModelKind kind : kReactingKinds) {
    const RunResult& other = shared.results[kind_slot(kind)];
    for (std::size_t s = 0; s < reference.snapshots.size(); ++s) {
      model_spread = std::max(
          model_spread,
          max_abs(reference.snapshots[s].c - other.snapshots[s].c));
    }
  }
  const bool spread_ok = model_spread <= kCModelAgreement;
  result.pass = bounds_ok && outer_ok && monotone_ok && spread_ok;
  result.detail = "range [" + fmt(c_lo) + ", " + fmt(c_hi) +
                  "], wall exact: " + (outer_ok ? "yes" : "NO") +
                  ", monotone: " + (monotone_ok ? "yes" : "NO") +
                  ", model spread " + fmt(model_spread) + " (tol " +
                  fmt(kCModelAgreement) + ")";
  return result;
}

CriterionResult criterion_viscosity_growth(const SharedStudies& shared) {
  CriterionResult result{7, "centerline apparent viscosity grows with cycles",
                         false, ""};
  if (!shared.ok) {
    result.detail = shared.problem;
    return result;
  }
  const int mid = mid_node(shared.n_nodes);
  bool pass = true;
  std::string detail;
  for (ModelKind kind : kReactingKinds) {
    const auto& snaps = shared.results[kind_slot(kind)].snapshots;
    detail += std::string(to_string(kind)) + ":";
    for (std::size_t s = 0; s < snaps.size(); ++s) {
      detail += " " + fmt(snaps[s].mu[mid]);
      if (s > 0 && !(snaps[s].mu[mid] > snaps[s - 1].mu[mid])) pass = false;
    }
    detail += "; ";
  }
  result.pass = pass;
  result.detail = detail + "strictly increasing required";
  return result;
}

CriterionResult criterion_concavity(const SharedStudies& shared) {
  CriterionResult result{8, "velocity concave for reacting models, convex for "
                            "Newtonian, at peak wall phase",
                         false, ""};
  if (!shared.ok) {
    result.detail = shared.problem;
    return result;
  }
  // Half-cycle snapshots sit at the wall-velocity maximum; examine the later
  // two (established concentration field), central 60% of the gap.
  bool pass = true;
  int checked = 0;
  for (ModelKind kind : kAllKinds) {
    const auto& run_result = shared.results[kind_slot(kind)];
    const bool want_concave = kind != ModelKind::Newtonian;
    for (std::size_t s = run_result.snapshots.size() - 2;
         s < run_result.snapshots.size(); ++s) {
      const Snapshot& snap = run_result.snapshots[s];
      for (int j = 1; j + 1 < shared.n_nodes; ++j) {
        const double r = run_result.grid.node(j);
        if (r < 0.2 || r > 0.8) continue;
        const double d2 = snap.v[j + 1] - 2.0 * snap.v[j] + snap.v[j - 1];
        ++checked;
        if (want_concave ? d2 > kRoundoffSlack : d2 < -kRoundoffSlack) {
          pass = false;
        }
      }
    }
  }
  result.pass = pass && checked > 0;
  result.detail = std::to_string(checked) + " second differences checked";
  return result;
}

CriterionResult criterion_model_proximity(const SharedStudies& shared) {
  CriterionResult result{10, "models 2a and 2b closer to each other than to "
                             "model 1",
                         false, ""};
  if (!shared.ok) {
    result.detail = shared.problem;
    return result;
  }
  const Snapshot& last_2a =
      shared.results[kind_slot(ModelKind::Model2a)].snapshots.back();
  const Snapshot& last_2b =
      shared.results[kind_slot(ModelKind::Model2b)].snapshots.back();
  const Snapshot& last_1 =
      shared.results[kind_slot(ModelKind::Model1)].snapshots.back();
  const double d_pair = max_abs(last_2a.v - last_2b.v);
  const double d_far = max_abs(last_2a.v - last_1.v);
  result.pass = d_pair < d_far;
  result.detail = "|v_2a - v_2b| = " + fmt(d_pair) + " < |v_2a - v_1| = " +
                  fmt(d_far) + " at cycle " + fmt(last_2a.cycle);
  return result;
}

// ---- criterion 9: gradient study -----------------------------------------

CriterionResult criterion_axial_suppression(bool fast) {
  CriterionResult result{9, "axial amplitude decays across cycles under the "
                            "oscillating gradient",
                         false, ""};
  const std::vector<double> windows =
      fast ? std::vector<double>{3.5, 12.5} : std::vector<double>{3.5, 12.5, 34.5};
  const int n = fast ? 101 : 201;
  std::vector<double> cycles;
  for (double base : windows) {
    for (int i = -16; i <= 16; ++i) cycles.push_back(base + i / 32.0);
  }
  bool pass = true;
  std::string detail;
  for (ModelKind kind : kReactingKinds) {
    // Figure-caption convention p_A = -p_B = 1.
    StudyConfig config = paper_study(kind, n, cycles, 1.0, -1.0);
    const RunResult run_result = run(config);
    if (run_result.aborted) {
      result.detail = std::string(to_string(kind)) + " gradient study aborted";
      return result;
    }
    const int mid = mid_node(n);
    std::vector<double> amplitude(windows.size(), 0.0);
    for (const Snapshot& snap : run_result.snapshots) {
      std::size_t w = 0;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < windows.size(); ++k) {
        const double d = std::abs(snap.cycle - windows[k]);
        if (d < best) {
          best = d;
          w = k;
        }
      }
      amplitude[w] = std::max(amplitude[w], std::abs(snap.w[mid]));
    }
    detail += std::string(to_string(kind)) + ":";
    for (std::size_t k = 0; k < amplitude.size(); ++k) {
      detail += " " + fmt(amplitude[k]);
      if (k > 0 && !(amplitude[k] < amplitude[k - 1])) pass = false;
    }
    detail += "; ";
  }
  result.pass = pass;
  result.detail = detail + "strict decay required" +
                  (fast ? " (fast variant)" : "");
  return result;
}

// ---- criterion 11: rest preservation and determinism ----------------------

CriterionResult criterion_rest_and_determinism(bool fast) {
  CriterionResult result{11, "rest state preserved and reruns bit-identical",
                         false, ""};

  // Zero forcing: fixed walls, no gradient, sealed concentration boundary.
  StudyConfig rest = paper_study(ModelKind::Model1, fast ? 51 : 101, {1.0});
  rest.wall = WallDrive::constant(0.0);
  rest.bc.kind = BcKind::FeedbackSwitch;
  rest.bc.c_bar = 0.0;  // mean always at the optimum: zero-flux outer wall
  const RunResult rest_result = run(rest);
  bool rest_ok = !rest_result.aborted;
  if (rest_ok) {
    const Snapshot& snap = rest_result.snapshots.back();
    for (int j = 0; j < rest.n_nodes; ++j) {
      rest_ok = rest_ok && snap.v[j] == 0.0 && snap.w[j] == 0.0 &&
                snap.c[j] == 0.1;
    }
  }

  // Bit-identical reruns, checked on the serialized snapshot bytes.
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "annuflow_acceptance";
  fs::create_directories(dir);
  StudyConfig study = paper_study(ModelKind::Model1, fast ? 101 : 201, {3.5});
  bool identical = true;
  std::string first_bytes;
  for (int round = 0; round < 2; ++round) {
    const RunResult run_result = run(study);
    if (run_result.aborted) {
      identical = false;
      break;
    }
    const fs::path file = dir / ("determinism_" + std::to_string(round) + ".csv");
    write_snapshot_csv(run_result.snapshots.back(), run_result.grid, file);
    std::ifstream in(file, std::ios::binary);
    std::ostringstream bytes;
    bytes << in.rdbuf();
    if (round == 0) {
      first_bytes = bytes.str();
    } else {
      identical = bytes.str() == first_bytes && !first_bytes.empty();
    }
  }

  result.pass = rest_ok && identical;
  result.detail = std::string("rest bitwise: ") + (rest_ok ? "yes" : "NO") +
                  ", rerun bytes identical: " + (identical ? "yes" : "NO");
  return result;
}

// ---- criterion 12: self-convergence of the default resolution -------------

CriterionResult criterion_self_convergence(bool fast,
                                           const SharedStudies& shared) {
  CriterionResult result{12, "default resolution verified against a doubled "
                             "grid",
                         false, ""};
  if (!shared.ok) {
    result.detail = shared.problem;
    return result;
  }
  const int fine_nodes = fast ? 201 : 401;
  const double tol = fast ? kSelfConvergenceTol * 4.0 : kSelfConvergenceTol;
  const std::vector<double> cycles =
      fast ? std::vector<double>{3.5} : shared.cycles;
  StudyConfig fine = paper_study(ModelKind::Model1, fine_nodes, cycles);
  const RunResult fine_result = run(fine);
  if (fine_result.aborted) {
    result.detail = "fine-grid study aborted";
    return result;
  }
  const RunResult& coarse = shared.results[kind_slot(ModelKind::Model1)];
  double worst = 0.0;
  for (std::size_t s = 0; s < cycles.size(); ++s) {
    const Snapshot& coarse_snap = coarse.snapshots[s];
    const Snapshot& fine_snap = fine_result.snapshots[s];
    for (int j = 0; j < shared.n_nodes; ++j) {
      worst = std::max(worst,
                       std::abs(coarse_snap.v[j] - fine_snap.v[2 * j]));
    }
  }
  result.pass = worst <= tol;
  result.detail = "max |v_coarse - v_fine| = " + fmt(worst) + " (tol " +
                  fmt(tol) + ")" + (fast ? ", fast variant" : "");
  return result;
}

}  // namespace

std::string format_line(const CriterionResult& result) {
  std::ostringstream out;
  out << (result.pass ? "PASS" : "FAIL") << "  " << result.id << ": "
      << result.name;
  if (!result.detail.empty()) out << " (" << result.detail << ")";
  return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

std::vector<CriterionResult> run_all(bool fast, std::ostream* progress) {
  std::vector<CriterionResult> results;
  auto push = [&](CriterionResult result) {
    if (progress) *progress << format_line(result) << std::endl;
    results.push_back(std::move(result));
  };

  push(criterion_couette(fast));
  push(criterion_poiseuille(fast));
  push(criterion_spatial_order(fast));
  push(criterion_temporal_order());

  const SharedStudies shared = run_nograd_studies(fast);
  push(criterion_axial_nullity(shared));
  push(criterion_concentration(shared));
  push(criterion_viscosity_growth(shared));
  push(criterion_concavity(shared));
  push(criterion_axial_suppression(fast));
  push(criterion_model_proximity(shared));
  push(criterion_rest_and_determinism(fast));
  push(criterion_self_convergence(fast, shared));

  std::sort(results.begin(), results.end(),
            [](const CriterionResult& a, const CriterionResult& b) {
              return a.id < b.id;
            });
  return results;
}

}  // namespace annuflow::acceptance
