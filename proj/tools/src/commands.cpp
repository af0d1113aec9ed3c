// Copyright 2026 The nstaylor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nstaylor/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nstaylor/cli/artifacts.hpp"
#include "nstaylor/cli/config.hpp"
#include "nstaylor/recurrence.hpp"
#include "nstaylor/series.hpp"

namespace nst::cli {
namespace {

constexpr const char* kDomainNote =
    "periodic box surrogate for R^3; pressure in the mean-zero gauge";

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

template <class T>
std::string csv_text(std::span<const T> rows) {
  std::ostringstream s;
  write_csv(s, rows);
  return s.str();
}

/// Least-squares slope of log y against log x.
double loglog_slope(std::span<const double> x, std::span<const double> y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

nlohmann::json radius_summary(const std::vector<double>& norms, NormKind kind,
                              std::optional<RadiusEstimate>& estimate) {
  try {
    estimate = estimate_radius(std::span<const double>(norms), kind);
    return radius_json(*estimate);
  } catch (const InsufficientDataError& e) {
    estimate.reset();
    return {{"norm", to_string(kind)},
            {"hint", nullptr},
            {"status", "insufficient_data"},
            {"text", std::string("empirical hint unavailable: ") + e.what()}};
  }
}

/// radius.json plus radius.csv / radius_energy.csv from a norms table.
std::vector<std::string> write_radius_artifacts(const std::filesystem::path& dir,
                                                std::span<const NormsRow> rows,
                                                nlohmann::json& summary) {
  std::vector<double> max_norms;
  std::vector<double> energy_norms;
  for (const auto& r : rows) {
    max_norms.push_back(r.max_norm_u);
    energy_norms.push_back(std::sqrt(r.energy_u));
  }
  std::optional<RadiusEstimate> max_est;
  std::optional<RadiusEstimate> energy_est;
  summary = {{"max", radius_summary(max_norms, NormKind::max, max_est)},
             {"energy", radius_summary(energy_norms, NormKind::energy, energy_est)},
             {"note", "empirical hint only; convergence of the series is not established"}};
  std::vector<std::string> files{"radius.json"};
  write_text(dir / "radius.json", dump_json(summary));
  const auto csv = [&](const std::optional<RadiusEstimate>& est, const std::vector<double>& norms,
                       NormKind kind, const char* name) {
    const auto r = est ? *est : [&] {
      RadiusEstimate bare;
      bare.norm = kind;
      bare.norms = norms;
      for (std::size_t n = 0; n < norms.size(); ++n) bare.roots.emplace_back();
      return bare;
    }();
    const auto rr = radius_rows(r);
    write_text(dir / name, csv_text<RadiusRow>(rr));
    files.emplace_back(name);
  };
  csv(max_est, max_norms, NormKind::max, "radius.csv");
  csv(energy_est, energy_norms, NormKind::energy, "radius_energy.csv");
  return files;
}

template <class B>
std::vector<ResidualRow> residual_sweep(const Solution<B>& sol, const OutputOptions& out) {
  std::vector<ResidualRow> rows;
  const int top = sol.coeffs.order();
  if (top < 1) return rows;
  std::vector<int> orders;
  for (int m = 1; m <= std::min(top, 4); ++m) orders.push_back(m);
  if (top > 4) orders.push_back(top);
  const auto pts = default_sample_points(out.sample_n);
  for (int m : orders)
    for (double t : out.residual_times) {
      const auto r = residual_check(sol.backend, sol.coeffs, t, m, pts);
      rows.push_back({m, t, r.momentum, r.continuity});
    }
  return rows;
}

template <class B>
nlohmann::json write_run_artifacts(const RunConfig& cfg, const Solution<B>& sol,
                                   const std::filesystem::path& dir) {
  std::vector<std::string> files;
  if (cfg.output.dumps)
    for (const auto& p : write_coefficients(dir / "coefficients", sol))
      files.push_back(std::filesystem::relative(p, dir).generic_string());
  const auto diag = diagnostics_rows(sol.diagnostics, cfg.output.timing);
  write_text(dir / "diagnostics.csv", csv_text<DiagnosticsRow>(diag));
  files.emplace_back("diagnostics.csv");
  const auto norms = norms_rows(sol.diagnostics);
  write_text(dir / "norms.csv", csv_text<NormsRow>(norms));
  files.emplace_back("norms.csv");
  nlohmann::json radius;
  for (auto& f : write_radius_artifacts(dir, norms, radius)) files.push_back(f);
  if (cfg.output.residual) {
    const auto rows = residual_sweep(sol, cfg.output);
    write_text(dir / "residual.csv", csv_text<ResidualRow>(rows));
    files.emplace_back("residual.csv");
  }

  nlohmann::json run;
  run["initial"] = cfg.initial;
  run["nu"] = cfg.problem.nu;
  run["order"] = cfg.problem.order;
  run["forcing_terms"] = cfg.problem.forcing.size();
  run["backend"] = std::string(B::kName);
  if constexpr (std::is_same_v<B, GridBackend>) {
    const auto& g = sol.backend.spec();
    run["grid"] = {{"n", {g.nx, g.ny, g.nz}},
                   {"length", {g.lx, g.ly, g.lz}},
                   {"dealias", to_string(g.dealias)}};
  }
  run["tolerances"] = {{"tol_div", sol.tol_div},
                       {"eps_prune", cfg.problem.tolerances.eps_prune},
                       {"tol_mean", cfg.problem.tolerances.tol_mean}};
  double max_div = 0.0;
  for (const auto& d : sol.diagnostics) max_div = std::max(max_div, d.max_divergence);
  run["max_divergence"] = max_div;
  run["domain"] = kDomainNote;
  run["radius"] = radius["max"]["text"];
  files.emplace_back("run.json");
  run["artifacts"] = files;
  write_text(dir / "run.json", dump_json(run));
  return run;
}

template <class B>
double coefficient_gap(const B& b, const typename B::Field& got, const typename B::Field& want) {
  const std::array<Weighted<typename B::Field>, 2> parts{{{1.0, &got}, {-1.0, &want}}};
  return b.max_norm(b.combine(parts, 0.0));
}

template <class B>
ValidationReport validate_with(const B& backend, const ValidateOptions& opts,
                               const ExactFlow& flow) {
  using Field = typename B::Field;
  constexpr bool grid = std::is_same_v<B, GridBackend>;
  const double vel_rel_tol = grid ? 1e-8 : 1e-10;
  const double p_rel_tol = grid ? 1e-8 : 1e-9;
  const double zero_tol = grid ? 1e-9 : 1e-11;

  ProblemSpec problem;
  problem.nu = flow.nu;
  problem.order = opts.order;
  problem.initial_velocity = initial_velocity(flow);
  auto sol = run_with(backend, problem);

  if (opts.inject_fault) {
    const int n = *opts.inject_fault;
    if (n < 0 || n > sol.coeffs.order())
      throw std::invalid_argument("fault order " + std::to_string(n) + " outside 0.." +
                                  std::to_string(sol.coeffs.order()));
    auto& u = sol.coeffs.mutable_velocity(n);
    const Field bump = backend.from_trigpoly(TrigPoly::cosine({1, 0, 0}, 1e-3));
    const std::array<Weighted<Field>, 2> parts{{{1.0, &u[0]}, {1.0, &bump}}};
    u[0] = backend.combine(parts, 0.0);
  }

  ValidationReport rep;
  rep.flow = flow;
  rep.order = opts.order;
  rep.backend = std::string(B::kName);
  CriterionResult vel{"velocity coefficients", true, ""};
  CriterionResult pre{"pressure coefficients", true, ""};
  CriterionResult div{"per-order divergence", true, ""};
  CriterionResult bra{"pressure-step consistency", true, ""};
  const auto note = [](CriterionResult& c, int n, double value, double tol) {
    if (!c.pass) return;
    c.pass = false;
    c.detail = "order " + std::to_string(n) + ": " + format_number(value) + " > " +
               format_number(tol);
  };

  for (int n = 0; n <= sol.coeffs.order(); ++n) {
    const auto want = expected_coefficient(flow, n);
    OrderCheck oc;
    oc.order = n;
    double scale = 0.0;
    for (int k = 0; k < 3; ++k) {
      const Field w = backend.from_trigpoly(want.velocity[k]);
      oc.velocity_error = std::max(oc.velocity_error,
                                   coefficient_gap(backend, sol.coeffs.velocity(n)[k], w));
      scale = std::max(scale, backend.max_norm(w));
    }
    if (scale > 0.0) {
      oc.velocity_rel_error = oc.velocity_error / scale;
      if (!(*oc.velocity_rel_error <= vel_rel_tol)) note(vel, n, *oc.velocity_rel_error, vel_rel_tol);
    } else if (!(oc.velocity_error <= zero_tol)) {
      note(vel, n, oc.velocity_error, zero_tol);
    }
    if (n < sol.coeffs.order()) {
      const Field w = backend.from_trigpoly(want.pressure);
      oc.pressure_error = coefficient_gap(backend, sol.coeffs.pressure(n), w);
      const double ps = backend.max_norm(w);
      if (ps > 0.0) {
        oc.pressure_rel_error = *oc.pressure_error / ps;
        if (!(*oc.pressure_rel_error <= p_rel_tol)) note(pre, n, *oc.pressure_rel_error, p_rel_tol);
      } else if (!(*oc.pressure_error <= zero_tol)) {
        note(pre, n, *oc.pressure_error, zero_tol);
      }
    }
    oc.divergence = check_divergence(backend, sol.coeffs, n);
    if (!(oc.divergence <= sol.tol_div)) note(div, n, oc.divergence, sol.tol_div);
    oc.bracket_divergence = sol.diagnostics[static_cast<std::size_t>(n)].bracket_divergence;
    if (!(oc.bracket_divergence <= sol.tol_div)) note(bra, n, oc.bracket_divergence, sol.tol_div);
    rep.orders.push_back(oc);
  }

  CriterionResult fit{"residual order", true, ""};
  std::vector<double> ts;
  for (int i = 0; i < 8; ++i) ts.push_back(0.05 * std::pow(8.0, i / 7.0));
  const auto pts = default_sample_points(grid ? 2 : 5);
  for (int m = 2; m <= std::min(4, sol.coeffs.order()); ++m) {
    std::vector<double> rs;
    for (double t : ts) rs.push_back(residual_check(backend, sol.coeffs, t, m, pts).momentum);
    ResidualFit rf{m, std::nullopt};
    // Steady flows leave only rounding error, which has no time scaling.
    if (*std::min_element(rs.begin(), rs.end()) > 1e-12) rf.slope = loglog_slope(ts, rs);
    if (rf.slope && !(std::abs(*rf.slope - m) <= 0.3) && fit.pass) {
      fit.pass = false;
      fit.detail = "order " + std::to_string(m) + ": slope " + format_number(*rf.slope);
    }
    rep.fits.push_back(rf);
  }
  rep.criteria = {vel, pre, div, bra, fit};
  return rep;
}

}  // namespace

std::filesystem::path resolve_output_dir(const std::filesystem::path& configured) {
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
  return configured;
}

int cmd_run(const std::filesystem::path& config, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = load_config(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  const auto dir = resolve_output_dir(cfg.output.dir);
  try {
    const RunResult result = run(cfg.problem);
    const auto summary =
        std::visit([&](const auto& sol) { return write_run_artifacts(cfg, sol, dir); }, result);
    out << "wrote " << summary["artifacts"].size() << " artifacts to " << dir.string() << '\n';
    out << summary["radius"].get<std::string>() << '\n';
    return kOk;
  } catch (const DivergenceError& e) {
    err << "engine failure at order " << e.order() << ": " << e.what() << '\n';
  } catch (const EngineError& e) {
    err << "engine failure at order " << e.order() << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "engine failure: " << e.what() << '\n';
  }
  return kEngineFailure;
}

bool ValidationReport::pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.pass; });
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json j;
  j["flow"] = nst::to_string(flow.kind);
  j["nu"] = flow.nu;
  if (flow.kind == FlowKind::abc_beltrami) j["abc"] = {flow.a, flow.b, flow.c};
  j["orders_checked"] = order;
  j["backend"] = backend;
  j["domain"] = kDomainNote;
  const auto opt = [](std::optional<double> v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& o : orders)
    rows.push_back({{"order", o.order},
                    {"velocity_error", o.velocity_error},
                    {"velocity_rel_error", opt(o.velocity_rel_error)},
                    {"pressure_error", opt(o.pressure_error)},
                    {"pressure_rel_error", opt(o.pressure_rel_error)},
                    {"divergence", o.divergence},
                    {"bracket_divergence", o.bracket_divergence}});
  j["per_order"] = rows;
  nlohmann::json fits_json = nlohmann::json::array();
  for (const auto& f : fits) fits_json.push_back({{"order", f.order}, {"slope", opt(f.slope)}});
  j["residual_fits"] = fits_json;
  nlohmann::json crit = nlohmann::json::array();
  for (const auto& c : criteria)
    crit.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["criteria"] = crit;
  j["pass"] = pass();
  return j;
}

ValidationReport validate(const ValidateOptions& opts) {
  ExactFlow flow = flow_kind_from_string(opts.preset) == FlowKind::taylor_green_2d
                       ? ExactFlow::taylor_green(opts.nu)
                       : ExactFlow::abc(opts.nu);
  if (!(opts.nu >= 0.0)) throw std::invalid_argument("nu must be >= 0");
  if (opts.order < 0) throw std::invalid_argument("order must be >= 0");
  if (opts.backend == "trigpoly") return validate_with(TrigPolyBackend(), opts, flow);
  if (opts.backend == "grid") {
    GridSpec spec = GridSpec::cube(opts.grid_n, opts.dealias);
    return validate_with(GridBackend(spec), opts, flow);
  }
  throw std::invalid_argument("backend must be trigpoly or grid, got '" + opts.backend + "'");
}

int cmd_validate(const ValidateOptions& opts, std::ostream& out, std::ostream& err) {
  ValidationReport rep;
  try {
    rep = validate(opts);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "engine failure: " << e.what() << '\n';
    return kEngineFailure;
  }
  const auto j = rep.to_json();
  const char* env = std::getenv(kOutputDirEnv);
  if (opts.output || (env != nullptr && *env != '\0')) {
    const auto dir = resolve_output_dir(opts.output.value_or("."));
    write_text(dir / "validation_report.json", dump_json(j));
  }
  for (const auto& c : rep.criteria)
    out << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
        << '\n';
  return rep.pass() ? kOk : kValidationFailed;
}

int cmd_radius(const std::filesystem::path& dir, std::ostream& out, std::ostream& err) {
  const auto norms_path = dir / "norms.csv";
  std::vector<NormsRow> rows;
  try {
    std::ifstream in(norms_path);
    if (!in) throw std::runtime_error("missing run artifact '" + norms_path.string() + "'");
    rows = read_norms_csv(in);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  nlohmann::json summary;
  write_radius_artifacts(dir, rows, summary);
  out << dump_json(summary);
  return kOk;
}

nlohmann::json poisson_oracle_report(const PoissonOracleOptions& opts) {
  if (!(opts.half_width > 0.0) || opts.n < 4 || opts.n % 2 != 0)
    throw std::invalid_argument("need half-width > 0 and an even n >= 4");
  std::vector<int> sizes{opts.n};
  if (opts.refine) sizes = {opts.n / 2 + (opts.n / 2) % 2, 3 * opts.n / 4 + (3 * opts.n / 4) % 2, opts.n};
  NewtonianOptions nopt;
  nopt.method = opts.method;
  nlohmann::json levels = nlohmann::json::array();
  std::optional<std::pair<int, double>> prev;
  for (int n : sizes) {
    const auto pair = gaussian_poisson_pair(opts.half_width, n);
    const auto res = newtonian_potential(pair.phi, nopt);
    const double err = max_abs_diff(res.potential, pair.p_exact) / pair.p_exact.max_abs();
    nlohmann::json level{{"n", n}, {"h", pair.phi.spacing()}, {"relative_max_error", err},
                         {"warnings", res.warnings}};
    level["observed_order"] =
        prev ? nlohmann::json(std::log(prev->second / err) / std::log(static_cast<double>(n) / prev->first))
             : nlohmann::json(nullptr);
    levels.push_back(level);
    prev = std::pair{n, err};
  }
  return {{"pair", "p = exp(-r^2), phi = (6 - 4 r^2) exp(-r^2)"},
          {"half_width", opts.half_width},
          {"method", opts.method == QuadratureMethod::fft ? "fft" : "direct"},
          {"self_cell_coefficient", self_cell_coefficient()},
          {"levels", levels}};
}

int cmd_poisson_oracle(const PoissonOracleOptions& opts, std::ostream& out, std::ostream& err) {
  nlohmann::json report;
  try {
    report = poisson_oracle_report(opts);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "engine failure: " << e.what() << '\n';
    return kEngineFailure;
  }
  const char* env = std::getenv(kOutputDirEnv);
  if (opts.output || (env != nullptr && *env != '\0'))
    write_text(resolve_output_dir(opts.output.value_or(".")) / "poisson_oracle.json",
               dump_json(report));
  out << dump_json(report);
  return kOk;
}

}  // namespace nst::cli
