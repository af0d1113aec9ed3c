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

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "nstaylor/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace nst::cli;
  CLI::App app{"Time-Taylor series for incompressible Navier-Stokes and Euler flows"};
  app.require_subcommand(1);

  std::string config;
  auto* run = app.add_subcommand("run", "Compute coefficients from a config file");
  run->add_option("config", config, "Config file")->required();

  ValidateOptions vopt;
  std::string dealias = "exact_padding";
  int fault = -1;
  std::string vout;
  auto* validate = app.add_subcommand("validate", "Check an exact-flow preset against its closed form");
  validate->add_option("preset", vopt.preset, "taylor_green | abc")->required();
  validate->add_option("--nu", vopt.nu, "Viscosity")->required();
  validate->add_option("--order", vopt.order, "Truncation order N")->required();
  validate->add_option("--backend", vopt.backend, "trigpoly | grid")->capture_default_str();
  validate->add_option("--grid-n", vopt.grid_n, "Grid points per axis")->capture_default_str();
  validate->add_option("--dealias", dealias, "two_thirds | exact_padding")->capture_default_str();
  validate->add_option("--output", vout, "Directory for validation_report.json");
  validate->add_option("--inject-fault", fault, "Corrupt u_n at this order (test hook)");

  std::string radius_dir;
  auto* radius = app.add_subcommand("radius", "Radius-of-convergence hint from a run directory");
  radius->add_option("dir", radius_dir, "Run output directory")->required();

  PoissonOracleOptions popt;
  std::string method = "fft";
  std::string pout;
  auto* poisson = app.add_subcommand("poisson-oracle", "Free-space Green's function quadrature check");
  poisson->add_option("--half-width", popt.half_width, "Domain half-width R")->capture_default_str();
  poisson->add_option("--n", popt.n, "Points per axis")->capture_default_str();
  poisson->add_flag("--refine", popt.refine, "Also solve at n/2 and 3n/4");
  poisson->add_option("--method", method, "fft | direct")
      ->check(CLI::IsMember({"fft", "direct"}))
      ->capture_default_str();
  poisson->add_option("--output", pout, "Directory for poisson_oracle.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  if (*run) return cmd_run(config, std::cout, std::cerr);
  if (*validate) {
    try {
      vopt.dealias = nst::dealias_from_string(dealias);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kBadInput;
    }
    if (!vout.empty()) vopt.output = vout;
    if (fault >= 0) vopt.inject_fault = fault;
    return cmd_validate(vopt, std::cout, std::cerr);
  }
  if (*radius) return cmd_radius(radius_dir, std::cout, std::cerr);
  if (*poisson) {
    popt.method = method == "direct" ? nst::QuadratureMethod::direct : nst::QuadratureMethod::fft;
    if (!pout.empty()) popt.output = pout;
    return cmd_poisson_oracle(popt, std::cout, std::cerr);
  }
  return kBadInput;
}
