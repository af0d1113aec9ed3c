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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "nstaylor/errors.hpp"
#include "nstaylor/recurrence.hpp"

namespace nst::cli {

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct OutputOptions {
  std::filesystem::path dir = "nstaylor-out";
  bool dumps = true;
  /// Wall times are left blank unless enabled so reruns are byte-identical.
  bool timing = false;
  bool residual = true;
  std::vector<double> residual_times{0.05, 0.1, 0.2, 0.4};
  int sample_n = 5;
};

struct RunConfig {
  std::string initial;  ///< taylor_green | abc | zero | modes | random
  ProblemSpec problem;
  OutputOptions output;
};

/// Flat "dotted.key = value" lines; '#' starts a comment. Unknown keys,
/// duplicates of single-valued keys and malformed values raise ConfigError.
RunConfig parse_config(std::istream& in, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Every key the parser accepts, in documentation order.
const std::vector<std::string>& config_keys();

}  // namespace nst::cli
