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

#include "nstaylor/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>

#include "nstaylor/oracle.hpp"

namespace nst::cli {
namespace {

const std::set<std::string> kRepeatable{"problem.mode", "problem.forcing.mode"};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Entry {
  std::string value;
  int line;
};

class Reader {
 public:
  Reader(std::string source, std::map<std::string, std::vector<Entry>> entries)
      : source_(std::move(source)), entries_(std::move(entries)) {}

  [[noreturn]] void fail(const Entry& e, const std::string& key, const std::string& what) const {
    throw ConfigError(source_ + ":" + std::to_string(e.line) + ": " + key + ": " + what);
  }
  [[noreturn]] void fail(const std::string& what) const { throw ConfigError(source_ + ": " + what); }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  const std::vector<Entry>& all(const std::string& key) const {
    static const std::vector<Entry> none;
    const auto it = entries_.find(key);
    return it == entries_.end() ? none : it->second;
  }

  std::optional<std::string> str(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return all(key).front().value;
  }

  double to_double(const Entry& e, const std::string& key, const std::string& token) const {
    double v = 0.0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) fail(e, key, "expected a number, got '" + token + "'");
    return v;
  }
  long to_long(const Entry& e, const std::string& key, const std::string& token) const {
    long v = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc{} || ptr != end) fail(e, key, "expected an integer, got '" + token + "'");
    return v;
  }

  std::optional<double> number(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    const auto& e = all(key).front();
    return to_double(e, key, e.value);
  }
  std::optional<long> integer(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    const auto& e = all(key).front();
    return to_long(e, key, e.value);
  }
  std::optional<bool> boolean(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    const auto& e = all(key).front();
    if (e.value == "true") return true;
    if (e.value == "false") return false;
    fail(e, key, "expected true or false, got '" + e.value + "'");
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::map<std::string, std::vector<Entry>> entries_;
};

int component_index(const Reader& r, const Entry& e, const std::string& key, const std::string& c) {
  if (c == "x" || c == "u") return 0;
  if (c == "y" || c == "v") return 1;
  if (c == "z" || c == "w") return 2;
  r.fail(e, key, "component must be x|y|z (or u|v|w), got '" + c + "'");
}

/// "kx ky kz comp re im" adds c e^{ik.x} + conj(c) e^{-ik.x} to one component.
void add_mode(const Reader& r, const Entry& e, const std::string& key,
              std::span<const std::string> t, TrigVec& target) {
  if (t.size() != 6) r.fail(e, key, "expected 'kx ky kz component re im'");
  const Wavevector k{static_cast<int>(r.to_long(e, key, t[0])),
                     static_cast<int>(r.to_long(e, key, t[1])),
                     static_cast<int>(r.to_long(e, key, t[2]))};
  const int comp = component_index(r, e, key, t[3]);
  const Complex c{r.to_double(e, key, t[4]), r.to_double(e, key, t[5])};
  if (k.is_zero() && c.imag() != 0.0) r.fail(e, key, "the k = 0 mode must be real");
  target[comp] = tp_add(target[comp], TrigPoly::mode_pair(k, c), 0.0);
}

TrigVec build_initial(const Reader& r, const std::string& kind) {
  const auto only_with = [&](const std::string& prefix, const std::string& required) {
    for (const auto& key : config_keys())
      if (key.rfind(prefix, 0) == 0 && r.has(key) && kind != required)
        r.fail(r.all(key).front(), key, "only valid with problem.initial = " + required);
  };
  only_with("problem.abc.", "abc");
  only_with("problem.random.", "random");
  only_with("problem.mode", "modes");

  if (kind == "taylor_green") return initial_velocity(ExactFlow::taylor_green(0.0));
  if (kind == "abc")
    return initial_velocity(ExactFlow::abc(0.0, r.number("problem.abc.a").value_or(1.0),
                                           r.number("problem.abc.b").value_or(1.0),
                                           r.number("problem.abc.c").value_or(1.0)));
  if (kind == "zero") return {};
  if (kind == "random") {
    const long seed = r.integer("problem.random.seed").value_or(1);
    const long waves = r.integer("problem.random.waves").value_or(3);
    const long kmax = r.integer("problem.random.kmax").value_or(2);
    const double amplitude = r.number("problem.random.amplitude").value_or(1.0);
    if (seed < 0 || waves < 1 || kmax < 1 || !(amplitude > 0.0))
      r.fail("problem.random needs seed >= 0, waves >= 1, kmax >= 1, amplitude > 0");
    return random_divergence_free(static_cast<std::uint64_t>(seed), static_cast<int>(waves),
                                  static_cast<int>(kmax), amplitude);
  }
  if (kind == "modes") {
    TrigVec u;
    const auto& entries = r.all("problem.mode");
    if (entries.empty()) r.fail("problem.initial = modes needs at least one problem.mode line");
    for (const auto& e : entries) add_mode(r, e, "problem.mode", split(e.value), u);
    return u;
  }
  r.fail(r.all("problem.initial").front(), "problem.initial",
         "expected taylor_green|abc|zero|modes|random, got '" + kind + "'");
}

std::vector<TrigVec> build_forcing(const Reader& r) {
  std::vector<TrigVec> forcing;
  for (const auto& e : r.all("problem.forcing.mode")) {
    const auto t = split(e.value);
    if (t.size() != 7) r.fail(e, "problem.forcing.mode", "expected 'order kx ky kz component re im'");
    const long order = r.to_long(e, "problem.forcing.mode", t[0]);
    if (order < 0 || order > 1000) r.fail(e, "problem.forcing.mode", "order must be in 0..1000");
    if (forcing.size() <= static_cast<std::size_t>(order))
      forcing.resize(static_cast<std::size_t>(order) + 1);
    add_mode(r, e, "problem.forcing.mode", std::span(t).subspan(1),
             forcing[static_cast<std::size_t>(order)]);
  }
  return forcing;
}

GridSpec build_grid(const Reader& r) {
  GridSpec g;
  const auto positive_int = [&](const std::string& key, int fallback) {
    const auto v = r.integer(key);
    if (!v) return fallback;
    if (*v < 4 || *v % 2 != 0 || *v > 4096)
      r.fail(r.all(key).front(), key, "grid sizes must be even and in 4..4096");
    return static_cast<int>(*v);
  };
  const auto positive = [&](const std::string& key, double fallback) {
    const auto v = r.number(key);
    if (!v) return fallback;
    if (!(*v > 0.0)) r.fail(r.all(key).front(), key, "box lengths must be > 0");
    return *v;
  };
  const int n = positive_int("backend.grid.n", 32);
  g.nx = positive_int("backend.grid.nx", n);
  g.ny = positive_int("backend.grid.ny", n);
  g.nz = positive_int("backend.grid.nz", n);
  const double len = positive("backend.grid.length", g.lx);
  g.lx = positive("backend.grid.lx", len);
  g.ly = positive("backend.grid.ly", len);
  g.lz = positive("backend.grid.lz", len);
  if (const auto d = r.str("backend.grid.dealias")) {
    try {
      g.dealias = dealias_from_string(*d);
    } catch (const std::exception& ex) {
      r.fail(r.all("backend.grid.dealias").front(), "backend.grid.dealias", ex.what());
    }
  }
  return g;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "problem.nu",           "problem.order",         "problem.initial",
      "problem.abc.a",        "problem.abc.b",         "problem.abc.c",
      "problem.random.seed",  "problem.random.waves",  "problem.random.kmax",
      "problem.random.amplitude", "problem.mode",      "problem.forcing.mode",
      "backend.kind",         "backend.grid.n",        "backend.grid.nx",
      "backend.grid.ny",      "backend.grid.nz",       "backend.grid.length",
      "backend.grid.lx",      "backend.grid.ly",       "backend.grid.lz",
      "backend.grid.dealias", "output.dir",            "output.dumps",
      "output.timing",        "output.residual",       "output.residual_times",
      "output.sample_n",      "tolerances.tol_div",    "tolerances.eps_prune",
      "tolerances.tol_mean"};
  return keys;
}

RunConfig parse_config(std::istream& in, const std::string& source) {
  const auto& known = config_keys();
  std::map<std::string, std::vector<Entry>> entries;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(source + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigError(source + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (value.empty())
      throw ConfigError(source + ":" + std::to_string(lineno) + ": empty value for '" + key + "'");
    auto& slot = entries[key];
    if (!slot.empty() && kRepeatable.count(key) == 0)
      throw ConfigError(source + ":" + std::to_string(lineno) + ": duplicate key '" + key +
                        "' (first set on line " + std::to_string(slot.front().line) + ")");
    slot.push_back({value, lineno});
  }

  const Reader r(source, std::move(entries));
  for (const char* required : {"problem.nu", "problem.order", "problem.initial"})
    if (!r.has(required)) r.fail(std::string("missing required key '") + required + "'");

  RunConfig cfg;
  cfg.initial = *r.str("problem.initial");
  cfg.problem.nu = *r.number("problem.nu");
  if (!(cfg.problem.nu >= 0.0)) r.fail(r.all("problem.nu").front(), "problem.nu", "must be >= 0");
  const long order = *r.integer("problem.order");
  if (order < 0 || order > 200)
    r.fail(r.all("problem.order").front(), "problem.order", "must be in 0..200");
  cfg.problem.order = static_cast<int>(order);
  cfg.problem.initial_velocity = build_initial(r, cfg.initial);
  cfg.problem.forcing = build_forcing(r);

  const std::string kind = r.str("backend.kind").value_or("trigpoly");
  if (kind == "grid") {
    cfg.problem.grid = build_grid(r);
  } else if (kind == "trigpoly") {
    for (const auto& key : known)
      if (key.rfind("backend.grid.", 0) == 0 && r.has(key))
        r.fail(r.all(key).front(), key, "only valid with backend.kind = grid");
  } else {
    r.fail(r.all("backend.kind").front(), "backend.kind", "expected trigpoly|grid, got '" + kind + "'");
  }

  auto& tol = cfg.problem.tolerances;
  if (const auto v = r.number("tolerances.tol_div")) {
    if (!(*v > 0.0)) r.fail("tolerances.tol_div must be > 0");
    tol.tol_div = *v;
  }
  tol.eps_prune = r.number("tolerances.eps_prune").value_or(tol.eps_prune);
  tol.tol_mean = r.number("tolerances.tol_mean").value_or(tol.tol_mean);
  if (!(tol.eps_prune >= 0.0) || !(tol.tol_mean > 0.0))
    r.fail("tolerances need eps_prune >= 0 and tol_mean > 0");

  auto& out = cfg.output;
  if (const auto d = r.str("output.dir")) out.dir = *d;
  out.dumps = r.boolean("output.dumps").value_or(out.dumps);
  out.timing = r.boolean("output.timing").value_or(out.timing);
  out.residual = r.boolean("output.residual").value_or(out.residual);
  if (r.has("output.residual_times")) {
    const auto& e = r.all("output.residual_times").front();
    out.residual_times.clear();
    for (const auto& tok : split(e.value)) {
      const double t = r.to_double(e, "output.residual_times", tok);
      if (!(t >= 0.0)) r.fail(e, "output.residual_times", "times must be >= 0");
      out.residual_times.push_back(t);
    }
  }
  if (const auto n = r.integer("output.sample_n")) {
    if (*n < 1 || *n > 64) r.fail("output.sample_n must be in 1..64");
    out.sample_n = static_cast<int>(*n);
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  return parse_config(in, path.string());
}

}  // namespace nst::cli
