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

#include "nstaylor/cli/artifacts.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nstaylor/field_io.hpp"

namespace nst::cli {
namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw std::runtime_error("bad number '" + s + "'");
  return v;
}

std::optional<double> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_double(s);
}

long parse_long(const std::string& s) {
  long v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw std::runtime_error("bad integer '" + s + "'");
  return v;
}

/// Calls row(cells) for each data line after checking the header.
template <class Row>
void read_rows(std::istream& in, const char* header, std::size_t columns, Row&& row) {
  std::string line;
  if (!std::getline(in, line) || line != header)
    throw std::runtime_error(std::string("expected CSV header '") + header + "'");
  for (int lineno = 2; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != columns)
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected " +
                               std::to_string(columns) + " columns");
    row(cells);
  }
}

std::optional<double> finite_or_empty(double v) {
  return std::isfinite(v) ? std::optional(v) : std::nullopt;
}

nlohmann::json optional_json(std::optional<double> v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string format_number(std::optional<double> v) {
  if (!v) return {};
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, *v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

std::vector<DiagnosticsRow> diagnostics_rows(std::span<const OrderDiagnostics> diags, bool timing) {
  std::vector<DiagnosticsRow> rows;
  for (const auto& d : diags)
    rows.push_back({d.order, d.max_norm_u, finite_or_empty(d.max_norm_p), d.max_divergence,
                    d.complexity, timing ? std::optional(d.wall_time_ms) : std::nullopt});
  return rows;
}

std::vector<NormsRow> norms_rows(std::span<const OrderDiagnostics> diags) {
  std::vector<NormsRow> rows;
  for (const auto& d : diags)
    rows.push_back({d.order, d.max_norm_u, finite_or_empty(d.max_norm_p), d.energy_u});
  return rows;
}

std::vector<RadiusRow> radius_rows(const RadiusEstimate& r) {
  std::vector<RadiusRow> rows;
  for (std::size_t n = 0; n < r.norms.size(); ++n)
    rows.push_back({static_cast<int>(n), r.norms[n],
                    n < r.ratios.size() ? r.ratios[n] : std::nullopt, r.roots[n]});
  return rows;
}

void write_csv(std::ostream& out, std::span<const DiagnosticsRow> rows) {
  out << kDiagnosticsHeader << '\n';
  for (const auto& r : rows)
    out << r.order << ',' << format_number(r.max_norm_u) << ',' << format_number(r.max_norm_p)
        << ',' << format_number(r.max_divergence) << ',' << r.term_count_or_grid << ','
        << format_number(r.wall_time_ms) << '\n';
}

void write_csv(std::ostream& out, std::span<const NormsRow> rows) {
  out << kNormsHeader << '\n';
  for (const auto& r : rows)
    out << r.order << ',' << format_number(r.max_norm_u) << ',' << format_number(r.max_norm_p)
        << ',' << format_number(r.energy_u) << '\n';
}

void write_csv(std::ostream& out, std::span<const RadiusRow> rows) {
  out << kRadiusHeader << '\n';
  for (const auto& r : rows)
    out << r.order << ',' << format_number(r.norm) << ',' << format_number(r.ratio) << ','
        << format_number(r.root) << '\n';
}

void write_csv(std::ostream& out, std::span<const ResidualRow> rows) {
  out << kResidualHeader << '\n';
  for (const auto& r : rows)
    out << r.order << ',' << format_number(r.t) << ',' << format_number(r.momentum) << ','
        << format_number(r.continuity) << '\n';
}

std::vector<DiagnosticsRow> read_diagnostics_csv(std::istream& in) {
  std::vector<DiagnosticsRow> rows;
  read_rows(in, kDiagnosticsHeader, 6, [&](const std::vector<std::string>& c) {
    rows.push_back({static_cast<int>(parse_long(c[0])), parse_double(c[1]), parse_optional(c[2]),
                    parse_double(c[3]), static_cast<std::size_t>(parse_long(c[4])),
                    parse_optional(c[5])});
  });
  return rows;
}

std::vector<NormsRow> read_norms_csv(std::istream& in) {
  std::vector<NormsRow> rows;
  read_rows(in, kNormsHeader, 4, [&](const std::vector<std::string>& c) {
    rows.push_back({static_cast<int>(parse_long(c[0])), parse_double(c[1]), parse_optional(c[2]),
                    parse_double(c[3])});
  });
  return rows;
}

std::vector<RadiusRow> read_radius_csv(std::istream& in) {
  std::vector<RadiusRow> rows;
  read_rows(in, kRadiusHeader, 4, [&](const std::vector<std::string>& c) {
    rows.push_back({static_cast<int>(parse_long(c[0])), parse_double(c[1]), parse_optional(c[2]),
                    parse_optional(c[3])});
  });
  return rows;
}

std::vector<ResidualRow> read_residual_csv(std::istream& in) {
  std::vector<ResidualRow> rows;
  read_rows(in, kResidualHeader, 4, [&](const std::vector<std::string>& c) {
    rows.push_back({static_cast<int>(parse_long(c[0])), parse_double(c[1]), parse_double(c[2]),
                    parse_double(c[3])});
  });
  return rows;
}

nlohmann::json radius_json(const RadiusEstimate& r) {
  nlohmann::json j;
  j["methods"] = {"ratio", "root"};
  j["norm"] = to_string(r.norm);
  j["hint"] = r.radius_hint ? nlohmann::json(*r.radius_hint) : nlohmann::json("unbounded");
  j["root_hint"] = optional_json(r.root_hint);
  j["flags"] = {{"degenerate", r.degenerate},
                {"ratios_decreasing", r.ratios_decreasing},
                {"empirical", true},
                {"convergence_proved", false}};
  j["tail_start"] = r.tail_start;
  j["tail_max_ratio"] = r.tail_max_ratio;
  j["domb_sykes_intercept"] = r.domb_sykes_intercept;
  nlohmann::json ratios = nlohmann::json::array();
  for (const auto& x : r.ratios) ratios.push_back(optional_json(x));
  j["ratios"] = ratios;
  j["text"] = r.summary();
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string coefficient_name(char field, int order, bool grid) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%c_%03d.%s", field, order, grid ? "fld" : "tp");
  return buf;
}

std::vector<std::filesystem::path> write_coefficients(const std::filesystem::path& dir,
                                                      const Solution<TrigPolyBackend>& sol) {
  std::vector<std::filesystem::path> written;
  const auto dump = [&](char name, int n, const TrigPoly& p) {
    std::ostringstream s;
    tp_dump(s, p);
    written.push_back(dir / coefficient_name(name, n, false));
    write_text(written.back(), s.str());
  };
  const auto& c = sol.coeffs;
  for (int n = 0; n <= c.order(); ++n) {
    for (int k = 0; k < 3; ++k) dump("uvw"[k], n, c.velocity(n)[k]);
    if (n < c.order()) dump('p', n, c.pressure(n));
  }
  return written;
}

std::vector<std::filesystem::path> write_coefficients(const std::filesystem::path& dir,
                                                      const Solution<GridBackend>& sol) {
  std::vector<std::filesystem::path> written;
  std::filesystem::create_directories(dir);
  const auto& spec = sol.backend.spec();
  const auto dump = [&](char name, int n, const Spectrum& s) {
    const GridField f = inverse(s);
    written.push_back(dir / coefficient_name(name, n, true));
    save_field(written.back(), periodic_header(spec, std::string(1, name), n), f.values());
  };
  const auto& c = sol.coeffs;
  for (int n = 0; n <= c.order(); ++n) {
    for (int k = 0; k < 3; ++k) dump("uvw"[k], n, c.velocity(n)[k]);
    if (n < c.order()) dump('p', n, c.pressure(n));
  }
  return written;
}

}  // namespace nst::cli
