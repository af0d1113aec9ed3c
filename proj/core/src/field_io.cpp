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

#include "nstaylor/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nst {
namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T, std::size_t N>
std::string join(const std::array<T, N>& a) {
  std::string s;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += ' ';
    if constexpr (std::is_floating_point_v<T>)
      s += format_double(a[i]);
    else
      s += std::to_string(a[i]);
  }
  return s;
}

template <class T>
std::array<T, 3> parse_triple(const std::string& key, const std::string& value) {
  std::istringstream is(value);
  std::array<T, 3> out{};
  for (auto& v : out)
    if (!(is >> v)) throw std::runtime_error("field dump: bad value for '" + key + "'");
  std::string rest;
  if (is >> rest) throw std::runtime_error("field dump: trailing data in '" + key + "'");
  return out;
}

std::uint64_t to_little_endian(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::little) return v;
  std::uint64_t r = 0;
  for (int i = 0; i < 8; ++i) r = (r << 8) | ((v >> (8 * i)) & 0xffu);
  return r;
}

}  // namespace

void write_field(std::ostream& out, const FieldHeader& h, std::span<const double> values) {
  const std::size_t expected = static_cast<std::size_t>(h.dims[0]) * h.dims[1] * h.dims[2];
  if (values.size() != expected)
    throw std::invalid_argument("field dump: value count does not match dims");
  out << "format:" << kFieldFormatTag << '\n'
      << "name:" << h.name << '\n'
      << "order:" << h.order << '\n'
      << "dims:" << join(h.dims) << '\n'
      << "box:" << join(h.box) << '\n'
      << "domain:" << h.domain << '\n';
  if (h.origin) out << "origin:" << join(*h.origin) << '\n';
  out << '\n';
  for (double v : values) {
    const std::uint64_t bits = to_little_endian(std::bit_cast<std::uint64_t>(v));
    char bytes[8];
    std::memcpy(bytes, &bits, 8);
    out.write(bytes, 8);
  }
  if (!out) throw std::runtime_error("field dump: write failed");
}

FieldRecord read_field(std::istream& in) {
  FieldRecord rec;
  std::string line;
  bool saw_format = false, saw_dims = false, saw_box = false;
  while (true) {
    if (!std::getline(in, line)) throw std::runtime_error("field dump: missing header terminator");
    if (line.empty()) break;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("field dump: header line without ':'");
    const std::string key = line.substr(0, colon);
    const std::string value = line.substr(colon + 1);
    if (key == "format") {
      if (value != kFieldFormatTag)
        throw std::runtime_error("field dump: unsupported format '" + value + "'");
      saw_format = true;
    } else if (key == "name") {
      rec.header.name = value;
    } else if (key == "order") {
      rec.header.order = std::stoi(value);
    } else if (key == "dims") {
      rec.header.dims = parse_triple<int>(key, value);
      saw_dims = true;
    } else if (key == "box") {
      rec.header.box = parse_triple<double>(key, value);
      saw_box = true;
    } else if (key == "domain") {
      rec.header.domain = value;
    } else if (key == "origin") {
      rec.header.origin = parse_triple<double>(key, value);
    } else {
      throw std::runtime_error("field dump: unknown header key '" + key + "'");
    }
  }
  if (!saw_format || !saw_dims || !saw_box)
    throw std::runtime_error("field dump: header lacks format, dims or box");
  for (int d : rec.header.dims)
    if (d <= 0) throw std::runtime_error("field dump: dims must be positive");

  const std::size_t n = static_cast<std::size_t>(rec.header.dims[0]) * rec.header.dims[1] *
                        rec.header.dims[2];
  rec.values.resize(n);
  for (auto& v : rec.values) {
    char bytes[8];
    if (!in.read(bytes, 8)) throw std::runtime_error("field dump: truncated payload");
    std::uint64_t bits;
    std::memcpy(&bits, bytes, 8);
    v = std::bit_cast<double>(to_little_endian(bits));
  }
  if (in.peek() != std::char_traits<char>::eof())
    throw std::runtime_error("field dump: trailing bytes after payload");
  return rec;
}

void save_field(const std::filesystem::path& path, const FieldHeader& header,
                std::span<const double> values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_field(out, header, values);
}

FieldRecord load_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_field(in);
}

FieldHeader periodic_header(const GridSpec& spec, std::string name, int order) {
  FieldHeader h;
  h.name = std::move(name);
  h.order = order;
  h.dims = {spec.nx, spec.ny, spec.nz};
  h.box = {spec.lx, spec.ly, spec.lz};
  h.domain = "periodic";
  return h;
}

GridField to_grid_field(const FieldRecord& rec, Dealias dealias) {
  if (rec.header.domain != "periodic")
    throw std::runtime_error("field dump is not on a periodic domain");
  GridSpec spec;
  spec.nx = rec.header.dims[0];
  spec.ny = rec.header.dims[1];
  spec.nz = rec.header.dims[2];
  spec.lx = rec.header.box[0];
  spec.ly = rec.header.box[1];
  spec.lz = rec.header.box[2];
  spec.dealias = dealias;
  return GridField(spec, rec.values);
}

}  // namespace nst
