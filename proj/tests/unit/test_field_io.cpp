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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

#include "nstaylor/field_io.hpp"
#include "nstaylor/greensfn.hpp"

namespace nst {
namespace {

std::string dump(const FieldHeader& h, std::span<const double> v) {
  std::ostringstream out(std::ios::binary);
  write_field(out, h, v);
  return out.str();
}

FieldRecord parse(const std::string& bytes) {
  std::istringstream in(bytes, std::ios::binary);
  return read_field(in);
}

TEST(FieldIo, HeaderLayoutAndLittleEndianPayload) {
  FieldHeader h;
  h.name = "p";
  h.order = 3;
  h.dims = {2, 1, 1};
  h.box = {1.0, 0.5, 2.0};
  const std::vector<double> v{1.0, -2.5};
  const std::string s = dump(h, v);
  const std::string head =
      "format:nstaylor-field-v1\nname:p\norder:3\ndims:2 1 1\nbox:1 0.5 2\ndomain:periodic\n\n";
  ASSERT_EQ(s.size(), head.size() + 16);
  EXPECT_EQ(s.substr(0, head.size()), head);
  // 1.0 = 0x3FF0000000000000, -2.5 = 0xC004000000000000, least significant byte first.
  const unsigned char want[16] = {0, 0, 0, 0, 0, 0, 0xF0, 0x3F, 0, 0, 0, 0, 0, 0, 0x04, 0xC0};
  for (int i = 0; i < 16; ++i)
    EXPECT_EQ(static_cast<unsigned char>(s[head.size() + i]), want[i]) << "byte " << i;
}

TEST(FieldIo, RoundTripIsBitExact) {
  const GridSpec spec = GridSpec::cube(8);
  const GridField f = GridField::sample(spec, [](double x, double y, double z) {
    return std::sin(x) * std::cos(2 * y) + 1e-300 * z - 0.1;
  });
  std::vector<double> v(f.values().begin(), f.values().end());
  v[5] = std::numeric_limits<double>::denorm_min();
  v[6] = -0.0;
  const FieldHeader h = periodic_header(spec, "u_x", 4);
  const FieldRecord rec = parse(dump(h, v));
  EXPECT_EQ(rec.header, h);
  ASSERT_EQ(rec.values.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    EXPECT_EQ(std::bit_cast<std::uint64_t>(rec.values[i]), std::bit_cast<std::uint64_t>(v[i]));
  const GridField g = to_grid_field(rec);
  EXPECT_EQ(g.spec().nx, 8);
  EXPECT_DOUBLE_EQ(g.spec().lx, spec.lx);
}

TEST(FieldIo, RepeatedWritesAreByteIdentical) {
  const FieldHeader h = periodic_header(GridSpec::cube(4), "w", 0);
  const std::vector<double> v(64, 0.25);
  EXPECT_EQ(dump(h, v), dump(h, v));
}

TEST(FieldIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "nstaylor_field_io_test.fld";
  const FieldHeader h = periodic_header(GridSpec::cube(4), "p", 1);
  std::vector<double> v(64);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 0.5 * static_cast<double>(i);
  save_field(path, h, v);
  const FieldRecord rec = load_field(path);
  EXPECT_EQ(rec.values, v);
  std::filesystem::remove(path);
  EXPECT_THROW(load_field(path), std::runtime_error);
}

TEST(FieldIo, FreeSpaceHeaderCarriesOrigin) {
  const FreeSpaceGrid g(2.0, 4, 1.5);
  const FieldHeader h = free_space_header(g, "phi");
  EXPECT_EQ(h.domain, "free-space");
  ASSERT_TRUE(h.origin.has_value());
  EXPECT_DOUBLE_EQ((*h.origin)[0], -1.5);  // first cell centre
  const std::string s = dump(h, g.values());
  EXPECT_NE(s.find("domain:free-space\norigin:-1.5 -1.5 -1.5\n\n"), std::string::npos);
  const FreeSpaceGrid back = to_free_space_grid(parse(s));
  EXPECT_EQ(back.n(), 4);
  EXPECT_DOUBLE_EQ(back.half_width(), 2.0);
  EXPECT_EQ(max_abs_diff(back, g), 0.0);
  EXPECT_THROW(to_grid_field(parse(s)), std::runtime_error);
}

TEST(FieldIo, RejectsCountMismatchOnWrite) {
  const FieldHeader h = periodic_header(GridSpec::cube(4), "p", 0);
  std::ostringstream out;
  EXPECT_THROW(write_field(out, h, std::vector<double>(63)), std::invalid_argument);
}

class FieldIoMalformed : public ::testing::Test {
 protected:
  std::string good = dump(periodic_header(GridSpec::cube(4), "p", 0), std::vector<double>(64, 1.0));
};

TEST_F(FieldIoMalformed, TruncatedPayload) {
  EXPECT_THROW(parse(good.substr(0, good.size() - 3)), std::runtime_error);
}

TEST_F(FieldIoMalformed, TrailingBytes) { EXPECT_THROW(parse(good + "x"), std::runtime_error); }

TEST_F(FieldIoMalformed, UnknownKey) {
  std::string s = good;
  s.insert(s.find("domain:"), "colour:blue\n");
  EXPECT_THROW(parse(s), std::runtime_error);
}

TEST_F(FieldIoMalformed, WrongFormatTag) {
  std::string s = good;
  s.replace(s.find("v1"), 2, "v9");
  EXPECT_THROW(parse(s), std::runtime_error);
}

TEST_F(FieldIoMalformed, MissingTerminator) {
  EXPECT_THROW(parse("format:nstaylor-field-v1\ndims:1 1 1\n"), std::runtime_error);
}

TEST_F(FieldIoMalformed, BadDims) {
  EXPECT_THROW(parse("format:nstaylor-field-v1\ndims:1 0 1\nbox:1 1 1\n\n"), std::runtime_error);
  EXPECT_THROW(parse("format:nstaylor-field-v1\ndims:1 1\nbox:1 1 1\n\n"), std::runtime_error);
}

}  // namespace
}  // namespace nst
