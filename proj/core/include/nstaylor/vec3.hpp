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

#include <array>
#include <cstddef>

namespace nst {

enum class Axis : int { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

constexpr int index_of(Axis a) noexcept { return static_cast<int>(a); }

/// Three components of a vector quantity, one field per axis.
template <class F>
struct Vec3 {
  std::array<F, 3> c{};

  F& operator[](Axis a) { return c[static_cast<std::size_t>(a)]; }
  const F& operator[](Axis a) const { return c[static_cast<std::size_t>(a)]; }
  F& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const F& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  F& x() { return c[0]; }
  F& y() { return c[1]; }
  F& z() { return c[2]; }
  const F& x() const { return c[0]; }
  const F& y() const { return c[1]; }
  const F& z() const { return c[2]; }

  auto begin() { return c.begin(); }
  auto end() { return c.end(); }
  auto begin() const { return c.begin(); }
  auto end() const { return c.end(); }
};

template <class F>
Vec3<F> make_vec3(F x, F y, F z) {
  return Vec3<F>{{std::move(x), std::move(y), std::move(z)}};
}

using Point = std::array<double, 3>;

}  // namespace nst
