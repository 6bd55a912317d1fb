// Copyright 2026 The gns-corner Authors
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

#ifndef GNS_OMEGA_HPP_
#define GNS_OMEGA_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "gns/error.hpp"
#include "gns/point.hpp"

namespace gns {

// The 2^d half-open sub-boxes Omega_J(c) that partition C(c - 1), indexed by
// the subset J of axes whose coordinate reaches the upper half:
//   x in Omega_J(c)  iff  ceil(c_j/2) <= x_j <= c_j - 1 for j in J
//                    and  x_i < ceil(c_i/2)             for i not in J.
// Axis subsets are sorted, duplicate-free 0-based index lists.

namespace detail {

inline void require_axis_subset(int dim, const std::vector<int>& axes) {
  int prev = -1;
  for (int a : axes) {
    if (a < 0 || a >= dim) {
      throw GnsError(Errc::invalid_axis, "axis index out of range");
    }
    if (a <= prev) {
      throw GnsError(Errc::invalid_axis,
                     "axis subset must be strictly increasing");
    }
    prev = a;
  }
}

inline void require_positive_corner(const Point& c) {
  for (int i = 0; i < c.dim(); ++i) {
    if (c[i] < 1) {
      throw GnsError(Errc::invalid_corner,
                     "omega regions need every coordinate >= 1, got " +
                         c.to_string());
    }
  }
}

inline std::int64_t half_up(std::int64_t v) { return (v + 1) / 2; }

// Which region the point belongs to, as a bitmask over axes.
inline std::uint64_t omega_mask_of(const Point& c, const Point& x) {
  std::uint64_t m = 0;
  for (int i = 0; i < c.dim(); ++i) {
    if (x[i] >= half_up(c[i])) m |= (std::uint64_t{1} << i);
  }
  return m;
}

}  // namespace detail

/// The region Omega_J(c), in lexicographic order.
inline std::vector<Point> omega_region(const Point& c,
                                       const std::vector<int>& axes) {
  detail::require_positive_corner(c);
  detail::require_axis_subset(c.dim(), axes);
  std::uint64_t want = 0;
  for (int a : axes) want |= (std::uint64_t{1} << a);
  std::vector<Point> out;
  Point top = *sub(c, Point::ones(c.dim()));
  scan_box(top, [&](const Point& x) {
    if (detail::omega_mask_of(c, x) == want) out.push_back(x);
    return true;
  });
  return out;
}

/// All 2^d regions keyed by their axis subset. Together they partition
/// C(c - 1) into pairwise disjoint pieces.
inline std::map<std::vector<int>, std::vector<Point>> omega_decomposition(
    const Point& c) {
  detail::require_positive_corner(c);
  std::map<std::vector<int>, std::vector<Point>> out;
  const int d = c.dim();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
    std::vector<int> axes;
    for (int a = 0; a < d; ++a) {
      if (m & (std::uint64_t{1} << a)) axes.push_back(a);
    }
    out.emplace(std::move(axes), std::vector<Point>{});
  }
  Point top = *sub(c, Point::ones(d));
  scan_box(top, [&](const Point& x) {
    std::uint64_t m = detail::omega_mask_of(c, x);
    std::vector<int> axes;
    for (int a = 0; a < d; ++a) {
      if (m & (std::uint64_t{1} << a)) axes.push_back(a);
    }
    out[axes].push_back(x);
    return true;
  });
  return out;
}

}  // namespace gns

#endif  // GNS_OMEGA_HPP_
