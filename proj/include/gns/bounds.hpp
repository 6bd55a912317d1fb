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

#ifndef GNS_BOUNDS_HPP_
#define GNS_BOUNDS_HPP_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gns/bigint.hpp"
#include "gns/error.hpp"
#include "gns/point.hpp"

namespace gns {

// Closed-form lower/upper bounds on N(c), the number of semigroups with
// corner c, plus the exact genus range. All formulas assume dimension >= 2
// (except the genus range and the dedicated d = 1 bounds) and every corner
// coordinate >= 2; unit coordinates must be erased by the caller first.

/// Everything known about the corner c without enumerating:
/// n_values maps each nonempty axis subset J (0-based, sorted) to
/// n_J = prod_{j in J} floor(c_j/2) * prod_{t not in J} ceil(c_t/2).
struct BoundsReport {
  Point corner;
  BigInt box_size;          // |c|
  BigInt omega_empty_size;  // prod ceil(c_i / 2)
  std::map<std::vector<int>, BigInt> n_values;
  BigInt lower;
  BigInt upper;
  BigInt genus_min;  // sum ceil(c_i / 2)
  BigInt genus_max;  // |c| - 1
};

namespace detail {

inline void require_coords_at_least_two_bounds(const Point& c,
                                               const char* where) {
  for (int i = 0; i < c.dim(); ++i) {
    if (c[i] < 2) {
      throw GnsError(Errc::invalid_corner,
                     std::string(where) +
                         " is undefined for corner coordinates below 2: " +
                         c.to_string());
    }
  }
}

inline void require_bound_corner(const Point& c, const char* where,
                                 bool need_dim2) {
  if (need_dim2 && c.dim() < 2) {
    throw GnsError(Errc::invalid_corner,
                   std::string(where) + " needs dimension >= 2");
  }
  require_coords_at_least_two_bounds(c, where);
}

inline BigInt pow2(const BigInt& exp) {
  return BigInt(1) << static_cast<std::size_t>(exp);
}

}  // namespace detail

/// n_J for one axis subset (0-based, strictly increasing indices).
inline BigInt n_value(const Point& c, const std::vector<int>& axes) {
  detail::require_coords_at_least_two_bounds(c, "n_value");
  int prev = -1;
  for (int a : axes) {
    if (a < 0 || a >= c.dim() || a <= prev) {
      throw GnsError(Errc::invalid_axis, "bad axis subset");
    }
    prev = a;
  }
  BigInt n = 1;
  std::size_t k = 0;
  for (int i = 0; i < c.dim(); ++i) {
    if (k < axes.size() && axes[k] == i) {
      n *= c[i] / 2;  // floor
      ++k;
    } else {
      n *= (c[i] + 1) / 2;  // ceil
    }
  }
  return n;
}

/// N(c) >= 1 + sum over nonempty J of (2^{n_J} - 1).
inline BigInt lower_bound(const Point& c) {
  detail::require_bound_corner(c, "lower_bound", /*need_dim2=*/true);
  const int d = c.dim();
  BigInt total = 1;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << d); ++m) {
    std::vector<int> axes;
    for (int a = 0; a < d; ++a) {
      if (m & (std::uint64_t{1} << a)) axes.push_back(a);
    }
    total += detail::pow2(n_value(c, axes)) - 1;
  }
  return total;
}

/// N(c) <= 2^{|c|-1} - (2^{|Omega_empty|-1} - 1) * 2^{|c|-|Omega_empty|-1}.
inline BigInt upper_bound(const Point& c) {
  detail::require_bound_corner(c, "upper_bound", /*need_dim2=*/true);
  BigInt box = 1;
  BigInt omega0 = 1;
  for (int i = 0; i < c.dim(); ++i) {
    box *= c[i];
    omega0 *= (c[i] + 1) / 2;
  }
  return detail::pow2(box - 1) -
         (detail::pow2(omega0 - 1) - 1) * detail::pow2(box - omega0 - 1);
}

/// The exact set of genera achieved with corner c is the full interval
/// [sum ceil(c_i/2), |c| - 1]; this returns its endpoints.
inline std::pair<BigInt, BigInt> genus_range(const Point& c) {
  detail::require_bound_corner(c, "genus_range", /*need_dim2=*/false);
  BigInt lo = 0;
  BigInt box = 1;
  for (int i = 0; i < c.dim(); ++i) {
    lo += (c[i] + 1) / 2;
    box *= c[i];
  }
  return {lo, box - 1};
}

/// Backelin's bounds for dimension one: the number of numerical semigroups
/// with conductor c satisfies
///   2^{floor((c-2)/2)} <= N(c) <= 4 * 2^{floor((c-2)/2)}.
inline std::pair<BigInt, BigInt> d1_bounds(std::int64_t conductor) {
  if (conductor < 2) {
    throw GnsError(Errc::invalid_corner,
                   "d1_bounds needs a conductor >= 2");
  }
  BigInt base = detail::pow2(BigInt((conductor - 2) / 2));
  return {base, 4 * base};
}

inline BoundsReport bounds_report(const Point& c) {
  detail::require_bound_corner(c, "bounds_report", /*need_dim2=*/true);
  BoundsReport r;
  r.corner = c;
  r.box_size = 1;
  r.omega_empty_size = 1;
  for (int i = 0; i < c.dim(); ++i) {
    r.box_size *= c[i];
    r.omega_empty_size *= (c[i] + 1) / 2;
  }
  const int d = c.dim();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << d); ++m) {
    std::vector<int> axes;
    for (int a = 0; a < d; ++a) {
      if (m & (std::uint64_t{1} << a)) axes.push_back(a);
    }
    BigInt n = n_value(c, axes);
    r.n_values.emplace(std::move(axes), std::move(n));
  }
  r.lower = lower_bound(c);
  r.upper = upper_bound(c);
  auto [lo, hi] = genus_range(c);
  r.genus_min = lo;
  r.genus_max = hi;
  return r;
}

}  // namespace gns

#endif  // GNS_BOUNDS_HPP_
