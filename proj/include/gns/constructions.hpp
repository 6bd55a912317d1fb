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

#ifndef GNS_CONSTRUCTIONS_HPP_
#define GNS_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gns/error.hpp"
#include "gns/gns.hpp"
#include "gns/omega.hpp"
#include "gns/point.hpp"

namespace gns {

namespace detail {

// A corner is realizable iff it is the origin, or has no zero coordinate and
// at least one coordinate above 1.
inline bool realizable_corner(const Point& c) {
  if (c.is_zero()) return true;
  bool above_one = false;
  for (int i = 0; i < c.dim(); ++i) {
    if (c[i] == 0) return false;
    above_one = above_one || c[i] > 1;
  }
  return above_one;
}

inline void require_coords_at_least_two(const Point& c, const char* where) {
  for (int i = 0; i < c.dim(); ++i) {
    if (c[i] < 2) {
      throw GnsError(Errc::invalid_corner,
                     std::string(where) + " needs every corner coordinate" +
                         " >= 2, got " + c.to_string());
    }
  }
}

// Gap values of a canonical irreducible numerical semigroup with the given
// conductor c >= 2 (genus is exactly ceil(c/2)):
//   c = 2k     -> gaps {1, 3, 5, ..., 2k-1}      (generated by 2 and 2k+1)
//   c = 2k + 1 -> gaps {1, ..., k} + {2k}
inline std::vector<std::int64_t> irreducible_numerical_gaps(std::int64_t c) {
  std::vector<std::int64_t> out;
  if (c % 2 == 0) {
    for (std::int64_t v = 1; v < c; v += 2) out.push_back(v);
  } else {
    const std::int64_t k = c / 2;
    for (std::int64_t v = 1; v <= k; ++v) out.push_back(v);
    out.push_back(2 * k);
  }
  return out;
}

}  // namespace detail

/// The ordinary semigroup O(c): only the origin survives below the corner,
/// so the gaps are C(c - 1) minus the origin. This is the unique semigroup
/// of maximal genus |c| - 1 for its corner, and the root of the enumeration
/// tree.
inline Gns ordinary(const Point& c) {
  if (!detail::realizable_corner(c)) {
    throw GnsError(Errc::invalid_corner,
                   "no semigroup has corner " + c.to_string());
  }
  if (c.is_zero()) {
    return Gns::from_sorted_gaps_unchecked(c.dim(), {});
  }
  std::vector<Point> gaps;
  scan_box(*sub(c, Point::ones(c.dim())), [&](const Point& p) {
    if (!p.is_zero()) gaps.push_back(p);
    return true;
  });
  return Gns::from_sorted_gaps_unchecked(c.dim(), std::move(gaps));
}

/// A semigroup attaining the least possible genus for corner c (all c_i >= 2):
/// put an irreducible numerical semigroup of conductor c_i on each axis. The
/// genus is the sum of ceil(c_i / 2).
inline Gns min_genus_gns(const Point& c) {
  detail::require_coords_at_least_two(c, "min_genus_gns");
  std::vector<Point> gaps;
  for (int axis = 0; axis < c.dim(); ++axis) {
    for (std::int64_t v : detail::irreducible_numerical_gaps(c[axis])) {
      gaps.push_back(Point::unit(c.dim(), axis, v));
    }
  }
  std::sort(gaps.begin(), gaps.end(), LexLess{});
  return Gns::from_sorted_gaps_unchecked(c.dim(), std::move(gaps));
}

/// Projects the gaps of S onto the axes while preserving the corner and
/// never increasing the genus. Gaps already on an axis stay; a gap h all of
/// whose axis shadows h_j * e_j are gaps themselves is discarded; every
/// other gap maps to h_{j0} * e_{j0} for the least axis j0 with
/// h_{j0} * e_{j0} in S*. Requires every corner coordinate >= 2; in
/// dimension one S is returned unchanged.
inline Gns axes_reduce(const Gns& s) {
  const Point c = s.corner();
  detail::require_coords_at_least_two(c, "axes_reduce");
  if (s.dim() == 1) return s;

  std::set<Point, LexLess> result;
  for (const Point& h : s.gaps()) {
    if (h.on_axis()) {
      result.insert(h);  // H_0
      continue;
    }
    int j0 = -1;
    for (int j = 0; j < s.dim(); ++j) {
      if (h[j] != 0 && s.contains(Point::unit(s.dim(), j, h[j]))) {
        j0 = j;
        break;
      }
    }
    if (j0 >= 0) {
      result.insert(Point::unit(s.dim(), j0, h[j0]));
    }
    // otherwise h is in H_1 and contributes nothing
  }
  return Gns::from_sorted_gaps_unchecked(
      s.dim(), std::vector<Point>(result.begin(), result.end()));
}

/// The semigroup A + O(c) for a subset A of the region Omega_J(c) with J
/// nonempty: its gaps are C(c - 1) minus the origin and minus A. Always a
/// valid semigroup with corner c. This family realizes the lower counting
/// bound.
inline Gns omega_union(const Point& c, const std::vector<int>& axes,
                       const std::vector<Point>& subset) {
  if (c.dim() < 2) {
    throw GnsError(Errc::invalid_corner,
                   "omega_union needs dimension >= 2");
  }
  detail::require_coords_at_least_two(c, "omega_union");
  if (axes.empty()) {
    throw GnsError(Errc::empty_axis_set, "omega_union needs a nonempty J");
  }
  auto region = omega_region(c, axes);
  std::set<Point, LexLess> keep;
  for (const Point& p : subset) {
    if (!std::binary_search(region.begin(), region.end(), p, LexLess{})) {
      throw GnsError(Errc::point_outside_region,
                     p.to_string() + " is outside the requested region");
    }
    keep.insert(p);
  }
  std::vector<Point> gaps;
  scan_box(*sub(c, Point::ones(c.dim())), [&](const Point& p) {
    if (!p.is_zero() && !keep.count(p)) gaps.push_back(p);
    return true;
  });
  return Gns::from_sorted_gaps_unchecked(c.dim(), std::move(gaps));
}

/// Reinserts zero coordinates at `unit_positions` (0-based positions in the
/// result space), lifting a reduced semigroup back to dimension `dim`. The
/// lifted corner carries coordinate 1 at each inserted position.
inline Gns lift_unit_coordinates(const Gns& reduced,
                                 const std::vector<int>& unit_positions,
                                 int dim) {
  std::vector<bool> is_unit(static_cast<std::size_t>(dim), false);
  for (int p : unit_positions) {
    if (p < 0 || p >= dim) {
      throw GnsError(Errc::invalid_axis, "unit position out of range");
    }
    if (is_unit[static_cast<std::size_t>(p)]) {
      throw GnsError(Errc::invalid_axis, "duplicate unit position");
    }
    is_unit[static_cast<std::size_t>(p)] = true;
  }
  if (reduced.dim() + static_cast<int>(unit_positions.size()) != dim) {
    throw GnsError(Errc::dimension_mismatch,
                   "target dimension must equal reduced dimension plus the "
                   "number of unit positions");
  }
  std::vector<Point> gaps;
  gaps.reserve(reduced.gaps().size());
  for (const Point& h : reduced.gaps()) {
    std::vector<Point::value_type> coords(static_cast<std::size_t>(dim), 0);
    int src = 0;
    for (int k = 0; k < dim; ++k) {
      if (!is_unit[static_cast<std::size_t>(k)]) {
        coords[static_cast<std::size_t>(k)] = h[src++];
      }
    }
    gaps.emplace_back(std::move(coords));
  }
  std::sort(gaps.begin(), gaps.end(), LexLess{});
  return Gns::from_sorted_gaps_unchecked(dim, std::move(gaps));
}

}  // namespace gns

#endif  // GNS_CONSTRUCTIONS_HPP_
