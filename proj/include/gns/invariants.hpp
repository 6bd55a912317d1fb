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

#ifndef GNS_INVARIANTS_HPP_
#define GNS_INVARIANTS_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gns/error.hpp"
#include "gns/gns.hpp"
#include "gns/monomial_order.hpp"
#include "gns/point.hpp"

namespace gns {

/// The sets nabla_i(S, x) = {h in H(S) : h_i = x_i - 1, h_j <= x_j - 1},
/// one per axis. All of them are nonempty exactly when x is the corner.
struct NablaFamily {
  std::vector<std::vector<Point>> by_axis;
};

namespace detail {
inline void require_positive_genus(const Gns& s, const char* where) {
  if (s.genus() == 0) {
    throw GnsError(Errc::zero_genus,
                   std::string(where) + " needs positive genus");
  }
}
}  // namespace detail

/// Pseudo-Frobenius elements: the gaps x with x + S* contained in S,
/// computed as the maximal gaps under the partial order induced by S
/// (h is dominated when another gap h' has h' - h in S*).
inline std::vector<Point> pseudo_frobenius(const Gns& s) {
  detail::require_positive_genus(s, "pseudo_frobenius");
  const auto& gaps = s.gaps();
  std::vector<Point> out;
  for (const Point& h : gaps) {
    bool maximal = true;
    for (const Point& other : gaps) {
      if (&other == &h) continue;
      auto diff = sub(other, h);
      if (diff && !diff->is_zero() && s.contains(*diff)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

/// Special gaps: pseudo-Frobenius elements whose double lies in S. These are
/// exactly the gaps x for which S together with x is again a semigroup.
inline std::vector<Point> special_gaps(const Gns& s) {
  std::vector<Point> out;
  for (const Point& x : pseudo_frobenius(s)) {
    if (s.contains(x + x)) out.push_back(x);
  }
  return out;
}

inline NablaFamily nabla(const Gns& s, const Point& x) {
  if (x.dim() != s.dim()) {
    throw GnsError(Errc::dimension_mismatch, "nabla: dimension mismatch");
  }
  for (const Point& h : s.gaps()) {
    for (int i = 0; i < s.dim(); ++i) {
      if (h[i] > x[i] - 1) {
        throw GnsError(Errc::gap_outside_box,
                       "gap " + h.to_string() + " escapes C(" +
                           x.to_string() + " - 1)");
      }
    }
  }
  NablaFamily fam;
  fam.by_axis.resize(static_cast<std::size_t>(s.dim()));
  for (const Point& h : s.gaps()) {
    for (int i = 0; i < s.dim(); ++i) {
      if (h[i] == x[i] - 1) {
        fam.by_axis[static_cast<std::size_t>(i)].push_back(h);
      }
    }
  }
  return fam;
}

/// True iff c is the corner of S: every gap fits in C(c - 1) and each axis
/// level c_i - 1 is met by some gap. For the full monoid only the origin
/// qualifies. Never throws on containment failure; that case is plain false.
inline bool has_corner(const Gns& s, const Point& c) {
  if (c.dim() != s.dim()) {
    throw GnsError(Errc::dimension_mismatch, "has_corner: dimension mismatch");
  }
  if (s.genus() == 0) return c.is_zero();
  std::vector<bool> level_met(static_cast<std::size_t>(s.dim()), false);
  for (const Point& h : s.gaps()) {
    for (int i = 0; i < s.dim(); ++i) {
      if (h[i] > c[i] - 1) return false;
      if (h[i] == c[i] - 1) level_met[static_cast<std::size_t>(i)] = true;
    }
  }
  return std::all_of(level_met.begin(), level_met.end(),
                     [](bool b) { return b; });
}

/// Small elements L(S): the members of S inside C(c - 1), origin included.
/// `c` must be the corner of S.
inline std::vector<Point> small_elements(const Gns& s, const Point& c) {
  if (c.dim() != s.dim()) {
    throw GnsError(Errc::dimension_mismatch,
                   "small_elements: dimension mismatch");
  }
  if (c.is_zero()) return {};
  std::vector<Point> out;
  scan_box(*sub(c, Point::ones(c.dim())), [&](const Point& p) {
    if (s.contains(p)) out.push_back(p);
    return true;
  });
  return out;
}

/// low(S): the minimum of L(S) \ {0} under the monomial order. Defined only
/// for nonordinary semigroups; it is always a minimal generator.
inline Point low(const Gns& s, MonomialOrder order) {
  if (s.is_ordinary()) {
    throw GnsError(Errc::ordinary_gns,
                   "low is undefined for ordinary semigroups");
  }
  Point c = s.corner();
  std::optional<Point> best;
  scan_box(*sub(c, Point::ones(c.dim())), [&](const Point& p) {
    if (p.is_zero() || !s.contains(p)) return true;
    if (!best || precedes(order, p, *best)) best = p;
    return true;
  });
  return *best;  // nonordinary guarantees a nonzero small element
}

/// D_prec(S): the special gaps whose adjunction preserves the corner (no
/// nabla set collapses to exactly {x}) and which precede every nonzero small
/// element under the order. These index the children of S in the tree; the
/// result is sorted by the order.
inline std::vector<Point> candidate_gaps(const Gns& s, MonomialOrder order) {
  detail::require_positive_genus(s, "candidate_gaps");
  const Point c = s.corner();
  const auto& gaps = s.gaps();

  // Per axis: how many gaps sit at level c_i - 1. If x is the only one on
  // some axis, filling it would shrink the corner, so it is excluded.
  const int d = s.dim();
  std::vector<int> level_count(static_cast<std::size_t>(d), 0);
  for (const Point& h : gaps) {
    for (int i = 0; i < d; ++i) {
      if (h[i] == c[i] - 1) ++level_count[static_cast<std::size_t>(i)];
    }
  }

  std::vector<Point> out;
  for (const Point& x : special_gaps(s)) {
    bool blocks_corner = false;
    for (int i = 0; i < d && !blocks_corner; ++i) {
      blocks_corner = x[i] == c[i] - 1 &&
                      level_count[static_cast<std::size_t>(i)] == 1;
    }
    if (!blocks_corner) out.push_back(x);
  }
  if (!s.is_ordinary()) {
    Point lw = low(s, order);
    std::erase_if(out, [&](const Point& x) { return !precedes(order, x, lw); });
  }
  std::sort(out.begin(), out.end(), [&](const Point& a, const Point& b) {
    return precedes(order, a, b);
  });
  return out;
}

/// True iff x is a minimal generator: x in S*, not a sum of two elements of
/// S*. Decided by a finite scan of the decompositions inside C(x).
inline bool is_minimal_generator(const Gns& s, const Point& x) {
  if (x.dim() != s.dim() || x.is_zero() || !s.contains(x)) {
    throw GnsError(Errc::not_member,
                   "minimal-generator query needs a nonzero member of S");
  }
  bool decomposable = false;
  scan_box(x, [&](const Point& a) {
    if (a.is_zero() || a == x) return true;
    if (s.contains(a) && s.contains(*sub(x, a))) {
      decomposable = true;
      return false;
    }
    return true;
  });
  return !decomposable;
}

/// Unitary extension S + {x}: fills the special gap x, shrinking the gap set
/// by one. The corner is preserved exactly when x stays in candidate_gaps'
/// nabla condition; callers that need corner stability should consult
/// candidate_gaps instead.
inline Gns fill_gap(const Gns& s, const Point& x) {
  auto sg = special_gaps(s);
  if (std::find(sg.begin(), sg.end(), x) == sg.end()) {
    throw GnsError(Errc::not_special_gap,
                   x.to_string() + " is not a special gap");
  }
  std::vector<Point> gaps = s.gaps();
  auto it = std::lower_bound(gaps.begin(), gaps.end(), x, LexLess{});
  gaps.erase(it);
  return Gns::from_sorted_gaps_unchecked(s.dim(), std::move(gaps));
}

/// Unitary removal S - {x} for a minimal generator x: the element becomes a
/// gap. The corner is preserved exactly when x <= corner - 1.
inline Gns remove_generator(const Gns& s, const Point& x) {
  if (x.dim() != s.dim() || x.is_zero() || !s.contains(x)) {
    throw GnsError(Errc::not_member,
                   "removal needs a nonzero member of S");
  }
  if (!is_minimal_generator(s, x)) {
    throw GnsError(Errc::not_minimal_generator,
                   x.to_string() + " is not a minimal generator");
  }
  std::vector<Point> gaps = s.gaps();
  gaps.insert(std::lower_bound(gaps.begin(), gaps.end(), x, LexLess{}), x);
  return Gns::from_sorted_gaps_unchecked(s.dim(), std::move(gaps));
}

}  // namespace gns

#endif  // GNS_INVARIANTS_HPP_
