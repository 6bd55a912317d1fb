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

#ifndef GNS_GNS_HPP_
#define GNS_GNS_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gns/error.hpp"
#include "gns/point.hpp"

namespace gns {

/// A witness that a candidate gap set does not describe a monoid: two
/// complement elements a + b landing on the gap `sum`.
struct ClosureWitness {
  Point a;
  Point b;
  Point sum;

  friend bool operator==(const ClosureWitness&, const ClosureWitness&) =
      default;
};

class NotClosedError : public GnsError {
 public:
  NotClosedError(ClosureWitness w, const std::string& what)
      : GnsError(Errc::not_closed, what), witness_(std::move(w)) {}

  const ClosureWitness& witness() const noexcept { return witness_; }

 private:
  ClosureWitness witness_;
};

namespace detail {

// First closure violation in deterministic scan order (gaps ascending by
// lex, decompositions ascending by lex of the first summand), or nullopt if
// the complement is closed under addition. `sorted_gaps` must be lex-sorted
// and duplicate-free with the origin absent.
//
// Soundness of the bounded scan: if a + b = h with a, b nonzero, then both
// summands lie in C(h), so scanning C(h) finds every decomposition.
inline std::optional<ClosureWitness> closure_violation_sorted(
    const std::vector<Point>& sorted_gaps) {
  auto is_gap = [&](const Point& p) {
    return std::binary_search(sorted_gaps.begin(), sorted_gaps.end(), p,
                              LexLess{});
  };
  for (const Point& h : sorted_gaps) {
    std::optional<ClosureWitness> found;
    scan_box(h, [&](const Point& a) {
      if (a.is_zero() || a == h) return true;
      Point b = *sub(h, a);
      if (!is_gap(a) && !is_gap(b)) {
        found = ClosureWitness{a, b, h};
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

inline std::vector<Point> canonicalize_gaps(int dim,
                                            std::vector<Point> gaps) {
  if (dim < 1) {
    throw GnsError(Errc::dimension_mismatch, "dimension must be positive");
  }
  for (const Point& g : gaps) {
    if (g.dim() != dim) {
      throw GnsError(Errc::dimension_mismatch,
                     "gap " + g.to_string() + " does not have dimension " +
                         std::to_string(dim));
    }
    if (g.is_zero()) {
      throw GnsError(Errc::zero_in_gaps, "the origin cannot be a gap");
    }
  }
  std::sort(gaps.begin(), gaps.end(), LexLess{});
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  return gaps;
}

}  // namespace detail

/// A generalized numerical semigroup S of N_0^d, represented by its finite
/// gap set H(S) in canonical form (lex-sorted, duplicate-free). The value is
/// immutable; use make_gns to construct a validated instance.
class Gns {
 public:
  /// Validates and canonicalizes: the origin must be absent, every gap must
  /// have the right dimension and the complement must be closed under
  /// addition (otherwise NotClosedError carries a witness).
  static Gns validated(int dim, std::vector<Point> gaps) {
    auto canon = detail::canonicalize_gaps(dim, std::move(gaps));
    if (auto w = detail::closure_violation_sorted(canon)) {
      throw NotClosedError(
          *w, "complement not closed: " + w->a.to_string() + " + " +
                  w->b.to_string() + " = " + w->sum.to_string() +
                  " is a gap while both summands are not");
    }
    return Gns(dim, std::move(canon));
  }

  /// Trusted constructor for gap sets already known to be canonical and
  /// closed (tree traversal, theorem-backed constructions). No validation.
  static Gns from_sorted_gaps_unchecked(int dim, std::vector<Point> gaps) {
    return Gns(dim, std::move(gaps));
  }

  int dim() const { return dim_; }

  const std::vector<Point>& gaps() const { return gaps_; }

  std::int64_t genus() const { return static_cast<std::int64_t>(gaps_.size()); }

  bool contains(const Point& x) const {
    if (x.dim() != dim_) {
      throw GnsError(Errc::dimension_mismatch,
                     "membership query of wrong dimension");
    }
    return !std::binary_search(gaps_.begin(), gaps_.end(), x, LexLess{});
  }

  /// The unique corner element: lub(H(S)) + 1 for positive genus, the origin
  /// for the full monoid.
  Point corner() const {
    if (gaps_.empty()) return Point::zero(dim_);
    return lub(gaps_) + Point::ones(dim_);
  }

  /// Frobenius classification: the gap set has a unique maximal element,
  /// equivalently corner - 1 is itself a gap. Undefined at genus zero.
  bool is_frobenius() const {
    if (gaps_.empty()) {
      throw GnsError(Errc::zero_genus,
                     "Frobenius classification needs positive genus");
    }
    return !contains(*sub(corner(), Point::ones(dim_)));
  }

  /// An ordinary semigroup keeps only the origin below its corner. The full
  /// monoid counts as ordinary (corner at the origin).
  bool is_ordinary() const {
    if (gaps_.empty()) return true;
    return genus() == coord_product(corner()) - 1;
  }

  friend bool operator==(const Gns&, const Gns&) = default;

 private:
  Gns(int dim, std::vector<Point> gaps)
      : dim_(dim), gaps_(std::move(gaps)) {}

  int dim_ = 0;
  std::vector<Point> gaps_;
};

/// Canonical validated constructor; see Gns::validated.
inline Gns make_gns(int dim, std::vector<Point> gaps) {
  return Gns::validated(dim, std::move(gaps));
}

/// Checks whether N_0^d minus `gaps` is closed under addition; on failure
/// returns the first witness in deterministic scan order. The origin must
/// not appear among the gaps.
inline std::optional<ClosureWitness> closure_violation(
    int dim, std::vector<Point> gaps) {
  return detail::closure_violation_sorted(
      detail::canonicalize_gaps(dim, std::move(gaps)));
}

inline bool is_closed_complement(int dim, std::vector<Point> gaps) {
  return !closure_violation(dim, std::move(gaps)).has_value();
}

}  // namespace gns

#endif  // GNS_GNS_HPP_
