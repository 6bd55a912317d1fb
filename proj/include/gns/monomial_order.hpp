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

#ifndef GNS_MONOMIAL_ORDER_HPP_
#define GNS_MONOMIAL_ORDER_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "gns/point.hpp"

namespace gns {

/// The three monomial orders on N_0^d used to shape the enumeration tree.
/// All are total orders extending the natural partial order, translation
/// invariant, with the origin as minimum. Coordinate 0 is the most
/// significant for the (graded) lexicographic tie-breaks.
enum class MonomialOrder {
  lex,
  grlex,    // total degree first, ties by lex
  grevlex,  // total degree first, ties by reverse lexicographic
};

inline const char* order_name(MonomialOrder o) noexcept {
  switch (o) {
    case MonomialOrder::lex: return "lex";
    case MonomialOrder::grlex: return "grlex";
    case MonomialOrder::grevlex: return "grevlex";
  }
  return "unknown";
}

inline std::optional<MonomialOrder> parse_order(std::string_view name) {
  if (name == "lex") return MonomialOrder::lex;
  if (name == "grlex") return MonomialOrder::grlex;
  if (name == "grevlex") return MonomialOrder::grevlex;
  return std::nullopt;
}

namespace detail {

inline std::strong_ordering lex_compare(const Point& a, const Point& b) {
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) {
      return a[i] < b[i] ? std::strong_ordering::less
                         : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

// Graded reverse lexicographic tie-break: at the rightmost coordinate where
// the points differ, the one with the larger entry comes first.
inline std::strong_ordering revlex_tiebreak(const Point& a, const Point& b) {
  for (int i = a.dim() - 1; i >= 0; --i) {
    if (a[i] != b[i]) {
      return a[i] > b[i] ? std::strong_ordering::less
                         : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

inline std::strong_ordering compare(MonomialOrder order, const Point& a,
                                    const Point& b) {
  detail::require_same_dim(a, b, "compare");
  switch (order) {
    case MonomialOrder::lex:
      return detail::lex_compare(a, b);
    case MonomialOrder::grlex: {
      if (a.degree() != b.degree()) {
        return a.degree() < b.degree() ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
      }
      return detail::lex_compare(a, b);
    }
    case MonomialOrder::grevlex: {
      if (a.degree() != b.degree()) {
        return a.degree() < b.degree() ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
      }
      return detail::revlex_tiebreak(a, b);
    }
  }
  throw GnsError(Errc::invalid_axis, "unknown monomial order");
}

/// a comes strictly before b under the given order.
inline bool precedes(MonomialOrder order, const Point& a, const Point& b) {
  return compare(order, a, b) == std::strong_ordering::less;
}

}  // namespace gns

#endif  // GNS_MONOMIAL_ORDER_HPP_
