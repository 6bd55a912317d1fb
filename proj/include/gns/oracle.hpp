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

#ifndef GNS_ORACLE_HPP_
#define GNS_ORACLE_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gns/enumeration.hpp"  // EnumerationReport only
#include "gns/error.hpp"
#include "gns/gns.hpp"
#include "gns/point.hpp"

namespace gns {

// Ground truth by exhaustion: every semigroup with corner c has its gaps
// inside C(c - 1), so walking all subsets of that box and keeping the ones
// whose complement is closed and whose gaps reach level c_i - 1 on every
// axis enumerates the family exactly. Closure and corner tests here are
// written from the definitions and deliberately share no logic with the
// tree traversal; this module exists to be obviously correct, not fast.

inline constexpr std::int64_t kDefaultOracleBudget = 20;

namespace detail {

struct OracleTables {
  std::vector<Point> pts;  // box points, lex order; pts[0] is the origin
  // Per point index k >= 1: all pairs (i, j), i <= j, i,j >= 1, with
  // pts[i] + pts[j] == pts[k].
  std::vector<std::vector<std::pair<int, int>>> decompositions;
  std::vector<std::uint64_t> axis_level_mask;  // per axis, bit (k-1)
};

inline OracleTables make_oracle_tables(const Point& c) {
  OracleTables t;
  t.pts = box_points(*sub(c, Point::ones(c.dim())));
  const int m = static_cast<int>(t.pts.size());
  t.decompositions.resize(static_cast<std::size_t>(m));
  for (int i = 1; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const Point s = t.pts[static_cast<std::size_t>(i)] +
                      t.pts[static_cast<std::size_t>(j)];
      bool inside = true;
      for (int k = 0; k < c.dim(); ++k) {
        if (s[k] > c[k] - 1) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      const auto it = std::lower_bound(t.pts.begin(), t.pts.end(), s,
                                       LexLess{});
      const int k = static_cast<int>(it - t.pts.begin());
      t.decompositions[static_cast<std::size_t>(k)].emplace_back(i, j);
    }
  }
  t.axis_level_mask.assign(static_cast<std::size_t>(c.dim()), 0);
  for (int k = 1; k < m; ++k) {
    for (int a = 0; a < c.dim(); ++a) {
      if (t.pts[static_cast<std::size_t>(k)][a] == c[a] - 1) {
        t.axis_level_mask[static_cast<std::size_t>(a)] |=
            (std::uint64_t{1} << (k - 1));
      }
    }
  }
  return t;
}

}  // namespace detail

/// Emits every semigroup with corner c by exhausting the subsets of
/// C(c - 1) minus the origin in binary-counter order. Throws when |c|
/// exceeds the budget (default 20, that is at most 2^19 candidates).
inline void brute_enumerate(const Point& c,
                            const std::function<void(const Gns&)>& sink,
                            std::int64_t budget = kDefaultOracleBudget) {
  if (c.is_zero()) {
    sink(Gns::from_sorted_gaps_unchecked(c.dim(), {}));
    return;
  }
  for (int i = 0; i < c.dim(); ++i) {
    if (c[i] == 0) return;  // positive-genus corners have no zero coordinate
  }
  const std::int64_t m = coord_product(c);
  if (m > budget) {
    throw GnsError(Errc::budget_exceeded,
                   "oracle budget " + std::to_string(budget) +
                       " exceeded by |c| = " + std::to_string(m));
  }
  if (m > 63) {
    throw GnsError(Errc::budget_exceeded, "oracle supports |c| <= 63");
  }
  const auto tables = detail::make_oracle_tables(c);
  const int bits = static_cast<int>(m) - 1;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    // Corner condition (2): some gap at level c_a - 1 on every axis.
    bool corner_ok = true;
    for (int a = 0; a < c.dim() && corner_ok; ++a) {
      corner_ok =
          (mask & tables.axis_level_mask[static_cast<std::size_t>(a)]) != 0;
    }
    if (!corner_ok) continue;
    // Closure: no gap decomposes into two complement elements.
    bool closed = true;
    for (std::uint64_t rest = mask; rest != 0 && closed; rest &= rest - 1) {
      const int k = std::countr_zero(rest) + 1;
      for (const auto& [i, j] : tables.decompositions[k]) {
        const bool i_gap = (mask >> (i - 1)) & 1;
        const bool j_gap = (mask >> (j - 1)) & 1;
        if (!i_gap && !j_gap) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<Point> gaps;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      gaps.push_back(tables.pts[std::countr_zero(rest) + 1]);
    }
    sink(Gns::from_sorted_gaps_unchecked(c.dim(), std::move(gaps)));
  }
}

inline std::vector<Gns> brute_enumerate(
    const Point& c, std::int64_t budget = kDefaultOracleBudget) {
  std::vector<Gns> out;
  brute_enumerate(c, [&](const Gns& s) { out.push_back(s); }, budget);
  return out;
}

/// Exact count plus per-genus histogram, by exhaustion. In the report,
/// nodes_expanded is the number of candidate subsets examined and the order
/// field is meaningless (the oracle has no tree).
inline EnumerationReport brute_count(
    const Point& c, std::int64_t budget = kDefaultOracleBudget) {
  EnumerationReport report;
  report.corner = c;
  brute_enumerate(
      c,
      [&](const Gns& s) {
        ++report.genus_histogram[s.genus()];
        report.total += 1;
      },
      budget);
  if (!c.is_zero()) {
    bool realizable = true;
    for (int i = 0; i < c.dim(); ++i) realizable = realizable && c[i] > 0;
    if (realizable) {
      report.nodes_expanded =
          std::uint64_t{1} << (static_cast<int>(coord_product(c)) - 1);
    }
  } else {
    report.nodes_expanded = 1;
  }
  return report;
}

}  // namespace gns

#endif  // GNS_ORACLE_HPP_
