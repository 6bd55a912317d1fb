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

#ifndef GNS_ENUMERATION_HPP_
#define GNS_ENUMERATION_HPP_

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "gns/bigint.hpp"
#include "gns/constructions.hpp"
#include "gns/error.hpp"
#include "gns/gns.hpp"
#include "gns/invariants.hpp"
#include "gns/monomial_order.hpp"
#include "gns/point.hpp"

namespace gns {

// Every semigroup with corner c arises exactly once in a rooted tree: the
// root is the ordinary semigroup O(c), a node S has one child S + {x} per
// x in candidate_gaps(S), and the parent of a nonordinary node is obtained
// by removing low(S). Traversing the tree therefore enumerates C(c) without
// repetition. Distinct subtrees are independent, so counting parallelizes
// by splitting the frontier.

/// Exact count of the family with a fixed corner, with its per-genus
/// histogram and traversal statistics. Counts are schedule-independent:
/// the same report is produced for any number of workers and any of the
/// three monomial orders.
struct EnumerationReport {
  Point corner;
  MonomialOrder order = MonomialOrder::lex;
  BigInt total = 0;
  std::map<std::int64_t, std::uint64_t> genus_histogram;
  std::int64_t max_depth = 0;
  std::uint64_t nodes_expanded = 0;
};

struct EnumerateOptions {
  std::optional<std::int64_t> genus_min;
  std::optional<std::int64_t> genus_max;
  std::optional<std::int64_t> depth_limit;
  unsigned jobs = 1;
  // Literal level-by-level traversal; the visited set is identical to the
  // default depth-first strategy, only the stream order changes.
  bool breadth_first = false;
};

namespace detail {

inline void require_realizable_corner(const Point& c) {
  if (!realizable_corner(c)) {
    throw GnsError(Errc::unrealizable_corner,
                   "no semigroup has corner " + c.to_string());
  }
}

// Unit coordinates carry no gaps; the tree is walked in the reduced space
// and results are lifted back.
struct CornerReduction {
  int full_dim = 0;
  std::vector<int> unit_positions;
  Point reduced;
};

inline CornerReduction split_unit_coordinates(const Point& c) {
  CornerReduction red;
  red.full_dim = c.dim();
  std::vector<Point::value_type> rest;
  for (int i = 0; i < c.dim(); ++i) {
    if (c[i] == 1) {
      red.unit_positions.push_back(i);
    } else {
      rest.push_back(c[i]);
    }
  }
  red.reduced = Point(std::move(rest));
  return red;
}

// Precomputed geometry of the box C(c - 1): points are identified by their
// lexicographic rank, and everything the per-node work needs is table
// lookups on ranks.
struct TreeContext {
  Point corner;
  MonomialOrder order = MonomialOrder::lex;
  int dim = 0;
  std::int32_t m = 0;                      // |c| = number of box points
  std::vector<std::int64_t> flat;          // m * dim coordinates, rank-major
  std::vector<std::int64_t> stride;        // rank = sum coord[k] * stride[k]
  std::vector<std::int32_t> double_rank;   // rank of 2p, or -1 if outside
  std::vector<std::int32_t> prec_pos;      // rank -> position under the order
  std::vector<std::int32_t> by_prec;       // position -> rank
  std::vector<std::uint64_t> axis_hit;     // bit i: coord i equals c_i - 1

  const std::int64_t* coords(std::int32_t r) const {
    return flat.data() + static_cast<std::size_t>(r) * dim;
  }

  // Rank of pts[hi] - pts[lo], or -1 when the difference leaves N_0^d.
  std::int32_t diff_rank(std::int32_t hi, std::int32_t lo) const {
    const std::int64_t* a = coords(hi);
    const std::int64_t* b = coords(lo);
    std::int64_t r = 0;
    for (int k = 0; k < dim; ++k) {
      const std::int64_t dk = a[k] - b[k];
      if (dk < 0) return -1;
      r += dk * stride[k];
    }
    return static_cast<std::int32_t>(r);
  }

  Point point_at(std::int32_t r) const {
    const std::int64_t* a = coords(r);
    return Point(std::vector<std::int64_t>(a, a + dim));
  }
};

inline TreeContext make_tree_context(const Point& reduced_corner,
                                     MonomialOrder order) {
  TreeContext ctx;
  ctx.corner = reduced_corner;
  ctx.order = order;
  ctx.dim = reduced_corner.dim();
  if (ctx.dim > 64) {
    throw GnsError(Errc::budget_exceeded, "dimension above 64 not supported");
  }
  const std::int64_t m64 = coord_product(reduced_corner);
  if (m64 > std::numeric_limits<std::int32_t>::max()) {
    throw GnsError(Errc::budget_exceeded,
                   "box " + reduced_corner.to_string() +
                       " too large to enumerate");
  }
  ctx.m = static_cast<std::int32_t>(m64);

  ctx.stride.assign(static_cast<std::size_t>(ctx.dim), 1);
  for (int k = ctx.dim - 2; k >= 0; --k) {
    ctx.stride[static_cast<std::size_t>(k)] =
        ctx.stride[static_cast<std::size_t>(k + 1)] * reduced_corner[k + 1];
  }

  ctx.flat.reserve(static_cast<std::size_t>(ctx.m) * ctx.dim);
  ctx.axis_hit.assign(static_cast<std::size_t>(ctx.m), 0);
  ctx.double_rank.assign(static_cast<std::size_t>(ctx.m), -1);
  Point top = *sub(reduced_corner, Point::ones(ctx.dim));
  std::int32_t rank = 0;
  scan_box(top, [&](const Point& p) {
    std::uint64_t hit = 0;
    bool dbl_inside = true;
    std::int64_t dbl = 0;
    for (int k = 0; k < ctx.dim; ++k) {
      ctx.flat.push_back(p[k]);
      if (p[k] == reduced_corner[k] - 1) hit |= (std::uint64_t{1} << k);
      if (2 * p[k] >= reduced_corner[k]) {
        dbl_inside = false;
      } else {
        dbl += 2 * p[k] * ctx.stride[static_cast<std::size_t>(k)];
      }
    }
    ctx.axis_hit[static_cast<std::size_t>(rank)] = hit;
    if (dbl_inside) {
      ctx.double_rank[static_cast<std::size_t>(rank)] =
          static_cast<std::int32_t>(dbl);
    }
    ++rank;
    return true;
  });

  ctx.by_prec.resize(static_cast<std::size_t>(ctx.m));
  for (std::int32_t r = 0; r < ctx.m; ++r) ctx.by_prec[r] = r;
  std::sort(ctx.by_prec.begin(), ctx.by_prec.end(),
            [&](std::int32_t a, std::int32_t b) {
              return precedes(order, ctx.point_at(a), ctx.point_at(b));
            });
  ctx.prec_pos.resize(static_cast<std::size_t>(ctx.m));
  for (std::int32_t p = 0; p < ctx.m; ++p) ctx.prec_pos[ctx.by_prec[p]] = p;
  return ctx;
}

// One tree node: the gap set as ascending ranks plus a membership bitmap.
struct TreeNode {
  std::vector<std::int32_t> gaps;
  std::vector<char> is_gap;

  TreeNode child_without(std::int32_t r) const {
    TreeNode c;
    c.gaps.reserve(gaps.size() - 1);
    for (std::int32_t g : gaps) {
      if (g != r) c.gaps.push_back(g);
    }
    c.is_gap = is_gap;
    c.is_gap[static_cast<std::size_t>(r)] = 0;
    return c;
  }
};

inline TreeNode make_root(const TreeContext& ctx) {
  TreeNode root;
  root.gaps.resize(static_cast<std::size_t>(ctx.m) - 1);
  for (std::int32_t r = 1; r < ctx.m; ++r) root.gaps[r - 1] = r;
  root.is_gap.assign(static_cast<std::size_t>(ctx.m), 1);
  root.is_gap[0] = 0;
  return root;
}

// Ranks of the gaps whose filling produces the children of this node,
// ordered by the monomial order.
inline std::vector<std::int32_t> child_ranks(const TreeContext& ctx,
                                             const TreeNode& node) {
  std::vector<int> level_count(static_cast<std::size_t>(ctx.dim), 0);
  for (std::int32_t r : node.gaps) {
    std::uint64_t mask = ctx.axis_hit[static_cast<std::size_t>(r)];
    while (mask != 0) {
      ++level_count[static_cast<std::size_t>(std::countr_zero(mask))];
      mask &= mask - 1;
    }
  }

  std::vector<std::int32_t> cand;
  const auto& gaps = node.gaps;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const std::int32_t r = gaps[i];
    // Maximal gap: no later gap differs from it by a semigroup element.
    bool maximal = true;
    for (std::size_t j = i + 1; j < gaps.size(); ++j) {
      const std::int32_t dr = ctx.diff_rank(gaps[j], r);
      if (dr >= 0 && !node.is_gap[static_cast<std::size_t>(dr)]) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    // Special gap: the double lies in the semigroup.
    const std::int32_t d2 = ctx.double_rank[static_cast<std::size_t>(r)];
    if (d2 >= 0 && node.is_gap[static_cast<std::size_t>(d2)]) continue;
    // Filling r must not vacate any axis level c_i - 1.
    std::uint64_t mask = ctx.axis_hit[static_cast<std::size_t>(r)];
    bool blocked = false;
    while (mask != 0) {
      if (level_count[static_cast<std::size_t>(std::countr_zero(mask))] == 1) {
        blocked = true;
        break;
      }
      mask &= mask - 1;
    }
    if (blocked) continue;
    cand.push_back(r);
  }

  // Nonordinary nodes only accept gaps preceding low(S).
  std::int32_t low_pos = -1;
  for (std::int32_t p = 1; p < ctx.m; ++p) {
    if (!node.is_gap[static_cast<std::size_t>(ctx.by_prec[p])]) {
      low_pos = p;
      break;
    }
  }
  if (low_pos >= 0) {
    std::erase_if(cand, [&](std::int32_t r) {
      return ctx.prec_pos[static_cast<std::size_t>(r)] >= low_pos;
    });
  }
  std::sort(cand.begin(), cand.end(), [&](std::int32_t a, std::int32_t b) {
    return ctx.prec_pos[static_cast<std::size_t>(a)] <
           ctx.prec_pos[static_cast<std::size_t>(b)];
  });
  return cand;
}

struct TraversalFilters {
  std::int64_t genus_min = -1;   // -1: none
  std::int64_t genus_max = -1;   // -1: none
  std::int64_t depth_limit = -1; // -1: none
};

struct TraversalStats {
  std::map<std::int64_t, std::uint64_t> genus_histogram;
  std::int64_t max_depth = 0;
  std::uint64_t nodes_expanded = 0;

  void merge(const TraversalStats& other) {
    for (const auto& [g, n] : other.genus_histogram) genus_histogram[g] += n;
    max_depth = std::max(max_depth, other.max_depth);
    nodes_expanded += other.nodes_expanded;
  }
};

// Walks the subtree rooted at `root`. Emit is invoked for every node that
// passes the filters; expansion stops below genus_min or beyond the depth
// limit, which prunes whole subtrees (children always have genus one less
// than their parent).
template <typename Emit>
void traverse_subtree(const TreeContext& ctx, TreeNode root,
                      std::int64_t root_depth, bool breadth_first,
                      const TraversalFilters& f, TraversalStats& stats,
                      Emit&& emit) {
  std::deque<std::pair<TreeNode, std::int64_t>> work;
  work.emplace_back(std::move(root), root_depth);
  while (!work.empty()) {
    TreeNode node;
    std::int64_t depth;
    if (breadth_first) {
      node = std::move(work.front().first);
      depth = work.front().second;
      work.pop_front();
    } else {
      node = std::move(work.back().first);
      depth = work.back().second;
      work.pop_back();
    }
    const auto genus = static_cast<std::int64_t>(node.gaps.size());
    stats.max_depth = std::max(stats.max_depth, depth);
    if ((f.genus_min < 0 || genus >= f.genus_min) &&
        (f.genus_max < 0 || genus <= f.genus_max)) {
      ++stats.genus_histogram[genus];
      emit(node, depth);
    }
    const bool expand = (f.depth_limit < 0 || depth < f.depth_limit) &&
                        (f.genus_min < 0 || genus > f.genus_min);
    if (!expand) continue;
    ++stats.nodes_expanded;
    auto cand = child_ranks(ctx, node);
    if (breadth_first) {
      for (std::int32_t r : cand) {
        work.emplace_back(node.child_without(r), depth + 1);
      }
    } else {
      for (auto it = cand.rbegin(); it != cand.rend(); ++it) {
        work.emplace_back(node.child_without(*it), depth + 1);
      }
    }
  }
}

// Full traversal with optional worker pool. The emit callback, when
// present, is never invoked concurrently. Counting results are independent
// of the number of workers because subtree statistics merge additively.
inline TraversalStats run_tree(
    const TreeContext& ctx, const TraversalFilters& filters, unsigned jobs,
    bool breadth_first,
    const std::function<void(const TreeNode&, std::int64_t)>* emit) {
  TraversalStats stats;
  auto emit_or_noop = [&](const TreeNode& n, std::int64_t d) {
    if (emit != nullptr) (*emit)(n, d);
  };
  if (jobs <= 1) {
    traverse_subtree(ctx, make_root(ctx), 0, breadth_first, filters, stats,
                     emit_or_noop);
    return stats;
  }

  // Peel a frontier of independent subtrees off the top of the tree, then
  // let workers drain it.
  std::deque<std::pair<TreeNode, std::int64_t>> frontier;
  frontier.emplace_back(make_root(ctx), 0);
  const std::size_t target = static_cast<std::size_t>(jobs) * 4;
  while (!frontier.empty() && frontier.size() < target) {
    TreeNode node = std::move(frontier.front().first);
    const std::int64_t depth = frontier.front().second;
    frontier.pop_front();
    const auto genus = static_cast<std::int64_t>(node.gaps.size());
    stats.max_depth = std::max(stats.max_depth, depth);
    if ((filters.genus_min < 0 || genus >= filters.genus_min) &&
        (filters.genus_max < 0 || genus <= filters.genus_max)) {
      ++stats.genus_histogram[genus];
      emit_or_noop(node, depth);
    }
    const bool expand =
        (filters.depth_limit < 0 || depth < filters.depth_limit) &&
        (filters.genus_min < 0 || genus > filters.genus_min);
    if (!expand) continue;
    ++stats.nodes_expanded;
    for (std::int32_t r : child_ranks(ctx, node)) {
      frontier.emplace_back(node.child_without(r), depth + 1);
    }
  }

  std::vector<std::pair<TreeNode, std::int64_t>> subtrees(
      std::make_move_iterator(frontier.begin()),
      std::make_move_iterator(frontier.end()));
  std::atomic<std::size_t> next{0};
  std::mutex emit_mu;
  std::mutex merge_mu;
  auto worker = [&]() {
    TraversalStats local;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= subtrees.size()) break;
      traverse_subtree(ctx, std::move(subtrees[i].first), subtrees[i].second,
                       /*breadth_first=*/false, filters, local,
                       [&](const TreeNode& n, std::int64_t d) {
                         if (emit != nullptr) {
                           std::lock_guard<std::mutex> lock(emit_mu);
                           (*emit)(n, d);
                         }
                       });
    }
    std::lock_guard<std::mutex> lock(merge_mu);
    stats.merge(local);
  };
  std::vector<std::thread> pool;
  const std::size_t n_threads =
      std::min<std::size_t>(jobs, std::max<std::size_t>(subtrees.size(), 1));
  pool.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return stats;
}

inline TraversalFilters filters_from_options(const EnumerateOptions& opts) {
  TraversalFilters f;
  if (opts.genus_min) f.genus_min = *opts.genus_min;
  if (opts.genus_max) f.genus_max = *opts.genus_max;
  if (opts.depth_limit) f.depth_limit = *opts.depth_limit;
  return f;
}

}  // namespace detail

/// The children of S in the tree for corner c: one semigroup S + {x} per
/// x in candidate_gaps(S), ordered by the monomial order. S must actually
/// have corner c.
inline std::vector<Gns> children(const Gns& s, const Point& c,
                                 MonomialOrder order) {
  if (!has_corner(s, c)) {
    throw GnsError(Errc::corner_mismatch,
                   "input does not have corner " + c.to_string());
  }
  if (s.genus() == 0) return {};
  std::vector<Gns> out;
  for (const Point& x : candidate_gaps(s, order)) {
    std::vector<Point> gaps = s.gaps();
    gaps.erase(std::lower_bound(gaps.begin(), gaps.end(), x, LexLess{}));
    out.push_back(Gns::from_sorted_gaps_unchecked(s.dim(), std::move(gaps)));
  }
  return out;
}

/// The parent of a nonordinary node: remove low(S). The corner is preserved.
inline Gns parent(const Gns& s, MonomialOrder order) {
  if (s.is_ordinary()) {
    throw GnsError(Errc::ordinary_gns, "the tree root has no parent");
  }
  const Point x = low(s, order);
  std::vector<Point> gaps = s.gaps();
  gaps.insert(std::lower_bound(gaps.begin(), gaps.end(), x, LexLess{}), x);
  return Gns::from_sorted_gaps_unchecked(s.dim(), std::move(gaps));
}

/// The chain S = S_1, S_2 = parent(S_1), ..., ending at the ordinary root.
/// Its length is genus(root) - genus(S) + 1.
inline std::vector<Gns> chain_to_root(const Gns& s, MonomialOrder order) {
  std::vector<Gns> chain{s};
  while (!chain.back().is_ordinary()) {
    chain.push_back(parent(chain.back(), order));
  }
  return chain;
}

/// Streams every semigroup with corner c exactly once. Unit corner
/// coordinates are erased, the tree is walked in the reduced dimension and
/// nodes are lifted back before reaching the sink. With jobs == 1 the
/// sequence is deterministic (preorder for depth-first, level order for
/// breadth-first); with more workers only the set is deterministic. The
/// sink is never called concurrently.
inline void enumerate_corner(const Point& c, MonomialOrder order,
                             const EnumerateOptions& opts,
                             const std::function<void(const Gns&)>& sink) {
  detail::require_realizable_corner(c);
  const detail::TraversalFilters filters = detail::filters_from_options(opts);
  if (c.is_zero()) {
    if (filters.genus_min <= 0) {
      sink(Gns::from_sorted_gaps_unchecked(c.dim(), {}));
    }
    return;
  }
  const auto red = detail::split_unit_coordinates(c);
  const auto ctx = detail::make_tree_context(red.reduced, order);

  std::vector<bool> is_unit(static_cast<std::size_t>(red.full_dim), false);
  for (int p : red.unit_positions) is_unit[static_cast<std::size_t>(p)] = true;

  std::function<void(const detail::TreeNode&, std::int64_t)> emit =
      [&](const detail::TreeNode& node, std::int64_t) {
        std::vector<Point> gaps;
        gaps.reserve(node.gaps.size());
        for (std::int32_t r : node.gaps) {
          const std::int64_t* src = ctx.coords(r);
          std::vector<Point::value_type> coords(
              static_cast<std::size_t>(red.full_dim), 0);
          int k = 0;
          for (int i = 0; i < red.full_dim; ++i) {
            if (!is_unit[static_cast<std::size_t>(i)]) coords[i] = src[k++];
          }
          gaps.emplace_back(std::move(coords));
        }
        sink(Gns::from_sorted_gaps_unchecked(red.full_dim, std::move(gaps)));
      };
  detail::run_tree(ctx, filters, opts.jobs, opts.breadth_first, &emit);
}

/// Convenience collector for small corners.
inline std::vector<Gns> enumerate_corner(const Point& c, MonomialOrder order,
                                         const EnumerateOptions& opts = {}) {
  std::vector<Gns> out;
  enumerate_corner(c, order, opts, [&](const Gns& s) { out.push_back(s); });
  return out;
}

/// Exact N(c) with per-genus histogram. The total and histogram do not
/// depend on the number of workers nor on the chosen monomial order.
inline EnumerationReport count_corner(const Point& c, MonomialOrder order,
                                      unsigned jobs = 1) {
  detail::require_realizable_corner(c);
  EnumerationReport report;
  report.corner = c;
  report.order = order;
  if (c.is_zero()) {
    report.total = 1;
    report.genus_histogram[0] = 1;
    report.nodes_expanded = 1;
    return report;
  }
  const auto red = detail::split_unit_coordinates(c);
  const auto ctx = detail::make_tree_context(red.reduced, order);
  const auto stats =
      detail::run_tree(ctx, detail::TraversalFilters{}, jobs,
                       /*breadth_first=*/false, nullptr);
  report.genus_histogram = stats.genus_histogram;
  report.max_depth = stats.max_depth;
  report.nodes_expanded = stats.nodes_expanded;
  for (const auto& [g, n] : report.genus_histogram) {
    (void)g;
    report.total += n;
  }
  return report;
}

}  // namespace gns

#endif  // GNS_ENUMERATION_HPP_
