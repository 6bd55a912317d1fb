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

#ifndef GNS_POINT_HPP_
#define GNS_POINT_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gns/error.hpp"

namespace gns {

/// A lattice point of N_0^d: a fixed-length tuple of nonnegative integers.
/// Points are immutable values; they represent gaps, corners and generators
/// alike.
class Point {
 public:
  using value_type = std::int64_t;

  Point() = default;

  explicit Point(std::vector<value_type> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
      throw GnsError(Errc::invalid_point, "point needs at least one coordinate");
    }
    for (value_type v : coords_) {
      if (v < 0) {
        throw GnsError(Errc::invalid_point,
                       "point coordinates must be nonnegative");
      }
    }
  }

  Point(std::initializer_list<value_type> coords)
      : Point(std::vector<value_type>(coords)) {}

  static Point zero(int dim) {
    return Point(std::vector<value_type>(static_cast<std::size_t>(dim), 0));
  }

  static Point ones(int dim) {
    return Point(std::vector<value_type>(static_cast<std::size_t>(dim), 1));
  }

  /// The standard basis vector e_axis (0-based axis).
  static Point unit(int dim, int axis, value_type scale = 1) {
    std::vector<value_type> c(static_cast<std::size_t>(dim), 0);
    c.at(static_cast<std::size_t>(axis)) = scale;
    return Point(std::move(c));
  }

  int dim() const { return static_cast<int>(coords_.size()); }

  value_type operator[](int i) const {
    return coords_[static_cast<std::size_t>(i)];
  }

  const std::vector<value_type>& coords() const { return coords_; }

  /// Total degree: the sum of the coordinates.
  value_type degree() const {
    return std::accumulate(coords_.begin(), coords_.end(), value_type{0});
  }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](value_type v) { return v == 0; });
  }

  /// True when at most one coordinate is nonzero (the point lies on an axis;
  /// the origin qualifies).
  bool on_axis() const {
    int nonzero = 0;
    for (value_type v : coords_) nonzero += (v != 0);
    return nonzero <= 1;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i > 0) os << ',';
      os << coords_[i];
    }
    os << ')';
    return os.str();
  }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<value_type> coords_;
};

namespace detail {
inline void require_same_dim(const Point& a, const Point& b,
                             const char* where) {
  if (a.dim() != b.dim()) {
    throw GnsError(Errc::dimension_mismatch,
                   std::string(where) + ": dimension mismatch " +
                       a.to_string() + " vs " + b.to_string());
  }
}
}  // namespace detail

/// Natural partial order: a <= b coordinatewise.
inline bool leq(const Point& a, const Point& b) {
  detail::require_same_dim(a, b, "leq");
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// Lexicographic comparison with coordinate 0 most significant. This is a
/// total order used for canonical sorting of point sets (and as the "lex"
/// monomial order).
inline bool lex_less(const Point& a, const Point& b) {
  detail::require_same_dim(a, b, "lex_less");
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(),
                                      b.coords().begin(), b.coords().end());
}

struct LexLess {
  bool operator()(const Point& a, const Point& b) const {
    return lex_less(a, b);
  }
};

/// Canonical ordering of (sorted) point sets: elementwise lexicographic.
struct PointSetLess {
  bool operator()(const std::vector<Point>& a,
                  const std::vector<Point>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                        b.end(), LexLess{});
  }
};

inline Point operator+(const Point& a, const Point& b) {
  detail::require_same_dim(a, b, "operator+");
  std::vector<Point::value_type> c(a.coords());
  for (int i = 0; i < b.dim(); ++i) c[static_cast<std::size_t>(i)] += b[i];
  return Point(std::move(c));
}

/// Coordinatewise difference a - b, or nullopt when it leaves N_0^d.
inline std::optional<Point> sub(const Point& a, const Point& b) {
  detail::require_same_dim(a, b, "sub");
  std::vector<Point::value_type> c(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return std::nullopt;
    c[static_cast<std::size_t>(i)] = a[i] - b[i];
  }
  return Point(std::move(c));
}

/// Least upper bound of a nonempty family: the coordinatewise maximum.
template <typename Iter>
Point lub(Iter first, Iter last) {
  if (first == last) {
    throw GnsError(Errc::empty_set, "lub of an empty family");
  }
  std::vector<Point::value_type> acc(first->coords());
  for (Iter it = std::next(first); it != last; ++it) {
    detail::require_same_dim(*first, *it, "lub");
    for (int i = 0; i < it->dim(); ++i) {
      acc[static_cast<std::size_t>(i)] =
          std::max(acc[static_cast<std::size_t>(i)], (*it)[i]);
    }
  }
  return Point(std::move(acc));
}

inline Point lub(const std::vector<Point>& points) {
  return lub(points.begin(), points.end());
}

/// Product of the coordinates, |x|.
inline std::int64_t coord_product(const Point& x) {
  std::int64_t p = 1;
  for (int i = 0; i < x.dim(); ++i) p *= x[i];
  return p;
}

/// Number of lattice points in C(x) = {a : a <= x}.
inline std::int64_t box_size(const Point& x) {
  std::int64_t p = 1;
  for (int i = 0; i < x.dim(); ++i) p *= x[i] + 1;
  return p;
}

/// Streams the points of the box C(x) in lexicographic order. The callback
/// returns false to stop early; scan_box then returns false as well.
template <typename F>
bool scan_box(const Point& x, F&& f) {
  const int d = x.dim();
  std::vector<Point::value_type> cur(static_cast<std::size_t>(d), 0);
  for (;;) {
    if (!f(Point(cur))) return false;
    int i = d - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == x[i]) {
      cur[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return true;
    ++cur[static_cast<std::size_t>(i)];
  }
}

/// The box C(x) materialized in lexicographic order.
inline std::vector<Point> box_points(const Point& x) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(box_size(x)));
  scan_box(x, [&](const Point& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace gns

#endif  // GNS_POINT_HPP_
