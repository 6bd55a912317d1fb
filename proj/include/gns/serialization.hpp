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

#ifndef GNS_SERIALIZATION_HPP_
#define GNS_SERIALIZATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gns/bounds.hpp"
#include "gns/enumeration.hpp"
#include "gns/error.hpp"
#include "gns/gns.hpp"
#include "gns/point.hpp"

namespace gns {

// Wire formats. A point is a JSON array of integers, e.g. [3,2]; a point set
// is an array of arrays sorted lexicographically; a semigroup document is
//   {"dim": d, "gaps": [[...], ...]}
// with lex-sorted gaps. Big integers travel as decimal strings. Keys inside
// objects are emitted in sorted order, so serialization is byte
// deterministic.

inline nlohmann::json to_json(const Point& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < p.dim(); ++i) arr.push_back(p[i]);
  return arr;
}

inline nlohmann::json to_json(const std::vector<Point>& pts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Point& p : pts) arr.push_back(to_json(p));
  return arr;
}

inline Point point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw GnsError(Errc::invalid_point,
                   "a point must be a nonempty array of integers");
  }
  std::vector<Point::value_type> coords;
  coords.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw GnsError(Errc::invalid_point, "point coordinates must be integers");
    }
    coords.push_back(v.get<Point::value_type>());
  }
  return Point(std::move(coords));
}

inline nlohmann::json to_json(const Gns& s) {
  return nlohmann::json{{"dim", s.dim()}, {"gaps", to_json(s.gaps())}};
}

/// Parses and validates a semigroup document; gap sets that fail validation
/// raise the usual typed errors.
inline Gns gns_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("gaps")) {
    throw GnsError(Errc::invalid_point,
                   R"(expected {"dim": d, "gaps": [[...], ...]})");
  }
  if (!j["dim"].is_number_integer()) {
    throw GnsError(Errc::invalid_point, "dim must be an integer");
  }
  const int dim = j["dim"].get<int>();
  if (!j["gaps"].is_array()) {
    throw GnsError(Errc::invalid_point, "gaps must be an array of points");
  }
  std::vector<Point> gaps;
  gaps.reserve(j["gaps"].size());
  for (const auto& g : j["gaps"]) gaps.push_back(point_from_json(g));
  return make_gns(dim, std::move(gaps));
}

inline nlohmann::json to_json(const EnumerationReport& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [genus, count] : r.genus_histogram) {
    hist[std::to_string(genus)] = count;
  }
  return nlohmann::json{{"corner", to_json(r.corner)},
                        {"order", order_name(r.order)},
                        {"total", r.total.str()},
                        {"genus_histogram", std::move(hist)},
                        {"max_depth", r.max_depth},
                        {"nodes_expanded", r.nodes_expanded}};
}

namespace detail {
// Axis subsets are printed 1-based, joined by commas: {0,2} -> "1,3".
inline std::string axis_key(const std::vector<int>& axes) {
  std::string key;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (i > 0) key += ',';
    key += std::to_string(axes[i] + 1);
  }
  return key;
}
}  // namespace detail

inline nlohmann::json to_json(const BoundsReport& r) {
  nlohmann::json n_values = nlohmann::json::object();
  for (const auto& [axes, n] : r.n_values) {
    n_values[detail::axis_key(axes)] = n.str();
  }
  return nlohmann::json{{"corner", to_json(r.corner)},
                        {"box_size", r.box_size.str()},
                        {"omega_empty_size", r.omega_empty_size.str()},
                        {"n_values", std::move(n_values)},
                        {"lower", r.lower.str()},
                        {"upper", r.upper.str()},
                        {"genus_min", r.genus_min.str()},
                        {"genus_max", r.genus_max.str()}};
}

/// Corner formatted as in the reports, e.g. (3,2).
inline std::string corner_label(const Point& c) { return c.to_string(); }

/// One CSV row of the bounds table: "(3,2)",6,24 (quoted corner, LB, UB).
inline std::string bounds_csv_row(const BoundsReport& r) {
  return '"' + corner_label(r.corner) + "\"," + r.lower.str() + ',' +
         r.upper.str();
}

}  // namespace gns

#endif  // GNS_SERIALIZATION_HPP_
