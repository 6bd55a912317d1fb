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

#ifndef GNS_ERROR_HPP_
#define GNS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gns {

/// Error categories raised by the library. Every guarded operation throws a
/// typed GnsError instead of proceeding with an inconsistent state.
enum class Errc {
  invalid_point,           // negative coordinate or empty coordinate list
  dimension_mismatch,      // operands of different ambient dimension
  empty_set,               // lub of an empty family
  zero_in_gaps,            // the origin can never be a gap
  not_closed,              // complement is not closed under addition
  zero_genus,              // operation needs at least one gap
  gap_outside_box,         // a gap escapes the required bounding box
  ordinary_gns,            // operation undefined for the ordinary semigroup
  not_special_gap,         // unitary extension by a non-special gap
  not_minimal_generator,   // unitary removal of a decomposable element
  not_member,              // element expected to lie in the semigroup
  invalid_corner,          // corner outside the hypotheses of the operation
  unrealizable_corner,     // no semigroup at all has this corner
  point_outside_region,    // point not in the requested omega region
  empty_axis_set,          // axis subset J must be nonempty
  invalid_axis,            // axis index out of range or duplicated
  corner_mismatch,         // supplied corner is not the corner of the input
  budget_exceeded,         // exhaustive search beyond the configured budget
};

const char* errc_name(Errc code) noexcept;

class GnsError : public std::runtime_error {
 public:
  GnsError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_point: return "invalid_point";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::empty_set: return "empty_set";
    case Errc::zero_in_gaps: return "zero_in_gaps";
    case Errc::not_closed: return "not_closed";
    case Errc::zero_genus: return "zero_genus";
    case Errc::gap_outside_box: return "gap_outside_box";
    case Errc::ordinary_gns: return "ordinary_gns";
    case Errc::not_special_gap: return "not_special_gap";
    case Errc::not_minimal_generator: return "not_minimal_generator";
    case Errc::not_member: return "not_member";
    case Errc::invalid_corner: return "invalid_corner";
    case Errc::unrealizable_corner: return "unrealizable_corner";
    case Errc::point_outside_region: return "point_outside_region";
    case Errc::empty_axis_set: return "empty_axis_set";
    case Errc::invalid_axis: return "invalid_axis";
    case Errc::corner_mismatch: return "corner_mismatch";
    case Errc::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

}  // namespace gns

#endif  // GNS_ERROR_HPP_
