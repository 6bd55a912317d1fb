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

#ifndef GNS_BIGINT_HPP_
#define GNS_BIGINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace gns {

// Counts and bound values grow like 2^(|c|-1), which leaves 64 bits already
// at |c| = 65, so everything count-like is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace gns

#endif  // GNS_BIGINT_HPP_
