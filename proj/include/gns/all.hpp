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

#ifndef GNS_ALL_HPP_
#define GNS_ALL_HPP_

#include "gns/bigint.hpp"
#include "gns/bounds.hpp"
#include "gns/constructions.hpp"
#include "gns/enumeration.hpp"
#include "gns/error.hpp"
#include "gns/gns.hpp"
#include "gns/invariants.hpp"
#include "gns/monomial_order.hpp"
#include "gns/omega.hpp"
#include "gns/oracle.hpp"
#include "gns/point.hpp"
#include "gns/serialization.hpp"

#endif  // GNS_ALL_HPP_
