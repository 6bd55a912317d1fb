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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "gns/constructions.hpp"
#include "gns/enumeration.hpp"
#include "gns/invariants.hpp"
#include "gns/oracle.hpp"

using namespace gns;

namespace {

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end(), LexLess{});
  return v;
}

}  // namespace

TEST_CASE("pseudo-Frobenius elements", "[invariants]") {
  // For an ordinary semigroup every gap is pseudo-Frobenius.
  Gns o32 = ordinary(Point{3, 2});
  CHECK(sorted(pseudo_frobenius(o32)) == o32.gaps());

  // d = 1, gaps {1,2}: the ordinary semigroup of conductor 3, so PF is the
  // whole gap set.
  Gns o3 = make_gns(1, {Point{1}, Point{2}});
  CHECK(sorted(pseudo_frobenius(o3)) == std::vector<Point>{Point{1}, Point{2}});

  // d = 1, gaps {1,3}: <2,5> has type one, PF = {3} = {conductor - 1}.
  Gns s25 = make_gns(1, {Point{1}, Point{3}});
  CHECK(pseudo_frobenius(s25) == std::vector<Point>{Point{3}});

  CHECK_THROWS_AS(pseudo_frobenius(make_gns(2, {})), GnsError);
}

TEST_CASE("lub(PF) identity on whole enumerated families", "[invariants]") {
  for (const Point& c : {Point{3, 2}, Point{2, 2, 2}, Point{4, 3}}) {
    for (const Gns& s : brute_enumerate(c)) {
      auto pf = pseudo_frobenius(s);
      CHECK(lub(pf) + Point::ones(s.dim()) == s.corner());
      CHECK(lub(pf) == lub(s.gaps()));
    }
  }
}

TEST_CASE("special gaps", "[invariants]") {
  Gns o32 = ordinary(Point{3, 2});
  CHECK(sorted(special_gaps(o32)) ==
        std::vector<Point>{Point{0, 1}, Point{1, 1}, Point{2, 0},
                           Point{2, 1}});
  Gns o22 = ordinary(Point{2, 2});
  CHECK(sorted(special_gaps(o22)) ==
        std::vector<Point>{Point{0, 1}, Point{1, 0}, Point{1, 1}});

  // Filling any special gap keeps the complement closed.
  for (const Point& c : {Point{3, 3}, Point{2, 2, 2}}) {
    for (const Gns& s : brute_enumerate(c)) {
      if (s.genus() == 0) continue;
      for (const Point& x : special_gaps(s)) {
        std::vector<Point> gaps = s.gaps();
        std::erase(gaps, x);
        CHECK(is_closed_complement(s.dim(), gaps));
      }
    }
  }
}

TEST_CASE("nabla sets", "[invariants]") {
  Gns o32 = ordinary(Point{3, 2});
  auto fam = nabla(o32, Point{3, 2});
  REQUIRE(fam.by_axis.size() == 2);
  CHECK(sorted(fam.by_axis[0]) == std::vector<Point>{Point{2, 0}, Point{2, 1}});
  CHECK(sorted(fam.by_axis[1]) ==
        std::vector<Point>{Point{0, 1}, Point{1, 1}, Point{2, 1}});

  Gns single = make_gns(2, {Point{1, 0}});
  auto fam2 = nabla(single, Point{2, 1});
  CHECK(fam2.by_axis[0] == std::vector<Point>{Point{1, 0}});
  CHECK(fam2.by_axis[1] == std::vector<Point>{Point{1, 0}});

  Gns full = make_gns(2, {});
  auto fam3 = nabla(full, Point{4, 4});
  CHECK(fam3.by_axis[0].empty());
  CHECK(fam3.by_axis[1].empty());

  CHECK_THROWS_AS(nabla(o32, Point{2, 2}), GnsError);  // gap escapes the box
}

TEST_CASE("has_corner", "[invariants]") {
  Gns worked = make_gns(2, {Point{1, 0}, Point{1, 1}, Point{3, 0}});
  CHECK(has_corner(worked, Point{4, 2}));
  CHECK_FALSE(has_corner(worked, Point{4, 3}));
  CHECK_FALSE(has_corner(worked, Point{5, 2}));
  CHECK(has_corner(make_gns(2, {}), Point::zero(2)));
  CHECK_FALSE(has_corner(make_gns(2, {}), Point{2, 2}));

  for (const Point& c : {Point{2, 2}, Point{4, 3}, Point{2, 1}, Point{5, 2}}) {
    CHECK(has_corner(ordinary(c), c));
  }

  // agreement with the nabla characterization whenever the gaps fit the box
  for (const Gns& s : brute_enumerate(Point{3, 3})) {
    if (s.genus() == 0) continue;
    for (const Point& c : box_points(Point{4, 4})) {
      bool fits = true;
      for (const Point& h : s.gaps()) {
        for (int i = 0; i < 2; ++i) fits = fits && h[i] <= c[i] - 1;
      }
      if (!fits) {
        CHECK_FALSE(has_corner(s, c));
        continue;
      }
      auto fam = nabla(s, c);
      const bool all_nonempty =
          !fam.by_axis[0].empty() && !fam.by_axis[1].empty();
      CHECK(has_corner(s, c) == all_nonempty);
      CHECK(has_corner(s, c) == (s.corner() == c));
    }
  }
}

TEST_CASE("small elements", "[invariants]") {
  Gns o32 = ordinary(Point{3, 2});
  CHECK(small_elements(o32, Point{3, 2}) ==
        std::vector<Point>{Point::zero(2)});

  Gns worked = make_gns(2, {Point{1, 0}, Point{1, 1}, Point{3, 0}});
  CHECK(small_elements(worked, Point{4, 2}) ==
        std::vector<Point>{Point{0, 0}, Point{0, 1}, Point{2, 0}, Point{2, 1},
                           Point{3, 1}});
}

TEST_CASE("low element", "[invariants]") {
  Gns s = fill_gap(ordinary(Point{3, 2}), Point{1, 1});
  CHECK(low(s, MonomialOrder::lex) == Point{1, 1});

  Gns t = fill_gap(fill_gap(ordinary(Point{3, 2}), Point{1, 1}), Point{2, 0});
  // L(t) minus the origin is {(1,1),(2,0)}
  CHECK(low(t, MonomialOrder::lex) == Point{1, 1});
  CHECK(low(t, MonomialOrder::grevlex) == Point{1, 1});

  // the chosen order matters: small elements {(0,3),(1,1),(2,2)}
  Gns u = make_gns(2, {Point{0, 1}, Point{0, 2}, Point{1, 0}, Point{1, 2},
                       Point{1, 3}, Point{2, 0}, Point{2, 1}, Point{2, 3}});
  REQUIRE(u.corner() == Point{3, 4});
  CHECK(low(u, MonomialOrder::lex) == Point{0, 3});
  CHECK(low(u, MonomialOrder::grlex) == Point{1, 1});
  CHECK(low(u, MonomialOrder::grevlex) == Point{1, 1});

  CHECK_THROWS_AS(low(ordinary(Point{3, 2}), MonomialOrder::lex), GnsError);
  CHECK_THROWS_AS(low(make_gns(2, {}), MonomialOrder::lex), GnsError);
}

TEST_CASE("candidate gaps (tree children indices)", "[invariants]") {
  CHECK(candidate_gaps(ordinary(Point{3, 2}), MonomialOrder::lex) ==
        std::vector<Point>{Point{0, 1}, Point{1, 1}, Point{2, 0},
                           Point{2, 1}});

  // blocking singleton nablas
  Gns s = fill_gap(ordinary(Point{2, 2}), Point{1, 1});
  CHECK(candidate_gaps(s, MonomialOrder::lex).empty());
  CHECK(candidate_gaps(ordinary(Point{2, 1}), MonomialOrder::lex).empty());

  // every candidate is a special gap and filling it preserves the corner
  for (const Gns& node : brute_enumerate(Point{4, 3})) {
    if (node.genus() == 0) continue;
    auto sg = sorted(special_gaps(node));
    for (const Point& x : candidate_gaps(node, MonomialOrder::grlex)) {
      CHECK(std::binary_search(sg.begin(), sg.end(), x, LexLess{}));
      CHECK(has_corner(fill_gap(node, x), node.corner()));
    }
  }
}

TEST_CASE("minimal generators", "[invariants]") {
  Gns s = fill_gap(ordinary(Point{3, 2}), Point{1, 1});
  CHECK(is_minimal_generator(s, Point{1, 1}));
  CHECK_FALSE(is_minimal_generator(ordinary(Point{3, 2}), Point{4, 2}));
  Gns o32 = ordinary(Point{3, 2});
  CHECK_FALSE(is_minimal_generator(o32, o32.corner() + o32.corner()));
  CHECK_THROWS_AS(is_minimal_generator(o32, Point{1, 0}), GnsError);  // a gap
  CHECK_THROWS_AS(is_minimal_generator(o32, Point::zero(2)), GnsError);
}

TEST_CASE("unitary extension and removal", "[invariants]") {
  Gns o32 = ordinary(Point{3, 2});
  Gns s = fill_gap(o32, Point{1, 1});
  CHECK(s.gaps() == std::vector<Point>{Point{0, 1}, Point{1, 0}, Point{2, 0},
                                       Point{2, 1}});
  CHECK(s.corner() == Point{3, 2});
  CHECK_THROWS_AS(fill_gap(o32, Point{1, 0}), GnsError);  // not special

  // filling the only gap of O((2,1)) empties the complement
  Gns emptied = fill_gap(ordinary(Point{2, 1}), Point{1, 0});
  CHECK(emptied.genus() == 0);
  CHECK(emptied.corner() == Point::zero(2));

  // removal is the inverse of extension
  CHECK(remove_generator(s, Point{1, 1}) == o32);

  // removing a generator beyond corner - 1 grows the corner
  Gns grown = remove_generator(o32, Point{3, 0});
  CHECK(grown.gaps() == std::vector<Point>{Point{0, 1}, Point{1, 0},
                                           Point{1, 1}, Point{2, 0},
                                           Point{2, 1}, Point{3, 0}});
  CHECK(grown.corner() == Point{4, 2});

  CHECK_THROWS_AS(remove_generator(make_gns(2, {}), Point{1, 1}), GnsError);
}

TEST_CASE("extension/removal inversion across a family", "[invariants]") {
  for (const Gns& node : brute_enumerate(Point{3, 3})) {
    if (node.genus() == 0) continue;
    const Point c = node.corner();
    for (const Point& x : special_gaps(node)) {
      Gns extended = fill_gap(node, x);
      CHECK(is_minimal_generator(extended, x));
      CHECK(remove_generator(extended, x) == node);
    }
    const Point top = *sub(c, Point::ones(c.dim()));
    for (const Point& x : small_elements(node, c)) {
      if (x.is_zero() || !is_minimal_generator(node, x)) continue;
      REQUIRE(leq(x, top));
      Gns removed = remove_generator(node, x);
      CHECK(has_corner(removed, c));
      auto sg = special_gaps(removed);
      CHECK(std::find(sg.begin(), sg.end(), x) != sg.end());
      CHECK(fill_gap(removed, x) == node);
    }
  }
}
