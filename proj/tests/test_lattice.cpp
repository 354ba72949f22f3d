// Copyright 2026 The tpants Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <limits>
#include <set>

#include "doctest.h"
#include "tpants/error.hpp"
#include "tpants/lattice.hpp"
#include "tpants/rational.hpp"

using namespace tpants;

TEST_CASE("enumerate_delta matches a brute-force scan") {
  for (int d = 1; d <= 9; ++d) {
    std::vector<LatticeEntry> want;
    for (Int a = 0; a <= d; ++a)
      for (Int b = 0; b <= d; ++b)
        for (Int c = 0; c <= d; ++c)
          if (a + b + c <= d) want.push_back({{a, b, c}, a > 0 && b > 0 && c > 0 && a + b + c < d});
    const auto got = enumerate_delta(d);
    REQUIRE(got.size() == want.size());
    CHECK(got.size() == static_cast<std::size_t>((d + 1) * (d + 2) * (d + 3) / 6));
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].m == want[i].m);
      CHECK(got[i].interior == want[i].interior);
    }
  }
  CHECK_THROWS_AS(enumerate_delta(0), DomainError);
}

TEST_CASE("interior lattice count") {
  for (int d = 4; d <= 12; ++d) {
    std::size_t brute = 0;
    for (const auto& e : enumerate_delta(d)) brute += e.interior;
    CHECK(interior_lattice_count(d) == static_cast<Int>(brute));
  }
  CHECK(interior_lattice_count(5) == 4);
  CHECK(interior_lattice_count(6) == 10);
  CHECK_THROWS_AS(interior_lattice_count(3), DomainError);
}

TEST_CASE("interior polytope membership agrees with the interior flag") {
  for (int d = 4; d <= 8; ++d) {
    for (const auto& e : enumerate_delta(d)) CHECK(in_interior_polytope(e.m, d) == e.interior);
    SimplexDomain inner(d, DomainKind::Interior);
    CHECK(inner.points().size() == static_cast<std::size_t>(interior_lattice_count(d)));
  }
}

TEST_CASE("facet masks and outward normals") {
  CHECK(delta_facet_mask({0, 0, 0}, 3) == 0b0111);
  CHECK(delta_facet_mask({3, 0, 0}, 3) == 0b1110);
  CHECK(delta_facet_mask({1, 1, 1}, 5) == 0);
  CHECK(interior_polytope_facet_mask({1, 1, 1}, 5) == 0b0111);
  CHECK(interior_polytope_facet_mask({2, 1, 1}, 5) == 0b1110);
  for (int f = 0; f < kDeltaFacets; ++f) {
    const LatticePoint n = delta_outward_normal(f);
    // Every point of the facet maximises <n, x> over Delta_3.
    Int best = -1000;
    for (const auto& e : enumerate_delta(3)) best = std::max(best, dot(n, e.m));
    for (const auto& e : enumerate_delta(3))
      CHECK(((delta_facet_mask(e.m, 3) >> f) & 1u) == (dot(n, e.m) == best ? 1u : 0u));
  }
}

TEST_CASE("normalized volume and determinant") {
  const Simplex3 unit{{LatticePoint(0, 0, 0), LatticePoint(1, 0, 0), LatticePoint(0, 1, 0), LatticePoint(0, 0, 1)}};
  CHECK(normalized_volume(unit) == 1);
  const Simplex3 big{{LatticePoint(0, 0, 0), LatticePoint(2, 0, 0), LatticePoint(0, 1, 0), LatticePoint(0, 0, 3)}};
  CHECK(normalized_volume(big) == 6);
  CHECK(det3({1, 2, 3}, {4, 5, 6}, {7, 8, 10}) == -3);
  const Simplex3 shuffled{{LatticePoint(0, 0, 1), LatticePoint(1, 0, 0), LatticePoint(0, 0, 0), LatticePoint(0, 1, 0)}};
  CHECK(sorted(shuffled) ==
        Simplex3{{LatticePoint(0, 0, 0), LatticePoint(0, 0, 1), LatticePoint(0, 1, 0), LatticePoint(1, 0, 0)}});
}

TEST_CASE("rational arithmetic is exact and normalised") {
  const Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK((a + Rational(1, 2)) == Rational(-1));
  CHECK((a * Rational(-2, 3)) == Rational(1));
  CHECK((a / Rational(3)) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7, 3).to_string() == "7/3");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK_THROWS_AS(Rational(1, 0), Error);
  const Rational huge(std::numeric_limits<Int>::max() / 2);
  CHECK_THROWS_AS(huge * Rational(3), ArithmeticError);
}

TEST_CASE("checked integer helpers") {
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<Int>::max(), 1), ArithmeticError);
  CHECK_THROWS_AS(checked_mul(std::numeric_limits<Int>::max(), 2), ArithmeticError);
  CHECK_THROWS_AS(checked_neg(std::numeric_limits<Int>::min()), ArithmeticError);
}
