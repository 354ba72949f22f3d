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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "tpants/error.hpp"
#include "tpants/pants.hpp"
#include "tpants/patchwork.hpp"

using namespace tpants;

namespace {

int interior_cell(const RegularSubdivision& sub) { return classify_cells(sub).interior.at(0); }

int cell_of(const RegularSubdivision& sub, std::array<LatticePoint, 4> v) {
  const auto id = sub.find_cell(sorted(Simplex3{v}));
  REQUIRE(id.has_value());
  return *id;
}

}  // namespace

TEST_CASE("patchwork polynomial terms") {
  const PatchworkPolynomial p1 = build_patchwork(1);
  REQUIRE(p1.terms.size() == 4);
  std::map<LatticePoint, Int> e;
  for (const auto& t : p1.terms) e[t.m] = t.exponent;
  CHECK(e[{0, 0, 0}] == 0);
  CHECK(e[{1, 0, 0}] == 8);
  CHECK(e[{0, 1, 0}] == 8);
  CHECK(e[{0, 0, 1}] == 13);
  CHECK(p1.to_string() == "1 + t^-13*w3 + t^-8*w2 + t^-8*w1");
  const PatchworkPolynomial p5 = build_patchwork(5);
  CHECK(p5.terms.size() == 56);
  for (const auto& t : p5.terms)
    if (t.m == LatticePoint(1, 1, 1)) CHECK(t.exponent == 61);
}

TEST_CASE("eval_patchwork: cancellation and direct sum") {
  const PatchworkPolynomial p = build_patchwork(1);
  const double pi = std::numbers::pi;
  for (double lt : {1.0, 4.0, 16.0}) {
    const ScaledValue v = eval_patchwork(p, std::exp(lt), {8, 8, 13}, {pi, 0, pi});
    CHECK(std::abs(v.value) < 1e-14);
    CHECK(v.scale == doctest::Approx(0));
  }
  const ScaledValue direct = eval_patchwork(p, std::exp(1.0), {0, 0, 0}, {0, 0, 0});
  CHECK(direct.value.real() == doctest::Approx(1 + 2 * std::exp(-8.0) + std::exp(-13.0)).epsilon(1e-15));
  CHECK(std::abs(direct.value.imag()) < 1e-15);
  CHECK_THROWS_AS(eval_patchwork(p, 1.0, {0, 0, 0}, {0, 0, 0}), DomainError);
}

TEST_CASE("eval_patchwork magnitude is bounded by the term count") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> x(-200, 200), th(0, 2 * std::numbers::pi), lt(0.1, 40);
  for (int d : {1, 3, 5}) {
    const PatchworkPolynomial p = build_patchwork(d);
    for (int k = 0; k < 500; ++k) {
      const ScaledValue v = eval_patchwork(p, std::exp(lt(rng)), {x(rng), x(rng), x(rng)}, {th(rng), th(rng), th(rng)});
      CHECK(std::abs(v.value) <= static_cast<double>(p.terms.size()) * (1 + 1e-12));
      CHECK(std::abs(v.value) >= 0);
    }
  }
}

TEST_CASE("monomial identity at m = 0 for the d=5 interior cell") {
  const RegularSubdivision sub = subdivide(5);
  const int c = interior_cell(sub);
  const MonomialIdentity id = monomial_identity(sub, c, {0, 0, 0});
  CHECK(id.a == std::array<Int, 4>{4, -1, -1, -1});
  CHECK(id.exponent == -90);
  CHECK(id.verified);
  // t^-90 * t^(-4*61) * t^(105+105+124) = t^0.
  CHECK(-90 - 4 * lift_value({1, 1, 1}) + lift_value({2, 1, 1}) + lift_value({1, 2, 1}) + lift_value({1, 1, 2}) == 0);
}

TEST_CASE("monomial identity at a vertex is the coordinate itself") {
  const RegularSubdivision sub = subdivide(5);
  const int c = interior_cell(sub);
  const auto& v = sub.cells()[c].simplex.v;
  for (int k = 0; k < 4; ++k) {
    const MonomialIdentity id = monomial_identity(sub, c, v[k]);
    std::array<Int, 4> unit{};
    unit[k] = 1;
    CHECK(id.a == unit);
    CHECK(id.exponent == lift_value(v[k]));
    CHECK(id.verified);
  }
}

TEST_CASE("monomial identity sweep over all interior cells and lattice points") {
  for (int d : {5, 6}) {
    const RegularSubdivision sub = subdivide(d);
    for (int c : classify_cells(sub).interior) {
      const auto& v = sub.cells()[c].simplex.v;
      for (const auto& e : enumerate_delta(d)) {
        const MonomialIdentity id = monomial_identity(sub, c, e.m);
        CHECK(id.verified);
        // Substitution oracle: exponents of w and of t both cancel.
        LatticePoint w(0, 0, 0);
        Int t_power = id.exponent, weight = 0;
        for (int k = 0; k < 4; ++k) {
          w = w + id.a[k] * v[k];
          t_power -= id.a[k] * lift_value(v[k]);
          weight += id.a[k];
        }
        CHECK(w == e.m);
        CHECK(t_power == 0);
        CHECK(weight == 1);
      }
    }
  }
}

TEST_CASE("monomial identity requires an interior cell") {
  const RegularSubdivision sub = subdivide(5);
  const int flap = classify_cells(sub).flap.at(0);
  CHECK_THROWS_AS(monomial_identity(sub, flap, {0, 0, 0}), DomainError);
  CHECK_THROWS_AS(monomial_identity(sub, 100000, {0, 0, 0}), DomainError);
}

TEST_CASE("boundary relation between two cube cells") {
  const RegularSubdivision sub = subdivide(2);
  const int rho = cell_of(sub, {{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  const int rho2 = cell_of(sub, {{{1, 1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  const BoundaryRelation r = boundary_relation(sub, rho, rho2);
  CHECK(r.m0 == LatticePoint(0, 0, 0));
  CHECK(r.m4 == LatticePoint(1, 1, 0));
  std::map<LatticePoint, Int> eps;
  for (int i = 0; i < 3; ++i) eps[r.face[i]] = r.eps[i];
  CHECK(eps[{1, 0, 0}] == 1);
  CHECK(eps[{0, 1, 0}] == 1);
  CHECK(eps[{0, 0, 1}] == 0);
  CHECK(r.exponent == 16);
  CHECK(r.verified);
  // w1 w2 = t^16 (t^-8 w1)(t^-8 w2).
  CHECK(r.exponent - lift_value({1, 0, 0}) - lift_value({0, 1, 0}) == 0);

  const BoundaryRelation back = boundary_relation(sub, rho2, rho);
  CHECK(back.m0 == LatticePoint(1, 1, 0));
  CHECK(back.m4 == LatticePoint(0, 0, 0));
  CHECK(back.exponent == -8);
  CHECK(back.verified);
  CHECK(back.eps == r.eps);
}

TEST_CASE("boundary relation rejects non-adjacent cells") {
  const RegularSubdivision sub = subdivide(2);
  const int rho = cell_of(sub, {{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  int far = -1;
  for (const auto& c : sub.cells()) {
    int shared = 0;
    for (const auto& v : c.simplex.v)
      for (const auto& w : sub.cells()[rho].simplex.v) shared += v == w;
    if (shared < 3) far = c.id;
  }
  REQUIRE(far >= 0);
  CHECK_THROWS_AS(boundary_relation(sub, rho, far), DomainError);
}

TEST_CASE("boundary relations around interior cells have two ones") {
  for (int d : {5, 6, 7}) {
    const RegularSubdivision sub = subdivide(d);
    for (int c : classify_cells(sub).interior)
      for (int f : sub.cell_faces(c)) {
        const auto& face = sub.faces()[f];
        if (face.on_boundary()) continue;
        const BoundaryRelation r = boundary_relation(sub, c, face.cells[0] == c ? face.cells[1] : face.cells[0]);
        CHECK(r.verified);
        CHECK(r.eps[0] + r.eps[1] + r.eps[2] == 2);
      }
  }
}

TEST_CASE("residual exponents are negative") {
  const RegularSubdivision five = subdivide(5);
  const int c = interior_cell(five);
  const ResidualReport r = residual_exponents(five, c);
  CHECK(r.entries.size() == 52);
  for (const auto& e : r.entries) {
    CHECK(e.exponent < 0);
    if (e.m == LatticePoint(0, 0, 0)) {
      CHECK(e.chosen == c);
      CHECK(e.exponent == -90);
    }
  }
  const RegularSubdivision six = subdivide(6);
  const auto cls = classify_cells(six);
  CHECK(cls.interior.size() == 8);
  for (int cell : cls.interior) {
    const ResidualReport rr = residual_exponents(six, cell);
    CHECK(rr.entries.size() == 84 - 10);
    for (const auto& e : rr.entries) CHECK(e.exponent < 0);
  }
  CHECK_THROWS_AS(residual_exponents(subdivide(4), 0), DomainError);
}

TEST_CASE("barycentric coordinates reject non-unimodular cells") {
  const Simplex3 fat{{LatticePoint(0, 0, 0), LatticePoint(2, 0, 0), LatticePoint(0, 1, 0), LatticePoint(0, 0, 1)}};
  CHECK_THROWS_AS(barycentric(fat, {1, 0, 0}), CertificationError);
}
