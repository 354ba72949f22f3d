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

#include <array>
#include <chrono>
#include <set>

#include "doctest.h"
#include "tpants/error.hpp"
#include "tpants/subdivision.hpp"
#include "tpants/tables.hpp"

using namespace tpants;

namespace {

using Vec4 = std::array<Int, 4>;

Vec4 lifted(const LatticePoint& m, Int v) { return {m[0], m[1], m[2], v}; }

Int det3x3(Int a, Int b, Int c, Int d, Int e, Int f, Int g, Int h, Int i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Normal of the hyperplane through four lifted points: cofactors of the
// three difference rows, oriented so the lift coordinate is positive.
Vec4 hyperplane_normal(const std::array<Vec4, 4>& p) {
  std::array<Vec4, 3> r;
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 4; ++j) r[k][j] = p[k + 1][j] - p[0][j];
  Vec4 n{};
  for (int j = 0; j < 4; ++j) {
    std::array<Int, 9> minor{};
    int idx = 0;
    for (int k = 0; k < 3; ++k)
      for (int c = 0; c < 4; ++c)
        if (c != j) minor[idx++] = r[k][c];
    const Int s = det3x3(minor[0], minor[1], minor[2], minor[3], minor[4], minor[5], minor[6], minor[7], minor[8]);
    n[j] = (j % 2 == 0) ? s : -s;
  }
  if (n[3] < 0)
    for (auto& x : n) x = -x;
  return n;
}

// Independent lower-hull test: every other lifted point lies strictly above.
bool is_lower_facet(const Simplex3& s, int d) {
  std::array<Vec4, 4> p;
  for (int k = 0; k < 4; ++k) p[k] = lifted(s.v[k], lift_value(s.v[k]));
  const Vec4 n = hyperplane_normal(p);
  if (n[3] == 0) return false;
  for (const auto& e : enumerate_delta(d)) {
    if (std::find(s.v.begin(), s.v.end(), e.m) != s.v.end()) continue;
    const Vec4 q = lifted(e.m, lift_value(e.m));
    Int side = 0;
    for (int j = 0; j < 4; ++j) side += n[j] * (q[j] - p[0][j]);
    if (side <= 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("canonical lift on the unit cube corners") {
  const std::array<LatticePoint, 8> corners{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}};
  const std::array<Int, 8> want{0, 8, 8, 13, 24, 33, 33, 61};
  for (int i = 0; i < 8; ++i) CHECK(lift_value(corners[i]) == want[i]);
  CHECK(lift_value({2, 1, 1}) == 105);
  CHECK(lift_value({1, 1, 2}) == 124);
}

TEST_CASE("supporting forms of two fixture cells") {
  const Simplex3 base{{LatticePoint(0, 0, 0), LatticePoint(1, 0, 0), LatticePoint(0, 1, 0), LatticePoint(0, 0, 1)}};
  const AffineForm f = supporting_form(base.v);
  CHECK(f.to_string() == "8x1+8x2+13x3");
  const Simplex3 top{{LatticePoint(1, 1, 0), LatticePoint(1, 0, 1), LatticePoint(0, 1, 1), LatticePoint(1, 1, 1)}};
  CHECK(supporting_form(top.v).to_string() == "28x1+28x2+37x3-32");
  CHECK_THROWS_AS(supporting_form({LatticePoint(0, 0, 0), LatticePoint(1, 0, 0), LatticePoint(2, 0, 0), LatticePoint(0, 1, 0)}),
                  SingularSystemError);
}

TEST_CASE("fixture tables: one printed entry disagrees with its own form") {
  const TablesReport r = verify_tables();
  CHECK(r.forms_checked == 6);
  CHECK(r.forms_matched == 6);
  CHECK(r.lift_checked == 16);
  CHECK(r.lift_matched == 16);
  CHECK(r.entries_checked == 96);
  CHECK(r.strictly_supporting);
  // 20x1+16x2+25x3-12 at (0,-1,1) is -16+25-12 = -3; the table prints -5.
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].row == "p1p13p12p3");
  CHECK(r.mismatches[0].column == "p4'");
  CHECK(r.mismatches[0].expected == "-5");
  CHECK(r.mismatches[0].computed == "-3");
  CHECK(r.entries_matched == 95);
}

TEST_CASE("subdivide: counts, unimodularity and face sharing") {
  for (int d = 1; d <= 7; ++d) {
    const RegularSubdivision sub = subdivide(d);
    CAPTURE(d);
    CHECK(sub.cells().size() == static_cast<std::size_t>(d * d * d));
    Int volume = 0;
    for (const auto& c : sub.cells()) {
      CHECK(normalized_volume(c.simplex) == 1);
      volume += normalized_volume(c.simplex);
    }
    CHECK(volume == d * d * d);
    std::size_t boundary = 0;
    for (const auto& f : sub.faces()) {
      if (f.on_boundary()) {
        ++boundary;
        CHECK(f.cells[1] == -1);
      } else {
        CHECK(f.cells[0] >= 0);
        CHECK(f.cells[1] >= 0);
      }
    }
    // Each facet of Delta_d is cut into d^2 unit triangles.
    CHECK(boundary == static_cast<std::size_t>(4 * d * d));
    // Triangulated 3-ball: V - E + F - C = 1.
    const auto euler = static_cast<long>(sub.points().size()) - static_cast<long>(sub.edges().size()) +
                       static_cast<long>(sub.faces().size()) - static_cast<long>(sub.cells().size());
    CHECK(euler == 1);
  }
}

TEST_CASE("subdivide at d=7 stays fast") {
  const auto start = std::chrono::steady_clock::now();
  const RegularSubdivision sub = subdivide(7);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(sub.cells().size() == 343);
  CHECK(secs < 10.0);
}

TEST_CASE("every cell is a lower facet of the lifted point set") {
  for (int d = 1; d <= 5; ++d) {
    const RegularSubdivision sub = subdivide(d);
    for (const auto& c : sub.cells()) CHECK(is_lower_facet(c.simplex, d));
  }
}

TEST_CASE("supporting forms are strictly below the lift off their cell") {
  const RegularSubdivision sub = subdivide(4);
  for (const auto& c : sub.cells()) {
    for (const auto& e : enumerate_delta(4)) {
      const Rational l = c.support(e.m);
      const bool vertex = std::find(c.simplex.v.begin(), c.simplex.v.end(), e.m) != c.simplex.v.end();
      if (vertex) {
        CHECK(l == Rational(lift_value(e.m)));
      } else {
        CHECK(l < Rational(lift_value(e.m)));
      }
    }
  }
}

TEST_CASE("translation invariance: the interior cell at d=5") {
  const RegularSubdivision sub = subdivide(5);
  const Simplex3 want{{LatticePoint(1, 1, 1), LatticePoint(1, 1, 2), LatticePoint(1, 2, 1), LatticePoint(2, 1, 1)}};
  const auto id = sub.find_cell(want);
  REQUIRE(id.has_value());
  // 44x1+44x2+63x3-90 agrees with v on the four vertices, so it is the form.
  for (const auto& m : want.v) CHECK(44 * m[0] + 44 * m[1] + 63 * m[2] - 90 == lift_value(m));
  CHECK(sub.cells()[*id].support.to_string() == "44x1+44x2+63x3-90");
}

TEST_CASE("the hull and cube paths agree") {
  for (int d = 1; d <= 5; ++d) {
    auto cube = cube_pattern_cells(d);
    auto hull = lower_hull_cells(d, LiftingFunction::canonical());
    for (auto& s : cube) s = sorted(s);
    for (auto& s : hull) s = sorted(s);
    std::sort(cube.begin(), cube.end());
    std::sort(hull.begin(), hull.end());
    CHECK(cube == hull);
    CHECK_NOTHROW(subdivide(d, LiftingFunction::canonical(), SubdivisionPath::CrossCheck));
  }
}

TEST_CASE("custom lifts") {
  std::map<LatticePoint, Int> flat, bent, partial;
  for (const auto& e : enumerate_delta(2)) {
    flat[e.m] = e.m[0];
    bent[e.m] = 3 * lift_value(e.m) + 5 * e.m[0] * e.m[1] + e.m[2] * e.m[2] * e.m[0];
  }
  partial[{0, 0, 0}] = 0;
  CHECK_THROWS_AS(subdivide(2, LiftingFunction::custom(flat)), DegeneracyError);
  CHECK_THROWS_AS(subdivide(2, LiftingFunction::custom(partial)), DomainError);
  CHECK_THROWS_AS(subdivide(2, LiftingFunction::custom(bent), SubdivisionPath::Cube), DomainError);
  const RegularSubdivision sub = subdivide(2, LiftingFunction::custom(bent));
  CHECK(sub.cells().size() == 8);
  for (const auto& c : sub.cells()) CHECK(check_supporting(c.support, c.simplex, 2, sub.lift()).ok());
}

TEST_CASE("check_supporting reports violations") {
  const Simplex3 base{{LatticePoint(0, 0, 0), LatticePoint(0, 0, 1), LatticePoint(0, 1, 0), LatticePoint(1, 0, 0)}};
  const AffineForm good = supporting_form(base.v);
  CHECK(check_supporting(good, base, 2).ok());
  const AffineForm bad{{Rational(30), Rational(30), Rational(30)}, Rational(0)};
  const SupportVerdict v = check_supporting(bad, base, 2);
  CHECK_FALSE(v.ok());
  CHECK(std::any_of(v.violations.begin(), v.violations.end(),
                    [](const SupportViolation& s) { return s.kind == SupportViolation::Kind::VertexMismatch; }));
  CHECK(std::any_of(v.violations.begin(), v.violations.end(),
                    [](const SupportViolation& s) { return s.kind == SupportViolation::Kind::Above; }));
}

TEST_CASE("subdivide rejects bad degrees") { CHECK_THROWS_AS(subdivide(0), DomainError); }
