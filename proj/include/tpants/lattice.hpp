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

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tpants/checked.hpp"

namespace tpants {

// Integer point of Z^3.
struct LatticePoint {
  std::array<Int, 3> c{};

  constexpr LatticePoint() = default;
  constexpr LatticePoint(Int a, Int b, Int d) : c{a, b, d} {}

  constexpr Int operator[](int i) const { return c[i]; }
  Int sum() const { return checked_add(checked_add(c[0], c[1]), c[2]); }
  std::string to_string() const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator*(Int s, const LatticePoint& a);
Int dot(const LatticePoint& a, const LatticePoint& b);
// det[a; b; c] with the vectors as rows.
Int det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

struct LatticeEntry {
  LatticePoint m;
  bool interior = false;
};

// Lattice points of Delta_d = {x >= 0, x1+x2+x3 <= d} in lexicographic order,
// each flagged interior iff every defining inequality is strict.
std::vector<LatticeEntry> enumerate_delta(int d);

// Number of interior lattice points of Delta_d, (d-1)(d-2)(d-3)/6. Requires d >= 4.
Int interior_lattice_count(int d);

bool in_delta(const LatticePoint& m, int d);
// Membership in (1,1,1) + Delta_{d-4}; false for d < 4.
bool in_interior_polytope(const LatticePoint& m, int d);

// Facets of Delta_d, numbered x1=0, x2=0, x3=0, x1+x2+x3=d.
inline constexpr int kDeltaFacets = 4;
// Bitmask of facets of Delta_d containing m (bit i for facet i).
unsigned delta_facet_mask(const LatticePoint& m, int d);
// Primitive outward normal of facet i of Delta_d.
LatticePoint delta_outward_normal(int facet);

// Same facet numbering for (1,1,1) + Delta_{d-4}.
unsigned interior_polytope_facet_mask(const LatticePoint& m, int d);

enum class DomainKind { Full, Interior };

// Delta_d or its interior polytope (1,1,1) + Delta_{d-4}.
struct SimplexDomain {
  int d = 1;
  DomainKind kind = DomainKind::Full;

  SimplexDomain(int degree, DomainKind k);
  bool contains(const LatticePoint& m) const;
  std::vector<LatticePoint> points() const;
};

// Lattice tetrahedron given by four vertices.
struct Simplex3 {
  std::array<LatticePoint, 4> v;

  friend auto operator<=>(const Simplex3&, const Simplex3&) = default;
  friend bool operator==(const Simplex3&, const Simplex3&) = default;
};

// |det(v1-v0, v2-v0, v3-v0)|: six times the Euclidean volume, 1 iff unimodular.
Int normalized_volume(const Simplex3& s);

// Sorted copy (lexicographic vertex order).
Simplex3 sorted(Simplex3 s);

}  // namespace tpants
