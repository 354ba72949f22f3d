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

#include "tpants/lattice.hpp"

#include <algorithm>

#include "tpants/error.hpp"

namespace tpants {

std::string LatticePoint::to_string() const {
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  return {checked_add(a[0], b[0]), checked_add(a[1], b[1]), checked_add(a[2], b[2])};
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  return {checked_sub(a[0], b[0]), checked_sub(a[1], b[1]), checked_sub(a[2], b[2])};
}

LatticePoint operator*(Int s, const LatticePoint& a) {
  return {checked_mul(s, a[0]), checked_mul(s, a[1]), checked_mul(s, a[2])};
}

Int dot(const LatticePoint& a, const LatticePoint& b) {
  return checked_add(checked_add(checked_mul(a[0], b[0]), checked_mul(a[1], b[1])),
                     checked_mul(a[2], b[2]));
}

Int det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  const Int m0 = checked_sub(checked_mul(b[1], c[2]), checked_mul(b[2], c[1]));
  const Int m1 = checked_sub(checked_mul(b[0], c[2]), checked_mul(b[2], c[0]));
  const Int m2 = checked_sub(checked_mul(b[0], c[1]), checked_mul(b[1], c[0]));
  return checked_add(checked_sub(checked_mul(a[0], m0), checked_mul(a[1], m1)),
                     checked_mul(a[2], m2));
}

std::vector<LatticeEntry> enumerate_delta(int d) {
  if (d < 1) throw DomainError("enumerate_delta: degree must be >= 1, got " + std::to_string(d));
  std::vector<LatticeEntry> out;
  out.reserve(static_cast<std::size_t>(d + 1) * (d + 2) * (d + 3) / 6);
  for (Int a = 0; a <= d; ++a) {
    for (Int b = 0; a + b <= d; ++b) {
      for (Int c = 0; a + b + c <= d; ++c) {
        const bool interior = a > 0 && b > 0 && c > 0 && a + b + c < d;
        out.push_back({LatticePoint{a, b, c}, interior});
      }
    }
  }
  return out;
}

Int interior_lattice_count(int d) {
  if (d < 4) throw DomainError("interior_lattice_count: degree must be >= 4, got " + std::to_string(d));
  const Int n = d;
  return checked_mul(checked_mul(n - 1, n - 2), n - 3) / 6;
}

bool in_delta(const LatticePoint& m, int d) {
  return m[0] >= 0 && m[1] >= 0 && m[2] >= 0 && m.sum() <= d;
}

bool in_interior_polytope(const LatticePoint& m, int d) {
  if (d < 4) return false;
  return m[0] >= 1 && m[1] >= 1 && m[2] >= 1 && m.sum() <= d - 1;
}

unsigned delta_facet_mask(const LatticePoint& m, int d) {
  unsigned mask = 0;
  for (int i = 0; i < 3; ++i)
    if (m[i] == 0) mask |= 1u << i;
  if (m.sum() == d) mask |= 1u << 3;
  return mask;
}

unsigned interior_polytope_facet_mask(const LatticePoint& m, int d) {
  unsigned mask = 0;
  for (int i = 0; i < 3; ++i)
    if (m[i] == 1) mask |= 1u << i;
  if (m.sum() == d - 1) mask |= 1u << 3;
  return mask;
}

LatticePoint delta_outward_normal(int facet) {
  switch (facet) {
    case 0: return {-1, 0, 0};
    case 1: return {0, -1, 0};
    case 2: return {0, 0, -1};
    case 3: return {1, 1, 1};
    default: throw DomainError("delta_outward_normal: facet index out of range");
  }
}

SimplexDomain::SimplexDomain(int degree, DomainKind k) : d(degree), kind(k) {
  if (d < 1) throw DomainError("SimplexDomain: degree must be >= 1");
  if (kind == DomainKind::Interior && d < 4)
    throw DomainError("SimplexDomain: interior polytope needs degree >= 4");
}

bool SimplexDomain::contains(const LatticePoint& m) const {
  return kind == DomainKind::Full ? in_delta(m, d) : in_interior_polytope(m, d);
}

std::vector<LatticePoint> SimplexDomain::points() const {
  std::vector<LatticePoint> out;
  for (const auto& e : enumerate_delta(d))
    if (contains(e.m)) out.push_back(e.m);
  return out;
}

Int normalized_volume(const Simplex3& s) {
  const Int det = det3(s.v[1] - s.v[0], s.v[2] - s.v[0], s.v[3] - s.v[0]);
  return det < 0 ? checked_neg(det) : det;
}

Simplex3 sorted(Simplex3 s) {
  std::sort(s.v.begin(), s.v.end());
  return s;
}

}  // namespace tpants
