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
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "tpants/lattice.hpp"
#include "tpants/subdivision.hpp"

namespace tpants {

// f_t(w) = sum over Delta_d(Z) of t^(-v(m)) w^m.
struct PatchworkPolynomial {
  struct Term {
    LatticePoint m;
    Int exponent;  // v(m); the term carries t^(-exponent)
  };
  int d = 0;
  std::vector<Term> terms;

  std::string to_string() const;
};

PatchworkPolynomial build_patchwork(int d, const LiftingFunction& lift = LiftingFunction::canonical());

// f_t at w_i = exp(x_i log t + i theta_i), returned as value * t^scale with
// scale = max_m <m, x> - v(m), so |value| <= number of terms.
struct ScaledValue {
  std::complex<double> value;
  double scale = 0;
};

ScaledValue eval_patchwork(const PatchworkPolynomial& p, double t, const std::array<double, 3>& x,
                           const std::array<double, 3>& theta);

// w^m = t^exponent * prod Z_{m^i}^{a_i}, Z_k = t^(-v(k)) w^k, over the
// vertices m^0..m^3 of a cell in lexicographic order.
struct MonomialIdentity {
  int cell = -1;
  LatticePoint m;
  std::array<Int, 4> a{};
  Int exponent = 0;  // l_rho(m)
  bool verified = false;
};

// Integer barycentric coordinates of m in a unimodular cell, vertex order as
// stored. CertificationError if the cell is not unimodular.
std::array<Int, 4> barycentric(const Simplex3& cell, const LatticePoint& m);

// DomainError unless the cell lies in the interior polytope.
MonomialIdentity monomial_identity(const RegularSubdivision& sub, int cell, const LatticePoint& m);

// For cells rho, rho' sharing the face {m^1, m^2, m^3}, with m^0 in rho only
// and m^4 in rho' only: w^(m^4 + m^0) = w^(sum eps_i m^i), equivalently
// Z_{m^4} Z_{m^0} = t^(exponent - v(m^4)) prod Z_{m^i}^{eps_i}.
struct BoundaryRelation {
  int cell = -1;
  int partner = -1;
  LatticePoint m0;
  LatticePoint m4;
  std::array<LatticePoint, 3> face;  // lexicographic
  std::array<Int, 3> eps{};          // paired with face
  Int exponent = 0;                  // l_rho(m^4)
  bool verified = false;
};

// DomainError if the cells do not share a face; LemmaViolation if eps is not
// a 0/1 vector with exactly two ones.
BoundaryRelation boundary_relation(const RegularSubdivision& sub, int cell, int partner);

struct ResidualEntry {
  LatticePoint m;     // boundary lattice point
  Int exponent = 0;   // l(m) - v(m)
  int chosen = -1;    // cell whose supporting form gave l
  Int a0 = 0;         // power of Z_{m^0} in the expansion over rho
};

struct ResidualReport {
  int cell = -1;
  int partner = -1;
  std::vector<ResidualEntry> entries;
};

// Exponents of the boundary terms of f_t rewritten in the coordinates of an
// interior cell rho and a neighbour rho', with m^0 the vertex of rho not in
// rho'. Each boundary point is expanded over rho when the power of Z_{m^0}
// is nonnegative (ties go to rho) and over rho' otherwise; the far vertex
// m^4 of rho' is always expanded over rho. Default neighbour: across the
// face opposite the first vertex. LemmaViolation if an exponent is >= 0.
ResidualReport residual_exponents(const RegularSubdivision& sub, int cell, std::optional<int> partner = {});

}  // namespace tpants
