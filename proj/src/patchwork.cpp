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

#include "tpants/patchwork.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tpants/error.hpp"

namespace tpants {

namespace {

Int integral(const Rational& r, const char* what) {
  if (!r.is_integer()) throw CertificationError(std::string(what) + " is not an integer: " + r.to_string());
  return r.num();
}

// Independent check: sum a_i m^i == m and l(m) == sum a_i v(m^i).
bool substitution_holds(const Simplex3& cell, const std::array<Int, 4>& a, const LatticePoint& m, Int l_of_m,
                        const LiftingFunction& lift) {
  LatticePoint sum(0, 0, 0);
  Int weight = 0, t_power = l_of_m;
  for (int i = 0; i < 4; ++i) {
    sum = sum + a[i] * cell.v[i];
    weight = checked_add(weight, a[i]);
    t_power = checked_sub(t_power, checked_mul(a[i], lift(cell.v[i])));
  }
  return sum == m && weight == 1 && t_power == 0;
}

std::optional<int> shared_face(const RegularSubdivision& sub, int a, int b) {
  for (int f : sub.cell_faces(a)) {
    const auto& fc = sub.faces()[f].cells;
    if (fc[0] == b || fc[1] == b) return f;
  }
  return std::nullopt;
}

void require_interior_cell(const RegularSubdivision& sub, int cell) {
  if (cell < 0 || static_cast<std::size_t>(cell) >= sub.cells().size())
    throw DomainError("cell id " + std::to_string(cell) + " out of range");
  for (const auto& m : sub.cells()[cell].simplex.v)
    if (!in_interior_polytope(m, sub.degree()))
      throw DomainError("cell " + std::to_string(cell) + " is not inside the interior polytope");
}

}  // namespace

std::string PatchworkPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) out << " + ";
    first = false;
    bool any = false;
    if (t.exponent != 0) {
      out << "t^" << -t.exponent;
      any = true;
    }
    for (int i = 0; i < 3; ++i) {
      if (t.m[i] == 0) continue;
      if (any) out << '*';
      out << 'w' << i + 1;
      if (t.m[i] != 1) out << '^' << t.m[i];
      any = true;
    }
    if (!any) out << '1';
  }
  return out.str();
}

PatchworkPolynomial build_patchwork(int d, const LiftingFunction& lift) {
  PatchworkPolynomial p;
  p.d = d;
  for (const auto& e : enumerate_delta(d)) p.terms.push_back({e.m, lift(e.m)});
  return p;
}

ScaledValue eval_patchwork(const PatchworkPolynomial& p, double t, const std::array<double, 3>& x,
                           const std::array<double, 3>& theta) {
  if (!(t > 1) || !std::isfinite(t)) throw DomainError("eval_patchwork requires t > 1");
  const double lt = std::log(t);
  std::vector<double> level(p.terms.size());
  double top = -INFINITY;
  for (std::size_t k = 0; k < p.terms.size(); ++k) {
    const auto& m = p.terms[k].m;
    level[k] = m[0] * x[0] + m[1] * x[1] + m[2] * x[2] - static_cast<double>(p.terms[k].exponent);
    top = std::max(top, level[k]);
  }
  std::complex<double> sum = 0;
  for (std::size_t k = 0; k < p.terms.size(); ++k) {
    const auto& m = p.terms[k].m;
    const double phase = m[0] * theta[0] + m[1] * theta[1] + m[2] * theta[2];
    sum += std::polar(std::exp((level[k] - top) * lt), phase);
  }
  if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()) || !std::isfinite(top))
    throw NumericError("eval_patchwork produced a non-finite value");
  return {sum, top};
}

std::array<Int, 4> barycentric(const Simplex3& cell, const LatticePoint& m) {
  const LatticePoint c1 = cell.v[1] - cell.v[0], c2 = cell.v[2] - cell.v[0], c3 = cell.v[3] - cell.v[0];
  const LatticePoint r = m - cell.v[0];
  const Int det = det3(c1, c2, c3);
  if (det != 1 && det != -1) throw CertificationError("cell is not unimodular (det " + std::to_string(det) + ")");
  std::array<Int, 4> a{};
  a[1] = checked_mul(det3(r, c2, c3), det);
  a[2] = checked_mul(det3(c1, r, c3), det);
  a[3] = checked_mul(det3(c1, c2, r), det);
  a[0] = checked_sub(1, checked_add(checked_add(a[1], a[2]), a[3]));
  return a;
}

MonomialIdentity monomial_identity(const RegularSubdivision& sub, int cell, const LatticePoint& m) {
  require_interior_cell(sub, cell);
  const auto& c = sub.cells()[cell];
  MonomialIdentity id;
  id.cell = cell;
  id.m = m;
  id.a = barycentric(c.simplex, m);
  id.exponent = integral(c.support(m), "supporting form value");
  id.verified = substitution_holds(c.simplex, id.a, m, id.exponent, sub.lift());
  return id;
}

BoundaryRelation boundary_relation(const RegularSubdivision& sub, int cell, int partner) {
  const int n = static_cast<int>(sub.cells().size());
  if (cell < 0 || cell >= n || partner < 0 || partner >= n) throw DomainError("cell id out of range");
  const auto face = shared_face(sub, cell, partner);
  if (!face) throw DomainError("cells " + std::to_string(cell) + " and " + std::to_string(partner) + " are not adjacent");
  const auto& rho = sub.cells()[cell];
  const auto& fv = sub.faces()[*face].vertices;
  auto off_face = [&](const Simplex3& s) {
    for (const auto& m : s.v)
      if (std::find(fv.begin(), fv.end(), m) == fv.end()) return m;
    throw CertificationError("shared face is not a face of the cell");
  };

  BoundaryRelation rel;
  rel.cell = cell;
  rel.partner = partner;
  rel.m0 = off_face(rho.simplex);
  rel.m4 = off_face(sub.cells()[partner].simplex);
  rel.face = fv;
  // Barycentric coordinates of m^4 over (m^0, face...).
  const Simplex3 frame{{rel.m0, fv[0], fv[1], fv[2]}};
  const auto a = barycentric(frame, rel.m4);
  rel.eps = {a[1], a[2], a[3]};
  rel.exponent = integral(rho.support(rel.m4), "supporting form value");

  LatticePoint lhs = rel.m4 + rel.m0, rhs(0, 0, 0);
  Int t_power = rel.exponent;
  for (int i = 0; i < 3; ++i) {
    rhs = rhs + rel.eps[i] * fv[i];
    t_power = checked_sub(t_power, checked_mul(rel.eps[i], sub.lift()(fv[i])));
  }
  rel.verified = a[0] == -1 && lhs == rhs && t_power == -sub.lift()(rel.m0);

  const int ones = static_cast<int>(std::count(rel.eps.begin(), rel.eps.end(), 1));
  const int zeros = static_cast<int>(std::count(rel.eps.begin(), rel.eps.end(), 0));
  if (a[0] != -1 || ones != 2 || zeros != 1) {
    std::ostringstream msg;
    msg << "boundary relation for cells " << cell << ", " << partner << " has eps=(" << rel.eps[0] << ','
        << rel.eps[1] << ',' << rel.eps[2] << "), a0=" << a[0];
    throw LemmaViolation(msg.str());
  }
  return rel;
}

ResidualReport residual_exponents(const RegularSubdivision& sub, int cell, std::optional<int> partner) {
  if (sub.degree() < 5) throw DomainError("residual_exponents requires d >= 5");
  require_interior_cell(sub, cell);
  const auto& rho = sub.cells()[cell];
  if (!partner) {
    const auto& f = sub.faces()[sub.cell_faces(cell)[0]];
    if (f.on_boundary()) throw DomainError("cell has no neighbour across the face opposite its first vertex");
    partner = f.cells[0] == cell ? f.cells[1] : f.cells[0];
  }
  const auto face = shared_face(sub, cell, *partner);
  if (!face) throw DomainError("partner cell is not adjacent");
  const auto& fv = sub.faces()[*face].vertices;
  const auto& rho2 = sub.cells()[*partner];
  LatticePoint m0, m4;
  for (const auto& m : rho.simplex.v)
    if (std::find(fv.begin(), fv.end(), m) == fv.end()) m0 = m;
  for (const auto& m : rho2.simplex.v)
    if (std::find(fv.begin(), fv.end(), m) == fv.end()) m4 = m;
  const Simplex3 frame{{m0, fv[0], fv[1], fv[2]}};

  ResidualReport report;
  report.cell = cell;
  report.partner = *partner;
  for (const auto& e : enumerate_delta(sub.degree())) {
    if (e.interior) continue;
    ResidualEntry r;
    r.m = e.m;
    r.a0 = barycentric(frame, e.m)[0];
    const bool use_rho = r.a0 >= 0 || e.m == m4;
    r.chosen = use_rho ? cell : *partner;
    const auto& form = use_rho ? rho.support : rho2.support;
    r.exponent = checked_sub(integral(form(e.m), "supporting form value"), sub.lift()(e.m));
    if (r.exponent >= 0)
      throw LemmaViolation("boundary point " + e.m.to_string() + " has exponent " + std::to_string(r.exponent));
    report.entries.push_back(r);
  }
  return report;
}

}  // namespace tpants
