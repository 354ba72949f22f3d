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

#include "tpants/subdivision.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tpants/error.hpp"
#include "tpants/tables.hpp"

namespace tpants {

Int lift_value(const LatticePoint& m) {
  Int squares = 0;
  for (int i = 0; i < 3; ++i) squares = checked_add(squares, checked_mul(m[i], m[i]));
  const Int mixed = checked_add(checked_add(checked_mul(2, m[0]), checked_mul(2, m[1])),
                                checked_mul(3, m[2]));
  return checked_add(checked_mul(4, squares), checked_mul(mixed, mixed));
}

LiftingFunction LiftingFunction::custom(std::map<LatticePoint, Int> table) {
  LiftingFunction f;
  f.kind_ = Kind::Custom;
  f.table_ = std::move(table);
  return f;
}

Int LiftingFunction::operator()(const LatticePoint& m) const {
  if (kind_ == Kind::Canonical) return lift_value(m);
  auto it = table_.find(m);
  if (it == table_.end()) throw DomainError("custom lift has no value at " + m.to_string());
  return it->second;
}

Rational AffineForm::operator()(const LatticePoint& m) const {
  Rational r = b;
  for (int i = 0; i < 3; ++i) r += n[i] * Rational(m[i]);
  return r;
}

bool AffineForm::is_integral() const {
  return n[0].is_integer() && n[1].is_integer() && n[2].is_integer() && b.is_integer();
}

std::string AffineForm::to_string() const {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (n[i] == Rational(0)) continue;
    std::string coeff = n[i].to_string();
    if (!out.empty() && n[i] > Rational(0)) out += "+";
    if (coeff == "1") coeff.clear();
    if (coeff == "-1") coeff = "-";
    out += coeff + "x" + std::to_string(i + 1);
  }
  if (b != Rational(0) || out.empty()) {
    if (!out.empty() && b > Rational(0)) out += "+";
    out += b.to_string();
  }
  return out;
}

namespace {

// D * l(x) = <num, x> + off with D > 0, all integers. Avoids rational
// normalisation in the inner loops of the hull construction.
struct ScaledForm {
  std::array<Int, 3> num{};
  Int off = 0;
  Int den = 1;

  __int128 scaled_at(const LatticePoint& m) const {
    __int128 s = off;
    for (int i = 0; i < 3; ++i) s += static_cast<__int128>(num[i]) * m[i];
    return s;
  }
  // Sign of l(m) - v(m).
  int compare(const LatticePoint& m, Int v) const {
    const __int128 lhs = scaled_at(m);
    const __int128 rhs = static_cast<__int128>(den) * v;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
};

ScaledForm scaled_form(const std::array<LatticePoint, 4>& p, const std::array<Int, 4>& h) {
  const LatticePoint e1 = p[1] - p[0], e2 = p[2] - p[0], e3 = p[3] - p[0];
  const Int det = det3(e1, e2, e3);
  if (det == 0) throw SingularSystemError("supporting_form: vertices are affinely dependent");
  const std::array<Int, 3> rhs{checked_sub(h[1], h[0]), checked_sub(h[2], h[0]),
                               checked_sub(h[3], h[0])};
  // Cramer's rule on the rows e_i: <n, e_i> = rhs_i.
  const std::array<LatticePoint, 3> rows{e1, e2, e3};
  ScaledForm f;
  for (int j = 0; j < 3; ++j) {
    std::array<LatticePoint, 3> r = rows;
    for (int i = 0; i < 3; ++i) r[i].c[j] = rhs[i];
    f.num[j] = det3(r[0], r[1], r[2]);
  }
  f.den = det;
  if (f.den < 0) {
    f.den = checked_neg(f.den);
    for (auto& x : f.num) x = checked_neg(x);
  }
  // off = den*h0 - <num, p0>
  f.off = checked_sub(checked_mul(f.den, h[0]), dot(LatticePoint{f.num[0], f.num[1], f.num[2]}, p[0]));
  return f;
}

AffineForm to_affine(const ScaledForm& f) {
  return AffineForm{{Rational(f.num[0], f.den), Rational(f.num[1], f.den), Rational(f.num[2], f.den)},
                    Rational(f.off, f.den)};
}

std::array<Int, 4> heights(const std::array<LatticePoint, 4>& p, const LiftingFunction& lift) {
  return {lift(p[0]), lift(p[1]), lift(p[2]), lift(p[3])};
}

template <std::size_t N>
unsigned common_facets(const std::array<LatticePoint, N>& pts, int d) {
  unsigned mask = 0xF;
  for (const auto& p : pts) mask &= delta_facet_mask(p, d);
  return mask;
}

int lowest_bit(unsigned mask) {
  for (int i = 0; i < kDeltaFacets; ++i)
    if (mask & (1u << i)) return i;
  return -1;
}

int orientation(const std::array<LatticePoint, 3>& f, const LatticePoint& q) {
  const Int det = det3(f[1] - f[0], f[2] - f[0], q - f[0]);
  return (det > 0) - (det < 0);
}

}  // namespace

AffineForm supporting_form(const std::array<LatticePoint, 4>& vertices, const LiftingFunction& lift) {
  return to_affine(scaled_form(vertices, heights(vertices, lift)));
}

SupportVerdict check_supporting(const AffineForm& form, const Simplex3& cell,
                                const std::vector<LatticePoint>& region, const LiftingFunction& lift) {
  SupportVerdict verdict;
  for (const auto& v : cell.v) {
    const Rational at = form(v);
    const Int h = lift(v);
    if (at != Rational(h)) verdict.violations.push_back({v, SupportViolation::Kind::VertexMismatch, at, h});
  }
  for (const auto& m : region) {
    if (std::find(cell.v.begin(), cell.v.end(), m) != cell.v.end()) continue;
    const Rational at = form(m);
    const Int h = lift(m);
    if (at == Rational(h)) {
      verdict.violations.push_back({m, SupportViolation::Kind::Tie, at, h});
    } else if (at > Rational(h)) {
      verdict.violations.push_back({m, SupportViolation::Kind::Above, at, h});
    }
  }
  return verdict;
}

SupportVerdict check_supporting(const AffineForm& form, const Simplex3& cell, int d,
                                const LiftingFunction& lift) {
  std::vector<LatticePoint> region;
  for (const auto& e : enumerate_delta(d)) region.push_back(e.m);
  return check_supporting(form, cell, region, lift);
}

RegularSubdivision::RegularSubdivision(int d, LiftingFunction lift, std::vector<Simplex3> simplices)
    : d_(d), lift_(std::move(lift)) {
  for (auto& s : simplices) s = sorted(s);
  std::sort(simplices.begin(), simplices.end());
  if (std::adjacent_find(simplices.begin(), simplices.end()) != simplices.end())
    throw CertificationError("duplicate cell in subdivision");

  std::set<LatticePoint> used;
  std::map<std::array<LatticePoint, 3>, std::vector<int>> face_cells;
  std::set<std::array<LatticePoint, 2>> edge_set;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const Simplex3& s = simplices[i];
    SubdivisionCell cell;
    cell.id = static_cast<int>(i);
    cell.simplex = s;
    cell.support = supporting_form(s.v, lift_);
    cells_.push_back(cell);
    cell_index_.emplace(s, cell.id);
    for (const auto& v : s.v) used.insert(v);
    for (int omit = 0; omit < 4; ++omit) {
      std::array<LatticePoint, 3> f;
      for (int j = 0, k = 0; j < 4; ++j)
        if (j != omit) f[k++] = s.v[j];
      face_cells[f].push_back(cell.id);
    }
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) edge_set.insert({s.v[a], s.v[b]});
  }
  for (const auto& [verts, incident] : face_cells) {
    if (incident.size() > 2)
      throw CertificationError("face " + verts[0].to_string() + verts[1].to_string() +
                               verts[2].to_string() + " shared by more than two cells");
    SubdivisionFace face;
    face.id = static_cast<int>(faces_.size());
    face.vertices = verts;
    face.cells[0] = incident[0];
    if (incident.size() == 2) face.cells[1] = incident[1];
    face.boundary_facet = lowest_bit(common_facets(verts, d_));
    face_index_.emplace(verts, face.id);
    faces_.push_back(face);
  }
  for (const auto& e : edge_set) {
    SubdivisionEdge edge;
    edge.id = static_cast<int>(edges_.size());
    edge.vertices = e;
    edge.on_boundary = common_facets(e, d_) != 0;
    edge_index_.emplace(e, edge.id);
    edges_.push_back(edge);
  }
  points_.assign(used.begin(), used.end());
}

std::optional<int> RegularSubdivision::find_cell(const Simplex3& s) const {
  auto it = cell_index_.find(sorted(s));
  if (it == cell_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RegularSubdivision::find_face(std::array<LatticePoint, 3> v) const {
  std::sort(v.begin(), v.end());
  auto it = face_index_.find(v);
  if (it == face_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RegularSubdivision::find_edge(std::array<LatticePoint, 2> v) const {
  std::sort(v.begin(), v.end());
  auto it = edge_index_.find(v);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::array<int, 4> RegularSubdivision::cell_faces(int cell) const {
  const Simplex3& s = cells_.at(cell).simplex;
  std::array<int, 4> out{};
  for (int omit = 0; omit < 4; ++omit) {
    std::array<LatticePoint, 3> f;
    for (int j = 0, k = 0; j < 4; ++j)
      if (j != omit) f[k++] = s.v[j];
    out[omit] = face_index_.at(f);
  }
  return out;
}

std::vector<Simplex3> cube_pattern_cells(int d) {
  if (d < 1) throw DomainError("subdivide: degree must be >= 1, got " + std::to_string(d));
  std::vector<Simplex3> out;
  for (Int a = 0; a < d; ++a) {
    for (Int b = 0; a + b < d; ++b) {
      for (Int c = 0; a + b + c < d; ++c) {
        const LatticePoint shift{a, b, c};
        for (const auto& row : kCubeCells) {
          Simplex3 s = cube_cell_simplex(row);
          bool inside = true;
          for (auto& v : s.v) {
            v = v + shift;
            inside = inside && in_delta(v, d);
          }
          if (inside) out.push_back(sorted(s));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex3> lower_hull_cells(int d, const LiftingFunction& lift) {
  if (d < 1) throw DomainError("subdivide: degree must be >= 1, got " + std::to_string(d));
  std::vector<LatticePoint> pts;
  std::vector<Int> h;
  for (const auto& e : enumerate_delta(d)) {
    pts.push_back(e.m);
    h.push_back(lift(e.m));
  }
  const std::size_t n = pts.size();

  // Verifies a candidate facet against every lifted point. Returns false if
  // some point lies strictly below; ties at non-vertices are degeneracies.
  auto supports = [&](const std::array<std::size_t, 4>& idx, const ScaledForm& f) {
    bool tie = false;
    for (std::size_t k = 0; k < n; ++k) {
      const int cmp = f.compare(pts[k], h[k]);
      if (cmp > 0) return false;
      if (cmp == 0 && std::find(idx.begin(), idx.end(), k) == idx.end()) tie = true;
    }
    if (tie) throw DegeneracyError("lift is not generic: a lower facet contains more than four lattice points");
    return true;
  };
  auto form_of = [&](const std::array<std::size_t, 4>& idx) {
    return scaled_form({pts[idx[0]], pts[idx[1]], pts[idx[2]], pts[idx[3]]},
                       {h[idx[0]], h[idx[1]], h[idx[2]], h[idx[3]]});
  };

  // Seed: a lower facet through the lowest lifted point, trying nearby
  // triples first.
  std::size_t low = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (h[k] < h[low]) low = k;
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < n; ++k)
    if (k != low) order.push_back(k);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const LatticePoint da = pts[a] - pts[low], db = pts[b] - pts[low];
    return dot(da, da) < dot(db, db);
  });
  std::optional<std::array<std::size_t, 4>> seed;
  for (std::size_t i = 0; i < order.size() && !seed; ++i)
    for (std::size_t j = i + 1; j < order.size() && !seed; ++j)
      for (std::size_t k = j + 1; k < order.size() && !seed; ++k) {
        const std::array<std::size_t, 4> idx{low, order[i], order[j], order[k]};
        if (det3(pts[idx[1]] - pts[low], pts[idx[2]] - pts[low], pts[idx[3]] - pts[low]) == 0) continue;
        if (supports(idx, form_of(idx))) seed = idx;
      }
  if (!seed) throw CertificationError("lower hull: no seed facet found");

  auto key_of = [&](std::array<std::size_t, 4> idx) {
    std::sort(idx.begin(), idx.end());
    return idx;
  };
  std::set<std::array<std::size_t, 4>> found{key_of(*seed)};
  std::map<std::array<std::size_t, 3>, int> face_uses;
  std::deque<std::array<std::size_t, 4>> queue{key_of(*seed)};
  auto register_faces = [&](const std::array<std::size_t, 4>& idx) {
    for (int omit = 0; omit < 4; ++omit) {
      std::array<std::size_t, 3> f;
      for (int j = 0, k = 0; j < 4; ++j)
        if (j != omit) f[k++] = idx[j];
      ++face_uses[f];
    }
  };
  register_faces(*queue.begin());

  while (!queue.empty()) {
    const auto cell = queue.front();
    queue.pop_front();
    for (int omit = 0; omit < 4; ++omit) {
      std::array<std::size_t, 3> f;
      for (int j = 0, k = 0; j < 4; ++j)
        if (j != omit) f[k++] = cell[j];
      const std::array<LatticePoint, 3> fp{pts[f[0]], pts[f[1]], pts[f[2]]};
      if (common_facets(fp, d) != 0) continue;
      if (face_uses[f] >= 2) continue;
      const int apex_side = orientation(fp, pts[cell[omit]]);
      // Gift-wrap: pivot the lifted hyperplane about the face until no lifted
      // point on the far side lies below it.
      std::optional<std::size_t> best;
      ScaledForm best_form;
      for (std::size_t k = 0; k < n; ++k) {
        if (orientation(fp, pts[k]) != -apex_side) continue;
        if (!best || best_form.compare(pts[k], h[k]) > 0) {
          best = k;
          best_form = form_of({f[0], f[1], f[2], k});
        }
      }
      if (!best) throw CertificationError("lower hull: interior face without a neighbouring cell");
      const std::array<std::size_t, 4> next{f[0], f[1], f[2], *best};
      if (!supports(next, best_form))
        throw CertificationError("lower hull: gift-wrapping produced a non-supporting facet");
      const auto key = key_of(next);
      if (found.insert(key).second) {
        register_faces(key);
        queue.push_back(key);
      }
    }
  }

  std::vector<Simplex3> out;
  for (const auto& idx : found) out.push_back(sorted(Simplex3{{pts[idx[0]], pts[idx[1]], pts[idx[2]], pts[idx[3]]}}));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void certify(const RegularSubdivision& sub) {
  const int d = sub.degree();
  std::vector<LatticePoint> region;
  for (const auto& e : enumerate_delta(d)) region.push_back(e.m);
  Int volume = 0;
  for (const auto& cell : sub.cells()) {
    const Int vol = normalized_volume(cell.simplex);
    if (vol != 1)
      throw CertificationError("cell " + std::to_string(cell.id) + " is not unimodular (normalized volume " +
                               std::to_string(vol) + ")");
    volume = checked_add(volume, vol);
    const SupportVerdict verdict = check_supporting(cell.support, cell.simplex, region, sub.lift());
    for (const auto& v : verdict.violations) {
      if (v.kind == SupportViolation::Kind::Tie)
        throw DegeneracyError("supporting form of cell " + std::to_string(cell.id) + " ties the lift at " +
                              v.m.to_string());
      throw CertificationError("supporting form of cell " + std::to_string(cell.id) + " fails at " +
                               v.m.to_string());
    }
  }
  for (const auto& face : sub.faces()) {
    const bool shared = face.cells[1] >= 0;
    if (face.on_boundary() && shared)
      throw CertificationError("boundary face " + std::to_string(face.id) + " shared by two cells");
    if (!face.on_boundary() && !shared)
      throw CertificationError("interior face " + std::to_string(face.id) + " has only one cell");
  }
  const Int expected = checked_mul(checked_mul(d, d), d);
  if (volume != expected)
    throw CertificationError("total normalized volume " + std::to_string(volume) + " != d^3 = " +
                             std::to_string(expected));
}

}  // namespace

RegularSubdivision subdivide(int d, const LiftingFunction& lift, SubdivisionPath path) {
  if (d < 1) throw DomainError("subdivide: degree must be >= 1, got " + std::to_string(d));
  if (path == SubdivisionPath::Auto) path = lift.is_canonical() ? SubdivisionPath::Cube : SubdivisionPath::Hull;
  if ((path == SubdivisionPath::Cube || path == SubdivisionPath::CrossCheck) && !lift.is_canonical())
    throw DomainError("subdivide: the cube-pattern path requires the canonical lift");

  std::vector<Simplex3> cells;
  switch (path) {
    case SubdivisionPath::Cube:
      cells = cube_pattern_cells(d);
      break;
    case SubdivisionPath::Hull:
      cells = lower_hull_cells(d, lift);
      break;
    case SubdivisionPath::CrossCheck: {
      cells = cube_pattern_cells(d);
      if (lower_hull_cells(d, lift) != cells)
        throw CertificationError("cube-pattern and lower-hull constructions disagree at d=" + std::to_string(d));
      break;
    }
    case SubdivisionPath::Auto:
      break;
  }
  RegularSubdivision sub(d, lift, std::move(cells));
  certify(sub);
  return sub;
}

}  // namespace tpants
