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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpants/lattice.hpp"
#include "tpants/rational.hpp"

namespace tpants {

// Canonical lift 4(m1^2+m2^2+m3^2) + (2m1+2m2+3m3)^2, exact.
Int lift_value(const LatticePoint& m);

// Height function on lattice points: the canonical quadratic lift or an
// explicit table.
class LiftingFunction {
 public:
  enum class Kind { Canonical, Custom };

  static LiftingFunction canonical() { return LiftingFunction(); }
  static LiftingFunction custom(std::map<LatticePoint, Int> table);

  Kind kind() const { return kind_; }
  bool is_canonical() const { return kind_ == Kind::Canonical; }
  // Throws DomainError for points missing from a custom table.
  Int operator()(const LatticePoint& m) const;

 private:
  LiftingFunction() = default;

  Kind kind_ = Kind::Canonical;
  std::map<LatticePoint, Int> table_;
};

// l(x) = <n, x> + b with rational coefficients.
struct AffineForm {
  std::array<Rational, 3> n;
  Rational b;

  Rational operator()(const LatticePoint& m) const;
  bool is_integral() const;
  // Human-readable, e.g. "28x1+28x2+37x3-32".
  std::string to_string() const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

// The unique affine form agreeing with the lift on four affinely independent
// vertices. Throws SingularSystemError for coplanar input.
AffineForm supporting_form(const std::array<LatticePoint, 4>& vertices,
                           const LiftingFunction& lift = LiftingFunction::canonical());

struct SupportViolation {
  enum class Kind {
    VertexMismatch,  // l(m) != v(m) at a cell vertex
    Tie,             // l(m) == v(m) at a non-vertex point
    Above,           // l(m) > v(m) at a non-vertex point
  };
  LatticePoint m;
  Kind kind;
  Rational form_value;
  Int lift_value;
};

struct SupportVerdict {
  std::vector<SupportViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks l == v on the cell vertices and l < v strictly on every other point
// of the test region.
SupportVerdict check_supporting(const AffineForm& form, const Simplex3& cell,
                                const std::vector<LatticePoint>& region,
                                const LiftingFunction& lift = LiftingFunction::canonical());
// Test region Delta_d(Z).
SupportVerdict check_supporting(const AffineForm& form, const Simplex3& cell, int d,
                                const LiftingFunction& lift = LiftingFunction::canonical());

struct SubdivisionCell {
  int id = -1;
  Simplex3 simplex;  // vertices in lexicographic order
  AffineForm support;
};

struct SubdivisionFace {
  int id = -1;
  std::array<LatticePoint, 3> vertices;  // lexicographic
  std::array<int, 2> cells{-1, -1};      // cells[1] == -1 on the boundary
  int boundary_facet = -1;               // facet of Delta_d containing the face, or -1

  bool on_boundary() const { return boundary_facet >= 0; }
};

struct SubdivisionEdge {
  int id = -1;
  std::array<LatticePoint, 2> vertices;  // lexicographic
  bool on_boundary = false;              // contained in a facet of Delta_d
};

// Regular subdivision of Delta_d induced by a lift, with its face lattice
// down to edges. Cells, faces and edges are ordered lexicographically by
// vertex tuples; ids are positions in those lists.
class RegularSubdivision {
 public:
  RegularSubdivision(int d, LiftingFunction lift, std::vector<Simplex3> simplices);

  int degree() const { return d_; }
  const LiftingFunction& lift() const { return lift_; }
  const std::vector<SubdivisionCell>& cells() const { return cells_; }
  const std::vector<SubdivisionFace>& faces() const { return faces_; }
  const std::vector<SubdivisionEdge>& edges() const { return edges_; }
  const std::vector<LatticePoint>& points() const { return points_; }

  std::optional<int> find_cell(const Simplex3& s) const;
  std::optional<int> find_face(std::array<LatticePoint, 3> v) const;
  std::optional<int> find_edge(std::array<LatticePoint, 2> v) const;
  // Faces of a cell, indexed by the omitted vertex position.
  std::array<int, 4> cell_faces(int cell) const;

 private:
  int d_;
  LiftingFunction lift_;
  std::vector<SubdivisionCell> cells_;
  std::vector<SubdivisionFace> faces_;
  std::vector<SubdivisionEdge> edges_;
  std::vector<LatticePoint> points_;
  std::map<Simplex3, int> cell_index_;
  std::map<std::array<LatticePoint, 3>, int> face_index_;
  std::map<std::array<LatticePoint, 2>, int> edge_index_;
};

enum class SubdivisionPath {
  Auto,        // Cube for the canonical lift, Hull otherwise
  Cube,        // translate the unit-cube pattern and clip (canonical lift only)
  Hull,        // gift-wrapping over the lifted lower hull
  CrossCheck,  // run both and require identical cell sets
};

// Builds and certifies the subdivision: every cell unimodular and strictly
// supported over Delta_d(Z), face census consistent, total volume d^3.
// DegeneracyError when a lift is not generic, CertificationError on any other
// failed certificate.
RegularSubdivision subdivide(int d, const LiftingFunction& lift = LiftingFunction::canonical(),
                             SubdivisionPath path = SubdivisionPath::Auto);

// The raw cell lists of the two construction paths, uncertified.
std::vector<Simplex3> cube_pattern_cells(int d);
std::vector<Simplex3> lower_hull_cells(int d, const LiftingFunction& lift);

}  // namespace tpants
