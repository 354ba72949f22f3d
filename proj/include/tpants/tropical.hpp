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
#include <string>
#include <vector>

#include "tpants/lattice.hpp"
#include "tpants/rational.hpp"
#include "tpants/subdivision.hpp"

namespace tpants {

using Point3 = std::array<double, 3>;
using RationalPoint = std::array<Rational, 3>;

// Piecewise-linear convex function x -> max_m <m, x> - v(m) over Delta_d(Z).
class PLFunction {
 public:
  struct Term {
    LatticePoint m;
    Int lift;
  };

  PLFunction(int d, const LiftingFunction& lift = LiftingFunction::canonical());

  const std::vector<Term>& terms() const { return terms_; }

  struct Exact {
    Rational value;
    std::vector<LatticePoint> argmax;
  };
  struct Approx {
    double value = 0;
    std::vector<LatticePoint> argmax;
  };

  Exact evaluate(const RationalPoint& x) const;
  // Terms within 1e-9 * (1 + |value|) of the maximum count as tied.
  Approx evaluate(const Point3& x) const;
  // Maximum only, no argmax bookkeeping.
  double value(const Point3& x) const;

 private:
  std::vector<Term> terms_;
};

PLFunction::Exact legendre_eval(const RationalPoint& x, int d);
PLFunction::Approx legendre_eval(const Point3& x, int d);

// Cell of the tropical hypersurface dual to a face of the subdivision. A
// k-cell is conv(vertices) + cone(rays); rays are primitive integer vectors.
struct TropicalCell {
  int id = -1;
  int dim = 0;
  std::vector<LatticePoint> dual_points;  // lattice points whose terms are maximal on the cell
  int dual_face = -1;  // index into cells() / faces() / edges() of the subdivision for dim 0 / 1 / 2
  bool bounded = true;
  // Vertex ids. 1-cells: one or two; 2-cells: boundary path in cyclic order
  // (closed when bounded, open between the two rays otherwise).
  std::vector<int> vertices;
  // Unbounded 1-cells: one ray. Unbounded 2-cells: rays[0] leaves
  // vertices.front(), rays[1] leaves vertices.back().
  std::vector<LatticePoint> rays;
  RationalPoint point{};  // 0-cells only
};

// Tropical hypersurface dual to a regular subdivision. Immutable.
class TropicalComplex {
 public:
  int degree() const { return d_; }
  const std::vector<TropicalCell>& cells(int dim) const { return cells_.at(dim); }
  std::size_t size() const { return cells_[0].size() + cells_[1].size() + cells_[2].size(); }
  Point3 vertex_point(int id) const;
  const PLFunction& legendre() const { return legendre_; }

 private:
  friend TropicalComplex build_tropical(const RegularSubdivision& sub);
  TropicalComplex(int d, const LiftingFunction& lift) : d_(d), legendre_(d, lift) {}

  int d_;
  PLFunction legendre_;
  std::array<std::vector<TropicalCell>, 3> cells_;
};

// Dual complex. Vertices are the normals of the cells' supporting forms;
// every incidence is checked against the exact Legendre transform and a
// failure raises ConstructionError.
TropicalComplex build_tropical(const RegularSubdivision& sub);

struct BoundingBox {
  Point3 lo{};
  Point3 hi{};

  bool valid() const;
  bool contains(const Point3& x, double tol = 0) const;
  // Centre +- half-width in every coordinate.
  static BoundingBox around(const Point3& centre, double half_width);
};

// Vertex bounding box of the complex, padded by `margin` on each side.
BoundingBox default_bbox(const TropicalComplex& complex, double margin = 10.0);

// Planar convex polygon, vertices in cyclic order.
struct Polygon3 {
  std::vector<Point3> vertices;
  Point3 normal{};  // plane normal (not normalised)
  double offset = 0;  // plane: <normal, x> = offset
};

// The 2-cells of a complex truncated to a box; also answers Euclidean
// distance queries against their union.
class TropicalDistance {
 public:
  TropicalDistance(const TropicalComplex& complex, const BoundingBox& bbox);

  double distance(const Point3& x) const;
  const std::vector<Polygon3>& polygons() const { return polygons_; }
  // Id of the 2-cell each polygon came from.
  const std::vector<int>& polygon_cells() const { return cell_ids_; }

 private:
  std::vector<Polygon3> polygons_;
  std::vector<int> cell_ids_;
  std::vector<Point3> centres_;
  std::vector<double> radii_;
};

// Euclidean distance from x to the complex (truncated to bbox). DomainError
// for an empty complex or an invalid box.
double distance_to_tropical(const Point3& x, const TropicalComplex& complex, const BoundingBox& bbox);

// Truncates one 2-cell to a box. Empty result if they do not meet.
Polygon3 clip_cell(const TropicalComplex& complex, const TropicalCell& cell, const BoundingBox& bbox);

struct Mesh {
  std::vector<Point3> vertices;
  std::vector<std::vector<int>> faces;
};

// 2-skeleton truncated to bbox, duplicate vertices merged, vertices sorted
// lexicographically.
Mesh build_mesh(const TropicalComplex& complex, const BoundingBox& bbox);

enum class MeshFormat { Off, Obj };
void write_mesh(const Mesh& mesh, const std::string& path, MeshFormat format = MeshFormat::Off);
void export_mesh(const TropicalComplex& complex, const BoundingBox& bbox, const std::string& path,
                 MeshFormat format = MeshFormat::Off);
Mesh read_off(const std::string& path);

}  // namespace tpants
