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

#include "tpants/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "tpants/error.hpp"

namespace tpants {

namespace {

Point3 to_double(const RationalPoint& p) { return {p[0].to_double(), p[1].to_double(), p[2].to_double()}; }
Point3 to_double(const LatticePoint& p) {
  return {static_cast<double>(p[0]), static_cast<double>(p[1]), static_cast<double>(p[2])};
}

Point3 operator+(const Point3& a, const Point3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Point3 operator-(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Point3 operator*(double s, const Point3& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot3(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Point3 cross3(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm3(const Point3& a) { return std::sqrt(dot3(a, a)); }

RationalPoint to_rational(const LatticePoint& p) { return {Rational(p[0]), Rational(p[1]), Rational(p[2])}; }
RationalPoint add(const RationalPoint& a, const RationalPoint& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

std::vector<LatticePoint> sorted_points(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Keeps the part of a convex polygon with <q, y - p> >= 0.
std::vector<Point3> clip_halfspace(const std::vector<Point3>& poly, const Point3& q, const Point3& p) {
  std::vector<Point3> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point3& a = poly[i];
    const Point3& b = poly[(i + 1) % n];
    const double sa = dot3(q, a - p);
    const double sb = dot3(q, b - p);
    if (sa >= 0) out.push_back(a);
    if ((sa >= 0) != (sb >= 0)) {
      const double s = sa / (sa - sb);
      out.push_back(a + s * (b - a));
    }
  }
  return out;
}

double point_segment_distance(const Point3& x, const Point3& a, const Point3& b) {
  const Point3 ab = b - a;
  const double len2 = dot3(ab, ab);
  double s = len2 > 0 ? dot3(x - a, ab) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return norm3(x - (a + s * ab));
}

}  // namespace

PLFunction::PLFunction(int d, const LiftingFunction& lift) {
  for (const auto& e : enumerate_delta(d)) terms_.push_back({e.m, lift(e.m)});
}

PLFunction::Exact PLFunction::evaluate(const RationalPoint& x) const {
  Exact out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational val = Rational(-t.lift);
    for (int i = 0; i < 3; ++i) val += Rational(t.m[i]) * x[i];
    if (first || val > out.value) {
      out.value = val;
      out.argmax.assign(1, t.m);
      first = false;
    } else if (val == out.value) {
      out.argmax.push_back(t.m);
    }
  }
  return out;
}

PLFunction::Approx PLFunction::evaluate(const Point3& x) const {
  std::vector<double> vals;
  vals.reserve(terms_.size());
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms_) {
    const double val = t.m[0] * x[0] + t.m[1] * x[1] + t.m[2] * x[2] - static_cast<double>(t.lift);
    vals.push_back(val);
    best = std::max(best, val);
  }
  Approx out;
  out.value = best;
  const double tol = 1e-9 * (1.0 + std::abs(best));
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (vals[i] >= best - tol) out.argmax.push_back(terms_[i].m);
  return out;
}

double PLFunction::value(const Point3& x) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms_)
    best = std::max(best, t.m[0] * x[0] + t.m[1] * x[1] + t.m[2] * x[2] - static_cast<double>(t.lift));
  return best;
}

PLFunction::Exact legendre_eval(const RationalPoint& x, int d) { return PLFunction(d).evaluate(x); }
PLFunction::Approx legendre_eval(const Point3& x, int d) { return PLFunction(d).evaluate(x); }

Point3 TropicalComplex::vertex_point(int id) const { return to_double(cells_[0].at(id).point); }

TropicalComplex build_tropical(const RegularSubdivision& sub) {
  TropicalComplex tc(sub.degree(), sub.lift());
  const PLFunction& pl = tc.legendre_;
  auto expect_argmax = [&](const RationalPoint& x, const std::vector<LatticePoint>& want, const char* what) {
    const auto got = sorted_points(pl.evaluate(x).argmax);
    if (got != sorted_points(want)) throw ConstructionError(std::string("inconsistent duality at ") + what);
  };

  // 0-cells: the normal of each supporting form is the point where the
  // cell's four terms tie.
  for (const auto& cell : sub.cells()) {
    TropicalCell v;
    v.id = cell.id;
    v.dim = 0;
    v.dual_face = cell.id;
    v.dual_points.assign(cell.simplex.v.begin(), cell.simplex.v.end());
    v.point = cell.support.n;
    const Rational level = -cell.support.b;
    for (const auto& m : cell.simplex.v) {
      Rational val = Rational(-sub.lift()(m));
      for (int i = 0; i < 3; ++i) val += Rational(m[i]) * v.point[i];
      if (val != level) throw ConstructionError("tropical vertex does not solve its cell equalities");
    }
    expect_argmax(v.point, v.dual_points, "vertex");
    tc.cells_[0].push_back(std::move(v));
  }

  // 1-cells from 2-faces.
  for (const auto& face : sub.faces()) {
    TropicalCell e;
    e.id = face.id;
    e.dim = 1;
    e.dual_face = face.id;
    e.dual_points.assign(face.vertices.begin(), face.vertices.end());
    e.bounded = !face.on_boundary();
    e.vertices.push_back(face.cells[0]);
    if (e.bounded) {
      e.vertices.push_back(face.cells[1]);
    } else {
      e.rays.push_back(delta_outward_normal(face.boundary_facet));
      expect_argmax(add(tc.cells_[0][face.cells[0]].point, to_rational(e.rays[0])), e.dual_points, "ray");
    }
    tc.cells_[1].push_back(std::move(e));
  }

  // 2-cells from edges: walk the faces and cells around each edge.
  std::vector<std::vector<int>> faces_of_edge(sub.edges().size());
  for (const auto& face : sub.faces()) {
    const auto& fv = face.vertices;
    for (const auto& pair : {std::array{fv[0], fv[1]}, std::array{fv[0], fv[2]}, std::array{fv[1], fv[2]}})
      faces_of_edge.at(*sub.find_edge(pair)).push_back(face.id);
  }
  for (const auto& edge : sub.edges()) {
    const auto& around = faces_of_edge[edge.id];
    auto other_face = [&](int cell, int not_face) {
      for (int f : sub.cell_faces(cell))
        if (f != not_face && std::find(around.begin(), around.end(), f) != around.end()) return f;
      throw ConstructionError("edge star is not a manifold");
    };
    auto other_cell = [&](int face, int cell) {
      const auto& fc = sub.faces()[face].cells;
      return fc[0] == cell ? fc[1] : fc[0];
    };
    std::vector<int> boundary;
    for (int f : around)
      if (sub.faces()[f].on_boundary()) boundary.push_back(f);

    TropicalCell p;
    p.id = edge.id;
    p.dim = 2;
    p.dual_face = edge.id;
    p.dual_points.assign(edge.vertices.begin(), edge.vertices.end());
    p.bounded = !edge.on_boundary;
    if (boundary.size() == 2) {
      int cur = boundary[0];
      int cell = sub.faces()[cur].cells[0];
      p.vertices.push_back(cell);
      while (true) {
        const int next = other_face(cell, cur);
        if (sub.faces()[next].on_boundary()) {
          p.rays.push_back(delta_outward_normal(sub.faces()[boundary[0]].boundary_facet));
          p.rays.push_back(delta_outward_normal(sub.faces()[next].boundary_facet));
          break;
        }
        cell = other_cell(next, cell);
        p.vertices.push_back(cell);
        cur = next;
      }
    } else if (boundary.empty() && !around.empty()) {
      const int start = around[0];
      int cell = sub.faces()[start].cells[0];
      int cur = start;
      p.vertices.push_back(cell);
      while (true) {
        const int next = other_face(cell, cur);
        if (next == start) break;
        cell = other_cell(next, cell);
        p.vertices.push_back(cell);
        cur = next;
        if (p.vertices.size() > around.size()) throw ConstructionError("edge star does not close");
      }
    } else {
      throw ConstructionError("edge with " + std::to_string(boundary.size()) + " boundary faces");
    }
    if (p.bounded != p.rays.empty()) throw ConstructionError("boundedness does not match the dual edge");

    // A point in the relative interior must see exactly the two dual terms.
    RationalPoint inner{Rational(0), Rational(0), Rational(0)};
    for (int vid : p.vertices) inner = add(inner, tc.cells_[0][vid].point);
    const Rational count(static_cast<Int>(p.vertices.size()));
    for (auto& c : inner) c /= count;
    for (const auto& r : p.rays) inner = add(inner, to_rational(r));
    expect_argmax(inner, p.dual_points, "2-cell interior");
    tc.cells_[2].push_back(std::move(p));
  }
  return tc;
}

bool BoundingBox::valid() const {
  for (int i = 0; i < 3; ++i)
    if (!std::isfinite(lo[i]) || !std::isfinite(hi[i]) || lo[i] > hi[i]) return false;
  return true;
}

bool BoundingBox::contains(const Point3& x, double tol) const {
  for (int i = 0; i < 3; ++i)
    if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
  return true;
}

BoundingBox BoundingBox::around(const Point3& centre, double half_width) {
  return {{centre[0] - half_width, centre[1] - half_width, centre[2] - half_width},
          {centre[0] + half_width, centre[1] + half_width, centre[2] + half_width}};
}

BoundingBox default_bbox(const TropicalComplex& complex, double margin) {
  BoundingBox box{{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::infinity()},
                  {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity()}};
  for (const auto& v : complex.cells(0)) {
    const Point3 p = complex.vertex_point(v.id);
    for (int i = 0; i < 3; ++i) {
      box.lo[i] = std::min(box.lo[i], p[i] - margin);
      box.hi[i] = std::max(box.hi[i], p[i] + margin);
    }
  }
  return box;
}

Polygon3 clip_cell(const TropicalComplex& complex, const TropicalCell& cell, const BoundingBox& bbox) {
  if (cell.dim != 2) throw DomainError("clip_cell: expected a 2-cell");
  Polygon3 poly;
  poly.normal = to_double(cell.dual_points[0] - cell.dual_points[1]);
  std::vector<Point3> verts;
  for (int id : cell.vertices) verts.push_back(complex.vertex_point(id));
  poly.offset = dot3(poly.normal, verts[0]);

  std::vector<Point3> units;
  for (const auto& r : cell.rays) {
    const Point3 rd = to_double(r);
    units.push_back((1.0 / norm3(rd)) * rd);
  }
  Point3 inner{0, 0, 0};
  for (const auto& v : verts) inner = inner + v;
  inner = (1.0 / static_cast<double>(verts.size())) * inner;
  for (const auto& u : units) inner = inner + u;

  // Edges of the cell as (point, direction) lines.
  std::vector<std::pair<Point3, Point3>> lines;
  const std::size_t k = verts.size();
  if (cell.bounded) {
    for (std::size_t i = 0; i < k; ++i) lines.push_back({verts[i], verts[(i + 1) % k] - verts[i]});
  } else {
    for (std::size_t i = 0; i + 1 < k; ++i) lines.push_back({verts[i], verts[i + 1] - verts[i]});
    lines.push_back({verts.front(), units[0]});
    lines.push_back({verts.back(), units[1]});
  }

  // Start from a square in the plane large enough to cover plane ∩ bbox.
  const Point3 centre = 0.5 * (bbox.lo + bbox.hi);
  const double half_diag = 0.5 * norm3(bbox.hi - bbox.lo);
  const Point3& n = poly.normal;
  const double nn = dot3(n, n);
  const Point3 foot = centre - ((dot3(n, centre) - poly.offset) / nn) * n;
  Point3 axis = std::abs(n[0]) < 0.9 * std::sqrt(nn) ? Point3{1, 0, 0} : Point3{0, 1, 0};
  Point3 e1 = cross3(n, axis);
  e1 = (1.0 / norm3(e1)) * e1;
  Point3 e2 = cross3(n, e1);
  e2 = (1.0 / norm3(e2)) * e2;
  const double h = 2.0 * half_diag + 1.0;
  std::vector<Point3> shape{foot + h * e1 + h * e2, foot - h * e1 + h * e2, foot - h * e1 - h * e2,
                            foot + h * e1 - h * e2};

  for (int i = 0; i < 3 && !shape.empty(); ++i) {
    Point3 q{0, 0, 0};
    q[i] = 1;
    shape = clip_halfspace(shape, q, bbox.lo);
    q[i] = -1;
    if (!shape.empty()) shape = clip_halfspace(shape, q, bbox.hi);
  }
  for (const auto& [p, u] : lines) {
    if (shape.empty()) break;
    Point3 q = cross3(n, u);
    if (dot3(q, inner - p) < 0) q = -1.0 * q;
    shape = clip_halfspace(shape, q, p);
  }

  // Drop repeated vertices introduced by clipping through corners.
  const double eps = 1e-12 * (1.0 + half_diag);
  for (const auto& pt : shape) {
    if (!poly.vertices.empty() && norm3(pt - poly.vertices.back()) <= eps) continue;
    poly.vertices.push_back(pt);
  }
  while (poly.vertices.size() > 1 && norm3(poly.vertices.front() - poly.vertices.back()) <= eps)
    poly.vertices.pop_back();
  if (poly.vertices.size() < 3) poly.vertices.clear();
  return poly;
}

TropicalDistance::TropicalDistance(const TropicalComplex& complex, const BoundingBox& bbox) {
  if (!bbox.valid()) throw DomainError("bounding box is empty or not finite");
  if (complex.cells(2).empty()) throw DomainError("tropical complex has no 2-cells");
  for (const auto& cell : complex.cells(2)) {
    Polygon3 poly = clip_cell(complex, cell, bbox);
    if (poly.vertices.empty()) continue;
    Point3 c{0, 0, 0};
    for (const auto& v : poly.vertices) c = c + v;
    c = (1.0 / static_cast<double>(poly.vertices.size())) * c;
    double r = 0;
    for (const auto& v : poly.vertices) r = std::max(r, norm3(v - c));
    centres_.push_back(c);
    radii_.push_back(r);
    cell_ids_.push_back(cell.id);
    polygons_.push_back(std::move(poly));
  }
  if (polygons_.empty()) throw DomainError("tropical complex does not meet the bounding box");
}

double TropicalDistance::distance(const Point3& x) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < polygons_.size(); ++i) {
    if (norm3(x - centres_[i]) - radii_[i] >= best) continue;
    const Polygon3& poly = polygons_[i];
    const Point3& n = poly.normal;
    const double nn = dot3(n, n);
    const double signed_dist = (dot3(n, x) - poly.offset) / std::sqrt(nn);
    const Point3 proj = x - ((dot3(n, x) - poly.offset) / nn) * n;
    const std::size_t k = poly.vertices.size();
    bool inside = true;
    int sign = 0;
    for (std::size_t j = 0; j < k && inside; ++j) {
      const Point3& a = poly.vertices[j];
      const Point3& b = poly.vertices[(j + 1) % k];
      const double s = dot3(cross3(b - a, proj - a), n);
      const double scale = norm3(b - a) * std::sqrt(nn) * (1.0 + norm3(proj - a));
      if (std::abs(s) <= 1e-14 * scale) continue;
      const int sg = s > 0 ? 1 : -1;
      if (sign == 0) sign = sg;
      else if (sg != sign) inside = false;
    }
    double dist;
    if (inside) {
      dist = std::abs(signed_dist);
    } else {
      dist = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < k; ++j)
        dist = std::min(dist, point_segment_distance(x, poly.vertices[j], poly.vertices[(j + 1) % k]));
    }
    best = std::min(best, dist);
  }
  return best;
}

double distance_to_tropical(const Point3& x, const TropicalComplex& complex, const BoundingBox& bbox) {
  if (complex.size() == 0) throw DomainError("distance_to_tropical: empty complex");
  return TropicalDistance(complex, bbox).distance(x);
}

Mesh build_mesh(const TropicalComplex& complex, const BoundingBox& bbox) {
  TropicalDistance clipped(complex, bbox);
  using Key = std::array<long long, 3>;
  auto key_of = [](const Point3& p) {
    return Key{std::llround(p[0] * 1e7), std::llround(p[1] * 1e7), std::llround(p[2] * 1e7)};
  };
  std::map<Key, Point3> unique;
  for (const auto& poly : clipped.polygons())
    for (const auto& v : poly.vertices) unique.emplace(key_of(v), v);
  Mesh mesh;
  std::map<Key, int> index;
  for (const auto& [key, p] : unique) {
    index.emplace(key, static_cast<int>(mesh.vertices.size()));
    mesh.vertices.push_back(p);
  }
  for (const auto& poly : clipped.polygons()) {
    std::vector<int> face;
    for (const auto& v : poly.vertices) {
      const int id = index.at(key_of(v));
      if (face.empty() || face.back() != id) face.push_back(id);
    }
    while (face.size() > 1 && face.front() == face.back()) face.pop_back();
    if (face.size() >= 3) mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

void write_mesh(const Mesh& mesh, const std::string& path, MeshFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  char buf[96];
  if (format == MeshFormat::Off) {
    out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.faces.size() << " 0\n";
    for (const auto& v : mesh.vertices) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v[0], v[1], v[2]);
      out << buf;
    }
    for (const auto& f : mesh.faces) {
      out << f.size();
      for (int i : f) out << ' ' << i;
      out << '\n';
    }
  } else {
    for (const auto& v : mesh.vertices) {
      std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
      out << buf;
    }
    for (const auto& f : mesh.faces) {
      out << 'f';
      for (int i : f) out << ' ' << i + 1;
      out << '\n';
    }
  }
  if (!out) throw IoError("failed writing " + path);
}

void export_mesh(const TropicalComplex& complex, const BoundingBox& bbox, const std::string& path,
                 MeshFormat format) {
  if (!bbox.valid()) throw DomainError("export_mesh: bounding box is empty or not finite");
  write_mesh(build_mesh(complex, bbox), path, format);
}

Mesh read_off(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string header;
  in >> header;
  if (header != "OFF") throw IoError(path + ": missing OFF header");
  std::size_t nv = 0, nf = 0, ne = 0;
  if (!(in >> nv >> nf >> ne)) throw IoError(path + ": bad OFF counts");
  Mesh mesh;
  mesh.vertices.resize(nv);
  for (auto& v : mesh.vertices)
    if (!(in >> v[0] >> v[1] >> v[2])) throw IoError(path + ": truncated vertex list");
  for (std::size_t i = 0; i < nf; ++i) {
    std::size_t k = 0;
    if (!(in >> k)) throw IoError(path + ": truncated face list");
    std::vector<int> face(k);
    for (auto& idx : face) {
      if (!(in >> idx) || idx < 0 || static_cast<std::size_t>(idx) >= nv) throw IoError(path + ": bad face index");
    }
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

}  // namespace tpants
