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

#include "tpants/pants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tpants/error.hpp"

namespace tpants {

namespace {

bool cell_inside(const SubdivisionCell& c, int d) {
  return std::all_of(c.simplex.v.begin(), c.simplex.v.end(),
                     [d](const LatticePoint& m) { return in_interior_polytope(m, d); });
}

// Face of the subdivision lying in a facet of the interior polytope.
bool on_interior_boundary(const SubdivisionFace& f, int d) {
  unsigned mask = ~0u;
  for (const auto& m : f.vertices) {
    if (!in_interior_polytope(m, d)) return false;
    mask &= interior_polytope_facet_mask(m, d);
  }
  return mask != 0;
}

Simplex3 translated(const Simplex3& s, const LatticePoint& shift) {
  Simplex3 out = s;
  for (auto& v : out.v) v = v + shift;
  return sorted(out);
}

}  // namespace

std::string to_string(CellClass c) {
  switch (c) {
    case CellClass::Interior: return "interior";
    case CellClass::Flap: return "flap";
    case CellClass::Other: return "other";
  }
  return "?";
}

std::vector<int> CellClassification::t_o() const {
  std::vector<int> out = interior;
  out.insert(out.end(), flap.begin(), flap.end());
  return out;
}

CellClassification classify_cells(const RegularSubdivision& sub) {
  const int d = sub.degree();
  if (d < 5) throw DomainError("classify_cells requires d >= 5, got " + std::to_string(d));
  CellClassification out;
  out.d = d;
  out.cls.assign(sub.cells().size(), CellClass::Other);
  for (const auto& c : sub.cells())
    if (cell_inside(c, d)) out.cls[c.id] = CellClass::Interior;

  for (const auto& f : sub.faces()) {
    if (!on_interior_boundary(f, d)) continue;
    int outside = -1, count = 0;
    for (int c : f.cells) {
      if (c < 0 || out.cls[c] == CellClass::Interior) continue;
      outside = c;
      ++count;
    }
    if (count != 1)
      throw CertificationError("boundary face " + std::to_string(f.id) + " of the interior polytope has " +
                               std::to_string(count) + " outside cells");
    if (out.cls[outside] == CellClass::Flap)
      throw CertificationError("cell " + std::to_string(outside) + " meets the interior polytope in two faces");
    out.cls[outside] = CellClass::Flap;
    out.flap_face[outside] = f.id;
  }
  for (std::size_t i = 0; i < out.cls.size(); ++i) {
    if (out.cls[i] == CellClass::Interior) out.interior.push_back(static_cast<int>(i));
    if (out.cls[i] == CellClass::Flap) out.flap.push_back(static_cast<int>(i));
  }
  return out;
}

K3Report k3_blocks(const RegularSubdivision& sub) { return k3_blocks(sub, classify_cells(sub)); }

K3Report k3_blocks(const RegularSubdivision& sub, const CellClassification& cls) {
  const int d = sub.degree();
  if (d < 5) throw DomainError("k3_blocks requires d >= 5, got " + std::to_string(d));
  K3Report report;
  std::set<Simplex3> united;
  for (const auto& e : enumerate_delta(d)) {
    if (!e.interior) continue;
    const LatticePoint corner = e.m - LatticePoint(1, 1, 1);
    K3Block block{e.m, {}};
    for (const auto& c : sub.cells()) {
      const bool inside = std::all_of(c.simplex.v.begin(), c.simplex.v.end(),
                                      [&](const LatticePoint& p) { return in_delta(p - corner, 4); });
      if (!inside) continue;
      block.cells.push_back(c.id);
      if (!cls.in_t_o(c.id)) united.insert(translated(c.simplex, LatticePoint(0, 0, 0) - corner));
    }
    report.blocks.push_back(std::move(block));
  }
  const RegularSubdivision ref = subdivide(4, sub.lift().is_canonical() ? sub.lift() : LiftingFunction::canonical());
  std::set<Simplex3> reference;
  for (const auto& c : ref.cells()) reference.insert(c.simplex);
  report.union_size = united.size();
  report.reference_size = reference.size();
  report.lemma_holds = united == reference;
  if (!report.lemma_holds)
    throw LemmaViolation("K3 block union has " + std::to_string(united.size()) + " cells, degree-4 subdivision has " +
                         std::to_string(reference.size()));
  return report;
}

std::vector<int> PantsGraph::degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (const auto& e : edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

std::map<int, int> PantsGraph::degree_histogram() const {
  std::map<int, int> h;
  for (int k : degrees()) ++h[k];
  return h;
}

int PantsGraph::components() const {
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = static_cast<int>(nodes.size());
  for (const auto& e : edges) {
    const int ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      parent[std::max(ra, rb)] = std::min(ra, rb);
      --count;
    }
  }
  return count;
}

void PantsGraph::write_dot(std::ostream& out) const {
  out << "graph B {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"f" << nodes[i].face << "\"";
    if (nodes[i].cells.size() > 1) out << ", shape=box";
    out << "];\n";
  }
  for (const auto& e : edges) out << "  n" << e.a << " -- n" << e.b << " [label=\"c" << e.cell << "\"];\n";
  out << "}\n";
}

PantsGraph build_pants_graph(const CellClassification& cls, const RegularSubdivision& sub) {
  PantsGraph g;
  std::map<int, int> node_of_face;
  for (int c : cls.t_o()) {
    const auto faces = sub.cell_faces(c);
    std::array<int, 4> ids{};
    for (int k = 0; k < 4; ++k) {
      auto [it, fresh] = node_of_face.emplace(faces[k], static_cast<int>(g.nodes.size()));
      if (fresh) g.nodes.push_back({faces[k], {}});
      g.nodes[it->second].cells.push_back(c);
      ids[k] = it->second;
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.edges.push_back({std::min(ids[i], ids[j]), std::max(ids[i], ids[j]), c});
  }
  return g;
}

bool X0Component::general_position() const {
  for (int skip = 0; skip < 4; ++skip) {
    std::array<LatticePoint, 3> rows;
    int r = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) rows[r++] = LatticePoint(lines[i][0], lines[i][1], lines[i][2]);
    if (det3(rows[0], rows[1], rows[2]) == 0) return false;
  }
  return true;
}

X0Model build_x0(const CellClassification& cls, const RegularSubdivision& sub) {
  X0Model model;
  model.d = cls.d;
  const std::array<std::array<Int, 3>, 4> lines{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};
  for (int c : cls.interior) {
    X0Component comp;
    comp.kind = X0Component::Kind::Cell;
    comp.source = c;
    comp.labels = sub.cells()[c].simplex.v;
    comp.lines = lines;
    model.components.push_back(comp);
  }
  for (int c : cls.flap) {
    const int fid = cls.flap_face.at(c);
    const auto& face = sub.faces()[fid];
    const int inner = face.cells[0] == c ? face.cells[1] : face.cells[0];
    if (inner < 0 || cls.cls.at(inner) != CellClass::Interior)
      throw CertificationError("boundary face " + std::to_string(fid) + " has no interior neighbour");
    X0Component comp;
    comp.kind = X0Component::Kind::BoundaryFace;
    comp.source = fid;
    for (const auto& m : sub.cells()[inner].simplex.v)
      if (std::find(face.vertices.begin(), face.vertices.end(), m) == face.vertices.end()) comp.labels[0] = m;
    std::copy(face.vertices.begin(), face.vertices.end(), comp.labels.begin() + 1);
    comp.lines = lines;
    model.components.push_back(comp);
  }
  return model;
}

}  // namespace tpants
