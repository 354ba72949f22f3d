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
#include <ostream>
#include <string>
#include <vector>

#include "tpants/lattice.hpp"
#include "tpants/subdivision.hpp"

namespace tpants {

enum class CellClass { Interior, Flap, Other };
std::string to_string(CellClass c);

// Cells of a degree-d subdivision sorted into the pants cells T^o: those
// inside the interior polytope and the flaps hanging off its boundary.
struct CellClassification {
  int d = 0;
  std::vector<CellClass> cls;  // indexed by cell id
  std::vector<int> interior;
  std::vector<int> flap;
  // For each flap, the face it shares with the boundary of the interior polytope.
  std::map<int, int> flap_face;

  // interior followed by flap, ascending within each group.
  std::vector<int> t_o() const;
  std::size_t count() const { return interior.size() + flap.size(); }
  bool in_t_o(int cell) const { return cls.at(cell) != CellClass::Other; }
};

// DomainError for d < 5; CertificationError if a boundary face of the
// interior polytope does not have exactly one incident cell outside it.
CellClassification classify_cells(const RegularSubdivision& sub);

struct K3Block {
  LatticePoint m;          // interior lattice point
  std::vector<int> cells;  // cells inside m - (1,1,1) + Delta_4
};

struct K3Report {
  std::vector<K3Block> blocks;
  // Union over m of the non-pants block cells translated by (1,1,1) - m
  // equals the cell set of the degree-4 subdivision.
  bool lemma_holds = false;
  std::size_t union_size = 0;
  std::size_t reference_size = 0;
};

// Raises LemmaViolation if the union does not match.
K3Report k3_blocks(const RegularSubdivision& sub, const CellClassification& cls);
K3Report k3_blocks(const RegularSubdivision& sub);

// Multigraph: one node per pants face class (faces shared by two pants
// cells merged), a K4 on the four faces of every pants cell.
struct PantsGraph {
  struct Node {
    int face = -1;           // subdivision face id
    std::vector<int> cells;  // pants cells containing it (one or two)
  };
  struct Edge {
    int a = -1, b = -1;  // node indices, a <= b
    int cell = -1;       // cell whose K4 contributed the edge
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;

  std::vector<int> degrees() const;
  // Degree -> number of nodes with that degree.
  std::map<int, int> degree_histogram() const;
  int components() const;
  void write_dot(std::ostream& out) const;
};

PantsGraph build_pants_graph(const CellClassification& cls, const RegularSubdivision& sub);

// Symbolic limit variety. Each component is a plane with coordinates
// (Z1, Z2, Z3) after eliminating Z0 via Z0 + Z1 + Z2 + Z3 = 0; its four
// distinguished lines are Z1 = 0, Z2 = 0, Z3 = 0 and Z1 + Z2 + Z3 = 0.
struct X0Component {
  enum class Kind { Cell, BoundaryFace };
  Kind kind = Kind::Cell;
  int source = -1;                    // cell id (Cell) or face id (BoundaryFace)
  std::array<LatticePoint, 4> labels; // Z_{labels[0]}, ..., Z_{labels[3]}
  std::array<std::array<Int, 3>, 4> lines;  // line coefficients in (Z1, Z2, Z3)

  // Every three of the four lines are independent.
  bool general_position() const;
};

struct X0Model {
  int d = 0;
  std::vector<X0Component> components;
};

X0Model build_x0(const CellClassification& cls, const RegularSubdivision& sub);

}  // namespace tpants
