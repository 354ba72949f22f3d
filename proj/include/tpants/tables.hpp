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

namespace tpants {

// The six-tetrahedron pattern of the canonical lift on the unit cube, with the
// published supporting forms and their values on the cube corners and on the
// eight nearby points used to certify strictness.
struct CubePointLabel {
  const char* name;
  LatticePoint m;
};

inline constexpr std::array<CubePointLabel, 8> kCubeCorners{{
    {"p0", {0, 0, 0}},
    {"p1", {1, 0, 0}},
    {"p2", {0, 1, 0}},
    {"p3", {0, 0, 1}},
    {"p12", {1, 1, 0}},
    {"p13", {1, 0, 1}},
    {"p23", {0, 1, 1}},
    {"p123", {1, 1, 1}},
}};

inline constexpr std::array<CubePointLabel, 8> kNearbyPoints{{
    {"p1'", {0, -1, 0}},
    {"p2'", {1, -1, 0}},
    {"p3'", {1, -1, 1}},
    {"p4'", {0, -1, 1}},
    {"p5'", {0, 0, -1}},
    {"p6'", {1, 0, -1}},
    {"p7'", {1, 1, -1}},
    {"p8'", {0, 1, -1}},
}};

struct CubeCellRow {
  const char* name;
  std::array<int, 4> corners;  // indices into kCubeCorners
  std::array<Int, 3> normal;
  Int offset;
  std::array<Int, 8> on_corners;  // form values at kCubeCorners
  std::array<Int, 8> on_nearby;   // form values at kNearbyPoints
};

inline constexpr std::array<Int, 8> kLiftOnCorners{0, 8, 8, 13, 24, 33, 33, 61};
inline constexpr std::array<Int, 8> kLiftOnNearby{8, 8, 21, 9, 13, 9, 13, 9};

inline constexpr std::array<CubeCellRow, 6> kCubeCells{{
    {"p0p1p2p3", {0, 1, 2, 3}, {8, 8, 13}, 0,
     {0, 8, 8, 13, 16, 21, 21, 29}, {-8, 0, 13, 5, -13, -5, 3, -5}},
    {"p12p1p2p3", {4, 1, 2, 3}, {16, 16, 21}, -8,
     {-8, 8, 8, 13, 24, 29, 29, 45}, {-24, -8, 13, -3, -29, -13, 3, -13}},
    {"p2p23p12p3", {2, 6, 4, 3}, {16, 20, 25}, -12,
     {-12, 4, 8, 13, 24, 29, 33, 49}, {-32, -16, 9, -7, -37, -21, -1, -17}},
    {"p1p13p12p3", {1, 5, 4, 3}, {20, 16, 25}, -12,
     {-12, 8, 4, 13, 24, 33, 29, 49}, {-28, -8, 17, -5, -37, -17, -1, -21}},
    {"p3p13p23p12", {3, 5, 6, 4}, {20, 20, 29}, -16,
     {-16, 4, 4, 13, 24, 33, 33, 53}, {-36, -16, 13, -7, -45, -25, -5, -25}},
    {"p12p13p23p123", {4, 5, 6, 7}, {28, 28, 37}, -32,
     {-32, -4, -4, 5, 24, 33, 33, 61}, {-60, -32, 5, -23, -69, -41, -13, -41}},
}};

Simplex3 cube_cell_simplex(const CubeCellRow& row);

struct TableMismatch {
  std::string row;     // cell name, or "v" for the lift row
  std::string column;  // point name, or "form"
  std::string expected;
  std::string computed;
};

struct TablesReport {
  int forms_checked = 0;
  int forms_matched = 0;
  int entries_checked = 0;  // form evaluations, corners + nearby
  int entries_matched = 0;
  int lift_checked = 0;  // lift row values
  int lift_matched = 0;
  bool strictly_supporting = false;  // every form strictly below v off its cell
  std::vector<TableMismatch> mismatches;

  bool ok() const {
    return mismatches.empty() && strictly_supporting && forms_matched == forms_checked &&
           entries_matched == entries_checked && lift_matched == lift_checked;
  }
};

// Recomputes every supporting form and evaluation in the cube tables from the
// canonical lift and diffs against the published values.
TablesReport verify_tables();

}  // namespace tpants
