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

#include "tpants/tables.hpp"

#include "tpants/subdivision.hpp"

namespace tpants {

Simplex3 cube_cell_simplex(const CubeCellRow& row) {
  Simplex3 s;
  for (int i = 0; i < 4; ++i) s.v[i] = kCubeCorners[row.corners[i]].m;
  return s;
}

TablesReport verify_tables() {
  TablesReport report;
  const auto lift = LiftingFunction::canonical();

  std::vector<LatticePoint> region;
  for (const auto& p : kCubeCorners) region.push_back(p.m);
  for (const auto& p : kNearbyPoints) region.push_back(p.m);

  for (int i = 0; i < 8; ++i) {
    report.lift_checked += 2;
    const Int a = lift_value(kCubeCorners[i].m);
    const Int b = lift_value(kNearbyPoints[i].m);
    if (a == kLiftOnCorners[i]) {
      ++report.lift_matched;
    } else {
      report.mismatches.push_back({"v", kCubeCorners[i].name, std::to_string(kLiftOnCorners[i]),
                                   std::to_string(a)});
    }
    if (b == kLiftOnNearby[i]) {
      ++report.lift_matched;
    } else {
      report.mismatches.push_back({"v", kNearbyPoints[i].name, std::to_string(kLiftOnNearby[i]),
                                   std::to_string(b)});
    }
  }

  report.strictly_supporting = true;
  for (const auto& row : kCubeCells) {
    const Simplex3 cell = cube_cell_simplex(row);
    const AffineForm form = supporting_form(cell.v, lift);
    const AffineForm expected{{Rational(row.normal[0]), Rational(row.normal[1]), Rational(row.normal[2])},
                              Rational(row.offset)};
    ++report.forms_checked;
    if (form == expected) {
      ++report.forms_matched;
    } else {
      report.mismatches.push_back({row.name, "form", expected.to_string(), form.to_string()});
    }
    for (int i = 0; i < 8; ++i) {
      const Rational at_corner = form(kCubeCorners[i].m);
      const Rational at_nearby = form(kNearbyPoints[i].m);
      report.entries_checked += 2;
      if (at_corner == Rational(row.on_corners[i])) {
        ++report.entries_matched;
      } else {
        report.mismatches.push_back({row.name, kCubeCorners[i].name,
                                     std::to_string(row.on_corners[i]), at_corner.to_string()});
      }
      if (at_nearby == Rational(row.on_nearby[i])) {
        ++report.entries_matched;
      } else {
        report.mismatches.push_back({row.name, kNearbyPoints[i].name,
                                     std::to_string(row.on_nearby[i]), at_nearby.to_string()});
      }
    }
    if (!check_supporting(form, cell, region, lift).ok()) report.strictly_supporting = false;
  }
  return report;
}

}  // namespace tpants
