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

#include <string>
#include <vector>

#include "json.hpp"
#include "tpants/amoeba.hpp"
#include "tpants/invariants.hpp"
#include "tpants/pants.hpp"
#include "tpants/patchwork.hpp"
#include "tpants/subdivision.hpp"
#include "tpants/tables.hpp"
#include "tpants/tropical.hpp"

namespace tpants {

using Json = nlohmann::ordered_json;

// Every document carries "schema": 1. Exact integers and rationals are
// decimal strings; counts and ids are plain numbers.
inline constexpr int kSchemaVersion = 1;

Json exact(Int v);
Json exact(const Rational& r);
Json exact(const LatticePoint& p);

Json subdivision_json(const RegularSubdivision& sub);
Json tables_json(const TablesReport& report);
Json tropical_json(const TropicalComplex& complex);
Json pants_json(const RegularSubdivision& sub, const CellClassification& cls, const K3Report& k3,
                const PantsGraph& graph, const X0Model& x0);

// Identity sweep certificate.
struct IdentitySweep {
  int d = 0;
  std::vector<MonomialIdentity> identities;   // every interior cell x every lattice point
  std::vector<ResidualReport> residuals;      // one per interior cell
  std::vector<BoundaryRelation> relations;    // every interior cell x every neighbour
  std::vector<std::string> violations;        // lemma violations, verbatim

  bool ok() const;
};

IdentitySweep identity_sweep(const RegularSubdivision& sub);
Json identities_json(const IdentitySweep& sweep);

Json invariants_json(const std::vector<SurfaceInvariants>& rows, const ConsistencyReport& report);
Json period_json(const FiberProbe& probe, const PeriodEstimate& est);
Json fiber_json(const FiberProbe& probe, const std::vector<FiberResidual>& rows);

// x1,x2,x3,theta1,theta2,theta3,residual with %.17g.
std::string cloud_csv(const SampleCloud& cloud);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

// Writes text to path; IoError on failure.
void write_text(const std::string& path, const std::string& text);

}  // namespace tpants
