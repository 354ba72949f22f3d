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

#include "tpants/checked.hpp"

namespace tpants {

// Closed-form invariants of a smooth degree-d surface in CP^3.
struct SurfaceInvariants {
  int d = 0;
  Int k2 = 0;           // K^2 = d(d-4)^2
  Int chi = 0;          // d^3 - 4d^2 + 6d
  Int tau = 0;          // (K^2 - 2 chi) / 3
  Int p_g = 0;          // (d-1)(d-2)(d-3)/6
  double vol_ke = 0;    // 2 pi^2 K^2
  double yamabe = 0;    // -sqrt(32 pi^2 K^2)
  Int pants_count = 0;  // K^2
};

// DomainError for d < 5.
SurfaceInvariants compute_invariants(int d);

struct ConsistencyEntry {
  int d = 0;
  std::string identity;
  bool ok = false;
  std::string detail;
};

struct ConsistencyReport {
  std::vector<ConsistencyEntry> entries;
  bool ok() const;
};

// Checks 12(1 + p_g) = K^2 + chi, 2 chi + 3 tau = K^2 >= 0,
// pants_count * 2 pi^2 = vol_ke and yamabe^2 = 32 pi^2 K^2 for each d in
// [lo, hi]. Failures are reported, not thrown. DomainError unless
// 5 <= lo <= hi <= 50.
ConsistencyReport consistency_checks(int lo, int hi);

}  // namespace tpants
