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

#include "tpants/invariants.hpp"

#include <cmath>
#include <numbers>

#include "tpants/error.hpp"

namespace tpants {

SurfaceInvariants compute_invariants(int d) {
  if (d < 5) throw DomainError("invariants require d >= 5, got " + std::to_string(d));
  const Int n = d;
  SurfaceInvariants s;
  s.d = d;
  s.k2 = checked_mul(n, checked_mul(n - 4, n - 4));
  s.chi = checked_add(checked_sub(checked_mul(n, checked_mul(n, n)), checked_mul(4, checked_mul(n, n))), 6 * n);
  const Int num = checked_sub(s.k2, checked_mul(2, s.chi));
  if (num % 3 != 0) throw ArithmeticError("signature (K^2 - 2 chi)/3 is not an integer at d=" + std::to_string(d));
  s.tau = num / 3;
  s.p_g = checked_mul(checked_mul(n - 1, n - 2), n - 3) / 6;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  s.vol_ke = 2 * pi2 * static_cast<double>(s.k2);
  s.yamabe = -std::sqrt(32 * pi2 * static_cast<double>(s.k2));
  s.pants_count = s.k2;
  return s;
}

bool ConsistencyReport::ok() const {
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

ConsistencyReport consistency_checks(int lo, int hi) {
  if (lo < 5 || hi > 50 || lo > hi)
    throw DomainError("consistency range must satisfy 5 <= lo <= hi <= 50, got " + std::to_string(lo) + ".." +
                      std::to_string(hi));
  const double pi2 = std::numbers::pi * std::numbers::pi;
  ConsistencyReport report;
  for (int d = lo; d <= hi; ++d) {
    const SurfaceInvariants s = compute_invariants(d);
    const Int noether_lhs = checked_mul(12, 1 + s.p_g), noether_rhs = checked_add(s.k2, s.chi);
    report.entries.push_back({d, "12(1+p_g) = K^2 + chi", noether_lhs == noether_rhs,
                              std::to_string(noether_lhs) + " vs " + std::to_string(noether_rhs)});
    const Int sig = checked_add(checked_mul(2, s.chi), checked_mul(3, s.tau));
    report.entries.push_back({d, "2 chi + 3 tau = K^2 >= 0", sig == s.k2 && sig >= 0,
                              std::to_string(sig) + " vs " + std::to_string(s.k2)});
    const double vol = static_cast<double>(s.pants_count) * 2 * pi2;
    report.entries.push_back({d, "pants_count * 2 pi^2 = vol", std::abs(vol - s.vol_ke) <= 1e-12 * s.vol_ke,
                              std::to_string(vol) + " vs " + std::to_string(s.vol_ke)});
    const double y2 = s.yamabe * s.yamabe, want = 32 * pi2 * static_cast<double>(s.k2);
    report.entries.push_back({d, "yamabe^2 = 32 pi^2 K^2", std::abs(y2 - want) <= 1e-12 * want,
                              std::to_string(y2) + " vs " + std::to_string(want)});
  }
  return report;
}

}  // namespace tpants
