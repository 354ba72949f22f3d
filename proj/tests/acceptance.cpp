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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "tpants/amoeba.hpp"
#include "tpants/cli.hpp"
#include "tpants/invariants.hpp"
#include "tpants/pants.hpp"
#include "tpants/patchwork.hpp"
#include "tpants/subdivision.hpp"
#include "tpants/tables.hpp"
#include "tpants/tropical.hpp"

using namespace tpants;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

bool on_common_facet(const std::vector<LatticePoint>& pts, int d) {
  unsigned mask = ~0u;
  for (const auto& m : pts) mask &= delta_facet_mask(m, d);
  return mask != 0;
}

Verdict table_fidelity() {
  Verdict v;
  const auto t0 = Clock::now();
  const TablesReport r = verify_tables();
  const double dt = seconds_since(t0);
  v.detail = std::to_string(r.entries_matched) + "/" + std::to_string(r.entries_checked) + " entries match";
  for (const auto& m : r.mismatches)
    v.detail += "; " + m.row + " at " + m.column + ": table " + m.expected + ", computed " + m.computed;
  v.ok = r.entries_checked == 96 && r.entries_matched == 96 && r.mismatches.empty();
  v.require(dt < 1.0, "runtime " + fmt("%.2f", dt) + " s");
  return v;
}

Verdict cell_counts() {
  Verdict v;
  double t7 = 0;
  for (int d = 1; d <= 7; ++d) {
    const auto t0 = Clock::now();
    const RegularSubdivision sub = subdivide(d);
    if (d == 7) t7 = seconds_since(t0);
    const std::string tag = "d=" + std::to_string(d);
    v.require(sub.cells().size() == static_cast<std::size_t>(d * d * d), tag + " cell count");
    std::map<std::vector<LatticePoint>, int> incidence;
    for (const auto& c : sub.cells()) {
      v.require(normalized_volume(c.simplex) == 1, tag + " non-unimodular cell");
      for (int skip = 0; skip < 4; ++skip) {
        std::vector<LatticePoint> f;
        for (int k = 0; k < 4; ++k)
          if (k != skip) f.push_back(c.simplex.v[k]);
        std::sort(f.begin(), f.end());
        ++incidence[f];
      }
    }
    for (const auto& [face, n] : incidence)
      v.require(n == (on_common_facet(face, d) ? 1 : 2), tag + " face incidence");
    v.require(incidence.size() == sub.faces().size(), tag + " face count");
  }
  v.require(t7 < 10.0, "d=7 runtime " + fmt("%.2f", t7) + " s");
  v.detail = (v.ok ? "d^3 unimodular cells for d=1..7, d=7 in " + fmt("%.2f", t7) + " s" : v.detail);
  return v;
}

Verdict pants_counts() {
  Verdict v;
  std::string counts;
  for (int d = 5; d <= 7; ++d) {
    const CellClassification cls = classify_cells(subdivide(d));
    const std::size_t k = d - 4;
    v.require(cls.interior.size() == k * k * k, "interior count at d=" + std::to_string(d));
    v.require(cls.flap.size() == 4 * k * k, "flap count at d=" + std::to_string(d));
    v.require(cls.count() == d * k * k, "|T^o| at d=" + std::to_string(d));
    counts += (counts.empty() ? "" : ", ") + std::to_string(cls.count());
  }
  if (v.ok) v.detail = "|T^o| = " + counts;
  return v;
}

Verdict k3_lemma() {
  Verdict v;
  for (int d = 5; d <= 7; ++d) {
    const K3Report r = k3_blocks(subdivide(d));
    v.require(r.lemma_holds, "set equality fails at d=" + std::to_string(d));
    v.require(r.blocks.size() == static_cast<std::size_t>(interior_lattice_count(d)), "block count");
    for (const auto& b : r.blocks) v.require(b.cells.size() == 64, "block of size " + std::to_string(b.cells.size()));
  }
  if (v.ok) v.detail = "set equality holds for d=5,6,7, 64 cells per block";
  return v;
}

Verdict identity_sweeps() {
  Verdict v;
  std::size_t identities = 0, residuals = 0;
  for (int d = 5; d <= 6; ++d) {
    const RegularSubdivision sub = subdivide(d);
    const CellClassification cls = classify_cells(sub);
    const auto points = enumerate_delta(d);
    for (int c : cls.interior) {
      const auto& vert = sub.cells()[c].simplex.v;
      for (const auto& e : points) {
        const MonomialIdentity id = monomial_identity(sub, c, e.m);
        LatticePoint w(0, 0, 0);
        Int tp = id.exponent, weight = 0;
        for (int k = 0; k < 4; ++k) {
          w = w + id.a[k] * vert[k];
          tp -= id.a[k] * lift_value(vert[k]);
          weight += id.a[k];
        }
        v.require(id.verified && w == e.m && tp == 0 && weight == 1, "identity fails at " + e.m.to_string());
        ++identities;
      }
      for (const auto& r : residual_exponents(sub, c).entries) {
        v.require(r.exponent < 0, "nonnegative residual at " + r.m.to_string());
        ++residuals;
      }
    }
  }
  if (v.ok)
    v.detail = std::to_string(identities) + " identities verified, " + std::to_string(residuals) +
               " residual exponents negative";
  return v;
}

Verdict tropical_duality() {
  Verdict v;
  for (int d = 1; d <= 6; ++d) {
    const RegularSubdivision sub = subdivide(d);
    const TropicalComplex tc = build_tropical(sub);
    const std::string tag = " at d=" + std::to_string(d);
    v.require(tc.cells(0).size() == sub.cells().size(), "vertex/cell count" + tag);
    v.require(tc.cells(1).size() == sub.faces().size(), "edge/face count" + tag);
    v.require(tc.cells(2).size() == sub.edges().size(), "polygon/edge count" + tag);
    for (const auto& e : tc.cells(1)) {
      const auto& f = sub.faces()[e.dual_face].vertices;
      v.require(e.bounded == !on_common_facet({f.begin(), f.end()}, d), "edge boundedness" + tag);
    }
    for (const auto& p : tc.cells(2)) {
      const auto& ed = sub.edges()[p.dual_face].vertices;
      v.require(p.bounded == !on_common_facet({ed.begin(), ed.end()}, d), "polygon boundedness" + tag);
    }
  }
  const TropicalComplex one = build_tropical(subdivide(1));
  v.require(one.cells(0).size() == 1, "d=1 vertex count");
  if (!one.cells(0).empty()) {
    const auto& p = one.cells(0)[0].point;
    v.require(p[0] == Rational(8) && p[1] == Rational(8) && p[2] == Rational(13), "d=1 vertex not at (8,8,13)");
  }
  if (v.ok) v.detail = "k <-> 3-k bijection and boundedness for d=1..6, d=1 vertex (8,8,13)";
  return v;
}

Verdict graph_b() {
  Verdict v;
  for (int d = 5; d <= 7; ++d) {
    const RegularSubdivision sub = subdivide(d);
    const CellClassification cls = classify_cells(sub);
    const PantsGraph g = build_pants_graph(cls, sub);
    const std::size_t pants = static_cast<std::size_t>(d) * (d - 4) * (d - 4);
    v.require(g.edges.size() == 6 * pants, "edge count at d=" + std::to_string(d));
    long sum = 0;
    for (int deg : g.degrees()) sum += deg;
    v.require(sum == static_cast<long>(2 * g.edges.size()), "degree sum at d=" + std::to_string(d));
    if (d == 5) {
      v.require(g.nodes.size() == 16, "d=5 vertices " + std::to_string(g.nodes.size()));
      v.require(g.edges.size() == 30, "d=5 edges " + std::to_string(g.edges.size()));
      v.require(g.degree_histogram() == std::map<int, int>{{3, 12}, {6, 4}}, "d=5 degree multiset");
    }
  }
  if (v.ok) v.detail = "d=5: 16 vertices, 30 edges, degrees {6^4, 3^12}; 6|T^o| edges for d=5,6,7";
  return v;
}

Verdict amoeba_convergence() {
  Verdict v;
  const std::vector<double> ts{std::exp(4.0), std::exp(8.0), std::exp(16.0)};
  for (int d : {1, 5}) {
    const auto t0 = Clock::now();
    const RegularSubdivision sub = subdivide(d);
    const SampleGrid grid = default_grid(build_tropical(sub));
    const auto rows = convergence_study(sub, ts, grid);
    const double dt = seconds_since(t0);
    std::string series;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      series += (i ? " > " : "") + fmt("%.4g", rows[i].max_distance);
      if (i) v.require(rows[i].max_distance < rows[i - 1].max_distance, "not decreasing at d=" + std::to_string(d));
    }
    if (d == 1) v.require(rows.back().max_distance < 0.1, "d=1 distance at e^16 is " + fmt("%.4g", rows.back().max_distance));
    if (d == 5) v.require(dt < 300, "d=5 runtime " + fmt("%.1f", dt) + " s");
    if (v.ok) v.detail += (v.detail.empty() ? "" : "; ") + ("d=" + std::to_string(d) + ": " + series);
  }
  return v;
}

Verdict limit_fiber() {
  Verdict v;
  const RegularSubdivision sub = subdivide(1);
  const FiberProbe probe = default_probe(build_tropical(sub), sub, {0, 0, 0}, {1, 0, 0});
  double pa = INFINITY, pr = INFINITY;
  for (double lt : {4.0, 8.0, 16.0}) {
    const FiberResidual r = limit_fiber_check(probe, sub, std::exp(lt));
    v.require(r.angle_residual < pa && r.ratio_residual < pr, "not decreasing at log t=" + fmt("%g", lt));
    pa = r.angle_residual;
    pr = r.ratio_residual;
  }
  v.require(pa < 0.05 && pr < 0.05, "residuals at e^16: " + fmt("%.3g", pa) + ", " + fmt("%.3g", pr));
  if (v.ok) v.detail = "at e^16: angle " + fmt("%.3g", pa) + ", ratio " + fmt("%.3g", pr);
  return v;
}

Verdict period() {
  Verdict v;
  const RegularSubdivision sub = subdivide(1);
  const FiberProbe probe = default_probe(build_tropical(sub), sub, {0, 0, 0}, {0, 0, 1});
  const double target = 4 * kPi * kPi;
  const double t = std::exp(16.0);
  const PeriodEstimate lim = period_integral(probe, sub, t, 64, PeriodMode::LimitIntegrand);
  const double lim_err = std::abs(lim.value - Complex(target, 0));
  v.require(lim_err < 1e-6, "limit integrand error " + fmt("%.3g", lim_err));
  const PeriodEstimate num = period_integral(probe, sub, t, 64, PeriodMode::Numeric);
  const double rel = std::abs(num.value - Complex(target, 0)) / target;
  v.require(rel < 0.1, "numeric relative error " + fmt("%.3g", rel));
  if (v.ok)
    v.detail = "limit error " + fmt("%.2g", lim_err) + ", numeric " + fmt("%.10g", num.value.real()) + " vs 4 pi^2 = " +
               fmt("%.10g", target);
  return v;
}

Verdict invariants() {
  Verdict v;
  const SurfaceInvariants s = compute_invariants(5);
  v.require(s.k2 == 5 && s.chi == 55 && s.tau == -35 && s.p_g == 4, "d=5 integer fixture");
  const double sigma = -4 * kPi * std::sqrt(10.0);
  v.require(std::abs(s.yamabe - sigma) <= 1e-9 * std::abs(sigma), "yamabe " + fmt("%.12g", s.yamabe));
  v.require(std::abs(s.yamabe - -39.7384) < 5e-5, "yamabe does not round to -39.7384");
  v.require(std::abs(s.vol_ke - 10 * kPi * kPi) <= 1e-9 * 10 * kPi * kPi, "volume");
  v.require(consistency_checks(5, 12).ok(), "consistency identities for d=5..12");
  for (int d = 5; d <= 7; ++d) {
    const SurfaceInvariants si = compute_invariants(d);
    const auto pants = static_cast<Int>(classify_cells(subdivide(d)).count());
    v.require(2 * si.chi + 3 * si.tau == pants, "2chi+3tau vs pants count at d=" + std::to_string(d));
  }
  if (v.ok) v.detail = "d=5 fixture, identities d=5..12, 2chi+3tau = |T^o| for d=5,6,7";
  return v;
}

std::map<std::string, std::string> snapshot(const fs::path& dir, const std::string& stdout_text) {
  std::map<std::string, std::string> files{{"<stdout>", stdout_text}};
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    files[e.path().filename().string()] = s.str();
  }
  return files;
}

Verdict determinism() {
  Verdict v;
  const std::vector<std::vector<std::string>> commands{
      {"verify-tables"},
      {"subdivide", "--d", "4"},
      {"tropical", "--d", "3"},
      {"pants", "--d", "6"},
      {"identities", "--d", "5"},
      {"amoeba", "--d", "2", "--grid", "6,4", "--t-list", "e^4,e^8"},
      {"converge", "--d", "1", "--grid", "6,4"},
      {"period", "--d", "1", "--res", "16", "--t", "e^8"},
      {"fiber", "--d", "1"},
      {"invariants", "--d-range", "5..12"},
  };
  const fs::path root = fs::temp_directory_path() / ("tpants_acceptance_" + std::to_string(::getpid()));
  std::size_t files = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::map<std::string, std::string> runs[2];
    for (int k = 0; k < 2; ++k) {
      const fs::path dir = root / (std::to_string(i) + "_" + std::to_string(k));
      fs::remove_all(dir);
      auto args = commands[i];
      args.push_back("--out");
      args.push_back(dir.string());
      std::ostringstream out, err;
      run_cli(args, out, err);
      runs[k] = snapshot(dir, out.str());
    }
    v.require(runs[0] == runs[1], "outputs of '" + commands[i][0] + "' differ between runs");
    v.require(runs[0].size() >= 3, "'" + commands[i][0] + "' wrote no output files");
    files += runs[0].size();
  }
  fs::remove_all(root);
  if (v.ok)
    v.detail = std::to_string(commands.size()) + " commands, " + std::to_string(files) + " outputs byte-identical";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"table fidelity", table_fidelity},     {"cell counts", cell_counts},
      {"pants counts", pants_counts},         {"K3 block lemma", k3_lemma},
      {"identity sweeps", identity_sweeps},   {"tropical duality", tropical_duality},
      {"graph B", graph_b},                   {"amoeba convergence", amoeba_convergence},
      {"limit fiber", limit_fiber},           {"period", period},
      {"invariants", invariants},             {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double dt = seconds_since(t0);
    std::printf("[%s] %2zu %s: %s (%.2f s)\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str(), dt);
    std::fflush(stdout);
    failed += !v.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
