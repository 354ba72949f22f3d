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

#include "tpants/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tpants/error.hpp"

namespace tpants {

namespace {

Json point_list(const std::vector<LatticePoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(exact(p));
  return out;
}

Json doubles(const Point3& p) { return Json::array({p[0], p[1], p[2]}); }

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json exact(Int v) { return std::to_string(v); }
Json exact(const Rational& r) { return r.to_string(); }
Json exact(const LatticePoint& p) { return Json::array({exact(p[0]), exact(p[1]), exact(p[2])}); }

Json subdivision_json(const RegularSubdivision& sub) {
  Json cells = Json::array();
  for (const auto& c : sub.cells()) {
    cells.push_back({{"id", c.id},
                     {"vertices", point_list({c.simplex.v.begin(), c.simplex.v.end()})},
                     {"support", {{"normal", Json::array({exact(c.support.n[0]), exact(c.support.n[1]),
                                                          exact(c.support.n[2])})},
                                  {"offset", exact(c.support.b)},
                                  {"text", c.support.to_string()}}}});
  }
  std::size_t interior_faces = 0;
  for (const auto& f : sub.faces())
    if (!f.on_boundary()) ++interior_faces;
  return {{"schema", kSchemaVersion},
          {"d", sub.degree()},
          {"lift", sub.lift().is_canonical() ? "canonical" : "custom"},
          {"counts",
           {{"points", sub.points().size()},
            {"cells", sub.cells().size()},
            {"faces", sub.faces().size()},
            {"interior_faces", interior_faces},
            {"edges", sub.edges().size()}}},
          {"cells", cells}};
}

Json tables_json(const TablesReport& r) {
  Json mism = Json::array();
  for (const auto& m : r.mismatches)
    mism.push_back({{"row", m.row}, {"column", m.column}, {"expected", m.expected}, {"computed", m.computed}});
  return {{"schema", kSchemaVersion},
          {"forms", {{"checked", r.forms_checked}, {"matched", r.forms_matched}}},
          {"entries", {{"checked", r.entries_checked}, {"matched", r.entries_matched}}},
          {"lift", {{"checked", r.lift_checked}, {"matched", r.lift_matched}}},
          {"strictly_supporting", r.strictly_supporting},
          {"mismatches", mism},
          {"ok", r.ok()}};
}

Json tropical_json(const TropicalComplex& complex) {
  Json out = {{"schema", kSchemaVersion}, {"d", complex.degree()}};
  const char* names[3] = {"vertices", "edges", "polygons"};
  Json counts = Json::object();
  for (int dim = 0; dim < 3; ++dim) {
    Json list = Json::array();
    std::size_t bounded = 0;
    for (const auto& c : complex.cells(dim)) {
      if (c.bounded) ++bounded;
      Json j = {{"id", c.id}, {"dual", point_list(c.dual_points)}};
      if (dim == 0) {
        j["point"] = Json::array({exact(c.point[0]), exact(c.point[1]), exact(c.point[2])});
      } else {
        j["bounded"] = c.bounded;
        j["vertices"] = c.vertices;
        j["rays"] = point_list(c.rays);
      }
      list.push_back(std::move(j));
    }
    counts[names[dim]] = {{"total", complex.cells(dim).size()}, {"bounded", bounded}};
    out[names[dim]] = std::move(list);
  }
  out["counts"] = counts;
  return out;
}

Json pants_json(const RegularSubdivision& sub, const CellClassification& cls, const K3Report& k3,
                const PantsGraph& graph, const X0Model& x0) {
  Json blocks = Json::array();
  for (const auto& b : k3.blocks) blocks.push_back({{"m", exact(b.m)}, {"size", b.cells.size()}});
  Json degrees = Json::object();
  for (const auto& [deg, count] : graph.degree_histogram()) degrees[std::to_string(deg)] = count;
  Json comps = Json::array();
  for (const auto& c : x0.components) {
    Json lines = Json::array();
    for (const auto& l : c.lines) lines.push_back(Json::array({exact(l[0]), exact(l[1]), exact(l[2])}));
    comps.push_back({{"kind", c.kind == X0Component::Kind::Cell ? "cell" : "boundary_face"},
                     {"source", c.source},
                     {"labels", point_list({c.labels.begin(), c.labels.end()})},
                     {"lines", lines},
                     {"general_position", c.general_position()}});
  }
  Json cells = Json::array();
  for (int id : cls.t_o())
    cells.push_back({{"id", id},
                     {"class", to_string(cls.cls[id])},
                     {"vertices", point_list({sub.cells()[id].simplex.v.begin(), sub.cells()[id].simplex.v.end()})}});
  return {{"schema", kSchemaVersion},
          {"d", cls.d},
          {"t_o",
           {{"count", cls.count()},
            {"interior", cls.interior.size()},
            {"flap", cls.flap.size()},
            {"cell_ids", cls.t_o()},
            {"cells", cells}}},
          {"k3_blocks", blocks},
          {"k3_lemma", {{"holds", k3.lemma_holds}, {"union", k3.union_size}, {"reference", k3.reference_size}}},
          {"graph_B",
           {{"vertices", graph.nodes.size()},
            {"edges", graph.edges.size()},
            {"degrees", degrees},
            {"components", graph.components()}}},
          {"x0", {{"count", x0.components.size()}, {"components", comps}}}};
}

bool IdentitySweep::ok() const {
  if (!violations.empty()) return false;
  for (const auto& id : identities)
    if (!id.verified) return false;
  for (const auto& r : relations)
    if (!r.verified) return false;
  return true;
}

IdentitySweep identity_sweep(const RegularSubdivision& sub) {
  IdentitySweep sweep;
  sweep.d = sub.degree();
  const auto cls = classify_cells(sub);
  for (int c : cls.interior) {
    for (const auto& e : enumerate_delta(sub.degree())) sweep.identities.push_back(monomial_identity(sub, c, e.m));
    try {
      sweep.residuals.push_back(residual_exponents(sub, c));
    } catch (const LemmaViolation& ex) {
      sweep.violations.push_back(ex.what());
    }
    for (int f : sub.cell_faces(c)) {
      const auto& face = sub.faces()[f];
      if (face.on_boundary()) continue;
      const int other = face.cells[0] == c ? face.cells[1] : face.cells[0];
      try {
        sweep.relations.push_back(boundary_relation(sub, c, other));
      } catch (const LemmaViolation& ex) {
        sweep.violations.push_back(ex.what());
      }
    }
  }
  return sweep;
}

Json identities_json(const IdentitySweep& sweep) {
  std::map<int, Json> by_cell;
  std::size_t verified = 0;
  for (const auto& id : sweep.identities) {
    if (id.verified) ++verified;
    by_cell[id.cell].push_back({{"m", exact(id.m)},
                                {"a", Json::array({exact(id.a[0]), exact(id.a[1]), exact(id.a[2]), exact(id.a[3])})},
                                {"exponent", exact(id.exponent)},
                                {"verified", id.verified}});
  }
  Json certs = Json::array();
  for (auto& [cell, entries] : by_cell) certs.push_back({{"cell", cell}, {"entries", std::move(entries)}});
  Json residuals = Json::array();
  std::size_t negative = 0, total = 0;
  for (const auto& r : sweep.residuals) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
      ++total;
      if (e.exponent < 0) ++negative;
      entries.push_back({{"m", exact(e.m)}, {"exponent", exact(e.exponent)}, {"chosen", e.chosen}, {"a0", exact(e.a0)}});
    }
    residuals.push_back({{"cell", r.cell}, {"partner", r.partner}, {"entries", entries}});
  }
  Json relations = Json::array();
  for (const auto& r : sweep.relations)
    relations.push_back({{"cell", r.cell},
                         {"partner", r.partner},
                         {"m0", exact(r.m0)},
                         {"m4", exact(r.m4)},
                         {"face", point_list({r.face.begin(), r.face.end()})},
                         {"eps", Json::array({exact(r.eps[0]), exact(r.eps[1]), exact(r.eps[2])})},
                         {"exponent", exact(r.exponent)},
                         {"verified", r.verified}});
  return {{"schema", kSchemaVersion},
          {"d", sweep.d},
          {"summary",
           {{"identities", sweep.identities.size()},
            {"verified", verified},
            {"residual_terms", total},
            {"residual_negative", negative},
            {"relations", sweep.relations.size()},
            {"violations", sweep.violations},
            {"ok", sweep.ok()}}},
          {"certificates", certs},
          {"residuals", residuals},
          {"relations", relations}};
}

Json invariants_json(const std::vector<SurfaceInvariants>& rows, const ConsistencyReport& report) {
  Json table = Json::array();
  for (const auto& s : rows)
    table.push_back({{"d", s.d},
                     {"K2", exact(s.k2)},
                     {"chi", exact(s.chi)},
                     {"tau", exact(s.tau)},
                     {"p_g", exact(s.p_g)},
                     {"pants_count", exact(s.pants_count)},
                     {"vol_ke", s.vol_ke},
                     {"yamabe", s.yamabe}});
  Json checks = Json::array();
  for (const auto& e : report.entries)
    checks.push_back({{"d", e.d}, {"identity", e.identity}, {"ok", e.ok}, {"detail", e.detail}});
  return {{"schema", kSchemaVersion}, {"invariants", table}, {"checks", checks}, {"ok", report.ok()}};
}

Json period_json(const FiberProbe& probe, const PeriodEstimate& est) {
  return {{"schema", kSchemaVersion},
          {"m", exact(probe.m)},
          {"mprime", exact(probe.mprime)},
          {"mode", est.mode == PeriodMode::Numeric ? "numeric" : "limit_integrand"},
          {"t", est.t},
          {"resolution", est.resolution},
          {"base", doubles(est.base)},
          {"component", est.component},
          {"value", {{"re", est.value.real()}, {"im", est.value.imag()}}},
          {"target", est.target},
          {"relative_error", std::abs(est.value - Complex(est.target, 0)) / std::abs(est.target)}};
}

Json fiber_json(const FiberProbe& probe, const std::vector<FiberResidual>& rows) {
  Json list = Json::array();
  for (const auto& r : rows)
    list.push_back({{"t", r.t},
                    {"samples", r.samples},
                    {"angle_residual", r.angle_residual},
                    {"ratio_residual", r.ratio_residual}});
  return {{"schema", kSchemaVersion},
          {"m", exact(probe.m)},
          {"mprime", exact(probe.mprime)},
          {"window", {{"lo", doubles(probe.window.lo)}, {"hi", doubles(probe.window.hi)}}},
          {"rows", list}};
}

std::string cloud_csv(const SampleCloud& cloud) {
  std::ostringstream out;
  out << "x1,x2,x3,theta1,theta2,theta3,residual\n";
  for (const auto& p : cloud.points)
    out << fmt17(p.x[0]) << ',' << fmt17(p.x[1]) << ',' << fmt17(p.x[2]) << ',' << fmt17(p.theta[0]) << ','
        << fmt17(p.theta[1]) << ',' << fmt17(p.theta[2]) << ',' << fmt17(p.residual) << '\n';
  return out.str();
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "t,log_t,points,max_distance,mean_distance\n";
  for (const auto& r : rows)
    out << fmt17(r.t) << ',' << fmt17(r.log_t) << ',' << r.points << ',' << fmt17(r.max_distance) << ','
        << fmt17(r.mean_distance) << '\n';
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace tpants
