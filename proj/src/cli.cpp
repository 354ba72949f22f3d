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

#include "tpants/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "tpants/amoeba.hpp"
#include "tpants/error.hpp"
#include "tpants/invariants.hpp"
#include "tpants/pants.hpp"
#include "tpants/serialize.hpp"
#include "tpants/subdivision.hpp"
#include "tpants/tables.hpp"
#include "tpants/tropical.hpp"

namespace tpants {

namespace {

namespace fs = std::filesystem;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::vector<double> parse_doubles(const std::string& s, std::size_t want, const char* what) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_double(part));
  if (want != 0 && out.size() != want)
    throw UsageError(std::string(what) + " needs " + std::to_string(want) + " comma-separated values");
  return out;
}

LatticePoint parse_point(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw UsageError("lattice point needs three integers: '" + s + "'");
  std::array<Int, 3> c{};
  for (int i = 0; i < 3; ++i) {
    std::size_t used = 0;
    try {
      c[i] = std::stoll(parts[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != parts[i].size()) throw UsageError("not an integer: '" + parts[i] + "'");
  }
  return {c[0], c[1], c[2]};
}

std::vector<double> parse_t_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_t(part));
  if (out.empty()) throw UsageError("empty t list");
  return out;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad degree range '" + s + "', expected A..B");
  }
}

// key=value lines or a flat JSON object.
std::vector<std::pair<std::string, std::string>> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::vector<std::pair<std::string, std::string>> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const std::exception& e) {
      throw UsageError("config " + path + " is not valid JSON: " + e.what());
    }
    for (const auto& [key, value] : j.items()) {
      if (value.is_string()) {
        out.emplace_back(key, value.get<std::string>());
      } else if (value.is_array()) {
        std::string joined;
        for (const auto& v : value) joined += (joined.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
        out.emplace_back(key, joined);
      } else {
        out.emplace_back(key, value.dump());
      }
    }
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) throw UsageError("bad config line: " + line);
      continue;
    }
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

struct Options {
  std::string config;
  std::string out_dir;
  int d = 0;
  std::string json_path;
  std::string path = "auto";
  std::string mesh_path;
  std::string format = "off";
  std::string bbox;
  std::string distance;
  std::string dot_path;
  std::string t_list = "e^4,e^8,e^16";
  std::string t = "e^16";
  std::string grid = "16,8";
  std::string window;
  std::string csv_path;
  std::string m = "0,0,0";
  std::string mprime = "0,0,1";
  int res = 64;
  std::string mode = "numeric";
  std::string center;
  double half_width = 0;
  std::string d_range = "5..12";
};

std::string out_file(const Options& o, const std::string& explicit_path, const std::string& default_name) {
  if (!explicit_path.empty()) return explicit_path;
  if (!o.out_dir.empty()) return (fs::path(o.out_dir) / default_name).string();
  return {};
}

void require_d(int d, int lo) {
  if (d < lo) throw DomainError("--d must be >= " + std::to_string(lo) + ", got " + std::to_string(d));
}

SampleGrid grid_from(const Options& o, const TropicalComplex& complex) {
  const auto counts = parse_doubles(o.grid, 2, "--grid");
  if (counts[0] < 1 || counts[1] < 1 || counts[0] != std::floor(counts[0]) || counts[1] != std::floor(counts[1]))
    throw UsageError("--grid needs two positive integers n_x,n_theta");
  SampleGrid g = default_grid(complex, static_cast<int>(counts[0]), static_cast<int>(counts[1]));
  if (!o.window.empty()) {
    const auto w = parse_doubles(o.window, 4, "--window");
    g.lo = {w[0], w[1]};
    g.hi = {w[2], w[3]};
  }
  return g;
}

FiberProbe probe_from(const Options& o, const TropicalComplex& complex, const RegularSubdivision& sub) {
  const LatticePoint m = parse_point(o.m), mp = parse_point(o.mprime);
  if (o.center.empty()) return default_probe(complex, sub, m, mp);
  const auto c = parse_doubles(o.center, 3, "--center");
  if (!(o.half_width > 0)) throw UsageError("--center needs a positive --half-width");
  FiberProbe probe{m, mp, BoundingBox::around({c[0], c[1], c[2]}, o.half_width)};
  validate_probe(probe, sub);
  return probe;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int run_command(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "verify-tables") {
    const TablesReport r = verify_tables();
    out << "Tables 1–2: " << r.entries_matched << '/' << r.entries_checked << " entries match\n";
    for (const auto& m : r.mismatches)
      out << "  mismatch " << m.row << " at " << m.column << ": table " << m.expected << ", computed " << m.computed
          << '\n';
    if (const auto path = out_file(o, o.json_path, "tables.json"); !path.empty())
      write_text(path, tables_json(r).dump(2) + "\n");
    return r.ok() ? 0 : 1;
  }
  if (cmd == "invariants") {
    const auto [lo, hi] = parse_range(o.d_range);
    std::vector<SurfaceInvariants> rows;
    for (int d = lo; d <= hi; ++d) rows.push_back(compute_invariants(d));
    const ConsistencyReport report = consistency_checks(lo, hi);
    const Json j = invariants_json(rows, report);
    emit(out, j);
    if (const auto path = out_file(o, o.json_path, "invariants.json"); !path.empty()) write_text(path, j.dump(2) + "\n");
    return report.ok() ? 0 : 1;
  }

  require_d(o.d, cmd == "pants" || cmd == "identities" ? 5 : 1);
  SubdivisionPath path = SubdivisionPath::Auto;
  if (o.path == "cube") path = SubdivisionPath::Cube;
  else if (o.path == "hull") path = SubdivisionPath::Hull;
  else if (o.path == "cross-check") path = SubdivisionPath::CrossCheck;
  else if (o.path != "auto") throw UsageError("--path must be auto, cube, hull or cross-check");
  const RegularSubdivision sub = subdivide(o.d, LiftingFunction::canonical(), path);

  if (cmd == "subdivide") {
    out << "d=" << o.d << " cells=" << sub.cells().size() << " faces=" << sub.faces().size()
        << " edges=" << sub.edges().size() << " points=" << sub.points().size() << " certified\n";
    if (const auto p = out_file(o, o.json_path, "subdivision.json"); !p.empty())
      write_text(p, subdivision_json(sub).dump(2) + "\n");
    return 0;
  }
  if (cmd == "pants") {
    const auto cls = classify_cells(sub);
    const auto k3 = k3_blocks(sub, cls);
    const auto graph = build_pants_graph(cls, sub);
    const auto x0 = build_x0(cls, sub);
    const Json j = pants_json(sub, cls, k3, graph, x0);
    emit(out, j);
    if (const auto p = out_file(o, o.json_path, "pants.json"); !p.empty()) write_text(p, j.dump(2) + "\n");
    if (const auto p = out_file(o, o.dot_path, "graph_B.dot"); !p.empty()) {
      std::ostringstream dot;
      graph.write_dot(dot);
      write_text(p, dot.str());
    }
    return 0;
  }
  if (cmd == "identities") {
    const IdentitySweep sweep = identity_sweep(sub);
    const Json j = identities_json(sweep);
    emit(out, j["summary"]);
    if (const auto p = out_file(o, o.json_path, "identities.json"); !p.empty()) write_text(p, j.dump(2) + "\n");
    return sweep.ok() ? 0 : 1;
  }

  const TropicalComplex complex = build_tropical(sub);
  if (cmd == "tropical") {
    BoundingBox box = default_bbox(complex);
    if (!o.bbox.empty()) {
      const auto b = parse_doubles(o.bbox, 6, "--bbox");
      box = {{b[0], b[1], b[2]}, {b[3], b[4], b[5]}};
      if (!box.valid()) throw DomainError("--bbox is empty");
    }
    out << "d=" << o.d << " vertices=" << complex.cells(0).size() << " edges=" << complex.cells(1).size()
        << " polygons=" << complex.cells(2).size() << '\n';
    if (!o.distance.empty()) {
      const auto x = parse_doubles(o.distance, 3, "--distance");
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", distance_to_tropical({x[0], x[1], x[2]}, complex, box));
      out << "distance=" << buf << '\n';
    }
    MeshFormat fmt = MeshFormat::Off;
    if (o.format == "obj") fmt = MeshFormat::Obj;
    else if (o.format != "off") throw UsageError("--format must be off or obj");
    if (const auto p = out_file(o, o.mesh_path, fmt == MeshFormat::Off ? "tropical.off" : "tropical.obj"); !p.empty())
      export_mesh(complex, box, p, fmt);
    if (const auto p = out_file(o, o.json_path, "tropical.json"); !p.empty())
      write_text(p, tropical_json(complex).dump(2) + "\n");
    return 0;
  }
  if (cmd == "amoeba") {
    const SampleGrid grid = grid_from(o, complex);
    const auto ts = parse_t_list(o.t_list);
    const auto base = out_file(o, o.csv_path, "cloud.csv");
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const SampleCloud cloud = sample_amoeba(o.d, ts[i], grid);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", ts[i]);
      out << "t=" << buf << " points=" << cloud.points.size() << " grid=" << cloud.grid_points
          << " full=" << cloud.full_points << " skipped=" << cloud.skipped << " rejected=" << cloud.rejected << '\n';
      if (!base.empty()) {
        std::string p = base;
        if (ts.size() > 1) {
          const fs::path bp(base);
          p = (bp.parent_path() / (bp.stem().string() + "_" + std::to_string(i) + bp.extension().string())).string();
        }
        write_text(p, cloud_csv(cloud));
      }
    }
    return 0;
  }
  if (cmd == "converge") {
    const auto rows = convergence_study(sub, parse_t_list(o.t_list), grid_from(o, complex));
    const std::string csv = convergence_csv(rows);
    out << csv;
    if (const auto p = out_file(o, o.csv_path, "convergence.csv"); !p.empty()) write_text(p, csv);
    return 0;
  }
  if (cmd == "period") {
    const FiberProbe probe = probe_from(o, complex, sub);
    PeriodMode mode = PeriodMode::Numeric;
    if (o.mode == "limit") mode = PeriodMode::LimitIntegrand;
    else if (o.mode != "numeric") throw UsageError("--mode must be numeric or limit");
    const Json j = period_json(probe, period_integral(probe, sub, parse_t(o.t), o.res, mode));
    emit(out, j);
    if (const auto p = out_file(o, o.json_path, "period.json"); !p.empty()) write_text(p, j.dump(2) + "\n");
    return 0;
  }
  if (cmd == "fiber") {
    const FiberProbe probe = probe_from(o, complex, sub);
    std::vector<FiberResidual> rows;
    for (double t : parse_t_list(o.t_list)) rows.push_back(limit_fiber_check(probe, sub, t));
    const Json j = fiber_json(probe, rows);
    emit(out, j);
    if (const auto p = out_file(o, o.json_path, "fiber.json"); !p.empty()) write_text(p, j.dump(2) + "\n");
    return 0;
  }
  throw UsageError("unknown command " + cmd);
}

}  // namespace

double parse_t(const std::string& text) {
  std::string s = text;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  double v;
  if (s.rfind("e^", 0) == 0) {
    v = std::exp(parse_double(s.substr(2)));
  } else if (s.rfind("exp(", 0) == 0 && s.back() == ')') {
    v = std::exp(parse_double(s.substr(4, s.size() - 5)));
  } else {
    v = parse_double(s);
  }
  if (!(v > 1) || !std::isfinite(v)) throw DomainError("t must be a finite number > 1, got '" + text + "'");
  return v;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tropical pants decompositions of degree-d surfaces in CP^3", "tpants"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.add_option("--config", o.config, "key=value or JSON file; its values override flags");
  app.add_option("--out", o.out_dir, "directory for all outputs and the echoed config");

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->option_defaults()->always_capture_default();
    sub->add_option("--config", o.config, "key=value or JSON file; its values override flags");
    sub->add_option("--out", o.out_dir, "directory for all outputs and the echoed config");
    return sub;
  };
  auto with_d = [&](CLI::App* sub) { sub->add_option("--d", o.d, "degree")->required(); };

  auto* subdiv = add("subdivide", "certified canonical subdivision of Delta_d");
  with_d(subdiv);
  subdiv->add_option("--json", o.json_path, "write cells and supporting forms");
  subdiv->add_option("--path", o.path, "auto, cube, hull or cross-check");

  auto* tables = add("verify-tables", "check the unit-cube fixture tables");
  tables->add_option("--json", o.json_path, "write the comparison report");

  auto* trop = add("tropical", "dual tropical surface");
  with_d(trop);
  trop->add_option("--mesh", o.mesh_path, "write the truncated 2-skeleton");
  trop->add_option("--format", o.format, "off or obj");
  trop->add_option("--bbox", o.bbox, "lo1,lo2,lo3,hi1,hi2,hi3");
  trop->add_option("--distance", o.distance, "print the distance from x1,x2,x3");
  trop->add_option("--json", o.json_path, "write the cell complex");

  auto* pants = add("pants", "pair-of-pants cells, K3 blocks, graph B and X0");
  with_d(pants);
  pants->add_option("--dot", o.dot_path, "write graph B in DOT");
  pants->add_option("--json", o.json_path, "write the report");

  auto* ids = add("identities", "monomial identity, boundary relation and residual sweeps");
  with_d(ids);
  ids->add_option("--json", o.json_path, "write the certificates");

  auto* amoeba = add("amoeba", "sample the amoeba of f_t");
  with_d(amoeba);
  amoeba->add_option("--t-list", o.t_list, "comma-separated t values, e^K allowed");
  amoeba->add_option("--grid", o.grid, "n_x,n_theta");
  amoeba->add_option("--window", o.window, "lo_a,lo_b,hi_a,hi_b in the x1,x2 grid coordinates");
  amoeba->add_option("--csv", o.csv_path, "write the point cloud (suffixed per t)");

  auto* conv = add("converge", "distance from amoeba samples to the tropical surface");
  with_d(conv);
  conv->add_option("--t-list", o.t_list, "comma-separated increasing t values");
  conv->add_option("--grid", o.grid, "n_x,n_theta");
  conv->add_option("--window", o.window, "lo_a,lo_b,hi_a,hi_b");
  conv->add_option("--csv", o.csv_path, "write the table");

  auto* period = add("period", "torus period of the residue form");
  with_d(period);
  period->add_option("--m", o.m, "m1,m2,m3");
  period->add_option("--mprime", o.mprime, "m'1,m'2,m'3");
  period->add_option("--t", o.t, "deformation parameter");
  period->add_option("--res", o.res, "grid points per angle (>= 8)");
  period->add_option("--mode", o.mode, "numeric or limit");
  period->add_option("--center", o.center, "window centre x1,x2,x3");
  period->add_option("--half-width", o.half_width, "window half-width");
  period->add_option("--json", o.json_path, "write the report");

  auto* fiber = add("fiber", "limit fiber residuals over a window of a 2-cell");
  with_d(fiber);
  fiber->add_option("--m", o.m, "m1,m2,m3");
  fiber->add_option("--mprime", o.mprime, "m'1,m'2,m'3");
  fiber->add_option("--t-list", o.t_list, "comma-separated t values");
  fiber->add_option("--center", o.center, "window centre x1,x2,x3");
  fiber->add_option("--half-width", o.half_width, "window half-width");
  fiber->add_option("--json", o.json_path, "write the report");

  auto* inv = add("invariants", "closed-form invariants and identity checks");
  inv->add_option("--d-range,--d", o.d_range, "A..B");
  inv->add_option("--json", o.json_path, "write the table");

  // Config values are appended after the command line so they take precedence.
  std::vector<std::string> argv(args.begin(), args.end());
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--config") o.config = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) o.config = args[i].substr(9);
  }
  if (args.size() >= 1 && args.back().rfind("--config=", 0) == 0) o.config = args.back().substr(9);
  try {
    if (!o.config.empty())
      for (const auto& [key, value] : load_config(o.config)) {
        argv.push_back("--" + key);
        argv.push_back(value);
      }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    if (!o.out_dir.empty()) {
      std::error_code ec;
      fs::create_directories(o.out_dir, ec);
      if (ec || !fs::is_directory(o.out_dir)) throw IoError("cannot create output directory " + o.out_dir);
      Json options = Json::object();
      for (const CLI::Option* opt : chosen->get_options()) {
        const std::string name = opt->get_name(false, true);
        if (name.empty() || name == "--help" || name == "--config" || name == "--out") continue;
        std::string value;
        if (opt->count() > 0) {
          value = opt->results().back();
        } else {
          value = opt->get_default_str();
        }
        options[name.substr(name.find_first_not_of('-'))] = value;
      }
      write_text((fs::path(o.out_dir) / "config.json").string(),
                 Json{{"schema", kSchemaVersion}, {"command", chosen->get_name()}, {"options", options}}.dump(2) + "\n");
    }
    return run_command(chosen->get_name(), o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << chosen->help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace tpants
