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

#include "tpants/amoeba.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tpants/error.hpp"
#include "tpants/parallel.hpp"

namespace tpants {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

// Representative of a in (-pi, pi].
double centred_angle(double a) { return std::remainder(a, kTwoPi); }

// 1 / (1 - e^u) without overflow.
Complex inv_one_minus_exp(Complex u) {
  if (u.real() > 0) {
    const Complex e = std::exp(-u);
    return -e / (1.0 - e);
  }
  return 1.0 / (1.0 - std::exp(u));
}

// Initial guesses from the upper hull of (k, A_k + log|mu_k|).
std::vector<Complex> newton_polygon_guess(const LogPolynomial& p) {
  const int n = static_cast<int>(p.unit.size()) - 1;
  std::vector<int> ks;
  std::vector<double> h;
  for (int k = 0; k <= n; ++k) {
    if (std::abs(p.unit[k]) == 0) continue;
    const double a = p.log_scale[k] + std::log(std::abs(p.unit[k]));
    // Pop while the last point lies on or below the chord.
    while (ks.size() >= 2) {
      const std::size_t s = ks.size();
      const double cross = (ks[s - 1] - ks[s - 2]) * (a - h[s - 2]) - (h[s - 1] - h[s - 2]) * (k - ks[s - 2]);
      if (cross >= 0) {
        ks.pop_back();
        h.pop_back();
      } else {
        break;
      }
    }
    ks.push_back(k);
    h.push_back(a);
  }
  std::vector<Complex> z;
  for (std::size_t s = 0; s + 1 < ks.size(); ++s) {
    const int k0 = ks[s], k1 = ks[s + 1], span = k1 - k0;
    const Complex ratio = -p.unit[k0] / p.unit[k1];
    const double mag = (p.log_scale[k0] - p.log_scale[k1] + std::log(std::abs(ratio))) / span;
    const double arg = std::arg(ratio);
    for (int j = 0; j < span; ++j) {
      // A small angular offset keeps symmetric configurations from stalling.
      const double phase = (arg + kTwoPi * j) / span + 0.25 / span;
      z.emplace_back(mag, phase);
    }
  }
  return z;
}

struct Sums {
  Complex s;        // sum mu_k e^(A_k + k z - M)
  Complex s1;       // sum k mu_k e^(...)
  double absolute;  // sum |mu_k e^(...)|
};

// Sums over the terms for the common shift M = max_k A_k + k Re z.
Sums scaled_sums(const LogPolynomial& p, Complex z) {
  double top = -std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(p.unit.size()) - 1;
  for (int k = 0; k <= n; ++k)
    if (std::abs(p.unit[k]) != 0) top = std::max(top, p.log_scale[k] + k * z.real());
  Sums out{0, 0, 0};
  for (int k = 0; k <= n; ++k) {
    if (std::abs(p.unit[k]) == 0) continue;
    const Complex term = p.unit[k] * std::exp(Complex(p.log_scale[k] - top + k * z.real(), k * z.imag()));
    out.s += term;
    out.s1 += static_cast<double>(k) * term;
    out.absolute += std::abs(term);
  }
  return out;
}

struct Levels {
  std::vector<double> l;  // l_m(x) = <m, x> - v(m)
  double top = -std::numeric_limits<double>::infinity();
};

Levels levels(const PatchworkPolynomial& p, const Point3& x) {
  Levels out;
  out.l.reserve(p.terms.size());
  for (const auto& term : p.terms) {
    const double v = term.m[0] * x[0] + term.m[1] * x[1] + term.m[2] * x[2] - static_cast<double>(term.exponent);
    out.l.push_back(v);
    out.top = std::max(out.top, v);
  }
  return out;
}

// f_t as a polynomial in w_axis with the other coordinates fixed.
LogPolynomial restrict_to_axis(const PatchworkPolynomial& p, double lt, int axis, const Point3& x,
                               const Point3& theta) {
  const int d = p.d;
  LogPolynomial out;
  out.log_scale.assign(d + 1, -std::numeric_limits<double>::infinity());
  out.unit.assign(d + 1, Complex(0));
  std::vector<double> mag(p.terms.size());
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const auto& term = p.terms[i];
    double s = -static_cast<double>(term.exponent);
    for (int c = 0; c < 3; ++c)
      if (c != axis) s += term.m[c] * x[c];
    mag[i] = s * lt;
    auto& a = out.log_scale[term.m[axis]];
    a = std::max(a, mag[i]);
  }
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const auto& term = p.terms[i];
    double phase = 0;
    for (int c = 0; c < 3; ++c)
      if (c != axis) phase += term.m[c] * theta[c];
    const int k = static_cast<int>(term.m[axis]);
    out.unit[k] += std::polar(std::exp(mag[i] - out.log_scale[k]), phase);
  }
  return out;
}

void require_t(double t) {
  if (!(t > 1) || !std::isfinite(t)) throw DomainError("t must be a finite number > 1");
}

std::array<int, 2> other_axes(int axis) {
  switch (axis) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

double level_of(const LatticePoint& m, Int v, const Point3& x) {
  return m[0] * x[0] + m[1] * x[1] + m[2] * x[2] - static_cast<double>(v);
}

}  // namespace

Point3 log_t(const std::array<Complex, 3>& w, double t) {
  require_t(t);
  Point3 out{};
  const double lt = std::log(t);
  for (int i = 0; i < 3; ++i) {
    if (std::abs(w[i]) == 0) throw DomainError("log_t: zero coordinate");
    out[i] = std::log(std::abs(w[i])) / lt;
  }
  return out;
}

RootResult solve_log_polynomial(const LogPolynomial& p, int max_iterations, double tol) {
  const int n = static_cast<int>(p.unit.size()) - 1;
  if (n < 1 || p.log_scale.size() != p.unit.size()) throw DomainError("solve_log_polynomial: bad coefficient vector");
  if (std::abs(p.unit[0]) == 0 || std::abs(p.unit[n]) == 0)
    throw DomainError("solve_log_polynomial: zero constant or leading coefficient");
  RootResult out;
  out.z = newton_polygon_guess(p);
  for (out.iterations = 1; out.iterations <= max_iterations; ++out.iterations) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      const auto [s, s1, absolute] = scaled_sums(p, out.z[i]);
      // Below this the value is rounding noise and the correction carries no information.
      const bool at_floor = std::abs(s) <= 4 * (n + 1) * std::numeric_limits<double>::epsilon() * absolute;
      Complex delta;
      if (std::abs(s) == 0) {
        delta = 0;
      } else {
        const Complex rho = s / s1;
        Complex sigma = 0;
        for (int j = 0; j < n; ++j)
          if (j != i) sigma += inv_one_minus_exp(out.z[j] - out.z[i]);
        delta = rho / (1.0 - rho * sigma);
      }
      if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag())) {
        out.converged = false;
        return out;
      }
      Complex step = std::log(1.0 - delta);
      if (!std::isfinite(step.real())) step = Complex(-1.0, 0);
      step = Complex(std::clamp(step.real(), -5.0, 5.0), step.imag());
      out.z[i] += step;
      // A correction below a few ulps of z is not representable in log coordinates.
      const double floor_tol = 4 * n * std::numeric_limits<double>::epsilon() * (1 + std::abs(out.z[i]));
      if (!at_floor) worst = std::max(worst, std::abs(delta) / std::max(tol, floor_tol) * tol);
    }
    if (worst < tol) {
      out.converged = true;
      break;
    }
  }
  for (auto& z : out.z) z = Complex(z.real(), wrap_angle(z.imag()));
  return out;
}

SampleGrid default_grid(const TropicalComplex& complex, int n_x, int n_theta, double pad) {
  SampleGrid g;
  g.n_x = n_x;
  g.n_theta = n_theta;
  const auto axes = other_axes(g.axis);
  g.lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  g.hi = {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& v : complex.cells(0)) {
    const Point3 p = complex.vertex_point(v.id);
    for (int k = 0; k < 2; ++k) {
      g.lo[k] = std::min(g.lo[k], p[axes[k]] - pad);
      g.hi[k] = std::max(g.hi[k], p[axes[k]] + pad);
    }
  }
  return g;
}

SampleCloud sample_amoeba(int d, double t, const SampleGrid& grid) {
  return sample_amoeba(build_patchwork(d), t, grid);
}

SampleCloud sample_amoeba(const PatchworkPolynomial& p, double t, const SampleGrid& grid) {
  require_t(t);
  if (grid.axis < 0 || grid.axis > 2) throw DomainError("grid axis must be 0, 1 or 2");
  if (grid.n_x < 1 || grid.n_theta < 1) throw DomainError("grid counts must be positive");
  for (int k = 0; k < 2; ++k)
    if (!std::isfinite(grid.lo[k]) || !std::isfinite(grid.hi[k]) || grid.lo[k] > grid.hi[k])
      throw DomainError("grid window is empty or not finite");
  const double lt = std::log(t);
  const auto axes = other_axes(grid.axis);
  const std::size_t nx = grid.n_x, nth = grid.n_theta;
  const std::size_t total = nx * nx * nth * nth;
  auto coord = [&](int k, std::size_t i) {
    return nx == 1 ? 0.5 * (grid.lo[k] + grid.hi[k])
                   : grid.lo[k] + (grid.hi[k] - grid.lo[k]) * static_cast<double>(i) / static_cast<double>(nx - 1);
  };

  struct Slot {
    std::vector<SamplePoint> points;
    bool converged = true;
    std::size_t rejected = 0;
  };
  std::vector<Slot> slots(total);
  parallel_for(total, [&](std::size_t idx) {
    std::size_t r = idx;
    const std::size_t ib = r % nth;
    r /= nth;
    const std::size_t ia = r % nth;
    r /= nth;
    const std::size_t jb = r % nx;
    const std::size_t ja = r / nx;
    Point3 x{}, theta{};
    x[axes[0]] = coord(0, ja);
    x[axes[1]] = coord(1, jb);
    theta[axes[0]] = kTwoPi * static_cast<double>(ia) / static_cast<double>(nth);
    theta[axes[1]] = kTwoPi * static_cast<double>(ib) / static_cast<double>(nth);
    const RootResult roots = solve_log_polynomial(restrict_to_axis(p, lt, grid.axis, x, theta), grid.max_iterations);
    Slot& slot = slots[idx];
    if (!roots.converged) {
      slot.converged = false;
      return;
    }
    for (std::size_t k = 0; k < roots.z.size(); ++k) {
      SamplePoint s;
      s.x = x;
      s.theta = theta;
      s.x[grid.axis] = roots.z[k].real() / lt;
      s.theta[grid.axis] = roots.z[k].imag();
      s.grid_index = static_cast<int>(idx);
      s.root_index = static_cast<int>(k);
      s.residual = std::abs(eval_patchwork(p, t, s.x, s.theta).value);
      if (s.residual <= grid.residual_tol) {
        slot.points.push_back(s);
      } else {
        ++slot.rejected;
      }
    }
  });

  SampleCloud cloud;
  cloud.t = t;
  cloud.d = p.d;
  cloud.grid_points = total;
  for (auto& slot : slots) {
    if (!slot.converged) {
      ++cloud.skipped;
      continue;
    }
    cloud.rejected += slot.rejected;
    if (slot.points.size() == static_cast<std::size_t>(p.d)) ++cloud.full_points;
    cloud.points.insert(cloud.points.end(), slot.points.begin(), slot.points.end());
  }
  return cloud;
}

std::vector<ConvergenceRow> convergence_study(const RegularSubdivision& sub, const std::vector<double>& t_list,
                                              const SampleGrid& grid) {
  if (t_list.empty()) throw DomainError("convergence_study: empty t list");
  for (std::size_t i = 0; i < t_list.size(); ++i) {
    require_t(t_list[i]);
    if (i > 0 && !(t_list[i] > t_list[i - 1])) throw DomainError("convergence_study: t list must be increasing");
  }
  const TropicalComplex complex = build_tropical(sub);
  const PatchworkPolynomial poly = build_patchwork(sub.degree(), sub.lift());
  std::vector<ConvergenceRow> rows;
  for (double t : t_list) {
    const SampleCloud cloud = sample_amoeba(poly, t, grid);
    if (cloud.points.empty()) throw CoverageError("no amoeba samples at t=" + std::to_string(t));
    BoundingBox box = default_bbox(complex);
    for (const auto& s : cloud.points)
      for (int i = 0; i < 3; ++i) {
        box.lo[i] = std::min(box.lo[i], s.x[i] - 5);
        box.hi[i] = std::max(box.hi[i], s.x[i] + 5);
      }
    const TropicalDistance dist(complex, box);
    std::vector<double> d(cloud.points.size());
    parallel_for(d.size(), [&](std::size_t i) { d[i] = dist.distance(cloud.points[i].x); });
    ConvergenceRow row;
    row.t = t;
    row.log_t = std::log(t);
    row.points = d.size();
    double sum = 0;
    for (double v : d) {
      row.max_distance = std::max(row.max_distance, v);
      sum += v;
    }
    row.mean_distance = sum / static_cast<double>(d.size());
    rows.push_back(row);
  }
  return rows;
}

int FiberProbe::axis() const {
  for (int i = 0; i < 3; ++i)
    if (m[i] != mprime[i]) return i;
  throw DomainError("fiber probe needs m != m'");
}

void validate_probe(const FiberProbe& probe, const RegularSubdivision& sub) {
  const int d = sub.degree();
  if (probe.m == probe.mprime) throw DomainError("fiber probe needs m != m'");
  if (!in_delta(probe.m, d) || !in_delta(probe.mprime, d)) throw DomainError("fiber probe points must lie in Delta_d");
  if (!sub.find_edge({std::min(probe.m, probe.mprime), std::max(probe.m, probe.mprime)}))
    throw DomainError("{" + probe.m.to_string() + ", " + probe.mprime.to_string() + "} is not an edge of the subdivision");
  if (!probe.window.valid()) throw DomainError("fiber probe window is empty or not finite");

  const auto& lift = sub.lift();
  const Int vm = lift(probe.m), vmp = lift(probe.mprime);
  auto gap = [&](const Point3& x) { return level_of(probe.m, vm, x) - level_of(probe.mprime, vmp, x); };

  std::vector<Point3> corners;
  for (int mask = 0; mask < 8; ++mask)
    corners.push_back({mask & 1 ? probe.window.hi[0] : probe.window.lo[0],
                       mask & 2 ? probe.window.hi[1] : probe.window.lo[1],
                       mask & 4 ? probe.window.hi[2] : probe.window.lo[2]});
  std::vector<Point3> section;
  for (int a = 0; a < 8; ++a)
    for (int bit = 0; bit < 3; ++bit) {
      const int b = a | (1 << bit);
      if (b == a) continue;
      const double ga = gap(corners[a]), gb = gap(corners[b]);
      if ((ga > 0 && gb > 0) || (ga < 0 && gb < 0)) continue;
      if (ga == gb) continue;
      const double s = ga / (ga - gb);
      Point3 p = corners[a];
      p[bit] += s * (corners[b][bit] - corners[a][bit]);
      section.push_back(p);
    }
  if (section.empty()) throw DomainError("fiber probe window does not meet the plane of the 2-cell");

  for (int side = 0; side < 2; ++side) {
    const LatticePoint& lead = side == 0 ? probe.m : probe.mprime;
    const Int vlead = side == 0 ? vm : vmp;
    std::vector<Point3> pts = section;
    for (const auto& c : corners)
      if ((side == 0 && gap(c) >= 0) || (side == 1 && gap(c) <= 0)) pts.push_back(c);
    for (const auto& e : enumerate_delta(d)) {
      if (e.m == probe.m || e.m == probe.mprime) continue;
      const Int ve = lift(e.m);
      for (const auto& x : pts) {
        const double margin = level_of(lead, vlead, x) - level_of(e.m, ve, x);
        if (!(margin > 1e-9))
          throw DomainError("fiber probe window meets the region of term " + e.m.to_string());
      }
    }
  }
}

FiberProbe default_probe(const TropicalComplex& complex, const RegularSubdivision& sub, const LatticePoint& m,
                         const LatticePoint& mprime) {
  const auto edge = sub.find_edge({std::min(m, mprime), std::max(m, mprime)});
  if (!edge) throw DomainError("{" + m.to_string() + ", " + mprime.to_string() + "} is not an edge of the subdivision");
  const TropicalCell& cell = complex.cells(2).at(*edge);
  Point3 centre{0, 0, 0};
  for (int id : cell.vertices) {
    const Point3 p = complex.vertex_point(id);
    for (int i = 0; i < 3; ++i) centre[i] += p[i] / static_cast<double>(cell.vertices.size());
  }
  for (const auto& r : cell.rays) {
    const double len = std::sqrt(static_cast<double>(dot(r, r)));
    for (int i = 0; i < 3; ++i) centre[i] += 3.0 * static_cast<double>(r[i]) / len;
  }
  double hw = 1.5;
  for (int attempt = 0; attempt < 20; ++attempt, hw /= 2) {
    FiberProbe probe{m, mprime, BoundingBox::around(centre, hw)};
    try {
      validate_probe(probe, sub);
      return probe;
    } catch (const DomainError&) {
    }
  }
  throw DomainError("no valid window found around the 2-cell");
}

FiberResidual limit_fiber_check(const FiberProbe& probe, const RegularSubdivision& sub, double t, int n_x,
                                int n_theta) {
  require_t(t);
  validate_probe(probe, sub);
  SampleGrid grid;
  grid.axis = probe.axis();
  const auto axes = other_axes(grid.axis);
  grid.lo = {probe.window.lo[axes[0]], probe.window.lo[axes[1]]};
  grid.hi = {probe.window.hi[axes[0]], probe.window.hi[axes[1]]};
  grid.n_x = n_x;
  grid.n_theta = n_theta;
  const SampleCloud cloud = sample_amoeba(build_patchwork(sub.degree(), sub.lift()), t, grid);

  const Int vm = sub.lift()(probe.m), vmp = sub.lift()(probe.mprime);
  const LatticePoint diff = probe.m - probe.mprime;
  const double lt = std::log(t);
  FiberResidual out;
  out.t = t;
  for (const auto& s : cloud.points) {
    if (!probe.window.contains(s.x)) continue;
    ++out.samples;
    const double phase = diff[0] * s.theta[0] + diff[1] * s.theta[1] + diff[2] * s.theta[2];
    out.angle_residual = std::max(out.angle_residual, std::abs(centred_angle(phase - std::numbers::pi)));
    const double expo = (level_of(probe.mprime, vmp, s.x) - level_of(probe.m, vm, s.x)) * lt;
    out.ratio_residual = std::max(out.ratio_residual, std::abs(std::exp(expo) - 1.0));
  }
  if (out.samples == 0) throw CoverageError("no samples of X_t landed in the fiber probe window");
  return out;
}

PeriodEstimate period_integral(const FiberProbe& probe, const RegularSubdivision& sub, double t, int resolution,
                               PeriodMode mode) {
  require_t(t);
  const Int dm3 = probe.mprime[2] - probe.m[2];
  if (dm3 == 0) throw DomainError("period_integral requires m3 != m'3");
  if (resolution < 8) throw DomainError("period_integral requires resolution >= 8");
  validate_probe(probe, sub);

  const int n = resolution;
  const double cell_area = (kTwoPi / n) * (kTwoPi / n);
  PeriodEstimate est;
  est.t = t;
  est.resolution = n;
  est.mode = mode;
  est.target = kTwoPi * kTwoPi / static_cast<double>(dm3);
  for (int i = 0; i < 3; ++i) est.base[i] = 0.5 * (probe.window.lo[i] + probe.window.hi[i]);
  est.component = "theta3 continued from (pi - (m1-m'1) theta1 - (m2-m'2) theta2) / (m3-m'3) at theta1=theta2=0";

  if (mode == PeriodMode::LimitIntegrand) {
    est.value = Complex(cell_area * n * n / static_cast<double>(dm3), 0);
    return est;
  }

  const PatchworkPolynomial poly = build_patchwork(sub.degree(), sub.lift());
  const double lt = std::log(t);
  const Int vm = sub.lift()(probe.m), vmp = sub.lift()(probe.mprime);
  const LatticePoint diff = probe.m - probe.mprime;
  const double x3_pred =
      (static_cast<double>(vm - vmp) - diff[0] * est.base[0] - diff[1] * est.base[1]) / static_cast<double>(diff[2]);
  Complex tracked(x3_pred * lt, std::numbers::pi / static_cast<double>(diff[2]));

  auto root_distance = [](Complex a, Complex b) {
    return std::hypot(a.real() - b.real(), centred_angle(a.imag() - b.imag()));
  };

  Complex sum = 0;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    for (int jj = 0; jj < n; ++jj) {
      const int j = i % 2 == 0 ? jj : n - 1 - jj;  // snake order keeps neighbours adjacent
      Point3 x = est.base, theta{kTwoPi * i / n, kTwoPi * j / n, 0};
      const RootResult roots = solve_log_polynomial(restrict_to_axis(poly, lt, 2, x, theta));
      if (!roots.converged) throw NumericError("root solver did not converge on the period torus");
      std::size_t best = 0;
      double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
      for (std::size_t k = 0; k < roots.z.size(); ++k) {
        const double dist = root_distance(roots.z[k], tracked);
        if (dist < d1) {
          d2 = d1;
          d1 = dist;
          best = k;
        } else if (dist < d2) {
          d2 = dist;
        }
      }
      if (roots.z.size() > 1 && d2 - d1 <= 1e-9 * (1 + d1))
        throw BranchError("two roots equally close to the tracked branch at theta=(" + std::to_string(theta[0]) +
                          ", " + std::to_string(theta[1]) + "), distances " + std::to_string(d1) + ", " +
                          std::to_string(d2));
      tracked = roots.z[best];
      if (first) {
        est.base[2] = tracked.real() / lt;
        first = false;
      }
      x[2] = tracked.real() / lt;
      theta[2] = tracked.imag();
      const Levels lv = levels(poly, x);
      Complex s1 = 0, num = 0;
      for (std::size_t k = 0; k < poly.terms.size(); ++k) {
        const auto& m = poly.terms[k].m;
        const Complex term =
            std::polar(std::exp((lv.l[k] - lv.top) * lt), m[0] * theta[0] + m[1] * theta[1] + m[2] * theta[2]);
        s1 += static_cast<double>(m[2]) * term;
        if (m == probe.m) num = term;
      }
      const Complex integrand = -num / s1;
      if (!std::isfinite(integrand.real()) || !std::isfinite(integrand.imag()))
        throw NumericError("period integrand is not finite");
      sum += integrand;
    }
  }
  est.value = sum * cell_area;
  return est;
}

}  // namespace tpants
