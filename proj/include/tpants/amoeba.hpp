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
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "tpants/lattice.hpp"
#include "tpants/patchwork.hpp"
#include "tpants/subdivision.hpp"
#include "tpants/tropical.hpp"

namespace tpants {

using Complex = std::complex<double>;

// (log|w1|, log|w2|, log|w3|) / log t. DomainError for a zero component or t <= 1.
Point3 log_t(const std::array<Complex, 3>& w, double t);

// Roots of sum_k exp(A_k) mu_k w^k, returned as z = log w. The split into a
// real log-scale A_k and a unit-size mu_k keeps coefficients spanning
// hundreds of orders of magnitude representable. mu must have a nonzero
// leading and constant entry.
struct LogPolynomial {
  std::vector<double> log_scale;  // A_k
  std::vector<Complex> unit;      // mu_k
};

struct RootResult {
  std::vector<Complex> z;  // log of each root; imaginary part in [0, 2 pi)
  int iterations = 0;
  bool converged = false;
};

// Aberth iteration started from the Newton polygon. Converged when every
// relative correction is below tol, raised to a few ulps of |z| for roots of
// large modulus; roots whose value is at the rounding floor of the sum are
// not waited on.
RootResult solve_log_polynomial(const LogPolynomial& p, int max_iterations = 200, double tol = 1e-12);

// Grid over the two coordinates other than `axis`; f_t is solved for w_axis.
struct SampleGrid {
  int axis = 2;  // 0-based coordinate solved for
  std::array<double, 2> lo{-5, -5};
  std::array<double, 2> hi{5, 5};
  int n_x = 16;      // points per x coordinate
  int n_theta = 8;   // points per angle, theta_k = 2 pi k / n_theta
  double residual_tol = 1e-8;
  int max_iterations = 200;
};

// Grid window covering the complex's vertices in the grid coordinates,
// padded by `pad`.
SampleGrid default_grid(const TropicalComplex& complex, int n_x = 16, int n_theta = 8, double pad = 2.0);

struct SamplePoint {
  Point3 x{};
  Point3 theta{};  // each in [0, 2 pi)
  int grid_index = -1;
  int root_index = -1;
  double residual = 0;  // |f_t| t^(-L(x)) at the root
};

struct SampleCloud {
  double t = 0;
  int d = 0;
  std::vector<SamplePoint> points;
  std::size_t grid_points = 0;
  std::size_t full_points = 0;  // grid points that produced d accepted roots
  std::size_t skipped = 0;      // grid points where the solver did not converge
  std::size_t rejected = 0;     // roots dropped for exceeding residual_tol
};

// Samples the amoeba of f_t. Deterministic; grid points run in parallel and
// are aggregated in grid order.
SampleCloud sample_amoeba(const PatchworkPolynomial& p, double t, const SampleGrid& grid);
SampleCloud sample_amoeba(int d, double t, const SampleGrid& grid);

struct ConvergenceRow {
  double t = 0;
  double log_t = 0;
  std::size_t points = 0;
  double max_distance = 0;   // one-sided Hausdorff distance cloud -> complex
  double mean_distance = 0;
};

// DomainError unless t_list is non-empty and strictly increasing;
// CoverageError if a cloud is empty.
std::vector<ConvergenceRow> convergence_study(const RegularSubdivision& sub, const std::vector<double>& t_list,
                                              const SampleGrid& grid);

// Window V around a point of the open 2-cell dual to the edge {m, m'}.
struct FiberProbe {
  LatticePoint m;
  LatticePoint mprime;
  BoundingBox window;

  // First coordinate where m and m' differ; f_t is solved for that variable.
  int axis() const;
};

// Checks that {m, m'} is an edge of the subdivision and that inside the
// window only the terms m and m' can be maximal: on each side of the plane
// l_m = l_m', the leading term beats every other term at every vertex of
// that side of the box. DomainError otherwise.
void validate_probe(const FiberProbe& probe, const RegularSubdivision& sub);

// Probe around an interior point of the 2-cell, half-width 1.5 halved until valid.
FiberProbe default_probe(const TropicalComplex& complex, const RegularSubdivision& sub, const LatticePoint& m,
                         const LatticePoint& mprime);

struct FiberResidual {
  double t = 0;
  std::size_t samples = 0;
  double angle_residual = 0;  // max |<m - m', theta> - pi| mod 2 pi
  double ratio_residual = 0;  // max |t^(l_m'(x) - l_m(x)) - 1|
};

// Samples X_t over the window (n_x by n_x in x, n_theta by n_theta in theta)
// and keeps roots inside it. CoverageError if none land.
FiberResidual limit_fiber_check(const FiberProbe& probe, const RegularSubdivision& sub, double t, int n_x = 8,
                                int n_theta = 16);

enum class PeriodMode { Numeric, LimitIntegrand };

struct PeriodEstimate {
  Complex value;
  double t = 0;
  int resolution = 0;
  double target = 0;  // 4 pi^2 / (m'_3 - m_3)
  PeriodMode mode = PeriodMode::Numeric;
  Point3 base{};           // x1, x2 of the torus; x3 of the first root
  std::string component;   // which component of the torus was integrated
};

// Integral of the residue form Omega_m over the torus of X_t above the
// window centre, parametrised by (theta1, theta2) on an N x N grid; theta3
// follows the root branch continued from the limit prediction. Requires
// m3 != m'3 and N >= 8 (DomainError); BranchError if two roots are equally
// close to the tracked one; NumericError if the solver fails.
PeriodEstimate period_integral(const FiberProbe& probe, const RegularSubdivision& sub, double t, int resolution,
                               PeriodMode mode = PeriodMode::Numeric);

}  // namespace tpants
