// include/amalgam/ucpu.hpp

// Copyright 2026  amalgam-lab authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef AMALGAM_UCPU_HPP
#define AMALGAM_UCPU_HPP

#include <span>
#include <vector>

#include "amalgam/field.hpp"
#include "amalgam/gevrey.hpp"
#include "amalgam/weights.hpp"

namespace amalgam {

// Finite family of pairwise-distinct points.  The lattice factory builds
// a Z^1 cap [-L_pts, L_pts]; the distance-based lemma sums work in any
// dimension.
class PointSet {
 public:
  PointSet(int dim, std::vector<double> coords);
  static PointSet lattice_1d(double a, double L_pts);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(coords_.size()) / dim_; }
  std::span<const double> point(int i) const;
  // 1-d convenience accessor.
  double at(int i) const;
  double distance(int i, int j) const;
  double diameter() const;

 private:
  int dim_;
  std::vector<double> coords_;  // point-major
};

struct Cond3Report {
  bool covered = false;
  double max_gap = 0.0;   // largest uncovered-gap width seen along the core
  double witness = 0.0;   // a point of the core outside every y + U
};

struct Cond4Report {
  double deviation = 0.0;       // sup |sum_lambda psi_lambda(x) - 1| on the core
  double core_halfwidth = 0.0;  // region the certificate covers
};

struct Condition1Report {
  double sup = 0.0;          // over grid x and orders k <= K of the display
  int argmax_order = 0;
  double argmax_x = 0.0;
  double recenter_dev = 0.0;  // max disagreement across recentered lambda
};

struct DecayFit {
  bool found = false;
  double C = 0.0;
  double h = 0.0;
  double min_slack = 0.0;      // min over pairs of C e^{-A(h d)} - lhs(d)
  double lhs_at_zero = 0.0;
  double max_offset = 0.0;     // largest |y_lambda - y_mu| entering the fit
};

struct TailRadius {
  double R_exact = 0.0;         // smallest lattice-aligned radius
  double tail_at_R = 0.0;       // sup_mu of the exact tail sum at R_exact
  double R_constructive = 0.0;  // radius from the integral-comparison recipe
};

// Lattice UCPU: points a Z cap [-L_pts, L_pts], window psi = hat_a * g_s
// (its a-translates telescope to 1 identically on R).
class Ucpu {
 public:
  const PointSet& points() const { return pts_; }
  const SampledField& window() const { return window_; }
  double step() const { return a_; }
  double smoothing() const { return s_; }
  double truncation() const { return L_pts_; }
  const Cond4Report& condition4() const { return cond4_; }
  int condition2_unit_cube() const { return cond2_unit_; }
  const Cond3Report& condition3() const { return cond3_; }
  bool certified() const { return certified_; }

  double window_at(double x) const;  // exact closed-form evaluation
  SampledField translated_window(int lambda) const;
  // Pointwise positive square root of the origin-centered window.
  SampledField sqrt_window() const;

  friend Ucpu build_lattice_ucpu(const Grid& g, double a, double s, double L_pts,
                                 double cond4_tol);

 private:
  Ucpu(PointSet pts, SampledField window, double a, double s, double L_pts);

  PointSet pts_;
  SampledField window_;
  double a_;
  double s_;
  double L_pts_;
  Cond4Report cond4_;
  int cond2_unit_ = 0;
  Cond3Report cond3_;
  bool certified_ = false;
};

Ucpu build_lattice_ucpu(const Grid& g, double a, double s, double L_pts,
                        double cond4_tol = 1e-10);

// Definition condition (1):
// sup over lambda, |alpha| <= K, grid x of h^alpha |psi_lambda^(alpha)(x)|
// e^{A(h |x - y_lambda|)} / M_alpha.  The sup is lambda-independent by
// translation; agreement across recentered lambda is asserted in the report.
Condition1Report check_condition1(const Ucpu& u, const GevreySequence& seq, double h,
                                  int K_order);

// Definition condition (2): exact sup over x of #{lambda : x in y_lambda + K},
// K = [-K_halfwidth, K_halfwidth] (1-d sweep over interval endpoints).
int check_condition2(const PointSet& pts, double K_halfwidth);

// Definition condition (3): is [core_lo, core_hi] covered by the open
// intervals y_lambda + (-U_halfwidth, U_halfwidth)?
Cond3Report check_condition3(const PointSet& pts, double U_halfwidth, double core_lo,
                             double core_hi);

// sup_mu sum_lambda (1 + |y_lambda - y_mu|)^{-n-eps}, exact double loop.
double lemma33_sum(const PointSet& pts, double eps);

// Fits sup_{x in y_mu + K} ||psi_lambda T_x chi||_{FL^1_eta} <= C e^{-A(h d)}
// over lattice offsets d = y_lambda - y_mu, as a certified envelope: largest
// h in h_grid, then the smallest C that holds everywhere.  Interior mu only
// (6a in from the truncation edge).
DecayFit lemma36_decay_fit(const Ucpu& u, const SampledField& chi, const Weight& eta,
                           double K_halfwidth, const GevreySequence& seq,
                           std::span<const double> h_grid, double max_offset = 20.0,
                           int x_samples = 9);

// Same envelope for ||psi_lambda psi_mu||_{FL^1_eta} <= C e^{-A(h d)}.
DecayFit lemma37_product_decay(const Ucpu& u, const Weight& eta, const GevreySequence& seq,
                               std::span<const double> h_grid);

// Smallest lattice-aligned R with sup_mu sum_{|y_lambda - y_mu| > R}
// e^{-A(h |y_lambda - y_mu|)} <= eps, plus the constructive radius from the
// integral comparison with e^{-A(h|x|/2)}.
TailRadius lemma39_tail_radius(const PointSet& pts, const GevreySequence& seq, double h,
                               double eps);

}  // namespace amalgam

#endif  // AMALGAM_UCPU_HPP
