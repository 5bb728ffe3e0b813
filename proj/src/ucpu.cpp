// src/ucpu.cpp

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

#include "amalgam/ucpu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace amalgam {

namespace {

constexpr double kEps = 1e-9;

}  // namespace

// --- PointSet ----------------------------------------------------------------

PointSet::PointSet(int dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
  if (dim_ < 1) throw std::invalid_argument("point set dimension must be >= 1");
  if (coords_.empty() || coords_.size() % static_cast<std::size_t>(dim_) != 0)
    throw std::invalid_argument("point count does not match dimension");
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (distance(i, j) == 0.0) throw std::invalid_argument("points must be pairwise distinct");
}

PointSet PointSet::lattice_1d(double a, double L_pts) {
  if (a <= 0.0) throw std::invalid_argument("lattice step must be positive");
  if (L_pts < 0.0) throw std::invalid_argument("lattice truncation must be >= 0");
  const long long m = std::llround(L_pts / a);
  if (std::abs(static_cast<double>(m) * a - L_pts) > kEps)
    throw std::invalid_argument("lattice step must divide the truncation radius");
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(2 * m + 1));
  for (long long k = -m; k <= m; ++k) coords.push_back(static_cast<double>(k) * a);
  return PointSet(1, std::move(coords));
}

std::span<const double> PointSet::point(int i) const {
  return {coords_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_),
          static_cast<std::size_t>(dim_)};
}

double PointSet::at(int i) const {
  if (dim_ != 1) throw std::logic_error("1-d accessor on a multi-d point set");
  return coords_[static_cast<std::size_t>(i)];
}

double PointSet::distance(int i, int j) const {
  auto p = point(i);
  auto q = point(j);
  double acc = 0.0;
  for (int d = 0; d < dim_; ++d) acc += (p[d] - q[d]) * (p[d] - q[d]);
  return std::sqrt(acc);
}

double PointSet::diameter() const {
  double m = 0.0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) m = std::max(m, distance(i, j));
  return m;
}

// --- Ucpu ---------------------------------------------------------------------

Ucpu::Ucpu(PointSet pts, SampledField window, double a, double s, double L_pts)
    : pts_(std::move(pts)), window_(std::move(window)), a_(a), s_(s), L_pts_(L_pts) {}

double Ucpu::window_at(double x) const { return window_.form_value_at(x).real(); }

SampledField Ucpu::translated_window(int lambda) const {
  return translate(window_, pts_.at(lambda));
}

SampledField Ucpu::sqrt_window() const {
  const auto& hg = std::get<HatGaussForm>(window_.form());
  return SampledField::sample(window_.grid(), HatGaussSqrtForm{hg.a, hg.s, hg.center});
}

Ucpu build_lattice_ucpu(const Grid& g, double a, double s, double L_pts, double cond4_tol) {
  if (a <= 0.0) throw std::invalid_argument("lattice step must be positive");
  PointSet pts = PointSet::lattice_1d(a, L_pts);
  SampledField window = hat_gauss_window(g, a, s);
  Ucpu u(std::move(pts), std::move(window), a, s, L_pts);

  // Condition (4): the hat translates telescope to 1 exactly on all of R;
  // only the lattice truncation perturbs the sum, so the certified core
  // stays 6 max(a, s) in from the edge.
  const double core = L_pts - 6.0 * std::max(a, s);
  const double eval_half = std::max(core, 2.0 * std::max(a, s));
  double dev = 0.0;
  const int steps = static_cast<int>(std::ceil(2.0 * eval_half / g.delta()));
  for (int i = 0; i <= steps; ++i) {
    const double x = -eval_half + i * g.delta();
    double sum = 0.0;
    for (int l = 0; l < u.pts_.size(); ++l) sum += u.window_at(x - u.pts_.at(l));
    dev = std::max(dev, std::abs(sum - 1.0));
  }
  u.cond4_.deviation = dev;
  u.cond4_.core_halfwidth = core;

  u.cond2_unit_ = check_condition2(u.pts_, 0.5);
  const double cover_core = std::max(0.0, core);
  u.cond3_ = check_condition3(u.pts_, 0.6 * a, -cover_core, cover_core);
  u.certified_ = core > 0.0 && dev <= cond4_tol && u.cond3_.covered;
  return u;
}

Condition1Report check_condition1(const Ucpu& u, const GevreySequence& seq, double h,
                                  int K_order) {
  if (K_order < 0 || K_order > 16)
    throw std::invalid_argument("condition (1) order cap must be in [0, 16]");
  if (h < 0.0) throw std::invalid_argument("condition (1) needs h >= 0");

  const Grid& g = u.window().grid();
  auto sup_for = [&](double center) {
    const auto& hg = std::get<HatGaussForm>(u.window().form());
    SampledField w = SampledField::sample(g, HatGaussForm{hg.a, hg.s, center});
    double sup = 0.0;
    int arg_k = 0;
    double arg_x = 0.0;
    for (int k = 0; k <= K_order; ++k) {
      const auto dv = derivative_values(w, k);
      const double hk = std::pow(h, k);
      const double log_mk = seq.log_value(k);
      for (int j = 0; j < g.size(); ++j) {
        const double r = std::abs(g.x(j) - center);
        const double val =
            hk * std::abs(dv[static_cast<std::size_t>(j)]) * std::exp(seq.assoc(h * r).value - log_mk);
        if (val > sup) {
          sup = val;
          arg_k = k;
          arg_x = g.x(j);
        }
      }
    }
    return std::tuple<double, int, double>{sup, arg_k, arg_x};
  };

  Condition1Report report;
  auto [sup0, k0, x0] = sup_for(0.0);
  report.sup = sup0;
  report.argmax_order = k0;
  report.argmax_x = x0;
  // Translation covariance: recentered lambda must reproduce the sup.
  double dev = 0.0;
  for (double center : {-u.step(), u.step()}) {
    auto [supc, kc, xc] = sup_for(center);
    (void)kc;
    (void)xc;
    dev = std::max(dev, std::abs(supc - sup0));
  }
  report.recenter_dev = dev;
  return report;
}

int check_condition2(const PointSet& pts, double K_halfwidth) {
  if (pts.dim() != 1) throw std::invalid_argument("condition (2) sweep is 1-d");
  if (K_halfwidth < 0.0) throw std::invalid_argument("K halfwidth must be >= 0");
  std::vector<double> candidates;
  candidates.reserve(static_cast<std::size_t>(3 * pts.size()));
  for (int i = 0; i < pts.size(); ++i) {
    candidates.push_back(pts.at(i));
    candidates.push_back(pts.at(i) - K_halfwidth);
    candidates.push_back(pts.at(i) + K_halfwidth);
  }
  int best = 0;
  for (double x : candidates) {
    int count = 0;
    for (int i = 0; i < pts.size(); ++i)
      if (std::abs(x - pts.at(i)) <= K_halfwidth + kEps) ++count;
    best = std::max(best, count);
  }
  return best;
}

Cond3Report check_condition3(const PointSet& pts, double U_halfwidth, double core_lo,
                             double core_hi) {
  if (pts.dim() != 1) throw std::invalid_argument("condition (3) sweep is 1-d");
  if (U_halfwidth <= 0.0) throw std::invalid_argument("U halfwidth must be positive");
  if (core_hi < core_lo) throw std::invalid_argument("empty core interval");
  std::vector<double> ys;
  ys.reserve(static_cast<std::size_t>(pts.size()));
  for (int i = 0; i < pts.size(); ++i) ys.push_back(pts.at(i));
  std::sort(ys.begin(), ys.end());

  Cond3Report report;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    if (ys[i + 1] < core_lo - U_halfwidth || ys[i] > core_hi + U_halfwidth) continue;
    report.max_gap = std::max(report.max_gap, ys[i + 1] - ys[i]);
  }

  // Chain of open intervals (y - U, y + U) from core_lo rightward.
  double reach = core_lo;
  for (;;) {
    double next = reach;
    for (double y : ys)
      if (y - U_halfwidth < reach && y + U_halfwidth > next) next = y + U_halfwidth;
    if (next > core_hi) {
      report.covered = true;
      return report;
    }
    if (next <= reach) {
      report.covered = false;
      report.witness = reach;
      return report;
    }
    reach = next;
  }
}

double lemma33_sum(const PointSet& pts, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("lemma33 needs eps > 0");
  const double expo = static_cast<double>(pts.dim()) + eps;
  double sup = 0.0;
  std::vector<double> terms(static_cast<std::size_t>(pts.size()));
  for (int mu = 0; mu < pts.size(); ++mu) {
    for (int l = 0; l < pts.size(); ++l)
      terms[static_cast<std::size_t>(l)] = std::pow(1.0 + pts.distance(l, mu), -expo);
    sup = std::max(sup, pairwise_sum(std::span<const double>(terms)));
  }
  return sup;
}

namespace {

DecayFit envelope_fit(const std::vector<std::pair<double, double>>& offset_lhs,
                      const GevreySequence& seq, std::span<const double> h_grid) {
  DecayFit fit;
  if (h_grid.empty() || offset_lhs.empty()) return fit;
  fit.found = true;
  fit.h = *std::max_element(h_grid.begin(), h_grid.end());
  double log_c = -std::numeric_limits<double>::infinity();
  for (const auto& [d, lhs] : offset_lhs) {
    fit.max_offset = std::max(fit.max_offset, std::abs(d));
    if (d == 0.0) fit.lhs_at_zero = std::max(fit.lhs_at_zero, lhs);
    if (lhs <= 0.0) continue;
    log_c = std::max(log_c, std::log(lhs) + seq.assoc(fit.h * std::abs(d)).value);
  }
  if (!std::isfinite(log_c)) {  // identically zero data
    fit.C = 0.0;
    fit.min_slack = 0.0;
    return fit;
  }
  fit.C = std::exp(log_c);
  double min_slack = std::numeric_limits<double>::infinity();
  for (const auto& [d, lhs] : offset_lhs) {
    const double bound = std::exp(log_c - seq.assoc(fit.h * std::abs(d)).value);
    min_slack = std::min(min_slack, bound - lhs);
  }
  fit.min_slack = min_slack;
  return fit;
}

}  // namespace

DecayFit lemma36_decay_fit(const Ucpu& u, const SampledField& chi, const Weight& eta,
                           double K_halfwidth, const GevreySequence& seq,
                           std::span<const double> h_grid, double max_offset, int x_samples) {
  if (!(chi.grid() == u.window().grid()))
    throw std::invalid_argument("chi must live on the window grid");
  if (K_halfwidth < 0.0 || x_samples < 1) throw std::invalid_argument("bad lemma36 parameters");

  // By lattice translation structure the left side depends only on the
  // offset y_lambda - y_mu, so one interior mu represents them all.
  const double interior = u.truncation() - 6.0 * u.step();
  const int d_max = std::min(static_cast<int>(std::floor(max_offset / u.step())),
                             static_cast<int>(std::floor((u.truncation() + interior) / u.step())));
  std::vector<std::pair<double, double>> offset_lhs;
  for (int d = -d_max; d <= d_max; ++d) {
    const double offset = d * u.step();
    if (std::abs(offset) > u.truncation() + interior + kEps) continue;
    SampledField psi_d = translate(u.window(), offset);
    double lhs = 0.0;
    for (int i = 0; i < x_samples; ++i) {
      const double r =
          x_samples == 1 ? 0.0 : -K_halfwidth + 2.0 * K_halfwidth * i / (x_samples - 1);
      lhs = std::max(lhs, fl1_norm(multiply(psi_d, translate(chi, r)), eta));
    }
    offset_lhs.emplace_back(offset, lhs);
  }
  return envelope_fit(offset_lhs, seq, h_grid);
}

DecayFit lemma37_product_decay(const Ucpu& u, const Weight& eta, const GevreySequence& seq,
                               std::span<const double> h_grid) {
  const double interior = u.truncation() - 6.0 * u.step();
  const int d_max = static_cast<int>(std::floor((u.truncation() + interior) / u.step()));
  const SampledField psi0 = u.window();
  std::vector<std::pair<double, double>> offset_lhs;
  for (int d = 0; d <= d_max; ++d) {
    const double offset = d * u.step();
    const double lhs = fl1_norm(multiply(psi0, translate(psi0, offset)), eta);
    offset_lhs.emplace_back(offset, lhs);
    if (d > 0) offset_lhs.emplace_back(-offset, lhs);  // symmetric window
  }
  return envelope_fit(offset_lhs, seq, h_grid);
}

TailRadius lemma39_tail_radius(const PointSet& pts, const GevreySequence& seq, double h,
                               double eps) {
  if (h <= 0.0 || eps <= 0.0) throw std::invalid_argument("lemma39 needs h > 0 and eps > 0");

  auto tail_sup = [&](double R) {
    double sup = 0.0;
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(pts.size()));
    for (int mu = 0; mu < pts.size(); ++mu) {
      terms.clear();
      for (int l = 0; l < pts.size(); ++l) {
        const double d = pts.distance(l, mu);
        if (d > R + kEps) terms.push_back(std::exp(-seq.assoc(h * d).value));
      }
      sup = std::max(sup, pairwise_sum(std::span<const double>(terms)));
    }
    return sup;
  };

  // Candidate radii: 0 plus every pairwise distance (the tail only changes
  // there).  Monotone, so scan upward.
  std::vector<double> candidates{0.0};
  for (int i = 0; i < pts.size(); ++i)
    for (int j = i + 1; j < pts.size(); ++j) candidates.push_back(pts.distance(i, j));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](double x, double y) { return std::abs(x - y) < kEps; }),
                   candidates.end());

  TailRadius result;
  for (double r : candidates) {
    const double tail = tail_sup(r);
    if (tail <= eps) {
      result.R_exact = r;
      result.tail_at_R = tail;
      break;
    }
  }

  // Constructive radius from the proof: with K = [-k, k] covering R via the
  // point family, C = e^{A(h k)} and C_K the condition-(2) constant, any
  // R >= k + 1 with 2 int_{R-k}^inf e^{-A(h u / 2)} du <= eps |K| / (2 C C_K)
  // works.
  double spacing = std::numeric_limits<double>::infinity();
  {
    std::vector<double> ys;
    for (int i = 0; i < pts.size(); ++i) ys.push_back(pts.at(i));
    std::sort(ys.begin(), ys.end());
    for (std::size_t i = 0; i + 1 < ys.size(); ++i)
      spacing = std::min(spacing, ys[i + 1] - ys[i]);
    if (ys.size() == 1) spacing = 1.0;
  }
  const double k = std::max(1.0, std::ceil(spacing / 2.0));
  const double big_c = std::exp(seq.assoc(h * k).value);
  const int c_k = check_condition2(pts, k);
  const double budget = eps * (2.0 * k) / (2.0 * big_c * c_k);

  // Right-tail integral of e^{-A(h u / 2)} on a fine grid, accumulated from
  // far out so each query is a lookup.
  const double step = 0.01;
  double cutoff = k + 1.0;
  while (std::exp(-seq.assoc(h * cutoff / 2.0).value) > 1e-22 && cutoff < 1e5) cutoff += 1.0;
  const int cells = static_cast<int>(std::ceil((cutoff - 1.0) / step));
  std::vector<double> right_tail(static_cast<std::size_t>(cells) + 1, 0.0);
  for (int i = cells - 1; i >= 0; --i) {
    const double u0 = 1.0 + i * step;
    const double u1 = u0 + step;
    const double cell = 0.5 * step *
                        (std::exp(-seq.assoc(h * u0 / 2.0).value) +
                         std::exp(-seq.assoc(h * u1 / 2.0).value));
    right_tail[static_cast<std::size_t>(i)] = right_tail[static_cast<std::size_t>(i) + 1] + cell;
  }
  auto tail_integral = [&](double t) {
    if (t <= 1.0) return 2.0 * right_tail[0];
    const int idx = static_cast<int>(std::floor((t - 1.0) / step));
    if (idx >= cells) return 0.0;
    return 2.0 * right_tail[static_cast<std::size_t>(idx)];
  };

  double r_con = std::ceil((k + 1.0) / spacing) * spacing;
  while (tail_integral(r_con - k) > budget && r_con < 1e6) r_con += spacing;
  result.R_constructive = r_con;
  return result;
}

}  // namespace amalgam
