// src/duality.cpp

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

#include "amalgam/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace amalgam {

namespace {

double conjugate_exponent(double p) {
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

double seq_lp(const std::vector<double>& weighted, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : weighted) m = std::max(m, v);
    return m;
  }
  std::vector<double> terms(weighted.size());
  for (std::size_t i = 0; i < weighted.size(); ++i)
    terms[i] = p == 1.0 ? weighted[i] : (p == 2.0 ? weighted[i] * weighted[i] : std::pow(weighted[i], p));
  const double s = pairwise_sum(std::span<const double>(terms));
  return p == 1.0 ? s : (p == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / p));
}

}  // namespace

cplx pairing(const SampledField& f, const SampledField& phi) {
  if (!(f.grid() == phi.grid())) throw std::invalid_argument("grid mismatch in pairing");
  std::vector<cplx> terms(static_cast<std::size_t>(f.grid().size()));
  for (int j = 0; j < f.grid().size(); ++j)
    terms[static_cast<std::size_t>(j)] = f.value(j) * phi.value(j);
  return pairwise_sum(std::span<const cplx>(terms)) * f.grid().delta();
}

PairingReport duality_bound_check(const SampledField& f, const SampledField& phi,
                                  const SampledField& chi0, const LocalSpaceSpec& E,
                                  const LocalSpaceSpec& E_dual, double p, const Weight& eta,
                                  double outer_halfwidth) {
  const auto* lp = std::get_if<WeightedLp>(&E.variant());
  const auto* lp_dual = std::get_if<WeightedLp>(&E_dual.variant());
  if (!lp || !lp_dual || lp_dual->p != conjugate_exponent(lp->p) ||
      !lp_dual->eta.same_kind(lp->eta.inverse()))
    throw std::invalid_argument("E' must be the Hoelder dual of E");
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");

  const double q = conjugate_exponent(p);
  const Weight one = Weight::constant();
  const double chi0_l2 = lp_norm(chi0, 2.0, one);
  if (chi0_l2 == 0.0) throw std::invalid_argument("chi0 must not be identically zero");

  PairingReport report;
  report.lhs = std::abs(pairing(f, phi));

  AmalgamSpec f_spec{E_dual,
                     std::isinf(q) ? GlobalComponent{GlobalComponent::Kind::Lp,
                                                     std::numeric_limits<double>::infinity()}
                                   : GlobalComponent::lp(q),
                     eta.inverse(), outer_halfwidth};
  AmalgamSpec phi_spec{E,
                       std::isinf(p) ? GlobalComponent{GlobalComponent::Kind::Lp,
                                                       std::numeric_limits<double>::infinity()}
                                     : GlobalComponent::lp(p),
                       eta, outer_halfwidth};
  const double f_norm = continuous_norm(f, chi0, f_spec).value;
  const double phi_norm = continuous_norm(phi, conj_field(chi0), phi_spec).value;
  report.rhs = f_norm * phi_norm / (chi0_l2 * chi0_l2);
  report.slack = report.rhs - report.lhs;
  return report;
}

InterpolationReport interpolation_convexity(const WeightedSequence& c, double p0, double p1,
                                            const Weight& eta0, const Weight& eta1, double theta) {
  if (c.points.size() != c.values.size())
    throw std::invalid_argument("sequence points/values size mismatch");
  if (!(p0 >= 1.0) || !(p1 >= 1.0)) throw std::invalid_argument("p0, p1 must be >= 1");
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must be in (0, 1)");

  const double inv_pt = (std::isinf(p0) ? 0.0 : (1.0 - theta) / p0) +
                        (std::isinf(p1) ? 0.0 : theta / p1);
  const double p_theta = inv_pt == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv_pt;
  const Weight eta_theta = Weight::interpolate(eta0, eta1, theta);

  auto weighted = [&](const Weight& w) {
    std::vector<double> out(c.points.size());
    for (std::size_t i = 0; i < c.points.size(); ++i)
      out[i] = std::abs(c.values[i]) * w.eval(c.points[i]);
    return out;
  };

  InterpolationReport report;
  report.p_theta = p_theta;
  report.lhs = seq_lp(weighted(eta_theta), p_theta);
  const double n0 = seq_lp(weighted(eta0), p0);
  const double n1 = seq_lp(weighted(eta1), p1);
  report.rhs = std::pow(n0, 1.0 - theta) * std::pow(n1, theta);
  if (report.lhs == 0.0 && report.rhs == 0.0)
    report.log_slack = 0.0;
  else
    report.log_slack = std::log(report.rhs) - std::log(report.lhs);
  return report;
}

StftField::StftField(Grid gx, Grid gxi, std::vector<cplx> values)
    : gx_(gx), gxi_(gxi), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(gx_.size()) * static_cast<std::size_t>(gxi_.size()))
    throw std::invalid_argument("stft value count does not match grids");
}

double StftField::energy() const {
  std::vector<double> terms(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) terms[i] = std::norm(values_[i]);
  const double s = pairwise_sum(std::span<const double>(terms)) * gx_.delta() * gxi_.delta();
  return std::sqrt(s);
}

StftField stft(const SampledField& f, const SampledField& phi) {
  if (!(f.grid() == phi.grid())) throw std::invalid_argument("grid mismatch in stft");
  bool nonzero = false;
  for (const cplx& v : phi.values()) nonzero = nonzero || v != cplx{0.0, 0.0};
  if (!nonzero) throw std::invalid_argument("stft window must not be identically zero");

  const Grid& gx = f.grid();
  const Grid gxi = gx.reciprocal();
  const SampledField phic = conj_field(phi);
  std::vector<cplx> values(static_cast<std::size_t>(gx.size()) *
                           static_cast<std::size_t>(gxi.size()));
  parallel_for(static_cast<std::size_t>(gx.size()), default_jobs(), [&](std::size_t ix) {
    const double x = gx.x(static_cast<int>(ix));
    const SampledField slice = fourier(multiply(f, translate(phic, x)));
    for (int k = 0; k < gxi.size(); ++k)
      values[ix * static_cast<std::size_t>(gxi.size()) + static_cast<std::size_t>(k)] =
          slice.value(k);
  });
  return StftField(gx, gxi, std::move(values));
}

RatioReport modulation_vs_amalgam(const SampledField& f, const SampledField& phi, double p,
                                  double q_inner, const Weight& eta, double outer_halfwidth) {
  if (!(p >= 1.0) || !(q_inner >= 1.0)) throw std::invalid_argument("p and q must be >= 1");
  RatioReport report;

  // (a) mixed norm from the STFT pipeline.
  const StftField v = stft(f, phi);
  const Grid& gx = v.grid_x();
  const Grid& gxi = v.grid_xi();
  const Weight one = Weight::constant();
  std::vector<double> profile;
  std::vector<double> slice(static_cast<std::size_t>(gxi.size()));
  for (int ix = 0; ix < gx.size(); ++ix) {
    const double x = gx.x(ix);
    if (std::abs(x) > outer_halfwidth + 1e-12) continue;
    for (int k = 0; k < gxi.size(); ++k)
      slice[static_cast<std::size_t>(k)] = std::abs(v.at(ix, k));
    double inner;
    if (std::isinf(q_inner)) {
      inner = *std::max_element(slice.begin(), slice.end());
    } else {
      std::vector<double> terms(slice.size());
      for (std::size_t i = 0; i < slice.size(); ++i)
        terms[i] = q_inner == 1.0 ? slice[i]
                                  : (q_inner == 2.0 ? slice[i] * slice[i]
                                                    : std::pow(slice[i], q_inner));
      const double s = pairwise_sum(std::span<const double>(terms)) * gxi.delta();
      inner = q_inner == 1.0 ? s : (q_inner == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / q_inner));
    }
    profile.push_back(inner * eta.eval(x));
  }
  if (std::isinf(p)) {
    report.mixed_norm = *std::max_element(profile.begin(), profile.end());
  } else {
    std::vector<double> terms(profile.size());
    for (std::size_t i = 0; i < profile.size(); ++i)
      terms[i] = p == 1.0 ? profile[i] : (p == 2.0 ? profile[i] * profile[i] : std::pow(profile[i], p));
    const double s = pairwise_sum(std::span<const double>(terms)) * gx.delta();
    report.mixed_norm = p == 1.0 ? s : (p == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / p));
  }

  // (b) amalgam norm with the Fourier-side local component FL^q and window
  // conj(phi); ||F g||_{FX} = ||g||_X fixes the normalization.
  AmalgamSpec spec{LocalSpaceSpec::fourier_lq(q_inner, one),
                   std::isinf(p) ? GlobalComponent{GlobalComponent::Kind::Lp,
                                                   std::numeric_limits<double>::infinity()}
                                 : GlobalComponent::lp(p),
                   eta, outer_halfwidth};
  report.amalgam_norm = continuous_norm(f, conj_field(phi), spec).value;
  report.ratio = report.mixed_norm / report.amalgam_norm;
  return report;
}

}  // namespace amalgam
