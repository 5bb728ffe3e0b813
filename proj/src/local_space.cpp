// src/local_space.cpp

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

#include "amalgam/local_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace amalgam {

LocalSpaceSpec LocalSpaceSpec::weighted_lp(double p, Weight eta) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  LocalSpaceSpec spec{Variant{WeightedLp{p, eta}}};
  spec.omega_cert_ = eta.certificate();
  spec.nu_cert_ = ModerationCert{1.0, 1.0};  // |e^{2 pi i xi t}| = 1
  return spec;
}

LocalSpaceSpec LocalSpaceSpec::weighted_c0(Weight eta) {
  LocalSpaceSpec spec{Variant{WeightedC0{eta}}};
  spec.omega_cert_ = eta.certificate();
  spec.nu_cert_ = ModerationCert{1.0, 1.0};
  return spec;
}

LocalSpaceSpec LocalSpaceSpec::fourier_lq(double q, Weight nu) {
  if (!(q >= 1.0)) throw std::invalid_argument("q must be >= 1");
  LocalSpaceSpec spec{Variant{FourierLq{q, nu}}};
  spec.omega_cert_ = ModerationCert{1.0, 1.0};  // T_x only rotates the phase of F^{-1}
  spec.nu_cert_ = nu.certificate();
  return spec;
}

Weight LocalSpaceSpec::modulation_weight() const {
  if (const auto* fq = std::get_if<FourierLq>(&v_)) return fq->nu;
  return Weight::constant();
}

Weight LocalSpaceSpec::convolution_weight() const {
  if (const auto* lp = std::get_if<WeightedLp>(&v_)) return lp->eta;
  if (const auto* c0 = std::get_if<WeightedC0>(&v_)) return c0->eta;
  return Weight::constant();
}

std::string LocalSpaceSpec::label() const {
  std::ostringstream os;
  if (const auto* lp = std::get_if<WeightedLp>(&v_)) {
    os << "lp:p=" << lp->p << ",weight=" << lp->eta.label();
  } else if (const auto* c0 = std::get_if<WeightedC0>(&v_)) {
    os << "c0:weight=" << c0->eta.label();
  } else {
    const auto& fq = std::get<FourierLq>(v_);
    if (fq.q == 1.0)
      os << "fl1:weight=" << fq.nu.label();
    else
      os << "flq:q=" << fq.q << ",weight=" << fq.nu.label();
  }
  return os.str();
}

double local_norm(const SampledField& f, const LocalSpaceSpec& spec) {
  return local_norm_report(f, spec).value;
}

LocalNormReport local_norm_report(const SampledField& f, const LocalSpaceSpec& spec) {
  LocalNormReport report;
  if (const auto* lp = std::get_if<WeightedLp>(&spec.variant())) {
    report.value = lp_norm(f, lp->p, lp->eta);
    return report;
  }
  if (const auto* c0 = std::get_if<WeightedC0>(&spec.variant())) {
    const double inf = std::numeric_limits<double>::infinity();
    report.value = lp_norm(f, inf, c0->eta);
    const double half = f.grid().half_width() / 2.0;
    double tail = 0.0;
    for (int j = 0; j < f.grid().size(); ++j) {
      const double x = f.grid().x(j);
      if (std::abs(x) <= half) continue;
      tail = std::max(tail, c0->eta.eval(x) * std::abs(f.value(j)));
    }
    report.tail_sup = tail;
    report.tail_flag = report.value > 0.0 && tail > 1e-8 * report.value;
    return report;
  }
  const auto& fq = std::get<FourierLq>(spec.variant());
  report.value = fourier_lq_norm(f, fq.q, fq.nu);
  return report;
}

std::vector<std::pair<double, double>> empirical_translation_growth(
    const LocalSpaceSpec& spec, std::span<const double> xs,
    std::span<const SampledField> probes) {
  if (probes.empty()) throw std::invalid_argument("translation growth needs probes");
  std::vector<double> base;
  base.reserve(probes.size());
  for (const SampledField& e : probes) {
    const double n = local_norm(e, spec);
    if (n == 0.0) throw std::invalid_argument("translation growth probes must be nonzero");
    base.push_back(n);
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(xs.size());
  for (double x : xs) {
    double ratio = 0.0;
    for (std::size_t i = 0; i < probes.size(); ++i)
      ratio = std::max(ratio, local_norm(translate(probes[i], x), spec) / base[i]);
    out.emplace_back(x, ratio);
  }
  return out;
}

GrowthCheck translation_growth_vs_certificate(const LocalSpaceSpec& spec,
                                              const GevreySequence& seq,
                                              std::span<const double> xs,
                                              std::span<const SampledField> probes) {
  const auto rows = empirical_translation_growth(spec, xs, probes);
  const ModerationCert& cert = spec.omega_cert();
  GrowthCheck check;
  check.min_slack = std::numeric_limits<double>::infinity();
  for (const auto& [x, ratio] : rows) {
    const double slack =
        std::log(cert.C) + seq.assoc(cert.tau * std::abs(x)).value - std::log(ratio);
    if (slack < check.min_slack) {
      check.min_slack = slack;
      check.witness_x = x;
    }
  }
  check.ok = check.min_slack >= 0.0;
  return check;
}

MultiplierReport multiplier_bound_check(const SampledField& g, const SampledField& e,
                                        const LocalSpaceSpec& spec) {
  MultiplierReport report;
  const double e_norm = local_norm(e, spec);

  report.product_lhs = local_norm(multiply(g, e), spec);
  report.product_rhs = fl1_norm(g, spec.modulation_weight()) * e_norm;
  report.product_slack = report.product_rhs - report.product_lhs;

  report.convolution_lhs = local_norm(convolve(g, e), spec);
  report.convolution_rhs = lp_norm(g, 1.0, spec.convolution_weight()) * e_norm;
  report.convolution_slack = report.convolution_rhs - report.convolution_lhs;

  report.ok = report.product_slack >= -1e-9 && report.convolution_slack >= -1e-9;
  return report;
}

}  // namespace amalgam
