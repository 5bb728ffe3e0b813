// include/amalgam/local_space.hpp

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

#ifndef AMALGAM_LOCAL_SPACE_HPP
#define AMALGAM_LOCAL_SPACE_HPP

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "amalgam/field.hpp"
#include "amalgam/weights.hpp"

namespace amalgam {

// Concrete local components E.  FourierLq(1, nu) is the Fourier-Lebesgue
// space FL^1_nu; other q arise on the Fourier side of weighted L^q and are
// what the modulation-space identity measures against.
struct WeightedLp {
  double p = 2.0;
  Weight eta = Weight::constant();
};
struct WeightedC0 {
  Weight eta = Weight::constant();
};
struct FourierLq {
  double q = 1.0;
  Weight nu = Weight::constant();
};

class LocalSpaceSpec {
 public:
  using Variant = std::variant<WeightedLp, WeightedC0, FourierLq>;

  static LocalSpaceSpec weighted_lp(double p, Weight eta);
  static LocalSpaceSpec weighted_c0(Weight eta);
  static LocalSpaceSpec fourier_l1(Weight nu) { return fourier_lq(1.0, std::move(nu)); }
  static LocalSpaceSpec fourier_lq(double q, Weight nu);

  const Variant& variant() const { return v_; }

  // Certificate for ||T_x||: omega_E(x) <= C e^{A(tau|x|)}.  Translation is
  // an isometry on FL^q_nu, so there the certificate is trivial; for the
  // weighted spaces it is the weight's own moderation certificate.
  const ModerationCert& omega_cert() const { return omega_cert_; }
  // Certificate for ||M_{-xi}||: nu_E(xi) <= C e^{M(tau|xi|)}.  Modulation
  // is an isometry on the weighted L^p / C0 spaces.
  const ModerationCert& nu_cert() const { return nu_cert_; }

  // Weight majorant used on the right side of the multiplier bound
  // ||g . e||_E <= ||g||_{FL^1_{nu_E}} ||e||_E.
  Weight modulation_weight() const;
  // Weight majorant for the convolution bound ||f * e||_E <= ||f||_{L^1_{omega_E}} ||e||_E.
  Weight convolution_weight() const;

  std::string label() const;

 private:
  explicit LocalSpaceSpec(Variant v) : v_(std::move(v)) {}

  Variant v_;
  ModerationCert omega_cert_{1.0, 1.0};
  ModerationCert nu_cert_{1.0, 1.0};
};

struct LocalNormReport {
  double value = 0.0;
  // For the C0 component: sup of |eta f| outside |x| > L/2 relative to the
  // norm, flagged when above 1e-8 (the operational c0 membership test).
  double tail_sup = 0.0;
  bool tail_flag = false;
};

double local_norm(const SampledField& f, const LocalSpaceSpec& spec);
LocalNormReport local_norm_report(const SampledField& f, const LocalSpaceSpec& spec);

// For each x: max over probes of ||T_x e||_E / ||e||_E, an empirical lower
// bound for omega_E(x).
std::vector<std::pair<double, double>> empirical_translation_growth(
    const LocalSpaceSpec& spec, std::span<const double> xs,
    std::span<const SampledField> probes);

struct GrowthCheck {
  double min_slack = 0.0;  // min over x of ln C + A(tau|x|) - ln ratio(x)
  double witness_x = 0.0;
  bool ok = false;
};

// Compares the empirical growth against the omega_E certificate.
GrowthCheck translation_growth_vs_certificate(const LocalSpaceSpec& spec,
                                              const GevreySequence& seq,
                                              std::span<const double> xs,
                                              std::span<const SampledField> probes);

struct MultiplierReport {
  double product_lhs = 0.0;
  double product_rhs = 0.0;
  double product_slack = 0.0;
  double convolution_lhs = 0.0;
  double convolution_rhs = 0.0;
  double convolution_slack = 0.0;
  bool ok = false;  // both slacks >= -1e-9
};

// Checks ||g . e||_E <= ||g||_{FL^1_{nu_E}} ||e||_E and
// ||g * e||_E <= ||g||_{L^1_{omega_E}} ||e||_E.
MultiplierReport multiplier_bound_check(const SampledField& g, const SampledField& e,
                                        const LocalSpaceSpec& spec);

}  // namespace amalgam

#endif  // AMALGAM_LOCAL_SPACE_HPP
