// include/amalgam/weights.hpp

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

#ifndef AMALGAM_WEIGHTS_HPP
#define AMALGAM_WEIGHTS_HPP

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "amalgam/gevrey.hpp"

namespace amalgam {

// Moderation certificate: the claim eta(x+y) <= C eta(x) e^{A(tau |y|)}.
struct ModerationCert {
  double C = 1.0;
  double tau = 1.0;
};

struct ModerationReport {
  // min over the sample grid of ln C + A(tau|y|) + ln eta(x) - ln eta(x+y);
  // the certificate holds on the grid iff min_slack >= 0.
  double min_slack = 0.0;
  std::pair<double, double> witness{0.0, 0.0};
  bool ok = false;
};

// Radial positive weight on R with exact log-domain evaluation.  Stock
// kinds: constant 1, (1+|x|)^s, e^{k|x|^{1/sigma}}, e^{s A(tau|x|)}, and the
// geometric interpolation eta_0^{1-theta} eta_1^theta.  A scalar factor is
// carried separately so certificate majorants C e^{A(tau|x|)} are
// representable.
class Weight {
 public:
  static Weight constant();
  static Weight polynomial(double s);
  static Weight sub_exponential(double k, double sigma);
  static Weight assoc_exp(double s, double tau, GevreySequence seq);
  static Weight interpolate(const Weight& w0, const Weight& w1, double theta);

  double log_eval(double x) const;
  double eval(double x) const;

  // Pointwise reciprocal with the kind negated; the certificate is kept
  // (moderation of 1/eta on a grid holds with the same (C, tau)).
  Weight inverse() const;

  Weight scaled(double factor) const;

  Weight with_certificate(ModerationCert cert) const;
  const ModerationCert& certificate() const { return cert_; }

  // Calibrates (C, tau) for this kind against seq: tau by kind, C as a
  // slightly padded sup of eta(x+y) / (eta(x) e^{A(tau|y|)}) over the
  // canonical grid [-32,32]^2 step 1/2.  Grid membership is the operative
  // notion of class-dagger here.
  Weight with_default_certificate(const GevreySequence& seq) const;

  bool same_kind(const Weight& other) const;
  bool is_constant() const;
  std::string label() const;

 private:
  struct Constant {};
  struct Polynomial {
    double s;
  };
  struct SubExponential {
    double k;
    double sigma;
  };
  struct AssocExp {
    double s;
    double tau;
    GevreySequence seq;
  };
  struct Interp {
    std::shared_ptr<const Weight> w0;
    std::shared_ptr<const Weight> w1;
    double theta;
  };
  using Kind = std::variant<Constant, Polynomial, SubExponential, AssocExp, Interp>;

  explicit Weight(Kind kind) : kind_(std::move(kind)) {}

  Kind kind_;
  double log_scale_ = 0.0;
  ModerationCert cert_{1.0, 1.0};
};

ModerationReport check_moderate(const Weight& w, const GevreySequence& seq, double C, double tau,
                                std::span<const std::pair<double, double>> sample_grid);

// Pairs (x, y) on [lo, hi]^2 with the given step.
std::vector<std::pair<double, double>> pair_grid(double lo, double hi, double step);

// The canonical moderation grid [-32, 32]^2, step 1/2.
std::vector<std::pair<double, double>> canonical_pair_grid();

}  // namespace amalgam

#endif  // AMALGAM_WEIGHTS_HPP
