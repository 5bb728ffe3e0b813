// src/weights.cpp

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

#include "amalgam/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace amalgam {

Weight Weight::constant() { return Weight(Kind{Constant{}}); }

Weight Weight::polynomial(double s) { return Weight(Kind{Polynomial{s}}); }

Weight Weight::sub_exponential(double k, double sigma) {
  if (sigma < 1.0) throw std::invalid_argument("sub-exponential weight needs sigma >= 1");
  return Weight(Kind{SubExponential{k, sigma}});
}

Weight Weight::assoc_exp(double s, double tau, GevreySequence seq) {
  if (tau <= 0.0) throw std::invalid_argument("assoc-exp weight needs tau > 0");
  return Weight(Kind{AssocExp{s, tau, std::move(seq)}});
}

Weight Weight::interpolate(const Weight& w0, const Weight& w1, double theta) {
  if (theta < 0.0 || theta > 1.0) throw std::invalid_argument("theta must be in [0, 1]");
  Weight w(Kind{Interp{std::make_shared<Weight>(w0), std::make_shared<Weight>(w1), theta}});
  // ln eta_theta = (1-theta) ln eta_0 + theta ln eta_1, exactly.
  return w;
}

double Weight::log_eval(double x) const {
  const double r = std::abs(x);
  double v = log_scale_;
  if (std::holds_alternative<Constant>(kind_)) {
    // v unchanged
  } else if (const auto* p = std::get_if<Polynomial>(&kind_)) {
    v += p->s * std::log1p(r);
  } else if (const auto* e = std::get_if<SubExponential>(&kind_)) {
    v += e->k * std::pow(r, 1.0 / e->sigma);
  } else if (const auto* a = std::get_if<AssocExp>(&kind_)) {
    v += a->s * a->seq.assoc(a->tau * r).value;
  } else {
    const auto& i = std::get<Interp>(kind_);
    v += (1.0 - i.theta) * i.w0->log_eval(x) + i.theta * i.w1->log_eval(x);
  }
  return v;
}

double Weight::eval(double x) const { return std::exp(log_eval(x)); }

Weight Weight::inverse() const {
  Weight w = *this;
  w.log_scale_ = -log_scale_;
  if (const auto* p = std::get_if<Polynomial>(&kind_)) {
    w.kind_ = Kind{Polynomial{-p->s}};
  } else if (const auto* e = std::get_if<SubExponential>(&kind_)) {
    w.kind_ = Kind{SubExponential{-e->k, e->sigma}};
  } else if (const auto* a = std::get_if<AssocExp>(&kind_)) {
    w.kind_ = Kind{AssocExp{-a->s, a->tau, a->seq}};
  } else if (const auto* i = std::get_if<Interp>(&kind_)) {
    w.kind_ = Kind{Interp{std::make_shared<Weight>(i->w0->inverse()),
                          std::make_shared<Weight>(i->w1->inverse()), i->theta}};
  }
  return w;
}

Weight Weight::scaled(double factor) const {
  if (factor <= 0.0) throw std::invalid_argument("weight scale must be positive");
  Weight w = *this;
  w.log_scale_ += std::log(factor);
  return w;
}

Weight Weight::with_certificate(ModerationCert cert) const {
  Weight w = *this;
  w.cert_ = cert;
  return w;
}

Weight Weight::with_default_certificate(const GevreySequence& seq) const {
  double tau = 1.0;
  if (const auto* e = std::get_if<SubExponential>(&kind_)) {
    tau = std::pow(2.0 * std::max(1.0, std::abs(e->k)), e->sigma);
  } else if (const auto* a = std::get_if<AssocExp>(&kind_)) {
    tau = a->tau * std::pow(2.0 * std::max(1.0, std::abs(a->s)), seq.sigma() > 0 ? seq.sigma() : 1.0);
  }
  const auto grid = canonical_pair_grid();
  double worst = 0.0;  // sup of ln eta(x+y) - ln eta(x) - A(tau|y|)
  for (const auto& [x, y] : grid) {
    const double excess = log_eval(x + y) - log_eval(x) - seq.assoc(tau * std::abs(y)).value;
    worst = std::max(worst, excess);
  }
  ModerationCert cert;
  cert.tau = tau;
  cert.C = std::max(1.0, std::exp(worst) * (1.0 + 1e-9));
  return with_certificate(cert);
}

bool Weight::same_kind(const Weight& other) const {
  if (kind_.index() != other.kind_.index()) return false;
  if (log_scale_ != other.log_scale_) return false;
  if (std::holds_alternative<Constant>(kind_)) return true;
  if (const auto* p = std::get_if<Polynomial>(&kind_))
    return p->s == std::get<Polynomial>(other.kind_).s;
  if (const auto* e = std::get_if<SubExponential>(&kind_)) {
    const auto& o = std::get<SubExponential>(other.kind_);
    return e->k == o.k && e->sigma == o.sigma;
  }
  if (const auto* a = std::get_if<AssocExp>(&kind_)) {
    const auto& o = std::get<AssocExp>(other.kind_);
    return a->s == o.s && a->tau == o.tau && a->seq.sigma() == o.seq.sigma();
  }
  const auto& i = std::get<Interp>(kind_);
  const auto& o = std::get<Interp>(other.kind_);
  return i.theta == o.theta && i.w0->same_kind(*o.w0) && i.w1->same_kind(*o.w1);
}

bool Weight::is_constant() const {
  return std::holds_alternative<Constant>(kind_) && log_scale_ == 0.0;
}

std::string Weight::label() const {
  std::ostringstream os;
  if (std::holds_alternative<Constant>(kind_)) {
    os << "const";
  } else if (const auto* p = std::get_if<Polynomial>(&kind_)) {
    os << "poly:" << p->s;
  } else if (const auto* e = std::get_if<SubExponential>(&kind_)) {
    os << "subexp:k=" << e->k << ",sigma=" << e->sigma;
  } else if (const auto* a = std::get_if<AssocExp>(&kind_)) {
    os << "assoc:s=" << a->s << ",tau=" << a->tau;
  } else {
    const auto& i = std::get<Interp>(kind_);
    os << "interp(" << i.w0->label() << "," << i.w1->label() << ",theta=" << i.theta << ")";
  }
  if (log_scale_ != 0.0) os << "*" << std::exp(log_scale_);
  return os.str();
}

ModerationReport check_moderate(const Weight& w, const GevreySequence& seq, double C, double tau,
                                std::span<const std::pair<double, double>> sample_grid) {
  if (C < 1.0 || tau <= 0.0) throw std::invalid_argument("moderation certificate needs C >= 1, tau > 0");
  ModerationReport report;
  report.min_slack = std::numeric_limits<double>::infinity();
  const double ln_c = std::log(C);
  for (const auto& [x, y] : sample_grid) {
    const double slack =
        ln_c + seq.assoc(tau * std::abs(y)).value + w.log_eval(x) - w.log_eval(x + y);
    if (slack < report.min_slack) {
      report.min_slack = slack;
      report.witness = {x, y};
    }
  }
  report.ok = report.min_slack >= 0.0;
  return report;
}

std::vector<std::pair<double, double>> pair_grid(double lo, double hi, double step) {
  if (hi <= lo || step <= 0.0) throw std::invalid_argument("bad pair grid");
  std::vector<std::pair<double, double>> grid;
  const int n = static_cast<int>(std::llround((hi - lo) / step));
  grid.reserve(static_cast<std::size_t>((n + 1)) * static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      grid.emplace_back(lo + step * i, lo + step * j);
  return grid;
}

std::vector<std::pair<double, double>> canonical_pair_grid() { return pair_grid(-32.0, 32.0, 0.5); }

}  // namespace amalgam
