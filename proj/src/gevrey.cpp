// src/gevrey.cpp

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

#include "amalgam/gevrey.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace amalgam {

GevreySequence GevreySequence::gevrey(double sigma, int pmax) {
  if (sigma < 1.0) throw std::invalid_argument("gevrey exponent sigma must be >= 1");
  if (pmax < 2) throw std::invalid_argument("pmax must be >= 2");
  auto table = std::make_shared<std::vector<double>>(static_cast<std::size_t>(pmax) + 1, 0.0);
  // Cumulative sigma * sum_{k<=p} ln k keeps the quotients ln m_p exactly
  // recoverable as table differences.
  double acc = 0.0;
  for (int p = 2; p <= pmax; ++p) {
    acc += sigma * std::log(static_cast<double>(p));
    (*table)[static_cast<std::size_t>(p)] = acc;
  }
  GevreySequence seq;
  seq.sigma_ = sigma;
  seq.c0_ = 1.0;
  seq.H_ = std::pow(2.0, sigma);
  seq.log_m_ = std::move(table);
  return seq;
}

GevreySequence GevreySequence::from_log_table(std::vector<double> log_m, double c0, double H,
                                              double L0, double c0m6) {
  if (log_m.size() < 3) throw std::invalid_argument("log table needs at least p = 0, 1, 2");
  if (log_m[0] != 0.0 || log_m[1] != 0.0)
    throw std::invalid_argument("log table must have M_0 = M_1 = 1");
  if (c0 < 1.0 || H < 1.0) throw std::invalid_argument("(M.2) constants must be >= 1");
  GevreySequence seq;
  seq.sigma_ = 0.0;
  seq.c0_ = c0;
  seq.H_ = H;
  seq.L0_ = L0;
  seq.c0m6_ = c0m6;
  seq.log_m_ = std::make_shared<const std::vector<double>>(std::move(log_m));
  return seq;
}

double GevreySequence::log_value(int p) const {
  if (p < 0) throw std::invalid_argument("sequence index must be >= 0");
  if (p > pmax()) throw std::out_of_range("sequence index exceeds pmax");
  return (*log_m_)[static_cast<std::size_t>(p)];
}

double GevreySequence::log_quotient(int p) const {
  if (p < 1) throw std::invalid_argument("quotient index must be >= 1");
  return log_value(p) - log_value(p - 1);
}

AssocFnValue GevreySequence::assoc(double rho) const {
  if (rho < 0.0) throw std::invalid_argument("assoc argument must be >= 0");
  if (rho == 0.0) return {0.0, 0};
  const double log_rho = std::log(rho);
  AssocFnValue best{0.0, 0};  // p = 0 term is ln(rho^0 / M_0) = 0
  double prev = 0.0;
  const int cap = pmax();
  for (int p = 1; p <= cap; ++p) {
    const double term = static_cast<double>(p) * log_rho - (*log_m_)[static_cast<std::size_t>(p)];
    if (term > best.value) {
      best.value = term;
      best.argmax_p = p;
    }
    if (term < prev) return best;  // concave in p: first strict drop is final
    prev = term;
  }
  throw std::runtime_error("associated-function scan cap exceeded");
}

std::string GevreySequence::label() const {
  std::ostringstream os;
  if (is_gevrey())
    os << "gevrey(sigma=" << sigma_ << ")";
  else
    os << "table(pmax=" << pmax() << ")";
  return os.str();
}

M2StarReport check_m2star(const GevreySequence& seq, int p_lo, int p_hi, int forced_N) {
  if (p_lo < 1 || p_hi < p_lo) throw std::invalid_argument("bad (M.2)* index range");
  if (p_hi > seq.pmax()) throw std::invalid_argument("(M.2)* range exceeds pmax");
  constexpr double kMargin = 1e-12;
  const double ln2 = std::log(2.0);

  auto try_n = [&](int n, M2StarReport& out) {
    if (static_cast<long long>(p_hi) * n > seq.pmax()) return false;
    double min_slack = std::numeric_limits<double>::infinity();
    int witness = p_lo;
    for (int p = p_lo; p <= p_hi; ++p) {
      const double slack = seq.log_quotient(p * n) - ln2 - seq.log_quotient(p);
      if (slack < min_slack) {
        min_slack = slack;
        witness = p;
      }
    }
    out.min_slack = min_slack;
    out.witness_p = witness;
    return min_slack > kMargin;
  };

  M2StarReport report;
  report.p0 = p_lo;
  if (forced_N != 0) {
    report.N = forced_N;
    report.ok = forced_N >= 1 && try_n(forced_N, report);
    return report;
  }
  for (int n = 2; n <= 64; ++n) {
    if (try_n(n, report)) {
      report.N = n;
      report.ok = true;
      return report;
    }
  }
  report.N = 0;
  report.ok = false;
  return report;
}

AssocIneqReport check_assoc_inequalities(const GevreySequence& seq,
                                         std::span<const std::pair<double, double>> samples) {
  AssocIneqReport report;
  report.min_slack_sum = std::numeric_limits<double>::infinity();
  report.min_slack_double = std::numeric_limits<double>::infinity();
  const double ln_c0 = std::log(seq.c0());
  const double ln2 = std::log(2.0);
  for (const auto& [rho, lambda] : samples) {
    if (rho < 0.0 || lambda < 0.0)
      throw std::invalid_argument("inequality samples must be nonnegative");
    const double slack_sum =
        ln2 + seq.assoc(2.0 * rho).value + seq.assoc(2.0 * lambda).value - seq.assoc(rho + lambda).value;
    if (slack_sum < report.min_slack_sum) {
      report.min_slack_sum = slack_sum;
      report.witness_sum = {rho, lambda};
    }
    const double slack_double = ln_c0 + seq.assoc(seq.H() * rho).value - 2.0 * seq.assoc(rho).value;
    if (slack_double < report.min_slack_double) {
      report.min_slack_double = slack_double;
      report.witness_double = rho;
    }
  }
  return report;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (lo <= 0.0 || hi <= lo || count < 2) throw std::invalid_argument("bad log-spaced grid");
  std::vector<double> xs(static_cast<std::size_t>(count));
  const double step = (std::log(hi) - std::log(lo)) / (count - 1);
  for (int i = 0; i < count; ++i) xs[static_cast<std::size_t>(i)] = std::exp(std::log(lo) + step * i);
  return xs;
}

}  // namespace amalgam
