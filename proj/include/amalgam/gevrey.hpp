// include/amalgam/gevrey.hpp

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

#ifndef AMALGAM_GEVREY_HPP
#define AMALGAM_GEVREY_HPP

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace amalgam {

// Value of an associated function M(rho) = sup_p ln(rho^p / M_p) together
// with the smallest maximizing index.
struct AssocFnValue {
  double value = 0.0;
  int argmax_p = 0;
};

struct M2StarReport {
  int p0 = 1;        // first index of the checked range
  int N = 0;         // found multiplier, 0 when none worked
  bool ok = false;
  double min_slack = 0.0;  // min over p of ln m_{pN} - ln 2 - ln m_p
  int witness_p = 0;       // index attaining min_slack
};

struct AssocIneqReport {
  // Inequality 1: M(rho + lambda) <= ln 2 + M(2 rho) + M(2 lambda).
  double min_slack_sum = 0.0;
  std::pair<double, double> witness_sum{0.0, 0.0};
  // Inequality 2: 2 M(rho) <= ln c0 + M(H rho), evaluated at each rho.
  double min_slack_double = 0.0;
  double witness_double = 0.0;
};

// A log-convex weight sequence with M_0 = M_1 = 1 and its associated
// function.  The stock family is M_p = (p!)^sigma, which carries both the
// regularity sequence {M_p} and the decay sequence {A_p} of the calculus
// (the two are shared, with shared structural constants c0 and H).
// All values are held in the log domain; (p!)^sigma itself is never
// materialized.
class GevreySequence {
 public:
  // M_p = (p!)^sigma, sigma >= 1.  (M.2) holds with c0 = 1, H = 2^sigma
  // because (p+q)! <= 2^{p+q} p! q!.
  static GevreySequence gevrey(double sigma, int pmax = 100000);

  // Arbitrary log-convex table log_m[p] = ln M_p (log_m[0] = log_m[1] = 0).
  // Only the condition checks are meaningful for such sequences.
  static GevreySequence from_log_table(std::vector<double> log_m, double c0, double H,
                                       double L0 = 1.0, double c0m6 = 1.0);

  // ln M_p; exact 0 for p in {0, 1}.
  double log_value(int p) const;

  // Quotient sequence in the log domain: ln m_p = ln(M_p / M_{p-1}), p >= 1.
  double log_quotient(int p) const;

  // Associated function M(rho) = sup_p ln(rho^p / M_p).  The scan stops at
  // the first strict decrease (the terms are concave in p by (M.1)); ties
  // break toward the smaller p.  Throws if the scan hits pmax first.
  AssocFnValue assoc(double rho) const;

  double sigma() const { return sigma_; }
  bool is_gevrey() const { return sigma_ > 0.0; }
  double c0() const { return c0_; }
  double H() const { return H_; }
  double L0() const { return L0_; }
  double c0m6() const { return c0m6_; }
  int pmax() const { return static_cast<int>(log_m_->size()) - 1; }

  std::string label() const;

 private:
  GevreySequence() = default;

  double sigma_ = 0.0;  // 0 marks a table-backed sequence
  double c0_ = 1.0;
  double H_ = 1.0;
  double L0_ = 1.0;
  double c0m6_ = 1.0;
  std::shared_ptr<const std::vector<double>> log_m_;
};

// (M.2)*: search for the smallest N in [2, 64] with 2 m_p <= m_{pN} on the
// whole range, strictly (margin 1e-12 in the log domain).  forced_N != 0
// checks that single N instead of searching.
M2StarReport check_m2star(const GevreySequence& seq, int p_lo, int p_hi, int forced_N = 0);

// Evaluates both associated-function inequalities at every (rho, lambda)
// sample and reports the worst slack of each.
AssocIneqReport check_assoc_inequalities(const GevreySequence& seq,
                                         std::span<const std::pair<double, double>> samples);

// Log-spaced grid helper for the inequality sweeps.
std::vector<double> log_spaced(double lo, double hi, int count);

}  // namespace amalgam

#endif  // AMALGAM_GEVREY_HPP
