// include/amalgam/verify.hpp

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

#ifndef AMALGAM_VERIFY_HPP
#define AMALGAM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "amalgam/report.hpp"
#include "amalgam/weights.hpp"

namespace amalgam::verify {

// Each function runs one verification experiment and returns its rows.
// Tolerances are pinned here; a row passes iff slack >= -tolerance.

// Gaussian amalgam closed forms: ||g|| in W(L^2, L^1) = 1 and in
// W(L^2, L^2) = 2^{-1/2}, within 1e-7.
std::vector<ReportRow> gaussian_closed_forms();

// Stock lattice UCPU (a=1, s=1, L=12): |sum psi_lambda - 1| <= 1e-10 on
// |x| <= 6, plus the condition (2)/(3) certificates.
std::vector<ReportRow> ucpu_partition();

// Continuous/discrete norm equivalence over the 9-Gaussian family for
// (p, eta) in {1, 2, inf} x {const, poly:1}: spread <= 10, < 5% drift under
// outer-grid halving, < 25% under lattice refinement.
std::vector<ReportRow> equivalence();
// Single (p, eta) cell of the matrix above.
std::vector<ReportRow> equivalence_combo(double p, const Weight& eta,
                                         const std::string& eta_name);

// Window independence (Gaussian widths 1 vs 4): spread <= 10, < 5% drift
// under outer-grid halving.
std::vector<ReportRow> window_independence_check();

// Retraction: ||P(I(f)) - f||_2 / ||f||_2 <= 1e-8 on the core for the
// 9-Gaussian family.
std::vector<ReportRow> retraction();

// Pairing bound sweep: random modulated-Gaussian pairs with p cycling
// {1, 2, 4} (or fixed to p_fixed when nonzero); slack >= -1e-7;
// matched-Gaussian sharpness |slack| <= 1e-7.
std::vector<ReportRow> duality_sweep(std::uint64_t seed, int trials = 200, double p_fixed = 0.0);

// Weighted-sequence log-convexity sweep: slack >= -1e-12 plus the two
// analytic equality cases at 1e-12.
std::vector<ReportRow> interpolation_sweep(std::uint64_t seed, int trials = 500);

// STFT mixed norm vs amalgam norm: ratio = 1 +- 1e-6 for
// (p, q) in {1, 2} x {1, 2}.
std::vector<ReportRow> modulation_identity();

// Tail radius on Z cap [-50, 50], h = 1, eps in {0.1, 0.01}: exact tail at
// the returned radius <= eps and R_exact <= R_constructive.
std::vector<ReportRow> tail_radius();

// Associated-function suite: scan vs naive full scan (p <= 1e4, 100 points,
// sigma in {1, 2}) at 1e-12, and both inequalities at slack >= -1e-12.
std::vector<ReportRow> assoc_suite();

// Frequency-decay bound for the unit Gaussian, sigma = 1, h = 1/2, K = 16,
// on |xi| <= 8, slack >= 0.
std::vector<ReportRow> lemma22_decay();

// All of the above, in criterion order.
std::vector<ReportRow> run_all(std::uint64_t seed);

// Runs run_all twice (jobs 1 vs jobs) and compares: values within 1e-12,
// identical pass columns.
std::vector<ReportRow> determinism_check(std::uint64_t seed, int jobs = 8);

}  // namespace amalgam::verify

#endif  // AMALGAM_VERIFY_HPP
