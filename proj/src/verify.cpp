// src/verify.cpp

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

#include "amalgam/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "amalgam/amalgam_norm.hpp"
#include "amalgam/duality.hpp"
#include "amalgam/field.hpp"
#include "amalgam/gevrey.hpp"
#include "amalgam/local_space.hpp"
#include "amalgam/rng.hpp"
#include "amalgam/ucpu.hpp"
#include "amalgam/util.hpp"

namespace amalgam::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

GlobalComponent global_of(double p) {
  return std::isinf(p) ? GlobalComponent{GlobalComponent::Kind::Lp, kInf}
                       : GlobalComponent::lp(p);
}

std::string p_label(double p) { return std::isinf(p) ? "inf" : format_double(p); }

// Full scan over all p <= p_cap (no early termination); exercises the same
// log table as the concavity-stopped implementation.
double naive_assoc(const GevreySequence& seq, double rho, int p_cap) {
  if (rho <= 0.0) return 0.0;
  const double lr = std::log(rho);
  double best = 0.0;
  for (int p = 1; p <= p_cap; ++p)
    best = std::max(best, p * lr - seq.log_value(p));
  return best;
}

}  // namespace

std::vector<ReportRow> gaussian_closed_forms() {
  std::vector<ReportRow> rows;
  const Grid g = Grid::standard();
  const SampledField gauss = gaussian(g, 0.0, 0.0, 1.0);
  const LocalSpaceSpec l2 = LocalSpaceSpec::weighted_lp(2.0, Weight::constant());

  const double targets[2] = {1.0, 1.0 / std::sqrt(2.0)};
  const double ps[2] = {1.0, 2.0};
  for (int i = 0; i < 2; ++i) {
    AmalgamSpec spec{l2, GlobalComponent::lp(ps[i]), Weight::constant(), 12.0};
    const double value = continuous_norm(gauss, gauss, spec).value;
    rows.push_back(ReportRow::check("c01", "gaussian_amalgam_closed_form",
                                    "space=W(L2;L" + format_double(ps[i]) + ");f=gauss;chi=gauss",
                                    value, -std::abs(value - targets[i]), 1e-7));
  }
  return rows;
}

std::vector<ReportRow> ucpu_partition() {
  std::vector<ReportRow> rows;
  const Grid g = Grid::standard();
  const Ucpu u = build_lattice_ucpu(g, 1.0, 1.0, 12.0);
  rows.push_back(ReportRow::check("c02", "ucpu_condition4", "a=1;s=1;L_pts=12;core=6",
                                  u.condition4().deviation,
                                  1e-10 - u.condition4().deviation, 0.0));
  rows.push_back(ReportRow::info("c02", "ucpu_condition2", "K=0.5",
                                 static_cast<double>(u.condition2_unit_cube())));
  rows.push_back(ReportRow::check("c02", "ucpu_condition3", "U=0.6",
                                  u.condition3().covered ? 1.0 : 0.0,
                                  u.condition3().covered ? 0.0 : -1.0, 0.0));
  return rows;
}

std::vector<ReportRow> equivalence_combo(double p, const Weight& eta,
                                         const std::string& eta_name) {
  std::vector<ReportRow> rows;
  const Grid g = Grid::standard();
  const auto family = gauss9_family(g);
  const auto ids = gauss9_ids();
  const SampledField chi = gaussian(g, 0.0, 0.0, 1.0);
  const LocalSpaceSpec l2 = LocalSpaceSpec::weighted_lp(2.0, Weight::constant());
  const Ucpu u_base = build_lattice_ucpu(g, 1.0, 1.0, 12.0);
  const Ucpu u_half = build_lattice_ucpu(g, 0.5, 1.0, 12.0);

  AmalgamSpec spec{l2, global_of(p), eta, 12.0};
  const auto base = equivalence_report(family, ids, chi, spec, u_base);
  AmalgamSpec fine = spec;
  fine.outer_refine = 2;
  const auto refined = equivalence_report(family, ids, chi, fine, u_base);
  const auto lattice = equivalence_report(family, ids, chi, spec, u_half);

  const std::string params = "p=" + p_label(p) + ";eta=" + eta_name;
  rows.push_back(
      ReportRow::check("c03", "equivalence_spread", params, base.spread, 10.0 - base.spread, 0.0));
  const double drift_delta = std::abs(refined.spread - base.spread) / base.spread;
  rows.push_back(ReportRow::check("c03", "equivalence_outer_refine_drift", params, drift_delta,
                                  0.05 - drift_delta, 0.0));
  const double drift_lattice = std::abs(lattice.spread - base.spread) / base.spread;
  rows.push_back(ReportRow::check("c03", "equivalence_lattice_refine_drift", params,
                                  drift_lattice, 0.25 - drift_lattice, 0.0));
  return rows;
}

std::vector<ReportRow> equivalence() {
  std::vector<ReportRow> rows;
  const double ps[3] = {1.0, 2.0, kInf};
  const Weight etas[2] = {Weight::constant(), Weight::polynomial(1.0)};
  const char* eta_names[2] = {"const", "poly:1"};
  for (double p : ps)
    for (int w = 0; w < 2; ++w) {
      auto combo = equivalence_combo(p, etas[w], eta_names[w]);
      rows.insert(rows.end(), combo.begin(), combo.end());
    }
  return rows;
}

std::vector<ReportRow> window_independence_check() {
  std::vector<ReportRow> rows;
  const Grid g = Grid::standard();
  const auto family = gauss9_family(g);
  const auto ids = gauss9_ids();
  const SampledField chi1 = gaussian(g, 0.0, 0.0, 1.0);
  const SampledField chi2 = gaussian(g, 0.0, 0.0, 4.0);
  AmalgamSpec spec{LocalSpaceSpec::weighted_lp(2.0, Weight::constant()),
                   GlobalComponent::lp(2.0), Weight::constant(), 12.0};

  const auto base = window_independence(family, ids, chi1, chi2, spec);
  AmalgamSpec fine = spec;
  fine.outer_refine = 2;
  const auto refined = window_independence(family, ids, chi1, chi2, fine);

  rows.push_back(ReportRow::check("c04", "window_independence_spread",
                                  "chi1=gauss(a=1);chi2=gauss(a=4);p=2", base.spread,
                                  10.0 - base.spread, 0.0));
  const double drift = std::abs(refined.spread - base.spread) / base.spread;
  rows.push_back(ReportRow::check("c04", "window_independence_refine_drift",
                                  "chi1=gauss(a=1);chi2=gauss(a=4);p=2", drift, 0.05 - drift,
                                  0.0));
  return rows;
}

std::vector<ReportRow> retraction() {
  std::vector<ReportRow> rows;
  const Grid g = Grid::standard();
  const Ucpu u = build_lattice_ucpu(g, 1.0, 1.0, 12.0);
  const auto family = gauss9_family(g);
  const auto ids = gauss9_ids();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const double err = retraction_error(family[i], u, 6.0);
    rows.push_back(
        ReportRow::check("c05", "retraction_residual", "f=" + ids[i] + ";core=6", err,
                         1e-8 - err, 0.0));
  }
  return rows;
}

std::vector<ReportRow> duality_sweep(std::uint64_t seed, int trials, double p_fixed) {
  std::vector<ReportRow> rows;
  const Grid g = Grid::standard();
  const SampledField chi0 = gaussian(g, 0.0, 0.0, 1.0);
  const LocalSpaceSpec e = LocalSpaceSpec::weighted_lp(2.0, Weight::constant());
  const LocalSpaceSpec e_dual = LocalSpaceSpec::weighted_lp(2.0, Weight::constant());
  const Weight eta = Weight::constant();

  struct Trial {
    double fx0, fxi0, fa, px0, pxi0, pa, p;
  };
  Rng rng(seed);
  std::vector<Trial> params(static_cast<std::size_t>(trials));
  const double p_cycle[3] = {1.0, 2.0, 4.0};
  for (int t = 0; t < trials; ++t) {
    Trial& tr = params[static_cast<std::size_t>(t)];
    tr.fx0 = rng.uniform(-3.0, 3.0);
    tr.fxi0 = rng.uniform(-3.0, 3.0);
    tr.fa = rng.uniform(0.5, 2.0);
    tr.px0 = rng.uniform(-3.0, 3.0);
    tr.pxi0 = rng.uniform(-3.0, 3.0);
    tr.pa = rng.uniform(0.5, 2.0);
    tr.p = p_fixed > 0.0 ? p_fixed : p_cycle[t % 3];
  }
  std::vector<double> slacks(static_cast<std::size_t>(trials), 0.0);
  parallel_for(static_cast<std::size_t>(trials), default_jobs(), [&](std::size_t t) {
    const Trial& tr = params[t];
    const SampledField f = gaussian(g, tr.fx0, tr.fxi0, tr.fa);
    const SampledField phi = gaussian(g, tr.px0, tr.pxi0, tr.pa);
    slacks[t] = duality_bound_check(f, phi, chi0, e, e_dual, tr.p, eta).slack;
  });
  double min_slack = kInf;
  int witness = 0;
  for (int t = 0; t < trials; ++t) {
    if (slacks[static_cast<std::size_t>(t)] < min_slack) {
      min_slack = slacks[static_cast<std::size_t>(t)];
      witness = t;
    }
  }
  std::ostringstream params_echo;
  params_echo << "trials=" << trials << ";seed=" << seed
              << ";p=" << (p_fixed > 0.0 ? format_double(p_fixed) : "{1;2;4}")
              << ";witness=" << witness;
  rows.push_back(ReportRow::check("c06", "duality_pairing_bound_sweep", params_echo.str(),
                                  min_slack, min_slack, 1e-7));

  const SampledField gm = gaussian(g, 0.0, 0.0, 1.0);
  const auto sharp = duality_bound_check(gm, gm, chi0, e, e_dual, 2.0, eta);
  rows.push_back(ReportRow::check("c06", "duality_sharpness_matched_gaussian",
                                  "f=phi=chi0=gauss;p=2", sharp.slack, -std::abs(sharp.slack),
                                  1e-7));
  return rows;
}

std::vector<ReportRow> interpolation_sweep(std::uint64_t seed, int trials) {
  std::vector<ReportRow> rows;
  const Weight eta0 = Weight::constant();
  const Weight eta1 = Weight::polynomial(1.0);
  const double p_choices[6] = {1.0, 4.0 / 3.0, 2.0, 3.0, 4.0, kInf};

  Rng rng(seed);
  double min_slack = kInf;
  for (int t = 0; t < trials; ++t) {
    WeightedSequence c;
    const int support = 1 + static_cast<int>(rng.below(8));
    for (int i = 0; i < support; ++i) {
      c.points.push_back(static_cast<double>(static_cast<int>(rng.below(17)) - 8));
      c.values.push_back(cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    }
    const double p0 = p_choices[rng.below(6)];
    const double p1 = p_choices[rng.below(6)];
    const double theta = rng.uniform(0.1, 0.9);
    min_slack = std::min(min_slack,
                         interpolation_convexity(c, p0, p1, eta0, eta1, theta).log_slack);
  }
  std::ostringstream params;
  params << "trials=" << trials << ";seed=" << seed << ";eta0=const;eta1=poly:1";
  rows.push_back(ReportRow::check("c07", "interpolation_convexity_sweep", params.str(),
                                  min_slack, min_slack, 1e-12));

  // Equality case 1: c = (1, 1), p0 = 1, p1 = inf, theta = 1/2 (p_theta = 2).
  WeightedSequence pair;
  pair.points = {0.0, 1.0};
  pair.values = {cplx{1.0, 0.0}, cplx{1.0, 0.0}};
  const auto eq1 =
      interpolation_convexity(pair, 1.0, kInf, Weight::constant(), Weight::constant(), 0.5);
  rows.push_back(ReportRow::check("c07", "interpolation_equality_pair",
                                  "c=(1;1);p0=1;p1=inf;theta=0.5", eq1.log_slack,
                                  -std::abs(eq1.log_slack), 1e-12));

  // Equality case 2: singleton support is tight for any theta.
  WeightedSequence single;
  single.points = {3.0};
  single.values = {cplx{0.7, -0.2}};
  const auto eq2 = interpolation_convexity(single, 2.0, 3.0, eta0, eta1, 0.25);
  rows.push_back(ReportRow::check("c07", "interpolation_equality_singleton",
                                  "support=1;p0=2;p1=3;theta=0.25", eq2.log_slack,
                                  -std::abs(eq2.log_slack), 1e-12));
  return rows;
}

std::vector<ReportRow> modulation_identity() {
  std::vector<ReportRow> rows;
  const Grid g = Grid::standard();
  const SampledField f = gaussian(g, 0.0, 0.0, 1.0);
  const SampledField phi = gaussian(g, 0.0, 0.0, 1.0);
  for (double p : {1.0, 2.0}) {
    for (double q : {1.0, 2.0}) {
      const auto report = modulation_vs_amalgam(f, phi, p, q, Weight::constant());
      const std::string params = "p=" + p_label(p) + ";q=" + p_label(q) + ";f=phi=gauss";
      rows.push_back(ReportRow::check("c08", "modulation_vs_amalgam_ratio", params,
                                      report.ratio, -std::abs(report.ratio - 1.0), 1e-6));
    }
  }
  return rows;
}

std::vector<ReportRow> tail_radius() {
  std::vector<ReportRow> rows;
  const PointSet pts = PointSet::lattice_1d(1.0, 50.0);
  const GevreySequence seq = GevreySequence::gevrey(1.0);
  for (double eps : {0.1, 0.01}) {
    const auto result = lemma39_tail_radius(pts, seq, 1.0, eps);
    const std::string params = "lattice=Z^1cap[-50,50];h=1;eps=" + format_double(eps);
    rows.push_back(ReportRow::check("c09", "tail_radius_exact", params, result.R_exact,
                                    eps - result.tail_at_R, 0.0));
    rows.push_back(ReportRow::check("c09", "tail_radius_constructive_dominates", params,
                                    result.R_constructive,
                                    result.R_constructive - result.R_exact, 0.0));
  }
  return rows;
}

std::vector<ReportRow> assoc_suite() {
  std::vector<ReportRow> rows;
  const auto rhos = log_spaced(1e-2, 1e3, 100);
  for (double sigma : {1.0, 2.0}) {
    const GevreySequence seq = GevreySequence::gevrey(sigma);
    double max_diff = 0.0;
    for (double rho : rhos)
      max_diff = std::max(max_diff,
                          std::abs(seq.assoc(rho).value - naive_assoc(seq, rho, 10000)));
    rows.push_back(ReportRow::check("c10", "assoc_fn_vs_naive_scan",
                                    "sigma=" + format_double(sigma) + ";points=100;pcap=10000",
                                    max_diff, -max_diff, 1e-12));

    std::vector<std::pair<double, double>> samples;
    const auto grid = log_spaced(1e-2, 1e3, 20);
    for (double r : grid)
      for (double l : grid) samples.emplace_back(r, l);
    const auto ineq = check_assoc_inequalities(seq, samples);
    rows.push_back(ReportRow::check("c10", "assoc_inequality_sum",
                                    "sigma=" + format_double(sigma), ineq.min_slack_sum,
                                    ineq.min_slack_sum, 1e-12));
    rows.push_back(ReportRow::check("c10", "assoc_inequality_double",
                                    "sigma=" + format_double(sigma), ineq.min_slack_double,
                                    ineq.min_slack_double, 1e-12));
  }
  return rows;
}

std::vector<ReportRow> lemma22_decay() {
  std::vector<ReportRow> rows;
  const Grid g = Grid::standard();
  const SampledField f = gaussian(g, 0.0, 0.0, 1.0);
  const GevreySequence seq = GevreySequence::gevrey(1.0);
  const auto report = lemma22_decay_check(f, seq, 0.5, Weight::constant(), 16, 8.0);
  rows.push_back(ReportRow::check("c11", "lemma22_frequency_decay",
                                  "f=gauss;sigma=1;h=0.5;K=16;xi_max=8", report.min_slack,
                                  report.min_slack, 0.0));
  return rows;
}

std::vector<ReportRow> run_all(std::uint64_t seed) {
  std::vector<ReportRow> rows;
  auto append = [&rows](std::vector<ReportRow> more) {
    rows.insert(rows.end(), more.begin(), more.end());
  };
  append(gaussian_closed_forms());
  append(ucpu_partition());
  append(equivalence());
  append(window_independence_check());
  append(retraction());
  append(duality_sweep(seed));
  append(interpolation_sweep(seed));
  append(modulation_identity());
  append(tail_radius());
  append(assoc_suite());
  append(lemma22_decay());
  return rows;
}

std::vector<ReportRow> determinism_check(std::uint64_t seed, int jobs) {
  const int saved = default_jobs();
  set_default_jobs(1);
  const auto serial = run_all(seed);
  set_default_jobs(jobs);
  const auto parallel = run_all(seed);
  set_default_jobs(saved);

  double max_dev = 0.0;
  bool structure_ok = serial.size() == parallel.size();
  bool pass_ok = true;
  if (structure_ok) {
    for (std::size_t i = 0; i < serial.size(); ++i) {
      const ReportRow& a = serial[i];
      const ReportRow& b = parallel[i];
      structure_ok = structure_ok && a.operation == b.operation && a.params == b.params;
      max_dev = std::max(max_dev, std::abs(a.value - b.value));
      const bool a_nan = std::isnan(a.slack);
      const bool b_nan = std::isnan(b.slack);
      if (a_nan != b_nan)
        structure_ok = false;
      else if (!a_nan)
        max_dev = std::max(max_dev, std::abs(a.slack - b.slack));
      pass_ok = pass_ok && a.pass == b.pass;
    }
  }
  std::vector<ReportRow> rows;
  std::ostringstream params;
  params << "seed=" << seed << ";jobs=" << jobs;
  const double slack = (structure_ok && pass_ok) ? 1e-12 - max_dev : -1.0;
  rows.push_back(
      ReportRow::check("c12", "determinism_jobs_invariance", params.str(), max_dev, slack, 0.0));
  return rows;
}

}  // namespace amalgam::verify
