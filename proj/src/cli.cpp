// src/cli.cpp

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

#include "amalgam/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "amalgam/amalgam_norm.hpp"
#include "amalgam/config.hpp"
#include "amalgam/duality.hpp"
#include "amalgam/field.hpp"
#include "amalgam/gevrey.hpp"
#include "amalgam/local_space.hpp"
#include "amalgam/report.hpp"
#include "amalgam/ucpu.hpp"
#include "amalgam/util.hpp"
#include "amalgam/verify.hpp"

namespace amalgam::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct CommonOpts {
  std::string out;
  std::string config_path;
  std::uint64_t seed = 7;
  int jobs = 1;
  double L = 16.0;
  double delta = 1.0 / 16.0;
};

double parse_p(const std::string& s) {
  if (s == "inf") return kInf;
  return std::stod(s);
}

std::vector<double> parse_number_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::invalid_argument("empty numeric list: '" + s + "'");
  return out;
}

// Writes rows as CSV to the chosen sink and maps their pass column to an
// exit code.
int emit(const std::vector<ReportRow>& rows, const CommonOpts& opts, std::string* captured) {
  const std::string csv = to_csv(rows);
  if (captured != nullptr) {
    *captured = csv;
  } else if (!opts.out.empty()) {
    std::ofstream file(opts.out);
    if (!file) {
      std::cerr << "cannot open output file: " << opts.out << "\n";
      return 2;
    }
    file << csv;
  } else {
    std::cout << csv;
  }
  return all_pass(rows) ? 0 : 1;
}

int emit_text(const std::string& text, const CommonOpts& opts, std::string* captured) {
  if (captured != nullptr) {
    *captured = text;
  } else if (!opts.out.empty()) {
    std::ofstream file(opts.out);
    if (!file) {
      std::cerr << "cannot open output file: " << opts.out << "\n";
      return 2;
    }
    file << text;
  } else {
    std::cout << text;
  }
  return 0;
}

// Applies `key = value` defaults from --config to flags the user left unset.
void merge_config(const CLI::App& app, const std::string& path,
                  const std::function<void(const ExperimentConfig&)>& apply) {
  if (path.empty()) return;
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot read config file: " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  (void)app;
  apply(ExperimentConfig::parse(buffer.str()));
}

std::string tail_note(const NormReport& report) {
  std::ostringstream os;
  os << "tail_flag=" << (report.tail_flag ? 1 : 0);
  if (!report.warning.empty()) os << ";warning=" << report.warning;
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& argv, std::string* captured) {
  CLI::App app{"amalgam-lab: desk-scale checks for Wiener amalgam norms of "
               "ultradifferentiable windows"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--out", opts.out, "write CSV here instead of stdout");
  app.add_option("--config", opts.config_path, "key = value experiment file with defaults");
  app.add_option("--seed", opts.seed, "seed for randomized sweeps");
  app.add_option("--jobs", opts.jobs, "worker threads (never changes values)");
  auto* opt_L = app.add_option("--L", opts.L, "grid half-width");
  auto* opt_delta = app.add_option("--delta", opts.delta, "grid spacing");

  // --- assoc ---------------------------------------------------------------
  auto* assoc = app.add_subcommand("assoc", "associated function and (M.2)* checks");
  assoc->fallthrough();
  double a_sigma = 1.0, a_rho = 1.0;
  int a_pmax = 100000, a_plo = 1, a_phi = 1000, a_forced = 0;
  bool a_m2star = false;
  auto* assoc_rho = assoc->add_option("--rho", a_rho, "evaluation point");
  assoc->add_option("--sigma", a_sigma, "Gevrey exponent");
  assoc->add_option("--pmax", a_pmax, "scan cap");
  assoc->add_flag("--m2star", a_m2star, "run the (M.2)* search instead");
  assoc->add_option("--p-lo", a_plo, "(M.2)* range start");
  assoc->add_option("--p-hi", a_phi, "(M.2)* range end");
  assoc->add_option("--forced-N", a_forced, "check this N instead of searching");

  // --- weights ---------------------------------------------------------------
  auto* weights = app.add_subcommand("weights", "moderation certificate checks");
  weights->fallthrough();
  std::string w_lit = "const";
  double w_sigma = 1.0, w_C = 0.0, w_tau = 0.0, w_half = 32.0, w_step = 0.5;
  weights->add_option("--weight", w_lit, "weight literal");
  weights->add_option("--sigma", w_sigma, "sequence exponent for A(.)");
  auto* w_c_opt = weights->add_option("--C", w_C, "certificate constant (default: calibrated)");
  auto* w_tau_opt = weights->add_option("--tau", w_tau, "certificate rate (default: calibrated)");
  weights->add_option("--grid-halfwidth", w_half, "sample grid halfwidth");
  weights->add_option("--grid-step", w_step, "sample grid step");

  // --- ucpu ------------------------------------------------------------------
  auto* ucpu = app.add_subcommand("ucpu", "partition-of-unity construction and lemmas");
  ucpu->fallthrough();
  ucpu->require_subcommand(1);
  double u_a = 1.0, u_s = 1.0, u_L = 12.0, u_sigma = 1.0;
  ucpu->add_option("--a", u_a, "lattice step");
  ucpu->add_option("--s", u_s, "Gaussian smoothing width");
  ucpu->add_option("--L-pts", u_L, "lattice truncation radius");
  ucpu->add_option("--sigma", u_sigma, "sequence exponent");

  auto* u_build = ucpu->add_subcommand("build", "build and certify the lattice UCPU");
  u_build->fallthrough();
  double u_tol = 1e-10;
  u_build->add_option("--tol", u_tol, "condition (4) tolerance");

  auto* u_check = ucpu->add_subcommand("check", "condition checks");
  u_check->fallthrough();
  u_check->set_help_flag("--help", "print help");  // frees --h for the rate
  std::string u_cond = "all";
  double u_h = 0.25, u_K = 1.0, u_Uhalf = 0.0;
  int u_order = 8;
  u_check->add_option("--cond", u_cond, "1|2|3|4|all");
  u_check->add_option("--h", u_h, "condition (1) rate");
  u_check->add_option("--K", u_order, "condition (1) derivative cap");
  u_check->add_option("--K-halfwidth", u_K, "condition (2) box halfwidth");
  u_check->add_option("--U-halfwidth", u_Uhalf, "condition (3) halfwidth (default 0.6 a)");

  auto* u_l33 = ucpu->add_subcommand("lemma33", "summability of (1+|y-y'|)^{-n-eps}");
  u_l33->fallthrough();
  double u_eps33 = 1.0;
  u_l33->add_option("--eps", u_eps33, "exponent margin");

  auto* u_l36 = ucpu->add_subcommand("lemma36", "windowed FL1 decay fit");
  u_l36->fallthrough();
  std::string u_chi = "gauss:x0=0,xi0=0,a=1", u_w36 = "const", u_hgrid = "0.0625,0.125,0.25,0.5,1";
  double u_K36 = 0.5;
  u_l36->add_option("--chi", u_chi, "window field literal");
  u_l36->add_option("--weight", u_w36, "FL1 weight literal");
  u_l36->add_option("--K-halfwidth", u_K36, "x-box halfwidth");
  u_l36->add_option("--h-grid", u_hgrid, "comma-separated h grid");

  auto* u_l37 = ucpu->add_subcommand("lemma37", "window-product FL1 decay fit");
  u_l37->fallthrough();
  std::string u_w37 = "const", u_hgrid37 = "0.0625,0.125,0.25,0.5,1";
  u_l37->add_option("--weight", u_w37, "FL1 weight literal");
  u_l37->add_option("--h-grid", u_hgrid37, "comma-separated h grid");

  auto* u_l39 = ucpu->add_subcommand("lemma39", "tail radius");
  u_l39->fallthrough();
  u_l39->set_help_flag("--help", "print help");
  double u_h39 = 1.0, u_eps39 = 0.1;
  u_l39->add_option("--h", u_h39, "decay rate");
  u_l39->add_option("--eps", u_eps39, "tail budget");

  // --- norm ------------------------------------------------------------------
  auto* norm = app.add_subcommand("norm", "amalgam norms");
  norm->fallthrough();
  norm->require_subcommand(1);
  std::string n_f = "gauss:x0=0,xi0=0,a=1", n_E = "lp:p=2,weight=const", n_weight = "const";
  std::string n_p = "2";
  bool n_c0 = false;
  double n_outer = 12.0;
  norm->add_option("--f", n_f, "field literal");
  norm->add_option("--E", n_E, "local space literal");
  norm->add_option("--p", n_p, "outer exponent (or 'inf')");
  norm->add_flag("--c0", n_c0, "use the C_{eta,0} global component");
  norm->add_option("--weight", n_weight, "outer weight literal");
  norm->add_option("--outer", n_outer, "outer halfwidth");

  auto* n_cont = norm->add_subcommand("cont", "continuous norm");
  n_cont->fallthrough();
  std::string n_chi = "gauss:x0=0,xi0=0,a=1";
  n_cont->add_option("--chi", n_chi, "window literal");

  auto* n_disc = norm->add_subcommand("disc", "discrete norm");
  n_disc->fallthrough();
  double n_a = 1.0, n_s = 1.0, n_L = 12.0;
  n_disc->add_option("--a", n_a, "lattice step");
  n_disc->add_option("--s", n_s, "smoothing width");
  n_disc->add_option("--L-pts", n_L, "lattice truncation");

  // --- verify ----------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "verification suites");
  verify_cmd->fallthrough();
  verify_cmd->require_subcommand(1);
  auto* v_eq = verify_cmd->add_subcommand("equivalence", "continuous vs discrete norms");
  v_eq->fallthrough();
  std::string v_family = "gauss9", v_p = "all", v_weight = "all";
  v_eq->add_option("--family", v_family, "field family (gauss9)");
  v_eq->add_option("--p", v_p, "outer exponent (1|2|inf|all)");
  v_eq->add_option("--weight", v_weight, "outer weight (const|poly:1|all)");
  auto* v_win = verify_cmd->add_subcommand("windows", "window independence");
  v_win->fallthrough();
  auto* v_ret = verify_cmd->add_subcommand("retraction", "analysis/synthesis retraction");
  v_ret->fallthrough();
  auto* v_dual = verify_cmd->add_subcommand("duality", "pairing bound sweep");
  v_dual->fallthrough();
  int v_trials_dual = 200;
  std::string v_p_dual = "cycle";
  v_dual->add_option("--trials", v_trials_dual, "number of random pairs");
  v_dual->add_option("--p", v_p_dual, "outer exponent (1|2|4|cycle)");
  auto* v_interp = verify_cmd->add_subcommand("interp", "interpolation convexity sweep");
  v_interp->fallthrough();
  int v_trials_interp = 500;
  v_interp->add_option("--trials", v_trials_interp, "number of random sequences");
  auto* v_mod = verify_cmd->add_subcommand("modamal", "modulation vs amalgam identity");
  v_mod->fallthrough();
  auto* v_all = verify_cmd->add_subcommand("all", "full acceptance suite");
  v_all->fallthrough();
  auto* v_det = verify_cmd->add_subcommand("determinism", "jobs invariance of verify all");
  v_det->fallthrough();
  int v_det_jobs = 8;
  v_det->add_option("--against-jobs", v_det_jobs, "parallel jobs to compare with");

  // --- stft ------------------------------------------------------------------
  auto* stft_cmd = app.add_subcommand("stft", "short-time Fourier transform dump");
  stft_cmd->fallthrough();
  std::string s_f = "gauss:x0=0,xi0=0,a=1", s_phi = "gauss:x0=0,xi0=0,a=1";
  int s_stride = 8;
  stft_cmd->add_option("--f", s_f, "field literal");
  stft_cmd->add_option("--phi", s_phi, "window literal");
  stft_cmd->add_option("--stride", s_stride, "emit every stride-th grid point");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    if (captured == nullptr) std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    merge_config(app, opts.config_path, [&](const ExperimentConfig& cfg) {
      if (cfg.has("seed")) opts.seed = static_cast<std::uint64_t>(cfg.integer("seed"));
      if (cfg.has("jobs")) opts.jobs = static_cast<int>(cfg.integer("jobs"));
      if (opt_L->count() == 0 && cfg.has("L")) opts.L = cfg.number("L");
      if (opt_delta->count() == 0 && cfg.has("delta")) opts.delta = cfg.number("delta");
      if (assoc_rho->count() == 0 && cfg.has("rho")) a_rho = cfg.number("rho");
      if (cfg.has("sigma")) {
        if (assoc->count("--sigma") == 0) a_sigma = cfg.number("sigma");
        if (weights->count("--sigma") == 0) w_sigma = cfg.number("sigma");
        if (ucpu->count("--sigma") == 0) u_sigma = cfg.number("sigma");
      }
      if (cfg.has("f")) n_f = s_f = cfg.raw("f");
      if (cfg.has("chi")) n_chi = u_chi = cfg.raw("chi");
      if (cfg.has("phi")) s_phi = cfg.raw("phi");
      if (cfg.has("E")) n_E = cfg.raw("E");
      if (cfg.has("weight")) n_weight = cfg.raw("weight");
      if (cfg.has("p")) n_p = cfg.raw("p");
      if (cfg.has("a")) u_a = n_a = cfg.number("a");
      if (cfg.has("s")) u_s = n_s = cfg.number("s");
      if (cfg.has("L_pts")) u_L = n_L = cfg.number("L_pts");
      if (cfg.has("h")) u_h = u_h39 = cfg.number("h");
      if (cfg.has("eps")) u_eps33 = u_eps39 = cfg.number("eps");
      if (cfg.has("trials")) v_trials_dual = v_trials_interp = static_cast<int>(cfg.integer("trials"));
      if (cfg.has("out") && opts.out.empty()) opts.out = cfg.raw("out");
    });

    set_default_jobs(opts.jobs);
    const Grid grid(opts.L, opts.delta);
    std::vector<ReportRow> rows;

    if (*assoc) {
      const GevreySequence seq = GevreySequence::gevrey(a_sigma, a_pmax);
      if (a_m2star) {
        const auto rep = check_m2star(seq, a_plo, a_phi, a_forced);
        std::ostringstream ps;
        ps << "sigma=" << format_double(a_sigma) << ";p=[" << a_plo << ";" << a_phi << "]"
           << ";N=" << rep.N;
        rows.push_back(ReportRow::check("assoc", "m2star", ps.str(),
                                        static_cast<double>(rep.N), rep.ok ? rep.min_slack : -1.0,
                                        0.0));
      } else {
        const auto v = seq.assoc(a_rho);
        std::ostringstream ps;
        ps << "sigma=" << format_double(a_sigma) << ";rho=" << format_double(a_rho)
           << ";argmax_p=" << v.argmax_p;
        rows.push_back(ReportRow::info("assoc", "assoc_fn", ps.str(), v.value));
      }
      return emit(rows, opts, captured);
    }

    if (*weights) {
      const GevreySequence seq = GevreySequence::gevrey(w_sigma);
      Weight w = parse_weight(w_lit);
      if (w_c_opt->count() == 0 || w_tau_opt->count() == 0) {
        w = w.with_default_certificate(seq);
        if (w_c_opt->count()) w = w.with_certificate({w_C, w.certificate().tau});
        if (w_tau_opt->count()) w = w.with_certificate({w.certificate().C, w_tau});
      } else {
        w = w.with_certificate({w_C, w_tau});
      }
      const auto grid_pairs = pair_grid(-w_half, w_half, w_step);
      const auto rep = check_moderate(w, seq, w.certificate().C, w.certificate().tau, grid_pairs);
      std::ostringstream ps;
      ps << "weight=" << w.label() << ";sigma=" << format_double(w_sigma)
         << ";C=" << format_double(w.certificate().C)
         << ";tau=" << format_double(w.certificate().tau) << ";witness=("
         << format_double(rep.witness.first) << ";" << format_double(rep.witness.second) << ")";
      rows.push_back(ReportRow::check("weights", "moderation", ps.str(), rep.min_slack,
                                      rep.min_slack, 0.0));
      return emit(rows, opts, captured);
    }

    if (*ucpu) {
      const GevreySequence seq = GevreySequence::gevrey(u_sigma);
      std::ostringstream base;
      base << "a=" << format_double(u_a) << ";s=" << format_double(u_s)
           << ";L_pts=" << format_double(u_L);
      if (*u_build || *u_check) {
        const Ucpu u = build_lattice_ucpu(grid, u_a, u_s, u_L, u_tol);
        const bool all = u_cond == "all";
        if (*u_build || all || u_cond == "4") {
          rows.push_back(ReportRow::check("ucpu", "condition4", base.str(),
                                          u.condition4().deviation,
                                          u_tol - u.condition4().deviation, 0.0));
        }
        if (*u_build || all || u_cond == "2") {
          const double kh = u_K > 0.0 ? u_K : 0.5;
          rows.push_back(ReportRow::info("ucpu", "condition2",
                                         base.str() + ";K=" + format_double(kh),
                                         check_condition2(u.points(), kh)));
        }
        if (*u_build || all || u_cond == "3") {
          const double uh = u_Uhalf > 0.0 ? u_Uhalf : 0.6 * u_a;
          const double core = std::max(0.0, u_L - 6.0 * std::max(u_a, u_s));
          const auto rep = check_condition3(u.points(), uh, -core, core);
          rows.push_back(ReportRow::check("ucpu", "condition3",
                                          base.str() + ";U=" + format_double(uh),
                                          rep.covered ? 1.0 : 0.0, rep.covered ? 0.0 : -1.0,
                                          0.0));
        }
        if (*u_check && (all || u_cond == "1")) {
          const auto rep = check_condition1(u, seq, u_h, u_order);
          std::ostringstream ps;
          ps << base.str() << ";h=" << format_double(u_h) << ";K=" << u_order
             << ";argmax_order=" << rep.argmax_order;
          rows.push_back(ReportRow::check("ucpu", "condition1", ps.str(), rep.sup,
                                          1e-9 - rep.recenter_dev, 0.0));
        }
        return emit(rows, opts, captured);
      }
      if (*u_l33) {
        const PointSet pts = PointSet::lattice_1d(u_a, u_L);
        rows.push_back(ReportRow::info("ucpu", "lemma33",
                                       base.str() + ";eps=" + format_double(u_eps33),
                                       lemma33_sum(pts, u_eps33)));
        return emit(rows, opts, captured);
      }
      if (*u_l36 || *u_l37) {
        const Ucpu u = build_lattice_ucpu(grid, u_a, u_s, u_L);
        const auto hg = parse_number_list(*u_l36 ? u_hgrid : u_hgrid37);
        const Weight w = parse_weight(*u_l36 ? u_w36 : u_w37);
        const DecayFit fit = *u_l36
                                 ? lemma36_decay_fit(u, parse_field(u_chi, grid), w, u_K36, seq, hg)
                                 : lemma37_product_decay(u, w, seq, hg);
        std::ostringstream ps;
        ps << base.str() << ";h=" << format_double(fit.h) << ";C=" << format_double(fit.C)
           << ";max_offset=" << format_double(fit.max_offset);
        rows.push_back(ReportRow::check("ucpu", *u_l36 ? "lemma36" : "lemma37", ps.str(),
                                        fit.C, fit.found ? fit.min_slack : -1.0, 1e-12));
        return emit(rows, opts, captured);
      }
      if (*u_l39) {
        const PointSet pts = PointSet::lattice_1d(u_a, u_L);
        const auto rep = lemma39_tail_radius(pts, seq, u_h39, u_eps39);
        std::ostringstream ps;
        ps << base.str() << ";h=" << format_double(u_h39) << ";eps=" << format_double(u_eps39)
           << ";R_constructive=" << format_double(rep.R_constructive);
        rows.push_back(ReportRow::check("ucpu", "lemma39", ps.str(), rep.R_exact,
                                        u_eps39 - rep.tail_at_R, 0.0));
        return emit(rows, opts, captured);
      }
    }

    if (*norm) {
      const SampledField f = parse_field(n_f, grid);
      const LocalSpaceSpec E = parse_local_space(n_E);
      const Weight eta = parse_weight(n_weight);
      const GlobalComponent global =
          n_c0 ? GlobalComponent::c0() : GlobalComponent::lp(parse_p(n_p));
      if (*n_cont) {
        AmalgamSpec spec{E, global, eta, n_outer};
        const auto rep = continuous_norm(f, parse_field(n_chi, grid), spec);
        rows.push_back(ReportRow::info("norm", "continuous",
                                       "f=" + n_f + ";chi=" + n_chi + ";E=" + E.label() + ";" +
                                           global.label() + ";" + tail_note(rep),
                                       rep.value));
      } else {
        const Ucpu u = build_lattice_ucpu(grid, n_a, n_s, n_L);
        const auto rep = discrete_norm(f, u, E, global, eta);
        rows.push_back(ReportRow::info("norm", "discrete",
                                       "f=" + n_f + ";E=" + E.label() + ";" + global.label() +
                                           ";a=" + format_double(n_a) + ";" + tail_note(rep),
                                       rep.value));
      }
      return emit(rows, opts, captured);
    }

    if (*verify_cmd) {
      if (*v_eq) {
        if (v_family != "gauss9")
          throw std::invalid_argument("unknown field family: " + v_family);
        if (v_p == "all" && v_weight == "all") {
          rows = verify::equivalence();
        } else {
          std::vector<double> ps = v_p == "all" ? std::vector<double>{1.0, 2.0, kInf}
                                                : std::vector<double>{parse_p(v_p)};
          std::vector<std::pair<Weight, std::string>> ws;
          if (v_weight == "all" || v_weight == "const") ws.emplace_back(Weight::constant(), "const");
          if (v_weight == "all" || v_weight == "poly:1")
            ws.emplace_back(Weight::polynomial(1.0), "poly:1");
          if (ws.empty()) throw std::invalid_argument("unknown weight filter: " + v_weight);
          for (double p : ps)
            for (const auto& [w, name] : ws) {
              auto combo = verify::equivalence_combo(p, w, name);
              rows.insert(rows.end(), combo.begin(), combo.end());
            }
        }
      } else if (*v_win) {
        rows = verify::window_independence_check();
      } else if (*v_ret) {
        rows = verify::retraction();
      } else if (*v_dual) {
        const double p_fixed = v_p_dual == "cycle" ? 0.0 : parse_p(v_p_dual);
        rows = verify::duality_sweep(opts.seed, v_trials_dual, p_fixed);
      } else if (*v_interp) {
        rows = verify::interpolation_sweep(opts.seed, v_trials_interp);
      } else if (*v_mod) {
        rows = verify::modulation_identity();
      } else if (*v_all) {
        rows = verify::run_all(opts.seed);
      } else if (*v_det) {
        rows = verify::determinism_check(opts.seed, v_det_jobs);
      }
      return emit(rows, opts, captured);
    }

    if (*stft_cmd) {
      const SampledField f = parse_field(s_f, grid);
      const SampledField phi = parse_field(s_phi, grid);
      const StftField v = stft(f, phi);
      std::ostringstream os;
      os << "x,xi,re,im,abs\n";
      for (int ix = 0; ix < v.grid_x().size(); ix += s_stride) {
        for (int ik = 0; ik < v.grid_xi().size(); ik += s_stride) {
          const cplx z = v.at(ix, ik);
          os << format_double(v.grid_x().x(ix)) << ',' << format_double(v.grid_xi().x(ik)) << ','
             << format_double(z.real()) << ',' << format_double(z.imag()) << ','
             << format_double(std::abs(z)) << '\n';
        }
      }
      return emit_text(os.str(), opts, captured);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace amalgam::cli
