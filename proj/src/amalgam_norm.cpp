// src/amalgam_norm.cpp

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

#include "amalgam/amalgam_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace amalgam {

namespace {

bool is_zero_field(const SampledField& f) {
  for (const cplx& v : f.values())
    if (v != cplx{0.0, 0.0}) return false;
  return true;
}

std::vector<double> outer_points(const Grid& g, double halfwidth, int refine) {
  if (refine < 1) throw std::invalid_argument("outer refinement must be >= 1");
  const double step = g.delta() / refine;
  const long long count = std::llround(2.0 * halfwidth / step);
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count) + 1);
  for (long long i = 0; i <= count; ++i) xs.push_back(-halfwidth + static_cast<double>(i) * step);
  return xs;
}

// Reduce the outer profile values[i] (already eta-weighted) to the global
// component norm; integrand tails at the edge of the outer region flag the
// report.
NormReport reduce_outer(const std::vector<double>& profile, double delta,
                        const GlobalComponent& global) {
  NormReport report;
  if (profile.empty()) return report;
  if (global.is_sup()) {
    double sup = 0.0;
    for (double v : profile) sup = std::max(sup, v);
    report.value = sup;
    const double edge = std::max(profile.front(), profile.back());
    report.tail_ratio = sup > 0.0 ? edge / sup : 0.0;
    report.tail_flag = sup > 0.0 && report.tail_ratio > 1e-8;
    return report;
  }
  const double p = global.p;
  std::vector<double> terms(profile.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    terms[i] = p == 1.0 ? profile[i] : (p == 2.0 ? profile[i] * profile[i] : std::pow(profile[i], p));
    peak = std::max(peak, terms[i]);
  }
  const double sum = pairwise_sum(std::span<const double>(terms)) * delta;
  report.value = p == 1.0 ? sum : (p == 2.0 ? std::sqrt(sum) : std::pow(sum, 1.0 / p));
  const double edge = std::max(terms.front(), terms.back());
  report.tail_ratio = peak > 0.0 ? edge / peak : 0.0;
  report.tail_flag = peak > 0.0 && report.tail_ratio > 1e-8;
  return report;
}

NormReport outer_norm(const SampledField& f, std::span<const SampledField> windows,
                      const AmalgamSpec& spec) {
  const Grid& g = f.grid();
  const auto xs = outer_points(g, spec.outer_halfwidth, spec.outer_refine);
  std::vector<double> profile(xs.size(), 0.0);
  parallel_for(xs.size(), default_jobs(), [&](std::size_t i) {
    const double x = xs[i];
    double inner = 0.0;
    for (const SampledField& chi : windows)
      inner = std::max(inner, local_norm(multiply(f, translate(chi, x)), spec.E));
    profile[i] = inner * spec.eta.eval(x);
  });
  return reduce_outer(profile, g.delta() / spec.outer_refine, spec.global);
}

}  // namespace

GlobalComponent GlobalComponent::lp(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  return GlobalComponent{Kind::Lp, p};
}

std::string GlobalComponent::label() const {
  if (kind == Kind::C0) return "c0";
  if (std::isinf(p)) return "p=inf";
  std::ostringstream os;
  os << "p=" << p;
  return os.str();
}

NormReport continuous_norm(const SampledField& f, const SampledField& chi,
                           const AmalgamSpec& spec) {
  if (is_zero_field(chi)) throw std::invalid_argument("window chi must not be identically zero");
  const SampledField* w = &chi;
  return outer_norm(f, std::span<const SampledField>(w, 1), spec);
}

NormReport family_norm(const SampledField& f, std::span<const SampledField> windows,
                       const AmalgamSpec& spec) {
  if (windows.empty()) throw std::invalid_argument("window family must not be empty");
  bool any = false;
  for (const SampledField& w : windows) any = any || !is_zero_field(w);
  if (!any) throw std::invalid_argument("window family must contain a nonzero element");
  return outer_norm(f, windows, spec);
}

NormReport discrete_norm(const SampledField& f, const Ucpu& u, const LocalSpaceSpec& E,
                         const GlobalComponent& global, const Weight& eta) {
  if (!(f.grid() == u.window().grid()))
    throw std::invalid_argument("field and UCPU window live on different grids");
  NormReport report;
  if (!u.certified()) report.warning = "ucpu certificate incomplete (condition 4 or 3)";

  const int count = u.points().size();
  std::vector<double> terms(static_cast<std::size_t>(count), 0.0);
  parallel_for(static_cast<std::size_t>(count), default_jobs(), [&](std::size_t l) {
    const double y = u.points().at(static_cast<int>(l));
    terms[l] = local_norm(multiply(f, u.translated_window(static_cast<int>(l))), E) * eta.eval(y);
  });

  if (global.is_sup()) {
    double sup = 0.0;
    for (double t : terms) sup = std::max(sup, t);
    report.value = sup;
    // c0 tail: largest contribution among lattice points in the boundary band.
    double band = 0.0;
    for (int l = 0; l < count; ++l)
      if (std::abs(u.points().at(l)) > u.truncation() - 6.0 * u.step())
        band = std::max(band, terms[static_cast<std::size_t>(l)]);
    report.tail_ratio = sup > 0.0 ? band / sup : 0.0;
    report.tail_flag = global.kind == GlobalComponent::Kind::C0 && sup > 0.0 &&
                       report.tail_ratio > 1e-8;
    return report;
  }
  const double p = global.p;
  for (double& t : terms) t = p == 1.0 ? t : (p == 2.0 ? t * t : std::pow(t, p));
  const double sum = pairwise_sum(std::span<const double>(terms));
  report.value = p == 1.0 ? sum : (p == 2.0 ? std::sqrt(sum) : std::pow(sum, 1.0 / p));
  return report;
}

RatioTable equivalence_report(std::span<const SampledField> family,
                              std::span<const std::string> ids, const SampledField& chi,
                              const AmalgamSpec& spec, const Ucpu& u) {
  if (family.empty()) throw std::invalid_argument("equivalence report needs a nonempty family");
  RatioTable table;
  table.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < family.size(); ++i) {
    RatioRow row;
    row.id = i < ids.size() ? ids[i] : std::to_string(i);
    row.lhs = continuous_norm(family[i], chi, spec).value;
    row.rhs = discrete_norm(family[i], u, spec.E, spec.global, spec.eta).value;
    row.ratio = row.lhs / row.rhs;
    table.min_ratio = std::min(table.min_ratio, row.ratio);
    table.max_ratio = std::max(table.max_ratio, row.ratio);
    table.rows.push_back(row);
  }
  table.spread = table.max_ratio / table.min_ratio;
  return table;
}

RatioTable window_independence(std::span<const SampledField> family,
                               std::span<const std::string> ids, const SampledField& chi1,
                               const SampledField& chi2, const AmalgamSpec& spec) {
  if (is_zero_field(chi1) || is_zero_field(chi2))
    throw std::invalid_argument("window independence needs nonzero windows");
  RatioTable table;
  table.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < family.size(); ++i) {
    RatioRow row;
    row.id = i < ids.size() ? ids[i] : std::to_string(i);
    row.lhs = continuous_norm(family[i], chi1, spec).value;
    row.rhs = continuous_norm(family[i], chi2, spec).value;
    row.ratio = row.lhs / row.rhs;
    table.min_ratio = std::min(table.min_ratio, row.ratio);
    table.max_ratio = std::max(table.max_ratio, row.ratio);
    table.rows.push_back(row);
  }
  table.spread = table.max_ratio / table.min_ratio;
  return table;
}

std::vector<SampledField> analysis_map(const SampledField& f, const Ucpu& u,
                                       const SampledField& psi1) {
  std::vector<SampledField> pieces;
  pieces.reserve(static_cast<std::size_t>(u.points().size()));
  for (int l = 0; l < u.points().size(); ++l)
    pieces.push_back(multiply(f, translate(psi1, u.points().at(l))));
  return pieces;
}

SampledField synthesis_map(std::span<const SampledField> pieces, const Ucpu& u,
                           const SampledField& psi2) {
  if (pieces.size() != static_cast<std::size_t>(u.points().size()))
    throw std::invalid_argument("piece count does not match the point set");
  if (pieces.empty()) throw std::invalid_argument("synthesis needs at least one piece");
  const Grid& g = pieces[0].grid();
  std::vector<cplx> acc(static_cast<std::size_t>(g.size()), cplx{0.0, 0.0});
  for (int l = 0; l < u.points().size(); ++l) {
    if (!(pieces[static_cast<std::size_t>(l)].grid() == g))
      throw std::invalid_argument("grid mismatch among synthesis pieces");
    const SampledField term =
        multiply(pieces[static_cast<std::size_t>(l)], translate(psi2, u.points().at(l)));
    for (int j = 0; j < g.size(); ++j) acc[static_cast<std::size_t>(j)] += term.value(j);
  }
  return SampledField::from_values(g, std::move(acc));
}

double pieces_lp_norm(std::span<const SampledField> pieces, const Ucpu& u,
                      const LocalSpaceSpec& E, double p, const Weight& eta) {
  std::vector<double> terms(pieces.size());
  for (std::size_t l = 0; l < pieces.size(); ++l)
    terms[l] = local_norm(pieces[l], E) * eta.eval(u.points().at(static_cast<int>(l)));
  if (std::isinf(p)) return *std::max_element(terms.begin(), terms.end());
  for (double& t : terms) t = p == 2.0 ? t * t : std::pow(t, p);
  const double sum = pairwise_sum(std::span<const double>(terms));
  return p == 2.0 ? std::sqrt(sum) : std::pow(sum, 1.0 / p);
}

double retraction_error(const SampledField& f, const Ucpu& u, double core_halfwidth) {
  // psi1 = psi2 = sqrt(psi); analysis/synthesis translate the centered
  // window per lattice point.
  const SampledField psi1 = u.sqrt_window();
  const auto pieces = analysis_map(f, u, psi1);
  const SampledField rebuilt = synthesis_map(pieces, u, psi1);
  const Weight one = Weight::constant();
  std::vector<cplx> diff(f.values().begin(), f.values().end());
  for (int j = 0; j < f.grid().size(); ++j) diff[static_cast<std::size_t>(j)] -= rebuilt.value(j);
  const SampledField residual = SampledField::from_values(f.grid(), std::move(diff));
  const double denom = lp_norm_restricted(f, 2.0, one, core_halfwidth);
  if (denom == 0.0) throw std::invalid_argument("retraction error needs a nonzero field");
  return lp_norm_restricted(residual, 2.0, one, core_halfwidth) / denom;
}

std::vector<SampledField> gauss9_family(const Grid& g) {
  std::vector<SampledField> family;
  family.reserve(9);
  for (double x0 : {-2.0, 0.0, 2.0})
    for (double xi0 : {-1.0, 0.0, 1.0}) family.push_back(gaussian(g, x0, xi0, 1.0));
  return family;
}

std::vector<std::string> gauss9_ids() {
  std::vector<std::string> ids;
  ids.reserve(9);
  for (const char* x0 : {"-2", "0", "2"})
    for (const char* xi0 : {"-1", "0", "1"})
      ids.push_back(std::string("gauss_x0=") + x0 + "_xi0=" + xi0);
  return ids;
}

}  // namespace amalgam
