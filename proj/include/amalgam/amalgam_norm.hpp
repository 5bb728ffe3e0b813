// include/amalgam/amalgam_norm.hpp

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

#ifndef AMALGAM_AMALGAM_NORM_HPP
#define AMALGAM_AMALGAM_NORM_HPP

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "amalgam/field.hpp"
#include "amalgam/local_space.hpp"
#include "amalgam/ucpu.hpp"
#include "amalgam/weights.hpp"

namespace amalgam {

// Global component of W(E, .): weighted L^p or the C_{eta,0} variant (same
// sup value as p = infinity plus a tail report).
struct GlobalComponent {
  enum class Kind { Lp, C0 };
  Kind kind = Kind::Lp;
  double p = 2.0;

  static GlobalComponent lp(double p);
  static GlobalComponent c0() { return GlobalComponent{Kind::C0, std::numeric_limits<double>::infinity()}; }
  bool is_sup() const { return kind == Kind::C0 || std::isinf(p); }
  std::string label() const;
};

struct AmalgamSpec {
  LocalSpaceSpec E;
  GlobalComponent global;
  Weight eta = Weight::constant();
  // Outer x region; window tails must stay inside the box, so default to
  // the field grid restricted to |x| <= L - 4.
  double outer_halfwidth = 12.0;
  // Oversampling of the outer quadrature relative to the field grid
  // (refinement studies halve the outer step without touching the field).
  int outer_refine = 1;
};

struct NormReport {
  double value = 0.0;
  bool tail_flag = false;   // outer integrand mass at the x-grid edge > 1e-8 relative
  double tail_ratio = 0.0;
  std::string warning;
};

// (integral over |x| <= outer of ||f T_x chi||_E^p eta(x)^p dx)^{1/p};
// sup for p = infinity / C0.
NormReport continuous_norm(const SampledField& f, const SampledField& chi,
                           const AmalgamSpec& spec);

// Same with the inner norm replaced by sup over a finite window family.
NormReport family_norm(const SampledField& f, std::span<const SampledField> windows,
                       const AmalgamSpec& spec);

// (sum over lambda of ||f psi_lambda||_E^p eta(y_lambda)^p)^{1/p}.
NormReport discrete_norm(const SampledField& f, const Ucpu& u, const LocalSpaceSpec& E,
                         const GlobalComponent& global, const Weight& eta);

struct RatioRow {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

struct RatioTable {
  std::vector<RatioRow> rows;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double spread = 0.0;  // max / min
};

// Continuous vs discrete norm over a family of fields.
RatioTable equivalence_report(std::span<const SampledField> family,
                              std::span<const std::string> ids, const SampledField& chi,
                              const AmalgamSpec& spec, const Ucpu& u);

// Continuous norms with two different windows over a family.
RatioTable window_independence(std::span<const SampledField> family,
                               std::span<const std::string> ids, const SampledField& chi1,
                               const SampledField& chi2, const AmalgamSpec& spec);

// Analysis map: f -> { f T_{y_lambda} psi1 }.
std::vector<SampledField> analysis_map(const SampledField& f, const Ucpu& u,
                                       const SampledField& psi1);

// Synthesis map: { f_lambda } -> sum f_lambda T_{y_lambda} psi2.
SampledField synthesis_map(std::span<const SampledField> pieces, const Ucpu& u,
                           const SampledField& psi2);

// l^p_eta(E) norm of a piece sequence (matches discrete_norm when psi1 is
// the full window).
double pieces_lp_norm(std::span<const SampledField> pieces, const Ucpu& u,
                      const LocalSpaceSpec& E, double p, const Weight& eta);

// || P(I(f)) - f ||_L2 / || f ||_L2 on |x| <= core_halfwidth, with the
// factorized windows psi1 = psi2 = sqrt(psi).
double retraction_error(const SampledField& f, const Ucpu& u, double core_halfwidth);

// The nine-member translated/modulated Gaussian family used by the
// verification harness: x0 in {-2, 0, 2} x xi0 in {-1, 0, 1}.
std::vector<SampledField> gauss9_family(const Grid& g);
std::vector<std::string> gauss9_ids();

}  // namespace amalgam

#endif  // AMALGAM_AMALGAM_NORM_HPP
