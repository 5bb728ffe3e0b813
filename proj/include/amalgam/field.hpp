// include/amalgam/field.hpp

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

#ifndef AMALGAM_FIELD_HPP
#define AMALGAM_FIELD_HPP

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "amalgam/gevrey.hpp"
#include "amalgam/util.hpp"
#include "amalgam/weights.hpp"

namespace amalgam {

// Uniform 1-d grid on [-L, L) with spacing delta; the point count 2L/delta
// must be a power of two.  Transforms map a grid to its reciprocal grid
// [-1/(2 delta), 1/(2 delta)) with the same point count.
class Grid {
 public:
  Grid(double L, double delta);
  static Grid standard() { return Grid(16.0, 1.0 / 16.0); }

  int size() const { return n_; }
  double half_width() const { return L_; }
  double delta() const { return delta_; }
  double x(int j) const { return (j - n_ / 2) * delta_; }
  std::vector<double> points() const;
  Grid reciprocal() const;
  Grid refined() const { return Grid(L_, delta_ / 2.0); }

  bool operator==(const Grid& o) const { return L_ == o.L_ && delta_ == o.delta_; }

 private:
  double L_;
  double delta_;
  int n_;
};

// Closed forms.  The Gaussian atom is
//   c * exp(2 pi i xi0 (t - x0)) * exp(-pi a (t - x0)^2),
// closed under translation, modulation, conjugation, products, and the
// Fourier transform.  HatGaussForm is hat_a * g_s (the triangular bump of
// half-width a convolved with the unit-mass Gaussian of width s), evaluated
// through erf; its lattice translates sum to 1 identically.
struct GaussAtom {
  cplx coeff{1.0, 0.0};
  double x0 = 0.0;
  double xi0 = 0.0;
  double a = 1.0;
};
using AtomSum = std::vector<GaussAtom>;

struct HatGaussForm {
  double a = 1.0;
  double s = 1.0;
  double center = 0.0;
};

// Pointwise positive square root of HatGaussForm; evaluation and translation
// only (no derivative calculus).
struct HatGaussSqrtForm {
  double a = 1.0;
  double s = 1.0;
  double center = 0.0;
};

using ClosedForm = std::variant<std::monostate, AtomSum, HatGaussForm, HatGaussSqrtForm>;

cplx form_value(const ClosedForm& form, double t);
bool form_present(const ClosedForm& form);

// Complex function sampled on a grid, with an optional closed form backing
// exact off-grid evaluation and analytic derivatives.
class SampledField {
 public:
  static SampledField zero(const Grid& g);
  static SampledField from_values(const Grid& g, std::vector<cplx> values,
                                  ClosedForm form = std::monostate{});
  static SampledField sample(const Grid& g, ClosedForm form);

  const Grid& grid() const { return grid_; }
  std::span<const cplx> values() const { return values_; }
  cplx value(int j) const { return values_[static_cast<std::size_t>(j)]; }
  const ClosedForm& form() const { return form_; }
  bool has_form() const { return form_present(form_); }
  bool has_atoms() const { return std::holds_alternative<AtomSum>(form_); }
  cplx form_value_at(double t) const { return form_value(form_, t); }

  // Largest relative deviation between stored samples and the closed form.
  double form_consistency() const;

 private:
  SampledField(Grid g, std::vector<cplx> v, ClosedForm f);

  Grid grid_;
  std::vector<cplx> values_;
  ClosedForm form_;
};

// g(t) = e^{2 pi i xi0 t} e^{-pi a (t-x0)^2} as a single-atom field.
SampledField gaussian(const Grid& g, double x0, double xi0, double a);

// psi = hat_a * g_s; strictly positive, integral a, lattice partition window.
SampledField hat_gauss_window(const Grid& g, double a, double s);

SampledField translate(const SampledField& f, double x);
SampledField modulate(const SampledField& f, double xi);
SampledField conj_field(const SampledField& f);
SampledField scale(const SampledField& f, cplx c);
SampledField add(const SampledField& f, const SampledField& g);
SampledField multiply(const SampledField& f, const SampledField& g);

// Discrete approximations of the continuous transforms in the e^{-2 pi i x xi}
// convention; fourier_inv(fourier(f)) recovers f to 1e-12.  Atom-backed
// fields keep an exactly transformed closed form.
SampledField fourier(const SampledField& f);
SampledField fourier_inv(const SampledField& f);

// f * g by FFT with the continuous-calibration scaling.
SampledField convolve(const SampledField& f, const SampledField& g);

// Values of the k-th derivative at grid points, from the closed form
// (Hermite-type recursions for atoms, erf/Gaussian stencils for the hat
// window).  Finite differences are never used.
std::vector<cplx> derivative_values(const SampledField& f, int k);

// Exact L^1 mass when the form is a single Gaussian atom: |c| a^{-1/2}.
std::optional<double> exact_l1_mass(const ClosedForm& form);

// (sum |eta f|^p delta)^{1/p}; p = infinity gives the grid max of |eta f|.
double lp_norm(const SampledField& f, double p, const Weight& eta);
// Same restricted to |x| <= xmax.
double lp_norm_restricted(const SampledField& f, double p, const Weight& eta, double xmax);

// max |eta f| at the two box edges relative to the overall grid max.
double boundary_tail_ratio(const SampledField& f, const Weight& eta);

// || F^{-1} f ||_{L^q_nu}; q = 1 is the Fourier-Lebesgue norm used by the
// multiplier bounds.
double fourier_lq_norm(const SampledField& f, double q, const Weight& nu);
double fl1_norm(const SampledField& f, const Weight& nu);

struct Lemma22Report {
  double seminorm = 0.0;       // max_{k<=K} h^k ||f^(k)||_L1 / M_k
  int K = 0;                   // truncation order (reported, not hidden)
  double min_slack = 0.0;      // min over the freq grid, log domain
  double witness_xi = 0.0;
  double weighted_bound_mass = 0.0;  // integral of eta(xi) e^{-M(h|xi|)}
  bool exact_transform = false;      // F^{-1} taken from the closed form
};

// Checks |F^{-1} f(xi)| <= seminorm * e^{-M(h |xi|)} on the frequency grid
// restricted to |xi| <= xi_max.
Lemma22Report lemma22_decay_check(const SampledField& f, const GevreySequence& seq, double h,
                                  const Weight& eta, int K = 16, double xi_max = 8.0);

}  // namespace amalgam

#endif  // AMALGAM_FIELD_HPP
