// src/field.cpp

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

#include "amalgam/field.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace amalgam {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kTwoPi = 2.0 * kPi;

cplx cis(double phase) { return {std::cos(phase), std::sin(phase)}; }

cplx atom_value(const GaussAtom& at, double t) {
  const double u = t - at.x0;
  return at.coeff * cis(kTwoPi * at.xi0 * u) * std::exp(-kPi * at.a * u * u);
}

// --- hat * gaussian window pieces ------------------------------------------
//
// g_s(x) = s^{-1} e^{-pi x^2 / s^2} has unit mass; Phi_s is its primitive and
// G2_s the primitive of Phi_s.  With u = x - center,
//   psi(x)    = a^{-1} [G2(u+a) - 2 G2(u) + G2(u-a)],
//   psi'(x)   = a^{-1} [Phi(u+a) - 2 Phi(u) + Phi(u-a)],
//   psi^(k)   = a^{-1} [g^(k-2)(u+a) - 2 g^(k-2)(u) + g^(k-2)(u-a)],  k >= 2,
// which is the second-difference form of hat_a'' = (d_{-a} - 2 d_0 + d_a)/a.

double gauss_mass1(double s, double x) { return std::exp(-kPi * x * x / (s * s)) / s; }

double gauss_cdf(double s, double x) {
  return 0.5 * (1.0 + std::erf(std::sqrt(kPi) * x / s));
}

double gauss_cdf2(double s, double x) {
  return x * gauss_cdf(s, x) + s * s / kTwoPi * gauss_mass1(s, x);
}

double hat_stencil(double a, double x, double (*fn)(double, double), double s) {
  return (fn(s, x + a) - 2.0 * fn(s, x) + fn(s, x - a)) / a;
}

// Derivatives of g_s as polynomial * g_s, via q_{m+1} = q_m' - (2 pi x / s^2) q_m.
std::vector<double> gauss_deriv_poly(double s, int m) {
  std::vector<double> q{1.0};
  const double c = kTwoPi / (s * s);
  for (int step = 0; step < m; ++step) {
    std::vector<double> next(q.size() + 1, 0.0);
    for (std::size_t d = 0; d + 1 < q.size(); ++d)
      next[d] += static_cast<double>(d + 1) * q[d + 1];  // q'
    for (std::size_t d = 0; d < q.size(); ++d) next[d + 1] -= c * q[d];  // -c x q
    q = std::move(next);
  }
  return q;
}

double poly_eval(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

cplx cpoly_eval(std::span<const cplx> coeffs, double x) {
  cplx acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

// Derivatives of an atom as P_k(u) * atom with
// P_{k+1} = P_k' + (2 pi i xi0 - 2 pi a u) P_k.
std::vector<cplx> atom_deriv_poly(const GaussAtom& at, int k) {
  std::vector<cplx> p{cplx{1.0, 0.0}};
  const cplx lin0{0.0, kTwoPi * at.xi0};
  const double lin1 = -kTwoPi * at.a;
  for (int step = 0; step < k; ++step) {
    std::vector<cplx> next(p.size() + 1, cplx{0.0, 0.0});
    for (std::size_t d = 0; d + 1 < p.size(); ++d) next[d] += static_cast<double>(d + 1) * p[d + 1];
    for (std::size_t d = 0; d < p.size(); ++d) {
      next[d] += lin0 * p[d];
      next[d + 1] += lin1 * p[d];
    }
    p = std::move(next);
  }
  return p;
}

// --- FFT --------------------------------------------------------------------

class FftPlans {
 public:
  static FftPlans& instance() {
    static FftPlans plans;
    return plans;
  }

  void execute(std::vector<cplx>& data, bool forward) {
    fftw_plan plan = nullptr;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto key = std::make_pair(data.size(), forward);
      auto it = cache_.find(key);
      if (it == cache_.end()) {
        std::vector<cplx> scratch(data.size());
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()),
                                reinterpret_cast<fftw_complex*>(scratch.data()),
                                reinterpret_cast<fftw_complex*>(scratch.data()),
                                forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
        cache_.emplace(key, plan);
      } else {
        plan = it->second;
      }
    }
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
  }

 private:
  FftPlans() = default;
  std::mutex mu_;
  std::map<std::pair<std::size_t, bool>, fftw_plan> cache_;
};

AtomSum atom_fourier(const AtomSum& atoms, bool inverse) {
  AtomSum out;
  out.reserve(atoms.size());
  for (const GaussAtom& at : atoms) {
    GaussAtom t;
    t.a = 1.0 / at.a;
    t.x0 = at.xi0;
    t.xi0 = -at.x0;
    t.coeff = at.coeff / std::sqrt(at.a) * cis(-kTwoPi * at.x0 * at.xi0);
    if (inverse) {  // F^{-1} h (xi) = F h (-xi)
      t.x0 = -t.x0;
      t.xi0 = -t.xi0;
    }
    out.push_back(t);
  }
  return out;
}

SampledField spectral_transform(const SampledField& f, bool forward) {
  const Grid& g = f.grid();
  const int n = g.size();
  std::vector<cplx> buf(f.values().begin(), f.values().end());
  for (int j = 1; j < n; j += 2) buf[static_cast<std::size_t>(j)] = -buf[static_cast<std::size_t>(j)];
  FftPlans::instance().execute(buf, forward);
  const double parity = ((n / 2) % 2 == 0) ? 1.0 : -1.0;
  const double amp = g.delta() * parity;
  for (int k = 0; k < n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    buf[static_cast<std::size_t>(k)] *= amp * sign;
  }
  ClosedForm out_form = std::monostate{};
  if (const auto* atoms = std::get_if<AtomSum>(&f.form()))
    out_form = atom_fourier(*atoms, /*inverse=*/!forward);
  return SampledField::from_values(g.reciprocal(), std::move(buf), std::move(out_form));
}

double weight_abs_p(double w, double p) {
  if (p == 1.0) return w;
  if (p == 2.0) return w * w;
  return std::pow(w, p);
}

}  // namespace

// --- Grid -------------------------------------------------------------------

Grid::Grid(double L, double delta) : L_(L), delta_(delta) {
  if (L <= 0.0 || delta <= 0.0) throw std::invalid_argument("grid needs L > 0 and delta > 0");
  const double ratio = 2.0 * L / delta;
  const long long n = std::llround(ratio);
  if (std::abs(ratio - static_cast<double>(n)) > 1e-9)
    throw std::invalid_argument("grid point count 2L/delta is not an integer");
  if (n < 2 || (n & (n - 1)) != 0)
    throw std::invalid_argument("grid point count must be a power of two");
  n_ = static_cast<int>(n);
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) xs[static_cast<std::size_t>(j)] = x(j);
  return xs;
}

Grid Grid::reciprocal() const { return Grid(0.5 / delta_, 1.0 / (n_ * delta_)); }

// --- closed forms -----------------------------------------------------------

cplx form_value(const ClosedForm& form, double t) {
  if (const auto* atoms = std::get_if<AtomSum>(&form)) {
    cplx acc = 0.0;
    for (const GaussAtom& at : *atoms) acc += atom_value(at, t);
    return acc;
  }
  if (const auto* hg = std::get_if<HatGaussForm>(&form))
    return {hat_stencil(hg->a, t - hg->center, gauss_cdf2, hg->s), 0.0};
  if (const auto* sq = std::get_if<HatGaussSqrtForm>(&form)) {
    const double v = hat_stencil(sq->a, t - sq->center, gauss_cdf2, sq->s);
    return {std::sqrt(std::max(0.0, v)), 0.0};
  }
  throw std::logic_error("field has no closed form");
}

bool form_present(const ClosedForm& form) {
  return !std::holds_alternative<std::monostate>(form);
}

// --- SampledField -----------------------------------------------------------

SampledField::SampledField(Grid g, std::vector<cplx> v, ClosedForm f)
    : grid_(g), values_(std::move(v)), form_(std::move(f)) {
  if (values_.size() != static_cast<std::size_t>(grid_.size()))
    throw std::invalid_argument("value count does not match the grid");
}

SampledField SampledField::zero(const Grid& g) {
  return SampledField(g, std::vector<cplx>(static_cast<std::size_t>(g.size()), cplx{0.0, 0.0}),
                      AtomSum{});
}

SampledField SampledField::from_values(const Grid& g, std::vector<cplx> values, ClosedForm form) {
  return SampledField(g, std::move(values), std::move(form));
}

SampledField SampledField::sample(const Grid& g, ClosedForm form) {
  std::vector<cplx> v(static_cast<std::size_t>(g.size()));
  for (int j = 0; j < g.size(); ++j) v[static_cast<std::size_t>(j)] = form_value(form, g.x(j));
  return SampledField(g, std::move(v), std::move(form));
}

double SampledField::form_consistency() const {
  if (!has_form()) return 0.0;
  double max_abs = 0.0;
  for (const cplx& v : values_) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs == 0.0) return 0.0;
  double worst = 0.0;
  for (int j = 0; j < grid_.size(); ++j)
    worst = std::max(worst, std::abs(value(j) - form_value_at(grid_.x(j))) / max_abs);
  return worst;
}

SampledField gaussian(const Grid& g, double x0, double xi0, double a) {
  if (a <= 0.0) throw std::invalid_argument("gaussian width must be positive");
  return SampledField::sample(g, AtomSum{GaussAtom{cplx{1.0, 0.0}, x0, xi0, a}});
}

SampledField hat_gauss_window(const Grid& g, double a, double s) {
  if (a <= 0.0 || s <= 0.0) throw std::invalid_argument("hat-gauss window needs a, s > 0");
  return SampledField::sample(g, HatGaussForm{a, s, 0.0});
}

SampledField translate(const SampledField& f, double x) {
  if (const auto* atoms = std::get_if<AtomSum>(&f.form())) {
    AtomSum moved = *atoms;
    for (GaussAtom& at : moved) at.x0 += x;
    return SampledField::sample(f.grid(), std::move(moved));
  }
  if (const auto* hg = std::get_if<HatGaussForm>(&f.form()))
    return SampledField::sample(f.grid(), HatGaussForm{hg->a, hg->s, hg->center + x});
  if (const auto* sq = std::get_if<HatGaussSqrtForm>(&f.form()))
    return SampledField::sample(f.grid(), HatGaussSqrtForm{sq->a, sq->s, sq->center + x});
  const double steps = x / f.grid().delta();
  const long long m = std::llround(steps);
  if (std::abs(steps - static_cast<double>(m)) > 1e-9)
    throw std::invalid_argument("off-grid translate requires closed form");
  const int n = f.grid().size();
  std::vector<cplx> v(static_cast<std::size_t>(n), cplx{0.0, 0.0});
  for (int j = 0; j < n; ++j) {
    const long long src = j - m;
    if (src >= 0 && src < n) v[static_cast<std::size_t>(j)] = f.value(static_cast<int>(src));
  }
  return SampledField::from_values(f.grid(), std::move(v));
}

SampledField modulate(const SampledField& f, double xi) {
  if (const auto* atoms = std::get_if<AtomSum>(&f.form())) {
    AtomSum out = *atoms;
    for (GaussAtom& at : out) {
      at.coeff *= cis(kTwoPi * xi * at.x0);
      at.xi0 += xi;
    }
    return SampledField::sample(f.grid(), std::move(out));
  }
  std::vector<cplx> v(f.values().begin(), f.values().end());
  for (int j = 0; j < f.grid().size(); ++j)
    v[static_cast<std::size_t>(j)] *= cis(kTwoPi * xi * f.grid().x(j));
  return SampledField::from_values(f.grid(), std::move(v));
}

SampledField conj_field(const SampledField& f) {
  std::vector<cplx> v(f.values().begin(), f.values().end());
  for (cplx& z : v) z = std::conj(z);
  ClosedForm form = std::monostate{};
  if (const auto* atoms = std::get_if<AtomSum>(&f.form())) {
    AtomSum out = *atoms;
    for (GaussAtom& at : out) {
      at.coeff = std::conj(at.coeff);
      at.xi0 = -at.xi0;
    }
    form = std::move(out);
  } else if (form_present(f.form())) {
    form = f.form();  // hat-gauss forms are real-valued
  }
  return SampledField::from_values(f.grid(), std::move(v), std::move(form));
}

SampledField scale(const SampledField& f, cplx c) {
  std::vector<cplx> v(f.values().begin(), f.values().end());
  for (cplx& z : v) z *= c;
  ClosedForm form = std::monostate{};
  if (const auto* atoms = std::get_if<AtomSum>(&f.form())) {
    AtomSum out = *atoms;
    for (GaussAtom& at : out) at.coeff *= c;
    form = std::move(out);
  }
  return SampledField::from_values(f.grid(), std::move(v), std::move(form));
}

SampledField add(const SampledField& f, const SampledField& g) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument("grid mismatch in add");
  std::vector<cplx> v(f.values().begin(), f.values().end());
  for (int j = 0; j < f.grid().size(); ++j) v[static_cast<std::size_t>(j)] += g.value(j);
  ClosedForm form = std::monostate{};
  const auto* fa = std::get_if<AtomSum>(&f.form());
  const auto* ga = std::get_if<AtomSum>(&g.form());
  if (fa && ga) {
    AtomSum out = *fa;
    out.insert(out.end(), ga->begin(), ga->end());
    form = std::move(out);
  }
  return SampledField::from_values(f.grid(), std::move(v), std::move(form));
}

SampledField multiply(const SampledField& f, const SampledField& g) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument("grid mismatch in multiply");
  std::vector<cplx> v(f.values().begin(), f.values().end());
  for (int j = 0; j < f.grid().size(); ++j) v[static_cast<std::size_t>(j)] *= g.value(j);
  ClosedForm form = std::monostate{};
  const auto* fa = std::get_if<AtomSum>(&f.form());
  const auto* ga = std::get_if<AtomSum>(&g.form());
  if (fa && ga && fa->size() * ga->size() <= 64) {
    AtomSum out;
    out.reserve(fa->size() * ga->size());
    for (const GaussAtom& p : *fa) {
      for (const GaussAtom& q : *ga) {
        const double asum = p.a + q.a;
        GaussAtom r;
        r.a = asum;
        r.x0 = (p.a * p.x0 + q.a * q.x0) / asum;
        r.xi0 = p.xi0 + q.xi0;
        const double cross = p.a * q.a / asum * (p.x0 - q.x0) * (p.x0 - q.x0);
        r.coeff = p.coeff * q.coeff * std::exp(-kPi * cross) *
                  cis(kTwoPi * (p.xi0 * (r.x0 - p.x0) + q.xi0 * (r.x0 - q.x0)));
        out.push_back(r);
      }
    }
    form = std::move(out);
  }
  return SampledField::from_values(f.grid(), std::move(v), std::move(form));
}

SampledField fourier(const SampledField& f) { return spectral_transform(f, /*forward=*/true); }

SampledField fourier_inv(const SampledField& f) { return spectral_transform(f, /*forward=*/false); }

SampledField convolve(const SampledField& f, const SampledField& g) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument("grid mismatch in convolve");
  return fourier_inv(multiply(fourier(f), fourier(g)));
}

std::vector<cplx> derivative_values(const SampledField& f, int k) {
  if (k < 0) throw std::invalid_argument("derivative order must be >= 0");
  const Grid& g = f.grid();
  std::vector<cplx> out(static_cast<std::size_t>(g.size()), cplx{0.0, 0.0});
  if (const auto* atoms = std::get_if<AtomSum>(&f.form())) {
    for (const GaussAtom& at : *atoms) {
      const auto poly = atom_deriv_poly(at, k);
      for (int j = 0; j < g.size(); ++j) {
        const double u = g.x(j) - at.x0;
        out[static_cast<std::size_t>(j)] += cpoly_eval(poly, u) * atom_value(at, g.x(j));
      }
    }
    return out;
  }
  if (const auto* hg = std::get_if<HatGaussForm>(&f.form())) {
    if (k == 0) {
      for (int j = 0; j < g.size(); ++j)
        out[static_cast<std::size_t>(j)] = hat_stencil(hg->a, g.x(j) - hg->center, gauss_cdf2, hg->s);
    } else if (k == 1) {
      for (int j = 0; j < g.size(); ++j)
        out[static_cast<std::size_t>(j)] = hat_stencil(hg->a, g.x(j) - hg->center, gauss_cdf, hg->s);
    } else {
      const auto poly = gauss_deriv_poly(hg->s, k - 2);
      auto gd = [&](double x) { return poly_eval(poly, x) * gauss_mass1(hg->s, x); };
      for (int j = 0; j < g.size(); ++j) {
        const double u = g.x(j) - hg->center;
        out[static_cast<std::size_t>(j)] = (gd(u + hg->a) - 2.0 * gd(u) + gd(u - hg->a)) / hg->a;
      }
    }
    return out;
  }
  throw std::invalid_argument("derivatives need an atom or hat-gauss closed form");
}

std::optional<double> exact_l1_mass(const ClosedForm& form) {
  if (const auto* atoms = std::get_if<AtomSum>(&form)) {
    if (atoms->size() == 1) {
      const GaussAtom& at = (*atoms)[0];
      return std::abs(at.coeff) / std::sqrt(at.a);
    }
  }
  if (const auto* hg = std::get_if<HatGaussForm>(&form)) return hg->a;  // positive, mass of hat_a
  return std::nullopt;
}

double lp_norm(const SampledField& f, double p, const Weight& eta) {
  return lp_norm_restricted(f, p, eta, std::numeric_limits<double>::infinity());
}

double lp_norm_restricted(const SampledField& f, double p, const Weight& eta, double xmax) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  const Grid& g = f.grid();
  const bool is_const = eta.is_constant();
  if (std::isinf(p)) {
    double m = 0.0;
    for (int j = 0; j < g.size(); ++j) {
      if (std::abs(g.x(j)) > xmax) continue;
      const double w = is_const ? 1.0 : eta.eval(g.x(j));
      m = std::max(m, w * std::abs(f.value(j)));
    }
    return m;
  }
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(g.size()));
  for (int j = 0; j < g.size(); ++j) {
    if (std::abs(g.x(j)) > xmax) continue;
    const double w = is_const ? 1.0 : eta.eval(g.x(j));
    terms.push_back(weight_abs_p(w * std::abs(f.value(j)), p));
  }
  const double s = pairwise_sum(std::span<const double>(terms)) * g.delta();
  return p == 1.0 ? s : (p == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / p));
}

double boundary_tail_ratio(const SampledField& f, const Weight& eta) {
  const Grid& g = f.grid();
  const int n = g.size();
  double m = 0.0;
  for (int j = 0; j < n; ++j) m = std::max(m, eta.eval(g.x(j)) * std::abs(f.value(j)));
  if (m == 0.0) return 0.0;
  const double edge = std::max(eta.eval(g.x(0)) * std::abs(f.value(0)),
                               eta.eval(g.x(n - 1)) * std::abs(f.value(n - 1)));
  return edge / m;
}

double fourier_lq_norm(const SampledField& f, double q, const Weight& nu) {
  return lp_norm(fourier_inv(f), q, nu);
}

double fl1_norm(const SampledField& f, const Weight& nu) { return fourier_lq_norm(f, 1.0, nu); }

Lemma22Report lemma22_decay_check(const SampledField& f, const GevreySequence& seq, double h,
                                  const Weight& eta, int K, double xi_max) {
  if (h < 0.0 || K < 0) throw std::invalid_argument("lemma22 check needs h >= 0 and K >= 0");
  Lemma22Report report;
  report.K = K;
  const Weight one = Weight::constant();

  double seminorm = 0.0;
  if (auto mass = exact_l1_mass(f.form())) {
    seminorm = *mass;  // k = 0 term, exact
  } else {
    seminorm = lp_norm(f, 1.0, one);
  }
  for (int k = 1; k <= K; ++k) {
    auto deriv = derivative_values(f, k);
    std::vector<double> mags(deriv.size());
    for (std::size_t j = 0; j < deriv.size(); ++j) mags[j] = std::abs(deriv[j]);
    const double l1 = pairwise_sum(std::span<const double>(mags)) * f.grid().delta();
    const double term = std::pow(h, k) * l1 / std::exp(seq.log_value(k));
    seminorm = std::max(seminorm, term);
  }
  report.seminorm = seminorm;

  const Grid freq = f.grid().reciprocal();
  std::optional<SampledField> numeric;
  const bool exact = f.has_atoms();
  if (!exact) numeric = fourier_inv(f);
  report.exact_transform = exact;
  const AtomSum inv_atoms =
      exact ? atom_fourier(std::get<AtomSum>(f.form()), /*inverse=*/true) : AtomSum{};

  double min_slack = std::numeric_limits<double>::infinity();
  double witness = 0.0;
  std::vector<double> mass_terms;
  mass_terms.reserve(static_cast<std::size_t>(freq.size()));
  const double log_semi = std::log(seminorm);
  for (int j = 0; j < freq.size(); ++j) {
    const double xi = freq.x(j);
    const double m_val = seq.assoc(h * std::abs(xi)).value;
    mass_terms.push_back(eta.eval(xi) * std::exp(-m_val));
    if (std::abs(xi) > xi_max) continue;
    const double lhs = exact ? std::abs(form_value(ClosedForm{inv_atoms}, xi))
                             : std::abs(numeric->value(j));
    if (lhs == 0.0) continue;
    const double slack = log_semi - m_val - std::log(lhs);
    if (slack < min_slack) {
      min_slack = slack;
      witness = xi;
    }
  }
  report.min_slack = min_slack;
  report.witness_xi = witness;
  report.weighted_bound_mass = pairwise_sum(std::span<const double>(mass_terms)) * freq.delta();
  return report;
}

}  // namespace amalgam
