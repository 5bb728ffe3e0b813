// include/amalgam/duality.hpp

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

#ifndef AMALGAM_DUALITY_HPP
#define AMALGAM_DUALITY_HPP

#include <span>
#include <utility>
#include <vector>

#include "amalgam/amalgam_norm.hpp"
#include "amalgam/field.hpp"
#include "amalgam/local_space.hpp"
#include "amalgam/weights.hpp"

namespace amalgam {

// Bilinear dual pairing <f, phi> = integral of f phi (no conjugation).
cplx pairing(const SampledField& f, const SampledField& phi);

struct PairingReport {
  double lhs = 0.0;    // |<f, phi>|
  double rhs = 0.0;    // ||chi0||_{L2}^{-2} ||f||_{q,chi0,1/eta} ||phi||_{p,conj(chi0),eta}
  double slack = 0.0;  // rhs - lhs
};

// Pairing bound with continuous amalgam norms; E_dual must be the Hoelder
// dual of E (WeightedLp(p, eta) <-> WeightedLp(q, 1/eta)).
PairingReport duality_bound_check(const SampledField& f, const SampledField& phi,
                                  const SampledField& chi0, const LocalSpaceSpec& E,
                                  const LocalSpaceSpec& E_dual, double p, const Weight& eta,
                                  double outer_halfwidth = 12.0);

// Finitely supported weighted sequence on 1-d lattice points.
struct WeightedSequence {
  std::vector<double> points;
  std::vector<cplx> values;
};

struct InterpolationReport {
  double lhs = 0.0;        // ||c||_{l^{p_theta}_{eta_theta}}
  double rhs = 0.0;        // ||c||^{1-theta}_{p0,eta0} ||c||^theta_{p1,eta1}
  double log_slack = 0.0;  // ln rhs - ln lhs
  double p_theta = 0.0;
};

// Log-convexity of the weighted sequence norms:
// ||c||_{p_theta, eta_theta} <= ||c||_{p0, eta0}^{1-theta} ||c||_{p1, eta1}^theta
// with 1/p_theta = (1-theta)/p0 + theta/p1 and eta_theta the geometric
// interpolation.
InterpolationReport interpolation_convexity(const WeightedSequence& c, double p0, double p1,
                                            const Weight& eta0, const Weight& eta1, double theta);

// V_phi f(x, xi) = F(f T_x conj(phi))(xi) on grid_x x grid_xi.
class StftField {
 public:
  StftField(Grid gx, Grid gxi, std::vector<cplx> values);
  const Grid& grid_x() const { return gx_; }
  const Grid& grid_xi() const { return gxi_; }
  cplx at(int ix, int ik) const {
    return values_[static_cast<std::size_t>(ix) * static_cast<std::size_t>(gxi_.size()) +
                   static_cast<std::size_t>(ik)];
  }
  // L2(x, xi) norm by the product Riemann rule.
  double energy() const;

 private:
  Grid gx_;
  Grid gxi_;
  std::vector<cplx> values_;
};

StftField stft(const SampledField& f, const SampledField& phi);

struct RatioReport {
  double mixed_norm = 0.0;    // || ||V_phi f(x, .)||_{L^q_xi} ||_{L^p_eta(dx)}
  double amalgam_norm = 0.0;  // continuous W(FL^q, L^p_eta) norm, window conj(phi)
  double ratio = 0.0;
};

// Modulation-space norm (STFT mixed norm) vs the amalgam norm through the
// Fourier-side local component; the two pipelines must agree.
RatioReport modulation_vs_amalgam(const SampledField& f, const SampledField& phi, double p,
                                  double q_inner, const Weight& eta,
                                  double outer_halfwidth = 12.0);

}  // namespace amalgam

#endif  // AMALGAM_DUALITY_HPP
