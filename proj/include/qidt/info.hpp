// Copyright 2026 The qidt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qidt/attack.hpp"
#include "qidt/density.hpp"
#include "qidt/eigen.hpp"
#include "qidt/error.hpp"
#include "qidt/matrix.hpp"
#include "qidt/rng.hpp"
#include "qidt/symmetrize.hpp"
#include "qidt/tolerances.hpp"

namespace qidt {

/// Prior-weighted family of states on a common space.
class Ensemble {
 public:
  Ensemble(std::vector<double> priors, std::vector<DensityMatrix> states)
      : priors_(std::move(priors)), states_(std::move(states)) {
    if (states_.empty()) throw DimensionMismatch("Ensemble: no states");
    if (priors_.size() != states_.size())
      throw DimensionMismatch("Ensemble: " + std::to_string(priors_.size()) + " priors for " +
                              std::to_string(states_.size()) + " states");
    double sum = 0.0;
    for (double p : priors_) {
      if (!(p >= 0.0)) throw NotADistribution("Ensemble: negative prior");
      sum += p;
    }
    if (!(std::abs(sum - 1.0) <= tol::kDistributionSum))
      throw NotADistribution("Ensemble: priors sum to " + std::to_string(sum));
    for (const auto& s : states_)
      if (s.dim() != states_.front().dim())
        throw DimensionMismatch("Ensemble: states have different dimensions");
  }

  static Ensemble uniform(std::vector<DensityMatrix> states) {
    const double p = 1.0 / static_cast<double>(states.size());
    std::vector<double> priors(states.size(), p);
    return Ensemble(std::move(priors), std::move(states));
  }

  std::size_t size() const noexcept { return states_.size(); }
  std::size_t dim() const noexcept { return states_.front().dim(); }
  const std::vector<double>& priors() const noexcept { return priors_; }
  const std::vector<DensityMatrix>& states() const noexcept { return states_; }

  /// sum_i p_i rho_i
  ComplexMatrix average() const {
    ComplexMatrix avg(dim(), dim());
    for (std::size_t i = 0; i < size(); ++i) avg += states_[i].matrix() * cplx(priors_[i]);
    return avg;
  }

 private:
  std::vector<double> priors_;
  std::vector<DensityMatrix> states_;
};

/// Positive operators summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw InvalidPovm("Povm: no elements");
    const std::size_t d = elements_.front().rows();
    ComplexMatrix sum(d, d);
    for (std::size_t a = 0; a < elements_.size(); ++a) {
      const ComplexMatrix& x = elements_[a];
      if (!x.is_square() || x.rows() != d)
        throw InvalidPovm("Povm: element " + std::to_string(a) + " has shape " + x.shape());
      if (hermiticity_defect(x) > tol::kHermitian)
        throw InvalidPovm("Povm: element " + std::to_string(a) + " is not Hermitian");
      if (hermitian_eigendecomposition(x).eigenvalues.back() < -tol::kPsd)
        throw InvalidPovm("Povm: element " + std::to_string(a) + " is not positive");
      sum += x;
    }
    const double err = max_abs_diff(sum, ComplexMatrix::identity(d));
    if (!(err <= tol::kPovmSum))
      throw InvalidPovm("Povm: elements sum to identity only within " + std::to_string(err));
  }

  /// Rank-one projectors onto the columns of a unitary.
  static Povm projective(const ComplexMatrix& basis) {
    const double defect = unitarity_defect(basis);
    if (!(defect <= tol::kPovmSum))
      throw InvalidPovm("Povm::projective: basis is not orthonormal (" +
                        std::to_string(defect) + ")");
    std::vector<ComplexMatrix> elements;
    elements.reserve(basis.cols());
    for (std::size_t k = 0; k < basis.cols(); ++k) {
      StateVector col(basis.rows());
      for (std::size_t r = 0; r < basis.rows(); ++r) col[r] = basis(r, k);
      elements.push_back(outer(col, col));
    }
    return Povm(std::move(elements), Trusted{});
  }

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t dim() const noexcept { return elements_.front().rows(); }
  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }

 private:
  struct Trusted {};
  Povm(std::vector<ComplexMatrix> elements, Trusted) : elements_(std::move(elements)) {}

  std::vector<ComplexMatrix> elements_;
};

/// Holevo quantity S(sum p_i rho_i) - sum p_i S(rho_i), in bits.
inline double holevo_chi(const Ensemble& ens) {
  const double s_avg = von_neumann_entropy(DensityMatrix(ens.average()));
  double s_mean = 0.0;
  for (std::size_t i = 0; i < ens.size(); ++i)
    s_mean += ens.priors()[i] * von_neumann_entropy(ens.states()[i]);
  return s_avg - s_mean;
}

namespace detail {

// Re tr(X rho), clipped at zero.
inline double outcome_probability(const ComplexMatrix& x, const ComplexMatrix& rho) {
  double s = 0.0;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) s += (x(r, c) * rho(c, r)).real();
  return std::max(s, 0.0);
}

}  // namespace detail

/// I(A : E[X]) = H(A) + H(E[X]) - H(A, E[X]) for the label A drawn from the
/// ensemble priors and E[X] the outcome of measuring X.
inline double mutual_information_of_measurement(const Ensemble& ens, const Povm& x) {
  if (x.dim() != ens.dim())
    throw InvalidPovm("mutual_information_of_measurement: POVM acts on dimension " +
                      std::to_string(x.dim()) + ", states have " +
                      std::to_string(ens.dim()));
  std::vector<double> joint;
  joint.reserve(ens.size() * x.size());
  std::vector<double> outcome(x.size(), 0.0);
  for (std::size_t i = 0; i < ens.size(); ++i)
    for (std::size_t a = 0; a < x.size(); ++a) {
      const double p = ens.priors()[i] *
                       detail::outcome_probability(x.elements()[a], ens.states()[i].matrix());
      joint.push_back(p);
      outcome[a] += p;
    }
  const double mi = detail::entropy_terms(ens.priors()) + detail::entropy_terms(outcome) -
                    detail::entropy_terms(joint);
  return std::max(mi, 0.0);
}

/// Square-root measurement X_i = R p_i rho_i R + (I - P)/count with
/// R = avg^{-1/2} on the support of the average state and P the support
/// projector.
inline Povm pretty_good_measurement(const Ensemble& ens) {
  const std::size_t d = ens.dim();
  const Spectrum s = hermitian_eigendecomposition(ens.average());
  ComplexMatrix inv_sqrt(d, d);
  ComplexMatrix support(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const double lam = s.eigenvalues[k];
    if (lam < tol::kSupport) continue;
    StateVector v(d);
    for (std::size_t r = 0; r < d; ++r) v[r] = s.eigenvectors(r, k);
    add_projector(inv_sqrt, v, 1.0 / std::sqrt(lam));
    add_projector(support, v);
  }
  const ComplexMatrix fill =
      (ComplexMatrix::identity(d) - support) * cplx(1.0 / static_cast<double>(ens.size()));

  std::vector<ComplexMatrix> elements;
  elements.reserve(ens.size());
  for (std::size_t i = 0; i < ens.size(); ++i) {
    ComplexMatrix x =
        inv_sqrt * (ens.states()[i].matrix() * cplx(ens.priors()[i])) * inv_sqrt + fill;
    // Remove rounding asymmetry.
    x = (x + x.adjoint()) * cplx(0.5);
    elements.push_back(std::move(x));
  }
  return Povm(std::move(elements));
}

/// Lower bound on accessible information: the best of the pretty good
/// measurement and `samples` random projective measurements drawn from
/// SplitMix64(seed). Extending `samples` only appends candidates, so the
/// result is nondecreasing in `samples`.
inline double accessible_info_lower_bound(const Ensemble& ens, int samples, std::uint64_t seed) {
  if (samples < 0) throw OutOfRange("accessible_info_lower_bound: samples must be >= 0");
  double best = mutual_information_of_measurement(ens, pretty_good_measurement(ens));
  SplitMix64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    const Povm x = Povm::projective(random_unitary(ens.dim(), rng));
    best = std::max(best, mutual_information_of_measurement(ens, x));
  }
  return best;
}

/// H(A xor B | conjugate basis), the right-hand side of the entropic
/// information-disturbance bound.
inline double xor_entropy_bound(const ErrorDistribution& ed) {
  return shannon_entropy(ed.probs());
}

/// 4 n sqrt(delta), the square-root error-probability bound.
inline double boykin_bound(const ErrorDistribution& ed) {
  const double delta = std::clamp(ed.delta(), 0.0, 1.0);
  return 4.0 * ed.n() * std::sqrt(delta);
}

/// -delta log delta - (1-delta) log(1-delta) + n delta.
inline double corollary_bound(double delta, int n) {
  if (!(delta >= 0.0 && delta <= 1.0))
    throw OutOfRange("corollary_bound: delta " + std::to_string(delta) + " is not in [0,1]");
  return binary_entropy(delta) + n * delta;
}

/// One attack's full audit.
struct BoundsReport {
  int n = 0;
  std::size_t eve_dim = 0;
  double delta = 0.0;
  std::vector<double> error_dist;
  double h_xor = 0.0;
  double chi_orig = 0.0;
  double chi_sym = 0.0;
  double i_lower = 0.0;
  double boykin_rhs = 0.0;
  double corollary_rhs = 0.0;
  double slack_main = 0.0;      // h_xor - chi_sym
  double slack_measured = 0.0;  // h_xor - i_lower
  double spectrum_deviation = 0.0;
};

/// An audit produced values the theorem rules out. Signals a bug.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& what, BoundsReport report)
      : Error(what), report_(std::move(report)) {}
  const BoundsReport& report() const noexcept { return report_; }

 private:
  BoundsReport report_;
};

inline Ensemble eve_ensemble(const AttackChannel& ch) {
  std::vector<DensityMatrix> states;
  states.reserve(ch.system_dim());
  for (std::size_t i = 0; i < ch.system_dim(); ++i) states.push_back(eve_state(ch, i));
  return Ensemble::uniform(std::move(states));
}

inline Ensemble eve_ensemble_sym(const SymmetrizedChannel& sym) {
  std::vector<DensityMatrix> states;
  states.reserve(sym.system_dim());
  for (std::size_t i = 0; i < sym.system_dim(); ++i) states.push_back(eve_state_sym(sym, i));
  return Ensemble::uniform(std::move(states));
}

/// Computes every bound for a basis-b attack. Throws TheoremViolation if
/// h_xor < chi_sym, h_xor < i_lower, or the sigma spectrum identity fails,
/// each beyond 1e-9.
inline BoundsReport audit_attack(const AttackChannel& ch, int samples, std::uint64_t seed) {
  if (ch.basis() != Basis::B)
    throw UnsupportedCombination("audit_attack: channel must be expressed in basis b");
  const ErrorDistribution ed = xor_error_distribution(ch);
  const Ensemble ens = eve_ensemble(ch);
  const SymmetrizedChannel sym = symmetrize(ch);

  BoundsReport r;
  r.n = ch.n();
  r.eve_dim = ch.eve_dim();
  r.delta = ed.delta();
  r.error_dist = ed.probs();
  r.h_xor = xor_entropy_bound(ed);
  r.chi_orig = holevo_chi(ens);
  r.chi_sym = holevo_chi(eve_ensemble_sym(sym));
  r.i_lower = accessible_info_lower_bound(ens, samples, seed);
  r.boykin_rhs = boykin_bound(ed);
  r.corollary_rhs = corollary_bound(std::clamp(r.delta, 0.0, 1.0), ch.n());
  r.slack_main = r.h_xor - r.chi_sym;
  r.slack_measured = r.h_xor - r.i_lower;
  r.spectrum_deviation = sigma_spectrum_check(sigma_matrix(sym), ed);

  if (r.slack_main < -tol::kTheorem)
    throw TheoremViolation("audit_attack: chi_sym exceeds H(A xor B) by " +
                               std::to_string(-r.slack_main),
                           r);
  if (r.slack_measured < -tol::kTheorem)
    throw TheoremViolation("audit_attack: measured information exceeds H(A xor B) by " +
                               std::to_string(-r.slack_measured),
                           r);
  if (r.spectrum_deviation > tol::kTheorem)
    throw TheoremViolation("audit_attack: sigma spectrum deviates from the error "
                           "distribution by " +
                               std::to_string(r.spectrum_deviation),
                           r);
  return r;
}

}  // namespace qidt
