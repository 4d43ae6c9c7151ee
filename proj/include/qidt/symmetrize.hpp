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
#include <string>
#include <utility>
#include <vector>

#include "qidt/attack.hpp"
#include "qidt/bitstring.hpp"
#include "qidt/density.hpp"
#include "qidt/eigen.hpp"
#include "qidt/error.hpp"
#include "qidt/matrix.hpp"

namespace qidt {

/// The XOR-symmetrized attack. Eve's apparatus gains n auxiliary qubits
/// (the most significant factor), and
///   E^s_ij = 2^{-n/2} sum_m (-1)^{m.(i^j)} |m> (x) E_{i^m, j^m}.
class SymmetrizedChannel {
 public:
  int n() const noexcept { return n_; }
  std::size_t system_dim() const noexcept { return qubit_dim(n_); }
  /// Dimension of the original apparatus.
  std::size_t eve_dim() const noexcept { return eve_dim_; }
  /// Dimension of the enlarged apparatus, 2^n * eve_dim.
  std::size_t dim() const noexcept { return system_dim() * eve_dim_; }

  const StateVector& kraus(std::size_t i, std::size_t j) const {
    return kraus_[i * system_dim() + j];
  }

  double unitarity_defect() const {
    const std::size_t d = system_dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = i; k < d; ++k) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < d; ++j) s += inner(kraus(i, j), kraus(k, j));
        worst = std::max(worst, std::abs(s - cplx(i == k ? 1.0 : 0.0)));
      }
    return worst;
  }

  friend SymmetrizedChannel symmetrize(const AttackChannel& ch);

 private:
  SymmetrizedChannel(int n, std::size_t eve_dim, std::vector<StateVector> kraus)
      : n_(n), eve_dim_(eve_dim), kraus_(std::move(kraus)) {}

  int n_;
  std::size_t eve_dim_;
  std::vector<StateVector> kraus_;
};

inline SymmetrizedChannel symmetrize(const AttackChannel& ch) {
  const std::size_t d = ch.system_dim();
  const std::size_t e = ch.eve_dim();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<StateVector> table(d * d, StateVector(d * e));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      StateVector& v = table[i * d + j];
      for (std::size_t m = 0; m < d; ++m) {
        const double sign = scale * parity_sign(m, i ^ j);
        const StateVector& src = ch.kraus(i ^ m, j ^ m);
        for (std::size_t k = 0; k < e; ++k) v[m * e + k] = sign * src[k];
      }
    }
  SymmetrizedChannel sym(ch.n(), e, std::move(table));
  const double defect = sym.unitarity_defect();
  if (!(defect <= tol::kUnitary))
    throw NotUnitary("symmetrize: unitarity defect " + std::to_string(defect));
  return sym;
}

/// Eve's state under the symmetrized attack: sum_j |E^s_ij><E^s_ij|.
inline DensityMatrix eve_state_sym(const SymmetrizedChannel& sym, std::size_t i) {
  ComplexMatrix rho(sym.dim(), sym.dim());
  for (std::size_t j = 0; j < sym.system_dim(); ++j) add_projector(rho, sym.kraus(i, j));
  return DensityMatrix(std::move(rho));
}

inline DensityMatrix eve_state_sym(const SymmetrizedChannel& sym, const BitString& i) {
  if (i.size() != sym.n()) throw DimensionMismatch("eve_state_sym: index width mismatch");
  return eve_state_sym(sym, i.index());
}

struct AncillaOutcome {
  double probability;
  DensityMatrix state;
};

/// Measures the auxiliary qubits of rho^i_sym in the computational basis and
/// returns the probability of outcome m with the post-measurement state of
/// the original apparatus.
inline AncillaOutcome project_ancilla(const SymmetrizedChannel& sym, std::size_t i,
                                      std::size_t m) {
  const std::size_t d = sym.system_dim();
  const std::size_t e = sym.eve_dim();
  if (i >= d || m >= d) throw OutOfRange("project_ancilla: index out of range");
  ComplexMatrix block(e, e);
  for (std::size_t j = 0; j < d; ++j) {
    const StateVector& v = sym.kraus(i, j);
    for (std::size_t r = 0; r < e; ++r)
      for (std::size_t c = 0; c < e; ++c)
        block(r, c) += v[m * e + r] * std::conj(v[m * e + c]);
  }
  const double p = block.trace().real();
  if (!(p > 0.0)) throw InvalidState("project_ancilla: outcome has zero probability");
  block *= cplx(1.0 / p);
  return {p, DensityMatrix(std::move(block))};
}

inline AncillaOutcome project_ancilla(const SymmetrizedChannel& sym, const BitString& i,
                                      const BitString& m) {
  if (i.size() != sym.n() || m.size() != sym.n())
    throw DimensionMismatch("project_ancilla: index width mismatch");
  return project_ancilla(sym, i.index(), m.index());
}

/// Purifications phi_i = sum_j E^s_ij (x) |i^j> of rho^i_sym. The appended
/// n-qubit register is the least significant factor.
struct PurificationSet {
  std::size_t system_dim;     // 2^n
  std::size_t apparatus_dim;  // 2^n * eve_dim
  std::vector<StateVector> vectors;
};

inline PurificationSet purification_vectors(const SymmetrizedChannel& sym) {
  const std::size_t d = sym.system_dim();
  const std::size_t a = sym.dim();
  PurificationSet out{d, a, std::vector<StateVector>(d, StateVector(a * d))};
  for (std::size_t i = 0; i < d; ++i) {
    StateVector& phi = out.vectors[i];
    for (std::size_t j = 0; j < d; ++j) {
      const StateVector& v = sym.kraus(i, j);
      const std::size_t p = i ^ j;
      for (std::size_t k = 0; k < a; ++k) phi[k * d + p] += v[k];
    }
    if (!phi.is_normalized(tol::kUnitary))
      throw InvalidState("purification_vectors: phi_" + std::to_string(i) +
                         " is not normalized");
  }
  return out;
}

/// sigma and its spectrum computed two ways.
struct SigmaAnalysis {
  int n;
  DensityMatrix sigma;        // sigma(i,j) = 2^{-n} <phi_j|phi_i>
  std::vector<cplx> f_values; // f(t), t = i^j
  std::vector<double> lambda; // lambda_l = 2^{-n} sum_t f(t) (-1)^{t.l}
};

namespace detail {

// f(i^j) evaluated directly on the symmetrized table for one representative
// pair: sum_u <E^s_{j,j^u}|E^s_{i,i^u}>.
inline cplx f_from_table(const SymmetrizedChannel& sym, std::size_t i, std::size_t j) {
  cplx s = 0.0;
  for (std::size_t u = 0; u < sym.system_dim(); ++u)
    s += inner(sym.kraus(j, j ^ u), sym.kraus(i, i ^ u));
  return s;
}

inline constexpr double kTranslationTol = 1e-10;

}  // namespace detail

/// Builds sigma from the Gram matrix of the purifications and cross-checks it
/// against the translation-invariant form sigma(i,j) = 2^{-n} f(i^j). Throws
/// TranslationInvarianceViolated if the two disagree.
inline SigmaAnalysis sigma_matrix(const PurificationSet& pur, const SymmetrizedChannel& sym) {
  const std::size_t d = pur.system_dim;
  if (sym.system_dim() != d || pur.vectors.size() != d)
    throw DimensionMismatch("sigma_matrix: purification and channel sizes differ");
  const double inv_d = 1.0 / static_cast<double>(d);

  ComplexMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      gram(i, j) = inv_d * inner(pur.vectors[j], pur.vectors[i]);

  std::vector<cplx> f(d);
  for (std::size_t t = 0; t < d; ++t) f[t] = detail::f_from_table(sym, t, 0);

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const cplx fij = detail::f_from_table(sym, i, j);
      const double rep_err = std::abs(fij - f[i ^ j]);
      const double gram_err = std::abs(gram(i, j) - inv_d * f[i ^ j]);
      if (rep_err > detail::kTranslationTol || gram_err > detail::kTranslationTol) {
        throw TranslationInvarianceViolated(
            "sigma_matrix: entry (" + std::to_string(i) + "," + std::to_string(j) +
            ") representative error " + std::to_string(rep_err) + ", Gram error " +
            std::to_string(gram_err));
      }
    }

  std::vector<double> lambda(d);
  for (std::size_t l = 0; l < d; ++l) {
    cplx s = 0.0;
    for (std::size_t t = 0; t < d; ++t) s += f[t] * parity_sign(t, l);
    lambda[l] = inv_d * s.real();
  }
  return {sym.n(), DensityMatrix(std::move(gram)), std::move(f), std::move(lambda)};
}

inline SigmaAnalysis sigma_matrix(const SymmetrizedChannel& sym) {
  return sigma_matrix(purification_vectors(sym), sym);
}

/// Largest gap between the Fourier eigenvalues and the eigensolver's
/// eigenvalues of sigma, compared as sorted multisets.
inline double fourier_eigen_deviation(const SigmaAnalysis& sa) {
  std::vector<double> fourier = sa.lambda;
  std::sort(fourier.begin(), fourier.end(), std::greater<>());
  const Spectrum s = hermitian_eigendecomposition(sa.sigma.matrix());
  double worst = 0.0;
  for (std::size_t k = 0; k < fourier.size(); ++k)
    worst = std::max(worst, std::abs(fourier[k] - s.eigenvalues[k]));
  return worst;
}

inline constexpr double kSpectrumMultisetTol = 1e-9;

/// max_l |lambda_l - p(B = A xor l)|. Also checks the Fourier eigenvalues
/// against the eigensolver and throws SpectrumMismatch if they differ by
/// more than 1e-9.
inline double sigma_spectrum_check(const SigmaAnalysis& sa, const ErrorDistribution& ed) {
  if (sa.n != ed.n()) throw DimensionMismatch("sigma_spectrum_check: qubit counts differ");
  double worst = 0.0;
  for (std::size_t l = 0; l < sa.lambda.size(); ++l)
    worst = std::max(worst, std::abs(sa.lambda[l] - ed[l]));
  const double eig_dev = fourier_eigen_deviation(sa);
  if (eig_dev > kSpectrumMultisetTol)
    throw SpectrumMismatch("sigma_spectrum_check: Fourier and eigensolver spectra differ by " +
                           std::to_string(eig_dev));
  return worst;
}

}  // namespace qidt
