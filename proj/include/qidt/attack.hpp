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

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qidt/bitstring.hpp"
#include "qidt/density.hpp"
#include "qidt/error.hpp"
#include "qidt/matrix.hpp"
#include "qidt/mub.hpp"
#include "qidt/tolerances.hpp"

namespace qidt {

enum class Basis { B, BConjugate };

inline Basis other(Basis b) noexcept {
  return b == Basis::B ? Basis::BConjugate : Basis::B;
}

/// Eve's interaction restricted to her initial apparatus state:
///   |0>_E (x) |i>  ->  sum_j |E_ij> (x) |j>,
/// stored as the table of apparatus vectors E_ij in C^{eve_dim}. The table is
/// row-orthonormal: sum_j <E_ij|E_kj> = delta_ik.
class AttackChannel {
 public:
  /// `kraus[i * 2^n + j]` is E_ij. Throws NotUnitary if the table is not
  /// row-orthonormal within tol::kUnitary.
  AttackChannel(int n, std::size_t eve_dim, std::vector<StateVector> kraus,
                Basis basis = Basis::B)
      : n_(n), eve_dim_(eve_dim), basis_(basis), kraus_(std::move(kraus)) {
    require_qubit_count(n_, "AttackChannel");
    if (eve_dim_ == 0) throw DimensionMismatch("AttackChannel: eve_dim must be >= 1");
    const std::size_t d = qubit_dim(n_);
    if (kraus_.size() != d * d)
      throw DimensionMismatch("AttackChannel: expected " + std::to_string(d * d) +
                              " Kraus vectors, got " + std::to_string(kraus_.size()));
    for (const auto& v : kraus_)
      if (v.dim() != eve_dim_)
        throw DimensionMismatch("AttackChannel: Kraus vector of dimension " +
                                std::to_string(v.dim()) + ", expected " +
                                std::to_string(eve_dim_));
    const double defect = unitarity_defect();
    if (!(defect <= tol::kUnitary))
      throw NotUnitary("AttackChannel: unitarity defect " + std::to_string(defect));
  }

  int n() const noexcept { return n_; }
  std::size_t system_dim() const noexcept { return qubit_dim(n_); }
  std::size_t eve_dim() const noexcept { return eve_dim_; }
  Basis basis() const noexcept { return basis_; }

  const StateVector& kraus(std::size_t i, std::size_t j) const {
    return kraus_[i * system_dim() + j];
  }
  const StateVector& kraus(const BitString& i, const BitString& j) const {
    check_width(i);
    check_width(j);
    return kraus(i.index(), j.index());
  }
  const std::vector<StateVector>& table() const noexcept { return kraus_; }

  /// max_{i,k} |sum_j <E_ij|E_kj> - delta_ik|
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

  void check_width(const BitString& b) const {
    if (b.size() != n_)
      throw DimensionMismatch("AttackChannel: index has " + std::to_string(b.size()) +
                              " bits, channel has " + std::to_string(n_) + " qubits");
  }

 private:
  int n_;
  std::size_t eve_dim_;
  Basis basis_;
  std::vector<StateVector> kraus_;
};

/// Distribution of Bob's conjugate-basis error pattern c = A xor B.
class ErrorDistribution {
 public:
  ErrorDistribution(int n, std::vector<double> probs) : n_(n), probs_(std::move(probs)) {
    if (probs_.size() != qubit_dim(n_))
      throw DimensionMismatch("ErrorDistribution: expected " +
                              std::to_string(qubit_dim(n_)) + " entries");
    double sum = 0.0;
    for (double p : probs_) {
      if (!(p >= -tol::kPsd && p <= 1.0 + tol::kPsd))
        throw NotADistribution("ErrorDistribution: entry " + std::to_string(p));
      sum += p;
    }
    if (!(std::abs(sum - 1.0) <= tol::kDistributionSum))
      throw NotADistribution("ErrorDistribution: entries sum to " + std::to_string(sum));
  }

  int n() const noexcept { return n_; }
  const std::vector<double>& probs() const noexcept { return probs_; }
  double operator[](std::size_t c) const { return probs_[c]; }

  /// Total error probability sum_{c != 0} p(c).
  double delta() const {
    double d = 0.0;
    for (std::size_t c = 1; c < probs_.size(); ++c) d += probs_[c];
    return d;
  }

 private:
  int n_;
  std::vector<double> probs_;
};

/// Reads the Kraus table off a unitary acting on H_E (x) H_A (apparatus is the
/// most significant factor): E_ij = (I_E (x) <j|) U (|ancilla> (x) |i>).
inline AttackChannel from_unitary(const ComplexMatrix& u, const StateVector& ancilla, int n) {
  require_qubit_count(n, "from_unitary");
  const std::size_t d = qubit_dim(n);
  const std::size_t eve_dim = ancilla.dim();
  if (eve_dim == 0 || !u.is_square() || u.rows() != eve_dim * d)
    throw DimensionMismatch("from_unitary: unitary is " + u.shape() + ", expected " +
                            std::to_string(eve_dim * d) + " square");
  const double defect = unitarity_defect(u);
  if (!(defect <= tol::kUnitary))
    throw NotUnitary("from_unitary: unitarity defect " + std::to_string(defect));
  if (!ancilla.is_normalized(tol::kUnitary))
    throw InvalidState("from_unitary: ancilla is not normalized");

  std::vector<StateVector> kraus(d * d, StateVector(eve_dim));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      StateVector& e = kraus[i * d + j];
      for (std::size_t out = 0; out < eve_dim; ++out) {
        cplx s = 0.0;
        for (std::size_t in = 0; in < eve_dim; ++in)
          s += u(out * d + j, in * d + i) * ancilla[in];
        e[out] = s;
      }
    }
  return AttackChannel(n, eve_dim, std::move(kraus), Basis::B);
}

/// Re-expresses the channel in the other basis:
///   E'_ls = 2^{-n} sum_{ij} (-1)^{s.j + i.l} E_ij.
inline AttackChannel to_conjugate_basis(const AttackChannel& ch) {
  const std::size_t d = ch.system_dim();
  const double scale = 1.0 / static_cast<double>(d);
  std::vector<StateVector> out(d * d, StateVector(ch.eve_dim()));
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t s = 0; s < d; ++s) {
      StateVector& e = out[l * d + s];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          const double sign = parity_sign(s, j) * parity_sign(i, l);
          const StateVector& src = ch.kraus(i, j);
          for (std::size_t k = 0; k < ch.eve_dim(); ++k) e[k] += sign * src[k];
        }
      e *= scale;
    }
  return AttackChannel(ch.n(), ch.eve_dim(), std::move(out), other(ch.basis()));
}

/// Eve's apparatus state when Alice sends |i>: sum_j |E_ij><E_ij|.
inline DensityMatrix eve_state(const AttackChannel& ch, std::size_t i) {
  ComplexMatrix rho(ch.eve_dim(), ch.eve_dim());
  for (std::size_t j = 0; j < ch.system_dim(); ++j) add_projector(rho, ch.kraus(i, j));
  return DensityMatrix(std::move(rho));
}

inline DensityMatrix eve_state(const AttackChannel& ch, const BitString& i) {
  ch.check_width(i);
  return eve_state(ch, i.index());
}

namespace detail {

// The family expressed in the basis conjugate to the one Eve's table is
// written in. A B-labelled channel is converted; a BConjugate one already is.
inline AttackChannel conjugate_family(const AttackChannel& ch) {
  return ch.basis() == Basis::B ? to_conjugate_basis(ch) : ch;
}

}  // namespace detail

/// Bob's state when Alice sends the conjugate-basis string i, in the
/// computational representation:
///   rho = sum_{j,l} <E'_il|E'_ij> |j-bar><l-bar|.
inline DensityMatrix bob_conjugate_state(const AttackChannel& ch, std::size_t i) {
  const AttackChannel conj = detail::conjugate_family(ch);
  const std::size_t d = conj.system_dim();
  ComplexMatrix components(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < d; ++l)
      components(j, l) = inner(conj.kraus(i, l), conj.kraus(i, j));
  const ComplexMatrix m = mub_transform(conj.n());
  return DensityMatrix(m * components * m);
}

inline DensityMatrix bob_conjugate_state(const AttackChannel& ch, const BitString& i) {
  ch.check_width(i);
  return bob_conjugate_state(ch, i.index());
}

/// p(B = A xor c | conjugate basis) = 2^{-n} sum_i <E'_{i,i^c}|E'_{i,i^c}>.
inline ErrorDistribution xor_error_distribution(const AttackChannel& ch) {
  const AttackChannel conj = detail::conjugate_family(ch);
  const std::size_t d = conj.system_dim();
  std::vector<double> probs(d, 0.0);
  for (std::size_t c = 0; c < d; ++c) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += conj.kraus(i, i ^ c).norm_squared();
    probs[c] = s / static_cast<double>(d);
  }
  return ErrorDistribution(ch.n(), std::move(probs));
}

}  // namespace qidt
