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
#include <span>
#include <string>
#include <vector>

#include "qidt/eigen.hpp"
#include "qidt/error.hpp"
#include "qidt/matrix.hpp"
#include "qidt/tolerances.hpp"

namespace qidt {

/// Hermitian, positive semidefinite, unit-trace matrix. Invariants are checked
/// on construction; instances are immutable afterwards.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) { validate(); }

  static DensityMatrix pure(const StateVector& psi) {
    if (!psi.is_normalized(tol::kTrace))
      throw InvalidState("DensityMatrix::pure: state is not normalized");
    return DensityMatrix(outer(psi, psi));
  }

  static DensityMatrix maximally_mixed(std::size_t dim) {
    return DensityMatrix(ComplexMatrix::identity(dim) * cplx(1.0 / static_cast<double>(dim)));
  }

  std::size_t dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

 private:
  void validate() const {
    if (!m_.is_square() || m_.rows() == 0)
      throw DimensionMismatch("DensityMatrix: matrix is " + m_.shape());
    const double tr_err = std::abs(m_.trace() - cplx(1.0));
    if (!(tr_err <= tol::kTrace))
      throw InvalidState("DensityMatrix: trace deviates from 1 by " + std::to_string(tr_err));
    const Spectrum s = hermitian_eigendecomposition(m_);
    if (s.eigenvalues.back() < -tol::kPsd)
      throw InvalidState("DensityMatrix: negative eigenvalue " +
                         std::to_string(s.eigenvalues.back()));
  }

  ComplexMatrix m_;
};

enum class Keep { Left, Right };

/// Reduced state of one tensor factor of a (dim_left * dim_right) state.
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_left,
                                   std::size_t dim_right, Keep keep) {
  if (dim_left * dim_right != rho.dim()) {
    throw DimensionMismatch("partial_trace: " + std::to_string(dim_left) + " x " +
                            std::to_string(dim_right) + " does not factor dimension " +
                            std::to_string(rho.dim()));
  }
  const ComplexMatrix& m = rho.matrix();
  if (keep == Keep::Left) {
    ComplexMatrix out(dim_left, dim_left);
    for (std::size_t a = 0; a < dim_left; ++a)
      for (std::size_t b = 0; b < dim_left; ++b) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < dim_right; ++k) s += m(a * dim_right + k, b * dim_right + k);
        out(a, b) = s;
      }
    return DensityMatrix(std::move(out));
  }
  ComplexMatrix out(dim_right, dim_right);
  for (std::size_t a = 0; a < dim_right; ++a)
    for (std::size_t b = 0; b < dim_right; ++b) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < dim_left; ++k) s += m(k * dim_right + a, k * dim_right + b);
      out(a, b) = s;
    }
  return DensityMatrix(std::move(out));
}

namespace detail {

// -sum p log2 p over p > 0.
inline double entropy_terms(std::span<const double> p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

}  // namespace detail

/// Shannon entropy in bits. Entries in [-tol::kPsd, 0) are clipped to zero.
inline double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= -tol::kPsd))
      throw NotADistribution("shannon_entropy: negative entry " + std::to_string(x));
    sum += x;
  }
  if (!(std::abs(sum - 1.0) <= tol::kDistributionSum))
    throw NotADistribution("shannon_entropy: entries sum to " + std::to_string(sum));
  return detail::entropy_terms(p);
}

/// Binary entropy H2(x) in bits, with 0 log 0 = 0.
inline double binary_entropy(double x) {
  const double p[2] = {x, 1.0 - x};
  return detail::entropy_terms(p);
}

/// Von Neumann entropy in bits.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  const Spectrum s = hermitian_eigendecomposition(rho.matrix());
  return detail::entropy_terms(s.eigenvalues);
}

}  // namespace qidt
