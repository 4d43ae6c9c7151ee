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
#include <numeric>
#include <vector>

#include "qidt/error.hpp"
#include "qidt/matrix.hpp"
#include "qidt/tolerances.hpp"

namespace qidt {

/// Eigenvalues in descending order; column k of `eigenvectors` belongs to
/// eigenvalues[k].
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

namespace detail {

inline double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The phase of a(p,q) is absorbed
// into column q first, which leaves a real symmetric 2x2 pivot block:
//   V = diag(1, e^{-i phi}) * [[c, s], [-s, c]],   a(p,q) = |a(p,q)| e^{i phi}.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p,
                          std::size_t q) {
  const cplx apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const cplx phase = apq / g;  // e^{i phi}
  const cplx phase_c = std::conj(phase);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = a.rows();
  // A <- A V (columns p, q)
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = c * akp - s * phase_c * akq;
    a(k, q) = s * akp + c * phase_c * akq;
  }
  // A <- V^dagger A (rows p, q)
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = c * vkp - s * phase_c * vkq;
    v(k, q) = s * vkp + c * phase_c * vkq;
  }
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
/// Throws NotHermitian when the input is not Hermitian within tol::kHermitian.
inline Spectrum hermitian_eigendecomposition(const ComplexMatrix& input) {
  if (!input.is_square()) {
    throw NotHermitian("hermitian_eigendecomposition: matrix is " + input.shape());
  }
  const double defect = hermiticity_defect(input);
  if (!(defect <= tol::kHermitian)) {
    throw NotHermitian("hermitian_eigendecomposition: Hermiticity defect " +
                       std::to_string(defect));
  }
  const std::size_t n = input.rows();

  // Symmetrize exactly so the rotations act on a Hermitian matrix.
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = input(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const cplx x = 0.5 * (input(r, c) + std::conj(input(c, r)));
      a(r, c) = x;
      a(c, r) = std::conj(x);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = tol::kJacobiOffDiagonal * std::max(1.0, frobenius_norm(a));
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (detail::off_diagonal_mass(a) < threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  Spectrum out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

/// V diag(lambda) V^dagger
inline ComplexMatrix reconstruct(const Spectrum& s) {
  const ComplexMatrix& v = s.eigenvectors;
  return v * ComplexMatrix::diagonal(s.eigenvalues) * v.adjoint();
}

}  // namespace qidt
