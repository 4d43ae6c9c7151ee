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
#include <cstdint>
#include <numbers>
#include <utility>

#include "qidt/matrix.hpp"

namespace qidt {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// Folds `v` into the hash state `h`.
constexpr std::uint64_t combine_seed(std::uint64_t h, std::uint64_t v) noexcept {
  return mix64(h + kGoldenGamma * (v + 1));
}

/// Seed of the k-th random attack in campaign cell (n, eve_dim).
constexpr std::uint64_t campaign_sub_seed(std::uint64_t master, std::uint64_t n,
                                          std::uint64_t eve_dim, std::uint64_t k) noexcept {
  return combine_seed(combine_seed(combine_seed(mix64(master), n), eve_dim), k);
}

/// SplitMix64 generator. The format of every derived quantity is documented in
/// docs/rng.md so other implementations can reproduce ensembles bit-for-bit.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Two independent standard normals (Box-Muller). Consumes two outputs.
  std::pair<double, double> normal_pair() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

  /// Complex number with independent N(0,1) real and imaginary parts.
  cplx complex_normal() {
    const auto [re, im] = normal_pair();
    return {re, im};
  }

 private:
  std::uint64_t state_;
};

/// Orthonormalizes the columns of `m` in place by Gram-Schmidt with one
/// re-orthogonalization pass. `m` must be square and of full rank.
inline void orthonormalize_columns(ComplexMatrix& m) {
  const std::size_t rows = m.rows();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        cplx proj = 0.0;
        for (std::size_t r = 0; r < rows; ++r) proj += std::conj(m(r, prev)) * m(r, c);
        for (std::size_t r = 0; r < rows; ++r) m(r, c) -= proj * m(r, prev);
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < rows; ++r) norm += std::norm(m(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) /= norm;
  }
}

/// Random unitary: a dim x dim matrix of complex normals drawn in row-major
/// order, then column-orthonormalized.
inline ComplexMatrix random_unitary(std::size_t dim, SplitMix64& rng) {
  ComplexMatrix m(dim, dim);
  for (auto& x : m.entries()) x = rng.complex_normal();
  orthonormalize_columns(m);
  return m;
}

}  // namespace qidt
