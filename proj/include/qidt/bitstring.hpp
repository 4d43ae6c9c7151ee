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

#include <bit>
#include <cstdint>
#include <string>

#include "qidt/error.hpp"

namespace qidt {

/// An n-bit string. Bit k (0-based from the left) is qubit k+1, so the first
/// qubit is the most significant bit of `value`.
class BitString {
 public:
  BitString(int n, std::uint64_t value) : n_(n), value_(value) {
    if (n < 0 || n > 63) throw OutOfRange("BitString: width out of range");
    if (value >= (std::uint64_t{1} << n)) {
      throw OutOfRange("BitString: value " + std::to_string(value) +
                       " does not fit in " + std::to_string(n) + " bits");
    }
  }

  int size() const noexcept { return n_; }
  std::uint64_t value() const noexcept { return value_; }
  std::size_t index() const noexcept { return static_cast<std::size_t>(value_); }

  /// Bit of qubit k, k in [0, n). Qubit 0 is the most significant.
  int bit(int k) const noexcept {
    return static_cast<int>((value_ >> (n_ - 1 - k)) & 1U);
  }

  friend BitString operator^(const BitString& a, const BitString& b) {
    check_same_width(a, b);
    return BitString(a.n_, a.value_ ^ b.value_);
  }

  friend bool operator==(const BitString&, const BitString&) = default;

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int k = 0; k < n_; ++k) s[static_cast<std::size_t>(k)] = bit(k) ? '1' : '0';
    return s;
  }

 private:
  static void check_same_width(const BitString& a, const BitString& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("BitString: width mismatch");
  }

  int n_;
  std::uint64_t value_;
};

/// Bit-wise product summed mod 2.
inline int dot(std::uint64_t a, std::uint64_t b) noexcept {
  return std::popcount(a & b) & 1;
}

inline int dot(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw DimensionMismatch("BitString: width mismatch");
  return dot(a.value(), b.value());
}

/// (-1)^(a.b) as a double.
inline double parity_sign(std::uint64_t a, std::uint64_t b) noexcept {
  return dot(a, b) ? -1.0 : 1.0;
}

inline int hamming_weight(std::uint64_t a) noexcept { return std::popcount(a); }

}  // namespace qidt
