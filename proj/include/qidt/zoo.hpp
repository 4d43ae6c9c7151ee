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

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qidt/attack.hpp"
#include "qidt/bitstring.hpp"
#include "qidt/error.hpp"
#include "qidt/matrix.hpp"
#include "qidt/mub.hpp"
#include "qidt/rng.hpp"
#include "qidt/tolerances.hpp"

namespace qidt {

enum class AttackKind {
  Identity,
  PhaseConversion,
  InterceptResend,
  CnotProbe,
  ProbeOverlap,
  RandomUnitary,
};

struct AttackKindInfo {
  AttackKind kind;
  std::string_view name;
  std::size_t param_count;
  std::string_view description;
};

inline constexpr std::array<AttackKindInfo, 6> kAttackKinds{{
    {AttackKind::Identity, "identity", 0, "Eve does nothing; no apparatus (d_E = 1)"},
    {AttackKind::PhaseConversion, "phase_conversion", 0,
     "per-qubit |i> -> (-1)^i |i>, no apparatus (d_E = 1)"},
    {AttackKind::InterceptResend, "intercept_resend", 0,
     "measure every qubit in basis b and resend the result (d_E = 2^n)"},
    {AttackKind::CnotProbe, "cnot_probe", 0,
     "copy each qubit into a fresh ancilla qubit with a CNOT (d_E = 2^n)"},
    {AttackKind::ProbeOverlap, "probe_overlap", 1,
     "n = 1; pointers |0> and cos(theta)|0> + sin(theta)|1>; params = [theta]"},
    {AttackKind::RandomUnitary, "random_unitary", 0,
     "seeded random unitary on C^{d_E} (x) C^{2^n} with ancilla |0>"},
}};

inline const AttackKindInfo& attack_kind_info(AttackKind k) {
  for (const auto& info : kAttackKinds)
    if (info.kind == k) return info;
  throw UnsupportedCombination("unknown attack kind");
}

inline std::string_view to_string(AttackKind k) { return attack_kind_info(k).name; }

inline std::optional<AttackKind> parse_attack_kind(std::string_view name) {
  for (const auto& info : kAttackKinds)
    if (info.name == name) return info.kind;
  return std::nullopt;
}

struct AttackSpec {
  AttackKind kind = AttackKind::Identity;
  int n = 1;
  std::vector<double> params;
  std::size_t eve_dim = 1;  // random_unitary only
  std::uint64_t seed = 0;   // random_unitary only
};

/// Seeded random attack: a (eve_dim * 2^n)-dimensional random unitary with
/// ancilla |0>. Identical arguments give bit-identical tables.
inline AttackChannel random_attack(int n, std::size_t eve_dim, std::uint64_t seed) {
  require_qubit_count(n, "random_attack");
  if (eve_dim == 0) throw DimensionMismatch("random_attack: eve_dim must be >= 1");
  const std::size_t dim = eve_dim * qubit_dim(n);
  if (dim > kMaxJointDim)
    throw DimensionTooLarge("random_attack: joint dimension " + std::to_string(dim) +
                            " exceeds " + std::to_string(kMaxJointDim));
  SplitMix64 rng(seed);
  return from_unitary(random_unitary(dim, rng), StateVector::basis(eve_dim, 0), n);
}

namespace detail {

// kraus[i][j] = delta_ij * pointer(i)
template <typename Pointer>
AttackChannel diagonal_attack(int n, std::size_t eve_dim, Pointer pointer) {
  const std::size_t d = qubit_dim(n);
  std::vector<StateVector> table(d * d, StateVector(eve_dim));
  for (std::size_t i = 0; i < d; ++i) table[i * d + i] = pointer(i);
  return AttackChannel(n, eve_dim, std::move(table));
}

// |e, i> -> |e xor i, i> on C^{2^n} (x) C^{2^n}: one CNOT per qubit from the
// system into its own ancilla qubit.
inline ComplexMatrix cnot_copy_unitary(int n) {
  const std::size_t d = qubit_dim(n);
  ComplexMatrix u(d * d, d * d);
  for (std::size_t e = 0; e < d; ++e)
    for (std::size_t i = 0; i < d; ++i) u((e ^ i) * d + i, e * d + i) = 1.0;
  return u;
}

}  // namespace detail

inline AttackChannel make_attack(const AttackSpec& spec) {
  require_qubit_count(spec.n, "make_attack");
  const auto& info = attack_kind_info(spec.kind);
  if (spec.params.size() != info.param_count)
    throw UnsupportedCombination("make_attack: " + std::string(info.name) + " takes " +
                                 std::to_string(info.param_count) + " parameter(s), got " +
                                 std::to_string(spec.params.size()));
  const int n = spec.n;
  const std::size_t d = qubit_dim(n);
  switch (spec.kind) {
    case AttackKind::Identity:
      return detail::diagonal_attack(n, 1, [](std::size_t) { return StateVector{1.0}; });
    case AttackKind::PhaseConversion:
      return detail::diagonal_attack(n, 1, [](std::size_t i) {
        return StateVector{hamming_weight(i) % 2 ? -1.0 : 1.0};
      });
    case AttackKind::InterceptResend:
      return detail::diagonal_attack(n, d, [d](std::size_t i) { return StateVector::basis(d, i); });
    case AttackKind::CnotProbe:
      return from_unitary(detail::cnot_copy_unitary(n), StateVector::basis(d, 0), n);
    case AttackKind::ProbeOverlap: {
      if (n != 1)
        throw UnsupportedCombination("make_attack: probe_overlap is defined for n = 1 only");
      const double theta = spec.params[0];
      if (!std::isfinite(theta)) throw OutOfRange("make_attack: theta must be finite");
      return detail::diagonal_attack(1, 2, [theta](std::size_t i) {
        return i == 0 ? StateVector{1.0, 0.0} : StateVector{std::cos(theta), std::sin(theta)};
      });
    }
    case AttackKind::RandomUnitary:
      return random_attack(n, spec.eve_dim, spec.seed);
  }
  throw UnsupportedCombination("make_attack: unknown attack kind");
}

}  // namespace qidt
