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

#include <stdexcept>
#include <string>

namespace qidt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QIDT_DEFINE_ERROR(Name)      \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  };

QIDT_DEFINE_ERROR(NotHermitian)
QIDT_DEFINE_ERROR(DimensionMismatch)
QIDT_DEFINE_ERROR(DimensionTooLarge)
QIDT_DEFINE_ERROR(NotADistribution)
QIDT_DEFINE_ERROR(InvalidState)
QIDT_DEFINE_ERROR(NotUnitary)
QIDT_DEFINE_ERROR(InvalidPovm)
QIDT_DEFINE_ERROR(OutOfRange)
QIDT_DEFINE_ERROR(UnsupportedCombination)
// Raised when an internal consistency identity fails. These indicate a bug,
// never a bad input.
QIDT_DEFINE_ERROR(TranslationInvarianceViolated)
QIDT_DEFINE_ERROR(SpectrumMismatch)
QIDT_DEFINE_ERROR(ParseError)
QIDT_DEFINE_ERROR(IoError)

#undef QIDT_DEFINE_ERROR

/// A config value failed validation. `field()` is the dotted path of the
/// offending entry, e.g. "attack.unitary".
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace qidt
