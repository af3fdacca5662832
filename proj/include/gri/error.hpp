/*
   Copyright 2026 The gri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GRI_ERROR_HPP
#define GRI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gri {

enum class ErrorKind {
    // scalars
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    // algebras
    DescriptorMismatch,
    NotInvertible,
    InvalidAlgebra,
    InvalidAntiAutomorphism,
    NoWitnessFound,
    // free algebra
    AmbientMismatch,
    ZeroPolynomialDegree,
    MissingAssignment,
    // transforms
    ZeroPolynomial,
    BlendCollapsed,
    FreshVarCollision,
    VariableAbsent,
    Collapsed,
    NotSingleVariable,
    NotSigmaLinear,
    NoTopTwist,
    ArityMismatch,
    // rational
    BaseUndefined,
    BaseNonzero,
    ExhaustedSampling,
    // checker
    ExhaustiveTooLarge,
    NoneFound,
    InvalidInput,
    UnknownEntry,
    // parsing / cli
    ParseError,
    TwistOutOfRange,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the library. `kind()` is the
/// machine-readable part; `what()` carries a human-readable message.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace gri

#endif
