// Copyright 2026 The crtft Authors
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

namespace crtft {

/// Violation of a mathematical precondition (bad moduli, wrong lengths, ...).
/// The CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input that never reached the math (unparsable numbers, bad CSV,
/// unknown function names). The CLI maps these to exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotCoprime : DomainError {
    using DomainError::DomainError;
};

struct InvalidModulus : DomainError {
    using DomainError::DomainError;
};

struct NotPairwiseCoprime : DomainError {
    using DomainError::DomainError;
};

struct ResidueOutOfRange : DomainError {
    using DomainError::DomainError;
};

struct EmptyInput : DomainError {
    using DomainError::DomainError;
};

struct NotPowerOfTwo : DomainError {
    using DomainError::DomainError;
};

struct FactorsNotCoprime : DomainError {
    using DomainError::DomainError;
};

struct LengthMismatch : DomainError {
    using DomainError::DomainError;
};

struct NonFiniteSample : DomainError {
    using DomainError::DomainError;
};

struct ParseError : UsageError {
    using UsageError::UsageError;
};

struct UnknownFunction : UsageError {
    using UsageError::UsageError;
};

}  // namespace crtft
