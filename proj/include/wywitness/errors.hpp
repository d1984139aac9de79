// Copyright 2026 the wywitness authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wywitness {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input matrix failed the Hermiticity check.
struct NonHermitianInput : Error {
    using Error::Error;
};

/// Operator/state dimensions are incompatible.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Density matrix violates trace/Hermiticity/positivity requirements of the
/// requested operation.
struct InvalidState : Error {
    using Error::Error;
};

/// State-family parameter outside its admissible domain.
struct ParamOutOfRange : Error {
    using Error::Error;
};

/// Amplitudes do not form a normalized state vector.
struct NotNormalized : Error {
    using Error::Error;
};

/// Textual input (observable string, state spec, file) could not be parsed.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what), position(pos) {}
    explicit ParseError(const std::string& what) : Error(what), position(0) {}
    std::size_t position;
};

/// Threshold search bracket has the same verdict at both endpoints.
struct NoSignChange : Error {
    using Error::Error;
};

/// Numerical routine failed to converge or produced inconsistent results.
struct NumericalFailure : Error {
    using Error::Error;
};

}  // namespace wywitness
