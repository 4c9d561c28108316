// Copyright 2026 The numix Authors
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

namespace numix {

/// Base class for every error raised by the library.
class NumixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A non-finite rotation angle was supplied.
class InvalidAngleError : public NumixError {
 public:
  using NumixError::NumixError;
};

/// Qubit or basis-state indices violate a structural invariant.
class StructuralError : public NumixError {
 public:
  using NumixError::NumixError;
};

/// The request is well formed but outside what the routine supports.
class UnsupportedError : public NumixError {
 public:
  using NumixError::NumixError;
};

/// Physical configuration (energies, masses, noise rates, shots) is invalid.
class InvalidConfigError : public NumixError {
 public:
  using NumixError::NumixError;
};

/// A circuit cannot be written to or read from OpenQASM.
class QasmError : public NumixError {
 public:
  using NumixError::NumixError;
};

}  // namespace numix
