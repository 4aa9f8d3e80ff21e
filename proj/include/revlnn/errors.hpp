// Copyright 2026 The revlnn authors
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

namespace revlnn {

/// Base class for all revlnn errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A gate definition violates a structural invariant (duplicate lines,
/// control equal to target, ...).
class InvalidGate : public Error {
 public:
  using Error::Error;
};

/// A two-qubit gate fired while its control line held V0 or V1. The circuit
/// is not a valid Boolean-reversible realization on that input.
class ControlNotBoolean : public Error {
 public:
  using Error::Error;
};

/// An elementary circuit produced a non-Boolean output or tripped a control
/// violation somewhere over the Boolean input space.
class NotBooleanReversible : public Error {
 public:
  using Error::Error;
};

/// A supplied line mapping is not a bijection on {0..n-1}.
class NotABijection : public Error {
 public:
  using Error::Error;
};

/// Two circuits of different widths were compared.
class WidthMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation expecting one gate layer (reversible or elementary) was
/// handed the other one.
class LayerMismatch : public Error {
 public:
  using Error::Error;
};

/// Base for `.real` parsing failures; carries the 1-based source line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownGate : public ParseError {
 public:
  using ParseError::ParseError;
};

class ArityMismatch : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Reversible-only and elementary-only gate mnemonics appear in one file.
class MixedLayers : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A multiple-control Toffoli cannot be decomposed: with m >= 3 controls the
/// construction needs at least one line not touched by the gate.
class InsufficientFreeLines : public Error {
 public:
  using Error::Error;
};

/// A macro failed its load- or splice-time simulation check.
class MacroVerificationFailed : public Error {
 public:
  using Error::Error;
};

/// Exact synthesis exhausted its gate-count budget without a realization.
class SynthesisNotFound : public Error {
 public:
  explicit SynthesisNotFound(unsigned max_cost)
      : Error("no realization within " + std::to_string(max_cost) + " gates"),
        max_cost_(max_cost) {}

  unsigned max_cost() const { return max_cost_; }

 private:
  unsigned max_cost_;
};

}  // namespace revlnn
