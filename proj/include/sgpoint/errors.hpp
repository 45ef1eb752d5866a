/* Copyright 2026 The sgpoint Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#ifndef SGPOINT_ERRORS_HPP
#define SGPOINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgp {

enum class ErrorKind {
    TowerMismatch,
    NotSquarefree,
    NotMonic,
    ZeroDivisor,
    DivisionByZero,
    Unresolved,
    DegreeTooHigh,
    CoincidentPoints,
    SingularTransform,
    SingularConic,
    CoincidentConics,
    NotHomogeneous,
    Parse,
    UnknownGenerator,
    MixedDegrees,
    NoCandidateSource,
    Internal,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::TowerMismatch: return "TowerMismatch";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::ZeroDivisor: return "ZeroDivisor";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::Unresolved: return "Unresolved";
        case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorKind::CoincidentPoints: return "CoincidentPoints";
        case ErrorKind::SingularTransform: return "SingularTransform";
        case ErrorKind::SingularConic: return "SingularConic";
        case ErrorKind::CoincidentConics: return "CoincidentConics";
        case ErrorKind::NotHomogeneous: return "NotHomogeneous";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::MixedDegrees: return "MixedDegrees";
        case ErrorKind::NoCandidateSource: return "NoCandidateSource";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

/// Raised when an extended gcd against a reducible modulus uncovers a factor.
/// The factor is carried along so callers can split the modulus.
class ZeroDivisorError : public Error {
  public:
    explicit ZeroDivisorError(const std::string& factor)
        : Error(ErrorKind::ZeroDivisor, "nonunit with factor " + factor), factor_(factor) {}
    const std::string& factor() const { return factor_; }

  private:
    std::string factor_;
};

/// A computation that cannot be completed inside the reachable field tower.
/// Carries the offending polynomial (or a description) for diagnostics.
class UnresolvedError : public Error {
  public:
    explicit UnresolvedError(const std::string& what)
        : Error(ErrorKind::Unresolved, what) {}
};

class ParseError : public Error {
  public:
    ParseError(std::size_t position, const std::string& msg)
        : Error(ErrorKind::Parse, msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

}  // namespace sgp

#endif  // SGPOINT_ERRORS_HPP
