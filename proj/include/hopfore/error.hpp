/*
   Copyright 2026 The hopfore Authors

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

#ifndef HOPFORE_ERROR_HPP
#define HOPFORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hopfore {

enum class ErrorKind {
    DivisionByZero,
    OrderMismatch,
    ShapeMismatch,
    SingularSystem,
    InvalidParameter,
    InvalidGroup,
    NotCentral,
    TrivialQ,
    IncompleteSimpleList,
    NotIrreducible,
    UnknownLabel,
    ZeroBeta,
    AlgebraMismatch,
    NonIntegerMultiplicity,
    CandidatePoolIncomplete,
    NotFusionReady,
    InternalInconsistency,
    RingMismatch,
    UnsupportedLabel,
    SyntaxError,
    Overflow,
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::OrderMismatch: return "OrderMismatch";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::InvalidGroup: return "InvalidGroup";
        case ErrorKind::NotCentral: return "NotCentral";
        case ErrorKind::TrivialQ: return "TrivialQ";
        case ErrorKind::IncompleteSimpleList: return "IncompleteSimpleList";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::ZeroBeta: return "ZeroBeta";
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
        case ErrorKind::CandidatePoolIncomplete: return "CandidatePoolIncomplete";
        case ErrorKind::NotFusionReady: return "NotFusionReady";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::UnsupportedLabel: return "UnsupportedLabel";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a kind that
/// callers (and tests) can branch on.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace hopfore

#endif
