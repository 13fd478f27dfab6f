#pragma once

#include <stdexcept>
#include <string>

namespace kac {

enum class ErrorKind {
    DivisionByZero,
    PoleAtZero,
    NotAPolynomial,
    LoopEdge,
    BadIndex,
    NegativeMultiplicity,
    BadDocument,
    BoundMismatch,
    NonzeroConstantTerm,
    BadConstantTerm,
    NonIntegral,
    DegenerateRecursion,
    BudgetExceeded,
    ConsistencyFailure,
    BadConfig,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::NotAPolynomial: return "NotAPolynomial";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::BadDocument: return "BadDocument";
    case ErrorKind::BoundMismatch: return "BoundMismatch";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::DegenerateRecursion: return "DegenerateRecursion";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::BadConfig: return "BadConfig";
    }
    return "UnknownError";
}

} // namespace kac
