#pragma once

// Error taxonomy shared by all torsionkit components.

#include <array>
#include <stdexcept>
#include <string>

namespace torsionkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A ring-axiom violation found while validating multiplication/addition tables.
// `witness` holds the offending elements; unused slots are -1.
struct AxiomViolation {
    std::string kind;              // NotAGroup | NoUnit | NotAssociative | NotDistributive
    std::string law;               // the concrete law instance that failed
    std::array<int, 3> witness{-1, -1, -1};
};

struct RingValidationError : Error {
    AxiomViolation violation;
    explicit RingValidationError(AxiomViolation v)
        : Error(v.kind + ": " + v.law), violation(std::move(v)) {}
};

struct OrderCapExceeded : Error {
    using Error::Error;
};

struct SearchBudgetExceeded : Error {
    using Error::Error;
};

struct LatticeTooLarge : Error {
    using Error::Error;
};

struct NotIdempotent : Error {
    using Error::Error;
};

struct NotCentral : Error {
    using Error::Error;
};

struct IllFormed : Error {
    using Error::Error;
};

struct RankMismatch : Error {
    using Error::Error;
};

struct MalformedGroup : Error {
    using Error::Error;
};

struct NoWitness : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace torsionkit
