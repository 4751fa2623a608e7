#pragma once

#include <stdexcept>
#include <string>

namespace mcf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-facing input: parse failures, invalid primes, arity mismatches.
struct InvalidInput : Error {
    using Error::Error;
};

// Internal contract violations that should be unreachable on valid data.
struct InternalCheckFailure : Error {
    using Error::Error;
};

// An algebraic value needs a deeper p-adic embedding before the requested
// quantity (digit, valuation, s-value) is certified. Retryable: re-lift the
// embedding to at least `needed_error_valuation` and call again.
struct InsufficientPrecision : Error {
    long needed_error_valuation;
    explicit InsufficientPrecision(long needed)
        : Error("insufficient embedding precision, need error valuation >= " +
                std::to_string(needed)),
          needed_error_valuation(needed) {}
};

struct PrecisionCeilingExceeded : Error {
    using Error::Error;
};

struct SeedDoesNotSeparate : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct NotDominantSeparated : Error {
    using Error::Error;
};

struct NonIntegerS : Error {
    using Error::Error;
};

struct NullspaceDimensionUnexpected : Error {
    using Error::Error;
};

struct WrongShape : Error {
    using Error::Error;
};

}  // namespace mcf
