#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cantorap {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad rational string, interval outside
// [0,1], wrong interval length, zero denominator, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A global construction would exceed the caller-supplied component budget.
// Signals that the windowed code path must be used instead.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// No construction stage removes gaps of the requested exact length.
class NoSuchGapLength : public Error {
public:
    using Error::Error;
};

// The unit interval itself is not 0-good for the given family.
class BaseCaseFailed : public Error {
public:
    BaseCaseFailed(std::string msg, long long witness_count, long long threshold)
        : Error(std::move(msg)), witness_count(witness_count), threshold(threshold) {}

    long long witness_count;
    long long threshold;
};

// No block of the current witness list refines to the next level.
// block_counts holds the per-block surviving pack counts, in scan order;
// partial_chain records the good intervals reached before the failure.
class RefinementFailed : public Error {
public:
    struct PartialChainEntry {
        int k;
        std::string j_lo;
        std::string j_hi;
        long long witness_count;
    };

    RefinementFailed(std::string msg, int k, std::vector<long long> block_counts,
                     long long family_size, long long guaranteed_translates)
        : Error(std::move(msg)),
          k(k),
          block_counts(std::move(block_counts)),
          family_size(family_size),
          guaranteed_translates(guaranteed_translates) {}

    int k;
    std::vector<long long> block_counts;
    long long family_size;
    long long guaranteed_translates;
    std::vector<PartialChainEntry> partial_chain;
};

}  // namespace cantorap
