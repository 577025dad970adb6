// Error types shared across the library. Each maps to one failure mode of a
// public operation; exact-arithmetic failures (NotDivisible in particular)
// double as falsification signals for identities the suites check.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace umemura {

// A division in Q[r][t] left a nonzero remainder. Raised from the sigma
// recurrence or the Hankel quotient it means a polynomiality claim failed.
struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact_div only accepts divisors whose leading t-coefficient is a rational
// constant; anything else would require pseudo-division.
struct UnsupportedDivisor : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what), position(pos) {}
};

struct InsufficientEntries : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleAtSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepUnderflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroY1 : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Kummer M is undefined for b in {0, -1, -2, ...}.
struct InvalidB : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The second Kummer solution degenerates (logarithmic case) for integer b.
struct IntegerB : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutsideDisk : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The HeunC power-series recurrence divides by (n+1)(n+beta+1); a negative
// integer beta makes the analytic-at-0 solution degenerate.
struct InvalidBeta : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IrregularPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VersionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CorruptCache : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace umemura
