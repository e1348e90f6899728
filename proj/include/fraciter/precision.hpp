#pragma once

#include <mpfr.h>

#include "fraciter/errors.hpp"

namespace fraciter {

// Precision contract shared by every numeric operation.
//
// All arithmetic runs at working_digits = target_digits + guard_digits
// decimal digits.  Results are rendered at target_digits; the guard digits
// absorb roundoff and the O(s^k) tail of limit processes.  Any iterative
// computation must converge within max_iterations or throw
// NonConvergenceError.
struct PrecisionContext {
    int target_digits;
    int guard_digits;
    long max_iterations;

    PrecisionContext(int target, int guard, long max_iter)
        : target_digits(target), guard_digits(guard), max_iterations(max_iter) {
        if (target < 1) throw DomainError("target_digits must be positive");
        if (guard < 15) throw DomainError("guard_digits must be at least 15");
        if (max_iter < 1) throw DomainError("max_iterations must be positive");
    }

    // Default policy: guard = max(15, 0.1 * expected iteration count) where
    // the expectation uses the slowest convergence rate in the catalog
    // (multiplier 1/ln 4, about 0.142 digits gained per iteration).
    static PrecisionContext for_digits(int target) {
        const double slowest_rate = 0.14182;  // -log10(1/ln 4)
        long expected = static_cast<long>(target / slowest_rate) + 1;
        int guard = 15;
        if (expected / 10 + 1 > guard) guard = static_cast<int>(expected / 10 + 1);
        long cap = 2000;
        if (40L * target > cap) cap = 40L * target;
        return PrecisionContext(target, guard, cap);
    }

    int working_digits() const { return target_digits + guard_digits; }

    mpfr_prec_t working_bits() const { return bits_for_digits(working_digits()); }

    // Agreement threshold for successive estimates of a limit:
    // target + guard/2 decimal digits.
    int stop_digits() const { return target_digits + (guard_digits + 1) / 2; }

    PrecisionContext with_guard_doubled() const {
        return PrecisionContext(target_digits, 2 * guard_digits, max_iterations);
    }

    static mpfr_prec_t bits_for_digits(int digits) {
        // log2(10) = 3.3219...; pad a word so decimal round-trips are exact.
        return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 16.0);
    }
};

}  // namespace fraciter
