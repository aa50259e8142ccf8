#pragma once

#include "eulersum/words.hpp"

#include <cstdint>

namespace eulersum {

struct NumericResult {
    double value = 0.0;
    double error_estimate = 0.0;  // |S_{2N} - S_N| of the accepted doubling step
    std::uint64_t terms_used = 0;
};

/// Truncated defining series of an alternating Euler sum, all outer indices
/// <= N. Runs in O(depth * N) time and O(depth) memory by folding iterated
/// cumulative sums from the innermost component outward, with compensated
/// accumulation throughout. Requires N >= depth.
double eval_word(const EulerWord& w, std::uint64_t n_terms);

/// Evaluate at N and 2N, doubling N from 2^16 while the difference
/// |S_{2N} - S_N| is at least tol; gives up at 2^24 terms and returns the
/// best value with error_estimate >= tol so the caller can decide.
/// Requires tol >= 1e-12.
NumericResult eval_word_refined(const EulerWord& w, double tol);

/// Sum of eval_word_refined over restricted_words(n, d, alpha). Member
/// evaluations run concurrently; the reduction walks members in sorted word
/// order, so results are bit-identical regardless of parallelism.
/// error_estimate adds up the member estimates.
NumericResult restricted_sum_numeric(unsigned n, unsigned d, unsigned alpha, double tol);

/// Same for the xi-type index set {xi_word(c) : c composition of n, depth d}.
NumericResult xi_sum_numeric(unsigned n, unsigned d, double tol);

/// Tolerance policy for the verification suites: 1e-8 from weight 6 up,
/// relaxed to 1e-5 below that (weight-4 and weight-2 non-alternating words
/// have the slowest tails).
double default_tol(unsigned weight);

}  // namespace eulersum
