#pragma once

#include <gmpxx.h>

#include <vector>

#include "cantorap/cantor.hpp"
#include "cantorap/interval_set.hpp"

namespace cantorap {

/// Cap on how many stage-L gaps an interval of length ratio^k can meet:
/// 2^(L-k-1). Requires L > k >= 0.
mpz_class lemma_bound(int L, int k);

/// The gaps removed when refining the stage-(L-1) set to the stage-L set.
/// The intervals are stored with closed endpoints but represent open gaps;
/// hit counting uses open semantics (touching at an endpoint is not a hit).
struct StageGaps {
    int stage;
    Rational gap_length;          // every gap has exactly this length
    std::vector<Interval> gaps;   // 2^(stage-1) of them, increasing
    bool open_intervals = true;
};
StageGaps gaps_at_stage(const CantorParams& p, int L, long long component_budget);

struct SlideResult {
    long long max_count;
    Rational witness_position;  // leftmost position attaining the maximum
};

/// Exact maximum over positions q in [0, 1-jlen] of the number of gaps the
/// closed interval [q, q+jlen] meets (open-gap semantics). The count is
/// piecewise constant in q, so it is evaluated at every gap endpoint, every
/// gap endpoint minus jlen (clipped to range), and at midpoints between
/// consecutive such critical positions.
SlideResult max_hits_sliding(const std::vector<Interval>& gaps, const Rational& jlen);

/// 3 * 2^ceil(log_{2N/(N-1)} ceil(1/delta)), for 0 < delta <= 1. The outer
/// ceiling makes the exponent integral and only enlarges the bound; the
/// integer logarithm is found by exact rational power comparison.
mpz_class corollary_bound(const CantorParams& p, const Rational& delta);

/// Exact sliding maximum for the scaled instance: gaps of length exactly
/// delta/N^k (the unique stage with that gap size, if any) against a sliding
/// interval of length 1/N^k.
long long max_hits_scaled(const CantorParams& p, int k, const Rational& delta,
                          long long component_budget);

/// Per-translate cap on damaged subintervals per refinement step:
/// 9*N*ceil(log2 N) (exact when N is a power of two; the inequality chain
/// only needs an upper bound otherwise).
long long deletion_budget(long long N);

/// floor(N / (100 * log2 N)): the family size for which refinement is
/// guaranteed. Exact: powers of two use integer arithmetic; otherwise a
/// guarded floating-point bracket with an exact big-integer fallback
/// (m*100*log2(N) <= N iff N^(100m) <= 2^N) decides the floor.
long long max_translates(long long N);

}  // namespace cantorap
