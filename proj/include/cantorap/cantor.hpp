#pragma once

#include "cantorap/interval_set.hpp"
#include "cantorap/rational.hpp"

namespace cantorap {

/// Parameters of the middle-1/N construction on [0,1]: at every stage each
/// component keeps its left and right pieces of relative length
/// ratio = (N-1)/(2N) and drops the open middle of relative length 1/N.
struct CantorParams {
    explicit CantorParams(int n);

    int N;
    Rational ratio;  // (N-1)/(2N)
};

/// A closed sub-interval of [0,1] restricting where construction happens.
struct Window {
    explicit Window(Interval iv);

    Interval interval;
};

/// Exact length of every gap removed when refining stage-(stage-1) components
/// to stage-`stage` ones: (1/N) * ratio^(stage-1). Strictly decreasing.
Rational gap_size(const CantorParams& p, int stage);

/// Largest L >= 1 with gap_size(L) >= delta, or 0 if even the first gap is
/// smaller. The coarse approximant that deletes all gaps of size >= delta is
/// exactly the stage-L set (ties delete).
int stage_for_delta(const CantorParams& p, const Rational& delta);

/// Stage-L set intersected with the window, computed by descending the
/// construction tree and pruning branches outside the window. Cost is
/// proportional to L times the output size, never to 2^L.
IntervalSet components_in_window(const CantorParams& p, int L, const Window& w);

/// (stage-for-delta set translated by a mod 1) intersected with the window.
/// The window is pulled back through the translation (splitting in at most
/// two at the 0/1 seam), built locally, and mapped forward.
IntervalSet approximant_in_window(const CantorParams& p, const Rational& delta,
                                  const Rational& a, const Window& w);

/// The full stage set for delta. Throws BudgetExceeded when its 2^L
/// components would exceed the budget; callers must then go windowed.
IntervalSet global_approximant(const CantorParams& p, const Rational& delta,
                               long long component_budget);

struct DistanceBound {
    Rational lower;
    Rational upper;
    bool exact;
};

/// Distance from x to the limit set of the construction. If x falls in a
/// removed gap within max_level stages (or hits a component endpoint, which
/// survives forever), the distance is exact. Otherwise x sits in a
/// level-max_level component and [0, ratio^max_level] brackets the distance.
DistanceBound distance_to_cantor(const CantorParams& p, const Rational& x, int max_level);

}  // namespace cantorap
