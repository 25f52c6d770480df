#include "cantorap/cantor.hpp"

#include <string>
#include <utility>
#include <vector>

#include "cantorap/errors.hpp"

namespace cantorap {

namespace {

// ratio^0 .. ratio^L
std::vector<Rational> ratio_powers(const CantorParams& p, int L) {
    std::vector<Rational> pows;
    pows.reserve(static_cast<std::size_t>(L) + 1);
    pows.emplace_back(1);
    for (int j = 1; j <= L; ++j) pows.push_back(pows.back() * p.ratio);
    return pows;
}

}  // namespace

CantorParams::CantorParams(int n) : N(n), ratio(n - 1, 2L * n) {
    // N = 2 degenerates (the "middle half" leaves nothing to estimate against).
    if (n < 3) throw InvalidInput("N must be >= 3, got " + std::to_string(n));
}

Window::Window(Interval iv) : interval(std::move(iv)) {
    if (interval.lo.sign() < 0 || interval.hi > Rational(1)) {
        throw InvalidInput("window [" + interval.lo.str() + ", " + interval.hi.str() +
                           "] outside [0,1]");
    }
}

Rational gap_size(const CantorParams& p, int stage) {
    if (stage < 1) throw InvalidInput("gap stage must be >= 1");
    return Rational(1, p.N) * Rational::pow(p.ratio, static_cast<unsigned long>(stage - 1));
}

int stage_for_delta(const CantorParams& p, const Rational& delta) {
    if (delta.sign() <= 0) throw InvalidInput("delta must be positive");
    int L = 0;
    Rational gap(1, p.N);  // gap_size(1)
    while (gap >= delta) {
        ++L;
        gap *= p.ratio;
    }
    return L;
}

IntervalSet components_in_window(const CantorParams& p, int L, const Window& w) {
    if (L < 0) throw InvalidInput("stage must be >= 0");
    const auto pows = ratio_powers(p, L);
    const Interval& win = w.interval;

    struct Node {
        int level;
        Rational lo;
        Rational hi;
    };
    std::vector<Interval> out;
    std::vector<Node> stack;
    stack.push_back({0, Rational(0), Rational(1)});
    while (!stack.empty()) {
        Node n = std::move(stack.back());
        stack.pop_back();
        if (n.hi < win.lo || win.hi < n.lo) continue;
        if (n.level == L) {
            out.emplace_back(max(n.lo, win.lo), min(n.hi, win.hi));
            continue;
        }
        const Rational& child_len = pows[static_cast<std::size_t>(n.level) + 1];
        Rational left_hi = n.lo + child_len;
        Rational right_lo = n.hi - child_len;
        // Right pushed first so the left branch is explored first: output
        // comes out already sorted.
        stack.push_back({n.level + 1, std::move(right_lo), std::move(n.hi)});
        stack.push_back({n.level + 1, std::move(n.lo), std::move(left_hi)});
    }
    return IntervalSet::from_canonical(std::move(out));
}

IntervalSet approximant_in_window(const CantorParams& p, const Rational& delta,
                                  const Rational& a, const Window& w) {
    const int L = stage_for_delta(p, delta);
    const Rational shift = a.mod1();
    if (shift.is_zero()) {
        return components_in_window(p, L, w);
    }

    // Pull the window back by the shift; it may straddle the 0/1 seam and
    // split in two.
    const Rational one(1);
    Rational lo = w.interval.lo - shift;
    Rational hi = w.interval.hi - shift;
    std::vector<Interval> back;
    if (lo.sign() >= 0) {
        back.emplace_back(std::move(lo), std::move(hi));
    } else if (hi.sign() <= 0) {
        back.emplace_back(lo + one, hi + one);
    } else {
        back.emplace_back(Rational(0), std::move(hi));
        back.emplace_back(lo + one, one);
    }

    std::vector<Interval> pieces;
    for (const auto& bw : back) {
        IntervalSet local = components_in_window(p, L, Window(bw));
        IntervalSet shifted = translate_mod1(local, shift);
        const auto& cs = shifted.components();
        pieces.insert(pieces.end(), cs.begin(), cs.end());
    }
    return IntervalSet::canonicalize(std::move(pieces)).clip(w.interval);
}

IntervalSet global_approximant(const CantorParams& p, const Rational& delta,
                               long long component_budget) {
    const int L = stage_for_delta(p, delta);
    if (L >= 62 || (1LL << L) > component_budget) {
        throw BudgetExceeded("stage " + std::to_string(L) + " set has 2^" + std::to_string(L) +
                             " components, over budget " + std::to_string(component_budget));
    }
    return components_in_window(p, L, Window(IntervalSet::unit_interval()));
}

DistanceBound distance_to_cantor(const CantorParams& p, const Rational& x, int max_level) {
    if (x.sign() < 0 || x > Rational(1)) throw InvalidInput("point outside [0,1]");
    if (max_level < 1) throw InvalidInput("max_level must be >= 1");

    Rational lo(0), hi(1);
    Rational len(1);  // current component length, ratio^level
    for (int level = 0; level < max_level; ++level) {
        // Component endpoints survive every later stage.
        if (x == lo || x == hi) return {Rational(0), Rational(0), true};
        len *= p.ratio;
        Rational left_hi = lo + len;
        Rational right_lo = hi - len;
        if (x <= left_hi) {
            hi = std::move(left_hi);
        } else if (x >= right_lo) {
            lo = std::move(right_lo);
        } else {
            // Inside the removed gap; both gap endpoints belong to the set.
            Rational d = min(x - left_hi, right_lo - x);
            return {d, d, true};
        }
    }
    if (x == lo || x == hi) return {Rational(0), Rational(0), true};
    return {Rational(0), len, false};
}

}  // namespace cantorap
