#pragma once

#include <cstddef>
#include <vector>

#include "cantorap/rational.hpp"

namespace cantorap {

/// Closed rational interval [lo, hi]; lo == hi is a valid point interval.
struct Interval {
    Interval(Rational lo, Rational hi);

    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

    bool operator==(const Interval&) const = default;

    Rational lo;
    Rational hi;
};

/// Canonical finite union of disjoint closed intervals inside [0,1].
///
/// Canonical form: components sorted by lo, pairwise disjoint with strictly
/// positive gaps between consecutive components (touching inputs merge).
/// Values are immutable once built; every operation is a pure function, so
/// concurrent use needs no synchronization.
class IntervalSet {
public:
    IntervalSet() = default;  // empty set

    /// Sorts, merges overlapping/touching intervals. Rejects anything
    /// outside [0,1]. Idempotent and independent of input order.
    static IntervalSet canonicalize(std::vector<Interval> raw);

    /// Adopts a component list that is already canonical; validated.
    static IntervalSet from_canonical(std::vector<Interval> components);

    static IntervalSet unit() { return from_canonical({unit_interval()}); }
    static Interval unit_interval() { return {Rational(0), Rational(1)}; }

    const std::vector<Interval>& components() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    std::size_t component_count() const { return comps_.size(); }

    bool contains(const Rational& x) const;

    /// Sum of component lengths.
    Rational measure() const;

    /// This set intersected with a single closed interval (window restriction).
    IntervalSet clip(const Interval& w) const;

    /// Number of interior-disjoint length-`len` closed intervals that fit:
    /// sum over components of floor(length / len).
    long long pack_count(const Rational& len) const;

    /// The packed intervals themselves, greedy left-aligned per component.
    /// Size equals pack_count(len); each is contained in this set.
    std::vector<Interval> pack_intervals(const Rational& len) const;

    bool operator==(const IntervalSet&) const = default;

private:
    std::vector<Interval> comps_;
};

/// x in result iff x in a and x in b. Linear two-pointer sweep.
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);

/// Translation on the unit circle: each component shifts by a (reduced mod 1)
/// and at most one component wraps and splits at the 0/1 seam. Measure is
/// preserved exactly. The circle identifies 0 with 1, which [0,1] cannot: a
/// degenerate piece landing exactly on the seam resolves to the
/// representative 0, and a redundant second copy of the seam point is
/// absorbed. Membership on the circle is exact; translating back by 1-a
/// restores s whenever s carries no degenerate seam component.
IntervalSet translate_mod1(const IntervalSet& s, const Rational& a);

}  // namespace cantorap
