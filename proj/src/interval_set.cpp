#include "cantorap/interval_set.hpp"

#include <algorithm>
#include <utility>

#include "cantorap/errors.hpp"

namespace cantorap {

namespace {

void check_unit_range(const Interval& iv) {
    if (iv.lo.sign() < 0 || iv.hi > Rational(1)) {
        throw InvalidInput("interval [" + iv.lo.str() + ", " + iv.hi.str() +
                           "] outside [0,1]");
    }
}

// Merge pass over intervals already sorted by lo. Touching components merge.
std::vector<Interval> merge_sorted(std::vector<Interval> ivs) {
    std::vector<Interval> out;
    out.reserve(ivs.size());
    for (auto& iv : ivs) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            if (out.back().hi < iv.hi) out.back().hi = std::move(iv.hi);
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

}  // namespace

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (hi < lo) {
        throw InvalidInput("interval with hi < lo: [" + lo.str() + ", " + hi.str() + "]");
    }
}

IntervalSet IntervalSet::canonicalize(std::vector<Interval> raw) {
    for (const auto& iv : raw) check_unit_range(iv);
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });
    IntervalSet s;
    s.comps_ = merge_sorted(std::move(raw));
    return s;
}

IntervalSet IntervalSet::from_canonical(std::vector<Interval> components) {
    for (std::size_t i = 0; i < components.size(); ++i) {
        check_unit_range(components[i]);
        if (i > 0 && !(components[i - 1].hi < components[i].lo)) {
            throw InvalidInput("component list not canonical at index " + std::to_string(i));
        }
    }
    IntervalSet s;
    s.comps_ = std::move(components);
    return s;
}

bool IntervalSet::contains(const Rational& x) const {
    // First component with lo > x; the candidate is its predecessor.
    auto it = std::upper_bound(comps_.begin(), comps_.end(), x,
                               [](const Rational& v, const Interval& iv) { return v < iv.lo; });
    if (it == comps_.begin()) return false;
    return x <= std::prev(it)->hi;
}

Rational IntervalSet::measure() const {
    Rational total;
    for (const auto& c : comps_) total += c.hi - c.lo;
    return total;
}

IntervalSet IntervalSet::clip(const Interval& w) const {
    // First component that ends at or after w.lo.
    auto it = std::lower_bound(comps_.begin(), comps_.end(), w.lo,
                               [](const Interval& iv, const Rational& v) { return iv.hi < v; });
    std::vector<Interval> out;
    for (; it != comps_.end() && it->lo <= w.hi; ++it) {
        out.emplace_back(max(it->lo, w.lo), min(it->hi, w.hi));
    }
    IntervalSet s;
    s.comps_ = std::move(out);
    return s;
}

long long IntervalSet::pack_count(const Rational& len) const {
    if (len.sign() <= 0) throw InvalidInput("pack length must be positive");
    mpz_class total = 0;
    for (const auto& c : comps_) {
        Rational q = (c.hi - c.lo) / len;
        total += q.floor();
    }
    if (!total.fits_slong_p()) throw InvalidInput("pack count exceeds integer range");
    return total.get_si();
}

std::vector<Interval> IntervalSet::pack_intervals(const Rational& len) const {
    if (len.sign() <= 0) throw InvalidInput("pack length must be positive");
    std::vector<Interval> out;
    for (const auto& c : comps_) {
        Rational q = (c.hi - c.lo) / len;
        mpz_class m = q.floor();
        Rational left = c.lo;
        for (mpz_class i = 0; i < m; ++i) {
            Rational right = left + len;
            out.emplace_back(left, right);
            left = std::move(right);
        }
    }
    return out;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    const auto& as = a.components();
    const auto& bs = b.components();
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < as.size() && j < bs.size()) {
        const Rational& lo = max(as[i].lo, bs[j].lo);
        const Rational& hi = min(as[i].hi, bs[j].hi);
        if (lo <= hi) out.emplace_back(lo, hi);
        // Advance the component that ends first; ties advance both.
        if (as[i].hi < bs[j].hi) {
            ++i;
        } else if (bs[j].hi < as[i].hi) {
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return IntervalSet::from_canonical(std::move(out));
}

IntervalSet translate_mod1(const IntervalSet& s, const Rational& a) {
    Rational shift = a.mod1();
    if (shift.is_zero()) return s;
    const Rational one(1);
    std::vector<Interval> pieces;
    pieces.reserve(s.component_count() + 1);
    for (const auto& c : s.components()) {
        Rational lo = c.lo + shift;
        Rational hi = c.hi + shift;
        // Full-wrap first: a degenerate piece landing exactly on the seam
        // resolves to the representative 0, matching the windowed builder.
        if (lo >= one) {
            pieces.emplace_back(lo - one, hi - one);
        } else if (hi <= one) {
            pieces.emplace_back(std::move(lo), std::move(hi));
        } else {
            pieces.emplace_back(std::move(lo), one);
            pieces.emplace_back(Rational(0), hi - one);
        }
    }
    return IntervalSet::canonicalize(std::move(pieces));
}

}  // namespace cantorap
