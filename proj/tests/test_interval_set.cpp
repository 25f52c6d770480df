#include <doctest.h>

#include <algorithm>

#include "cantorap/errors.hpp"
#include "cantorap/interval_set.hpp"
#include "support/test_support.hpp"

using namespace cantorap;
namespace ts = cantorap::testsupport;

namespace {

Interval iv(long a, long b, long c, long d) { return {Rational(a, b), Rational(c, d)}; }

IntervalSet make(std::initializer_list<Interval> list) {
    return IntervalSet::canonicalize(std::vector<Interval>(list));
}

}  // namespace

TEST_CASE("interval invariants") {
    CHECK_THROWS_AS(Interval(Rational(1, 2), Rational(1, 3)), InvalidInput);
    Interval point(Rational(1, 3), Rational(1, 3));
    CHECK(point.length() == Rational(0));
    CHECK(point.contains(Rational(1, 3)));
}

TEST_CASE("canonicalize merges touching intervals and sorts") {
    CHECK(make({iv(0, 1, 1, 3), iv(1, 3, 1, 2)}) == make({iv(0, 1, 1, 2)}));
    CHECK(IntervalSet::canonicalize({}) == IntervalSet());
    CHECK(make({iv(1, 2, 5, 6), iv(1, 6, 1, 2)}) == make({iv(1, 6, 5, 6)}));
    CHECK_THROWS_AS(IntervalSet::canonicalize({Interval(Rational(-1, 2), Rational(0))}),
                    InvalidInput);
    CHECK_THROWS_AS(IntervalSet::canonicalize({Interval(Rational(1, 2), Rational(3, 2))}),
                    InvalidInput);
}

TEST_CASE("canonicalize is idempotent and order-independent") {
    ts::Rng rng(ts::seed_from_env());
    for (int c = 0; c < 300; ++c) {
        auto raw = rng.raw_intervals(rng.integer(0, 8), 60);
        IntervalSet s = IntervalSet::canonicalize(raw);
        CHECK(IntervalSet::canonicalize(s.components()) == s);
        std::shuffle(raw.begin(), raw.end(), rng.engine);
        CHECK(IntervalSet::canonicalize(raw) == s);

        // canonical form: sorted, strictly separated, inside [0,1]
        const auto& cs = s.components();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            CHECK(cs[i].lo.sign() >= 0);
            CHECK(cs[i].hi <= Rational(1));
            if (i > 0) CHECK(cs[i - 1].hi < cs[i].lo);
        }
    }
}

TEST_CASE("canonicalize preserves membership exactly") {
    ts::Rng rng(ts::seed_from_env() + 1);
    for (int c = 0; c < 400; ++c) {
        auto raw = rng.raw_intervals(rng.integer(0, 8), 60);
        IntervalSet s = IntervalSet::canonicalize(raw);
        for (const auto& x : ts::probe_grid(ts::endpoints_of(raw))) {
            CHECK(s.contains(x) == ts::naive_member(raw, x));
        }
    }
}

TEST_CASE("intersect: examples") {
    IntervalSet a = make({iv(0, 1, 1, 3), iv(2, 3, 1, 1)});
    CHECK(intersect(a, a) == a);
    CHECK(intersect(a, make({iv(1, 4, 3, 4)})) == make({iv(1, 4, 1, 3), iv(2, 3, 3, 4)}));
    CHECK(intersect(make({iv(0, 1, 1, 3)}), make({iv(2, 3, 1, 1)})) == IntervalSet());
    CHECK(intersect(a, IntervalSet()) == IntervalSet());
}

TEST_CASE("intersect agrees with naive membership and bounds the measure") {
    ts::Rng rng(ts::seed_from_env() + 2);
    for (int c = 0; c < 400; ++c) {
        auto raw_a = rng.raw_intervals(rng.integer(0, 6), 50);
        auto raw_b = rng.raw_intervals(rng.integer(0, 6), 50);
        IntervalSet a = IntervalSet::canonicalize(raw_a);
        IntervalSet b = IntervalSet::canonicalize(raw_b);
        IntervalSet both = intersect(a, b);
        auto endpoints = ts::endpoints_of(raw_a);
        auto more = ts::endpoints_of(raw_b);
        endpoints.insert(endpoints.end(), more.begin(), more.end());
        for (const auto& x : ts::probe_grid(endpoints)) {
            CHECK(both.contains(x) == (a.contains(x) && b.contains(x)));
        }
        CHECK(both.measure() <= min(a.measure(), b.measure()));
    }
}

TEST_CASE("measure: empty set and inclusion-exclusion") {
    CHECK(IntervalSet().measure() == Rational(0));
    ts::Rng rng(ts::seed_from_env() + 3);
    for (int c = 0; c < 300; ++c) {
        IntervalSet a = IntervalSet::canonicalize(rng.raw_intervals(rng.integer(0, 6), 40));
        IntervalSet b = IntervalSet::canonicalize(rng.raw_intervals(rng.integer(0, 6), 40));
        CHECK(ts::set_union(a, b).measure() ==
              a.measure() + b.measure() - intersect(a, b).measure());
    }
}

TEST_CASE("translate_mod1: examples") {
    IntervalSet c1 = make({iv(0, 1, 1, 3), iv(2, 3, 1, 1)});
    CHECK(translate_mod1(c1, Rational(0)) == c1);
    CHECK(translate_mod1(c1, Rational(1, 2)) == make({iv(1, 6, 5, 6)}));
    // shifting by an integer is the identity
    CHECK(translate_mod1(c1, Rational(3)) == c1);
    // seam-adjacent components merge when brought together
    IntervalSet seam = make({iv(0, 1, 1, 4), iv(3, 4, 1, 1)});
    CHECK(translate_mod1(seam, Rational(1, 4)) == make({iv(0, 1, 1, 2)}));
}

TEST_CASE("translate_mod1 preserves measure and membership on the circle") {
    ts::Rng rng(ts::seed_from_env() + 4);
    for (int c = 0; c < 400; ++c) {
        auto raw = rng.raw_intervals(rng.integer(0, 6), 50);
        IntervalSet s = IntervalSet::canonicalize(raw);
        Rational a = rng.unit_rational(100);
        IntervalSet t = translate_mod1(s, a);
        CHECK(t.measure() == s.measure());

        auto endpoints = ts::endpoints_of(raw);
        auto more = ts::endpoints_of(t.components());
        endpoints.insert(endpoints.end(), more.begin(), more.end());
        for (const auto& x : ts::probe_grid(endpoints)) {
            CHECK(ts::circle_member(t, x) == ts::circle_member(s, x - a));
        }
    }
}

TEST_CASE("translate_mod1 round-trips through the complementary shift") {
    ts::Rng rng(ts::seed_from_env() + 5);
    for (int c = 0; c < 300; ++c) {
        IntervalSet s = IntervalSet::canonicalize(rng.raw_intervals(rng.integer(0, 6), 50));
        if (ts::seam_ambiguous(s)) continue;
        long den = rng.integer(2, 97);
        Rational a(rng.integer(1, den - 1), den);  // in (0,1)
        CHECK(translate_mod1(translate_mod1(s, a), Rational(1) - a) == s);
    }
}

TEST_CASE("seam-ambiguous sets normalize rather than round-trip") {
    // 0 and 1 are one circle point; a degenerate component there has no
    // faithful representative, so translation settles on 0.
    IntervalSet point_at_one = IntervalSet::from_canonical({{Rational(1), Rational(1)}});
    IntervalSet rt = translate_mod1(translate_mod1(point_at_one, Rational(1, 3)), Rational(2, 3));
    CHECK(rt == IntervalSet::from_canonical({{Rational(0), Rational(0)}}));
    // positive-length components at both seam sides survive exactly
    IntervalSet fat = IntervalSet::from_canonical(
        {{Rational(0), Rational(1, 8)}, {Rational(5, 8), Rational(1)}});
    CHECK(translate_mod1(translate_mod1(fat, Rational(1, 3)), Rational(2, 3)) == fat);
}

TEST_CASE("pack_count: examples") {
    IntervalSet s = make({iv(0, 1, 2, 5), iv(3, 5, 1, 1)});
    CHECK(s.pack_count(Rational(1, 5)) == 4);
    CHECK(make({iv(0, 1, 1, 7)}).pack_count(Rational(1, 7)) == 1);
    CHECK(IntervalSet().pack_count(Rational(1, 2)) == 0);
    CHECK_THROWS_AS(s.pack_count(Rational(0)), InvalidInput);
    CHECK_THROWS_AS(s.pack_count(Rational(-1, 2)), InvalidInput);
}

TEST_CASE("pack_intervals: greedy left packing with exact lengths") {
    IntervalSet s = make({iv(0, 1, 2, 5), iv(3, 5, 1, 1)});
    auto packed = s.pack_intervals(Rational(1, 5));
    REQUIRE(packed.size() == 4);
    CHECK(packed[0] == iv(0, 1, 1, 5));
    CHECK(packed[1] == iv(1, 5, 2, 5));
    CHECK(packed[2] == iv(3, 5, 4, 5));
    CHECK(packed[3] == iv(4, 5, 1, 1));

    ts::Rng rng(ts::seed_from_env() + 6);
    for (int c = 0; c < 200; ++c) {
        IntervalSet t = IntervalSet::canonicalize(rng.raw_intervals(rng.integer(0, 6), 40));
        Rational len(1, rng.integer(2, 30));
        auto ivs = t.pack_intervals(len);
        CHECK(static_cast<long long>(ivs.size()) == t.pack_count(len));
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            CHECK(ivs[i].length() == len);
            // inside the set: both endpoints in the same component
            bool inside = false;
            for (const auto& comp : t.components()) {
                if (comp.contains(ivs[i])) inside = true;
            }
            CHECK(inside);
            if (i > 0) CHECK(ivs[i - 1].hi <= ivs[i].lo);  // interior-disjoint
        }
    }
}

TEST_CASE("clip restricts to a window") {
    IntervalSet s = make({iv(0, 1, 1, 3), iv(2, 3, 1, 1)});
    CHECK(s.clip(iv(1, 4, 3, 4)) == make({iv(1, 4, 1, 3), iv(2, 3, 3, 4)}));
    CHECK(s.clip(iv(1, 3, 2, 3)) == make({iv(1, 3, 1, 3), iv(2, 3, 2, 3)}));
    CHECK(s.clip(iv(2, 5, 3, 5)) == IntervalSet());
}

TEST_CASE("from_canonical validates its input") {
    CHECK_THROWS_AS(IntervalSet::from_canonical({iv(0, 1, 1, 2), iv(1, 2, 1, 1)}), InvalidInput);
    CHECK_THROWS_AS(IntervalSet::from_canonical({iv(1, 2, 1, 1), iv(0, 1, 1, 4)}), InvalidInput);
    CHECK(IntervalSet::from_canonical({iv(0, 1, 1, 4), iv(1, 2, 1, 1)}).component_count() == 2);
}
