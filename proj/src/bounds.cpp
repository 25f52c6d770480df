#include "cantorap/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "cantorap/errors.hpp"

namespace cantorap {

namespace {

int ceil_log2(unsigned long long n) {
    // n >= 2
    return static_cast<int>(std::bit_width(n - 1));
}

bool is_pow2(unsigned long long n) { return (n & (n - 1)) == 0; }

// Exact test: m * 100 * log2(N) <= N, i.e. N^(100m) <= 2^N.
bool translate_count_ok(long long N, long long m) {
    if (m <= 0) return true;
    mpz_class lhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(N),
                  static_cast<unsigned long>(100 * m));
    mpz_class rhs = 1;
    rhs <<= static_cast<unsigned long>(N);
    return lhs <= rhs;
}

}  // namespace

mpz_class lemma_bound(int L, int k) {
    if (k < 0 || L <= k) throw InvalidInput("lemma_bound requires L > k >= 0");
    mpz_class b = 1;
    b <<= static_cast<unsigned long>(L - k - 1);
    return b;
}

StageGaps gaps_at_stage(const CantorParams& p, int L, long long component_budget) {
    if (L < 1) throw InvalidInput("gap stage must be >= 1");
    if (L - 1 >= 62 || (1LL << (L - 1)) > component_budget) {
        throw BudgetExceeded("stage " + std::to_string(L) + " has 2^" + std::to_string(L - 1) +
                             " gaps, over budget " + std::to_string(component_budget));
    }
    IntervalSet parents = components_in_window(p, L - 1, Window(IntervalSet::unit_interval()));
    StageGaps result{L, gap_size(p, L), {}, true};
    result.gaps.reserve(parents.component_count());
    for (const auto& c : parents.components()) {
        Rational child_len = (c.hi - c.lo) * p.ratio;
        result.gaps.emplace_back(c.lo + child_len, c.hi - child_len);
    }
    return result;
}

SlideResult max_hits_sliding(const std::vector<Interval>& gaps, const Rational& jlen) {
    if (jlen.sign() <= 0 || jlen > Rational(1)) {
        throw InvalidInput("sliding length must be in (0, 1]");
    }
    if (gaps.empty()) return {0, Rational(0)};

    const Rational limit = Rational(1) - jlen;

    std::vector<Rational> los, his;
    los.reserve(gaps.size());
    his.reserve(gaps.size());
    for (const auto& g : gaps) {
        los.push_back(g.lo);
        his.push_back(g.hi);
    }

    std::vector<Rational> critical;
    critical.reserve(4 * gaps.size() + 2);
    critical.emplace_back(0);
    critical.push_back(limit);
    auto add = [&](Rational q) {
        if (q.sign() >= 0 && q <= limit) critical.push_back(std::move(q));
    };
    for (const auto& g : gaps) {
        add(g.lo);
        add(g.hi);
        add(g.lo - jlen);
        add(g.hi - jlen);
    }
    std::sort(critical.begin(), critical.end());
    critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

    std::vector<Rational> probes;
    probes.reserve(2 * critical.size());
    const Rational half(1, 2);
    for (std::size_t i = 0; i < critical.size(); ++i) {
        probes.push_back(critical[i]);
        if (i + 1 < critical.size()) probes.push_back((critical[i] + critical[i + 1]) * half);
    }

    // Open gap (a,b) meets closed [q, q+jlen] iff a < q+jlen and b > q.
    auto count_at = [&](const Rational& q) -> long long {
        Rational right = q + jlen;
        auto lt = std::lower_bound(los.begin(), los.end(), right) - los.begin();
        auto le = std::upper_bound(his.begin(), his.end(), q) - his.begin();
        return static_cast<long long>(lt - le);
    };

    long long best = -1;
    Rational best_pos(0);
    for (const auto& q : probes) {
        long long c = count_at(q);
        if (c > best) {
            best = c;
            best_pos = q;
        }
    }
    return {best, best_pos};
}

mpz_class corollary_bound(const CantorParams& p, const Rational& delta) {
    if (delta.sign() <= 0 || delta > Rational(1)) {
        throw InvalidInput("delta must be in (0, 1]");
    }
    // target = ceil(1/delta)
    mpz_class target;
    mpz_cdiv_q(target.get_mpz_t(), delta.den().get_mpz_t(), delta.num().get_mpz_t());

    // Smallest m with (2N/(N-1))^m >= target, by exact power comparison.
    mpz_class num = 1, den = 1;  // (2N)^m, (N-1)^m
    unsigned long m = 0;
    while (num < target * den) {
        num *= 2 * p.N;
        den *= p.N - 1;
        ++m;
    }
    mpz_class b = 3;
    b <<= m;
    return b;
}

long long max_hits_scaled(const CantorParams& p, int k, const Rational& delta,
                          long long component_budget) {
    if (k < 0) throw InvalidInput("k must be >= 0");
    if (delta.sign() <= 0) throw InvalidInput("delta must be positive");
    const Rational target = delta / Rational::pow(Rational(p.N), static_cast<unsigned long>(k));

    // Gap sizes decrease strictly, so at most one stage matches exactly.
    int L = 0;
    Rational gap(1, p.N);
    while (gap > target) {
        gap *= p.ratio;
        ++L;
    }
    // gap here is gap_size(L+1); the candidate stage is L+1.
    if (gap != target) {
        throw NoSuchGapLength("no stage removes gaps of length exactly " + target.str());
    }
    StageGaps gaps = gaps_at_stage(p, L + 1, component_budget);
    const Rational jlen = Rational::pow(Rational(1, p.N), static_cast<unsigned long>(k));
    return max_hits_sliding(gaps.gaps, jlen).max_count;
}

long long deletion_budget(long long N) {
    if (N < 3) throw InvalidInput("N must be >= 3");
    return 9 * N * ceil_log2(static_cast<unsigned long long>(N));
}

long long max_translates(long long N) {
    if (N < 3) throw InvalidInput("N must be >= 3");
    const auto un = static_cast<unsigned long long>(N);
    if (is_pow2(un)) {
        return N / (100LL * std::bit_width(un - 1));  // log2 N is exact here
    }
    const double lg = std::log2(static_cast<double>(N));
    const double q = static_cast<double>(N) / (100.0 * lg);
    const double eps = 1e-11 * q + 1e-12;
    const auto lo = static_cast<long long>(std::floor(q - eps));
    const auto hi = static_cast<long long>(std::floor(q + eps));
    if (lo == hi) return lo;
    // Ambiguous bracket: settle each candidate exactly.
    long long m = lo;
    while (translate_count_ok(N, m + 1)) ++m;
    return m;
}

}  // namespace cantorap
