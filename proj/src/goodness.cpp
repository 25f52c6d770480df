#include "cantorap/goodness.hpp"

#include <string>
#include <utility>

#include "cantorap/errors.hpp"

namespace cantorap {

TranslateFamily::TranslateFamily(std::vector<Rational> translates) {
    if (translates.empty()) throw InvalidInput("translate family must be nonempty");
    translates_.reserve(translates.size());
    for (auto& t : translates) translates_.push_back(t.mod1());
}

TranslateFamily TranslateFamily::from_parts(std::vector<Rational> translates,
                                            std::optional<ApDescriptor> ap) {
    TranslateFamily fam(std::move(translates));
    fam.ap_ = std::move(ap);
    return fam;
}

TranslateFamily TranslateFamily::arithmetic_progression(const Rational& d, int length) {
    if (length < 1) throw InvalidInput("progression length must be >= 1");
    std::vector<Rational> ts;
    ts.reserve(static_cast<std::size_t>(length));
    Rational step = -d;
    Rational cur(0);
    for (int i = 0; i < length; ++i) {
        ts.push_back(cur.mod1());
        cur += step;
    }
    TranslateFamily fam(std::move(ts));
    fam.ap_ = ApDescriptor{d, length};
    return fam;
}

long long goodness_threshold(const CantorParams& p) { return (p.N + 1) / 2; }

IntervalSet intersection_in_window(const CantorParams& p, const Rational& delta,
                                   const TranslateFamily& fam, const Window& w) {
    const auto& ts = fam.translates();
    IntervalSet acc = approximant_in_window(p, delta, ts.front(), w);
    for (std::size_t i = 1; i < ts.size() && !acc.empty(); ++i) {
        acc = intersect(acc, approximant_in_window(p, delta, ts[i], w));
    }
    return acc;
}

GoodnessResult is_k_good(const CantorParams& p, const TranslateFamily& fam, int k,
                         const Interval& j) {
    if (k < 0) throw InvalidInput("k must be >= 0");
    const Rational expected_len = Rational::pow(Rational(1, p.N), static_cast<unsigned long>(k));
    if (j.length() != expected_len) {
        throw InvalidInput("interval has length " + j.length().str() + ", expected 1/N^" +
                           std::to_string(k) + " = " + expected_len.str());
    }
    const Rational witness_len = expected_len / Rational(p.N);  // 1/N^(k+1)
    IntervalSet s = intersection_in_window(p, witness_len, fam, Window(j));
    std::vector<Interval> witnesses = s.pack_intervals(witness_len);
    const auto count = static_cast<long long>(witnesses.size());
    const long long threshold = goodness_threshold(p);
    return GoodnessResult{k, j, std::move(witnesses), count, threshold, count >= threshold};
}

}  // namespace cantorap
