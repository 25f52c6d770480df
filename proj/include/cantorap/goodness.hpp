#pragma once

#include <optional>
#include <vector>

#include "cantorap/cantor.hpp"
#include "cantorap/interval_set.hpp"

namespace cantorap {

/// Family of circle translates a_1..a_r, each reduced into [0,1). When the
/// family is an arithmetic progression {0, -d, -2d, ...} mod 1, the
/// generating descriptor travels with it.
class TranslateFamily {
public:
    struct ApDescriptor {
        Rational d;
        int length;
    };

    explicit TranslateFamily(std::vector<Rational> translates);

    /// a_i = -(i-1)*d mod 1, so a common point x of the translated sets
    /// places x, x+d, ..., x+(length-1)*d (mod 1) all near the set.
    static TranslateFamily arithmetic_progression(const Rational& d, int length);

    /// Deserialization entry: adopts the given translates as-is (mod 1) and
    /// attaches the descriptor without regenerating from it, so a verifier
    /// can still test descriptor/list coherence.
    static TranslateFamily from_parts(std::vector<Rational> translates,
                                      std::optional<ApDescriptor> ap);

    const std::vector<Rational>& translates() const { return translates_; }
    const std::optional<ApDescriptor>& ap() const { return ap_; }
    long long size() const { return static_cast<long long>(translates_.size()); }

private:
    std::vector<Rational> translates_;
    std::optional<ApDescriptor> ap_;
};

/// Whether an interval of length 1/N^k is k-good for the family, together
/// with the witnesses that certify it.
struct GoodnessResult {
    int k;
    Interval j;
    std::vector<Interval> witnesses;  // length 1/N^(k+1) each, interior-disjoint
    long long witness_count;          // == witnesses.size()
    long long threshold;              // ceil(N/2)
    bool good;                        // witness_count >= threshold
};

/// ceil(N/2): the witness count required for goodness.
long long goodness_threshold(const CantorParams& p);

/// Intersection over the family of the delta-approximant translates,
/// restricted to the window.
IntervalSet intersection_in_window(const CantorParams& p, const Rational& delta,
                                   const TranslateFamily& fam, const Window& w);

/// The k-good test: J must have length exactly 1/N^k. Packs the intersection
/// at delta = 1/N^(k+1) into witnesses of that same length; good when at
/// least ceil(N/2) fit. Deterministic: identical inputs give identical
/// witness lists.
GoodnessResult is_k_good(const CantorParams& p, const TranslateFamily& fam, int k,
                         const Interval& j);

}  // namespace cantorap
