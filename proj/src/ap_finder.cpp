#include "cantorap/ap_finder.hpp"

#include <sstream>
#include <utility>

#include "cantorap/bounds.hpp"
#include "cantorap/errors.hpp"

namespace cantorap {

namespace {

Rational pow_inv_n(const CantorParams& p, unsigned long e) {
    return Rational::pow(Rational(1, p.N), e);
}

std::vector<RefinementFailed::PartialChainEntry> to_partial_chain(
    const std::vector<ChainEntry>& chain) {
    std::vector<RefinementFailed::PartialChainEntry> out;
    out.reserve(chain.size());
    for (const auto& e : chain) {
        out.push_back({e.k, e.j.lo.str(), e.j.hi.str(), e.witness_count});
    }
    return out;
}

// Smallest m with ratio^m <= bound; the stage at which component length
// certifies the distance bound.
int level_for_tolerance(const CantorParams& p, const Rational& bound) {
    int m = 0;
    Rational len(1);
    while (len > bound) {
        len *= p.ratio;
        ++m;
    }
    return m;
}

}  // namespace

Rational Certificate::tolerance() const {
    return Rational::pow(Rational(1, params.N), static_cast<unsigned long>(depth));
}

GoodnessResult initial_good(const CantorParams& p, const TranslateFamily& fam) {
    GoodnessResult g = is_k_good(p, fam, 0, IntervalSet::unit_interval());
    if (!g.good) {
        std::ostringstream msg;
        msg << "base case failed: [0,1] packs " << g.witness_count
            << " witness intervals, threshold " << g.threshold << " (family size " << fam.size()
            << ", guaranteed up to " << max_translates(p.N) << " translates for N=" << p.N << ")";
        throw BaseCaseFailed(msg.str(), g.witness_count, g.threshold);
    }
    return g;
}

GoodnessResult refine(const CantorParams& p, const TranslateFamily& fam, const GoodnessResult& g,
                      BlockSelect select) {
    if (!g.good) throw InvalidInput("refine requires a good interval");
    const int k = g.k;
    const Rational next_len = pow_inv_n(p, static_cast<unsigned long>(k) + 2);
    const long long threshold = goodness_threshold(p);

    // One windowed pass over the whole interval; blocks are counted against
    // this shared refined intersection rather than rebuilt per block.
    const IntervalSet refined = intersection_in_window(p, next_len, fam, Window(g.j));

    std::vector<long long> block_counts;
    block_counts.reserve(g.witnesses.size());
    const Interval* chosen = nullptr;
    long long chosen_count = -1;
    for (const auto& block : g.witnesses) {
        const IntervalSet in_block = refined.clip(block);
        const long long count = in_block.pack_count(next_len);
        block_counts.push_back(count);
        if (count >= threshold && count > chosen_count) {
            chosen = &block;
            chosen_count = count;
            if (select == BlockSelect::first_hit) break;
        }
    }
    if (chosen == nullptr) {
        const long long guaranteed = max_translates(p.N);
        std::ostringstream msg;
        msg << "refinement failed at k=" << k << ": none of " << g.witnesses.size()
            << " blocks reached threshold " << threshold << "; family size " << fam.size();
        if (fam.size() > guaranteed) {
            msg << " exceeds the guaranteed max of " << guaranteed << " translates for N=" << p.N
                << " (outside the guaranteed regime)";
        } else {
            msg << " is within the guaranteed max of " << guaranteed << " translates for N=" << p.N
                << " (this indicates an implementation bug)";
        }
        throw RefinementFailed(msg.str(), k, std::move(block_counts), fam.size(), guaranteed);
    }
    std::vector<Interval> witnesses = refined.clip(*chosen).pack_intervals(next_len);
    const auto count = static_cast<long long>(witnesses.size());
    return GoodnessResult{k + 1, *chosen, std::move(witnesses), count, threshold,
                          count >= threshold};
}

Certificate find_common_point(const CantorParams& p, const TranslateFamily& fam, int depth,
                              BlockSelect select) {
    if (depth < 1) throw InvalidInput("depth must be >= 1");
    GoodnessResult g = initial_good(p, fam);
    std::vector<ChainEntry> chain;
    chain.reserve(static_cast<std::size_t>(depth) + 1);
    chain.push_back({g.k, g.j, g.witness_count});
    for (int step = 0; step < depth; ++step) {
        try {
            g = refine(p, fam, g, select);
        } catch (RefinementFailed& e) {
            e.partial_chain = to_partial_chain(chain);
            throw;
        }
        chain.push_back({g.k, g.j, g.witness_count});
    }
    Rational point = g.witnesses.front().lo;
    return Certificate{p, fam, std::move(chain), depth, std::move(point)};
}

Certificate find_ap(const CantorParams& p, const Rational& d, int length, int depth,
                    BlockSelect select, const WarnFn& warn) {
    TranslateFamily fam = TranslateFamily::arithmetic_progression(d, length);
    if (warn) {
        const long long guaranteed = max_translates(p.N);
        if (length > guaranteed) {
            std::ostringstream msg;
            msg << "length " << length << " exceeds the guaranteed " << guaranteed
                << " translates for N=" << p.N << "; searching best-effort";
            warn(msg.str());
        }
    }
    return find_common_point(p, fam, depth, select);
}

VerificationReport verify_certificate(const Certificate& cert) {
    VerificationReport report;
    auto check = [&report](std::string name, bool ok, std::string detail = "") {
        if (!ok && report.first_failure.empty()) report.first_failure = name;
        report.checks.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };

    const CantorParams& p = cert.params;
    const auto depth = cert.depth;
    const auto& chain = cert.chain;

    bool shape_ok = depth >= 1 && chain.size() == static_cast<std::size_t>(depth) + 1;
    if (shape_ok) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (chain[i].k != static_cast<int>(i)) shape_ok = false;
        }
    }
    check("chain-shape", shape_ok,
          shape_ok ? "" : "chain must hold entries k=0..depth with depth >= 1");
    if (!shape_ok) {
        report.accepted = false;
        return report;
    }

    check("chain-start", chain.front().j == IntervalSet::unit_interval(),
          "first entry must be [0,1]");

    bool lengths_ok = true;
    for (const auto& e : chain) {
        if (e.j.length() != pow_inv_n(p, static_cast<unsigned long>(e.k))) lengths_ok = false;
    }
    check("interval-lengths", lengths_ok, lengths_ok ? "" : "|J_k| must equal 1/N^k");

    bool nesting_ok = true;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!chain[i - 1].j.contains(chain[i].j)) nesting_ok = false;
    }
    check("nesting", nesting_ok, nesting_ok ? "" : "each J_(k+1) must lie inside J_k");

    if (cert.family.ap()) {
        const auto& ap = *cert.family.ap();
        bool ap_ok = ap.length == static_cast<int>(cert.family.translates().size());
        if (ap_ok) {
            TranslateFamily regen = TranslateFamily::arithmetic_progression(ap.d, ap.length);
            ap_ok = regen.translates() == cert.family.translates();
        }
        check("ap-descriptor", ap_ok,
              ap_ok ? "" : "descriptor does not regenerate the translate list");
    }

    for (const auto& e : chain) {
        std::string name = "goodness-k" + std::to_string(e.k);
        try {
            GoodnessResult g = is_k_good(p, cert.family, e.k, e.j);
            if (!g.good) {
                check(std::move(name), false,
                      "recomputed witness count " + std::to_string(g.witness_count) +
                          " below threshold " + std::to_string(g.threshold));
            } else if (g.witness_count != e.witness_count) {
                check(std::move(name), false,
                      "recomputed witness count " + std::to_string(g.witness_count) +
                          " != recorded " + std::to_string(e.witness_count));
            } else {
                check(std::move(name), true);
            }
        } catch (const Error& err) {
            check(std::move(name), false, err.what());
        }
    }

    try {
        const Rational final_len = pow_inv_n(p, static_cast<unsigned long>(depth) + 1);
        IntervalSet final_set =
            intersection_in_window(p, final_len, cert.family, Window(chain.back().j));
        check("point-in-final-set", final_set.contains(cert.point),
              "point " + cert.point.str() + " must lie in the final intersection set");
    } catch (const Error& err) {
        check("point-in-final-set", false, err.what());
    }

    const Rational tol = cert.tolerance();
    const int level = level_for_tolerance(p, tol);
    const auto& ts = cert.family.translates();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::string name = "point-distance-a" + std::to_string(i);
        try {
            DistanceBound db = distance_to_cantor(p, (cert.point - ts[i]).mod1(), level);
            check(std::move(name), db.upper <= tol,
                  db.upper <= tol ? ""
                                  : "distance upper bound " + db.upper.str() + " exceeds " +
                                        tol.str());
        } catch (const Error& err) {
            check(std::move(name), false, err.what());
        }
    }

    report.accepted = report.first_failure.empty();
    return report;
}

EmpiricalReport empirical_max_length(const CantorParams& p, const Rational& d, int depth,
                                     int length_cap, BlockSelect select) {
    if (length_cap < 1) throw InvalidInput("length cap must be >= 1");
    if (depth < 1) throw InvalidInput("depth must be >= 1");
    EmpiricalReport rep;
    rep.N = p.N;
    rep.d = d;
    rep.depth = depth;
    rep.length_cap = length_cap;
    rep.max_verified_length = 0;
    rep.note =
        "Empirical, depth-limited evidence only: a verified length certifies that the "
        "depth-" +
        std::to_string(depth) +
        " approximant intersection is nonempty. Genuine nonemptiness of the full "
        "intersection needs the refinement chain to extend indefinitely; failure at this "
        "depth proves nothing about longer progressions.";
    for (int len = 1; len <= length_cap; ++len) {
        LengthOutcome out{len, false, false, ""};
        try {
            Certificate cert = find_ap(p, d, len, depth, select);
            out.found = true;
            VerificationReport vr = verify_certificate(cert);
            out.verified = vr.accepted;
            if (!vr.accepted) {
                out.detail = "verifier rejected: " + vr.first_failure;
            }
        } catch (const BaseCaseFailed& e) {
            out.detail = e.what();
        } catch (const RefinementFailed& e) {
            out.detail = e.what();
        }
        if (out.verified) rep.max_verified_length = len;
        rep.outcomes.push_back(std::move(out));
    }
    return rep;
}

}  // namespace cantorap
