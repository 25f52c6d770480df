#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cantorap/goodness.hpp"

namespace cantorap {

/// One level of a certificate: the k-good interval and how many witnesses
/// the goodness test found there.
struct ChainEntry {
    int k;
    Interval j;
    long long witness_count;
};

/// Re-checkable record of a successful refinement run: the nested chain of
/// good intervals J_0 = [0,1] down to J_depth, plus a point of the final
/// intersection set. The verifier recomputes everything from scratch.
struct Certificate {
    CantorParams params;
    TranslateFamily family;
    std::vector<ChainEntry> chain;  // entries for k = 0 .. depth
    int depth;
    Rational point;

    /// Each translated copy of the point sits within this distance of the
    /// limit set: 1/N^depth.
    Rational tolerance() const;
};

/// How refine picks among passing blocks. first_hit (default) takes the
/// leftmost passing block; best_count scans all blocks and takes the
/// leftmost one with the maximal surviving count. Both are deterministic.
enum class BlockSelect { first_hit, best_count };

/// Certifies the base case k=0, J=[0,1] directly. Throws BaseCaseFailed
/// (with the observed count vs threshold) when the family already kills the
/// unit interval.
GoodnessResult initial_good(const CantorParams& p, const TranslateFamily& fam);

/// One inductive step: inside a k-good interval, find a witness block whose
/// refined intersection still packs ceil(N/2) intervals of the next length.
/// The refined intersection is computed once for the whole interval and each
/// block is counted against it. Throws RefinementFailed with per-block
/// counts when no block passes.
GoodnessResult refine(const CantorParams& p, const TranslateFamily& fam,
                      const GoodnessResult& g, BlockSelect select = BlockSelect::first_hit);

/// Base case plus `depth` refinement steps; the certified point is the left
/// endpoint of the leftmost final witness. Success is guaranteed when the
/// family size is at most max_translates(N); otherwise best effort.
Certificate find_common_point(const CantorParams& p, const TranslateFamily& fam, int depth,
                              BlockSelect select = BlockSelect::first_hit);

using WarnFn = std::function<void(const std::string&)>;

/// Arithmetic-progression front end: certifies a point x with x, x+d, ...,
/// x+(length-1)*d all within tolerance of the limit set. Emits a non-fatal
/// warning through `warn` when length exceeds the guaranteed regime.
Certificate find_ap(const CantorParams& p, const Rational& d, int length, int depth,
                    BlockSelect select = BlockSelect::first_hit, const WarnFn& warn = {});

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail;
};

struct VerificationReport {
    bool accepted = false;
    std::vector<CheckResult> checks;
    std::string first_failure;  // name of the first failing check, empty if accepted
};

/// Independent re-check of a certificate: chain shape, interval lengths,
/// nesting, every goodness claim recomputed from scratch, the point's
/// membership in the final intersection set, and the per-translate distance
/// bound. Shares no state with the producer.
VerificationReport verify_certificate(const Certificate& cert);

struct LengthOutcome {
    int length;
    bool found;     // find_ap produced a certificate
    bool verified;  // and the independent verifier accepted it
    std::string detail;
};

struct EmpiricalReport {
    int N;
    Rational d;
    int depth;
    int length_cap;
    std::vector<LengthOutcome> outcomes;
    int max_verified_length;  // 0 if none
    std::string note;
};

/// Tries progression lengths 1..length_cap at fixed depth and reports which
/// certify. Failures are data, not errors. The note spells out that this is
/// depth-limited evidence: success proves the depth-D approximant
/// intersection nonempty, failure at depth D proves nothing.
EmpiricalReport empirical_max_length(const CantorParams& p, const Rational& d, int depth,
                                     int length_cap, BlockSelect select = BlockSelect::first_hit);

}  // namespace cantorap
