// cantorap: exact construction, certification, and bound checking for
// middle-1/N Cantor set translate intersections.
//
// Exit codes: 0 success/verified, 1 verification failed or not good,
// 2 invalid input, 3 refinement or base case failed, 4 budget exceeded.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cantorap/documents.hpp"
#include "cantorap/errors.hpp"

namespace {

using namespace cantorap;

constexpr int kExitOk = 0;
constexpr int kExitNotGood = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitRefinementFailed = 3;
constexpr int kExitBudgetExceeded = 4;

Rational parse_rational_flag(const std::string& s, const char* what) {
    if (s.find('.') != std::string::npos) {
        throw InvalidInput(std::string(what) + ": decimals are rejected, use p/q (got \"" + s +
                           "\")");
    }
    return Rational::parse(s);
}

Interval parse_interval_flag(const std::string& s, const char* what) {
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        throw InvalidInput(std::string(what) + ": expected lo:hi, got \"" + s + "\"");
    }
    return {parse_rational_flag(s.substr(0, colon), what),
            parse_rational_flag(s.substr(colon + 1), what)};
}

// "3..10" or "3,5,8" or "7".
std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    auto dots = s.find("..");
    try {
        if (dots != std::string::npos) {
            int lo = std::stoi(s.substr(0, dots));
            int hi = std::stoi(s.substr(dots + 2));
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
        }
    } catch (const std::exception&) {
        throw InvalidInput(std::string(what) + ": expected int, a..b, or a,b,c (got \"" + s +
                           "\")");
    }
    if (out.empty()) throw InvalidInput(std::string(what) + ": empty list");
    return out;
}

void write_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw InvalidInput("cannot open output file " + tmp);
        f << content;
        if (!f.good()) throw InvalidInput("failed writing " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

void emit(const Json& doc, const std::string& out_path) {
    const std::string text = dump_document(doc);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_atomically(out_path, text);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot read file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

TranslateFamily family_from_flags(const std::vector<std::string>& translates,
                                  const std::string& ap_d, int ap_len) {
    const bool have_list = !translates.empty();
    const bool have_ap = !ap_d.empty();
    if (have_list == have_ap) {
        throw InvalidInput("give either --translate (repeatable) or --ap-d with --ap-len");
    }
    if (have_ap) {
        if (ap_len < 1) throw InvalidInput("--ap-len must be >= 1");
        return TranslateFamily::arithmetic_progression(parse_rational_flag(ap_d, "--ap-d"),
                                                       ap_len);
    }
    std::vector<Rational> ts;
    ts.reserve(translates.size());
    for (const auto& t : translates) ts.push_back(parse_rational_flag(t, "--translate"));
    return TranslateFamily(std::move(ts));
}

struct CmdResult {
    int exit_code = kExitOk;
};

// ---------------------------------------------------------------------------

CmdResult cmd_build(int n, const std::string& delta_s, const std::string& window_s,
                    const std::string& translate_s, long long budget, const std::string& out,
                    const std::string& gnuplot_out) {
    CantorParams p(n);
    Rational delta = parse_rational_flag(delta_s, "--delta");
    std::optional<Rational> translate;
    if (!translate_s.empty()) translate = parse_rational_flag(translate_s, "--translate");
    std::optional<Interval> window;
    IntervalSet s;
    if (!window_s.empty()) {
        window = parse_interval_flag(window_s, "--window");
        s = approximant_in_window(p, delta, translate.value_or(Rational(0)), Window(*window));
    } else {
        s = global_approximant(p, delta, budget);
        if (translate) s = translate_mod1(s, *translate);
    }
    emit(interval_set_document(s, n, delta, translate, window), out);
    if (!gnuplot_out.empty()) {
        std::ostringstream g;
        for (const auto& c : s.components()) {
            g << c.lo.to_double() << " " << c.hi.to_double() << "\n";
        }
        write_atomically(gnuplot_out, g.str());
    }
    return {};
}

CmdResult cmd_good(int n, int k, const std::string& j_s,
                   const std::vector<std::string>& translates, const std::string& ap_d,
                   int ap_len, const std::string& out) {
    CantorParams p(n);
    TranslateFamily fam = family_from_flags(translates, ap_d, ap_len);
    Interval j = parse_interval_flag(j_s, "--j");
    GoodnessResult g = is_k_good(p, fam, k, j);
    emit(goodness_document(p, fam, g), out);
    return {g.good ? kExitOk : kExitNotGood};
}

CmdResult cmd_find(int n, int depth, const std::vector<std::string>& translates,
                   const std::string& ap_d, int ap_len, bool best_block,
                   const std::string& out) {
    CantorParams p(n);
    TranslateFamily fam = family_from_flags(translates, ap_d, ap_len);
    const auto select = best_block ? BlockSelect::best_count : BlockSelect::first_hit;
    Certificate cert = find_common_point(p, fam, depth, select);
    emit(certificate_document(cert), out);
    return {};
}

CmdResult cmd_find_ap(int n, const std::string& d_s, int len, int depth, bool best_block,
                      const std::string& out) {
    CantorParams p(n);
    Rational d = parse_rational_flag(d_s, "--d");
    const auto select = best_block ? BlockSelect::best_count : BlockSelect::first_hit;
    Certificate cert = find_ap(p, d, len, depth, select,
                               [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; });
    emit(certificate_document(cert), out);
    return {};
}

CmdResult cmd_verify(const std::string& cert_path, const std::string& out) {
    Json doc = parse_document(read_file(cert_path));
    Certificate cert = certificate_from_document(doc);
    VerificationReport report = verify_certificate(cert);
    for (const auto& c : report.checks) {
        std::cout << (c.ok ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
    }
    std::cout << (report.accepted ? "VERIFIED" : "REJECTED: " + report.first_failure) << "\n";
    if (!out.empty()) emit(verification_document(report), out);
    return {report.accepted ? kExitOk : kExitNotGood};
}

CmdResult cmd_lemma_check(const std::string& n_list, int max_stage, long long budget) {
    bool all_ok = true;
    std::cout << std::left << std::setw(6) << "N" << std::setw(6) << "L" << std::setw(6) << "k"
              << std::setw(12) << "oracle_max" << std::setw(12) << "bound" << "ok\n";
    for (int n : parse_int_list(n_list, "--N")) {
        CantorParams p(n);
        for (int L = 1; L <= max_stage; ++L) {
            StageGaps gaps = gaps_at_stage(p, L, budget);
            for (int k = 0; k < L; ++k) {
                const Rational jlen = Rational::pow(p.ratio, static_cast<unsigned long>(k));
                SlideResult oracle = max_hits_sliding(gaps.gaps, jlen);
                mpz_class bound = lemma_bound(L, k);
                const bool ok = mpz_class(static_cast<long>(oracle.max_count)) <= bound;
                all_ok = all_ok && ok;
                std::cout << std::setw(6) << n << std::setw(6) << L << std::setw(6) << k
                          << std::setw(12) << oracle.max_count << std::setw(12)
                          << bound.get_str() << (ok ? "yes" : "NO") << "\n";
            }
        }
    }
    return {all_ok ? kExitOk : kExitNotGood};
}

CmdResult cmd_corollary_check(const std::string& n_list, int max_k,
                              const std::string& min_delta_s, long long budget) {
    const Rational min_delta = parse_rational_flag(min_delta_s, "--min-delta");
    if (min_delta.sign() <= 0) throw InvalidInput("--min-delta must be positive");
    bool all_ok = true;
    std::cout << std::left << std::setw(6) << "N" << std::setw(6) << "k" << std::setw(6) << "L"
              << std::setw(16) << "delta" << std::setw(12) << "oracle_max" << std::setw(12)
              << "bound" << "ok\n";
    for (int n : parse_int_list(n_list, "--N")) {
        CantorParams p(n);
        for (int k = 0; k <= max_k; ++k) {
            const Rational scale = Rational::pow(Rational(n), static_cast<unsigned long>(k));
            // Stage gap lengths expressible as delta/N^k with delta in
            // (min_delta, 1] range limits.
            for (int L = 1;; ++L) {
                const Rational delta = gap_size(p, L) * scale;
                if (delta < min_delta) break;
                if (delta > Rational(1)) continue;
                const long long oracle = max_hits_scaled(p, k, delta, budget);
                const mpz_class bound = corollary_bound(p, delta);
                const bool ok = mpz_class(static_cast<long>(oracle)) <= bound;
                all_ok = all_ok && ok;
                std::cout << std::setw(6) << n << std::setw(6) << k << std::setw(6) << L
                          << std::setw(16) << delta.str() << std::setw(12) << oracle
                          << std::setw(12) << bound.get_str() << (ok ? "yes" : "NO") << "\n";
            }
        }
    }
    return {all_ok ? kExitOk : kExitNotGood};
}

CmdResult cmd_dist(int n, const std::string& x_s, int max_level, const std::string& out) {
    CantorParams p(n);
    Rational x = parse_rational_flag(x_s, "--x");
    DistanceBound db = distance_to_cantor(p, x, max_level);
    emit(distance_document(p, x, max_level, db), out);
    return {};
}

CmdResult cmd_search(int n, const std::string& d_s, int depth, int cap, bool best_block,
                     const std::string& out) {
    CantorParams p(n);
    Rational d = parse_rational_flag(d_s, "--d");
    const auto select = best_block ? BlockSelect::best_count : BlockSelect::first_hit;
    EmpiricalReport report = empirical_max_length(p, d, depth, cap, select);
    emit(empirical_document(report), out);
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact interval-set construction and certified common points for "
                 "middle-1/N Cantor set translates"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "Emit an approximant as an interval-set document");
    int b_n = 0;
    std::string b_delta, b_window, b_translate, b_out, b_gnuplot;
    long long b_budget = 1LL << 20;
    build->add_option("--N", b_n, "Cantor parameter N >= 3")->required();
    build->add_option("--delta", b_delta, "gap-size cutoff p/q")->required();
    build->add_option("--window", b_window, "restrict to window lo:hi (windowed construction)");
    build->add_option("--translate", b_translate, "translate mod 1 by p/q");
    build->add_option("--budget", b_budget, "component budget for global construction");
    build->add_option("--out", b_out, "write document to file");
    build->add_option("--emit-gnuplot-intervals", b_gnuplot,
                      "also dump component endpoints as doubles (no exactness contract)");

    // good
    auto* good = app.add_subcommand("good", "Test whether an interval is k-good");
    int g_n = 0, g_k = 0, g_ap_len = 0;
    std::string g_j, g_ap_d, g_out;
    std::vector<std::string> g_translates;
    good->add_option("--N", g_n)->required();
    good->add_option("--k", g_k, "goodness level")->required();
    good->add_option("--j", g_j, "interval lo:hi of length exactly 1/N^k")->required();
    good->add_option("--translate", g_translates, "translate p/q (repeatable)");
    good->add_option("--ap-d", g_ap_d, "progression difference p/q");
    good->add_option("--ap-len", g_ap_len, "progression length");
    good->add_option("--out", g_out);

    // find
    auto* find = app.add_subcommand("find", "Certify a common point of translated sets");
    int f_n = 0, f_depth = 0, f_ap_len = 0;
    std::string f_out, f_ap_d;
    std::vector<std::string> f_translates;
    bool f_best = false;
    find->add_option("--N", f_n)->required();
    find->add_option("--depth", f_depth, "refinement depth >= 1")->required();
    find->add_option("--translate", f_translates, "translate p/q (repeatable)");
    find->add_option("--ap-d", f_ap_d, "progression difference p/q");
    find->add_option("--ap-len", f_ap_len, "progression length");
    find->add_flag("--best-block", f_best, "pick the surviving block with the largest count");
    find->add_option("--out", f_out);

    // find-ap
    auto* find_ap_cmd = app.add_subcommand("find-ap", "Certify an arithmetic progression");
    int fa_n = 0, fa_len = 0, fa_depth = 0;
    std::string fa_d, fa_out;
    bool fa_best = false;
    find_ap_cmd->add_option("--N", fa_n)->required();
    find_ap_cmd->add_option("--d", fa_d, "difference p/q")->required();
    find_ap_cmd->add_option("--len", fa_len, "progression length >= 1")->required();
    find_ap_cmd->add_option("--depth", fa_depth, "refinement depth >= 1")->required();
    find_ap_cmd->add_flag("--best-block", fa_best);
    find_ap_cmd->add_option("--out", fa_out);

    // verify
    auto* verify = app.add_subcommand("verify", "Independently re-check a certificate");
    std::string v_cert, v_out;
    verify->add_option("--cert", v_cert, "certificate JSON path")->required();
    verify->add_option("--out", v_out, "write verification report document");

    // lemma-check
    auto* lemma = app.add_subcommand("lemma-check", "Sweep the gap-hit bound oracle");
    std::string l_n = "3..10";
    int l_max_stage = 8;
    long long l_budget = 1LL << 20;
    lemma->add_option("--N", l_n, "N values: a..b or list (default 3..10)");
    lemma->add_option("--max-stage", l_max_stage);
    lemma->add_option("--budget", l_budget);

    // corollary-check
    auto* coro = app.add_subcommand("corollary-check", "Sweep the scaled gap-hit bound oracle");
    std::string c_n = "3,5,8", c_min_delta = "1/64";
    int c_max_k = 2;
    long long c_budget = 1LL << 20;
    coro->add_option("--N", c_n, "N values (default 3,5,8)");
    coro->add_option("--max-k", c_max_k);
    coro->add_option("--min-delta", c_min_delta);
    coro->add_option("--budget", c_budget);

    // dist
    auto* dist = app.add_subcommand("dist", "Distance bound from a point to the limit set");
    int d_n = 0, d_max_level = 64;
    std::string d_x, d_out;
    dist->add_option("--N", d_n)->required();
    dist->add_option("--x", d_x, "point p/q in [0,1]")->required();
    dist->add_option("--max-level", d_max_level);
    dist->add_option("--out", d_out);

    // search
    auto* search = app.add_subcommand("search", "Empirical maximal progression length");
    int s_n = 0, s_depth = 0, s_cap = 0;
    std::string s_d, s_out;
    bool s_best = false;
    search->add_option("--N", s_n)->required();
    search->add_option("--d", s_d, "difference p/q")->required();
    search->add_option("--depth", s_depth)->required();
    search->add_option("--cap", s_cap, "largest length to try")->required();
    search->add_flag("--best-block", s_best);
    search->add_option("--out", s_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        CmdResult r;
        if (*build) {
            r = cmd_build(b_n, b_delta, b_window, b_translate, b_budget, b_out, b_gnuplot);
        } else if (*good) {
            r = cmd_good(g_n, g_k, g_j, g_translates, g_ap_d, g_ap_len, g_out);
        } else if (*find) {
            r = cmd_find(f_n, f_depth, f_translates, f_ap_d, f_ap_len, f_best, f_out);
        } else if (*find_ap_cmd) {
            r = cmd_find_ap(fa_n, fa_d, fa_len, fa_depth, fa_best, fa_out);
        } else if (*verify) {
            r = cmd_verify(v_cert, v_out);
        } else if (*lemma) {
            r = cmd_lemma_check(l_n, l_max_stage, l_budget);
        } else if (*coro) {
            r = cmd_corollary_check(c_n, c_max_k, c_min_delta, c_budget);
        } else if (*dist) {
            r = cmd_dist(d_n, d_x, d_max_level, d_out);
        } else if (*search) {
            r = cmd_search(s_n, s_d, s_depth, s_cap, s_best, s_out);
        }
        return r.exit_code;
    } catch (const BaseCaseFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefinementFailed;
    } catch (const RefinementFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!e.block_counts.empty()) {
            std::cerr << "per-block counts:";
            for (long long c : e.block_counts) std::cerr << " " << c;
            std::cerr << "\n";
        }
        for (const auto& pc : e.partial_chain) {
            std::cerr << "partial chain k=" << pc.k << " J=[" << pc.j_lo << ", " << pc.j_hi
                      << "] witnesses=" << pc.witness_count << "\n";
        }
        return kExitRefinementFailed;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
