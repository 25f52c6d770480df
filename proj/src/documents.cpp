#include "cantorap/documents.hpp"

#include <utility>
#include <vector>

#include "cantorap/errors.hpp"

namespace cantorap {

namespace {

const Json& require(const Json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw InvalidInput(std::string("document missing field \"") + key + "\"");
    }
    return *it;
}

long long require_int(const Json& doc, const char* key) {
    const Json& v = require(doc, key);
    if (!v.is_number_integer()) {
        throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
    }
    return v.get<long long>();
}

Rational require_rational(const Json& v, const char* what) {
    if (!v.is_string()) throw InvalidInput(std::string(what) + " must be a \"p/q\" string");
    return Rational::parse(v.get<std::string>());
}

}  // namespace

Json interval_to_json(const Interval& iv) { return Json::array({iv.lo.str(), iv.hi.str()}); }

Interval interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw InvalidInput("interval must be a [lo, hi] pair of rational strings");
    }
    return {require_rational(j[0], "interval endpoint"), require_rational(j[1], "interval endpoint")};
}

Json interval_set_document(const IntervalSet& s, int N, const Rational& delta,
                           const std::optional<Rational>& translate,
                           const std::optional<Interval>& window) {
    Json doc;
    doc["format"] = kFormatVersion;
    doc["kind"] = "interval-set";
    doc["N"] = N;
    doc["delta"] = delta.str();
    doc["translate"] = translate ? Json(translate->str()) : Json(nullptr);
    doc["window"] = window ? interval_to_json(*window) : Json(nullptr);
    doc["count"] = s.component_count();
    doc["measure"] = s.measure().str();
    Json comps = Json::array();
    for (const auto& c : s.components()) comps.push_back(interval_to_json(c));
    doc["components"] = std::move(comps);
    return doc;
}

IntervalSet interval_set_from_document(const Json& doc) {
    const Json& comps = require(doc, "components");
    if (!comps.is_array()) throw InvalidInput("\"components\" must be an array");
    std::vector<Interval> ivs;
    ivs.reserve(comps.size());
    for (const auto& c : comps) ivs.push_back(interval_from_json(c));
    return IntervalSet::from_canonical(std::move(ivs));
}

Json certificate_document(const Certificate& cert) {
    Json doc;
    doc["format"] = kFormatVersion;
    doc["kind"] = "certificate";
    doc["N"] = cert.params.N;
    Json ts = Json::array();
    for (const auto& t : cert.family.translates()) ts.push_back(t.str());
    doc["translates"] = std::move(ts);
    if (cert.family.ap()) {
        doc["ap"] = Json{{"d", cert.family.ap()->d.str()}, {"length", cert.family.ap()->length}};
    } else {
        doc["ap"] = nullptr;
    }
    doc["depth"] = cert.depth;
    Json chain = Json::array();
    for (const auto& e : cert.chain) {
        Json entry;
        entry["k"] = e.k;
        entry["interval"] = interval_to_json(e.j);
        entry["witness_count"] = e.witness_count;
        chain.push_back(std::move(entry));
    }
    doc["chain"] = std::move(chain);
    doc["point"] = cert.point.str();
    return doc;
}

Certificate certificate_from_document(const Json& doc) {
    const auto n = require_int(doc, "N");
    if (n < 3 || n > 1'000'000'000) throw InvalidInput("N out of range");
    CantorParams params(static_cast<int>(n));

    const Json& ts_json = require(doc, "translates");
    if (!ts_json.is_array() || ts_json.empty()) {
        throw InvalidInput("\"translates\" must be a nonempty array");
    }
    std::vector<Rational> ts;
    ts.reserve(ts_json.size());
    for (const auto& t : ts_json) ts.push_back(require_rational(t, "translate"));

    std::optional<TranslateFamily::ApDescriptor> ap;
    const Json& ap_json = require(doc, "ap");
    if (!ap_json.is_null()) {
        if (!ap_json.is_object()) throw InvalidInput("\"ap\" must be null or an object");
        ap = TranslateFamily::ApDescriptor{require_rational(require(ap_json, "d"), "ap.d"),
                                           static_cast<int>(require_int(ap_json, "length"))};
    }
    TranslateFamily fam = TranslateFamily::from_parts(std::move(ts), std::move(ap));

    const auto depth = require_int(doc, "depth");
    if (depth < 0 || depth > 1'000'000) throw InvalidInput("depth out of range");

    const Json& chain_json = require(doc, "chain");
    if (!chain_json.is_array()) throw InvalidInput("\"chain\" must be an array");
    std::vector<ChainEntry> chain;
    chain.reserve(chain_json.size());
    for (const auto& e : chain_json) {
        ChainEntry entry{static_cast<int>(require_int(e, "k")),
                         interval_from_json(require(e, "interval")),
                         require_int(e, "witness_count")};
        chain.push_back(std::move(entry));
    }

    Rational point = require_rational(require(doc, "point"), "point");
    return Certificate{std::move(params), std::move(fam), std::move(chain),
                       static_cast<int>(depth), std::move(point)};
}

Json goodness_document(const CantorParams& p, const TranslateFamily& fam,
                       const GoodnessResult& g) {
    Json doc;
    doc["format"] = kFormatVersion;
    doc["kind"] = "goodness";
    doc["N"] = p.N;
    Json ts = Json::array();
    for (const auto& t : fam.translates()) ts.push_back(t.str());
    doc["translates"] = std::move(ts);
    doc["k"] = g.k;
    doc["interval"] = interval_to_json(g.j);
    doc["witness_count"] = g.witness_count;
    doc["threshold"] = g.threshold;
    doc["good"] = g.good;
    Json ws = Json::array();
    for (const auto& w : g.witnesses) ws.push_back(interval_to_json(w));
    doc["witnesses"] = std::move(ws);
    return doc;
}

Json verification_document(const VerificationReport& report) {
    Json doc;
    doc["format"] = kFormatVersion;
    doc["kind"] = "verification-report";
    doc["accepted"] = report.accepted;
    doc["first_failure"] = report.first_failure;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        checks.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    }
    doc["checks"] = std::move(checks);
    return doc;
}

Json empirical_document(const EmpiricalReport& report) {
    Json doc;
    doc["format"] = kFormatVersion;
    doc["kind"] = "empirical-report";
    doc["N"] = report.N;
    doc["d"] = report.d.str();
    doc["depth"] = report.depth;
    doc["length_cap"] = report.length_cap;
    doc["max_verified_length"] = report.max_verified_length;
    Json outs = Json::array();
    for (const auto& o : report.outcomes) {
        outs.push_back(Json{{"length", o.length},
                            {"found", o.found},
                            {"verified", o.verified},
                            {"detail", o.detail}});
    }
    doc["outcomes"] = std::move(outs);
    doc["note"] = report.note;
    return doc;
}

Json distance_document(const CantorParams& p, const Rational& x, int max_level,
                       const DistanceBound& db) {
    Json doc;
    doc["format"] = kFormatVersion;
    doc["kind"] = "distance";
    doc["N"] = p.N;
    doc["x"] = x.str();
    doc["max_level"] = max_level;
    doc["lower"] = db.lower.str();
    doc["upper"] = db.upper.str();
    doc["exact"] = db.exact;
    return doc;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_document(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw InvalidInput("malformed JSON document");
    if (doc.is_object()) {
        auto it = doc.find("format");
        if (it != doc.end() && (!it->is_string() || it->get<std::string>() != kFormatVersion)) {
            throw InvalidInput("unsupported document format (expected \"" +
                               std::string(kFormatVersion) + "\")");
        }
    }
    return doc;
}

}  // namespace cantorap
