#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cantorap/ap_finder.hpp"
#include "cantorap/bounds.hpp"

namespace cantorap {

// Insertion-ordered JSON keeps emitted documents byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "cantor-ap/1";

Json interval_to_json(const Interval& iv);
Interval interval_from_json(const Json& j);

Json interval_set_document(const IntervalSet& s, int N, const Rational& delta,
                           const std::optional<Rational>& translate,
                           const std::optional<Interval>& window);
IntervalSet interval_set_from_document(const Json& doc);

Json certificate_document(const Certificate& cert);
Certificate certificate_from_document(const Json& doc);

Json goodness_document(const CantorParams& p, const TranslateFamily& fam,
                       const GoodnessResult& g);

Json verification_document(const VerificationReport& report);

Json empirical_document(const EmpiricalReport& report);

Json distance_document(const CantorParams& p, const Rational& x, int max_level,
                       const DistanceBound& db);

/// Serialize with a trailing newline (documents are newline-terminated).
std::string dump_document(const Json& doc);

/// Parse and validate the optional top-level format tag. Malformed JSON or a
/// foreign format tag raises InvalidInput.
Json parse_document(const std::string& text);

}  // namespace cantorap
