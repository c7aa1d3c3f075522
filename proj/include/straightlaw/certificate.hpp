#pragma once

/// @file certificate.hpp
/// @brief Straightening certificates and their JSON form.
///
/// Schema "straightlaw-cert/1":
///
///     { "contentPreserved": bool, "dims": {"m": int, "n": int},
///       "input": string, "oracleVerified": bool, "schema": string,
///       "standard": bool,
///       "terms": [ {"coeff": int | string,
///                   "factors": [ {"rows": [int...], "cols": [int...]} ]} ] }
///
/// Coefficients outside the int64 range are decimal strings. Keys and
/// terms are sorted, so equal certificates serialize to equal bytes.

#include <string>
#include <string_view>

#include <json.hpp>

#include "straightlaw/expression.hpp"
#include "straightlaw/standard_monomials.hpp"

namespace straightlaw {

inline constexpr std::string_view kCertificateSchema = "straightlaw-cert/1";

struct StraighteningCertificate {
    std::string input;
    unsigned m = 0;
    unsigned n = 0;
    WordCombination output;
    bool standard = false;
    bool oracle_verified = false;
    bool content_preserved = false;

    [[nodiscard]] bool verified() const { return standard && oracle_verified && content_preserved; }
};

/// Every output word's content occurs among the input words' contents.
bool content_preserved(const WordCombination& input, const WordCombination& output);

/// Normal form of the expression with every verdict computed.
StraighteningCertificate straighten_certificate(const Expression& e, unsigned m, unsigned n);

nlohmann::json to_json(const StraighteningCertificate& cert);
/// Throws InvalidInput on a malformed document or wrong schema.
StraighteningCertificate certificate_from_json(const nlohmann::json& doc);

struct CertificateCheck {
    bool standard = false;
    bool oracle_verified = false;
    bool content_preserved = false;
    bool claims_match = false;  // recorded verdicts equal the recomputed ones

    [[nodiscard]] bool valid() const { return standard && oracle_verified && content_preserved && claims_match; }
};

/// Recomputes every verdict from the input and the recorded terms.
CertificateCheck recheck(const StraighteningCertificate& cert);

}  // namespace straightlaw
