#include "straightlaw/certificate.hpp"

#include <limits>
#include <set>

namespace straightlaw {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& c) {
    if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
    return c.get_str();
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw InvalidInput("certificate: coefficient must be an integer or a decimal string");
}

json set_to_json(const IndexSet& s) { return s.elements(); }

IndexSet set_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("certificate: rows/cols must be arrays");
    std::vector<unsigned> v;
    for (const auto& e : j) {
        if (!e.is_number_unsigned()) throw InvalidInput("certificate: indices must be positive integers");
        const auto x = e.get<std::uint64_t>();
        if (x == 0 || x > kMaxGround) throw InvalidInput("certificate: index out of range");
        v.push_back(static_cast<unsigned>(x));
    }
    return IndexSet(std::span<const unsigned>(v));
}

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw InvalidInput(std::string("certificate: missing field '") + key + "'");
    return *it;
}

bool flag(const json& doc, const char* key) {
    const json& f = field(doc, key);
    if (!f.is_boolean()) throw InvalidInput(std::string("certificate: '") + key + "' must be a boolean");
    return f.get<bool>();
}

unsigned dimension(const json& dims, const char* key) {
    const json& d = field(dims, key);
    if (!d.is_number_unsigned() || d.get<std::uint64_t>() < 1 || d.get<std::uint64_t>() > kMaxGround) {
        throw InvalidInput(std::string("certificate: dims.") + key + " must be in 1..64");
    }
    return static_cast<unsigned>(d.get<std::uint64_t>());
}

bool all_standard(const WordCombination& c) {
    for (const auto& [w, coeff] : c) {
        if (!is_standard(w)) return false;
    }
    return true;
}

}  // namespace

bool content_preserved(const WordCombination& input, const WordCombination& output) {
    std::set<std::pair<Multiset, Multiset>> allowed;
    for (const auto& [w, c] : input) allowed.insert(content(w));
    for (const auto& [w, c] : output) {
        if (!allowed.contains(content(w))) return false;
    }
    return true;
}

StraighteningCertificate straighten_certificate(const Expression& e, unsigned m, unsigned n) {
    StraighteningCertificate cert;
    cert.input = print_expression(e);
    cert.m = m;
    cert.n = n;
    const WordCombination input = e.to_combination();
    cert.output = normal_form(input, m, n);
    cert.standard = all_standard(cert.output);
    cert.oracle_verified = expand(input, m, n) == expand(cert.output, m, n);
    cert.content_preserved = content_preserved(input, cert.output);
    return cert;
}

json to_json(const StraighteningCertificate& cert) {
    json terms = json::array();
    for (const auto& [w, c] : cert.output) {
        json factors = json::array();
        for (const auto& f : w.factors) factors.push_back({{"rows", set_to_json(f.rows)}, {"cols", set_to_json(f.cols)}});
        terms.push_back({{"coeff", integer_to_json(c)}, {"factors", std::move(factors)}});
    }
    return {
        {"schema", std::string(kCertificateSchema)},
        {"input", cert.input},
        {"dims", {{"m", cert.m}, {"n", cert.n}}},
        {"terms", std::move(terms)},
        {"standard", cert.standard},
        {"oracleVerified", cert.oracle_verified},
        {"contentPreserved", cert.content_preserved},
    };
}

StraighteningCertificate certificate_from_json(const json& doc) {
    if (!doc.is_object()) throw InvalidInput("certificate: top level must be an object");
    const json& schema = field(doc, "schema");
    if (!schema.is_string() || schema.get<std::string>() != kCertificateSchema) {
        throw InvalidInput("certificate: unsupported schema");
    }
    StraighteningCertificate cert;
    const json& input = field(doc, "input");
    if (!input.is_string()) throw InvalidInput("certificate: 'input' must be a string");
    cert.input = input.get<std::string>();
    const json& dims = field(doc, "dims");
    if (!dims.is_object()) throw InvalidInput("certificate: 'dims' must be an object");
    cert.m = dimension(dims, "m");
    cert.n = dimension(dims, "n");

    const json& terms = field(doc, "terms");
    if (!terms.is_array()) throw InvalidInput("certificate: 'terms' must be an array");
    for (const auto& t : terms) {
        if (!t.is_object()) throw InvalidInput("certificate: term must be an object");
        const Integer c = integer_from_json(field(t, "coeff"));
        const json& factors = field(t, "factors");
        if (!factors.is_array()) throw InvalidInput("certificate: 'factors' must be an array");
        MinorWord w;
        for (const auto& f : factors) {
            if (!f.is_object()) throw InvalidInput("certificate: factor must be an object");
            w.factors.push_back({set_from_json(field(f, "rows")), set_from_json(field(f, "cols"))});
        }
        // Keep the word as recorded so that recheck sees a non-canonical term.
        if (c != 0) cert.output[w] += c;
    }
    cert.standard = flag(doc, "standard");
    cert.oracle_verified = flag(doc, "oracleVerified");
    cert.content_preserved = flag(doc, "contentPreserved");
    return cert;
}

CertificateCheck recheck(const StraighteningCertificate& cert) {
    CertificateCheck out;
    const WordCombination input = parse_expression(cert.input).to_combination();
    bool fits = true;
    for (const auto& [w, c] : cert.output) {
        for (const auto& f : w.factors) {
            fits = fits && f.rows.max() <= cert.m && f.cols.max() <= cert.n && f.rows.size() == f.cols.size();
        }
    }
    out.standard = fits && all_standard(cert.output);
    out.oracle_verified = fits && expand(input, cert.m, cert.n) == expand(cert.output, cert.m, cert.n);
    out.content_preserved = content_preserved(input, cert.output);
    out.claims_match = out.standard == cert.standard && out.oracle_verified == cert.oracle_verified &&
                       out.content_preserved == cert.content_preserved;
    return out;
}

}  // namespace straightlaw
