#include "straightlaw/commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "straightlaw/certificate.hpp"
#include "straightlaw/expression.hpp"
#include "straightlaw/independence.hpp"

namespace straightlaw::cli {

using nlohmann::json;

namespace {

// Brute-force leading monomials are skipped above this total degree.
constexpr std::size_t kBruteForceDegree = 6;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct ResolvedDims {
    unsigned m;
    unsigned n;
};

ResolvedDims resolve(const Expression& e, Dims dims) {
    const unsigned need_m = std::max(1U, e.max_row());
    const unsigned need_n = std::max(1U, e.max_col());
    const unsigned m = dims.m.value_or(need_m);
    const unsigned n = dims.n.value_or(need_n);
    if (m < need_m || n < need_n) {
        throw InvalidInput("dimension error: expression uses rows up to " + std::to_string(need_m) +
                           " and columns up to " + std::to_string(need_n) + ", got m = " + std::to_string(m) +
                           ", n = " + std::to_string(n));
    }
    return {m, n};
}

json sets_to_json(const std::vector<IndexSet>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(s.elements());
    return out;
}

json report_to_json(const SweepReport& r) {
    return {
        {"family", std::string(family_name(r.family))},
        {"n", r.n},
        {"instances", r.instances},
        {"oracleRun", r.oracle_run},
        {"oraclePassed", r.oracle_passed},
        {"sigmaRun", r.sigma_run},
        {"sigmaPassed", r.sigma_passed},
        {"disagreements", r.disagreements},
        {"failures", r.failures},
        {"ok", r.ok()},
    };
}

void report_to_text(const SweepReport& r, std::ostream& out) {
    out << family_name(r.family) << " n=" << r.n << ": ";
    if (r.ok()) {
        out << "all " << r.instances << " relations verified";
    } else {
        out << "FAILED";
    }
    out << " (";
    if (r.oracle_run) out << "oracle " << r.oracle_passed << "/" << r.instances;
    if (r.oracle_run && r.sigma_run) out << ", ";
    if (r.sigma_run) out << "sigma " << r.sigma_passed << "/" << r.instances;
    out << ")\n";
    if (r.disagreements != 0) out << "  oracle and sigma disagree on " << r.disagreements << " instances\n";
    for (const auto& f : r.failures) out << "  failed: " << f << "\n";
}

}  // namespace

int straighten(const std::string& expression, Dims dims, Format format, std::ostream& out, std::ostream& /*err*/) {
    const Expression e = parse_expression(expression);
    const auto [m, n] = resolve(e, dims);
    const StraighteningCertificate cert = straighten_certificate(e, m, n);
    if (format == Format::Json) {
        out << to_json(cert).dump(2) << "\n";
    } else {
        out << print_expression(expression_from(cert.output)) << "\n";
        out << "standard: " << yes_no(cert.standard) << ", oracle verified: " << yes_no(cert.oracle_verified)
            << ", content preserved: " << yes_no(cert.content_preserved) << "\n";
    }
    return cert.verified() ? kExitOk : kExitFailure;
}

int verify(std::istream& in, Format format, std::ostream& out, std::ostream& /*err*/) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("certificate is not valid JSON: ") + e.what());
    }
    const StraighteningCertificate cert = certificate_from_json(doc);
    const CertificateCheck check = recheck(cert);
    if (format == Format::Json) {
        const json result = {
            {"standard", check.standard},
            {"oracleVerified", check.oracle_verified},
            {"contentPreserved", check.content_preserved},
            {"claimsMatch", check.claims_match},
            {"valid", check.valid()},
        };
        out << result.dump(2) << "\n";
    } else {
        out << "standard: " << yes_no(check.standard) << ", oracle verified: " << yes_no(check.oracle_verified)
            << ", content preserved: " << yes_no(check.content_preserved)
            << ", recorded verdicts match: " << yes_no(check.claims_match) << "\n";
        out << (check.valid() ? "certificate valid" : "certificate INVALID") << "\n";
    }
    return check.valid() ? kExitOk : kExitFailure;
}

int relations(unsigned n, std::optional<RelationFamily> family, Format format, std::ostream& out,
              std::ostream& /*err*/) {
    if (n < 1) throw InvalidInput("relations needs n >= 1");
    if (n > kDefaultPermutationBound) {
        throw BoundExceeded("relations refused for n = " + std::to_string(n) + ": the Leibniz oracle runs for n <= " +
                            std::to_string(kOracleBound) + " and the permutation criterion for n <= " +
                            std::to_string(kDefaultPermutationBound));
    }
    const SweepOptions options{n <= kOracleBound, true};
    std::vector<SweepReport> reports;
    if (family) {
        reports.push_back(sweep_relations(*family, n, options));
    } else {
        for (auto f : kAllFamilies) reports.push_back(sweep_relations(f, n, options));
    }
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.ok();

    if (format == Format::Json) {
        json families = json::array();
        for (const auto& r : reports) families.push_back(report_to_json(r));
        out << json{{"n", n}, {"families", std::move(families)}, {"ok", ok}}.dump(2) << "\n";
    } else {
        for (const auto& r : reports) report_to_text(r, out);
    }
    return ok ? kExitOk : kExitFailure;
}

int independence(unsigned m, unsigned n, unsigned max_factors, Format format, std::ostream& out,
                 std::ostream& /*err*/) {
    const IndependenceReport r = verify_independence(m, n, max_factors);
    if (format == Format::Json) {
        const json doc = {
            {"m", r.m},
            {"n", r.n},
            {"inner", r.inner},
            {"maxFactors", r.max_factors},
            {"standardMonomials", r.standard_count},
            {"distinctWitnesses", r.distinct_witnesses},
            {"witnessesDistinct", r.witnesses_distinct},
            {"decodeInverts", r.decode_inverts},
            {"rank", r.rank},
            {"rankEqualsCount", r.rank_equals_count()},
            {"independent", r.independent()},
        };
        out << doc.dump(2) << "\n";
    } else {
        out << "m=" << r.m << " n=" << r.n << " N=" << r.inner << " r<=" << r.max_factors << ": "
            << "standard monomials: " << r.standard_count << "\n";
        out << "  leading witnesses distinct: " << yes_no(r.witnesses_distinct) << " (" << r.distinct_witnesses
            << ")\n";
        out << "  decode inverts witness map: " << yes_no(r.decode_inverts) << "\n";
        out << "  exact rank: " << r.rank << (r.rank_equals_count() ? " = " : " != ") << "count\n";
        out << (r.independent() ? "independent" : "NOT independent") << "\n";
    }
    return r.independent() ? kExitOk : kExitFailure;
}

int leading(const std::string& expression, Dims dims, Format format, std::ostream& out, std::ostream& /*err*/) {
    const Expression e = parse_expression(expression);
    const auto [m, n] = resolve(e, dims);
    const Specialization spec(m, n, std::min(m, n));

    bool ok = true;
    json words = json::array();
    std::ostringstream text;
    for (const auto& term : e.terms) {
        const auto word = canonicalize(term.word);
        if (!word) {
            text << term.word << ": zero (size-mismatched minor)\n";
            continue;
        }
        const LeadingWitness witness = leading_witness(*word, spec);
        const bool standard = is_standard(*word);

        std::optional<std::vector<IndexSet>> rows;
        std::optional<std::vector<IndexSet>> cols;
        try {
            rows = decode_leading(witness.monomial, WitnessSide::Rows);
            cols = decode_leading(witness.monomial, WitnessSide::Cols);
        } catch (const DecodeError&) {
            rows.reset();
            cols.reset();
        }
        bool inverts = rows.has_value() && rows->size() == word->size();
        for (std::size_t i = 0; inverts && i < word->size(); ++i) {
            inverts = (*rows)[i] == word->factors[i].rows && (*cols)[i] == word->factors[i].cols;
        }
        if (standard && !inverts) ok = false;

        std::optional<Monomial> brute;
        std::size_t degree = 0;
        for (const auto& f : word->factors) degree += f.order();
        if (degree <= kBruteForceDegree) brute = leading_monomial(specialize(expand(*word, m, n), spec));
        const bool checked = brute.has_value();
        const bool agrees = checked && *brute == witness.monomial;
        if (checked && !agrees) ok = false;

        json entry = {
            {"word", word->to_string()},
            {"standard", standard},
            {"witness", witness.monomial.to_string()},
            {"rows", rows ? sets_to_json(*rows) : json(nullptr)},
            {"cols", cols ? sets_to_json(*cols) : json(nullptr)},
            {"decodeInverts", inverts},
            {"bruteForce", brute ? json(brute->to_string()) : json(nullptr)},
            {"agrees", checked ? json(agrees) : json(nullptr)},
        };
        words.push_back(std::move(entry));

        text << *word << (standard ? " (standard)" : " (not standard)") << ": " << witness.monomial;
        if (checked) text << (agrees ? "  [matches expansion]" : "  [DIFFERS from expansion " + brute->to_string() + "]");
        text << "\n";
        if (standard) text << "  decodes back: " << yes_no(inverts) << "\n";
    }

    if (format == Format::Json) {
        const json doc = {
            {"schema", "straightlaw-leading/1"},
            {"dims", {{"m", m}, {"n", n}}},
            {"inner", spec.inner},
            {"words", std::move(words)},
            {"ok", ok},
        };
        out << doc.dump(2) << "\n";
    } else {
        out << "X = YZ with N = " << spec.inner << "\n" << text.str();
    }
    return ok ? kExitOk : kExitFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"straightlaw: straightening of products of minors with verified certificates"};
    app.require_subcommand(1);

    std::string expression;
    std::string file = "-";
    Dims dims;
    unsigned m = 0;
    unsigned n = 0;
    unsigned max_factors = 2;
    std::string family;
    bool json_flag = false;
    bool text_flag = false;

    auto add_format = [&](CLI::App* sub) {
        auto* j = sub->add_flag("--json", json_flag, "emit JSON");
        auto* t = sub->add_flag("--text", text_flag, "emit readable text");
        j->excludes(t);
    };
    auto add_dims = [&](CLI::App* sub) {
        sub->add_option("--m", dims.m, "number of rows (default: largest row index)")->check(CLI::Range(1U, kMaxGround));
        sub->add_option("--n", dims.n, "number of columns (default: largest column index)")
            ->check(CLI::Range(1U, kMaxGround));
    };

    auto* s = app.add_subcommand("straighten", "rewrite an expression into standard monomials");
    s->add_option("expression", expression, "e.g. \"[1|2][2|1]\"")->required();
    add_dims(s);
    add_format(s);

    auto* v = app.add_subcommand("verify", "recheck a certificate (file or - for stdin)");
    v->add_option("certificate", file, "certificate path");
    add_format(v);

    auto* r = app.add_subcommand("relations", "certify a relation family exhaustively");
    r->add_option("--n", n, "ground size")->required();
    r->add_option("--family", family, "theorem1, cor1, cor2 or laplace (default: all)")
        ->check(CLI::IsMember({"theorem1", "cor1", "cor2", "laplace"}));
    add_format(r);

    auto* ind = app.add_subcommand("independence", "check linear independence of standard monomials");
    ind->add_option("--m", m, "number of rows")->required();
    ind->add_option("--n", n, "number of columns")->required();
    ind->add_option("--max-factors", max_factors, "largest number of factors")->capture_default_str();
    add_format(ind);

    auto* lead = app.add_subcommand("leading", "leading witnesses under X = YZ");
    lead->add_option("expression", expression, "e.g. \"[1 2|1 3][2|2]\"")->required();
    add_dims(lead);
    add_format(lead);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto format_or = [&](Format fallback) {
        if (json_flag) return Format::Json;
        if (text_flag) return Format::Text;
        return fallback;
    };

    try {
        if (s->parsed()) return straighten(expression, dims, format_or(Format::Json), out, err);
        if (v->parsed()) {
            if (file == "-") return verify(std::cin, format_or(Format::Text), out, err);
            std::ifstream in(file);
            if (!in) throw InvalidInput("cannot open " + file);
            return verify(in, format_or(Format::Text), out, err);
        }
        if (r->parsed()) {
            std::optional<RelationFamily> f;
            if (!family.empty()) f = parse_family(family);
            return relations(n, f, format_or(Format::Text), out, err);
        }
        if (ind->parsed()) return independence(m, n, max_factors, format_or(Format::Text), out, err);
        if (lead->parsed()) return leading(expression, dims, format_or(Format::Text), out, err);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace straightlaw::cli
