#include "straightlaw/expression.hpp"

#include <cctype>
#include <sstream>

namespace straightlaw {

ParseError::ParseError(const std::string& message, std::size_t position)
    : InvalidInput("parse error at position " + std::to_string(position) + ": " + message), position_(position) {}

WordCombination Expression::to_combination() const {
    WordCombination out;
    for (const auto& t : terms) add_word(out, t.word, t.coeff);
    return out;
}

unsigned Expression::max_row() const {
    unsigned best = 0;
    for (const auto& t : terms) {
        for (const auto& f : t.word.factors) best = std::max(best, f.rows.max());
    }
    return best;
}

unsigned Expression::max_col() const {
    unsigned best = 0;
    for (const auto& t : terms) {
        for (const auto& f : t.word.factors) best = std::max(best, f.cols.max());
    }
    return best;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression parse() {
        Expression e;
        skip_space();
        if (at_end()) fail("empty expression");
        if (peek() == '0' && lone_zero()) {
            ++pos_;
            skip_space();
            return e;
        }
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        e.terms.push_back(term(negative));
        skip_space();
        while (!at_end()) {
            const char op = peek();
            if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
            ++pos_;
            e.terms.push_back(term(op == '-'));
            skip_space();
        }
        return e;
    }

private:
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    // "0" followed only by whitespace.
    [[nodiscard]] bool lone_zero() const {
        for (std::size_t i = pos_ + 1; i < text_.size(); ++i) {
            if (!std::isspace(static_cast<unsigned char>(text_[i]))) return false;
        }
        return true;
    }

    std::string digits() {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
        return out;
    }

    ExpressionTerm term(bool negative) {
        skip_space();
        ExpressionTerm t{Integer(1), {}};
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) t.coeff = Integer(digits());
        if (negative) t.coeff = -t.coeff;
        skip_space();
        if (at_end() || peek() != '[') fail("expected '[' to start a minor");
        while (!at_end() && peek() == '[') {
            t.word.factors.push_back(factor());
            skip_space();
        }
        return t;
    }

    Minor factor() {
        ++pos_;  // '['
        Minor m;
        m.rows = indices('|');
        ++pos_;
        m.cols = indices(']');
        ++pos_;
        return m;
    }

    IndexSet indices(char terminator) {
        std::vector<unsigned> values;
        while (true) {
            skip_space();
            if (at_end()) fail(std::string("missing '") + terminator + "'");
            const char c = peek();
            if (c == terminator) break;
            if (c == ',') {
                ++pos_;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "' in a minor");
            const std::size_t start = pos_;
            const std::string d = digits();
            if (d.size() > 3 || std::stoul(d) > kMaxGround) {
                pos_ = start;
                fail("index " + d + " above " + std::to_string(kMaxGround));
            }
            const auto v = static_cast<unsigned>(std::stoul(d));
            if (v == 0) {
                pos_ = start;
                fail("indices are 1-based; found 0");
            }
            if (!values.empty() && v <= values.back()) {
                pos_ = start;
                fail("indices must be strictly increasing");
            }
            values.push_back(v);
        }
        return IndexSet(std::span<const unsigned>(values));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string print_expression(const Expression& e) {
    if (e.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : e.terms) {
        if (first) {
            if (t.coeff < 0) os << '-';
        } else {
            os << (t.coeff < 0 ? " - " : " + ");
        }
        Integer magnitude = abs(t.coeff);
        if (magnitude != 1) os << magnitude;
        os << t.word;
        first = false;
    }
    return os.str();
}

Expression expression_from(const WordCombination& c) {
    Expression e;
    for (const auto& [w, coeff] : c) e.terms.push_back({coeff, w});
    return e;
}

}  // namespace straightlaw
