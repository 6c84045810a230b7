#include "dentedhex/poly_io.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include <json.hpp>

#include "dentedhex/error.hpp"

namespace dentedhex {

namespace {

void append_factor(std::string& out, bool& first, char symbol, std::int32_t exponent) {
    if (exponent == 0) return;
    if (!first) out += '*';
    first = false;
    out += symbol;
    if (exponent != 1) {
        out += '^';
        out += std::to_string(exponent);
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    LaurentPoly run() {
        std::vector<LaurentPoly::Term> terms;
        skip_spaces();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
            skip_spaces();
        }
        terms.push_back(term(negative));
        while (true) {
            skip_spaces();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_spaces();
            terms.push_back(term(op == '-'));
        }
        return LaurentPoly::from_terms(std::move(terms));
    }

private:
    LaurentPoly::Term term(bool negative) {
        Rational coeff(1);
        Monomial m;
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = coefficient();
            if (peek() != '*') return {m, negative ? -coeff : coeff};
            ++pos_;
        }
        while (true) {
            factor(m);
            have_factor = true;
            if (peek() != '*') break;
            ++pos_;
        }
        if (!have_factor) fail("expected factor");
        if (m.x < 0 || m.y < 0) fail("negative X or Y exponent");
        return {m, negative ? -coeff : coeff};
    }

    Rational coefficient() {
        const mpz_class num = digits();
        mpz_class den = 1;
        if (peek() == '/') {
            ++pos_;
            const std::size_t den_pos = pos_;
            den = digits();
            if (den == 0) throw ParseError("zero denominator", den_pos);
        }
        return Rational(mpq_class(num, den));
    }

    mpz_class digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void factor(Monomial& m) {
        const char symbol = peek();
        if (symbol != 'q' && symbol != 'X' && symbol != 'Y') fail("expected 'q', 'X' or 'Y'");
        ++pos_;
        std::int64_t exponent = 1;
        if (peek() == '^') {
            ++pos_;
            exponent = signed_integer();
        }
        std::int32_t& slot = symbol == 'q' ? m.q : (symbol == 'X' ? m.x : m.y);
        const std::int64_t total = std::int64_t{slot} + exponent;
        if (total > std::numeric_limits<std::int32_t>::max() || total < std::numeric_limits<std::int32_t>::min()) {
            fail("exponent out of range");
        }
        slot = static_cast<std::int32_t>(total);
    }

    std::int64_t signed_integer() {
        const std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        const std::size_t digits_start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == digits_start) fail("expected exponent");
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc()) throw ParseError("exponent out of range", start);
        return value;
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_spaces() {
        while (!at_end() && text_[pos_] == ' ') ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string format(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first_term = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c.sign() < 0;
        if (first_term) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first_term = false;
        const Rational magnitude = c.abs();
        const bool constant = m == Monomial{};
        bool first_factor = true;
        if (constant || !magnitude.is_one()) {
            out += magnitude.to_string();
            first_factor = false;
        }
        append_factor(out, first_factor, 'X', m.x);
        append_factor(out, first_factor, 'Y', m.y);
        append_factor(out, first_factor, 'q', m.q);
    }
    return out;
}

LaurentPoly parse_poly(std::string_view text) {
    if (text.empty()) throw ParseError("empty polynomial", 0);
    return Parser(text).run();
}

std::string to_json(const LaurentPoly& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["c"] = c.num().get_str() + "/" + c.den().get_str();
        t["q"] = m.q;
        t["X"] = m.x;
        t["Y"] = m.y;
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json doc;
    doc["terms"] = std::move(terms);
    return doc.dump();
}

LaurentPoly from_json(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    std::vector<LaurentPoly::Term> terms;
    try {
        for (const auto& t : doc.at("terms")) {
            const Monomial m{t.at("q").get<std::int32_t>(), t.at("X").get<std::int32_t>(), t.at("Y").get<std::int32_t>()};
            terms.emplace_back(m, Rational::parse(t.at("c").get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), 0);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace dentedhex
