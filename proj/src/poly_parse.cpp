#include <cctype>
#include <string>

#include "ptcurves/bivariate_poly.hpp"

namespace ptcurves {

namespace {

class Parser {
public:
    Parser(const PrimeModulus& mod, std::string_view text) : mod_(mod), text_(text) {}

    BivariatePoly run() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        for (;;) {
            skip_ws();
            term(negate);
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            negate = c == '-';
            ++pos_;
        }
        if (terms_.empty()) fail("empty polynomial");
        return BivariatePoly(mod_, std::move(terms_));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        // Polynomials are single-line, but count newlines for multi-line config values.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw UsageError("polynomial parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + what);
    }

    u64 integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        u64 v = 0;
        const u64 p = mod_.value();
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = mod_.add(mod_.mul(v, 10 % p), static_cast<u64>(peek() - '0') % p);
            ++pos_;
        }
        return v;
    }

    int exponent() {
        skip_ws();
        if (peek() != '^') return 1;
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        long e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + (peek() - '0');
            if (e > 1'000'000) fail("exponent too large");
            ++pos_;
        }
        return static_cast<int>(e);
    }

    void term(bool negate) {
        u64 coeff = 1;
        int ex = 0, ey = 0;
        for (bool first = true;; first = false) {
            skip_ws();
            if (!first) {
                if (peek() != '*') break;
                ++pos_;
                skip_ws();
            }
            char c = peek();
            if (c == 'x' || c == 'X') {
                ++pos_;
                ex += exponent();
            } else if (c == 'y' || c == 'Y') {
                ++pos_;
                ey += exponent();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = mod_.mul(coeff, integer());
            } else {
                fail(at_end() ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
            }
        }
        if (negate) coeff = mod_.neg(coeff);
        auto& slot = terms_[{ex, ey}];
        slot = mod_.add(slot, coeff);
    }

    const PrimeModulus& mod_;
    std::string_view text_;
    std::size_t pos_ = 0;
    std::map<BivariatePoly::Monomial, u64> terms_;
};

} // namespace

BivariatePoly parse_poly(const PrimeModulus& mod, std::string_view text) { return Parser(mod, text).run(); }

} // namespace ptcurves
