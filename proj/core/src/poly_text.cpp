#include "milnor/poly_text.hpp"

#include <cctype>
#include <sstream>

namespace milnor {

namespace {

constexpr int kMaxExponent = 9999;

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    BiPoly run() {
        BiPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiPoly parse_expr() {
        BiPoly v = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                v += parse_term();
            } else if (c == '-') {
                ++pos_;
                v -= parse_term();
            } else {
                return v;
            }
        }
    }

    BiPoly parse_term() {
        BiPoly v = parse_factor();
        while (consume('*')) v = v * parse_factor();
        return v;
    }

    BiPoly parse_factor() {
        BiPoly b = parse_base();
        if (consume('^')) {
            int e = parse_nat("exponent must be a nonnegative integer literal");
            b = b.pow(e);
        }
        return b;
    }

    BiPoly parse_base() {
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return BiPoly::variable(Var::X);
        }
        if (c == 'y') {
            ++pos_;
            return BiPoly::variable(Var::Y);
        }
        if (c == '(') {
            ++pos_;
            BiPoly inner = parse_expr();
            if (!consume(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError(std::string("unknown identifier '") + c + "'", pos_);
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    BiPoly parse_rational() {
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        Integer num = parse_integer_digits("expected digits");
        if (negative) num = -num;
        Integer den = 1;
        if (consume('/')) {
            std::size_t at = pos_;
            den = parse_integer_digits("expected a positive integer denominator");
            if (den == 0) throw ParseError("denominator must be positive", at);
        }
        return BiPoly::constant(make_rational(num, den));
    }

    Integer parse_integer_digits(const char* error) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(error, start);
        return Integer(text_.substr(start, pos_ - start));
    }

    int parse_nat(const char* error) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(error, start);
        Integer e(text_.substr(start, pos_ - start));
        if (e > kMaxExponent) throw ParseError("exponent too large", start);
        return static_cast<int>(e.get_si());
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

std::string format_monomial(const Monomial& m) {
    std::ostringstream os;
    if (m.x > 0) {
        os << 'x';
        if (m.x > 1) os << '^' << m.x;
    }
    if (m.y > 0) {
        if (m.x > 0) os << '*';
        os << 'y';
        if (m.y > 1) os << '^' << m.y;
    }
    return os.str();
}

}  // namespace

BiPoly parse_poly(const std::string& text) { return Parser(text).run(); }

std::string format_poly(const BiPoly& p) {
    if (p.is_zero()) return "0";

    std::ostringstream os;
    bool first = true;
    // grlex-descending: iterate the ordered map backwards
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool is_const = (m.x == 0 && m.y == 0);
        Rational mag = abs(c);
        if (first) {
            // A bare leading '-' is not in the grammar, so a negative unit
            // coefficient is spelled out ("-1*x^3").
            if (c < 0 && !is_const && mag == 1) {
                os << "-1*" << format_monomial(m);
            } else if (is_const) {
                os << to_string(c);
            } else if (mag == 1) {
                os << format_monomial(m);
            } else {
                os << to_string(c) << '*' << format_monomial(m);
            }
            first = false;
            continue;
        }
        os << (c < 0 ? " - " : " + ");
        if (is_const) {
            os << to_string(mag);
        } else if (mag == 1) {
            os << format_monomial(m);
        } else {
            os << to_string(mag) << '*' << format_monomial(m);
        }
    }
    return os.str();
}

}  // namespace milnor
