#pragma once

#include <cctype>
#include <string>

#include "poly.hpp"

namespace grfilt {

// Grammar:   expr   := ['-'] term (('+'|'-') term)*
//            term   := factor ('*'? factor)*
//            factor := nat | var ('^' nat)? | '(' expr ')'
// Whitespace is insignificant; coefficients are decimal integers reduced
// mod p; juxtaposition multiplies (e.g. "3x", "z^2y").
namespace detail {

class PolyParser {
public:
    PolyParser(const Ring& R, const std::string& text) : R_(R), s_(text) {}

    Poly run() {
        Poly r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
        return r;
    }

private:
    const Ring& R_;
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        Poly r = term();
        if (neg) r = poly_neg(R_, r);
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Poly t = term();
                r = c == '+' ? poly_add(R_, r, t) : poly_sub(R_, r, t);
            } else {
                break;
            }
        }
        return r;
    }

    Poly term() {
        Poly r = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = poly_mul(R_, r, factor());
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                r = poly_mul(R_, r, factor());
            } else {
                break;
            }
        }
        return r;
    }

    Poly factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly r = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return poly_const(R_, natural());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name = identifier();
            int v = R_.var_index(name);
            if (v < 0) throw ParseError("unknown variable '" + name + "'", start);
            int exp = 1;
            if (peek() == '^') {
                ++pos_;
                std::size_t epos = pos_;
                if (peek() == '-') throw ParseError("negative exponent", epos);
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("expected exponent", pos_);
                exp = static_cast<int>(natural_raw());
            }
            return poly_var(R_, static_cast<std::size_t>(v), exp);
        }
        throw ParseError("expected coefficient, variable or '('", pos_);
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    // Value reduced mod p while reading, so arbitrarily long literals are fine.
    std::int64_t natural() {
        std::int64_t r = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            r = (r * 10 + (s_[pos_] - '0')) % static_cast<std::int64_t>(R_.field.p);
            ++pos_;
        }
        return r;
    }

    std::uint64_t natural_raw() {
        std::uint64_t r = 0;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            r = r * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            if (r > 100000) throw ParseError("exponent too large", start);
            ++pos_;
        }
        return r;
    }
};

}  // namespace detail

inline Poly parse_poly(const Ring& R, const std::string& text) {
    return detail::PolyParser(R, text).run();
}

/// Canonical text form; coefficients are printed balanced (c > p/2 shown as
/// negative) and parse back to the same polynomial.
inline std::string poly_to_string(const Ring& R, const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms) {
        std::uint32_t c = t.c;
        bool neg = c > R.field.p / 2;
        std::uint32_t mag = neg ? R.field.p - c : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < R.nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += R.vars[i];
            if (t.m.e[i] > 1) vars += "^" + std::to_string(t.m.e[i]);
        }
        if (vars.empty()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += vars;
        }
    }
    return out;
}

}  // namespace grfilt
