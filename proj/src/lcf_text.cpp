#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "lcgeo/error.hpp"
#include "lcgeo/lcf.hpp"

namespace lcgeo {

namespace {

std::string format_real(double v, const FormatOptions& opts) {
    char buf[64];
    if (opts.fixed) {
        std::snprintf(buf, sizeof buf, "%.*f", opts.digits, v);
    } else {
        std::snprintf(buf, sizeof buf, "%.*g", opts.digits, v);
    }
    std::string s(buf);
    // "-0" and "-0.0000" carry no information.
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

bool is_real_coefficient(Complex c) { return std::abs(c.imag()) <= LcfNumber::kPrune * std::abs(c); }

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    double number() {
        skip_ws();
        std::string tail(text_.substr(pos_));
        const char* begin = tail.c_str();
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) fail("expected number");
        pos_ += static_cast<std::size_t>(end - begin);
        return v;
    }
    Exponent exponent() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        auto digits = [&] {
            std::size_t d = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (d == pos_) fail("expected exponent digits");
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            digits();
        }
        return Exponent::parse(text_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Term parse_term(Cursor& cur, double sign) {
    Complex coef(1.0, 0.0);
    bool have_coef = false;
    if (cur.peek() == '(') {
        cur.expect('(');
        double re = cur.number();
        double im_sign = 1.0;
        if (cur.accept('-')) {
            im_sign = -1.0;
        } else {
            cur.expect('+');
        }
        double im = cur.number();
        cur.expect('i');
        cur.expect(')');
        coef = Complex(re, im_sign * im);
        have_coef = true;
    } else if (cur.peek() != 'd') {
        coef = Complex(cur.number(), 0.0);
        have_coef = true;
    }
    Exponent q(0);
    bool have_d = false;
    if (have_coef && cur.accept('*')) {
        have_d = true;
    } else if (!have_coef) {
        have_d = true;
    }
    if (have_d) {
        cur.expect('d');
        q = Exponent(1);
        if (cur.accept('^')) q = cur.exponent();
    }
    return {q, coef * sign};
}

}  // namespace

std::string format_coefficient(Complex c, const FormatOptions& opts) {
    if (is_real_coefficient(c)) return format_real(c.real(), opts);
    std::string re = format_real(c.real(), opts);
    std::string im = format_real(std::abs(c.imag()), opts);
    return "(" + re + (c.imag() < 0.0 ? "-" : "+") + im + "i)";
}

std::string to_string(const LcfNumber& a, const FormatOptions& opts) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : a.terms()) {
        Complex c = t.coefficient;
        bool negative = is_real_coefficient(c) && c.real() < 0.0;
        if (first) {
            out += negative ? "-" + format_coefficient(-c, opts) : format_coefficient(c, opts);
        } else {
            out += negative ? " - " + format_coefficient(-c, opts) : " + " + format_coefficient(c, opts);
        }
        out += "*d^" + t.exponent.to_string();
        first = false;
    }
    return out;
}

LcfNumber parse_lcf(std::string_view text, std::size_t window) {
    Cursor cur(text);
    std::vector<Term> terms;
    double sign = 1.0;
    if (cur.accept('-')) sign = -1.0;
    terms.push_back(parse_term(cur, sign));
    while (!cur.done()) {
        if (cur.accept('+')) {
            sign = 1.0;
        } else if (cur.accept('-')) {
            sign = -1.0;
        } else {
            cur.fail("expected '+' or '-'");
        }
        terms.push_back(parse_term(cur, sign));
    }
    return LcfNumber::from_terms(std::move(terms), window);
}

}  // namespace lcgeo
