#include "lcgeo/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

#include "lcgeo/error.hpp"

namespace lcgeo {

namespace mp = boost::multiprecision;

struct Rational::Big {
    mp::cpp_rational value;
};

namespace {

constexpr std::int64_t kInlineLimit = std::int64_t{1} << 62;

using u128 = unsigned __int128;

u128 abs128(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits_inline(const mp::cpp_int& v) { return v > -kInlineLimit && v < kInlineLimit; }

mp::cpp_int to_cpp_int(__int128 v) {
    bool neg = v < 0;
    u128 mag = abs128(v);
    mp::cpp_int hi = static_cast<std::uint64_t>(mag >> 64);
    mp::cpp_int r = (hi << 64) + static_cast<std::uint64_t>(mag);
    return neg ? mp::cpp_int(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    if (value > -kInlineLimit && value < kInlineLimit) {
        num_ = value;
    } else {
        *this = from_big(Big{mp::cpp_rational(value)});
    }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
    *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    Rational r;
    if (num > -kInlineLimit && num < kInlineLimit && den < kInlineLimit) {
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    r.big_ = std::make_shared<const Big>(Big{mp::cpp_rational(to_cpp_int(num), to_cpp_int(den))});
    return r;
}

Rational Rational::from_big(Big value) {
    const auto n = mp::numerator(value.value);
    const auto d = mp::denominator(value.value);
    Rational r;
    if (fits_inline(n) && fits_inline(d)) {
        r.num_ = n.convert_to<std::int64_t>();
        r.den_ = d.convert_to<std::int64_t>();
        return r;
    }
    r.big_ = std::make_shared<const Big>(std::move(value));
    return r;
}

Rational::Big Rational::as_big() const {
    if (big_) return *big_;
    return Big{mp::cpp_rational(num_, den_)};
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw Error(Errc::ParseError, "non-finite value has no rational form");
    if (value == 0.0) return Rational();
    int exp = 0;
    double mant = std::frexp(value, &exp);
    // 53 significant bits scaled to an integer.
    auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    mp::cpp_rational r(m);
    if (exp >= 0) {
        r *= mp::cpp_rational(mp::cpp_int(1) << exp);
    } else {
        r /= mp::cpp_rational(mp::cpp_int(1) << -exp);
    }
    return from_big(Big{r});
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::string_view digits = s;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
        if (digits.empty()) throw Error(Errc::ParseError, "empty integer in rational '" + std::string(text) + "'");
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error(Errc::ParseError, "bad rational '" + std::string(text) + "'");
        }
        return mp::cpp_int(std::string(s.front() == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    mp::cpp_int num = parse_int(text.substr(0, slash));
    mp::cpp_int den = 1;
    if (slash != std::string_view::npos) den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    return from_big(Big{mp::cpp_rational(num, den)});
}

int Rational::sign() const {
    if (big_) return big_->value.sign();
    return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
    if (big_) return mp::denominator(big_->value) == 1;
    return den_ == 1;
}

double Rational::to_double() const {
    if (big_) return big_->value.convert_to<double>();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::numerator_string() const {
    if (big_) return mp::numerator(big_->value).str();
    return std::to_string(num_);
}

std::string Rational::denominator_string() const {
    if (big_) return mp::denominator(big_->value).str();
    return std::to_string(den_);
}

std::string Rational::to_string() const {
    if (is_integer()) return numerator_string();
    return numerator_string() + "/" + denominator_string();
}

Rational Rational::operator-() const {
    if (small()) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return from_big(Big{-big_->value});
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.small() && b.small()) {
        if (a.den_ == b.den_) return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
        return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                                   static_cast<__int128>(a.den_) * b.den_);
    }
    return Rational::from_big(Rational::Big{a.as_big().value + b.as_big().value});
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.small() && b.small()) {
        return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    return Rational::from_big(Rational::Big{a.as_big().value * b.as_big().value});
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "rational division by zero");
    if (a.small() && b.small()) {
        return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    return Rational::from_big(Rational::Big{a.as_big().value / b.as_big().value});
}

bool operator==(const Rational& a, const Rational& b) {
    if (a.small() && b.small()) return a.num_ == b.num_ && a.den_ == b.den_;
    // Normalization keeps inline and spilled ranges disjoint.
    if (a.small() != b.small()) return false;
    return a.big_->value == b.big_->value;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.small() && b.small()) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    auto l = a.as_big().value;
    auto r = b.as_big().value;
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace lcgeo
