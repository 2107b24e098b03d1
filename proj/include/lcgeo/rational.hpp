#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace lcgeo {

// Exact rational with an inline 64-bit fast path; values that do not fit
// spill into an arbitrary-precision representation.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    // Exact binary value of a finite double.
    static Rational from_double(double value);
    static Rational parse(std::string_view text);

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;
    double to_double() const;
    std::string to_string() const;

    // Numerator and denominator in decimal (denominator > 0, lowest terms).
    std::string numerator_string() const;
    std::string denominator_string() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    struct Big;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const Big> big_;

    bool small() const { return !big_; }
    Big as_big() const;
    static Rational from_big(Big value);
    static Rational from_wide(__int128 num, __int128 den);

    friend struct RationalAccess;
};

using Exponent = Rational;

}  // namespace lcgeo
