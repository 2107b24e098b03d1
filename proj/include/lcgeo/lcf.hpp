#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcgeo/rational.hpp"

namespace lcgeo {

using Complex = std::complex<double>;

struct Term {
    Exponent exponent;
    Complex coefficient;
};

enum class MagnitudeClass { Zero, Infinitesimal, Appreciable, Unlimited };

// Truncated Levi-Civita series  sum a_q d^q, ascending in q.
//
// Besides the window (maximum number of retained terms) every value carries
// an optional precision frontier: terms at or beyond it are unknown because
// some input was truncated. Exact values have no frontier.
class LcfNumber {
public:
    static constexpr std::size_t kDefaultWindow = 8;
    static constexpr double kPrune = 1e-12;

    LcfNumber() = default;
    LcfNumber(double x);   // NOLINT(google-explicit-constructor)
    LcfNumber(Complex c);  // NOLINT(google-explicit-constructor)

    static LcfNumber from_real(double x, std::size_t window = kDefaultWindow);
    static LcfNumber from_complex(Complex c, std::size_t window = kDefaultWindow);
    static LcfNumber d_pow(const Exponent& q, std::size_t window = kDefaultWindow);
    static LcfNumber monomial(Complex c, const Exponent& q, std::size_t window = kDefaultWindow);
    // Sorts, merges equal exponents, drops zero coefficients, truncates.
    static LcfNumber from_terms(std::vector<Term> terms, std::size_t window = kDefaultWindow,
                                std::optional<Exponent> precision = std::nullopt);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t window() const { return window_; }
    const std::optional<Exponent>& precision() const { return precision_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;
    Term leading() const;
    Complex coefficient(const Exponent& q) const;
    LcfNumber with_window(std::size_t window) const;

    LcfNumber operator-() const;
    friend LcfNumber operator+(const LcfNumber& a, const LcfNumber& b);
    friend LcfNumber operator-(const LcfNumber& a, const LcfNumber& b);
    friend LcfNumber operator*(const LcfNumber& a, const LcfNumber& b);
    friend LcfNumber operator/(const LcfNumber& a, const LcfNumber& b);
    LcfNumber& operator+=(const LcfNumber& b) { return *this = *this + b; }
    LcfNumber& operator-=(const LcfNumber& b) { return *this = *this - b; }
    LcfNumber& operator*=(const LcfNumber& b) { return *this = *this * b; }
    LcfNumber& operator/=(const LcfNumber& b) { return *this = *this / b; }

    // Structural equality of the term lists.
    friend bool operator==(const LcfNumber& a, const LcfNumber& b);

private:
    std::vector<Term> terms_;
    std::size_t window_ = kDefaultWindow;
    std::optional<Exponent> precision_;

    void normalize_tail();
    friend LcfNumber inv(const LcfNumber& a);
    friend LcfNumber nth_root(const LcfNumber& a, unsigned n);
    friend LcfNumber conj(const LcfNumber& a);
    friend LcfNumber scale_monomial(const LcfNumber& a, Complex c, const Exponent& q);
};

LcfNumber inv(const LcfNumber& a);
LcfNumber nth_root(const LcfNumber& a, unsigned n);
LcfNumber sqrt(const LcfNumber& a);
LcfNumber pow(const LcfNumber& a, unsigned n);
LcfNumber conj(const LcfNumber& a);
// Real input: multiply by the sign of the leading coefficient. Complex input:
// the modulus sqrt(a * conj(a)).
LcfNumber abs(const LcfNumber& a);
// a * c * d^q, exact.
LcfNumber scale_monomial(const LcfNumber& a, Complex c, const Exponent& q);

Complex shadow(const LcfNumber& a);
MagnitudeClass classify(const LcfNumber& a);
bool infinitely_close(const LcfNumber& a, const LcfNumber& b);
std::strong_ordering cmp_real(const LcfNumber& a, const LcfNumber& b);

// Magnitude order: smaller leading exponent wins, then larger |coefficient|.
// Zero is below everything.
std::weak_ordering cmp_magnitude(const LcfNumber& a, const LcfNumber& b);

std::string_view to_string(MagnitudeClass m);

struct FormatOptions {
    int digits = 6;
    bool fixed = false;
};

std::string format_coefficient(Complex c, const FormatOptions& opts = {});
std::string to_string(const LcfNumber& a, const FormatOptions& opts = {});
LcfNumber parse_lcf(std::string_view text, std::size_t window = LcfNumber::kDefaultWindow);

}  // namespace lcgeo
