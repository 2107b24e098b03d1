#include "lcgeo/lcf.hpp"

#include <algorithm>
#include <cmath>

#include "lcgeo/error.hpp"

namespace lcgeo {

namespace {

using OptExp = std::optional<Exponent>;

OptExp min_opt(const OptExp& a, const OptExp& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

OptExp add_opt(const OptExp& a, const OptExp& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

// Leading exponent of a nonzero value, or the frontier of an inexact zero.
OptExp effective_lead(const LcfNumber& x) {
    if (!x.is_zero()) return x.terms().front().exponent;
    return x.precision();
}

bool exact_zero(const LcfNumber& x) { return x.is_zero() && !x.precision(); }

Complex principal_root(Complex c, unsigned n) {
    if (c.imag() == 0.0) c = Complex(c.real(), 0.0);
    if (n == 2) return std::sqrt(c);
    if (c.imag() == 0.0 && c.real() > 0.0) return {std::pow(c.real(), 1.0 / n), 0.0};
    return std::pow(c, 1.0 / static_cast<double>(n));
}

// A merged coefficient is noise when it is small against the terms that
// produced it, or below the prune threshold outright.
bool cancelled(Complex sum, double scale) { return std::abs(sum) <= LcfNumber::kPrune * std::max(1.0, scale); }

}  // namespace

LcfNumber::LcfNumber(double x) {
    if (x != 0.0) terms_.push_back({Exponent(0), Complex(x, 0.0)});
}

LcfNumber::LcfNumber(Complex c) {
    if (c != Complex(0.0, 0.0)) terms_.push_back({Exponent(0), c});
}

LcfNumber LcfNumber::from_real(double x, std::size_t window) {
    LcfNumber r(x);
    r.window_ = window;
    return r;
}

LcfNumber LcfNumber::from_complex(Complex c, std::size_t window) {
    LcfNumber r(c);
    r.window_ = window;
    return r;
}

LcfNumber LcfNumber::d_pow(const Exponent& q, std::size_t window) { return monomial(Complex(1.0, 0.0), q, window); }

LcfNumber LcfNumber::monomial(Complex c, const Exponent& q, std::size_t window) {
    LcfNumber r;
    r.window_ = window;
    if (c != Complex(0.0, 0.0)) r.terms_.push_back({q, c});
    return r;
}

LcfNumber LcfNumber::from_terms(std::vector<Term> terms, std::size_t window, std::optional<Exponent> precision) {
    if (window == 0) throw Error(Errc::ParseError, "window must be positive");
    std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    LcfNumber r;
    r.window_ = window;
    r.precision_ = std::move(precision);
    for (auto& t : terms) {
        if (!r.terms_.empty() && r.terms_.back().exponent == t.exponent) {
            r.terms_.back().coefficient += t.coefficient;
        } else {
            r.terms_.push_back(std::move(t));
        }
    }
    std::erase_if(r.terms_, [](const Term& t) { return t.coefficient == Complex(0.0, 0.0); });
    r.normalize_tail();
    return r;
}

void LcfNumber::normalize_tail() {
    if (precision_) {
        auto cut = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exponent >= *precision_; });
        terms_.erase(cut, terms_.end());
    }
    if (terms_.size() > window_) {
        precision_ = min_opt(precision_, terms_[window_].exponent);
        terms_.resize(window_);
    }
}

bool LcfNumber::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
        return std::abs(t.coefficient.imag()) <= kPrune * std::abs(t.coefficient);
    });
}

Term LcfNumber::leading() const {
    if (terms_.empty()) throw Error(Errc::EmptySeries, "leading term of zero");
    return terms_.front();
}

Complex LcfNumber::coefficient(const Exponent& q) const {
    for (const auto& t : terms_) {
        if (t.exponent == q) return t.coefficient;
        if (t.exponent > q) break;
    }
    return {0.0, 0.0};
}

LcfNumber LcfNumber::with_window(std::size_t window) const {
    LcfNumber r = *this;
    r.window_ = window;
    r.normalize_tail();
    return r;
}

LcfNumber LcfNumber::operator-() const {
    LcfNumber r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
}

LcfNumber operator+(const LcfNumber& a, const LcfNumber& b) {
    if (exact_zero(a)) return b.window_ >= a.window_ ? b : b.with_window(a.window_);
    if (exact_zero(b)) return a.window_ >= b.window_ ? a : a.with_window(b.window_);
    LcfNumber r;
    r.window_ = std::max(a.window_, b.window_);
    r.precision_ = min_opt(a.precision_, b.precision_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent < j->exponent)) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->exponent < i->exponent) {
            r.terms_.push_back(*j++);
        } else {
            Complex s = i->coefficient + j->coefficient;
            double scale = std::max(std::abs(i->coefficient), std::abs(j->coefficient));
            if (!cancelled(s, scale)) r.terms_.push_back({i->exponent, s});
            ++i;
            ++j;
        }
    }
    r.normalize_tail();
    return r;
}

LcfNumber operator-(const LcfNumber& a, const LcfNumber& b) { return a + (-b); }

LcfNumber scale_monomial(const LcfNumber& a, Complex c, const Exponent& q) {
    LcfNumber r;
    r.window_ = a.window_;
    if (c == Complex(0.0, 0.0)) return r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.push_back({t.exponent + q, t.coefficient * c});
    if (a.precision_) r.precision_ = *a.precision_ + q;
    return r;
}

LcfNumber operator*(const LcfNumber& a, const LcfNumber& b) {
    LcfNumber r;
    r.window_ = std::max(a.window_, b.window_);
    if (exact_zero(a) || exact_zero(b)) return r;
    r.precision_ = min_opt(add_opt(a.precision_, effective_lead(b)), add_opt(b.precision_, effective_lead(a)));
    if (a.is_zero() || b.is_zero()) return r;

    struct Partial {
        Exponent exponent;
        Complex value;
        double scale;
    };
    std::vector<Partial> parts;
    parts.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            Exponent e = s.exponent + t.exponent;
            if (r.precision_ && e >= *r.precision_) break;
            Complex v = s.coefficient * t.coefficient;
            parts.push_back({std::move(e), v, std::abs(v)});
        }
    }
    std::stable_sort(parts.begin(), parts.end(), [](const Partial& x, const Partial& y) { return x.exponent < y.exponent; });
    for (std::size_t k = 0; k < parts.size();) {
        Complex sum = parts[k].value;
        double scale = parts[k].scale;
        std::size_t m = k + 1;
        while (m < parts.size() && parts[m].exponent == parts[k].exponent) {
            sum += parts[m].value;
            scale += parts[m].scale;
            ++m;
        }
        if (sum != Complex(0.0, 0.0) && (m - k == 1 || !cancelled(sum, scale))) r.terms_.push_back({parts[k].exponent, sum});
        k = m;
    }
    r.normalize_tail();
    return r;
}

LcfNumber inv(const LcfNumber& a) {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    const Term lead = a.terms_.front();
    const std::size_t w = a.window_;
    const Complex c_inv = Complex(1.0, 0.0) / lead.coefficient;

    // a = c d^q (1 + u)
    LcfNumber u;
    u.window_ = w;
    for (std::size_t k = 1; k < a.terms_.size(); ++k)
        u.terms_.push_back({a.terms_[k].exponent - lead.exponent, a.terms_[k].coefficient * c_inv});
    if (a.precision_) u.precision_ = *a.precision_ - lead.exponent;

    LcfNumber sum = LcfNumber::from_real(1.0, w);
    if (!exact_zero(u)) {
        const LcfNumber step = -u;
        LcfNumber power = sum;
        for (std::size_t j = 1; j < w; ++j) {
            power = power * step;
            if (exact_zero(power)) break;
            sum = sum + power;
        }
        if (!u.is_zero()) {
            sum.precision_ = min_opt(sum.precision_, u.terms_.front().exponent * Exponent(static_cast<std::int64_t>(w)));
            sum.normalize_tail();
        }
    }
    return scale_monomial(sum, c_inv, -lead.exponent);
}

LcfNumber operator/(const LcfNumber& a, const LcfNumber& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
    if (b.terms_.size() == 1 && !b.precision_) {
        const Term& t = b.terms_.front();
        LcfNumber r = scale_monomial(a, Complex(1.0, 0.0) / t.coefficient, -t.exponent);
        r.window_ = std::max(a.window_, b.window_);
        return r;
    }
    return a * inv(b);
}

LcfNumber nth_root(const LcfNumber& a, unsigned n) {
    if (n == 0) throw Error(Errc::RootOfZero, "root of degree zero");
    if (a.is_zero()) throw Error(Errc::RootOfZero, "root of zero");
    if (n == 1) return a;
    const Term lead = a.terms_.front();
    const std::size_t w = a.window_;
    const Complex c_inv = Complex(1.0, 0.0) / lead.coefficient;

    LcfNumber u;
    u.window_ = w;
    for (std::size_t k = 1; k < a.terms_.size(); ++k)
        u.terms_.push_back({a.terms_[k].exponent - lead.exponent, a.terms_[k].coefficient * c_inv});
    if (a.precision_) u.precision_ = *a.precision_ - lead.exponent;

    LcfNumber sum = LcfNumber::from_real(1.0, w);
    if (!exact_zero(u)) {
        const double alpha = 1.0 / static_cast<double>(n);
        double binom = 1.0;
        LcfNumber power = sum;
        for (std::size_t j = 1; j < w; ++j) {
            binom *= (alpha - static_cast<double>(j - 1)) / static_cast<double>(j);
            power = power * u;
            if (exact_zero(power)) break;
            sum = sum + scale_monomial(power, Complex(binom, 0.0), Exponent(0));
        }
        if (!u.is_zero()) {
            sum.precision_ = min_opt(sum.precision_, u.terms_.front().exponent * Exponent(static_cast<std::int64_t>(w)));
            sum.normalize_tail();
        }
    }
    return scale_monomial(sum, principal_root(lead.coefficient, n), lead.exponent / Exponent(static_cast<std::int64_t>(n)));
}

LcfNumber sqrt(const LcfNumber& a) { return nth_root(a, 2); }

LcfNumber pow(const LcfNumber& a, unsigned n) {
    LcfNumber r = LcfNumber::from_real(1.0, a.window());
    for (unsigned k = 0; k < n; ++k) r = r * a;
    return r;
}

LcfNumber conj(const LcfNumber& a) {
    LcfNumber r = a;
    for (auto& t : r.terms_) t.coefficient = std::conj(t.coefficient);
    return r;
}

LcfNumber abs(const LcfNumber& a) {
    if (a.is_zero()) return a;
    if (a.is_real()) return a.leading().coefficient.real() < 0.0 ? -a : a;
    LcfNumber m = a * conj(a);
    std::vector<Term> real_terms;
    for (const auto& t : m.terms()) real_terms.push_back({t.exponent, Complex(t.coefficient.real(), 0.0)});
    return sqrt(LcfNumber::from_terms(std::move(real_terms), m.window(), m.precision()));
}

Complex shadow(const LcfNumber& a) {
    if (a.is_zero()) return {0.0, 0.0};
    if (a.leading().exponent.sign() < 0) throw Error(Errc::UnlimitedShadow, "shadow of unlimited " + to_string(a));
    return a.coefficient(Exponent(0));
}

MagnitudeClass classify(const LcfNumber& a) {
    if (a.is_zero()) return MagnitudeClass::Zero;
    int s = a.leading().exponent.sign();
    if (s > 0) return MagnitudeClass::Infinitesimal;
    if (s < 0) return MagnitudeClass::Unlimited;
    return MagnitudeClass::Appreciable;
}

bool infinitely_close(const LcfNumber& a, const LcfNumber& b) {
    auto m = classify(a - b);
    return m == MagnitudeClass::Zero || m == MagnitudeClass::Infinitesimal;
}

std::strong_ordering cmp_real(const LcfNumber& a, const LcfNumber& b) {
    if (!a.is_real() || !b.is_real()) throw Error(Errc::NonRealComparison, "ordering requires real coefficients");
    LcfNumber diff = a - b;
    if (diff.is_zero()) return std::strong_ordering::equal;
    return diff.leading().coefficient.real() < 0.0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::weak_ordering cmp_magnitude(const LcfNumber& a, const LcfNumber& b) {
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero()) return std::weak_ordering::equivalent;
        return a.is_zero() ? std::weak_ordering::less : std::weak_ordering::greater;
    }
    const Term ta = a.leading();
    const Term tb = b.leading();
    if (ta.exponent != tb.exponent)
        return ta.exponent < tb.exponent ? std::weak_ordering::greater : std::weak_ordering::less;
    double ma = std::abs(ta.coefficient);
    double mb = std::abs(tb.coefficient);
    if (ma == mb) return std::weak_ordering::equivalent;
    return ma < mb ? std::weak_ordering::less : std::weak_ordering::greater;
}

bool operator==(const LcfNumber& a, const LcfNumber& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        if (a.terms_[k].exponent != b.terms_[k].exponent || a.terms_[k].coefficient != b.terms_[k].coefficient)
            return false;
    }
    return true;
}

std::string_view to_string(MagnitudeClass m) {
    switch (m) {
        case MagnitudeClass::Zero: return "Zero";
        case MagnitudeClass::Infinitesimal: return "Infinitesimal";
        case MagnitudeClass::Appreciable: return "Appreciable";
        case MagnitudeClass::Unlimited: return "Unlimited";
    }
    return "?";
}

}  // namespace lcgeo
