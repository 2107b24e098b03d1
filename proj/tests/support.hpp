#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "lcgeo/desing.hpp"
#include "lcgeo/lcf.hpp"

namespace lcgeo::testing {

inline double rel_gap(Complex x, Complex y) {
    return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

// Coefficients agree on every exponent below both precision frontiers.
inline bool agree(const LcfNumber& x, const LcfNumber& y, double tol) {
    std::optional<Exponent> frontier = x.precision();
    if (y.precision() && (!frontier || *y.precision() < *frontier)) frontier = y.precision();
    std::vector<Exponent> exps;
    for (const auto& t : x.terms()) exps.push_back(t.exponent);
    for (const auto& t : y.terms()) exps.push_back(t.exponent);
    for (const auto& e : exps) {
        if (frontier && e >= *frontier) continue;
        if (rel_gap(x.coefficient(e), y.coefficient(e)) > tol) return false;
    }
    return true;
}

struct Generator {
    std::mt19937_64 rng;
    explicit Generator(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    double nonzero(double lo, double hi) {
        double v = 0.0;
        while (std::abs(v) < 0.1) v = uniform(lo, hi);
        return v;
    }

    Exponent exponent(int lo, int hi) {
        int den = integer(1, 4);
        int num = integer(lo * den, hi * den);
        return Exponent(num, den);
    }

    Complex coefficient(bool complex_values) {
        return complex_values ? Complex(nonzero(-2, 2), nonzero(-2, 2)) : Complex(nonzero(-2, 2), 0.0);
    }

    // Up to `max_terms` terms with exponents in [lo, hi], denominators <= 4.
    LcfNumber number(int lo, int hi, std::size_t max_terms, bool complex_values) {
        std::size_t n = static_cast<std::size_t>(integer(1, static_cast<int>(max_terms)));
        std::vector<Term> terms;
        std::set<Exponent> used;
        while (terms.size() < n) {
            Exponent e = exponent(lo, hi);
            if (!used.insert(e).second) continue;
            terms.push_back({e, coefficient(complex_values)});
        }
        return LcfNumber::from_terms(std::move(terms));
    }

    // Leading exponent exactly `lead`, further terms above it.
    LcfNumber with_lead(const Exponent& lead, std::size_t max_terms, bool complex_values) {
        std::vector<Term> terms{{lead, coefficient(complex_values)}};
        std::size_t n = static_cast<std::size_t>(integer(0, static_cast<int>(max_terms) - 1));
        std::set<Exponent> used{lead};
        while (terms.size() < n + 1) {
            Exponent e = lead + Exponent(integer(1, 8), integer(1, 4));
            if (!used.insert(e).second) continue;
            terms.push_back({e, coefficient(complex_values)});
        }
        return LcfNumber::from_terms(std::move(terms));
    }

    std::array<Complex, 3> standard_vec(bool complex_values = false) {
        return {coefficient(complex_values), coefficient(complex_values), coefficient(complex_values)};
    }
};

// Plain complex-double limit of a path: chordal gap between the max-normalized
// evaluations at t0 +- 2^-j and `expected`, for the finest j. Returns a negative
// value when the gaps fail to shrink from j = 10 to j = 20.
inline double limit_gap(const std::function<StdVec(double)>& f, double t0, const StdVec& expected, bool lower = true,
                        bool upper = true) {
    double worst = 0.0;
    for (int side : {-1, 1}) {
        if ((side < 0 && !lower) || (side > 0 && !upper)) continue;
        double coarse = chordal_distance(normalize_max(f(t0 + side * std::ldexp(1.0, -10))), expected);
        double fine = chordal_distance(normalize_max(f(t0 + side * std::ldexp(1.0, -20))), expected);
        if (fine > coarse + 1e-12) return -1.0;
        worst = std::max(worst, fine);
    }
    return worst;
}

inline EvaluablePath far_point_path() {
    EvaluablePath p;
    p.evaluate = [](const LcfNumber& t) {
        LcfNumber u = t - LcfNumber(0.5);
        return std::vector<LcfNumber>{u * u * u, LcfNumber(), LcfNumber()};
    };
    p.polynomial = std::vector<Polynomial>{{Rational(-1, 8), Rational(3, 4), Rational(-3, 2), Rational(1)}, {}, {}};
    return p;
}

inline StdVec far_point_float(double t) { return {std::pow(t - 0.5, 3), 0.0, 0.0}; }

// Center of a conic family that degenerates at t = 1.
inline EvaluablePath conic_center_path() {
    EvaluablePath p;
    p.evaluate = [](const LcfNumber& t) {
        LcfNumber u = t - LcfNumber(1.0);
        return std::vector<LcfNumber>{LcfNumber(), u * t, u * u};
    };
    p.polynomial = std::vector<Polynomial>{{}, {Rational(0), Rational(-1), Rational(1)},
                                           {Rational(1), Rational(-2), Rational(1)}};
    p.domain = {0.0, 2.0};
    return p;
}

inline StdVec conic_center_float(double t) { return {0.0, (t - 1) * t, (t - 1) * (t - 1)}; }

inline EvaluablePath rotating_root_path() {
    EvaluablePath p;
    p.evaluate = [](const LcfNumber& t) {
        LcfNumber a = LcfNumber(1.0) - t * t;
        LcfNumber r = a.is_zero() ? LcfNumber() : lcgeo::sqrt(a);
        return std::vector<LcfNumber>{r, LcfNumber(), r * t};
    };
    p.domain = {0.0, 2.0};
    return p;
}

inline StdVec rotating_root_float(double t) {
    Complex r = std::sqrt(Complex(1.0 - t * t, 0.0));
    return {r, 0.0, r * t};
}

inline EvaluablePath kink_path() {
    EvaluablePath p;
    p.dimension = 2;
    p.evaluate = [](const LcfNumber& t) { return std::vector<LcfNumber>{t, lcgeo::abs(t)}; };
    p.domain = {-1.0, 1.0};
    return p;
}

}  // namespace lcgeo::testing
