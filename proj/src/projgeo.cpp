#include "lcgeo/projgeo.hpp"

#include <algorithm>
#include <cmath>

#include "lcgeo/error.hpp"

namespace lcgeo {

HomVec3 HomVec3::point(LcfNumber x, LcfNumber y, LcfNumber z) {
    return HomVec3{{std::move(x), std::move(y), std::move(z)}, VecKind::Point};
}

HomVec3 HomVec3::line(LcfNumber x, LcfNumber y, LcfNumber z) {
    return HomVec3{{std::move(x), std::move(y), std::move(z)}, VecKind::Line};
}

HomVec3 HomVec3::from_standard(const std::array<Complex, 3>& v, VecKind kind) {
    return HomVec3{{LcfNumber(v[0]), LcfNumber(v[1]), LcfNumber(v[2])}, kind};
}

HomVec3 HomVec3::degenerate(VecKind kind) { return HomVec3{{}, kind}; }

bool HomVec3::is_degenerate() const { return all_zero(span()); }

bool all_zero(std::span<const LcfNumber> v) {
    return std::all_of(v.begin(), v.end(), [](const LcfNumber& x) { return x.is_zero(); });
}

std::size_t pivot_index(std::span<const LcfNumber> v) {
    if (all_zero(v)) throw Error(Errc::ZeroVector, "no pivot in a zero vector");
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (cmp_magnitude(v[i], v[best]) > 0) best = i;
    }
    return best;
}

std::vector<LcfNumber> appreciable_rep(std::span<const LcfNumber> v) {
    std::size_t p = pivot_index(v);
    const LcfNumber& pivot = v[p];
    std::vector<LcfNumber> out(v.size());
    if (pivot.terms().size() == 1 && !pivot.precision()) {
        const Term& t = pivot.terms().front();
        Complex c = Complex(1.0, 0.0) / t.coefficient;
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = scale_monomial(v[i], c, -t.exponent);
    } else {
        LcfNumber r = inv(pivot);
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * r;
    }
    out[p] = LcfNumber::from_real(1.0, pivot.window());
    return out;
}

PshResult psh(std::span<const LcfNumber> v) {
    std::size_t p = pivot_index(v);
    auto rep = appreciable_rep(v);
    PshResult r{StdVec(v.size()), v[p].leading().exponent};
    for (std::size_t i = 0; i < v.size(); ++i) r.vec[i] = shadow(rep[i]);
    return r;
}

StdVec normalize_max(const StdVec& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    }
    StdVec out(v);
    if (v.empty() || v[best] == Complex(0.0, 0.0)) return out;
    for (auto& x : out) x /= v[best];
    out[best] = 1.0;
    return out;
}

bool proj_close(const StdVec& a, const StdVec& b, double tol) {
    if (a.size() != b.size()) return false;
    StdVec u = normalize_max(a);
    StdVec v = normalize_max(b);
    auto nonzero = [](const StdVec& x) { return std::any_of(x.begin(), x.end(), [](Complex c) { return c != 0.0; }); };
    if (!nonzero(u) || !nonzero(v)) return false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            if (std::abs(u[i] * v[j] - u[j] * v[i]) >= tol) return false;
        }
    }
    return true;
}

double chordal_distance(const StdVec& a, const StdVec& b) {
    double na = 0.0, nb = 0.0;
    Complex ip = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
        ip += std::conj(a[i]) * b[i];
    }
    double cos2 = std::norm(ip) / (na * nb);
    return std::sqrt(std::max(0.0, 1.0 - cos2));
}

HomVec3 appreciable_rep(const HomVec3& v) {
    if (v.is_degenerate()) throw Error(Errc::ZeroVector, "appreciable representative of a zero vector");
    auto rep = appreciable_rep(v.span());
    return HomVec3{{rep[0], rep[1], rep[2]}, v.kind};
}

PshResult psh(const HomVec3& v) {
    if (v.is_degenerate()) throw Error(Errc::ZeroVector, "projective shadow of a zero vector");
    return psh(v.span());
}

HomVec3 cross(const HomVec3& a, const HomVec3& b, VecKind kind) {
    return HomVec3{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}, kind};
}

LcfNumber dot(const HomVec3& a, const HomVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

HomVec3 scale(const LcfNumber& s, const HomVec3& v) { return HomVec3{{s * v[0], s * v[1], s * v[2]}, v.kind}; }

HomVec3 add(const HomVec3& a, const HomVec3& b) { return HomVec3{{a[0] + b[0], a[1] + b[1], a[2] + b[2]}, a.kind}; }

HomVec3 join_star(const HomVec3& p, const HomVec3& q) {
    if (p.is_degenerate() || q.is_degenerate()) return HomVec3::degenerate(VecKind::Line);
    return cross(appreciable_rep(p), appreciable_rep(q), VecKind::Line);
}

HomVec3 meet_star(const HomVec3& l, const HomVec3& m) {
    if (l.is_degenerate() || m.is_degenerate()) return HomVec3::degenerate(VecKind::Point);
    return cross(appreciable_rep(l), appreciable_rep(m), VecKind::Point);
}

bool almost_incident(const HomVec3& p, const HomVec3& l) {
    auto m = classify(dot(appreciable_rep(p), appreciable_rep(l)));
    return m == MagnitudeClass::Zero || m == MagnitudeClass::Infinitesimal;
}

bool proj_close(const HomVec3& a, const HomVec3& b, double tol) {
    if (a.is_degenerate() || b.is_degenerate()) return false;
    return proj_close(psh(a).vec, psh(b).vec, tol);
}

bool is_almost_far(const HomVec3& p) {
    auto m = classify(appreciable_rep(p)[2]);
    return m == MagnitudeClass::Zero || m == MagnitudeClass::Infinitesimal;
}

LcfNumber bracket(const HomVec3& a, const HomVec3& b, const HomVec3& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

const LcfNumber& ConicMat::at(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    if (i == 0) return j == 0 ? a11 : (j == 1 ? a12 : a13);
    if (i == 1) return j == 1 ? a22 : a23;
    return a33;
}

LcfNumber ConicMat::form(const HomVec3& p, const HomVec3& q) const { return dot(p, apply(q, VecKind::Line)); }

HomVec3 ConicMat::apply(const HomVec3& p, VecKind kind) const {
    return HomVec3{{a11 * p[0] + a12 * p[1] + a13 * p[2], a12 * p[0] + a22 * p[1] + a23 * p[2],
                    a13 * p[0] + a23 * p[1] + a33 * p[2]},
                   kind};
}

bool ConicMat::is_zero() const {
    return a11.is_zero() && a12.is_zero() && a13.is_zero() && a22.is_zero() && a23.is_zero() && a33.is_zero();
}

ConicMat operator-(const ConicMat& a, const ConicMat& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a13 - b.a13, a.a22 - b.a22, a.a23 - b.a23, a.a33 - b.a33};
}

ConicMat scale(const LcfNumber& s, const ConicMat& a) {
    return {s * a.a11, s * a.a12, s * a.a13, s * a.a22, s * a.a23, s * a.a33};
}

std::string to_string(const HomVec3& v, const FormatOptions& opts) {
    return "(" + to_string(v[0], opts) + ", " + to_string(v[1], opts) + ", " + to_string(v[2], opts) + ")";
}

std::string to_string(const StdVec& v, const FormatOptions& opts) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_coefficient(v[i], opts);
    }
    return out + ")";
}

}  // namespace lcgeo
