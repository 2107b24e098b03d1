#include "lcgeo/geomops.hpp"

#include "lcgeo/error.hpp"

namespace lcgeo {

namespace {

HomVec3 linear_combination(const LcfNumber& s, const HomVec3& p, const LcfNumber& t, const HomVec3& q) {
    return add(scale(s, p), scale(t, q));
}

LcfNumber squared_modulus(const LcfNumber& x) { return x * conj(x); }

}  // namespace

ConicMat circle_conic(const CircleSpec& c) {
    const HomVec3& m = c.center;
    if (m.is_degenerate() || m[2].is_zero()) throw Error(Errc::InvalidCircle, "circle center is a far point");
    LcfNumber x0 = m[0] / m[2];
    LcfNumber y0 = m[1] / m[2];
    LcfNumber one = LcfNumber::from_real(1.0, m[2].window());
    return {one, LcfNumber(), -x0, one, -y0, x0 * x0 + y0 * y0 - c.radius * c.radius};
}

HomVec3 conic_center(const ConicMat& a) {
    return HomVec3::point(a.a12 * a.a23 - a.a13 * a.a22, a.a13 * a.a12 - a.a11 * a.a23, a.a11 * a.a22 - a.a12 * a.a12);
}

IntersectionPair intersect_conic_line(const ConicMat& a, const HomVec3& l) {
    if (l.is_degenerate()) throw Error(Errc::ZeroVector, "intersection with a zero line");
    HomVec3 la = appreciable_rep(l);

    // l x e_i lies on l; the two longest of these span it. |l x e_i|^2 is
    // the total minus |l_i|^2, so drop the index of the largest |l_i|. Both
    // kept points contain that component and are therefore appreciable.
    std::size_t drop = 0;
    LcfNumber best = squared_modulus(la[0]);
    for (std::size_t i = 1; i < 3; ++i) {
        LcfNumber m = squared_modulus(la[i]);
        std::vector<Term> re;
        for (const auto& t : m.terms()) re.push_back({t.exponent, Complex(t.coefficient.real(), 0.0)});
        m = LcfNumber::from_terms(std::move(re), m.window(), m.precision());
        if (cmp_real(m, best) > 0) {
            best = m;
            drop = i;
        }
    }
    auto basis = [&](std::size_t i) {
        std::array<LcfNumber, 3> e{};
        e[i] = LcfNumber::from_real(1.0, la[0].window());
        return cross(la, HomVec3::point(e[0], e[1], e[2]), VecKind::Point);
    };
    HomVec3 p = basis(drop == 0 ? 1 : 0);
    HomVec3 q = basis(drop == 2 ? 1 : 2);

    LcfNumber alpha = a.form(p, p);
    LcfNumber beta = a.form(p, q);
    LcfNumber gamma = a.form(q, q);
    if (alpha.is_zero() && beta.is_zero() && gamma.is_zero())
        throw Error(Errc::NonIsolatedIntersection, "line lies on the conic");

    if (alpha.is_zero() && gamma.is_zero()) return {p, q};

    LcfNumber disc = beta * beta - alpha * gamma;
    LcfNumber s = disc.is_zero() ? LcfNumber() : sqrt(disc);
    HomVec3 r1, r2;
    if (!alpha.is_zero() && cmp_magnitude(alpha, gamma) >= 0) {
        r1 = linear_combination(-beta + s, p, alpha, q);
        r2 = linear_combination(-beta - s, p, alpha, q);
    } else {
        r1 = linear_combination(gamma, p, -beta + s, q);
        r2 = linear_combination(gamma, p, -beta - s, q);
    }
    return {appreciable_rep(r1), appreciable_rep(r2)};
}

HomVec3 radical_line(const CircleSpec& c1, const CircleSpec& c2) {
    ConicMat diff = circle_conic(c1) - circle_conic(c2);
    HomVec3 l = HomVec3::line(LcfNumber(2.0) * diff.a13, LcfNumber(2.0) * diff.a23, diff.a33);
    if (l.is_degenerate()) throw Error(Errc::IdenticalCircles, "circles coincide");
    return l;
}

IntersectionPair intersect_circles(const CircleSpec& c1, const CircleSpec& c2) {
    return intersect_conic_line(circle_conic(c1), radical_line(c1, c2));
}

HomVec3 midpoint_mu(const HomVec3& x, const HomVec3& y) {
    HomVec3 l = join_star(x, y);
    if (l.is_degenerate()) return HomVec3::degenerate(VecKind::Point);
    HomVec3 far = meet_star(l, HomVec3::line(LcfNumber(), LcfNumber(), LcfNumber(1.0)));
    HomVec3 pole = l;
    pole.kind = VecKind::Point;
    HomVec3 m = linear_combination(bracket(y, far, pole), x, bracket(x, far, pole), y);
    m.kind = VecKind::Point;
    return m;
}

HomVec3 midpoint_eff(const HomVec3& x, const HomVec3& y) {
    HomVec3 m = linear_combination(y[2], x, x[2], y);
    m.kind = VecKind::Point;
    return m;
}

VonStaudtRecord von_staudt_sum(const HomVec3& zero, const HomVec3& inf, const HomVec3& x, const HomVec3& y,
                               const HomVec3& e, const HomVec3& f) {
    VonStaudtRecord r;
    r.l = join_star(zero, inf);
    r.zero_e = join_star(zero, e);
    r.y_f = join_star(y, f);
    r.g = meet_star(r.zero_e, r.y_f);
    r.inf_g = join_star(inf, r.g);
    r.x_e = join_star(x, e);
    r.h = meet_star(r.inf_g, r.x_e);
    r.m = join_star(f, r.h);
    r.sum = meet_star(r.l, r.m);
    return r;
}

LcfNumber cross_ratio(const HomVec3& a, const HomVec3& b, const HomVec3& c, const HomVec3& d, const HomVec3& l) {
    LcfNumber den = bracket(a, d, l) * bracket(b, c, l);
    if (den.is_zero()) throw Error(Errc::UndefinedCrossRatio, "zero bracket in denominator");
    return bracket(a, c, l) * bracket(b, d, l) / den;
}

HomVec3 foot_on_line(const HomVec3& p, const HomVec3& l) {
    LcfNumber n = l[0] * l[0] + l[1] * l[1];
    LcfNumber s = dot(p, l);
    return HomVec3::point(n * p[0] - s * l[0], n * p[1] - s * l[1], n * p[2]);
}

}  // namespace lcgeo
