#include <cmath>

#include "doctest.h"
#include "lcgeo/error.hpp"
#include "lcgeo/geomops.hpp"
#include "support.hpp"

using namespace lcgeo;
using lcgeo::testing::Generator;

namespace {

LcfNumber d() { return LcfNumber::d_pow(Exponent(1)); }
LcfNumber num(double x) { return LcfNumber(x); }
HomVec3 pt(double x, double y, double z) { return HomVec3::point(num(x), num(y), num(z)); }
HomVec3 ln(LcfNumber x, LcfNumber y, LcfNumber z) { return HomVec3::line(std::move(x), std::move(y), std::move(z)); }
CircleSpec circle(double x, double y, double r) { return {pt(x, y, 1), num(r)}; }

bool vec_near(const StdVec& v, std::initializer_list<Complex> expected, double tol) {
    std::size_t i = 0;
    for (Complex e : expected) {
        if (std::abs(v[i++] - e) > tol) return false;
    }
    return true;
}

bool negligible(const LcfNumber& x) {
    auto m = classify(x);
    return m == MagnitudeClass::Zero || m == MagnitudeClass::Infinitesimal;
}

// y over x, leading term.
Term slope_lead(const HomVec3& p) { return (p[1] / p[0]).leading(); }

}  // namespace

TEST_CASE("circle matrices") {
    auto unit = circle_conic(circle(0, 0, 1));
    CHECK(unit.a11 == num(1));
    CHECK(unit.a22 == num(1));
    CHECK(unit.a33 == num(-1));
    CHECK(unit.a12.is_zero());
    CHECK(unit.a13.is_zero());
    CHECK(unit.a23.is_zero());
    auto shifted = circle_conic(circle(1, 0, 1));
    CHECK(shifted.form(pt(0, 0, 1), pt(0, 0, 1)).is_zero());
    CHECK(shifted.form(pt(2, 0, 1), pt(2, 0, 1)).is_zero());
    CHECK(shifted.form(pt(1, 1, 1), pt(1, 1, 1)).is_zero());
    CHECK(circle_conic(circle(0, 0, 2)).a33 == num(-4));
    CHECK_THROWS_AS(circle_conic({pt(1, 0, 0), num(1)}), Error);

    Generator g(31);
    for (int k = 0; k < 200; ++k) {
        double cx = g.uniform(-5, 5), cy = g.uniform(-5, 5), r = g.uniform(0.1, 4);
        double w = g.nonzero(-3, 3);
        auto a = circle_conic({pt(cx * w, cy * w, w), num(r)});
        CHECK(std::abs(shadow(a.form(pt(cx + r, cy, 1), pt(cx + r, cy, 1)))) < 1e-9);
        CHECK(std::abs(shadow(a.form(pt(cx - r, cy, 1), pt(cx - r, cy, 1)))) < 1e-9);
    }
}

TEST_CASE("conic center") {
    auto c = conic_center(circle_conic(circle(0, 0, 1)));
    CHECK(proj_close(c, pt(0, 0, 1)));
    // f(t) = (1-t) X + t Y with X = diag(1,1,-1), Y the symmetric matrix with a23 = 1.
    auto family = [](const LcfNumber& t) {
        LcfNumber s = num(1) - t;
        return ConicMat{s, LcfNumber(), LcfNumber(), s, t, -s};
    };
    for (double t0 : {0.0, 0.25, 0.5, 2.0}) {
        auto t = num(t0) + parse_lcf("0.3*d");
        auto m = conic_center(family(t));
        auto expected = HomVec3::point(LcfNumber(), (t - num(1)) * t, (t - num(1)) * (t - num(1)));
        CHECK(proj_close(m, expected, 1e-12));
        CHECK(negligible(dot(m, m) - dot(expected, expected)));
    }
    CHECK(conic_center(family(num(1))).is_degenerate());
}

TEST_CASE("conic and line") {
    auto unit = circle_conic(circle(0, 0, 1));
    auto axis = intersect_conic_line(unit, ln(num(0), num(1), num(0)));
    CHECK(proj_close(axis.p1, pt(1, 0, 1)));
    CHECK(proj_close(axis.p2, pt(-1, 0, 1)));

    auto far = intersect_conic_line(unit, ln(num(1), num(0), num(-2)));
    auto s1 = psh(far.p1).vec, s2 = psh(far.p2).vec;
    // Substituting x = 2 gives y^2 = -3.
    CHECK(proj_close(s1, StdVec{2.0, Complex(0, std::sqrt(3.0)), 1.0}, 1e-12) !=
          proj_close(s1, StdVec{2.0, Complex(0, -std::sqrt(3.0)), 1.0}, 1e-12));
    CHECK(proj_close(s2, StdVec{2.0, Complex(0, std::sqrt(3.0)), 1.0}, 1e-12) !=
          proj_close(s2, StdVec{2.0, Complex(0, -std::sqrt(3.0)), 1.0}, 1e-12));
    CHECK_FALSE(proj_close(s1, s2));

    // Unit circle against (1-d, -d, -1-d): x = 1 + 2d + ..., so y^2 = 1 - x^2 = -4d + ...
    auto near = intersect_conic_line(unit, ln(num(1) - d(), -d(), num(-1) - d()));
    for (const auto* p : {&near.p1, &near.p2}) {
        Term t = slope_lead(*p);
        CHECK(t.exponent == Exponent(1, 2));
        CHECK(std::abs(t.coefficient * t.coefficient - Complex(-4.0)) < 1e-9);
    }
    CHECK(std::abs(slope_lead(near.p1).coefficient + slope_lead(near.p2).coefficient) < 1e-9);

    CHECK_THROWS_AS(intersect_conic_line(unit, HomVec3::degenerate(VecKind::Line)), Error);
    // The degenerate conic x*y contains the line y = 0.
    ConicMat cross_lines{LcfNumber(), num(0.5), LcfNumber(), LcfNumber(), LcfNumber(), LcfNumber()};
    try {
        (void)intersect_conic_line(cross_lines, ln(num(0), num(1), num(0)));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonIsolatedIntersection);
    }
}

TEST_CASE("tangential circles") {
    auto c = circle(0, 0, 1), dd = circle(2, 0, 1);
    auto pair = intersect_circles(c, dd);
    CHECK(proj_close(pair.p1, pt(1, 0, 1)));
    CHECK(proj_close(pair.p2, pt(1, 0, 1)));
    CHECK(join_star(pair.p1, pair.p2).is_degenerate());

    // Radical line perturbed by -(3/2) d in every coordinate, intersected
    // with the second circle: x = 1 + 3d + ..., and (x-2)^2 + y^2 = 1 gives y^2 = 6d.
    auto l = appreciable_rep(radical_line(c, dd));
    CHECK(proj_close(l, ln(num(1), num(0), num(-1))));
    LcfNumber shift = parse_lcf("1.5*d");
    auto lp = ln(l[0] - shift, l[1] - shift, l[2] - shift);
    auto p = intersect_conic_line(circle_conic(dd), lp);
    Term t1 = slope_lead(p.p1), t2 = slope_lead(p.p2);
    CHECK(t1.exponent == Exponent(1, 2));
    CHECK(std::abs(std::abs(t1.coefficient.real()) - std::sqrt(6.0)) < 1e-9);
    CHECK(std::abs(t1.coefficient + t2.coefficient) < 1e-9);
    auto j = join_star(p.p1, p.p2);
    CHECK(j[0].leading().exponent == Exponent(1, 2));
    CHECK(vec_near(psh(j).vec, {1.0, 0.0, -1.0}, 1e-9));
}

TEST_CASE("two circle intersections") {
    auto pair = intersect_circles(circle(0, 0, 1), circle(1, 0, 1));
    auto a = psh(pair.p1).vec, b = psh(pair.p2).vec;
    double h = std::sqrt(3.0) / 2;
    bool order1 = proj_close(a, StdVec{0.5, h, 1.0}, 1e-12) && proj_close(b, StdVec{0.5, -h, 1.0}, 1e-12);
    bool order2 = proj_close(a, StdVec{0.5, -h, 1.0}, 1e-12) && proj_close(b, StdVec{0.5, h, 1.0}, 1e-12);
    CHECK((order1 || order2));
    try {
        (void)intersect_circles(circle(1, 1, 2), circle(1, 1, 2));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IdenticalCircles);
    }
    // Infinitesimally distinct circles are accepted.
    auto q = intersect_circles(circle(1, 1, 2), {HomVec3::point(num(1) + d(), num(1), num(1)), num(2)});
    CHECK(proj_close(join_star(q.p1, q.p2), ln(num(1), num(0), num(-1))));
}

TEST_CASE("property: intersection incidence") {
    Generator g(32);
    for (int k = 0; k < 250; ++k) {
        LcfNumber eps = k % 2 == 0 ? LcfNumber() : LcfNumber(g.nonzero(-1, 1)) * LcfNumber::d_pow(g.exponent(1, 2));
        CircleSpec c{HomVec3::point(num(g.uniform(-3, 3)) + eps, num(g.uniform(-3, 3)), num(1)), num(g.uniform(0.5, 3))};
        auto a = circle_conic(c);
        auto l = ln(num(g.uniform(-2, 2)), num(g.uniform(-2, 2)) + eps, num(g.uniform(-2, 2)));
        auto pair = intersect_conic_line(a, l);
        for (const auto* p : {&pair.p1, &pair.p2}) {
            CHECK(negligible(a.form(*p, *p)));
            CHECK(negligible(dot(*p, l)));
        }
    }
}

TEST_CASE("midpoints") {
    auto x = pt(0, 0, 1), y = pt(2, 0, 1);
    CHECK(proj_close(midpoint_mu(x, y), pt(1, 0, 1)));
    auto eff = midpoint_eff(x, y);
    CHECK(eff[0] == num(2));
    CHECK(eff[2] == num(2));
    CHECK(midpoint_mu(pt(1, 2, 1), pt(1, 2, 1)).is_degenerate());
    auto same = midpoint_eff(pt(1, 2, 1), pt(1, 2, 1));
    CHECK(same[0] == num(2));
    CHECK(same[1] == num(4));
    auto far = midpoint_eff(pt(3, -1, 0), pt(5, 7, 1));
    CHECK(far[0] == num(3));
    CHECK(far[1] == num(-1));
    CHECK(far[2].is_zero());

    // Harmonic position of the midpoint against the far point of the joining line.
    auto l = join_star(x, y);
    auto pole = l;
    pole.kind = VecKind::Point;
    auto pinf = meet_star(l, ln(num(0), num(0), num(1)));
    CHECK(std::abs(shadow(cross_ratio(x, y, midpoint_eff(x, y), pinf, pole)) + 1.0) < 1e-12);
    auto a = pt(1, 2, 1), b = pt(-1, 0, 1), dpt = pt(3, 3, 1), lp = pt(0, 5, 1), c = pt(2, 1, 1);
    CHECK(cross_ratio(a, b, a, dpt, lp).is_zero());
    CHECK(std::abs(shadow(cross_ratio(a, b, c, dpt, lp) * cross_ratio(a, b, dpt, c, lp)) - 1.0) < 1e-12);
    CHECK_THROWS_AS(cross_ratio(a, b, c, a, lp), Error);
}

TEST_CASE("property: midpoint formulas agree") {
    Generator g(33);
    for (int k = 0; k < 1000; ++k) {
        auto x = HomVec3::point(num(g.uniform(-5, 5)), num(g.uniform(-5, 5)), num(g.nonzero(-2, 2)));
        auto y = HomVec3::point(num(g.uniform(-5, 5)), num(g.uniform(-5, 5)), num(g.nonzero(-2, 2)));
        CHECK(proj_close(midpoint_mu(x, y), midpoint_eff(x, y), 1e-9));
    }
}

TEST_CASE("von Staudt sum") {
    auto zero = pt(0, 0, 1), inf = pt(1, 0, 0), x = pt(2, 0, 1), y = pt(4, 0, 1);
    auto r = von_staudt_sum(zero, inf, x, y, pt(2, 2, 1), pt(4, 2, 1));
    CHECK(proj_close(r.sum, pt(6, 0, 1)));

    auto merged = von_staudt_sum(zero, inf, x, y, pt(4, 2, 1), pt(4, 2, 1));
    CHECK(merged.m.is_degenerate());
    CHECK(merged.sum.is_degenerate());
}

TEST_CASE("property: von Staudt sum on random projective scales") {
    Generator g(34);
    auto V = [&](const std::array<Complex, 3>& v) { return HomVec3::from_standard(v, VecKind::Point); };
    int checked = 0;
    for (int k = 0; k < 250; ++k) {
        // Two points spanning a random line; everything on it is s*A + t*B.
        auto a = g.standard_vec(), b = g.standard_vec();
        auto on_line = [&](double s, double t) {
            return std::array<Complex, 3>{s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]};
        };
        double z0 = g.uniform(-3, 3), zi = g.uniform(-3, 3), xs = g.uniform(-3, 3), ys = g.uniform(-3, 3);
        auto zero = V(on_line(1, z0)), inf = V(on_line(1, zi)), x = V(on_line(1, xs)), y = V(on_line(1, ys));
        auto e = V(g.standard_vec());
        double lam = g.nonzero(-3, 3);
        auto inf_e = join_star(inf, e);
        auto f = add(appreciable_rep(e), scale(num(lam), appreciable_rep(inf)));
        (void)inf_e;
        auto off = V(g.standard_vec());
        // Affine coordinate with 0 -> 0 and inf -> infinity: [P,0]/[P,inf] against a point off the line.
        auto coord = [&](const HomVec3& p) { return shadow(bracket(p, zero, off)) / shadow(bracket(p, inf, off)); };
        Complex target = coord(x) + coord(y);
        auto r = von_staudt_sum(zero, inf, x, y, e, f);
        if (r.sum.is_degenerate()) continue;
        CHECK(std::abs(coord(r.sum) - target) < 1e-6 * std::max(1.0, std::abs(target)));
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("foot of perpendicular") {
    auto f = foot_on_line(pt(4, 0, 1), ln(num(0), num(-0.5), d()));
    CHECK(proj_close(f, HomVec3::point(num(1), parse_lcf("0.5*d"), num(0.25)), 1e-12));
    CHECK(negligible(dot(f, ln(num(0), num(-0.5), d()))));
    auto g = foot_on_line(pt(3, 4, 1), ln(num(1), num(-1), num(0)));
    CHECK(proj_close(g, pt(3.5, 3.5, 1), 1e-12));
}
