#include <cmath>

#include "doctest.h"
#include "lcgeo/error.hpp"
#include "lcgeo/projgeo.hpp"
#include "support.hpp"

using namespace lcgeo;
using lcgeo::testing::Generator;

namespace {

LcfNumber d() { return LcfNumber::d_pow(Exponent(1)); }
LcfNumber num(double x) { return LcfNumber(x); }

bool vec_near(const StdVec& v, std::initializer_list<Complex> expected, double tol) {
    if (v.size() != expected.size()) return false;
    std::size_t i = 0;
    for (Complex e : expected) {
        if (std::abs(v[i++] - e) > tol) return false;
    }
    return true;
}

bool exactly_one(const LcfNumber& x) {
    return x.terms().size() == 1 && x.terms()[0].exponent == Exponent(0) && x.terms()[0].coefficient == Complex(1.0);
}

Complex det3(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b, const std::array<Complex, 3>& c) {
    return a[0] * b[1] * c[2] + a[1] * b[2] * c[0] + a[2] * b[0] * c[1] - a[2] * b[1] * c[0] - a[1] * b[0] * c[2] -
           a[0] * b[2] * c[1];
}

}  // namespace

TEST_CASE("appreciable representative") {
    auto s = parse_lcf("4.899*d^1/2");
    auto v = appreciable_rep(HomVec3::line(s, LcfNumber(), -s));
    CHECK(exactly_one(v[0]));
    CHECK(v[1].is_zero());
    CHECK(v[2] == LcfNumber(-1.0));
    auto w = appreciable_rep(HomVec3::point(num(1), num(0), num(1)));
    CHECK(exactly_one(w[0]));
    CHECK(w[2] == LcfNumber(1.0));
    auto u = appreciable_rep(HomVec3::point(d(), num(0), num(0)));
    CHECK(exactly_one(u[0]));
    CHECK_THROWS_AS(appreciable_rep(HomVec3::degenerate(VecKind::Point)), Error);
}

TEST_CASE("pivot prefers smaller exponent, then larger coefficient, then lower index") {
    std::vector<LcfNumber> v{d(), num(-2), num(2)};
    CHECK(pivot_index(v) == 1);
    std::vector<LcfNumber> w{d(), parse_lcf("3*d"), num(0)};
    CHECK(pivot_index(w) == 1);
    std::vector<LcfNumber> x{parse_lcf("d^-1"), num(5), num(0)};
    CHECK(pivot_index(x) == 0);
}

TEST_CASE("projective shadow") {
    auto r = psh(HomVec3::line(parse_lcf("-0.125*d"), parse_lcf("-0.125*d"), parse_lcf("0.75*d")));
    CHECK(vec_near(r.vec, {-1.0 / 6, -1.0 / 6, 1.0}, 1e-12));
    CHECK(r.scale_exponent == Exponent(1));
    auto s = psh(HomVec3::point(parse_lcf("6*d"), LcfNumber(), d()));
    CHECK(vec_near(s.vec, {1.0, 0.0, 1.0 / 6}, 1e-12));
    auto t = psh(HomVec3::point(num(2), num(0), num(2)));
    CHECK(vec_near(t.vec, {1.0, 0.0, 1.0}, 0.0));
    CHECK(t.scale_exponent == Exponent(0));
}

TEST_CASE("appreciable join and meet") {
    auto eps = parse_lcf("0.5*d^2");
    auto j = join_star(HomVec3::point(num(0), num(0), num(1)), HomVec3::point(eps, num(0), num(1)));
    CHECK(j[0].is_zero());
    CHECK(j[1] == eps);
    CHECK(j[2].is_zero());
    CHECK(classify(j[1]) == MagnitudeClass::Infinitesimal);

    auto m = meet_star(HomVec3::line(num(0), num(1), num(0)), HomVec3::line(num(0), num(1), pow(d(), 3)));
    CHECK(m[0] == pow(d(), 3));
    CHECK(m[1].is_zero());
    CHECK(m[2].is_zero());

    auto p = HomVec3::point(num(1), num(2), num(3));
    CHECK(join_star(p, p).is_degenerate());
    CHECK(join_star(p, HomVec3::degenerate(VecKind::Point)).is_degenerate());
}

TEST_CASE("incidence, closeness and far points") {
    CHECK(almost_incident(HomVec3::point(num(1), num(0), num(1)), HomVec3::line(d(), num(1), -d())));
    CHECK_FALSE(almost_incident(HomVec3::point(num(1), num(0), num(1)), HomVec3::line(num(1), num(1), num(0))));
    CHECK(proj_close(HomVec3::line(num(1), num(0), num(-1)), HomVec3::line(num(-2), num(0), num(2))));
    CHECK_FALSE(proj_close(HomVec3::line(num(1), num(0), num(-1)), HomVec3::line(num(1), num(0), num(1))));
    CHECK(is_almost_far(HomVec3::point(num(1), num(0), d())));
    CHECK_FALSE(is_almost_far(HomVec3::point(num(1), num(0), num(1))));
    CHECK(proj_close(StdVec{1.0, 1.0}, StdVec{Complex(0, 2), Complex(0, 2)}));
    CHECK(chordal_distance(StdVec{1.0, 0.0, 0.0}, StdVec{0.0, 1.0, 0.0}) == doctest::Approx(1.0));
    CHECK(chordal_distance(StdVec{1.0, 2.0, 3.0}, StdVec{-2.0, -4.0, -6.0}) < 1e-12);
}

TEST_CASE("bracket") {
    auto e1 = HomVec3::point(num(1), num(0), num(0));
    auto e2 = HomVec3::point(num(0), num(1), num(0));
    auto e3 = HomVec3::point(num(0), num(0), num(1));
    CHECK(bracket(e1, e2, e3) == LcfNumber(1.0));
    auto a = HomVec3::point(num(3), num(-1), num(2));
    CHECK(bracket(a, a, e2).is_zero());
    // Cofactor expansion along the first row: 1 * (2*1 - 0*1) = 2.
    auto b = bracket(e3, HomVec3::point(num(2), num(0), num(1)), HomVec3::point(num(1), num(1), num(1)));
    CHECK(b == LcfNumber(2.0));
}

TEST_CASE("property: psh scale invariance") {
    Generator g(21);
    for (int k = 0; k < 300; ++k) {
        bool cplx = k % 2 == 0;
        HomVec3 v = HomVec3::point(g.number(0, 2, 3, cplx), g.number(-1, 2, 3, cplx), g.number(0, 2, 3, cplx));
        LcfNumber lambda = g.with_lead(Exponent(0), 3, cplx);
        auto a = psh(v).vec;
        auto b = psh(scale(lambda, v)).vec;
        for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
        auto rep = appreciable_rep(v);
        std::size_t ones = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (exactly_one(rep[i])) ++ones;
            CHECK(classify(rep[i]) != MagnitudeClass::Unlimited);
        }
        CHECK(ones >= 1);
    }
}

TEST_CASE("property: duality and bracket multilinearity") {
    Generator g(22);
    for (int k = 0; k < 300; ++k) {
        auto p = HomVec3::from_standard(g.standard_vec(), VecKind::Point);
        auto q = HomVec3::from_standard(g.standard_vec(), VecKind::Point);
        auto r = HomVec3::from_standard(g.standard_vec(), VecKind::Point);
        CHECK(proj_close(meet_star(join_star(p, q), join_star(p, r)), p));

        auto a = g.standard_vec(true), b = g.standard_vec(true), c = g.standard_vec(true), e = g.standard_vec(true);
        Complex s(g.uniform(-2, 2), g.uniform(-2, 2));
        std::array<Complex, 3> ae{a[0] + s * e[0], a[1] + s * e[1], a[2] + s * e[2]};
        auto V = [](const std::array<Complex, 3>& x) { return HomVec3::from_standard(x, VecKind::Point); };
        Complex lhs = shadow(bracket(V(ae), V(b), V(c)));
        Complex rhs = shadow(bracket(V(a), V(b), V(c))) + s * shadow(bracket(V(e), V(b), V(c)));
        CHECK(std::abs(lhs - rhs) < 1e-9);
        CHECK(std::abs(lhs - det3(ae, b, c)) < 1e-9);
    }
}
