#pragma once

#include "lcgeo/projgeo.hpp"

namespace lcgeo {

struct CircleSpec {
    HomVec3 center;
    LcfNumber radius;
};

struct IntersectionPair {
    HomVec3 p1;
    HomVec3 p2;
};

struct VonStaudtRecord {
    HomVec3 l;       // join(0, inf)
    HomVec3 zero_e;  // join(0, E)
    HomVec3 y_f;     // join(y, F)
    HomVec3 g;
    HomVec3 inf_g;   // join(inf, G)
    HomVec3 x_e;     // join(x, E)
    HomVec3 h;
    HomVec3 m;       // join(F, H)
    HomVec3 sum;
};

ConicMat circle_conic(const CircleSpec& c);
HomVec3 conic_center(const ConicMat& a);

IntersectionPair intersect_conic_line(const ConicMat& a, const HomVec3& l);
HomVec3 radical_line(const CircleSpec& c1, const CircleSpec& c2);
IntersectionPair intersect_circles(const CircleSpec& c1, const CircleSpec& c2);

HomVec3 midpoint_mu(const HomVec3& x, const HomVec3& y);
HomVec3 midpoint_eff(const HomVec3& x, const HomVec3& y);

VonStaudtRecord von_staudt_sum(const HomVec3& zero, const HomVec3& inf, const HomVec3& x, const HomVec3& y,
                               const HomVec3& e, const HomVec3& f);

LcfNumber cross_ratio(const HomVec3& a, const HomVec3& b, const HomVec3& c, const HomVec3& d, const HomVec3& l);

// Euclidean foot of the perpendicular from p onto l, without division.
HomVec3 foot_on_line(const HomVec3& p, const HomVec3& l);

}  // namespace lcgeo
