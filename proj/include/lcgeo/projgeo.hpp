#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "lcgeo/lcf.hpp"

namespace lcgeo {

constexpr double kTolProj = 1e-6;

enum class VecKind { Point, Line };

using StdVec = std::vector<Complex>;

struct HomVec3 {
    std::array<LcfNumber, 3> c;
    VecKind kind = VecKind::Point;

    static HomVec3 point(LcfNumber x, LcfNumber y, LcfNumber z);
    static HomVec3 line(LcfNumber x, LcfNumber y, LcfNumber z);
    static HomVec3 from_standard(const std::array<Complex, 3>& v, VecKind kind);
    static HomVec3 degenerate(VecKind kind);

    bool is_degenerate() const;
    const LcfNumber& operator[](std::size_t i) const { return c[i]; }
    LcfNumber& operator[](std::size_t i) { return c[i]; }
    std::span<const LcfNumber> span() const { return {c.data(), c.size()}; }
};

struct PshResult {
    StdVec vec;
    Exponent scale_exponent;
};

// Generic forms over any component count; used by desing for paths of
// arbitrary dimension.
bool all_zero(std::span<const LcfNumber> v);
std::size_t pivot_index(std::span<const LcfNumber> v);
std::vector<LcfNumber> appreciable_rep(std::span<const LcfNumber> v);
PshResult psh(std::span<const LcfNumber> v);

// Standard vectors compared up to a complex scalar: all 2x2 minors of the
// max-normalized vectors below tol.
bool proj_close(const StdVec& a, const StdVec& b, double tol = kTolProj);
// sin of the Hermitian angle between the two vectors.
double chordal_distance(const StdVec& a, const StdVec& b);
StdVec normalize_max(const StdVec& v);

HomVec3 appreciable_rep(const HomVec3& v);
PshResult psh(const HomVec3& v);

HomVec3 cross(const HomVec3& a, const HomVec3& b, VecKind kind);
LcfNumber dot(const HomVec3& a, const HomVec3& b);
HomVec3 scale(const LcfNumber& s, const HomVec3& v);
HomVec3 add(const HomVec3& a, const HomVec3& b);

HomVec3 join_star(const HomVec3& p, const HomVec3& q);
HomVec3 meet_star(const HomVec3& l, const HomVec3& m);

bool almost_incident(const HomVec3& p, const HomVec3& l);
bool proj_close(const HomVec3& a, const HomVec3& b, double tol = kTolProj);
bool is_almost_far(const HomVec3& p);

LcfNumber bracket(const HomVec3& a, const HomVec3& b, const HomVec3& c);

// Upper triangle of a symmetric 3x3 matrix.
struct ConicMat {
    LcfNumber a11, a12, a13, a22, a23, a33;

    const LcfNumber& at(std::size_t i, std::size_t j) const;
    // p^T A q
    LcfNumber form(const HomVec3& p, const HomVec3& q) const;
    HomVec3 apply(const HomVec3& p, VecKind kind) const;
    bool is_zero() const;
};

ConicMat operator-(const ConicMat& a, const ConicMat& b);
ConicMat scale(const LcfNumber& s, const ConicMat& a);

std::string to_string(const HomVec3& v, const FormatOptions& opts = {});
std::string to_string(const StdVec& v, const FormatOptions& opts = {});

}  // namespace lcgeo
