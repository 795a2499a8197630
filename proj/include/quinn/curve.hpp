#pragma once

// Short-Weierstrass elliptic curves y^2 = x^3 + ax + b over F_q and its
// quadratic tower: point enumeration, chord-tangent group law, group
// structure, torsion, and the L-polynomial.  These groups realize the ideal
// class groups Cl(A) and Cl(A~) of the coordinate ring.

#include <string>
#include <utility>
#include <vector>

#include "quinn/polyf.hpp"

namespace quinn::curve {

struct WeierstrassCurve {
    const gf::FieldSpec* fs; // base field of definition
    gf::FieldElement a, b;

    // math_error when singular (4a^3 + 27b^2 = 0).
    WeierstrassCurve(const gf::FieldSpec* fs, const gf::FieldElement& a,
                     const gf::FieldElement& b);

    // x^3 + ax + b with coefficients embedded into 'over' (base or tower).
    polyf::Poly f(const gf::FieldSpec* over) const;
};

// Long-form input y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, converted
// by completing the square and the cube.  math_error when p = 3 meets a
// nonzero quadratic term (no cube completion there).
WeierstrassCurve from_long_form(const gf::FieldSpec* fs,
                                const gf::FieldElement& a1,
                                const gf::FieldElement& a2,
                                const gf::FieldElement& a3,
                                const gf::FieldElement& a4,
                                const gf::FieldElement& a6);

std::string equation_string(const WeierstrassCurve& c); // "y^2 = x^3 + 4*x"

struct CurvePoint {
    bool infinity = true;
    gf::FieldElement x, y; // meaningful only when !infinity
    const gf::FieldSpec* fs = nullptr;

    static CurvePoint at_infinity(const gf::FieldSpec* fs);
    // Validates the curve equation; math_error when (x, y) is not on the
    // curve over fs.
    static CurvePoint affine(const WeierstrassCurve& c, const gf::FieldSpec* fs,
                             const gf::FieldElement& x,
                             const gf::FieldElement& y);
};

bool operator==(const CurvePoint&, const CurvePoint&);
bool operator!=(const CurvePoint&, const CurvePoint&);
// Canonical order: infinity first, then x index, then y index.
bool point_less(const CurvePoint&, const CurvePoint&);
std::string to_string(const CurvePoint&); // "(3,2)", "(5,3i)", "inf"

struct PointGroup {
    WeierstrassCurve curve;
    const gf::FieldSpec* fs; // field the points live over
    std::vector<CurvePoint> pts; // canonical order, infinity first
    long order() const { return (long)pts.size(); }
    bool contains(const CurvePoint& p) const;
};

// All F-rational points in canonical order; math_error past the enumeration
// cap.  F must be the curve's field or its quadratic tower.
PointGroup enumerate_points(const WeierstrassCurve& c, const gf::FieldSpec* F);

CurvePoint point_neg(const CurvePoint& p);
CurvePoint point_add(const WeierstrassCurve& c, const CurvePoint& p,
                     const CurvePoint& q);
CurvePoint point_double(const WeierstrassCurve& c, const CurvePoint& p);
CurvePoint scalar_mul(const WeierstrassCurve& c, long k, const CurvePoint& p);

long order_of(const WeierstrassCurve& c, const CurvePoint& p);

// Invariant factors (d1, d2) with d1 | d2 and d1*d2 = |G|, from torsion
// counting; (1, |G|) for cyclic groups.
std::pair<long, long> group_structure(const PointGroup& g);

std::vector<CurvePoint> two_torsion(const PointGroup& g); // includes infinity
std::vector<CurvePoint> halvings(const PointGroup& g, const CurvePoint& p);

// Coordinatewise Galois conjugation of a tower point.
CurvePoint frobenius_point(const CurvePoint& p);

// L(t) = 1 - a_E t + q t^2 with a_E = q + 1 - #E(F_q); L(1) is the point
// count and L(-1) the elliptic-point count of the modular group.
struct LPoly {
    long a_E;
    long q;
};
LPoly l_polynomial(const WeierstrassCurve& c);
LPoly l_polynomial(const PointGroup& base_group);
long l_eval(const LPoly& L, long t);
std::string to_string(const LPoly& L); // "1 + 7*t^2"

// Embedding of a base point into the tower group.
CurvePoint embed_point(const CurvePoint& p, const gf::FieldSpec* into);
bool point_in_base(const CurvePoint& p);
CurvePoint project_point(const CurvePoint& p);

} // namespace quinn::curve
