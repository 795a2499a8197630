#pragma once

// The coordinate ring A = F_q[x,y]/(y^2 - f(x)) of an affine elliptic curve
// and its ideal algebra: canonical Hermite module bases over F_q[x], ideal
// products and equality, Cantor reduction to Mumford form, and the map from
// ideal classes to curve points.

#include <string>
#include <vector>

#include "quinn/curve.hpp"

namespace quinn::coordring {

// a(x) + b(x)*y with y^2 = f(x), f the monic short-Weierstrass cubic of the
// ambient curve (no x^2 term).  The cubic travels with the element, so
// elements of different rings never mix silently.
struct RingElement {
    polyf::Poly a, b;
    polyf::Poly f;

    // math_error unless f is monic cubic without x^2 term and a, b, f share
    // one field.
    RingElement(polyf::Poly a, polyf::Poly b, polyf::Poly f);

    const gf::FieldSpec* spec() const { return f.spec(); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

RingElement ring_zero(const polyf::Poly& f);
RingElement ring_x(const polyf::Poly& f);
RingElement ring_y(const polyf::Poly& f);
RingElement from_poly(const polyf::Poly& a, const polyf::Poly& f);

RingElement operator+(const RingElement&, const RingElement&);
RingElement operator-(const RingElement&, const RingElement&);
RingElement operator*(const RingElement&, const RingElement&);
RingElement operator*(const polyf::Poly& s, const RingElement& e);
bool operator==(const RingElement&, const RingElement&);
bool operator!=(const RingElement&, const RingElement&);

RingElement conj(const RingElement& e); // a - b*y
polyf::Poly norm(const RingElement& e); // a^2 - b^2 f, in F_q[x]

// Quotient e/d in A; math_error when d = 0 or d does not divide e.
RingElement exact_div(const RingElement& e, const RingElement& d);

std::string to_string(const RingElement& e);

// v(0), strictly larger than every finite valuation.
inline constexpr long kValInfinity = 1L << 60;

// Valuation at the place at infinity of K = Frac(A):
// v(a + by) = -max(2 deg a, 3 + 2 deg b), parts of a zero polynomial skipped.
// The two parities never tie, so v is computable termwise.
long infinity_valuation(const RingElement& e);

// Nonzero ideal of A as the F_q[x]-row span of [[d1, 0], [c, d2]] in the
// module basis {1, y}: d1, d2 monic, deg c < deg d1, and y-closure
// d2 | d1, d2 | c, d1 d2 | d2^2 f - c^2.  Canonical, so structural equality
// is ideal equality.
struct IdealHNF {
    polyf::Poly d1, c, d2;
    polyf::Poly f;
};

// Canonical basis of the ideal generated by gens, via Hermite reduction of
// the rows {g, y g}.  math_error when no generator is nonzero.
IdealHNF hnf_from_generators(const std::vector<RingElement>& gens);

IdealHNF principal_ideal(const RingElement& g);
IdealHNF unit_ideal(const polyf::Poly& f);

// HNF of all pairwise products of the two bases.
IdealHNF ideal_product(const IdealHNF& I, const IdealHNF& J);

bool ideal_equal(const IdealHNF& I, const IdealHNF& J);

// Entrywise Galois conjugation of a tower ideal; an involution.
IdealHNF ideal_frobenius(const IdealHNF& I);

std::string to_string(const IdealHNF& I);

// Base change A -> A~: the ideal I A~ over the tower field.  Commutes with
// the class map through the point embedding.
IdealHNF extend_ideal(const IdealHNF& I, const gf::FieldSpec* into);

// Reduced divisor representative (u, v): u monic, deg v < deg u, u | f - v^2,
// and deg u <= 1 after reduction (u = 1 marks the trivial class).
struct MumfordForm {
    polyf::Poly u, v;
};

// Strips the F_q[x]-content d2 (principal, hence class-trivial), reads the
// primitive Mumford pair, and iterates u <- monic((f - v^2)/u), v <- -v mod u
// until deg u <= 1.  The result stays in the ideal class of I.
MumfordForm cantor_reduce(const IdealHNF& I);

// Class of I as a point of E: infinity when reduced u = 1, else (x0, v(x0))
// for u = x - x0.  Constant on ideal classes; inverse of
// (a, b) -> A(x - a) + A(y - b).
curve::CurvePoint class_of_ideal(const IdealHNF& I);

// The prime ideal A(x - a) + A(y - b) of an affine point, or the unit ideal
// at infinity.
IdealHNF point_ideal(const polyf::Poly& f, const curve::CurvePoint& p);

} // namespace quinn::coordring
