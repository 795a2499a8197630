#include "quinn/curve.hpp"

#include <algorithm>
#include <numeric>

namespace quinn::curve {

namespace {

gf::FieldElement curve_a(const WeierstrassCurve& c, const gf::FieldSpec* fs) {
    return gf::embed(c.a, fs);
}

gf::FieldElement curve_b(const WeierstrassCurve& c, const gf::FieldSpec* fs) {
    return gf::embed(c.b, fs);
}

void check_same_field(const CurvePoint& p, const CurvePoint& q) {
    if (p.fs != q.fs)
        throw internal_error("mixed fields in point arithmetic");
}

} // namespace

WeierstrassCurve::WeierstrassCurve(const gf::FieldSpec* fs_,
                                   const gf::FieldElement& a_,
                                   const gf::FieldElement& b_)
    : fs(fs_), a(a_), b(b_) {
    gf::FieldElement four(fs, 4), twentyseven(fs, 27);
    if ((four * a * a * a + twentyseven * b * b).is_zero())
        throw math_error("singular curve: 4a^3 + 27b^2 = 0");
}

polyf::Poly WeierstrassCurve::f(const gf::FieldSpec* over) const {
    polyf::Poly x = polyf::Poly::x(over);
    return x * x * x + polyf::Poly::constant(curve_a(*this, over)) * x +
           polyf::Poly::constant(curve_b(*this, over));
}

std::string equation_string(const WeierstrassCurve& c) {
    std::string rhs = "x^3";
    if (!c.a.is_zero()) {
        std::string as = gf::to_string(c.a);
        rhs += " + " + (as == "1" ? std::string() : as + "*") + "x";
    }
    if (!c.b.is_zero()) rhs += " + " + gf::to_string(c.b);
    return "y^2 = " + rhs;
}

WeierstrassCurve from_long_form(const gf::FieldSpec* fs,
                                const gf::FieldElement& a1,
                                const gf::FieldElement& a2,
                                const gf::FieldElement& a3,
                                const gf::FieldElement& a4,
                                const gf::FieldElement& a6) {
    // complete the square: y -> y - (a1 x + a3)/2
    gf::FieldElement half = gf::FieldElement(fs, 2).inv();
    gf::FieldElement quarter = half * half;
    gf::FieldElement c2 = a2 + quarter * a1 * a1;
    gf::FieldElement c4 = a4 + half * a1 * a3;
    gf::FieldElement c6 = a6 + quarter * a3 * a3;
    // complete the cube: x -> x - c2/3
    if (!c2.is_zero() && fs->p() == 3)
        throw math_error("long form needs p != 3 when the x^2 term survives");
    gf::FieldElement third = fs->p() == 3 ? gf::FieldElement::zero(fs)
                                          : gf::FieldElement(fs, 3).inv();
    gf::FieldElement s = third * c2; // shift
    gf::FieldElement a = c4 - gf::FieldElement(fs, 3) * s * s;
    gf::FieldElement b =
        c6 + gf::FieldElement(fs, 2) * s * s * s - c4 * s;
    return WeierstrassCurve(fs, a, b);
}

CurvePoint CurvePoint::at_infinity(const gf::FieldSpec* fs) {
    CurvePoint p;
    p.infinity = true;
    p.x = gf::FieldElement::zero(fs);
    p.y = gf::FieldElement::zero(fs);
    p.fs = fs;
    return p;
}

CurvePoint CurvePoint::affine(const WeierstrassCurve& c,
                              const gf::FieldSpec* fs,
                              const gf::FieldElement& x,
                              const gf::FieldElement& y) {
    if (y * y != x * x * x + curve_a(c, fs) * x + curve_b(c, fs))
        throw math_error("point (" + gf::to_string(x) + "," + gf::to_string(y) +
                         ") is not on the curve over " + fs->name());
    CurvePoint p;
    p.infinity = false;
    p.x = x;
    p.y = y;
    p.fs = fs;
    return p;
}

bool operator==(const CurvePoint& p, const CurvePoint& q) {
    check_same_field(p, q);
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
}

bool operator!=(const CurvePoint& p, const CurvePoint& q) { return !(p == q); }

bool point_less(const CurvePoint& p, const CurvePoint& q) {
    check_same_field(p, q);
    if (p.infinity != q.infinity) return p.infinity;
    if (p.infinity) return false;
    if (p.x.index() != q.x.index()) return p.x.index() < q.x.index();
    return p.y.index() < q.y.index();
}

std::string to_string(const CurvePoint& p) {
    if (p.infinity) return "inf";
    return "(" + gf::to_string(p.x) + "," + gf::to_string(p.y) + ")";
}

bool PointGroup::contains(const CurvePoint& p) const {
    return std::any_of(pts.begin(), pts.end(),
                       [&](const CurvePoint& q) { return q == p; });
}

PointGroup enumerate_points(const WeierstrassCurve& c, const gf::FieldSpec* F) {
    if (F != c.fs && F != c.fs->tower())
        throw math_error("points live over the curve's field or its tower");
    if (F->size() > enumeration_cap())
        throw math_error("field size exceeds the enumeration cap");
    PointGroup g{c, F, {}};
    g.pts.push_back(CurvePoint::at_infinity(F));
    gf::FieldElement a = curve_a(c, F), b = curve_b(c, F);
    for (long ix = 0; ix < F->size(); ++ix) {
        gf::FieldElement x = gf::FieldElement::from_index(F, ix);
        gf::FieldElement fx = x * x * x + a * x + b;
        for (const gf::FieldElement& y : gf::sqrt_in_field(fx))
            g.pts.push_back(CurvePoint::affine(c, F, x, y));
    }
    return g;
}

CurvePoint point_neg(const CurvePoint& p) {
    if (p.infinity) return p;
    CurvePoint q = p;
    q.y = -q.y;
    return q;
}

CurvePoint point_add(const WeierstrassCurve& c, const CurvePoint& p,
                     const CurvePoint& q) {
    check_same_field(p, q);
    if (p.infinity) return q;
    if (q.infinity) return p;
    const gf::FieldSpec* fs = p.fs;
    if (p.x == q.x && p.y == -q.y) return CurvePoint::at_infinity(fs);
    gf::FieldElement lambda = gf::FieldElement::zero(fs);
    if (p.x == q.x) {
        // tangent: (3x^2 + a) / 2y
        lambda = (gf::FieldElement(fs, 3) * p.x * p.x + curve_a(c, fs)) /
                 (gf::FieldElement(fs, 2) * p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    gf::FieldElement x3 = lambda * lambda - p.x - q.x;
    gf::FieldElement y3 = lambda * (p.x - x3) - p.y;
    return CurvePoint::affine(c, fs, x3, y3);
}

CurvePoint point_double(const WeierstrassCurve& c, const CurvePoint& p) {
    return point_add(c, p, p);
}

CurvePoint scalar_mul(const WeierstrassCurve& c, long k, const CurvePoint& p) {
    CurvePoint base = k < 0 ? point_neg(p) : p;
    if (k < 0) k = -k;
    CurvePoint acc = CurvePoint::at_infinity(p.fs);
    while (k > 0) {
        if (k & 1) acc = point_add(c, acc, base);
        base = point_double(c, base);
        k >>= 1;
    }
    return acc;
}

long order_of(const WeierstrassCurve& c, const CurvePoint& p) {
    long n = 1;
    CurvePoint acc = p;
    while (!acc.infinity) {
        acc = point_add(c, acc, p);
        ++n;
    }
    return n;
}

std::pair<long, long> group_structure(const PointGroup& g) {
    long N = g.order();
    long exponent = 1;
    for (const CurvePoint& p : g.pts)
        exponent = std::lcm(exponent, order_of(g.curve, p));
    long d2 = exponent, d1 = N / d2;
    if (d1 * d2 != N || d2 % d1 != 0)
        throw internal_error("inconsistent invariant factors");
    // cross-check by torsion count: |G[d1]| must be d1^2
    long t = 0;
    for (const CurvePoint& p : g.pts)
        if (scalar_mul(g.curve, d1, p).infinity) ++t;
    if (t != d1 * d1)
        throw internal_error("torsion count contradicts invariant factors");
    return {d1, d2};
}

std::vector<CurvePoint> two_torsion(const PointGroup& g) {
    std::vector<CurvePoint> out;
    for (const CurvePoint& p : g.pts)
        if (point_double(g.curve, p).infinity) out.push_back(p);
    return out;
}

std::vector<CurvePoint> halvings(const PointGroup& g, const CurvePoint& p) {
    std::vector<CurvePoint> out;
    for (const CurvePoint& q : g.pts)
        if (point_double(g.curve, q) == p) out.push_back(q);
    return out;
}

CurvePoint frobenius_point(const CurvePoint& p) {
    if (p.infinity) return p;
    CurvePoint q = p;
    q.x = gf::frobenius(p.x);
    q.y = gf::frobenius(p.y);
    return q;
}

LPoly l_polynomial(const WeierstrassCurve& c) {
    return l_polynomial(enumerate_points(c, c.fs));
}

LPoly l_polynomial(const PointGroup& base_group) {
    long q = base_group.fs->size();
    return {q + 1 - base_group.order(), q};
}

long l_eval(const LPoly& L, long t) { return 1 - L.a_E * t + L.q * t * t; }

std::string to_string(const LPoly& L) {
    std::string out = "1";
    if (L.a_E != 0)
        out += (L.a_E > 0 ? " - " : " + ") +
               std::to_string(L.a_E > 0 ? L.a_E : -L.a_E) + "*t";
    out += " + " + std::to_string(L.q) + "*t^2";
    return out;
}

CurvePoint embed_point(const CurvePoint& p, const gf::FieldSpec* into) {
    if (p.fs == into) return p;
    CurvePoint q;
    q.infinity = p.infinity;
    q.x = gf::embed(p.x, into);
    q.y = gf::embed(p.y, into);
    q.fs = into;
    return q;
}

bool point_in_base(const CurvePoint& p) {
    if (p.infinity) return true;
    return gf::in_base(p.x) && gf::in_base(p.y);
}

CurvePoint project_point(const CurvePoint& p) {
    CurvePoint q;
    q.infinity = p.infinity;
    if (p.infinity) {
        if (!p.fs->base())
            throw math_error("projection needs a tower point");
        q.x = gf::FieldElement::zero(p.fs->base());
        q.y = q.x;
        q.fs = p.fs->base();
        return q;
    }
    q.x = gf::project_to_base(p.x);
    q.y = gf::project_to_base(p.y);
    q.fs = p.fs->base();
    return q;
}

} // namespace quinn::curve
