#include "quinn/coordring.hpp"

#include <algorithm>

namespace quinn::coordring {

namespace {

void check_cubic(const polyf::Poly& f) {
    if (f.degree() != 3 || !f.is_monic() || !f.coeff(2).is_zero())
        throw math_error("defining cubic must be monic x^3 + ax + b");
}

void check_same_ring(const RingElement& e1, const RingElement& e2) {
    if (e1.f != e2.f) throw internal_error("mixed coordinate rings");
}

void check_same_ring(const IdealHNF& I, const IdealHNF& J) {
    if (I.f != J.f) throw internal_error("mixed coordinate rings");
}

// Row (p, q) stands for p(x) + q(x) y.
using Row = std::pair<polyf::Poly, polyf::Poly>;

polyf::Poly poly_mod(const polyf::Poly& a, const polyf::Poly& m) {
    return polyf::divmod(a, m).second;
}

IdealHNF checked_hnf(polyf::Poly d1, polyf::Poly c, polyf::Poly d2,
                     polyf::Poly f) {
    if (!d1.is_monic() || !d2.is_monic() || c.degree() >= d1.degree())
        throw internal_error("ideal basis not in canonical form");
    auto divides = [](const polyf::Poly& a, const polyf::Poly& b) {
        return polyf::divmod(b, a).second.is_zero();
    };
    if (!divides(d2, d1) || !divides(d2, c) ||
        !divides(d1 * d2, d2 * d2 * f - c * c))
        throw internal_error("ideal basis not closed under y");
    return IdealHNF{std::move(d1), std::move(c), std::move(d2), std::move(f)};
}

} // namespace

RingElement::RingElement(polyf::Poly a_, polyf::Poly b_, polyf::Poly f_)
    : a(std::move(a_)), b(std::move(b_)), f(std::move(f_)) {
    check_cubic(f);
    if (a.spec() != f.spec() || b.spec() != f.spec())
        throw math_error("element parts must live over the cubic's field");
}

RingElement ring_zero(const polyf::Poly& f) {
    return RingElement(polyf::Poly(f.spec()), polyf::Poly(f.spec()), f);
}

RingElement ring_x(const polyf::Poly& f) {
    return RingElement(polyf::Poly::x(f.spec()), polyf::Poly(f.spec()), f);
}

RingElement ring_y(const polyf::Poly& f) {
    return RingElement(polyf::Poly(f.spec()),
                       polyf::Poly::constant(gf::FieldElement::one(f.spec())),
                       f);
}

RingElement from_poly(const polyf::Poly& a, const polyf::Poly& f) {
    return RingElement(a, polyf::Poly(f.spec()), f);
}

RingElement operator+(const RingElement& e1, const RingElement& e2) {
    check_same_ring(e1, e2);
    return RingElement(e1.a + e2.a, e1.b + e2.b, e1.f);
}

RingElement operator-(const RingElement& e1, const RingElement& e2) {
    check_same_ring(e1, e2);
    return RingElement(e1.a - e2.a, e1.b - e2.b, e1.f);
}

RingElement operator*(const RingElement& e1, const RingElement& e2) {
    check_same_ring(e1, e2);
    // (a1 + b1 y)(a2 + b2 y) with y^2 = f
    return RingElement(e1.a * e2.a + e1.b * e2.b * e1.f,
                       e1.a * e2.b + e1.b * e2.a, e1.f);
}

RingElement operator*(const polyf::Poly& s, const RingElement& e) {
    return RingElement(s * e.a, s * e.b, e.f);
}

bool operator==(const RingElement& e1, const RingElement& e2) {
    check_same_ring(e1, e2);
    return e1.a == e2.a && e1.b == e2.b;
}

bool operator!=(const RingElement& e1, const RingElement& e2) {
    return !(e1 == e2);
}

RingElement conj(const RingElement& e) { return RingElement(e.a, -e.b, e.f); }

polyf::Poly norm(const RingElement& e) { return e.a * e.a - e.b * e.b * e.f; }

RingElement exact_div(const RingElement& e, const RingElement& d) {
    check_same_ring(e, d);
    if (d.is_zero()) throw math_error("division by zero in the ring");
    // e/d = e * conj(d) / norm(d), both parts exactly divisible
    RingElement num = e * conj(d);
    polyf::Poly den = norm(d);
    return RingElement(polyf::exact_div(num.a, den),
                       polyf::exact_div(num.b, den), e.f);
}

std::string to_string(const RingElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    if (!e.a.is_zero()) out = polyf::to_string(e.a);
    if (!e.b.is_zero()) {
        if (!out.empty()) out += " + ";
        if (e.b.degree() == 0 && e.b.leading() == gf::FieldElement::one(e.spec()))
            out += "y";
        else
            out += "(" + polyf::to_string(e.b) + ")*y";
    }
    return out;
}

long infinity_valuation(const RingElement& e) {
    if (e.is_zero()) return kValInfinity;
    long v = -kValInfinity;
    if (!e.a.is_zero()) v = std::max(v, 2L * e.a.degree());
    if (!e.b.is_zero()) v = std::max(v, 3L + 2 * e.b.degree());
    return -v;
}

IdealHNF hnf_from_generators(const std::vector<RingElement>& gens) {
    if (gens.empty()) throw math_error("ideal needs at least one generator");
    const polyf::Poly& f = gens.front().f;
    const gf::FieldSpec* fs = f.spec();
    std::vector<Row> rows;
    for (const RingElement& g : gens) {
        if (g.f != f) throw internal_error("mixed coordinate rings");
        if (g.is_zero()) continue;
        rows.push_back({g.a, g.b});           // g
        rows.push_back({g.b * f, g.a});       // y g
    }
    if (rows.empty()) throw math_error("all generators are zero");

    // Eliminate the y-column: fold every row with nonzero y-part into a
    // single combination row whose y-part is the monic gcd.
    Row comb{polyf::Poly(fs), polyf::Poly(fs)};
    std::vector<polyf::Poly> firsts;
    for (Row& r : rows) {
        if (r.second.is_zero()) {
            if (!r.first.is_zero()) firsts.push_back(r.first);
            continue;
        }
        if (comb.second.is_zero()) {
            comb = r;
            continue;
        }
        auto x = polyf::xgcd(comb.second, r.second);
        Row next{x.u * comb.first + x.v * r.first, x.g};
        // both old rows reduce to pure x-rows modulo the new combination
        polyf::Poly q1 = polyf::exact_div(comb.second, x.g);
        polyf::Poly q2 = polyf::exact_div(r.second, x.g);
        polyf::Poly r1 = comb.first - q1 * next.first;
        polyf::Poly r2 = r.first - q2 * next.first;
        if (!r1.is_zero()) firsts.push_back(r1);
        if (!r2.is_zero()) firsts.push_back(r2);
        comb = next;
    }
    if (comb.second.is_zero())
        throw internal_error("ideal rows span no y-component");
    // scale the combination row by a unit so its y-part is monic
    polyf::Poly d2 = polyf::monic(comb.second);
    polyf::Poly craw = comb.second.leading().inv() * comb.first;

    // The x-rows always span a nonzero module: f is cubic (never a square),
    // so a rank-1 span c + d2 y cannot be y-closed.
    polyf::Poly d1(fs);
    for (const polyf::Poly& p : firsts)
        d1 = d1.is_zero() ? polyf::monic(p) : polyf::gcd(d1, p);
    if (d1.is_zero()) throw internal_error("ideal has no x-component");

    polyf::Poly c = poly_mod(craw, d1);
    return checked_hnf(d1, c, d2, f);
}

IdealHNF principal_ideal(const RingElement& g) {
    return hnf_from_generators({g});
}

IdealHNF unit_ideal(const polyf::Poly& f) {
    check_cubic(f);
    polyf::Poly one = polyf::Poly::constant(gf::FieldElement::one(f.spec()));
    return IdealHNF{one, polyf::Poly(f.spec()), one, f};
}

IdealHNF ideal_product(const IdealHNF& I, const IdealHNF& J) {
    check_same_ring(I, J);
    polyf::Poly zero(I.f.spec());
    RingElement i1(I.d1, zero, I.f), i2(I.c, I.d2, I.f);
    RingElement j1(J.d1, zero, J.f), j2(J.c, J.d2, J.f);
    return hnf_from_generators({i1 * j1, i1 * j2, i2 * j1, i2 * j2});
}

bool ideal_equal(const IdealHNF& I, const IdealHNF& J) {
    check_same_ring(I, J);
    return I.d1 == J.d1 && I.c == J.c && I.d2 == J.d2;
}

IdealHNF ideal_frobenius(const IdealHNF& I) {
    if (polyf::frobenius_coeffs(I.f) != I.f)
        throw math_error("conjugation needs a Galois-stable cubic");
    return checked_hnf(polyf::frobenius_coeffs(I.d1),
                       polyf::frobenius_coeffs(I.c),
                       polyf::frobenius_coeffs(I.d2), I.f);
}

std::string to_string(const IdealHNF& I) {
    return "[[" + polyf::to_string(I.d1) + ", 0], [" + polyf::to_string(I.c) +
           ", " + polyf::to_string(I.d2) + "]]";
}

IdealHNF extend_ideal(const IdealHNF& I, const gf::FieldSpec* into) {
    // HNF rows stay in HNF under coefficient embedding
    return checked_hnf(polyf::embed(I.d1, into), polyf::embed(I.c, into),
                       polyf::embed(I.d2, into), polyf::embed(I.f, into));
}

MumfordForm cantor_reduce(const IdealHNF& I) {
    // content d2 is principal in A, so the class survives stripping it
    polyf::Poly u = polyf::exact_div(I.d1, I.d2);
    polyf::Poly v = poly_mod(-(polyf::exact_div(I.c, I.d2)), u);
    if (!polyf::divmod(I.f - v * v, u).second.is_zero())
        throw internal_error("primitive part violates u | f - v^2");
    while (u.degree() > 1) {
        polyf::Poly unext = polyf::monic(polyf::exact_div(I.f - v * v, u));
        v = poly_mod(-v, unext);
        u = unext;
    }
    if (u.degree() == 0) return MumfordForm{polyf::monic(u), polyf::Poly(u.spec())};
    return MumfordForm{u, v};
}

curve::CurvePoint class_of_ideal(const IdealHNF& I) {
    MumfordForm m = cantor_reduce(I);
    const gf::FieldSpec* fs = I.f.spec();
    if (m.u.degree() == 0) return curve::CurvePoint::at_infinity(fs);
    curve::WeierstrassCurve c(fs, I.f.coeff(1), I.f.coeff(0));
    gf::FieldElement x0 = -m.u.coeff(0);
    return curve::CurvePoint::affine(c, fs, x0, polyf::eval(m.v, x0));
}

IdealHNF point_ideal(const polyf::Poly& f, const curve::CurvePoint& p) {
    check_cubic(f);
    if (p.infinity) return unit_ideal(f);
    if (p.fs != f.spec())
        throw math_error("point and cubic live over different fields");
    polyf::Poly zero(f.spec());
    polyf::Poly xa = polyf::Poly::x(f.spec()) - polyf::Poly::constant(p.x);
    polyf::Poly yb = polyf::Poly::constant(p.y);
    return hnf_from_generators(
        {RingElement(xa, zero, f),
         RingElement(-yb, polyf::Poly::constant(gf::FieldElement::one(f.spec())),
                     f)});
}

} // namespace quinn::coordring
