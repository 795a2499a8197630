#include <doctest.h>

#include <random>

#include "quinn/classtower.hpp"

using namespace quinn;
using classtower::ClassGroupData;
using coordring::RingElement;
using curve::CurvePoint;
using curve::WeierstrassCurve;
using gf::FieldElement;
using gf::FieldSpec;
using polyf::Poly;

namespace {

const FieldSpec* F7() { return FieldSpec::prime(7); }

WeierstrassCurve curve_m3() { // y^2 = x^3 - 3x
    return WeierstrassCurve(F7(), FieldElement(F7(), 4), FieldElement(F7(), 0));
}

WeierstrassCurve curve_m1() { // y^2 = x^3 - x
    return WeierstrassCurve(F7(), FieldElement(F7(), 6), FieldElement(F7(), 0));
}

CurvePoint pt(const WeierstrassCurve& c, long x, long y) {
    return CurvePoint::affine(c, c.fs, FieldElement(c.fs, x),
                              FieldElement(c.fs, y));
}

// affine tower point (x0, y1*i) with purely imaginary y
CurvePoint ipt(const WeierstrassCurve& c, long x0, long y1) {
    const FieldSpec* t = c.fs->tower();
    return CurvePoint::affine(c, t, gf::FieldElement::from_coeffs(t, {x0, 0}),
                              gf::FieldElement::from_coeffs(t, {0, y1}));
}

} // namespace

TEST_CASE("norm kernel of y^2 = x^3 - 3x over F_49") {
    auto c = curve_m3();
    ClassGroupData data = classtower::build_class_tower(c);

    CHECK(data.base_group.order() == 8);
    CHECK(data.tower_group.order() == 64);
    REQUIRE(data.quinn.size() == 2);
    CHECK(data.quinn[0].infinity);
    CHECK(data.quinn[1] == pt(c, 0, 0));
    CHECK(data.n_E == 4);

    // frozen kernel: {inf, (0,0), (1,+-3i), (4,+-2i), (5,+-3i)}
    REQUIRE(data.norm_kernel.size() == 8);
    std::vector<CurvePoint> expect = {
        CurvePoint::at_infinity(data.twr),
        curve::embed_point(pt(c, 0, 0), data.twr),
        ipt(c, 1, 3), ipt(c, 1, 4), ipt(c, 4, 2), ipt(c, 4, 5),
        ipt(c, 5, 3), ipt(c, 5, 4)};
    std::sort(expect.begin(), expect.end(), curve::point_less);
    CHECK(data.norm_kernel == expect);
    CHECK(classtower::check_two_torsion_iso(data));
    CHECK(curve::l_eval(curve::l_polynomial(c), -1) == 8);
}

TEST_CASE("norm kernel of y^2 = x^3 - x over F_49") {
    auto c = curve_m1();
    ClassGroupData data = classtower::build_class_tower(c);

    CHECK(data.base_group.order() == 8);
    REQUIRE(data.quinn.size() == 4);
    CHECK(data.n_E == 2);

    // frozen kernel: {inf, (0,0), (1,0), (6,0), (2,+-i), (3,+-2i)}
    REQUIRE(data.norm_kernel.size() == 8);
    std::vector<CurvePoint> expect = {
        CurvePoint::at_infinity(data.twr),
        curve::embed_point(pt(c, 0, 0), data.twr),
        curve::embed_point(pt(c, 1, 0), data.twr),
        curve::embed_point(pt(c, 6, 0), data.twr),
        ipt(c, 2, 1), ipt(c, 2, 6), ipt(c, 3, 2), ipt(c, 3, 5)};
    std::sort(expect.begin(), expect.end(), curve::point_less);
    CHECK(data.norm_kernel == expect);
    CHECK(classtower::check_two_torsion_iso(data));
}

TEST_CASE("norm map values and homomorphism") {
    auto c = curve_m1();
    ClassGroupData data = classtower::build_class_tower(c);

    // kernel point maps to infinity
    CHECK(classtower::norm_point(c, ipt(c, 2, 1)).infinity);
    // base-rational point doubles
    auto c3 = curve_m3();
    CHECK(classtower::norm_point(
              c3, curve::embed_point(pt(c3, 3, 2), c3.fs->tower())) ==
          pt(c3, 2, 4));

    std::mt19937 rng(1234);
    std::uniform_int_distribution<size_t> pick(0, data.tower_group.pts.size() - 1);
    for (int k = 0; k < 100; ++k) {
        const CurvePoint& p = data.tower_group.pts[pick(rng)];
        const CurvePoint& q = data.tower_group.pts[pick(rng)];
        CurvePoint lhs = classtower::norm_point(c, curve::point_add(c, p, q));
        CurvePoint rhs = curve::point_add(c, classtower::norm_point(c, p),
                                          classtower::norm_point(c, q));
        CHECK(lhs == rhs);
    }

    CHECK_THROWS_AS(classtower::norm_point(c, pt(c, 0, 0)), math_error);
}

TEST_CASE("kernel order is L(-1) and the Weil floor holds") {
    for (auto c : {curve_m3(), curve_m1()}) {
        ClassGroupData data = classtower::build_class_tower(c);
        CHECK((long)data.norm_kernel.size() ==
              curve::l_eval(curve::l_polynomial(c), -1));
        // (sqrt(q) - 1)^2 with q = 7 is under 3
        CHECK(data.norm_kernel.size() >= 3);
        CHECK(data.quinn.size() <= 4);
    }
}

TEST_CASE("embedded base points are exactly the Galois-fixed tower points") {
    auto c = curve_m3();
    ClassGroupData data = classtower::build_class_tower(c);
    long fixed = 0;
    for (const CurvePoint& p : data.tower_group.pts)
        if (curve::frobenius_point(p) == p) ++fixed;
    CHECK(fixed == data.base_group.order());
    for (const CurvePoint& p : data.base_group.pts) {
        CurvePoint e = curve::embed_point(p, data.twr);
        CHECK(curve::frobenius_point(e) == e);
        CHECK(data.tower_group.contains(e));
    }
}

TEST_CASE("elliptic point ideal J = (eps + s, t)") {
    auto c = curve_m1();
    Poly f = c.f(F7());

    // s = y, t = x - 2: (eps + y)(-eps + y) = f + 1 = (x-2)(x^2+2x+3)
    RingElement s = coordring::ring_y(f);
    RingElement t = coordring::from_poly(Poly(F7(), {5, 1}), f);
    auto [J, cls] = classtower::elliptic_point_ideal(s, t);
    CHECK(cls == ipt(c, 2, 6)); // (2, -i)

    // s = 0, t = 1 gives the unit ideal and the trivial class
    auto [J1, cls1] = classtower::elliptic_point_ideal(
        coordring::ring_zero(f),
        coordring::from_poly(Poly(F7(), {1}), f));
    CHECK(cls1.infinity);
    CHECK(coordring::ideal_equal(
        J1, coordring::unit_ideal(polyf::embed(f, F7()->tower()))));

    // violated divisibility precondition
    CHECK_THROWS_AS(classtower::elliptic_point_ideal(
                        s, coordring::from_poly(Poly(F7(), {6, 1}), f)),
                    math_error);
    CHECK_THROWS_AS(
        classtower::elliptic_point_ideal(s, coordring::ring_zero(f)),
        math_error);
}

TEST_CASE("random valid (s, t) pairs land in the kernel with trivial norm") {
    auto c = curve_m1();
    ClassGroupData data = classtower::build_class_tower(c);
    Poly f = c.f(F7());
    gf::FieldElement s_fld =
        gf::FieldElement::from_coeffs(F7(), data.twr->nonsquare());

    std::mt19937 rng(987654);
    std::uniform_int_distribution<long> cd(0, 6), dd(0, 2);
    int found = 0, trials = 0;
    while (found < 100 && trials < 20000) {
        ++trials;
        std::vector<long> cs(dd(rng) + 1);
        for (long& v : cs) v = cd(rng);
        RingElement s = coordring::from_poly(Poly(F7(), cs), f);
        // norm of eps + s, an honest element of F_q[x]
        Poly g = (s * s).a - Poly::constant(s_fld);
        auto fac = polyf::factor(g);
        if (fac.empty()) continue;
        // random divisor assembled from the factorization
        Poly t = Poly::constant(gf::FieldElement::one(F7()));
        for (const auto& [p, e] : fac)
            for (int k = 0; k < e; ++k)
                if (cd(rng) % 2) t = t * p;
        if (t.degree() < 1) continue;
        auto [J, cls] = classtower::elliptic_point_ideal(
            s, coordring::from_poly(t, f));
        CHECK(data.in_norm_kernel(cls));
        CHECK(classtower::norm_point(c, cls).infinity);
        ++found;
    }
    CHECK(found == 100);
}

TEST_CASE("J is independent of the eps normalization") {
    // omega = (eps + s)/t = (u eps + u s)/(u t), so the ideal built from the
    // scaled generators must coincide with J itself.
    auto c = curve_m1();
    Poly f = c.f(F7());
    const FieldSpec* twr = F7()->tower();
    RingElement s = coordring::ring_y(f);
    RingElement t = coordring::from_poly(Poly(F7(), {5, 1}), f);
    auto [J, cls] = classtower::elliptic_point_ideal(s, t);

    Poly ft = polyf::embed(f, twr);
    Poly eps = Poly::constant(gf::FieldElement::generator(twr));
    for (long u = 2; u <= 3; ++u) {
        Poly uc = Poly::constant(gf::embed(FieldElement(F7(), u), twr));
        RingElement g1(uc * (polyf::embed(s.a, twr) + eps),
                       uc * polyf::embed(s.b, twr), ft);
        RingElement g2(uc * polyf::embed(t.a, twr), uc * polyf::embed(t.b, twr),
                       ft);
        auto Ju = coordring::hnf_from_generators({g1, g2});
        CHECK(coordring::ideal_equal(Ju, J));
        CHECK(coordring::class_of_ideal(Ju) == cls);
    }
}

TEST_CASE("cusp ideals") {
    auto c3 = curve_m3();
    Poly f3 = c3.f(F7());
    // (1 : 0), the cusp at infinity
    CHECK(classtower::cusp_ideal(
              coordring::from_poly(Poly(F7(), {1}), f3),
              coordring::ring_zero(f3))
              .infinity);
    // (x - 3 : y - 2) on y^2 = x^3 - 3x
    RingElement xm3 = coordring::from_poly(Poly(F7(), {4, 1}), f3);
    RingElement ym2 =
        coordring::ring_y(f3) - coordring::from_poly(Poly(F7(), {2}), f3);
    CHECK(classtower::cusp_ideal(xm3, ym2) == pt(c3, 3, 2));

    auto c1 = curve_m1();
    Poly f1 = c1.f(F7());
    CHECK(classtower::cusp_ideal(coordring::ring_x(f1),
                                 coordring::ring_y(f1)) == pt(c1, 0, 0));
    CHECK_THROWS_AS(classtower::cusp_ideal(coordring::ring_zero(f1),
                                           coordring::ring_zero(f1)),
                    math_error);
}
