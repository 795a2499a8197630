#include <doctest.h>

#include <random>

#include "quinn/coordring.hpp"

using namespace quinn;
using coordring::IdealHNF;
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

Poly P(std::vector<long> coeffs) { return Poly(F7(), std::move(coeffs)); }

CurvePoint pt(const WeierstrassCurve& c, long x, long y) {
    return CurvePoint::affine(c, c.fs, FieldElement(c.fs, x),
                              FieldElement(c.fs, y));
}

RingElement rnd_element(const Poly& f, std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<long> cd(0, 6), dd(0, maxdeg);
    auto rnd_poly = [&] {
        std::vector<long> cs(dd(rng) + 1);
        for (long& c : cs) c = cd(rng);
        return Poly(f.spec(), cs);
    };
    return RingElement(rnd_poly(), rnd_poly(), f);
}

} // namespace

TEST_CASE("ring arithmetic and norms") {
    Poly f = curve_m1().f(F7()); // x^3 - x
    RingElement y = coordring::ring_y(f);
    RingElement x = coordring::ring_x(f);

    RingElement y2 = y * y;
    CHECK(y2.a == f);
    CHECK(y2.b.is_zero());
    CHECK(coordring::norm(y) == -f);
    CHECK(coordring::norm(x) == P({0, 0, 1}));
    CHECK(coordring::conj(y) == coordring::ring_zero(f) - y);
    CHECK(coordring::conj(x) == x);

    // f/y = y
    CHECK(coordring::exact_div(coordring::from_poly(f, f), y) == y);
    CHECK_THROWS_AS(coordring::exact_div(x, y), math_error);
    CHECK_THROWS_AS(coordring::exact_div(x, coordring::ring_zero(f)),
                    math_error);

    CHECK(coordring::to_string(y) == "y");
    CHECK(coordring::to_string(x + y) == "x + y");
    CHECK(coordring::to_string(x * y) == "(x)*y");

    // mixed-ring arithmetic is a programming error
    Poly g = curve_m3().f(F7());
    CHECK_THROWS_AS(coordring::ring_y(f) * coordring::ring_y(g),
                    internal_error);
    // the cubic must be short-Weierstrass
    CHECK_THROWS_AS(coordring::ring_y(P({0, 0, 1, 1})), math_error);
    CHECK_THROWS_AS(coordring::ring_y(P({0, 0, 0, 2})), math_error);
}

TEST_CASE("valuation at infinity") {
    Poly f = curve_m3().f(F7()); // x^3 - 3x
    RingElement y = coordring::ring_y(f);
    RingElement x = coordring::ring_x(f);
    CHECK(coordring::infinity_valuation(y) == -3);
    CHECK(coordring::infinity_valuation(x) == -2);
    CHECK(coordring::infinity_valuation(coordring::ring_zero(f)) ==
          coordring::kValInfinity);
    // Delta = 3x of the normalizer with q(M) = (x, y): even valuation
    CHECK(coordring::infinity_valuation(coordring::from_poly(P({0, 3}), f)) ==
          -2);
    CHECK(coordring::infinity_valuation(coordring::from_poly(P({5}), f)) == 0);
    CHECK(coordring::infinity_valuation(x * y) == -5);

    std::mt19937 rng(20260822);
    for (int k = 0; k < 50; ++k) {
        RingElement e1 = rnd_element(f, rng, 3), e2 = rnd_element(f, rng, 3);
        if (e1.is_zero() || e2.is_zero()) continue;
        long v1 = coordring::infinity_valuation(e1);
        long v2 = coordring::infinity_valuation(e2);
        CHECK(coordring::infinity_valuation(e1 * e2) == v1 + v2);
        if (v1 != v2)
            CHECK(coordring::infinity_valuation(e1 + e2) == std::min(v1, v2));
    }
}

TEST_CASE("canonical bases of named ideals") {
    Poly f = curve_m1().f(F7()); // x^3 - x
    RingElement y = coordring::ring_y(f);
    RingElement x = coordring::ring_x(f);

    // (x, y): module basis {x, y}
    IdealHNF q = coordring::hnf_from_generators({x, y});
    CHECK(q.d1 == P({0, 1}));
    CHECK(q.c.is_zero());
    CHECK(q.d2 == P({1}));

    // (1) = A
    IdealHNF one = coordring::principal_ideal(
        coordring::from_poly(P({1}), f));
    CHECK(coordring::ideal_equal(one, coordring::unit_ideal(f)));
    CHECK(one.d1 == P({1}));
    CHECK(one.d2 == P({1}));

    // (y): module basis {x^3 - x, y}
    IdealHNF py = coordring::principal_ideal(y);
    CHECK(py.d1 == f);
    CHECK(py.c.is_zero());
    CHECK(py.d2 == P({1}));

    CHECK_THROWS_AS(coordring::hnf_from_generators({coordring::ring_zero(f)}),
                    math_error);
    CHECK_THROWS_AS(coordring::hnf_from_generators({}), math_error);

    // generator order never matters
    std::mt19937 rng(7);
    for (int k = 0; k < 20; ++k) {
        RingElement g1 = rnd_element(f, rng, 2), g2 = rnd_element(f, rng, 2);
        if (g1.is_zero() || g2.is_zero()) continue;
        CHECK(coordring::ideal_equal(coordring::hnf_from_generators({g1, g2}),
                                     coordring::hnf_from_generators({g2, g1})));
    }
}

TEST_CASE("ideal squares realizing principal ideals") {
    Poly f = curve_m1().f(F7()); // x^3 - x
    RingElement y = coordring::ring_y(f);
    RingElement x = coordring::ring_x(f);

    // (x, y)^2 = (x): the Delta = x of the first reference matrix
    IdealHNF q0 = coordring::hnf_from_generators({x, y});
    CHECK(coordring::ideal_equal(coordring::ideal_product(q0, q0),
                                 coordring::principal_ideal(x)));

    // (x - 1, y)^2 = (x - 1)
    RingElement xm1 = coordring::from_poly(P({6, 1}), f);
    IdealHNF q1 = coordring::hnf_from_generators({xm1, y});
    CHECK(coordring::ideal_equal(coordring::ideal_product(q1, q1),
                                 coordring::principal_ideal(xm1)));

    // unit ideal is the multiplicative identity
    IdealHNF u = coordring::unit_ideal(f);
    CHECK(coordring::ideal_equal(coordring::ideal_product(q0, u), q0));
    CHECK(coordring::ideal_equal(coordring::ideal_product(u, u), u));
}

TEST_CASE("products commute and associate") {
    Poly f = curve_m3().f(F7());
    std::mt19937 rng(99);
    int done = 0;
    while (done < 15) {
        RingElement g1 = rnd_element(f, rng, 2), g2 = rnd_element(f, rng, 2),
                    g3 = rnd_element(f, rng, 2);
        if (g1.is_zero() || g2.is_zero() || g3.is_zero()) continue;
        IdealHNF I = coordring::principal_ideal(g1);
        IdealHNF J = coordring::hnf_from_generators({g2, g3});
        IdealHNF K = coordring::hnf_from_generators({g1 + g2, g3});
        CHECK(coordring::ideal_equal(coordring::ideal_product(I, J),
                                     coordring::ideal_product(J, I)));
        CHECK(coordring::ideal_equal(
            coordring::ideal_product(coordring::ideal_product(I, J), K),
            coordring::ideal_product(I, coordring::ideal_product(J, K))));
        ++done;
    }
}

TEST_CASE("Cantor reduction on the doubling example") {
    auto c = curve_m3(); // y^2 = x^3 - 3x
    Poly f = c.f(F7());

    IdealHNF p32 = coordring::point_ideal(f, pt(c, 3, 2));
    // already reduced: u = x - 3, v = 2
    auto m = coordring::cantor_reduce(p32);
    CHECK(m.u == P({4, 1}));
    CHECK(m.v == P({2}));

    // (x-3, y-2)^2 reduces to the double 2*(3,2) = (2,4)
    IdealHNF sq = coordring::ideal_product(p32, p32);
    auto msq = coordring::cantor_reduce(sq);
    CHECK(msq.u == P({5, 1}));
    CHECK(msq.v == P({4}));
    CHECK(coordring::class_of_ideal(sq) == pt(c, 2, 4));

    auto munit = coordring::cantor_reduce(coordring::unit_ideal(f));
    CHECK(munit.u == P({1}));
    CHECK(munit.v.is_zero());
}

TEST_CASE("classes of point ideals round-trip") {
    for (auto c : {curve_m3(), curve_m1()}) {
        Poly f = c.f(F7());
        auto g = curve::enumerate_points(c, F7());
        for (const CurvePoint& p : g.pts) {
            IdealHNF I = coordring::point_ideal(f, p);
            CHECK(coordring::class_of_ideal(I) == p);
        }
    }
}

TEST_CASE("class map is a homomorphism to the point group") {
    auto c = curve_m1();
    Poly f = c.f(F7());
    auto g = curve::enumerate_points(c, F7());
    std::mt19937 rng(424242);
    std::uniform_int_distribution<size_t> pick(0, g.pts.size() - 1);
    for (int k = 0; k < 60; ++k) {
        const CurvePoint &p = g.pts[pick(rng)], &q = g.pts[pick(rng)];
        IdealHNF I = coordring::point_ideal(f, p);
        IdealHNF J = coordring::point_ideal(f, q);
        CHECK(coordring::class_of_ideal(coordring::ideal_product(I, J)) ==
              curve::point_add(c, p, q));
    }
}

TEST_CASE("principal ideals have trivial class") {
    auto c = curve_m1();
    Poly f = c.f(F7());
    // divisor of y is the three finite two-torsion points, which sum to 0
    CHECK(coordring::class_of_ideal(
              coordring::principal_ideal(coordring::ring_y(f)))
              .infinity);
    std::mt19937 rng(31337);
    int done = 0;
    while (done < 40) {
        RingElement g = rnd_element(f, rng, 3);
        if (g.is_zero()) continue;
        CHECK(coordring::class_of_ideal(coordring::principal_ideal(g)).infinity);
        ++done;
    }
}

TEST_CASE("conjugating a tower ideal conjugates its class") {
    auto c = curve_m3();
    const FieldSpec* F49 = F7()->tower();
    Poly f = c.f(F49);
    auto gt = curve::enumerate_points(c, F49);
    std::mt19937 rng(555);
    std::uniform_int_distribution<size_t> pick(0, gt.pts.size() - 1);
    for (int k = 0; k < 30; ++k) {
        const CurvePoint &p = gt.pts[pick(rng)], &q = gt.pts[pick(rng)];
        IdealHNF I = coordring::ideal_product(coordring::point_ideal(f, p),
                                              coordring::point_ideal(f, q));
        IdealHNF Ibar = coordring::ideal_frobenius(I);
        CHECK(coordring::class_of_ideal(Ibar) ==
              curve::frobenius_point(coordring::class_of_ideal(I)));
        CHECK(coordring::ideal_equal(coordring::ideal_frobenius(Ibar), I));
    }
}
