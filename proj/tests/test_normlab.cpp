#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "quinn/normlab.hpp"

using namespace quinn;
using classtower::ClassGroupData;
using coordring::IdealHNF;
using coordring::RingElement;
using curve::CurvePoint;
using curve::WeierstrassCurve;
using gf::FieldElement;
using gf::FieldSpec;
using normlab::MatrixOverA;
using normlab::NormalizerReport;
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

RingElement el(const Poly& f, std::vector<long> a, std::vector<long> b) {
    return RingElement(Poly(f.spec(), std::move(a)),
                       Poly(f.spec(), std::move(b)), f);
}

// [[y, b], [c, -y]] for polynomials b, c
MatrixOverA yb_matrix(const Poly& f, const Poly& b, const Poly& c) {
    RingElement y = coordring::ring_y(f);
    return {y, coordring::from_poly(b, f), coordring::from_poly(c, f),
            coordring::ring_zero(f) - y};
}

MatrixOverA m0() { // [[y, -x^2], [x, -y]] over y^2 = x^3 - x
    Poly f = curve_m1().f(F7());
    return yb_matrix(f, Poly(F7(), {0, 0, 6}), Poly::x(F7()));
}

MatrixOverA m1() { // [[y, -(x-1)(x+2)], [x-1, -y]]
    Poly f = curve_m1().f(F7());
    return yb_matrix(f, Poly(F7(), {2, 6, 6}), Poly(F7(), {6, 1}));
}

RingElement rnd_element(const Poly& f, std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<long> cd(0, f.spec()->size() - 1),
        dd(0, maxdeg);
    auto rnd_poly = [&] {
        std::vector<long> cs(dd(rng) + 1);
        for (long& c : cs) c = cd(rng);
        return Poly(f.spec(), cs);
    };
    return RingElement(rnd_poly(), rnd_poly(), f);
}

} // namespace

TEST_CASE("the two displayed normalizers pass with their classes") {
    auto c = curve_m1();
    Poly f = c.f(F7());

    NormalizerReport r0 = normlab::cremona_check(m0());
    CHECK(r0.is_normalizer);
    CHECK(r0.row_col_ok);
    CHECK(r0.m_squared_ok);
    CHECK(r0.parity_ok);
    CHECK(r0.class_point == pt(c, 0, 0));
    CHECK(r0.delta == el(f, {0, 1}, {})); // det M0 = x
    CHECK(r0.v_infinity_delta == -2);
    CHECK(r0.qM.d1 == Poly::x(F7()));     // q(M0) = (x, y)
    CHECK(r0.qM.c.is_zero());
    CHECK(r0.qM.d2 == Poly(F7(), {1}));

    NormalizerReport r1 = normlab::cremona_check(m1());
    CHECK(r1.is_normalizer);
    CHECK(r1.class_point == pt(c, 1, 0));
    CHECK(r1.delta == el(f, {2, 5}, {})); // det M1 = 5(x - 1)
    CHECK(r1.qM.d1 == Poly(F7(), {6, 1})); // q(M1) = (x - 1, y)
    CHECK(r1.qM.c.is_zero());
    CHECK(r1.qM.d2 == Poly(F7(), {1}));

    // M0 M1 = [[x^2 - x, -(x-2) y], [y, -(x^2 - x)]], det 5(x^2 - x)
    MatrixOverA prod = normlab::matrix_product(m0(), m1());
    CHECK(prod.a == el(f, {0, 6, 1}, {}));
    CHECK(prod.b == el(f, {}, {2, 6}));
    CHECK(prod.c == el(f, {}, {1}));
    CHECK(prod.d == el(f, {0, 1, 6}, {}));
    NormalizerReport rp = normlab::cremona_check(prod);
    CHECK(rp.is_normalizer);
    CHECK(rp.class_point == pt(c, 6, 0));
    CHECK(rp.delta == el(f, {0, 2, 5}, {}));
    CHECK(rp.v_infinity_delta == -4);
}

TEST_CASE("both x^3 - 3x variants pass with class (0,0)") {
    auto c = curve_m3();
    Poly f = c.f(F7());

    MatrixOverA v1 = yb_matrix(f, Poly(F7(), {0, 0, 6}), Poly::x(F7()));
    NormalizerReport r1 = normlab::cremona_check(v1);
    CHECK(r1.is_normalizer);
    CHECK(r1.class_point == pt(c, 0, 0));
    CHECK(r1.delta == el(f, {0, 3}, {})); // det = 3x

    // [[y, x^2], [x, y]]: delta = 4x and delta^{-1} M^2 has the frozen
    // entries [[4x^2 + 1, 4xy], [4y, 4x^2 + 1]] of determinant 1.
    RingElement y = coordring::ring_y(f);
    MatrixOverA v2{y, el(f, {0, 0, 1}, {}), coordring::ring_x(f), y};
    NormalizerReport r2 = normlab::cremona_check(v2);
    CHECK(r2.is_normalizer);
    CHECK(r2.m_squared_ok);
    CHECK(r2.class_point == pt(c, 0, 0));
    CHECK(r2.delta == el(f, {0, 4}, {}));

    MatrixOverA sq = normlab::matrix_product(v2, v2);
    CHECK(coordring::exact_div(sq.a, r2.delta) == el(f, {1, 0, 4}, {}));
    CHECK(coordring::exact_div(sq.b, r2.delta) == el(f, {}, {0, 4}));
    CHECK(coordring::exact_div(sq.c, r2.delta) == el(f, {}, {4}));
    CHECK(coordring::exact_div(sq.d, r2.delta) == el(f, {1, 0, 4}, {}));
}

TEST_CASE("unit-determinant matrices are recognized as group elements") {
    Poly f = curve_m1().f(F7());
    RingElement one = coordring::from_poly(Poly(F7(), {1}), f);
    RingElement zero = coordring::ring_zero(f);

    MatrixOverA id{one, zero, zero, one};
    NormalizerReport rid = normlab::cremona_check(id);
    CHECK(rid.is_normalizer);
    CHECK(rid.class_point.infinity);
    CHECK(coordring::ideal_equal(rid.qM, coordring::unit_ideal(f)));

    // random products of elementary matrices have unit determinant
    std::mt19937 rng(77001);
    for (int trial = 0; trial < 40; ++trial) {
        MatrixOverA M = id;
        std::uniform_int_distribution<int> kind(0, 2), len(2, 5);
        int steps = len(rng);
        for (int i = 0; i < steps; ++i) {
            RingElement p = rnd_element(f, rng, 2);
            switch (kind(rng)) {
            case 0: M = normlab::matrix_product(M, {one, p, zero, one}); break;
            case 1: M = normlab::matrix_product(M, {one, zero, p, one}); break;
            default:
                M = normlab::matrix_product(
                    M, {coordring::from_poly(Poly(F7(), {3}), f), zero, zero,
                        one});
            }
        }
        NormalizerReport r = normlab::cremona_check(M);
        CHECK(r.is_normalizer);
        CHECK(r.class_point.infinity);
        CHECK(coordring::ideal_equal(r.qM, coordring::unit_ideal(f)));
        CHECK(r.v_infinity_delta == 0);
    }
}

TEST_CASE("normalizer_class is a homomorphism to Quinn") {
    for (const auto& c : {curve_m1(), curve_m3()}) {
        ClassGroupData data = classtower::build_class_tower(c);
        std::vector<MatrixOverA> gens;
        for (const auto& k : data.quinn)
            gens.push_back(normlab::construct_normalizer(c, k));
        for (const auto& M : gens)
            for (const auto& N : gens) {
                CurvePoint lhs =
                    normlab::normalizer_class(data, normlab::matrix_product(M, N))
                        .p;
                CurvePoint rhs = curve::point_add(
                    c, normlab::normalizer_class(data, M).p,
                    normlab::normalizer_class(data, N).p);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("the closed-form constructor reproduces the displayed matrices") {
    auto cm1 = curve_m1();
    CHECK(normlab::construct_normalizer(cm1, pt(cm1, 0, 0)) == m0());
    CHECK(normlab::construct_normalizer(cm1, pt(cm1, 1, 0)) == m1());

    auto cm3 = curve_m3();
    Poly f3 = cm3.f(F7());
    CHECK(normlab::construct_normalizer(cm3, pt(cm3, 0, 0)) ==
          yb_matrix(f3, Poly(F7(), {0, 0, 6}), Poly::x(F7())));

    CHECK_THROWS_AS(normlab::construct_normalizer(cm1, pt(cm1, 4, 2)),
                    math_error);
}

TEST_CASE("constructor soundness over every small curve") {
    for (long p : {3L, 5L}) {
        const FieldSpec* F = FieldSpec::prime(p);
        for (long a = 0; a < p; ++a)
            for (long b = 0; b < p; ++b) {
                FieldElement fa(F, a), fb(F, b);
                if ((FieldElement(F, 4) * fa.pow(3) +
                     FieldElement(F, 27) * fb * fb)
                        .is_zero())
                    continue;
                WeierstrassCurve c(F, fa, fb);
                auto grp = curve::enumerate_points(c, F);
                for (const auto& t : curve::two_torsion(grp)) {
                    MatrixOverA M = normlab::construct_normalizer(c, t);
                    CHECK(normlab::cremona_check(M).class_point == t);
                }
            }
    }
}

TEST_CASE("scaling by a ring element changes nothing essential") {
    auto c = curve_m1();
    Poly f = c.f(F7());
    NormalizerReport base = normlab::cremona_check(m0());

    for (const auto& s : {el(f, {3}, {}), el(f, {0, 1}, {}), el(f, {}, {1}),
                          el(f, {0, 1}, {2})}) {
        MatrixOverA M = m0();
        MatrixOverA sM{s * M.a, s * M.b, s * M.c, s * M.d};
        NormalizerReport r = normlab::cremona_check(sM);
        CHECK(r.is_normalizer);
        CHECK(r.class_point == base.class_point);
        CHECK(r.delta == s * s * base.delta);
        CHECK(coordring::ideal_equal(
            r.qM, coordring::ideal_product(coordring::principal_ideal(s),
                                           base.qM)));
    }
}

TEST_CASE("matrices with odd determinant valuation always fail") {
    Poly f = curve_m1().f(F7());
    std::mt19937 rng(424201);
    int found = 0, trials = 0;
    while (found < 100 && trials < 20000) {
        ++trials;
        RingElement a = rnd_element(f, rng, 2), b = rnd_element(f, rng, 2);
        RingElement c = rnd_element(f, rng, 2), d = rnd_element(f, rng, 2);
        RingElement det = a * d - b * c;
        if (det.is_zero()) continue;
        if (coordring::infinity_valuation(det) % 2 == 0) continue;
        NormalizerReport r = normlab::cremona_check({a, b, c, d});
        CHECK_FALSE(r.parity_ok);
        CHECK_FALSE(r.is_normalizer);
        ++found;
    }
    CHECK(found == 100);

    // even-parity non-normalizers: diag(1, g) generates the unit ideal but
    // has non-unit determinant
    for (long r0 = 0; r0 < 7; ++r0) {
        RingElement one = coordring::from_poly(Poly(F7(), {1}), f);
        RingElement g = coordring::from_poly(Poly(F7(), {r0, 0, 1}), f);
        NormalizerReport r =
            normlab::cremona_check({one, coordring::ring_zero(f),
                                    coordring::ring_zero(f), g});
        CHECK(r.parity_ok);
        CHECK_FALSE(r.is_normalizer);
    }
}

TEST_CASE("non-normalizers raise on class extraction") {
    auto c = curve_m1();
    ClassGroupData data = classtower::build_class_tower(c);
    Poly f = c.f(F7());
    RingElement one = coordring::from_poly(Poly(F7(), {1}), f);
    MatrixOverA bad{one, coordring::ring_zero(f), coordring::ring_zero(f),
                    coordring::ring_x(f)};
    CHECK_THROWS_AS(normlab::normalizer_class(data, bad), math_error);

    auto c3 = curve_m3();
    ClassGroupData data3 = classtower::build_class_tower(c3);
    CHECK_THROWS_AS(normlab::normalizer_class(data3, m0()), math_error);
}

TEST_CASE("search family realizes exactly the 2-torsion classes") {
    for (const auto& c : {curve_m1(), curve_m3()}) {
        auto grp = curve::enumerate_points(c, c.fs);
        auto tors = curve::two_torsion(grp);
        std::vector<MatrixOverA> hits = normlab::search_normalizers(c);
        CHECK(!hits.empty());

        std::set<std::string> classes, expected;
        for (const auto& t : tors) expected.insert(curve::to_string(t));
        for (const auto& M : hits)
            classes.insert(
                curve::to_string(normlab::cremona_check(M).class_point));
        CHECK(classes == expected);

        for (const auto& t : tors) {
            if (t.infinity) continue;
            MatrixOverA want = normlab::construct_normalizer(c, t);
            CHECK(std::find(hits.begin(), hits.end(), want) != hits.end());
        }
    }
}

TEST_CASE("cusp multiplication theorem on random ideals") {
    for (const auto& c : {curve_m1(), curve_m3()}) {
        ClassGroupData data = classtower::build_class_tower(c);
        Poly f = c.f(F7());
        std::mt19937 rng(31007);
        for (const auto& t : data.quinn) {
            if (t.infinity) continue;
            MatrixOverA M = normlab::construct_normalizer(c, t);
            NormalizerReport rep = normlab::cremona_check(M);
            int done = 0;
            while (done < 60) {
                RingElement u = rnd_element(f, rng, 2);
                RingElement w = rnd_element(f, rng, 2);
                if (u.is_zero() && w.is_zero()) continue;
                CurvePoint before = coordring::class_of_ideal(
                    coordring::hnf_from_generators({u, w}));
                CurvePoint after = coordring::class_of_ideal(
                    coordring::hnf_from_generators(
                        {M.a * u + M.b * w, M.c * u + M.d * w}));
                CHECK(after == curve::point_add(c, rep.class_point, before));
                ++done;
            }
        }
    }
}

TEST_CASE("elliptic multiplication theorem through the tower") {
    auto c = curve_m1();
    ClassGroupData data = classtower::build_class_tower(c);
    Poly f = c.f(F7());
    const FieldSpec* twr = data.twr;
    gf::FieldElement s_fld =
        gf::FieldElement::from_coeffs(F7(), twr->nonsquare());

    // extension commutes with the class map
    std::mt19937 rng(515151);
    for (int i = 0; i < 30; ++i) {
        RingElement u = rnd_element(f, rng, 2);
        RingElement w = rnd_element(f, rng, 2);
        if (u.is_zero() && w.is_zero()) continue;
        IdealHNF I = coordring::hnf_from_generators({u, w});
        CHECK(coordring::class_of_ideal(coordring::extend_ideal(I, twr)) ==
              curve::embed_point(coordring::class_of_ideal(I), twr));
    }

    // J |-> q(M)~ J shifts the elliptic class by iota(class q(M))
    for (const auto& t : data.quinn) {
        MatrixOverA M = normlab::construct_normalizer(c, t);
        IdealHNF qext = coordring::extend_ideal(normlab::q_of_matrix(M), twr);
        CurvePoint shift = curve::embed_point(t, twr);

        std::uniform_int_distribution<long> cd(0, 6), dd(0, 2);
        int found = 0, trials = 0;
        while (found < 50 && trials < 20000) {
            ++trials;
            std::vector<long> cs(dd(rng) + 1);
            for (long& v : cs) v = cd(rng);
            RingElement s = coordring::from_poly(Poly(F7(), cs), f);
            Poly g = (s * s).a - Poly::constant(s_fld);
            auto fac = polyf::factor(g);
            if (fac.empty()) continue;
            Poly tt = Poly::constant(gf::FieldElement::one(F7()));
            for (const auto& [pf, e] : fac)
                for (int k = 0; k < e; ++k)
                    if (cd(rng) % 2) tt = tt * pf;
            if (tt.degree() < 1) continue;
            auto [J, cls] = classtower::elliptic_point_ideal(
                s, coordring::from_poly(tt, f));
            CurvePoint moved =
                coordring::class_of_ideal(coordring::ideal_product(qext, J));
            CHECK(moved == curve::point_add(c, shift, cls));
            CHECK(data.in_norm_kernel(moved));
            ++found;
        }
        CHECK(found == 50);
    }
}
