#include <doctest.h>

#include <algorithm>

#include "quinn/polyf.hpp"

using namespace quinn;
using gf::FieldElement;
using gf::FieldSpec;
using polyf::Poly;

namespace {
const FieldSpec* F7() { return FieldSpec::prime(7); }
Poly P(std::vector<long> coeffs) { return Poly(F7(), std::move(coeffs)); }
} // namespace

TEST_CASE("polynomial ring basics") {
    Poly f = P({6, 0, 0, 1}); // x^3 - 1
    Poly g = P({6, 1});       // x - 1
    CHECK(f.degree() == 3);
    CHECK(g.degree() == 1);
    CHECK(P({}).degree() == polyf::kZeroDegree);
    CHECK(f.is_monic());
    CHECK(polyf::to_string(f) == "x^3 + 6");
    CHECK(polyf::to_string(P({3})) == "3");
    CHECK(polyf::to_string(P({})) == "0");
    CHECK(polyf::to_string(P({0, 6, 1}), "t") == "t^2 + 6*t");

    auto [q, r] = polyf::divmod(f, g);
    CHECK(r.is_zero());
    CHECK(q == P({1, 1, 1}));
    CHECK(q * g == f);
    CHECK(polyf::exact_div(f, g) == q);
    CHECK_THROWS_AS(polyf::exact_div(g, f), math_error);

    CHECK(polyf::eval(f, FieldElement(F7(), 2)) == FieldElement(F7(), 0));
    CHECK(polyf::eval(f, FieldElement(F7(), 3)) == FieldElement(F7(), 5));
    CHECK(polyf::derivative(f) == P({0, 0, 3}));
}

TEST_CASE("gcd and xgcd are monic and correct") {
    Poly a = P({6, 0, 0, 1});          // x^3 - 1 = (x-1)(x-2)(x-4)
    Poly b = P({2, 4, 1});             // (x-1)(x-2) = x^2 + 4x + 2
    CHECK(polyf::gcd(a, b) == b);
    Poly c = P({5, 1});                // x + 5 = x - 2
    CHECK(polyf::gcd(b, c) == c);
    CHECK(polyf::gcd(P({3}), a) == P({1}));

    auto r = polyf::xgcd(a, P({4, 1})); // gcd with x + 4 (coprime to a)
    CHECK(r.g == P({1}));
    CHECK(r.u * a + r.v * P({4, 1}) == P({1}));
}

TEST_CASE("factoring over F_7") {
    Poly f = P({0, 6, 0, 1}); // x^3 - x = x(x-1)(x+1)
    auto fac = polyf::factor(f);
    REQUIRE(fac.size() == 3);
    CHECK(fac[0] == std::pair{P({0, 1}), 1});
    CHECK(fac[1] == std::pair{P({1, 1}), 1});
    CHECK(fac[2] == std::pair{P({6, 1}), 1});

    Poly g = P({4, 0, 6, 1}); // x^3 + 6x^2 + 4
    auto gf_ = polyf::factor(g);
    Poly prod = Poly::constant(g.leading());
    for (const auto& [p, e] : gf_) prod = prod * polyf::pow(p, e);
    CHECK(prod == g);

    // non-monic: leading coefficient preserved through factor product
    Poly h = FieldElement(F7(), 3) * f;
    auto hf = polyf::factor(h);
    Poly hp = Poly::constant(h.leading());
    for (const auto& [p, e] : hf) hp = hp * polyf::pow(p, e);
    CHECK(hp == h);

    // multiplicities: x^2 (x - 1)
    auto mf = polyf::factor(P({0, 1}) * P({0, 1}) * P({6, 1}));
    REQUIRE(mf.size() == 2);
    CHECK(mf[0] == std::pair{P({0, 1}), 2});
    CHECK(mf[1] == std::pair{P({6, 1}), 1});

    CHECK(polyf::factor(P({5})).empty());
    CHECK(polyf::is_irreducible(P({1, 0, 1})));       // x^2 + 1 over F_7
    CHECK_FALSE(polyf::is_irreducible(P({6, 0, 1}))); // x^2 - 1
    CHECK(polyf::is_irreducible(P({2, 6, 0, 1})));    // x^3 - x + 2
}

TEST_CASE("monic irreducible enumeration") {
    auto irr1 = polyf::monic_irreducibles_up_to(F7(), 1);
    CHECK(irr1.size() == 7);
    auto irr2 = polyf::monic_irreducibles_up_to(F7(), 2);
    // 7 linear + (49 - 7)/2 = 21 quadratic
    CHECK(irr2.size() == 28);
    for (const auto& p : irr2) {
        CHECK(p.is_monic());
        CHECK(polyf::is_irreducible(p));
    }
    CHECK(std::is_sorted(irr2.begin(), irr2.end(), polyf::poly_less));

    const FieldSpec* F3 = FieldSpec::prime(3);
    auto irr3 = polyf::monic_irreducibles_up_to(F3, 3);
    // 3 linear + 3 quadratic + (27 - 3)/3 = 8 cubic
    CHECK(irr3.size() == 14);
}

TEST_CASE("frobenius on coefficients over the tower") {
    const FieldSpec* F49 = F7()->tower();
    FieldElement i = FieldElement::generator(F49);
    Poly f = Poly::from_coeffs(F49, {i, FieldElement::one(F49)}); // x + i
    Poly fbar = polyf::frobenius_coeffs(f);
    CHECK(fbar == Poly::from_coeffs(F49, {-i, FieldElement::one(F49)}));
    CHECK(polyf::frobenius_coeffs(fbar) == f);
    CHECK(f * fbar == polyf::embed(P({1, 0, 1}), F49)); // x^2 + 1
}

TEST_CASE("embed base polynomials into the tower") {
    const FieldSpec* F49 = F7()->tower();
    Poly f = P({3, 1, 2});
    Poly ft = polyf::embed(f, F49);
    CHECK(ft.spec() == F49);
    CHECK(ft.degree() == 2);
    CHECK(polyf::frobenius_coeffs(ft) == ft);
}
