#include "quinn/normlab.hpp"

#include "quinn/common.hpp"

namespace quinn::normlab {

namespace {

using coordring::RingElement;

// e / d without exceptions: e * conj(d) must be divisible, coefficientwise
// in F_q[x], by the norm of d.
bool try_exact_div(const RingElement& e, const RingElement& d,
                   RingElement& out) {
    polyf::Poly n = coordring::norm(d);
    if (n.is_zero()) return false;
    RingElement num = e * coordring::conj(d);
    auto [qa, ra] = polyf::divmod(num.a, n);
    auto [qb, rb] = polyf::divmod(num.b, n);
    if (!ra.is_zero() || !rb.is_zero()) return false;
    out = RingElement(qa, qb, e.f);
    return true;
}

RingElement ring_one(const polyf::Poly& f) {
    return coordring::from_poly(polyf::Poly(f.spec(), {1}), f);
}

} // namespace

MatrixOverA::MatrixOverA(coordring::RingElement a_, coordring::RingElement b_,
                         coordring::RingElement c_, coordring::RingElement d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)),
      delta(a * d - b * c) {
    if (delta.is_zero()) throw math_error("matrix has zero determinant");
}

MatrixOverA matrix_product(const MatrixOverA& M, const MatrixOverA& N) {
    return {M.a * N.a + M.b * N.c, M.a * N.b + M.b * N.d,
            M.c * N.a + M.d * N.c, M.c * N.b + M.d * N.d};
}

bool operator==(const MatrixOverA& M, const MatrixOverA& N) {
    return M.a == N.a && M.b == N.b && M.c == N.c && M.d == N.d;
}

std::string to_string(const MatrixOverA& M) {
    return "[[" + coordring::to_string(M.a) + ", " + coordring::to_string(M.b) +
           "], [" + coordring::to_string(M.c) + ", " + coordring::to_string(M.d) +
           "]]";
}

coordring::IdealHNF q_of_matrix(const MatrixOverA& M) {
    return coordring::hnf_from_generators({M.a, M.b, M.c, M.d});
}

NormalizerReport cremona_check(const MatrixOverA& M) {
    coordring::IdealHNF q = q_of_matrix(M);
    coordring::IdealHNF dI = coordring::principal_ideal(M.delta);
    bool is_norm = coordring::ideal_equal(coordring::ideal_product(q, q), dI);

    // A zero row or column would force delta = 0, so each generating pair
    // below contains a nonzero entry.
    bool rc = true;
    for (const auto& pair :
         {std::pair{M.a, M.b}, {M.a, M.c}, {M.b, M.d}, {M.c, M.d}}) {
        coordring::IdealHNF side =
            coordring::hnf_from_generators({pair.first, pair.second});
        rc = rc && coordring::ideal_equal(side, q);
    }

    MatrixOverA M2 = matrix_product(M, M);
    RingElement qa = M.a, qb = M.a, qc = M.a, qd = M.a;
    bool msq = try_exact_div(M2.a, M.delta, qa) &&
               try_exact_div(M2.b, M.delta, qb) &&
               try_exact_div(M2.c, M.delta, qc) &&
               try_exact_div(M2.d, M.delta, qd);
    if (msq) msq = (qa * qd - qb * qc) == ring_one(M.f());

    long v = coordring::infinity_valuation(M.delta);
    bool parity = (v % 2) == 0;

    if (is_norm && !(rc && msq && parity))
        throw internal_error("normalizer failed a side condition of the criterion");

    return {is_norm, q, coordring::class_of_ideal(q), M.delta,
            rc,      msq, v, parity};
}

actions::QuinnElement normalizer_class(const classtower::ClassGroupData& data,
                                       const MatrixOverA& M) {
    if (data.curve.f(data.base) != M.f())
        throw math_error("matrix ring does not match the curve");
    NormalizerReport rep = cremona_check(M);
    if (!rep.is_normalizer)
        throw math_error("matrix does not normalize GL_2(A)");
    return actions::quinn_element(data, rep.class_point);
}

MatrixOverA construct_normalizer(const curve::WeierstrassCurve& c,
                                 const curve::CurvePoint& target) {
    polyf::Poly f = c.f(c.fs);
    if (target.infinity) {
        RingElement one = ring_one(f);
        return {one, coordring::ring_zero(f), coordring::ring_zero(f), one};
    }
    if (target.fs != c.fs || target != curve::point_neg(target) ||
        !polyf::eval(f, target.x).is_zero())
        throw math_error("target is not a 2-torsion point of the curve");

    // f(r) = 0, h = f/(x - r): then det = -f'(r)(x - r), q(M) = (x - r, y)
    // and M^2 = -det(M) I.
    polyf::Poly xr = polyf::Poly::x(c.fs) - polyf::Poly::constant(target.x);
    polyf::Poly h = polyf::exact_div(f, xr);
    gf::FieldElement fp = polyf::eval(polyf::derivative(f), target.x);
    polyf::Poly b = polyf::Poly::constant(fp) - h;

    RingElement y = coordring::ring_y(f);
    MatrixOverA M{y, coordring::from_poly(b, f), coordring::from_poly(xr, f),
                  coordring::ring_zero(f) - y};
    NormalizerReport rep = cremona_check(M);
    if (!rep.is_normalizer || rep.class_point != target)
        throw internal_error("constructed matrix failed re-verification");
    return M;
}

std::vector<MatrixOverA> search_normalizers(const curve::WeierstrassCurve& c) {
    polyf::Poly f = c.f(c.fs);
    RingElement y = coordring::ring_y(f);
    RingElement neg_y = coordring::ring_zero(f) - y;
    std::vector<MatrixOverA> hits;
    long q = c.fs->size();
    for (long r = 0; r < q; ++r) {
        polyf::Poly xr = polyf::Poly::x(c.fs) - polyf::Poly(c.fs, {r});
        for (long b0 = 0; b0 < q; ++b0)
            for (long b1 = 0; b1 < q; ++b1)
                for (long b2 = 0; b2 < q; ++b2) {
                    polyf::Poly b(c.fs, {b0, b1, b2});
                    RingElement bb = coordring::from_poly(b, f);
                    RingElement cc = coordring::from_poly(xr, f);
                    if ((y * neg_y - bb * cc).is_zero()) continue;
                    MatrixOverA M{y, bb, cc, neg_y};
                    if (cremona_check(M).is_normalizer) hits.push_back(M);
                }
    }
    return hits;
}

} // namespace quinn::normlab
