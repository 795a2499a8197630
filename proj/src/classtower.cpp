#include "quinn/classtower.hpp"

#include <algorithm>

namespace quinn::classtower {

bool ClassGroupData::in_norm_kernel(const curve::CurvePoint& p) const {
    return std::any_of(norm_kernel.begin(), norm_kernel.end(),
                       [&](const curve::CurvePoint& q) { return q == p; });
}

ClassGroupData build_class_tower(const curve::WeierstrassCurve& c) {
    const gf::FieldSpec* base = c.fs;
    const gf::FieldSpec* twr = base->tower();
    curve::PointGroup bg = curve::enumerate_points(c, base);
    curve::PointGroup tg = curve::enumerate_points(c, twr);

    std::vector<curve::CurvePoint> quinn = curve::two_torsion(bg);
    std::vector<curve::CurvePoint> kernel;
    for (const curve::CurvePoint& p : tg.pts)
        if (curve::frobenius_point(p) == curve::point_neg(p)) kernel.push_back(p);

    // kernel is a subgroup: closed under negation and addition
    for (const curve::CurvePoint& p : kernel) {
        if (std::none_of(kernel.begin(), kernel.end(),
                         [&](const curve::CurvePoint& q) {
                             return q == curve::point_neg(p);
                         }))
            throw internal_error("norm kernel not closed under negation");
        for (const curve::CurvePoint& q : kernel) {
            curve::CurvePoint s = curve::point_add(c, p, q);
            if (std::none_of(kernel.begin(), kernel.end(),
                             [&](const curve::CurvePoint& r) { return r == s; }))
                throw internal_error("norm kernel not closed under addition");
        }
    }
    // embedded base 2-torsion sits inside the kernel
    for (const curve::CurvePoint& p : quinn) {
        curve::CurvePoint pe = curve::embed_point(p, twr);
        if (std::none_of(kernel.begin(), kernel.end(),
                         [&](const curve::CurvePoint& q) { return q == pe; }))
            throw internal_error("embedded 2-torsion escapes the norm kernel");
    }
    if (kernel.size() % quinn.size() != 0)
        throw internal_error("kernel size not a multiple of |Cl(A)_2|");
    long n_E = (long)(kernel.size() / quinn.size());
    return ClassGroupData{c,     base,   twr, std::move(bg),
                          std::move(tg), std::move(quinn),
                          std::move(kernel), n_E};
}

curve::CurvePoint norm_point(const curve::WeierstrassCurve& c,
                             const curve::CurvePoint& p) {
    if (p.fs != c.fs->tower())
        throw math_error("norm expects a point over the tower");
    curve::CurvePoint s = curve::point_add(c, p, curve::frobenius_point(p));
    if (!curve::point_in_base(s))
        throw internal_error("norm left the base field");
    return curve::project_point(s);
}

bool check_two_torsion_iso(const ClassGroupData& data) {
    std::vector<curve::CurvePoint> kt2;
    for (const curve::CurvePoint& p : data.norm_kernel)
        if (curve::point_double(data.curve, p).infinity) kt2.push_back(p);
    std::vector<curve::CurvePoint> qt;
    for (const curve::CurvePoint& p : data.quinn)
        qt.push_back(curve::embed_point(p, data.twr));
    auto lt = [](const curve::CurvePoint& a, const curve::CurvePoint& b) {
        return curve::point_less(a, b);
    };
    std::sort(kt2.begin(), kt2.end(), lt);
    std::sort(qt.begin(), qt.end(), lt);
    return kt2 == qt;
}

std::pair<coordring::IdealHNF, curve::CurvePoint>
elliptic_point_ideal(const coordring::RingElement& s,
                     const coordring::RingElement& t) {
    const gf::FieldSpec* base = s.spec();
    if (base->base() != nullptr)
        throw math_error("s and t must live over the base ring");
    if (t.is_zero()) throw math_error("t must be nonzero");
    const gf::FieldSpec* twr = base->tower();

    // eps^2 = s_fld in F_q, so (eps + s)(epsbar + s) = s^2 - s_fld
    gf::FieldElement s_fld =
        gf::FieldElement::from_coeffs(base, twr->nonsquare());
    coordring::RingElement prod =
        s * s - coordring::from_poly(polyf::Poly::constant(s_fld), s.f);
    coordring::exact_div(prod, t); // divisibility precondition, math_error

    polyf::Poly ft = polyf::embed(s.f, twr);
    polyf::Poly eps = polyf::Poly::constant(gf::FieldElement::generator(twr));
    coordring::RingElement g1(polyf::embed(s.a, twr) + eps,
                              polyf::embed(s.b, twr), ft);
    coordring::RingElement g2(polyf::embed(t.a, twr), polyf::embed(t.b, twr),
                              ft);
    coordring::IdealHNF J = coordring::hnf_from_generators({g1, g2});
    curve::CurvePoint cls = coordring::class_of_ideal(J);

    if (curve::frobenius_point(cls) != curve::point_neg(cls))
        throw internal_error("elliptic point ideal class escapes ker N");
    return {std::move(J), cls};
}

curve::CurvePoint cusp_ideal(const coordring::RingElement& x_el,
                             const coordring::RingElement& y_el) {
    return coordring::class_of_ideal(
        coordring::hnf_from_generators({x_el, y_el}));
}

} // namespace quinn::classtower
