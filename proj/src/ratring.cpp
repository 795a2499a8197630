#include "quinn/ratring.hpp"

#include <algorithm>

#include "quinn/common.hpp"

namespace quinn::ratring {

namespace {

void require_same(const RatElement& x, const RatElement& y) {
    if (x.spec != y.spec)
        throw internal_error("rational elements from different rings");
}

} // namespace

RatRingSpec::RatRingSpec(const gf::FieldSpec* fs_, polyf::Poly pi_)
    : fs(fs_), delta(pi_.degree()), pi(std::move(pi_)) {
    if (pi.degree() < 1 || !pi.is_monic() || !polyf::is_irreducible(pi))
        throw math_error("pi must be monic irreducible of positive degree");
}

RatElement rat_element(const RatRingSpec& spec, polyf::Poly f, long m) {
    if (m < 0) throw math_error("negative pi-power");
    if (f.is_zero()) return {std::move(f), 0, &spec};
    while (m > 0) {
        auto [q, r] = polyf::divmod(f, spec.pi);
        if (!r.is_zero()) break;
        f = q;
        --m;
    }
    return {std::move(f), m, &spec};
}

RatElement operator+(const RatElement& x, const RatElement& y) {
    require_same(x, y);
    long m = std::max(x.m, y.m);
    polyf::Poly fx = x.f * polyf::pow(x.spec->pi, m - x.m);
    polyf::Poly fy = y.f * polyf::pow(y.spec->pi, m - y.m);
    return rat_element(*x.spec, fx + fy, m);
}

RatElement operator-(const RatElement& x, const RatElement& y) {
    require_same(x, y);
    long m = std::max(x.m, y.m);
    polyf::Poly fx = x.f * polyf::pow(x.spec->pi, m - x.m);
    polyf::Poly fy = y.f * polyf::pow(y.spec->pi, m - y.m);
    return rat_element(*x.spec, fx - fy, m);
}

RatElement operator*(const RatElement& x, const RatElement& y) {
    require_same(x, y);
    return rat_element(*x.spec, x.f * y.f, x.m + y.m);
}

bool operator==(const RatElement& x, const RatElement& y) {
    return x.spec == y.spec && x.m == y.m && x.f == y.f;
}

std::string to_string(const RatElement& e) {
    std::string num = polyf::to_string(e.f, "t");
    if (e.m == 0) return num;
    return "(" + num + ")/pi^" + std::to_string(e.m);
}

bool operator==(const Place& a, const Place& b) {
    if (a.at_t_infinity != b.at_t_infinity) return false;
    return a.at_t_infinity || a.p == b.p;
}

bool place_less(const Place& a, const Place& b) {
    if (a.at_t_infinity != b.at_t_infinity) return a.at_t_infinity;
    if (a.at_t_infinity) return false;
    return polyf::poly_less(a.p, b.p);
}

std::string to_string(const Place& a) {
    return a.at_t_infinity ? "inf_t" : polyf::to_string(a.p, "t");
}

FracIdealVal rat_valuations(const RatElement& e) {
    if (e.is_zero()) throw math_error("valuations of the zero element");
    FracIdealVal out;
    long inf = e.m * e.spec->delta - e.f.degree();
    if (inf != 0) out.v.push_back({Place{true, polyf::Poly(e.f.spec())}, inf});
    // the pi-part carries no A-place, so drop it before factoring
    polyf::Poly g = e.f;
    while (g.degree() >= e.spec->delta) {
        auto [q, r] = polyf::divmod(g, e.spec->pi);
        if (!r.is_zero()) break;
        g = q;
    }
    for (const auto& [p, mult] : polyf::factor(g)) {
        out.v.push_back({Place{false, p}, mult});
    }
    std::sort(out.v.begin(), out.v.end(), [](const auto& l, const auto& r) {
        return place_less(l.first, r.first);
    });
    return out;
}

bool in_A(const RatElement& e) {
    if (e.is_zero()) return true;
    return e.f.degree() <= e.spec->delta * e.m;
}

long rat_class(const FracIdealVal& I, const RatRingSpec& spec) {
    long sum = 0;
    for (const auto& [p, val] : I.v) sum += val * p.degree();
    return ((sum % spec.delta) + spec.delta) % spec.delta;
}

RatMatrix::RatMatrix(RatElement a_, RatElement b_, RatElement c_,
                     RatElement d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)),
      delta(a * d - b * c) {
    if (delta.is_zero()) throw math_error("matrix has zero determinant");
}

RatReport rat_cremona_check(const RatMatrix& M) {
    const RatRingSpec& spec = *M.a.spec;

    // Outside the union of the supports every entry and the determinant
    // have valuation 0, so the identity holds for free.
    std::vector<FracIdealVal> entry_vals;
    for (const RatElement* e : {&M.a, &M.b, &M.c, &M.d})
        if (!e->is_zero()) entry_vals.push_back(rat_valuations(*e));
    FracIdealVal delta_val = rat_valuations(M.delta);

    std::vector<Place> support;
    for (const auto& fv : entry_vals)
        for (const auto& [p, v] : fv.v) support.push_back(p);
    for (const auto& [p, v] : delta_val.v) support.push_back(p);
    std::sort(support.begin(), support.end(), place_less);
    support.erase(std::unique(support.begin(), support.end()), support.end());

    auto val_at = [](const FracIdealVal& fv, const Place& p) -> long {
        for (const auto& [q, v] : fv.v)
            if (q == p) return v;
        return 0;
    };

    RatReport rep;
    rep.is_normalizer = true;
    for (const Place& p : support) {
        long mn = val_at(entry_vals.front(), p);
        for (const auto& fv : entry_vals) mn = std::min(mn, val_at(fv, p));
        long vd = val_at(delta_val, p);
        bool ok = 2 * mn == vd;
        rep.ledger.push_back({p, vd, 2 * mn, ok});
        rep.is_normalizer = rep.is_normalizer && ok;
        if (mn != 0) rep.q_val.v.push_back({p, mn});
    }
    rep.class_residue = rat_class(rep.q_val, spec);
    return rep;
}

RatMatrix rational_g0(const RatRingSpec& spec) {
    if (spec.delta != 2)
        throw math_error("the displayed generator needs delta = 2");
    // pi = t^2 + sigma t + tau = t t' + tau with t' = t + sigma
    gf::FieldElement sigma = spec.pi.coeffs()[1];
    gf::FieldElement tau = spec.pi.coeffs()[0];
    polyf::Poly t = polyf::Poly::x(spec.fs);
    polyf::Poly tp = t + polyf::Poly::constant(sigma);
    return {rat_element(spec, polyf::Poly::constant(tau)),
            rat_element(spec, t), rat_element(spec, -tp),
            rat_element(spec, polyf::Poly(spec.fs, {1}))};
}

} // namespace quinn::ratring
