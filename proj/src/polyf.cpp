#include "quinn/polyf.hpp"

#include <algorithm>

namespace quinn::polyf {

namespace {

void strip(std::vector<gf::FieldElement>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void check_same_spec(const Poly& a, const Poly& b) {
    if (a.spec() != b.spec())
        throw internal_error("mixed field specs in polynomial arithmetic");
}

} // namespace

Poly::Poly(const gf::FieldSpec* fs, const std::vector<long>& ints) : fs_(fs) {
    c_.reserve(ints.size());
    for (long v : ints) c_.emplace_back(fs, v);
    strip(c_);
}

Poly Poly::from_coeffs(const gf::FieldSpec* fs,
                       std::vector<gf::FieldElement> c) {
    Poly f(fs);
    f.c_ = std::move(c);
    strip(f.c_);
    return f;
}

Poly Poly::constant(const gf::FieldElement& v) {
    return from_coeffs(v.spec(), {v});
}

Poly Poly::x(const gf::FieldSpec* fs) { return Poly(fs, {0, 1}); }

gf::FieldElement Poly::coeff(int k) const {
    if (k < 0 || k >= (int)c_.size()) return gf::FieldElement::zero(fs_);
    return c_[(size_t)k];
}

gf::FieldElement Poly::leading() const {
    if (is_zero()) throw math_error("leading coefficient of zero polynomial");
    return c_.back();
}

bool Poly::is_monic() const {
    return !is_zero() && c_.back() == gf::FieldElement::one(fs_);
}

Poly operator+(const Poly& a, const Poly& b) {
    check_same_spec(a, b);
    std::vector<gf::FieldElement> c(
        (size_t)std::max(a.c_.size(), b.c_.size()),
        gf::FieldElement::zero(a.fs_));
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff((int)i) + b.coeff((int)i);
    return Poly::from_coeffs(a.fs_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    std::vector<gf::FieldElement> c = c_;
    for (auto& v : c) v = -v;
    return from_coeffs(fs_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same_spec(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.fs_);
    std::vector<gf::FieldElement> c(a.c_.size() + b.c_.size() - 1,
                                    gf::FieldElement::zero(a.fs_));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly::from_coeffs(a.fs_, std::move(c));
}

Poly operator*(const gf::FieldElement& c, const Poly& f) {
    return Poly::constant(c) * f;
}

bool operator==(const Poly& a, const Poly& b) {
    check_same_spec(a, b);
    return a.c_ == b.c_;
}

bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    check_same_spec(f, g);
    if (g.is_zero()) throw math_error("polynomial division by zero");
    const gf::FieldSpec* fs = f.spec();
    if (f.degree() < g.degree()) return {Poly(fs), f};
    gf::FieldElement lginv = g.leading().inv();
    std::vector<gf::FieldElement> rem(f.coeffs());
    std::vector<gf::FieldElement> quot(
        (size_t)(f.degree() - g.degree() + 1), gf::FieldElement::zero(fs));
    for (int d = f.degree(); d >= g.degree(); --d) {
        gf::FieldElement c = rem[(size_t)d] * lginv;
        if (c.is_zero()) continue;
        quot[(size_t)(d - g.degree())] = c;
        for (int k = 0; k <= g.degree(); ++k)
            rem[(size_t)(d - g.degree() + k)] =
                rem[(size_t)(d - g.degree() + k)] - c * g.coeff(k);
    }
    return {Poly::from_coeffs(fs, std::move(quot)),
            Poly::from_coeffs(fs, std::move(rem))};
}

Poly gcd(const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : monic(a);
}

XgcdResult xgcd(const Poly& f, const Poly& h) {
    const gf::FieldSpec* fs = f.spec();
    Poly r0 = f, r1 = h;
    Poly u0 = Poly(fs, {1}), u1 = Poly(fs);
    Poly v0 = Poly(fs), v1 = Poly(fs, {1});
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly nu = u0 - q * u1, nv = v0 - q * v1;
        u0 = u1;
        u1 = nu;
        v0 = v1;
        v1 = nv;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    gf::FieldElement linv = r0.leading().inv();
    return {linv * r0, linv * u0, linv * v0};
}

Poly exact_div(const Poly& f, const Poly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw math_error("inexact polynomial division");
    return q;
}

Poly monic(const Poly& f) {
    if (f.is_zero()) return f;
    return f.leading().inv() * f;
}

Poly pow(const Poly& f, long e) {
    if (e < 0) throw internal_error("negative polynomial power");
    Poly r(f.spec(), {1}), b = f;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

gf::FieldElement eval(const Poly& f, const gf::FieldElement& at) {
    gf::FieldElement acc = gf::FieldElement::zero(at.spec());
    for (int d = f.degree(); d >= 0; --d) acc = acc * at + f.coeff(d);
    return acc;
}

Poly derivative(const Poly& f) {
    std::vector<gf::FieldElement> c;
    for (int k = 1; k <= f.degree(); ++k)
        c.push_back(gf::FieldElement(f.spec(), k) * f.coeff(k));
    return Poly::from_coeffs(f.spec(), std::move(c));
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        long ia = a.coeff(k).index(), ib = b.coeff(k).index();
        if (ia != ib) return ia < ib;
    }
    return false;
}

std::vector<Poly> monic_irreducibles_up_to(const gf::FieldSpec* fs, int d) {
    if (d < 1) throw math_error("irreducible enumeration needs degree >= 1");
    double bound = 1;
    for (int k = 0; k < d; ++k) {
        bound *= (double)fs->size();
        if (bound > (double)enumeration_cap())
            throw math_error("q^d exceeds the enumeration cap");
    }
    std::vector<Poly> out;
    for (int deg = 1; deg <= d; ++deg) {
        long count = 1;
        for (int k = 0; k < deg; ++k) count *= fs->size();
        std::vector<Poly> level;
        for (long idx = 0; idx < count; ++idx) {
            // digits of idx give the non-leading coefficients
            std::vector<gf::FieldElement> c;
            long rest = idx;
            for (int k = 0; k < deg; ++k) {
                c.push_back(
                    gf::FieldElement::from_index(fs, rest % fs->size()));
                rest /= fs->size();
            }
            c.push_back(gf::FieldElement::one(fs));
            Poly f = Poly::from_coeffs(fs, std::move(c));
            // trial division by the lower-degree irreducibles already found
            bool irreducible = true;
            for (const Poly& g : out) {
                if (2 * g.degree() > deg) break;
                if (divmod(f, g).second.is_zero()) {
                    irreducible = false;
                    break;
                }
            }
            if (irreducible) level.push_back(std::move(f));
        }
        std::sort(level.begin(), level.end(), poly_less);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
    if (f.is_zero()) throw math_error("factoring the zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() == 0) return out;
    Poly rem = monic(f);
    std::vector<Poly> irred = monic_irreducibles_up_to(
        f.spec(), std::max(1, f.degree() / 2));
    for (const Poly& g : irred) {
        if (g.degree() > rem.degree()) break;
        int mult = 0;
        while (true) {
            auto [q, r] = divmod(rem, g);
            if (!r.is_zero()) break;
            rem = q;
            ++mult;
        }
        if (mult > 0) out.emplace_back(g, mult);
    }
    // anything left is irreducible: a composite leftover would have had a
    // factor of degree <= deg(f)/2, already removed above
    if (rem.degree() >= 1) out.emplace_back(rem, 1);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                  return poly_less(a.first, b.first);
              });
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor(f);
    return fac.size() == 1 && fac[0].second == 1;
}

Poly embed(const Poly& f, const gf::FieldSpec* into) {
    std::vector<gf::FieldElement> c;
    c.reserve((size_t)(f.degree() + 1));
    for (int k = 0; k <= f.degree(); ++k)
        c.push_back(gf::embed(f.coeff(k), into));
    return Poly::from_coeffs(into, std::move(c));
}

Poly frobenius_coeffs(const Poly& f) {
    std::vector<gf::FieldElement> c;
    c.reserve((size_t)(f.degree() + 1));
    for (int k = 0; k <= f.degree(); ++k)
        c.push_back(gf::frobenius(f.coeff(k)));
    return Poly::from_coeffs(f.spec(), std::move(c));
}

std::string to_string(const Poly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        gf::FieldElement c = f.coeff(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = gf::to_string(c);
        bool unit_coeff = (cs == "1");
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        if (k == 0) {
            out += cs;
        } else {
            std::string xs = (k == 1) ? var : var + "^" + std::to_string(k);
            out += unit_coeff ? xs : cs + "*" + xs;
        }
    }
    return out;
}

} // namespace quinn::polyf
