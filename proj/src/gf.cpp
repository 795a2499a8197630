#include "quinn/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace quinn::gf {

namespace {

long mod_norm(long v, long p) {
    v %= p;
    return v < 0 ? v + p : v;
}

long mod_pow(long b, long e, long p) {
    long r = 1;
    b = mod_norm(b, p);
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

using V = std::vector<long>;

// Coefficient-vector arithmetic, recursing through the tower levels: a
// length-2h vector is (low, high) over the subfield, with T^2 = s.
V vadd(long p, const V& a, const V& b) {
    V r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

V vsub(long p, const V& a, const V& b) {
    V r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod_norm(a[i] - b[i], p);
    return r;
}

V vneg(long p, const V& a) {
    V r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod_norm(-a[i], p);
    return r;
}

bool vzero(const V& a) {
    return std::all_of(a.begin(), a.end(), [](long c) { return c == 0; });
}

V lo_half(const V& a) { return V(a.begin(), a.begin() + a.size() / 2); }
V hi_half(const V& a) { return V(a.begin() + a.size() / 2, a.end()); }

V vcat(const V& a, const V& b) {
    V r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

V vmul(const FieldSpec* fs, const V& a, const V& b) {
    long p = fs->p();
    if (fs->n() == 1) return {a[0] * b[0] % p};
    const FieldSpec* base = fs->base();
    V a0 = lo_half(a), a1 = hi_half(a), b0 = lo_half(b), b1 = hi_half(b);
    V lo = vadd(p, vmul(base, a0, b0),
                vmul(base, vmul(base, a1, b1), fs->nonsquare()));
    V hi = vadd(p, vmul(base, a0, b1), vmul(base, a1, b0));
    return vcat(lo, hi);
}

V vinv(const FieldSpec* fs, const V& a) {
    long p = fs->p();
    if (vzero(a)) throw math_error("division by zero in " + fs->name());
    if (fs->n() == 1) return {mod_pow(a[0], p - 2, p)};
    // (a0 + a1 T)^-1 = (a0 - a1 T) / (a0^2 - a1^2 s)
    const FieldSpec* base = fs->base();
    V a0 = lo_half(a), a1 = hi_half(a);
    V den = vsub(p, vmul(base, a0, a0),
                 vmul(base, vmul(base, a1, a1), fs->nonsquare()));
    V deninv = vinv(base, den);
    return vcat(vmul(base, a0, deninv), vmul(base, vneg(p, a1), deninv));
}

struct Registry {
    std::mutex mu;
    std::map<long, std::unique_ptr<FieldSpec>> primes;
    std::map<const FieldSpec*, std::unique_ptr<FieldSpec>> towers;
};

Registry& registry() {
    static Registry* r = new Registry; // immortal, specs never die
    return *r;
}

// --- small F_p polynomial helpers for modulus verification -----------------

// Divides f by g (both low-first, g nonzero) over F_p; returns remainder.
V fp_poly_rem(V f, const V& g, long p) {
    auto deg = [](const V& v) {
        int d = (int)v.size() - 1;
        while (d >= 0 && v[(size_t)d] == 0) --d;
        return d;
    };
    int dg = deg(g);
    long lginv = mod_pow(g[(size_t)dg], p - 2, p);
    for (int df = deg(f); df >= dg; df = deg(f)) {
        long c = f[(size_t)df] * lginv % p;
        for (int k = 0; k <= dg; ++k)
            f[(size_t)(df - dg + k)] =
                mod_norm(f[(size_t)(df - dg + k)] - c * g[(size_t)k], p);
    }
    return f;
}

bool fp_poly_is_zero(const V& v) { return vzero(v); }

void verify_modulus_irreducible(const V& mod, long p, int n) {
    // No roots in F_p.
    for (long c = 0; c < p; ++c) {
        long acc = 0, cp = 1;
        for (long coef : mod) {
            acc = (acc + coef * cp) % p;
            cp = cp * c % p;
        }
        if (acc == 0)
            throw internal_error("tower modulus has a root in the prime field");
    }
    if (n <= 2) return;
    // Degree 4: also no quadratic factors; trial-divide by every monic
    // irreducible quadratic over F_p.
    for (long c1 = 0; c1 < p; ++c1)
        for (long c0 = 0; c0 < p; ++c0) {
            V q = {c0, c1, 1};
            bool has_root = false;
            for (long c = 0; c < p && !has_root; ++c)
                has_root = (c0 + c1 * c + c * c) % p == 0;
            if (has_root) continue;
            if (fp_poly_is_zero(fp_poly_rem(mod, q, p)))
                throw internal_error("tower modulus has a quadratic factor");
        }
}

} // namespace

const FieldSpec* FieldSpec::prime(long p) {
    if (!is_odd_prime(p))
        throw math_error("field characteristic must be an odd prime, got " +
                         std::to_string(p));
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.primes.find(p);
    if (it != r.primes.end()) return it->second.get();
    auto sp = std::unique_ptr<FieldSpec>(new FieldSpec);
    sp->p_ = p;
    sp->n_ = 1;
    sp->size_ = p;
    const FieldSpec* out = sp.get();
    r.primes.emplace(p, std::move(sp));
    return out;
}

const FieldSpec* FieldSpec::tower() const {
    if (n_ > 2)
        throw math_error("towers beyond F_{p^4} are not supported");
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.towers.find(this);
    if (it != r.towers.end()) return it->second.get();

    // First non-square in the signed order 1, -1, 2, -2, ... of this field.
    V s;
    {
        std::set<long> seen;
        bool found = false;
        for (long k = 1; k < size_ && !found; ++k) {
            FieldElement e = FieldElement::from_index(this, k);
            for (const FieldElement& cand : {e, -e}) {
                if (!seen.insert(cand.index()).second) continue;
                if (!is_square(cand)) {
                    s = cand.coeffs();
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw internal_error("no non-square found in " + name());
    }

    // Absolute modulus over F_p of the new generator.
    V mod;
    if (n_ == 1) {
        mod = {mod_norm(-s[0], p_), 0, 1}; // T^2 - s
    } else {
        // s = u + v T1 with T1^2 = s0; minimal polynomial of sqrt(s) over F_p
        // is U^4 - 2u U^2 + (u^2 - v^2 s0).
        long u = s[0], v = s[1], s0 = nonsquare()[0];
        long c0 = mod_norm(u * u - (v * v % p_) * s0, p_);
        mod = {c0, 0, mod_norm(-2 * u, p_), 0, 1};
    }
    verify_modulus_irreducible(mod, p_, 2 * n_);

    auto sp = std::unique_ptr<FieldSpec>(new FieldSpec);
    sp->p_ = p_;
    sp->n_ = 2 * n_;
    sp->size_ = size_ * size_;
    sp->base_ = this;
    sp->s_ = s;
    sp->mod_ = mod;
    const FieldSpec* out = sp.get();
    r.towers.emplace(this, std::move(sp));
    return out;
}

FieldElement::FieldElement(const FieldSpec* fs, long value) : fs_(fs) {
    c_.assign((size_t)fs->n(), 0);
    c_[0] = mod_norm(value, fs->p());
}

FieldElement FieldElement::from_coeffs(const FieldSpec* fs, V c) {
    if ((int)c.size() != fs->n())
        throw internal_error("coefficient vector length mismatch");
    FieldElement e;
    e.fs_ = fs;
    e.c_ = std::move(c);
    for (long& v : e.c_) v = mod_norm(v, fs->p());
    return e;
}

FieldElement FieldElement::generator(const FieldSpec* fs) {
    if (!fs->base())
        throw math_error("prime field has no adjoined generator");
    V c((size_t)fs->n(), 0);
    c[(size_t)fs->n() / 2] = 1;
    return from_coeffs(fs, std::move(c));
}

bool FieldElement::is_zero() const { return vzero(c_); }

long FieldElement::index() const {
    long idx = 0, w = 1;
    for (long c : c_) {
        idx += c * w;
        w *= fs_->p();
    }
    return idx;
}

FieldElement FieldElement::from_index(const FieldSpec* fs, long idx) {
    if (idx < 0 || idx >= fs->size())
        throw internal_error("field element index out of range");
    V c((size_t)fs->n());
    for (int i = 0; i < fs->n(); ++i) {
        c[(size_t)i] = idx % fs->p();
        idx /= fs->p();
    }
    return from_coeffs(fs, std::move(c));
}

namespace {
void check_same_spec(const FieldElement& a, const FieldElement& b) {
    if (a.spec() != b.spec())
        throw internal_error("mixed field specs in element arithmetic");
}
} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same_spec(a, b);
    return FieldElement::from_coeffs(a.spec(),
                                     vadd(a.spec()->p(), a.coeffs(), b.coeffs()));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same_spec(a, b);
    return FieldElement::from_coeffs(a.spec(),
                                     vsub(a.spec()->p(), a.coeffs(), b.coeffs()));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same_spec(a, b);
    return FieldElement::from_coeffs(a.spec(),
                                     vmul(a.spec(), a.coeffs(), b.coeffs()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inv();
}

FieldElement FieldElement::operator-() const {
    return from_coeffs(fs_, vneg(fs_->p(), c_));
}

FieldElement FieldElement::inv() const {
    return from_coeffs(fs_, vinv(fs_, c_));
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FieldElement r = one(fs_), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    check_same_spec(a, b);
    return a.coeffs() == b.coeffs();
}

bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
}

bool operator<(const FieldElement& a, const FieldElement& b) {
    check_same_spec(a, b);
    return a.index() < b.index();
}

FieldElement frobenius(const FieldElement& a) {
    const FieldSpec* fs = a.spec();
    if (!fs->base())
        throw math_error("frobenius conjugation needs a tower element");
    // x -> x^q fixes the base field and sends T to -T, because
    // T^q = T (T^2)^((q-1)/2) = T s^((q-1)/2) = -T for the non-square s.
    long p = fs->p();
    V lo = lo_half(a.coeffs()), hi = vneg(p, hi_half(a.coeffs()));
    return FieldElement::from_coeffs(fs, vcat(lo, hi));
}

bool is_square(const FieldElement& a) {
    if (a.is_zero()) return true;
    return a.pow((a.spec()->size() - 1) / 2) == FieldElement::one(a.spec());
}

std::vector<FieldElement> sqrt_in_field(const FieldElement& a) {
    const FieldSpec* fs = a.spec();
    if (a.is_zero()) return {FieldElement::zero(fs)};
    for (long k = 1; k < fs->size(); ++k) {
        FieldElement r = FieldElement::from_index(fs, k);
        if (r * r == a) {
            FieldElement m = -r;
            if (m < r) std::swap(r, m);
            return {r, m};
        }
    }
    return {};
}

FieldElement embed(const FieldElement& a, const FieldSpec* into) {
    const FieldSpec* fs = a.spec();
    if (fs == into) return a;
    // 'into' must sit above fs on the (unique) tower chain; padding the
    // coefficient vector with zeros realizes each quadratic step.
    for (const FieldSpec* t = into->base(); t; t = t->base()) {
        if (t == fs) {
            V c = a.coeffs();
            c.resize((size_t)into->n(), 0);
            return FieldElement::from_coeffs(into, std::move(c));
        }
    }
    throw math_error("no embedding of " + fs->name() + " into " + into->name());
}

bool in_base(const FieldElement& a) {
    if (!a.spec()->base()) return false;
    return vzero(hi_half(a.coeffs()));
}

FieldElement project_to_base(const FieldElement& a) {
    if (!in_base(a))
        throw math_error("element does not lie in the base subfield");
    return FieldElement::from_coeffs(a.spec()->base(), lo_half(a.coeffs()));
}

std::string to_string(const FieldElement& a) {
    const FieldSpec* fs = a.spec();
    if (fs->n() == 1) return std::to_string(a.coeffs()[0]);
    if (fs->n() == 2) {
        long lo = a.coeffs()[0], hi = a.coeffs()[1];
        if (hi == 0) return std::to_string(lo);
        std::string ip = (hi == 1) ? "i" : std::to_string(hi) + "i";
        if (lo == 0) return ip;
        return std::to_string(lo) + "+" + ip;
    }
    // n = 4: render relative to the F_{p^2} base with generator j.
    FieldElement lo = FieldElement::from_coeffs(fs->base(), lo_half(a.coeffs()));
    FieldElement hi = FieldElement::from_coeffs(fs->base(), hi_half(a.coeffs()));
    if (hi.is_zero()) return to_string(lo);
    std::string out = "(" + to_string(lo) + ")+(" + to_string(hi) + ")j";
    return out;
}

} // namespace quinn::gf
