#pragma once

// Univariate polynomial arithmetic over F_q: division, XGCD, evaluation, and
// factorization by trial division.  Desk scale throughout; exactness over
// speed.
//
// Canonical form: coefficient list with no trailing zeros; the zero
// polynomial has the degree sentinel -1 (standing in for -infinity).
// Deterministic tie-break order everywhere: poly_less compares degree first,
// then coefficients from the leading one down by canonical field index.

#include <string>
#include <utility>
#include <vector>

#include "quinn/gf.hpp"

namespace quinn::polyf {

inline constexpr int kZeroDegree = -1;

class Poly {
public:
    Poly() = default; // detached; usable only for reassignment
    explicit Poly(const gf::FieldSpec* fs) : fs_(fs) {} // zero polynomial
    // Integer coefficients mod p, lowest first.
    Poly(const gf::FieldSpec* fs, const std::vector<long>& ints);
    static Poly from_coeffs(const gf::FieldSpec* fs,
                            std::vector<gf::FieldElement> c);
    static Poly constant(const gf::FieldElement& v);
    static Poly x(const gf::FieldSpec* fs);

    const gf::FieldSpec* spec() const { return fs_; }
    int degree() const { return (int)c_.size() - 1; } // kZeroDegree when zero
    bool is_zero() const { return c_.empty(); }
    gf::FieldElement coeff(int k) const; // zero beyond the degree
    gf::FieldElement leading() const;    // math_error on zero
    bool is_monic() const;
    const std::vector<gf::FieldElement>& coeffs() const { return c_; }

    friend Poly operator+(const Poly&, const Poly&);
    friend Poly operator-(const Poly&, const Poly&);
    friend Poly operator*(const Poly&, const Poly&);
    Poly operator-() const;
    friend bool operator==(const Poly&, const Poly&);
    friend bool operator!=(const Poly&, const Poly&);

private:
    const gf::FieldSpec* fs_ = nullptr;
    std::vector<gf::FieldElement> c_; // low first, no trailing zeros
};

Poly operator*(const gf::FieldElement& c, const Poly& f);

// Quotient and remainder with deg rem < deg g; math_error on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly gcd(const Poly& f, const Poly& g); // monic (zero if both zero)
struct XgcdResult {
    Poly g, u, v; // g = u*f + v*h, g monic
};
XgcdResult xgcd(const Poly& f, const Poly& h);
Poly exact_div(const Poly& f, const Poly& g); // math_error when not exact
Poly monic(const Poly& f);
Poly pow(const Poly& f, long e);
gf::FieldElement eval(const Poly& f, const gf::FieldElement& at);
Poly derivative(const Poly& f);

// The global deterministic order: by degree, then coefficients from the
// leading one down by field index.
bool poly_less(const Poly& a, const Poly& b);

// Exactly the monic irreducibles of degree <= d, sorted by poly_less;
// math_error when q^d exceeds the enumeration cap.
std::vector<Poly> monic_irreducibles_up_to(const gf::FieldSpec* fs, int d);

// Monic irreducible factors with multiplicity, sorted by poly_less; the
// product times leading(f) equals f.  Constants factor to the empty list.
std::vector<std::pair<Poly, int>> factor(const Poly& f);
bool is_irreducible(const Poly& f);

// Coefficientwise subfield embedding and Frobenius conjugation.
Poly embed(const Poly& f, const gf::FieldSpec* into);
Poly frobenius_coeffs(const Poly& f);

std::string to_string(const Poly& f, const std::string& var = "x");

} // namespace quinn::polyf
