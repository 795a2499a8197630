#pragma once

// Exact arithmetic in F_q (q = p^n, p an odd prime) and its quadratic tower
// F_{q^2}, with Frobenius conjugation and square roots.
//
// Field specs are interned and immortal: FieldSpec::prime(p) and
// spec->tower() hand out pointers that stay valid for the whole process, so
// elements keep a bare spec pointer and spec equality is pointer equality.
//
// A tower is F_q[T]/(T^2 - s) where s is the first non-square of F_q in the
// signed enumeration order 1, -1, 2, -2, ...  For q = 3 (mod 4) this gives
// T^2 + 1, so the adjoined generator is i with i^2 = -1.  Supported shapes:
// F_p, F_{p^2}, and the quadratic tower F_{p^4} of an F_{p^2} base.

#include <string>
#include <vector>

#include "quinn/common.hpp"

namespace quinn::gf {

class FieldSpec {
public:
    static const FieldSpec* prime(long p);
    const FieldSpec* tower() const;

    long p() const { return p_; }
    int n() const { return n_; }
    long size() const { return size_; }

    // Subfield this spec extends quadratically; nullptr for prime fields.
    const FieldSpec* base() const { return base_; }

    // s of T^2 - s as a coefficient vector over base() (towers only).
    const std::vector<long>& nonsquare() const { return s_; }

    // Absolute modulus over F_p, monic, lowest coefficient first; empty for
    // n = 1.  Verified irreducible at construction: root scan for n = 2,
    // trial division by quadratics for n = 4.
    const std::vector<long>& modulus() const { return mod_; }

    std::string name() const { return "F_" + std::to_string(size_); }

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

private:
    FieldSpec() = default;
    long p_ = 0;
    int n_ = 0;
    long size_ = 0;
    const FieldSpec* base_ = nullptr;
    std::vector<long> s_;
    std::vector<long> mod_;
};

class FieldElement {
public:
    FieldElement() = default; // detached; usable only for reassignment
    FieldElement(const FieldSpec* fs, long value); // integer mod p, embedded
    static FieldElement from_coeffs(const FieldSpec* fs, std::vector<long> c);
    static FieldElement zero(const FieldSpec* fs) { return {fs, 0}; }
    static FieldElement one(const FieldSpec* fs) { return {fs, 1}; }
    // The adjoined generator T of a tower spec (printed as "i" or "eps").
    static FieldElement generator(const FieldSpec* fs);

    const FieldSpec* spec() const { return fs_; }
    const std::vector<long>& coeffs() const { return c_; }
    bool is_zero() const;

    // Canonical position in the field's enumeration order: sum c_i p^i.
    long index() const;
    static FieldElement from_index(const FieldSpec* fs, long idx);

    FieldElement inv() const;             // math_error on zero
    FieldElement pow(long e) const;       // e >= 0, or e < 0 via inverse

    friend FieldElement operator+(const FieldElement&, const FieldElement&);
    friend FieldElement operator-(const FieldElement&, const FieldElement&);
    friend FieldElement operator*(const FieldElement&, const FieldElement&);
    friend FieldElement operator/(const FieldElement&, const FieldElement&);
    FieldElement operator-() const;
    friend bool operator==(const FieldElement&, const FieldElement&);
    friend bool operator!=(const FieldElement&, const FieldElement&);
    friend bool operator<(const FieldElement&, const FieldElement&); // index order

private:
    const FieldSpec* fs_ = nullptr;
    std::vector<long> c_; // length n, entries in [0, p)
};

// a -> a^q for a in a tower F_{q^2}; involutive, fixes exactly F_q.
FieldElement frobenius(const FieldElement& a);

// All r with r^2 = a, canonically sorted: two for a nonzero square, one for
// zero, none otherwise.
std::vector<FieldElement> sqrt_in_field(const FieldElement& a);
bool is_square(const FieldElement& a);

// Subfield embedding along the tower chain; math_error when 'into' does not
// extend a's spec.
FieldElement embed(const FieldElement& a, const FieldSpec* into);
// Whether a tower element lies in the base subfield, and its preimage there.
bool in_base(const FieldElement& a);
FieldElement project_to_base(const FieldElement& a);

// "3" for prime fields, "3+5i" / "2i" / "i" for towers (coefficients are the
// canonical representatives 0..p-1).
std::string to_string(const FieldElement& a);

} // namespace quinn::gf
