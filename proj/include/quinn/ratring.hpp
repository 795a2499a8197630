#pragma once

// The genus-0 backend: K = F_q(t) with chosen infinite place the degree-d
// place of a monic irreducible pi, so A = { f / pi^m : deg f <= d m }.
// Cl(A) = Z/d via the degree map, fractional ideals are finite valuation
// vectors over the places of A (monic irreducibles != pi, plus the degree-1
// place at t = infinity), and the Cremona criterion becomes the per-place
// identity 2 min_i v(m_i) = v(det M).

#include <string>
#include <vector>

#include "quinn/polyf.hpp"

namespace quinn::ratring {

struct RatRingSpec {
    const gf::FieldSpec* fs;
    long delta;
    polyf::Poly pi; // monic irreducible of degree delta

    // math_error unless pi is monic irreducible of degree >= 1.
    RatRingSpec(const gf::FieldSpec* fs, polyf::Poly pi);
};

// f / pi^m, normalized so that m = 0 or pi does not divide f; the zero
// element is 0 / pi^0.
struct RatElement {
    polyf::Poly f;
    long m;
    const RatRingSpec* spec;

    bool is_zero() const { return f.is_zero(); }
};

// Canonical form of f / pi^m; math_error when m < 0.
RatElement rat_element(const RatRingSpec& spec, polyf::Poly f, long m = 0);

RatElement operator+(const RatElement&, const RatElement&);
RatElement operator-(const RatElement&, const RatElement&);
RatElement operator*(const RatElement&, const RatElement&);
bool operator==(const RatElement&, const RatElement&);

std::string to_string(const RatElement& e);

// A place of A: a monic irreducible != pi, or the place at t = infinity
// (degree 1).  The pi-place is the infinity of K and never appears.
struct Place {
    bool at_t_infinity;
    polyf::Poly p; // meaningful when !at_t_infinity

    long degree() const { return at_t_infinity ? 1 : p.degree(); }
};

bool operator==(const Place&, const Place&);
bool place_less(const Place&, const Place&); // t-infinity first, then poly order
std::string to_string(const Place&);

// Finite-support valuation vector of a fractional ideal; entries sorted by
// place_less, zero valuations dropped.
struct FracIdealVal {
    std::vector<std::pair<Place, long>> v;
};

// v_p(e) = mult_p(f) for finite p != pi and m delta - deg f at t-infinity;
// math_error on the zero element.
FracIdealVal rat_valuations(const RatElement& e);

// All valuations >= 0; for canonical elements this is deg f <= delta m.
bool in_A(const RatElement& e);

// Degree of the ideal mod delta, in [0, delta): the complete class
// invariant for genus 0.
long rat_class(const FracIdealVal& I, const RatRingSpec& spec);

struct RatMatrix {
    RatElement a, b, c, d;
    RatElement delta; // ad - bc

    // math_error on zero determinant.
    RatMatrix(RatElement a, RatElement b, RatElement c, RatElement d);
};

struct RatPlaceLedger {
    Place place;
    long v_delta;
    long two_min_entries; // 2 min_i v(m_i) over the nonzero entries
    bool ok;              // the two agree
};

struct RatReport {
    bool is_normalizer; // every ledger row ok
    long class_residue; // class of q(M) in Z/delta
    FracIdealVal q_val; // per-place minimum over the entries
    std::vector<RatPlaceLedger> ledger; // union support, sorted
};

// The valuation form of the normalizer criterion, checked over the union of
// the supports of the entries and of the determinant (the identity holds
// automatically everywhere else).
RatReport rat_cremona_check(const RatMatrix& M);

// The generator [[tau, t], [-t', 1]] of Cl(A)_2 for delta = 2, where
// pi = t t' + tau; math_error for other delta.
RatMatrix rational_g0(const RatRingSpec& spec);

} // namespace quinn::ratring
