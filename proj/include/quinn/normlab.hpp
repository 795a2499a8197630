#pragma once

// The Cremona normalizer criterion for GL_2(A): a matrix M over A with
// det != 0 normalizes GL_2(A) iff q(M)^2 = (det M), where q(M) is the ideal
// generated by the entries.  The full report also verifies the row/column
// generation identity, exact divisibility of M^2 by det M with unit
// determinant quotient, and the evenness of the infinity-valuation of the
// determinant.  A closed-form constructor produces a normalizer for every
// 2-torsion ideal class.

#include "quinn/actions.hpp"

namespace quinn::normlab {

// [[a, b], [c, d]] over A = F_q[x,y]/(y^2 - f) with cached nonzero
// determinant; math_error when the determinant vanishes or the entries mix
// rings.
struct MatrixOverA {
    coordring::RingElement a, b, c, d;
    coordring::RingElement delta; // ad - bc

    MatrixOverA(coordring::RingElement a, coordring::RingElement b,
                coordring::RingElement c, coordring::RingElement d);

    const polyf::Poly& f() const { return a.f; }
};

MatrixOverA matrix_product(const MatrixOverA& M, const MatrixOverA& N);

bool operator==(const MatrixOverA&, const MatrixOverA&);

std::string to_string(const MatrixOverA& M);

// q(M) = Aa + Ab + Ac + Ad.
coordring::IdealHNF q_of_matrix(const MatrixOverA& M);

struct NormalizerReport {
    bool is_normalizer;            // q(M)^2 = (det M)
    coordring::IdealHNF qM;
    curve::CurvePoint class_point; // class of q(M) in Cl(A) = E(F_q)
    coordring::RingElement delta;
    bool row_col_ok;    // every row and column of M generates q(M)
    bool m_squared_ok;  // delta | M^2 entrywise and det(M^2/delta) = 1
    long v_infinity_delta;
    bool parity_ok;     // v_infinity(delta) even
};

// Decides q(M)^2 = (det M) and fills in the auxiliary verifications.  The
// side conditions are theorems for normalizers, so is_normalizer = true
// with any of row_col_ok, m_squared_ok, parity_ok false raises
// internal_error.
NormalizerReport cremona_check(const MatrixOverA& M);

// Class of q(M) as a 2-torsion element; math_error when M fails the
// criterion or lives over a different ring than data.
actions::QuinnElement normalizer_class(const classtower::ClassGroupData& data,
                                       const MatrixOverA& M);

// A normalizer with class exactly 'target': the identity for the trivial
// class, else [[y, f'(r) - h], [x - r, -y]] for the 2-torsion target
// (r, 0), where h = f/(x - r).  Then det = -f'(r)(x - r) and
// M^2 = -det(M) I.  math_error unless target is base 2-torsion of c; the
// result is re-verified before being returned (internal_error on failure).
MatrixOverA construct_normalizer(const curve::WeierstrassCurve& c,
                                 const curve::CurvePoint& target);

// Cross-validation sweep over the family [[y, b], [x - r, -y]] with
// r in F_q and deg b <= 2: returns every member passing cremona_check.
// Each affine 2-torsion class is realized in this family by the
// construct_normalizer matrix.
std::vector<MatrixOverA> search_normalizers(const curve::WeierstrassCurve& c);

} // namespace quinn::normlab
