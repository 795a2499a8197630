#pragma once

// The Quinn(G) = Cl(A)_2 actions: on cusps by class multiplication, on
// elliptic points through the kernel of the norm, the Ell= / Ell!= partition
// with its conjugate pairs, order-4 swap predicates, orbit lengths on pairs,
// and the transitivity / freeness report.  Every formula-level flag is
// cross-checked against brute-force orbit enumeration at runtime.

#include "quinn/classtower.hpp"

namespace quinn::actions {

// A 2-torsion class of Cl(A); math_error otherwise.
struct QuinnElement {
    curve::CurvePoint p; // base point with 2P = infinity
};

QuinnElement quinn_element(const classtower::ClassGroupData& data,
                           const curve::CurvePoint& p);

std::vector<QuinnElement> quinn_elements(const classtower::ClassGroupData& data);

// kappa + c in Cl(A).
curve::CurvePoint act_on_cusp(const classtower::ClassGroupData& data,
                              const QuinnElement& kappa,
                              const curve::CurvePoint& c);

// iota(kappa) + P in ker N; P must lie in the kernel, and so does the result.
curve::CurvePoint act_on_elliptic(const classtower::ClassGroupData& data,
                                  const QuinnElement& kappa,
                                  const curve::CurvePoint& P);

// Ell= (P = -P, equal to the embedded 2-torsion), Ell!= (the rest), and the
// conjugate pairs {P, -P} that realize the vertices V.
struct EllipticPartition {
    std::vector<curve::CurvePoint> equal_part;
    std::vector<curve::CurvePoint> unequal_part;
    std::vector<std::pair<curve::CurvePoint, curve::CurvePoint>> pairs;
};

// Splits the kernel by P = -P and checks |Ell| = n_E |Ell=| and
// |Ell!=| = (n_E - 1) |Ell=|.
EllipticPartition partition_elliptic(const classtower::ClassGroupData& data);

// True iff kappa sends P to -P.  Computed on the action side and, fully
// independently, on the torsion side (order(P) = 4 and iota(kappa) = 2P);
// internal_error if the two sides ever disagree.  P must satisfy P != -P.
bool order4_swap(const classtower::ClassGroupData& data,
                 const QuinnElement& kappa, const curve::CurvePoint& P);

// Same predicate for a cusp c outside the 2-torsion: kappa + c = -c iff
// c has order 4 with kappa = 2c.
bool order4_cusp_swap(const classtower::ClassGroupData& data,
                      const QuinnElement& kappa, const curve::CurvePoint& c);

// Length of the full Quinn-orbit of the pair {P, -P}: |Quinn|/2 when the
// pair has order 4 with 2P in iota(quinn), else |Quinn|.  The formula is
// cross-checked against the enumerated orbit.
long orbit_length_on_pairs(
    const classtower::ClassGroupData& data,
    const std::pair<curve::CurvePoint, curve::CurvePoint>& pair);

// Transitivity and freeness of the Quinn action; each flag carries the
// closed-form n_E criterion validated against direct orbit computation.
struct TransitivityReport {
    bool transitive_on_ell_neq;    // n_E = 2
    bool transitive_on_v;          // n_E in {2, 3}
    bool free_on_v;                // n_E odd
    bool free_and_transitive_on_v; // n_E = 3
    bool transitive_on_cusps;      // Cl(A)_2 = Cl(A)
    bool quinn_nontrivial;         // |Cl(A)| even
};

TransitivityReport transitivity_report(const classtower::ClassGroupData& data);

// The translation action: no nontrivial kappa fixes any cusp or any kernel
// point.  Returns true after exhaustively confirming both statements;
// internal_error on any counterexample.
bool verify_free_actions(const classtower::ClassGroupData& data);

} // namespace quinn::actions
