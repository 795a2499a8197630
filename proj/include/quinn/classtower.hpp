#pragma once

// The class-group tower Cl(A) = E(F_q) inside Cl(A~) = E(F_{q^2}): the norm
// map N(P) = P + Pbar, its kernel (the elliptic points of the modular
// group), the 2-torsion identification, and the ideal constructors J_omega
// and J_c for elliptic points and cusps.

#include <utility>

#include "quinn/coordring.hpp"

namespace quinn::classtower {

struct ClassGroupData {
    curve::WeierstrassCurve curve;
    const gf::FieldSpec* base;
    const gf::FieldSpec* twr;
    curve::PointGroup base_group;  // Cl(A)
    curve::PointGroup tower_group; // Cl(A~)
    std::vector<curve::CurvePoint> quinn;       // 2-torsion of E(F_q)
    std::vector<curve::CurvePoint> norm_kernel; // {P : Pbar = -P}, tower pts
    long n_E; // |norm_kernel| / |quinn|

    bool in_norm_kernel(const curve::CurvePoint& p) const;
};

// Enumerates both groups and the kernel; re-checks that the kernel is a
// subgroup containing the embedded 2-torsion with index n_E.
ClassGroupData build_class_tower(const curve::WeierstrassCurve& c);

// N(P) = P + Pbar as a base point; internal_error if the sum fails to be
// Galois-fixed.
curve::CurvePoint norm_point(const curve::WeierstrassCurve& c,
                             const curve::CurvePoint& p);

// The 2-torsion of the norm kernel must equal the embedded 2-torsion of
// E(F_q) pointwise (delta = 1 is odd).
bool check_two_torsion_iso(const ClassGroupData& data);

// J = A~(eps + s) + A~ t for the canonical generator eps of the tower, with
// s, t in the base ring A.  Requires t != 0 and t | (s^2 - eps^2) in A
// (math_error otherwise); the class always lands in the norm kernel
// (internal_error otherwise).
std::pair<coordring::IdealHNF, curve::CurvePoint>
elliptic_point_ideal(const coordring::RingElement& s,
                     const coordring::RingElement& t);

// Class of the A-ideal (x_el, y_el) attached to the cusp (x_el : y_el);
// math_error when both are zero.
curve::CurvePoint cusp_ideal(const coordring::RingElement& x_el,
                             const coordring::RingElement& y_el);

} // namespace quinn::classtower
