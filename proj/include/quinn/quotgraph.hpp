#pragma once

// Quotient-graph skeletons of the modular group acting on its tree: the
// elliptic feature graph (one cuspidal ray with GL2 spike per 2-torsion
// cusp, a fork with two prong rays per inverse pair of cusps, an Fq2star
// pendant per elliptic pair), the genus-0 delta=2 doubly infinite line with
// exact stabilizer orders, and the Nagao ray.  Induced Quinn automorphisms
// are rebuilt from the class-group actions and verified edge-by-edge.
//
// The finite part is rendered X-minimally as a single center vertex: only
// the feature inventory and its attachment to the rays is asserted, never
// unproved interior structure.

#include "quinn/actions.hpp"
#include "quinn/ratring.hpp"

namespace quinn::quotgraph {

struct SkelVertex {
    std::string id;
    std::string stab;    // "center", "GL2:2016", "Fq2star:48", "ray:2",
                         // "fork", "line:1:12348"
    std::string feature; // "ray:inf", "spike:(0,0)", "fork:(2,3)",
                         // "prong:(2,4)", "pendant:(1,3i)", "line:0*", ...
};

struct QuotientSkeleton {
    std::string kind;  // "elliptic", "line", "nagao"
    std::string title;
    long depth;        // rays truncated to this many vertices; all infinite
    std::vector<SkelVertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges; // undirected

    const SkelVertex* find(const std::string& id) const;
    bool adjacent(const std::string& a, const std::string& b) const;
};

bool operator==(const QuotientSkeleton&, const QuotientSkeleton&);

// One center; per 2-torsion cusp a depth-vertex ray with a GL2 spike at its
// root (figure_compat moves the spike one vertex along, as the drawn
// figures have it); per inverse pair of non-2-torsion cusps a fork with two
// prong rays; per elliptic pair an Fq2star pendant.  Verified: tree, ray
// count |Cl(A)|, GL2/Fq2star vertices of degree 1.  depth >= 1 (>= 2 with
// figure_compat).
QuotientSkeleton build_elliptic_skeleton(const classtower::ClassGroupData& data,
                                         long depth,
                                         bool figure_compat = false);

// The doubly infinite line of the genus-0 delta=2 ring: vertices v0..vk,
// v0*..vk* with the single cross edge v0 -- v0*, stabilizer orders
// |GL_2(F_q)| at v0, v0* and (q-1)^2 q^(2i+1) at distance i >= 1.
QuotientSkeleton build_rational_line(const ratring::RatRingSpec& spec,
                                     long depth);

// The ray of GL_2(F_q[t]): an isolated GL2 terminal vertex continued by
// abstract-rank ray vertices.  Its labeled automorphism group is trivial.
QuotientSkeleton build_nagao_ray(const gf::FieldSpec* fs, long depth);

struct InvolutionReport {
    std::vector<std::pair<std::string, std::string>> perm; // id -> image
    bool is_automorphism;
    long order; // 1 or 2
    bool preserves_labels;
    std::vector<std::string> fixed_vertices;
    std::vector<std::pair<std::string, std::string>> swapped_feature_pairs;
};

// The permutation induced by kappa through the cusp and elliptic actions.
// Everything reported is re-verified: bijection, edge and label
// preservation, order dividing 2, nontrivial iff kappa != infinity, and no
// ray, prong, or spike fixed for nontrivial kappa (freeness on ends);
// internal_error on any violation, math_error when the skeleton does not
// belong to data.
InvolutionReport induced_automorphism(const QuotientSkeleton& sk,
                                      const classtower::ClassGroupData& data,
                                      const actions::QuinnElement& kappa);

// v_i <-> v_i* on the delta=2 line, with the same verification; fixes no
// vertex and inverts the middle edge.
InvolutionReport line_involution(const QuotientSkeleton& sk);

// Number of label-preserving graph automorphisms, by exhaustive
// backtracking; meant for the small line and Nagao skeletons.
long count_label_automorphisms(const QuotientSkeleton& sk);

std::string emit_dot(const QuotientSkeleton& sk);
// With mate="image" attributes on the vertices moved by the involution.
std::string emit_dot(const QuotientSkeleton& sk, const InvolutionReport& inv);
std::string emit_json(const QuotientSkeleton& sk);
QuotientSkeleton parse_json(const std::string& text); // inverse of emit_json

} // namespace quinn::quotgraph
