#include "quinn/actions.hpp"

#include <algorithm>
#include <set>

namespace quinn::actions {

namespace {

using classtower::ClassGroupData;
using curve::CurvePoint;

using Pair = std::pair<CurvePoint, CurvePoint>;

Pair make_pair_sorted(const CurvePoint& p) {
    CurvePoint n = curve::point_neg(p);
    return curve::point_less(p, n) ? Pair{p, n} : Pair{n, p};
}

Pair act_on_pair(const ClassGroupData& data, const QuinnElement& kappa,
                 const Pair& pr) {
    return make_pair_sorted(act_on_elliptic(data, kappa, pr.first));
}

// Orbit count of the Quinn action on a set with a given action functor.
template <typename T, typename Act>
long orbit_count(const ClassGroupData& data, const std::vector<T>& set,
                 Act act, bool (*less)(const T&, const T&)) {
    std::vector<T> seen;
    auto mark = [&](const T& t) {
        for (const T& s : seen)
            if (!less(s, t) && !less(t, s)) return false;
        seen.push_back(t);
        return true;
    };
    long orbits = 0;
    for (const T& t : set) {
        if (!mark(t)) continue;
        ++orbits;
        for (const CurvePoint& k : data.quinn) mark(act(QuinnElement{k}, t));
    }
    return orbits;
}

bool pair_less(const Pair& a, const Pair& b) {
    if (a.first != b.first) return curve::point_less(a.first, b.first);
    return curve::point_less(a.second, b.second);
}

} // namespace

QuinnElement quinn_element(const ClassGroupData& data, const CurvePoint& p) {
    if (p.fs != data.base)
        throw math_error("Quinn elements live in the base group");
    if (!curve::point_double(data.curve, p).infinity)
        throw math_error("Quinn elements must be 2-torsion");
    return QuinnElement{p};
}

std::vector<QuinnElement> quinn_elements(const ClassGroupData& data) {
    std::vector<QuinnElement> out;
    for (const CurvePoint& p : data.quinn) out.push_back(QuinnElement{p});
    return out;
}

CurvePoint act_on_cusp(const ClassGroupData& data, const QuinnElement& kappa,
                       const CurvePoint& c) {
    if (c.fs != data.base) throw math_error("cusps live in the base group");
    return curve::point_add(data.curve, kappa.p, c);
}

CurvePoint act_on_elliptic(const ClassGroupData& data,
                           const QuinnElement& kappa, const CurvePoint& P) {
    if (!data.in_norm_kernel(P))
        throw math_error("elliptic points live in the norm kernel");
    CurvePoint r = curve::point_add(
        data.curve, curve::embed_point(kappa.p, data.twr), P);
    if (!data.in_norm_kernel(r))
        throw internal_error("Quinn action left the norm kernel");
    return r;
}

EllipticPartition partition_elliptic(const ClassGroupData& data) {
    EllipticPartition part;
    for (const CurvePoint& p : data.norm_kernel) {
        if (p == curve::point_neg(p))
            part.equal_part.push_back(p);
        else
            part.unequal_part.push_back(p);
    }
    std::set<std::string> used;
    for (const CurvePoint& p : part.unequal_part) {
        Pair pr = make_pair_sorted(p);
        if (used.insert(curve::to_string(pr.first)).second)
            part.pairs.push_back(pr);
    }

    if (part.unequal_part.size() != 2 * part.pairs.size())
        throw internal_error("conjugate pairs fail to cover Ell!=");
    long n_eq = (long)part.equal_part.size();
    if ((long)data.norm_kernel.size() != data.n_E * n_eq ||
        (long)part.unequal_part.size() != (data.n_E - 1) * n_eq)
        throw internal_error("partition counts contradict n_E");
    return part;
}

bool order4_swap(const ClassGroupData& data, const QuinnElement& kappa,
                 const CurvePoint& P) {
    if (P == curve::point_neg(P))
        throw math_error("order-4 swap applies to Ell!= only");
    bool action_side = act_on_elliptic(data, kappa, P) == curve::point_neg(P);
    bool torsion_side =
        curve::order_of(data.curve, P) == 4 &&
        curve::embed_point(kappa.p, data.twr) ==
            curve::point_double(data.curve, P);
    if (action_side != torsion_side)
        throw internal_error("order-4 action and torsion sides disagree");
    return action_side;
}

bool order4_cusp_swap(const ClassGroupData& data, const QuinnElement& kappa,
                      const CurvePoint& c) {
    if (c == curve::point_neg(c))
        throw math_error("order-4 cusp swap applies outside the 2-torsion");
    bool action_side = act_on_cusp(data, kappa, c) == curve::point_neg(c);
    bool torsion_side = curve::order_of(data.curve, c) == 4 &&
                        kappa.p == curve::point_double(data.curve, c);
    if (action_side != torsion_side)
        throw internal_error("order-4 action and torsion sides disagree");
    return action_side;
}

long orbit_length_on_pairs(const ClassGroupData& data, const Pair& pair) {
    if (pair.second != curve::point_neg(pair.first) ||
        pair.first == pair.second)
        throw math_error("not a conjugate pair");

    std::vector<Pair> orbit;
    auto push = [&](const Pair& pr) {
        for (const Pair& q : orbit)
            if (!pair_less(q, pr) && !pair_less(pr, q)) return;
        orbit.push_back(pr);
    };
    for (const CurvePoint& k : data.quinn)
        push(act_on_pair(data, QuinnElement{k}, make_pair_sorted(pair.first)));
    long enumerated = (long)orbit.size();

    bool halved = curve::order_of(data.curve, pair.first) == 4;
    if (halved) {
        CurvePoint dbl = curve::point_double(data.curve, pair.first);
        halved = std::any_of(data.quinn.begin(), data.quinn.end(),
                             [&](const CurvePoint& k) {
                                 return curve::embed_point(k, data.twr) == dbl;
                             });
    }
    long formula = halved ? (long)data.quinn.size() / 2
                          : (long)data.quinn.size();
    if (enumerated != formula)
        throw internal_error("pair orbit length contradicts the formula");
    return enumerated;
}

TransitivityReport transitivity_report(const ClassGroupData& data) {
    EllipticPartition part = partition_elliptic(data);
    long nq = (long)data.quinn.size();

    // brute-force orbit counts; an empty set has zero orbits, so it is
    // never transitive
    long orbits_neq = orbit_count<CurvePoint>(
        data, part.unequal_part,
        [&](const QuinnElement& k, const CurvePoint& p) {
            return act_on_elliptic(data, k, p);
        },
        curve::point_less);
    long orbits_v = orbit_count<Pair>(
        data, part.pairs,
        [&](const QuinnElement& k, const Pair& pr) {
            return act_on_pair(data, k, pr);
        },
        pair_less);

    bool free_v = true;
    for (const Pair& pr : part.pairs)
        for (const CurvePoint& k : data.quinn) {
            if (k.infinity) continue;
            if (act_on_pair(data, QuinnElement{k}, pr) == pr) free_v = false;
        }

    TransitivityReport rep{};
    rep.transitive_on_ell_neq = orbits_neq == 1;
    rep.transitive_on_v = orbits_v == 1;
    rep.free_on_v = free_v;
    rep.free_and_transitive_on_v = free_v && orbits_v == 1;
    rep.transitive_on_cusps = nq == data.base_group.order();
    rep.quinn_nontrivial = nq > 1;

    // each flag must match its n_E criterion
    if (rep.transitive_on_ell_neq != (data.n_E == 2) ||
        rep.transitive_on_v != (data.n_E == 2 || data.n_E == 3) ||
        rep.free_on_v != (data.n_E % 2 == 1) ||
        rep.free_and_transitive_on_v != (data.n_E == 3) ||
        rep.quinn_nontrivial != (data.base_group.order() % 2 == 0))
        throw internal_error("orbit flags contradict the n_E criteria");
    return rep;
}

bool verify_free_actions(const ClassGroupData& data) {
    for (const CurvePoint& k : data.quinn) {
        if (k.infinity) continue;
        QuinnElement kappa{k};
        for (const CurvePoint& c : data.base_group.pts)
            if (act_on_cusp(data, kappa, c) == c)
                throw internal_error("Quinn fixes a cusp");
        for (const CurvePoint& P : data.norm_kernel)
            if (act_on_elliptic(data, kappa, P) == P)
                throw internal_error("Quinn fixes an elliptic point");
    }
    // translation is free and transitive on Ell= and on quinn itself
    EllipticPartition part = partition_elliptic(data);
    long orbits_eq = orbit_count<CurvePoint>(
        data, part.equal_part,
        [&](const QuinnElement& k, const CurvePoint& p) {
            return act_on_elliptic(data, k, p);
        },
        curve::point_less);
    if (orbits_eq != 1)
        throw internal_error("Quinn not transitive on Ell=");
    return true;
}

} // namespace quinn::actions
