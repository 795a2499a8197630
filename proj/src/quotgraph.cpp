#include "quinn/quotgraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace quinn::quotgraph {

using curve::CurvePoint;

namespace {

// "(2,1+3i)" -> "2_1p3i", "inf" -> "inf"; DOT- and id-safe.
std::string sanitize(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '(' || ch == ')') continue;
        if (ch == ',') { out += '_'; continue; }
        if (ch == '+') { out += 'p'; continue; }
        out += ch;
    }
    return out;
}

std::string key(const CurvePoint& p) { return curve::to_string(p); }

std::string gl2_label(long q) {
    return "GL2:" + std::to_string((q * q - 1) * (q * q - q));
}

std::string fq2star_label(long q) {
    return "Fq2star:" + std::to_string(q * q - 1);
}

struct Inventory {
    std::vector<CurvePoint> torsion; // 2-torsion cusps, infinity first
    std::vector<std::pair<CurvePoint, CurvePoint>> cusp_pairs; // {c, -c}
    std::vector<std::pair<CurvePoint, CurvePoint>> ell_pairs;  // {P, -P}
};

Inventory take_inventory(const classtower::ClassGroupData& data) {
    Inventory inv;
    inv.torsion = data.quinn;
    std::set<std::string> torsion_keys;
    for (const CurvePoint& t : inv.torsion) torsion_keys.insert(key(t));
    std::set<std::string> used;
    for (const CurvePoint& c : data.base_group.pts) {
        if (torsion_keys.count(key(c))) continue;
        CurvePoint n = curve::point_neg(c);
        CurvePoint lo = curve::point_less(c, n) ? c : n;
        CurvePoint hi = curve::point_less(c, n) ? n : c;
        if (used.insert(key(lo)).second) inv.cusp_pairs.push_back({lo, hi});
    }
    inv.ell_pairs = actions::partition_elliptic(data).pairs;
    return inv;
}

void add_ray(QuotientSkeleton& sk, const std::string& attach,
             const std::string& base_id, const std::string& feature,
             long depth) {
    std::string prev = attach;
    for (long j = 1; j <= depth; ++j) {
        std::string id = base_id + "_" + std::to_string(j);
        sk.vertices.push_back({id, "ray:" + std::to_string(j), feature});
        sk.edges.push_back({prev, id});
        prev = id;
    }
}

void verify_skeleton(const QuotientSkeleton& sk, long expected_ends,
                     bool check_pendant_degree) {
    std::map<std::string, std::vector<std::string>> adj;
    std::map<std::string, long> deg;
    for (const SkelVertex& v : sk.vertices) {
        if (adj.count(v.id)) throw internal_error("duplicate vertex id");
        adj[v.id];
        deg[v.id] = 0;
    }
    for (const auto& [a, b] : sk.edges) {
        if (!adj.count(a) || !adj.count(b))
            throw internal_error("edge endpoint is not a vertex");
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++deg[a];
        ++deg[b];
    }
    if (sk.edges.size() + 1 != sk.vertices.size())
        throw internal_error("skeleton is not a tree");
    std::set<std::string> seen;
    std::vector<std::string> stack = {sk.vertices.front().id};
    seen.insert(stack.front());
    while (!stack.empty()) {
        std::string at = stack.back();
        stack.pop_back();
        for (const std::string& nb : adj[at])
            if (seen.insert(nb).second) stack.push_back(nb);
    }
    if (seen.size() != sk.vertices.size())
        throw internal_error("skeleton is not connected");

    long ends = 0;
    for (const SkelVertex& v : sk.vertices) {
        if (v.stab == "ray:" + std::to_string(sk.depth)) ++ends;
        if (check_pendant_degree &&
            (v.id.rfind("spike_", 0) == 0 || v.id.rfind("ell_", 0) == 0) &&
            deg[v.id] != 1)
            throw internal_error("spike or pendant vertex of degree != 1");
    }
    if (expected_ends >= 0 && ends != expected_ends)
        throw internal_error("wrong number of ray ends");
}

// Orders along the delta = 2 line: |GL_2(F_q)| at distance 0, then
// (q-1)^2 q^(2i+1); math_error once the order leaves the integer range.
long line_order(long q, long i) {
    if (i == 0) return (q * q - 1) * (q * q - q);
    long out = (q - 1) * (q - 1);
    for (long e = 0; e < 2 * i + 1; ++e)
        if (__builtin_mul_overflow(out, q, &out))
            throw math_error("stabilizer order exceeds the integer range");
    return out;
}

std::string feature_of(const QuotientSkeleton& sk, const std::string& id) {
    const SkelVertex* v = sk.find(id);
    if (!v) throw internal_error("feature lookup on unknown vertex");
    return v->feature;
}

// Verifies sigma as a label-preserving involutive automorphism and fills
// the report; the caller adds any context-specific checks on top.
InvolutionReport verify_involution(const QuotientSkeleton& sk,
                                   const std::map<std::string, std::string>& sigma) {
    InvolutionReport rep;
    if (sigma.size() != sk.vertices.size())
        throw math_error("permutation does not cover the skeleton");
    std::set<std::string> images;
    for (const SkelVertex& v : sk.vertices) {
        auto it = sigma.find(v.id);
        if (it == sigma.end())
            throw math_error("permutation misses a vertex");
        if (!sk.find(it->second))
            throw internal_error("involution image is not a vertex");
        images.insert(it->second);
        rep.perm.push_back({v.id, it->second});
    }
    if (images.size() != sk.vertices.size())
        throw internal_error("induced map is not a bijection");

    std::set<std::pair<std::string, std::string>> edge_set;
    for (const auto& [a, b] : sk.edges)
        edge_set.insert({std::min(a, b), std::max(a, b)});
    for (const auto& [a, b] : sk.edges) {
        std::string ia = sigma.at(a), ib = sigma.at(b);
        if (!edge_set.count({std::min(ia, ib), std::max(ia, ib)}))
            throw internal_error("induced map does not preserve edges");
    }
    for (const SkelVertex& v : sk.vertices) {
        if (sk.find(sigma.at(v.id))->stab != v.stab)
            throw internal_error("induced map does not preserve labels");
        if (sigma.at(sigma.at(v.id)) != v.id)
            throw internal_error("induced map is not an involution");
    }
    rep.is_automorphism = true;
    rep.preserves_labels = true;

    std::set<std::pair<std::string, std::string>> swapped;
    for (const SkelVertex& v : sk.vertices) {
        const std::string& im = sigma.at(v.id);
        if (im == v.id) {
            rep.fixed_vertices.push_back(v.id);
        } else {
            std::string fa = v.feature, fb = feature_of(sk, im);
            if (fa != fb) swapped.insert({std::min(fa, fb), std::max(fa, fb)});
        }
    }
    rep.swapped_feature_pairs.assign(swapped.begin(), swapped.end());
    rep.order = rep.fixed_vertices.size() == sk.vertices.size() ? 1 : 2;
    return rep;
}

} // namespace

const SkelVertex* QuotientSkeleton::find(const std::string& id) const {
    for (const SkelVertex& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

bool QuotientSkeleton::adjacent(const std::string& a, const std::string& b) const {
    for (const auto& [u, w] : edges)
        if ((u == a && w == b) || (u == b && w == a)) return true;
    return false;
}

bool operator==(const QuotientSkeleton& lhs, const QuotientSkeleton& rhs) {
    if (lhs.kind != rhs.kind || lhs.title != rhs.title ||
        lhs.depth != rhs.depth || lhs.edges != rhs.edges ||
        lhs.vertices.size() != rhs.vertices.size())
        return false;
    for (size_t i = 0; i < lhs.vertices.size(); ++i) {
        const SkelVertex &a = lhs.vertices[i], &b = rhs.vertices[i];
        if (a.id != b.id || a.stab != b.stab || a.feature != b.feature)
            return false;
    }
    return true;
}

QuotientSkeleton build_elliptic_skeleton(const classtower::ClassGroupData& data,
                                         long depth, bool figure_compat) {
    if (depth < 1) throw math_error("depth must be at least 1");
    if (figure_compat && depth < 2)
        throw math_error("the drawn layout needs depth at least 2");

    long q = data.base->size();
    Inventory inv = take_inventory(data);

    QuotientSkeleton sk;
    sk.kind = "elliptic";
    sk.title = curve::equation_string(data.curve) + " over " +
               data.base->name() + ": skeleton (feature-faithful, X-minimal)";
    sk.depth = depth;
    sk.vertices.push_back({"c", "center", "center"});

    for (const CurvePoint& t : inv.torsion) {
        std::string s = sanitize(key(t));
        add_ray(sk, "c", "ray_" + s, "ray:" + key(t), depth);
        std::string attach = "ray_" + s + "_" + (figure_compat ? "2" : "1");
        sk.vertices.push_back({"spike_" + s, gl2_label(q), "spike:" + key(t)});
        sk.edges.push_back({attach, "spike_" + s});
    }
    for (const auto& [lo, hi] : inv.cusp_pairs) {
        std::string fid = "fork_" + sanitize(key(lo));
        sk.vertices.push_back({fid, "fork", "fork:" + key(lo)});
        sk.edges.push_back({"c", fid});
        for (const CurvePoint& e : {lo, hi})
            add_ray(sk, fid, "prong_" + sanitize(key(e)), "prong:" + key(e),
                    depth);
    }
    for (const auto& [lo, hi] : inv.ell_pairs) {
        (void)hi;
        std::string id = "ell_" + sanitize(key(lo));
        sk.vertices.push_back({id, fq2star_label(q), "pendant:" + key(lo)});
        sk.edges.push_back({"c", id});
    }

    long ends = (long)inv.torsion.size() + 2 * (long)inv.cusp_pairs.size();
    if (ends != data.base_group.order())
        throw internal_error("end count differs from the class number");
    verify_skeleton(sk, ends, true);
    return sk;
}

QuotientSkeleton build_rational_line(const ratring::RatRingSpec& spec,
                                     long depth) {
    if (spec.delta != 2)
        throw math_error("the doubly infinite line needs delta = 2");
    if (depth < 0) throw math_error("depth must be nonnegative");
    long q = spec.fs->size();

    QuotientSkeleton sk;
    sk.kind = "line";
    sk.title = "delta = 2 line over " + spec.fs->name() + ", pi = " +
               polyf::to_string(spec.pi, "t");
    sk.depth = depth;
    for (long side = 0; side < 2; ++side) {
        std::string star = side ? "*" : "";
        std::string suffix = side ? "s" : "";
        for (long i = 0; i <= depth; ++i) {
            std::string id = "v" + std::to_string(i) + suffix;
            std::string stab = "line:" + std::to_string(i) + ":" +
                               std::to_string(line_order(q, i));
            sk.vertices.push_back({id, stab, "line:" + std::to_string(i) + star});
            if (i > 0)
                sk.edges.push_back({"v" + std::to_string(i - 1) + suffix, id});
        }
    }
    sk.edges.push_back({"v0", "v0s"});
    verify_skeleton(sk, -1, false);
    return sk;
}

QuotientSkeleton build_nagao_ray(const gf::FieldSpec* fs, long depth) {
    if (depth < 1) throw math_error("depth must be at least 1");
    long q = fs->size();

    QuotientSkeleton sk;
    sk.kind = "nagao";
    sk.title = "GL_2(" + fs->name() + "[t]) ray";
    sk.depth = depth;
    sk.vertices.push_back({"v0", gl2_label(q), "nagao:0"});
    for (long i = 1; i <= depth; ++i) {
        sk.vertices.push_back({"v" + std::to_string(i),
                               "ray:" + std::to_string(i),
                               "nagao:" + std::to_string(i)});
        sk.edges.push_back({"v" + std::to_string(i - 1),
                            "v" + std::to_string(i)});
    }
    verify_skeleton(sk, -1, false);
    return sk;
}

InvolutionReport induced_automorphism(const QuotientSkeleton& sk,
                                      const classtower::ClassGroupData& data,
                                      const actions::QuinnElement& kappa) {
    if (sk.kind != "elliptic")
        throw math_error("induced automorphisms act on elliptic skeletons");
    Inventory inv = take_inventory(data);

    auto require = [&sk](const std::string& id) {
        if (!sk.find(id))
            throw math_error("skeleton does not match the curve data");
        return id;
    };

    std::map<std::string, std::string> sigma;
    sigma[require("c")] = "c";
    for (const CurvePoint& t : inv.torsion) {
        std::string s = sanitize(key(t));
        std::string si = sanitize(key(actions::act_on_cusp(data, kappa, t)));
        for (long j = 1; j <= sk.depth; ++j) {
            std::string tail = "_" + std::to_string(j);
            sigma[require("ray_" + s + tail)] = require("ray_" + si + tail);
        }
        sigma[require("spike_" + s)] = require("spike_" + si);
    }
    for (const auto& [lo, hi] : inv.cusp_pairs) {
        CurvePoint ilo = actions::act_on_cusp(data, kappa, lo);
        CurvePoint ihi = actions::act_on_cusp(data, kappa, hi);
        CurvePoint rep = curve::point_less(ilo, ihi) ? ilo : ihi;
        sigma[require("fork_" + sanitize(key(lo)))] =
            require("fork_" + sanitize(key(rep)));
        for (const CurvePoint& e : {lo, hi}) {
            std::string s = sanitize(key(e));
            std::string si = sanitize(key(actions::act_on_cusp(data, kappa, e)));
            for (long j = 1; j <= sk.depth; ++j) {
                std::string tail = "_" + std::to_string(j);
                sigma[require("prong_" + s + tail)] =
                    require("prong_" + si + tail);
            }
        }
    }
    for (const auto& [lo, hi] : inv.ell_pairs) {
        (void)hi;
        CurvePoint im = actions::act_on_elliptic(data, kappa, lo);
        CurvePoint in = curve::point_neg(im);
        CurvePoint rep = curve::point_less(im, in) ? im : in;
        sigma[require("ell_" + sanitize(key(lo)))] =
            require("ell_" + sanitize(key(rep)));
    }

    InvolutionReport rep = verify_involution(sk, sigma);
    bool trivial_kappa = kappa.p.infinity;
    if (trivial_kappa != (rep.order == 1))
        throw internal_error("involution triviality disagrees with kappa");
    if (!trivial_kappa)
        for (const std::string& id : rep.fixed_vertices)
            if (id.rfind("ray_", 0) == 0 || id.rfind("prong_", 0) == 0 ||
                id.rfind("spike_", 0) == 0)
                throw internal_error("nontrivial involution fixed an end");
    return rep;
}

InvolutionReport line_involution(const QuotientSkeleton& sk) {
    if (sk.kind != "line")
        throw math_error("the side swap acts on the delta = 2 line");
    std::map<std::string, std::string> sigma;
    for (const SkelVertex& v : sk.vertices)
        sigma[v.id] = v.id.back() == 's' ? v.id.substr(0, v.id.size() - 1)
                                         : v.id + "s";
    InvolutionReport rep = verify_involution(sk, sigma);
    if (rep.order != 2 || !rep.fixed_vertices.empty())
        throw internal_error("the side swap must be fixed-point free");
    return rep;
}

long count_label_automorphisms(const QuotientSkeleton& sk) {
    long n = (long)sk.vertices.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::map<std::string, long> index;
    for (long i = 0; i < n; ++i) index[sk.vertices[i].id] = i;
    for (const auto& [a, b] : sk.edges) {
        adj[index.at(a)][index.at(b)] = true;
        adj[index.at(b)][index.at(a)] = true;
    }
    std::vector<long> image(n, -1);
    std::vector<bool> used(n, false);
    long count = 0;
    auto rec = [&](auto&& self, long at) -> void {
        if (at == n) {
            ++count;
            return;
        }
        for (long w = 0; w < n; ++w) {
            if (used[w] || sk.vertices[w].stab != sk.vertices[at].stab)
                continue;
            bool ok = true;
            for (long i = 0; i < at && ok; ++i)
                ok = adj[i][at] == adj[image[i]][w];
            if (!ok) continue;
            image[at] = w;
            used[w] = true;
            self(self, at + 1);
            used[w] = false;
            image[at] = -1;
        }
    };
    rec(rec, 0);
    return count;
}

std::string emit_dot(const QuotientSkeleton& sk) {
    std::ostringstream out;
    out << "graph quotient {\n";
    out << "  // " << sk.title << "\n";
    out << "  // depth " << sk.depth
        << ": rays are truncated, not finite\n";
    out << "  node [shape=circle];\n";
    for (const SkelVertex& v : sk.vertices)
        out << "  " << v.id << " [stab=\"" << v.stab << "\", feature=\""
            << v.feature << "\"];\n";
    for (const auto& [a, b] : sk.edges)
        out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_dot(const QuotientSkeleton& sk, const InvolutionReport& inv) {
    std::map<std::string, std::string> sigma(inv.perm.begin(), inv.perm.end());
    std::ostringstream out;
    out << "graph quotient {\n";
    out << "  // " << sk.title << "\n";
    out << "  // depth " << sk.depth
        << ": rays are truncated, not finite\n";
    out << "  node [shape=circle];\n";
    for (const SkelVertex& v : sk.vertices) {
        out << "  " << v.id << " [stab=\"" << v.stab << "\", feature=\""
            << v.feature << "\"";
        auto it = sigma.find(v.id);
        if (it != sigma.end() && it->second != v.id)
            out << ", mate=\"" << it->second << "\"";
        out << "];\n";
    }
    for (const auto& [a, b] : sk.edges)
        out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_json(const QuotientSkeleton& sk) {
    nlohmann::ordered_json j;
    j["schema"] = "quotgraph/1";
    j["kind"] = sk.kind;
    j["title"] = sk.title;
    j["depth"] = sk.depth;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const SkelVertex& v : sk.vertices)
        j["vertices"].push_back({{"id", v.id},
                                 {"stab", v.stab},
                                 {"feature", v.feature}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : sk.edges)
        j["edges"].push_back({a, b});
    return j.dump(2) + "\n";
}

QuotientSkeleton parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception&) {
        throw math_error("malformed skeleton JSON");
    }
    try {
        if (j.at("schema").get<std::string>() != "quotgraph/1")
            throw math_error("unknown skeleton schema");
        QuotientSkeleton sk;
        sk.kind = j.at("kind").get<std::string>();
        sk.title = j.at("title").get<std::string>();
        sk.depth = j.at("depth").get<long>();
        for (const auto& v : j.at("vertices"))
            sk.vertices.push_back({v.at("id").get<std::string>(),
                                   v.at("stab").get<std::string>(),
                                   v.at("feature").get<std::string>()});
        for (const auto& e : j.at("edges"))
            sk.edges.push_back({e.at(0).get<std::string>(),
                                e.at(1).get<std::string>()});
        return sk;
    } catch (const nlohmann::json::exception&) {
        throw math_error("malformed skeleton JSON");
    }
}

} // namespace quinn::quotgraph
