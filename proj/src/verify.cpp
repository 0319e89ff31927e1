#include "pantsgraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <map>
#include <mutex>
#include <set>

#include "pantsgraph/errors.hpp"
#include "pantsgraph/farey.hpp"
#include "pantsgraph/mcg_action.hpp"
#include "pantsgraph/normalization.hpp"
#include "pantsgraph/rigid_sets.hpp"

namespace pantsgraph {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        case Outcome::Skipped: return "skipped";
    }
    return "?";
}

Json VerificationReport::to_json() const {
    Json j{{"check", check}, {"params", params}, {"outcome", to_string(outcome)}};
    if (!reason.empty()) j["reason"] = reason;
    j["witness"] = witness;
    return j;
}

Json to_json(const std::vector<VerificationReport>& reports) {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(r.to_json());
    return out;
}

const PantsGraphFragment& cached_X(int n) {
    static std::mutex mu;
    static std::map<int, PantsGraphFragment> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_X(n)).first;
    return it->second;
}

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
VerificationReport timed(F&& f) {
    const auto start = Clock::now();
    auto r = f();
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

VerificationReport& fail(VerificationReport& r, const std::string& why) {
    if (r.outcome == Outcome::Pass) {
        r.outcome = Outcome::Fail;
        r.reason = why;
    }
    return r;
}

// Chord labels when available, else coordinate vectors.
Json label(const PantsDecomposition& p) {
    Json out = Json::array();
    if (auto cs = chord_labels(p)) {
        for (const auto& c : *cs) out.push_back(to_json(c));
    } else {
        for (const auto& c : p.curves()) out.push_back(c.coords());
    }
    return out;
}

Json counts(const PantsGraphFragment& g) {
    const auto& adj = g.adjacency();
    return Json{{"vertices", g.num_vertices()},
                {"edges", g.num_edges()},
                {"triangles", cycles_of_length(adj, 3).size()},
                {"rectangles", cycles_of_length(adj, 4).size()},
                {"pentagons", cycles_of_length(adj, 5).size()}};
}

std::vector<Curve> shared_curves(const PantsDecomposition& a, const PantsDecomposition& b) {
    std::vector<Curve> out;
    for (const auto& c : a.curves())
        if (b.contains(c)) out.push_back(c);
    return out;
}

// 5-cycles whose edges keep pairwise different curve sets.
std::vector<std::vector<int>> alternating_pentagons(const PantsGraphFragment& g) {
    std::vector<std::vector<int>> out;
    for (const auto& cyc : cycles_of_length(g.adjacency(), 5)) {
        std::vector<std::vector<int>> kept;
        bool ok = true;
        for (int s = 0; s < 5 && ok; ++s) {
            const auto& a = g.vertex(cyc[s]);
            const auto& b = g.vertex(cyc[(s + 1) % 5]);
            auto sh = shared_curves(a, b);
            if (sh.size() != static_cast<std::size_t>(g.n() - 4)) ok = false;
            std::vector<int> k;
            for (const auto& c : sh) k.insert(k.end(), c.coords().begin(), c.coords().end());
            kept.push_back(std::move(k));
        }
        if (!ok) continue;
        std::sort(kept.begin(), kept.end());
        if (std::adjacent_find(kept.begin(), kept.end()) == kept.end()) out.push_back(cyc);
    }
    return out;
}

std::set<std::pair<int, int>> cycle_edges(const std::vector<int>& cyc) {
    std::set<std::pair<int, int>> out;
    for (std::size_t s = 0; s < cyc.size(); ++s) {
        int a = cyc[s], b = cyc[(s + 1) % cyc.size()];
        out.emplace(std::min(a, b), std::max(a, b));
    }
    return out;
}

PantsGraphFragment image_vertices(const PantsGraphFragment& g, const Generator& t) {
    PantsGraphFragment out(g.n());
    for (const auto& v : g.vertices()) out.add_vertex(apply(t, v));
    return out;
}

bool require_chain(VerificationReport& r, int n, const ChordId& alpha) {
    if (alpha.is_chain(n)) return true;
    fail(r, "alpha is not a chain curve");
    return false;
}

}  // namespace

static VerificationReport verify_z5_pentagon_impl(const CrossPredicate& crosses) {
    VerificationReport r;
    r.check = "z5_pentagon";
    r.params = Json{{"n", 5}};
    const auto z = build_Zn(5, crosses);
    r.witness["vertices"] = z.num_vertices();
    r.witness["edges"] = z.num_edges();
    if (z.num_vertices() != 5 || z.num_edges() != 5) return fail(r, "expected 5 vertices and 5 edges");
    if (!graph_isomorphic(z.adjacency(), cycle_graph(5))) return fail(r, "Z_5 is not a 5-cycle");
    const auto cycles = cycles_of_length(z.adjacency(), 5);
    if (cycles.size() != 1) return fail(r, "expected exactly one 5-cycle");
    const auto& cyc = cycles[0];

    // Vertex s of the cycle is A..E; the curve shared by s and s+1 is named
    // so that A = {alpha, beta}, B = {delta, beta}, C = {delta, epsilon},
    // D = {gamma, epsilon}, E = {alpha, gamma}.
    static const char* const vnames[] = {"A", "B", "C", "D", "E"};
    static const char* const cnames[] = {"beta", "delta", "epsilon", "gamma", "alpha"};
    std::vector<ChordId> shared;
    Json labels = Json::object();
    for (int s = 0; s < 5; ++s) {
        const auto a = chord_labels(z.vertex(cyc[s]));
        const auto b = chord_labels(z.vertex(cyc[(s + 1) % 5]));
        if (!a || !b) return fail(r, "vertex off Gamma_5");
        std::vector<ChordId> common;
        std::set_intersection(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(common));
        if (common.size() != 1) {
            r.witness["pair"] = Json::array({label(z.vertex(cyc[s])), label(z.vertex(cyc[(s + 1) % 5]))});
            return fail(r, "consecutive vertices do not share exactly one curve");
        }
        shared.push_back(common[0]);
        labels[cnames[s]] = to_json(common[0]);
    }
    Json vertices = Json::object();
    for (int s = 0; s < 5; ++s) vertices[vnames[s]] = label(z.vertex(cyc[s]));
    r.witness["labels"] = labels;
    r.witness["pentagon"] = vertices;
    auto sorted = shared;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return fail(r, "shared curves repeat");
    // Each vertex consists of the curves shared with its two neighbours.
    for (int s = 0; s < 5; ++s) {
        std::vector<ChordId> expect{shared[(s + 4) % 5], shared[s]};
        std::sort(expect.begin(), expect.end());
        if (*chord_labels(z.vertex(cyc[s])) != expect) return fail(r, "labels do not alternate");
    }
    const auto rot = rotation_word(5, 1);
    for (const auto& v : z.vertices())
        if (!z.contains(apply(rot, v))) return fail(r, "Z_5 is not rotation invariant");
    r.witness["rotation_invariant"] = true;
    return r;
}

static VerificationReport verify_x5_shape_impl() {
    VerificationReport r;
    r.check = "x5_shape";
    r.params = Json{{"n", 5}};
    const auto& x = cached_X(5);
    const auto z = build_Zn(5);
    if (!is_subgraph(z, x)) return fail(r, "Z_5 is not a subgraph of X_5");
    std::set<int> zset;
    for (const auto& v : z.vertices()) zset.insert(*x.find(v));

    const auto tris = cycles_of_length(x.adjacency(), 3);
    std::vector<std::vector<int>> attached;
    std::map<std::pair<int, int>, std::vector<int>> on_edge;  // Z_5 edge -> attached triangle ids
    for (const auto& t : tris) {
        const int inz = static_cast<int>(std::count_if(t.begin(), t.end(), [&](int v) { return zset.count(v); }));
        if (inz < 2) continue;
        if (inz != 2) return fail(r, "triangle inside Z_5");
        const int id = static_cast<int>(attached.size());
        attached.push_back(t);
        std::vector<int> zs;
        for (int v : t)
            if (zset.count(v)) zs.push_back(v);
        on_edge[{std::min(zs[0], zs[1]), std::max(zs[0], zs[1])}].push_back(id);
    }
    r.witness["vertices"] = x.num_vertices();
    r.witness["edges"] = x.num_edges();
    r.witness["triangles_total"] = tris.size();
    r.witness["triangles_attached"] = attached.size();
    if (attached.size() != 10) return fail(r, "expected 10 triangles attached to Z_5");
    if (on_edge.size() != 5) return fail(r, "attached triangles miss a Z_5 edge");
    for (const auto& [e, ids] : on_edge)
        if (ids.size() != 2) return fail(r, "a Z_5 edge does not lie in exactly two triangles");

    const auto e = involution_e_word(5);
    for (int v : zset)
        if (x.find(apply(e, x.vertex(v))) != v) {
            r.witness["moved"] = label(x.vertex(v));
            return fail(r, "e moves a Z_5 vertex");
        }
    Json swaps = Json::array();
    for (const auto& [edge, ids] : on_edge) {
        Json pair = Json::array();
        for (int k = 0; k < 2; ++k) {
            const auto& t = attached[ids[k]];
            const int off = *std::find_if(t.begin(), t.end(), [&](int v) { return !zset.count(v); });
            const auto img = x.find(apply(e, x.vertex(off)));
            const auto& other = attached[ids[1 - k]];
            const int other_off = *std::find_if(other.begin(), other.end(), [&](int v) { return !zset.count(v); });
            if (!img || *img != other_off) return fail(r, "e does not swap the triangles on a Z_5 edge");
            pair.push_back(label(x.vertex(off)));
        }
        swaps.push_back(Json{{"edge", Json::array({label(x.vertex(edge.first)), label(x.vertex(edge.second))})},
                             {"apexes", pair}});
    }
    r.witness["e_swaps"] = swaps;
    return r;
}

static VerificationReport verify_overlap_n5_impl(const ChordId& alpha, int sign) {
    VerificationReport r;
    r.check = "overlap_n5";
    r.params = Json{{"n", 5}, {"alpha", to_json(alpha)}, {"sign", sign}};
    if (!require_chain(r, 5, alpha)) return r;
    const auto& x = cached_X(5);
    const auto t = half_twist(alpha, sign);
    const auto o = overlap(x, image_vertices(x, t));
    r.witness["overlap"] = counts(o);

    const auto a = Curve::from_chord(sphere_model(5), alpha);
    const auto z = build_Zn(5);
    const auto tz = image_vertices(z, t);
    auto key_set = [](const PantsGraphFragment& g, const std::vector<int>& vs) {
        std::set<VertexKey> s;
        for (int v : vs) s.insert(g.key(v));
        return s;
    };
    std::set<VertexKey> zkeys, tzkeys;
    for (int v = 0; v < 5; ++v) {
        zkeys.insert(z.key(v));
        tzkeys.insert(tz.key(v));
    }

    // The Z_5 edge fixed by T: its two vertices contain alpha.
    std::vector<int> fixed_edge;
    for (const auto& v : z.vertices())
        if (v.contains(a)) fixed_edge.push_back(*o.find(v));
    if (fixed_edge.size() != 2 || !o.has_edge(fixed_edge[0], fixed_edge[1]))
        return fail(r, "Z_5 vertices containing alpha do not form an edge of the overlap");
    const std::pair<int, int> hinge{std::min(fixed_edge[0], fixed_edge[1]), std::max(fixed_edge[0], fixed_edge[1])};
    r.witness["shared_edge"] = Json::array({label(o.vertex(hinge.first)), label(o.vertex(hinge.second))});

    std::vector<std::vector<int>> pents;
    for (const auto& cyc : cycles_of_length(o.adjacency(), 5))
        if (cycle_edges(cyc).count(hinge)) pents.push_back(cyc);
    r.witness["alternating_pentagons"] = alternating_pentagons(o).size();
    r.witness["pentagons_on_shared_edge"] = pents.size();
    if (pents.size() != 2) return fail(r, "expected exactly two pentagons through the fixed edge");
    const auto k0 = key_set(o, pents[0]), k1 = key_set(o, pents[1]);
    if (!((k0 == zkeys && k1 == tzkeys) || (k0 == tzkeys && k1 == zkeys)))
        return fail(r, "the pentagons are not Z_5 and its image");
    if (alternating_pentagons(induced(o, pents[0])).size() != 1 || alternating_pentagons(induced(o, pents[1])).size() != 1)
        return fail(r, "a pentagon does not alternate");

    const auto e0 = cycle_edges(pents[0]), e1 = cycle_edges(pents[1]);
    std::vector<std::pair<int, int>> common;
    std::set_intersection(e0.begin(), e0.end(), e1.begin(), e1.end(), std::back_inserter(common));
    if (common.size() != 1) return fail(r, "pentagons do not share exactly one edge");

    std::set<int> config(pents[0].begin(), pents[0].end());
    config.insert(pents[1].begin(), pents[1].end());
    Json both = Json::array();
    for (const auto& tri : cycles_of_length(o.adjacency(), 3)) {
        const auto te = cycle_edges(tri);
        auto meets = [&](const std::set<std::pair<int, int>>& es) {
            return std::any_of(te.begin(), te.end(), [&](const auto& e) { return es.count(e) > 0; });
        };
        if (!meets(e0) || !meets(e1)) continue;
        config.insert(tri.begin(), tri.end());
        Json tj = Json::array();
        for (int v : tri) tj.push_back(label(o.vertex(v)));
        both.push_back(tj);
    }
    r.witness["triangles_on_both"] = both;
    if (both.size() != 4) return fail(r, "expected four triangles attached to both pentagons");
    r.witness["configuration_vertices"] = config.size();
    r.witness["other_vertices"] = o.num_vertices() - config.size();

    // Fixed points of T in the overlap are exactly the vertices containing alpha.
    int fixed = 0;
    for (int v = 0; v < static_cast<int>(o.num_vertices()); ++v) {
        const bool is_fixed = o.find(apply(t, o.vertex(v))) == v;
        if (is_fixed != o.vertex(v).contains(a)) return fail(r, "fixed vertex does not contain alpha");
        fixed += is_fixed;
    }
    r.witness["fixed_vertices"] = fixed;
    return r;
}

static VerificationReport verify_restriction_iso_impl(int n, const ChordId& alpha) {
    VerificationReport r;
    r.check = "restriction_iso";
    r.params = Json{{"n", n}, {"alpha", to_json(alpha)}};
    if (n < 6) {
        r.outcome = Outcome::Skipped;
        r.reason = "needs n >= 6";
        return r;
    }
    const auto a = Curve::from_chord(sphere_model(n), alpha);
    const auto& x = cached_X(n);
    const auto& small = cached_X(n - 1);
    const auto rest = restriction(x, a);
    r.witness["restriction"] = Json{{"vertices", rest.num_vertices()}, {"edges", rest.num_edges()}};
    r.witness["smaller"] = Json{{"vertices", small.num_vertices()}, {"edges", small.num_edges()}};

    const auto h = piece_embedding(n, Multicurve::trusted({a}), n - 1);
    if (!h) {
        Json types = Json::array();
        for (const auto& p : complement(n, Multicurve::trusted({a})).pieces) types.push_back(p.type());
        r.witness["piece_types"] = types;
        return fail(r, "the complement of alpha has no S_{0,n-1} piece");
    }
    Json features = Json::array();
    for (const auto& f : h->features) features.push_back(f);
    r.witness["features"] = features;

    std::vector<int> m(small.num_vertices(), -1);
    std::vector<char> hit(rest.num_vertices(), 0);
    for (int v = 0; v < static_cast<int>(small.num_vertices()); ++v) {
        const auto img = h->map(small.vertex(v), {a});
        const auto w = rest.find(img);
        if (!w) {
            r.witness["vertex"] = label(small.vertex(v));
            r.witness["image"] = label(img);
            return fail(r, "h^alpha sends a vertex outside the restriction");
        }
        if (hit[*w]) return fail(r, "h^alpha is not injective");
        hit[*w] = 1;
        m[v] = *w;
    }
    if (small.num_vertices() != rest.num_vertices()) return fail(r, "h^alpha is not onto the restriction");
    if (!is_isomorphism(small.adjacency(), rest.adjacency(), m)) return fail(r, "h^alpha does not preserve edges");

    // On Z_{n-1} the witness lands on the chord triangulations containing alpha.
    const auto zs = build_Zn(n - 1);
    const auto zr = restriction(build_Zn(n), a);
    std::set<VertexKey> images;
    for (const auto& v : zs.vertices()) {
        const auto img = h->map(v, {a});
        if (!zr.contains(img)) {
            r.witness["vertex"] = label(v);
            return fail(r, "h^alpha sends a Z_{n-1} vertex off Z_n");
        }
        images.insert(img.key());
    }
    if (images.size() != zr.num_vertices()) return fail(r, "h^alpha(Z_{n-1}) misses part of Z_n ∩ P_alpha");
    r.witness["z_images"] = images.size();
    return r;
}

static VerificationReport verify_overlap_contains_impl(int n, const ChordId& alpha, int sign) {
    VerificationReport r;
    r.check = "overlap_contains";
    r.params = Json{{"n", n}, {"alpha", to_json(alpha)}, {"sign", sign}};
    if (n < 6) {
        r.outcome = Outcome::Skipped;
        r.reason = "needs n >= 6";
        return r;
    }
    if (!require_chain(r, n, alpha)) return r;
    const auto a = Curve::from_chord(sphere_model(n), alpha);
    const auto& x = cached_X(n);
    const auto t = half_twist(alpha, sign);
    const auto o = overlap(x, image_vertices(x, t));
    const auto rest = restriction(x, a);
    r.witness["overlap"] = Json{{"vertices", o.num_vertices()}, {"edges", o.num_edges()}};
    r.witness["restriction"] = Json{{"vertices", rest.num_vertices()}, {"edges", rest.num_edges()}};
    if (!is_subgraph(rest, o)) return fail(r, "restriction is not contained in the overlap");
    if (o.num_vertices() <= rest.num_vertices()) return fail(r, "containment is not proper");

    const auto z = build_Zn(n);
    int pi = -1;
    for (int v = 0; v < static_cast<int>(z.num_vertices()) && pi < 0; ++v)
        if (z.vertex(v).contains(a)) pi = v;
    const auto& P = z.vertex(pi);
    const auto alpha2 = flip_partner(P, alpha);
    std::vector<Curve> cs;
    for (const auto& c : P.curves())
        if (!(c == a)) cs.push_back(c);
    cs.push_back(Curve::from_chord(sphere_model(n), alpha2));
    const PantsDecomposition P2(n, cs);
    const auto Q = apply(t, P2);
    r.witness["P"] = label(P);
    r.witness["alpha_prime"] = to_json(alpha2);
    r.witness["Q"] = label(Q);
    if (!o.contains(Q)) return fail(r, "T(P') is not in the overlap");
    if (!adjacent(Q, P)) return fail(r, "T(P') is not adjacent to P");
    if (Q.contains(a)) return fail(r, "T(P') contains alpha");
    return r;
}

static VerificationReport verify_orbit_cover_impl(int n, int trials, int max_word, std::uint64_t seed) {
    VerificationReport r;
    r.check = "orbit_cover";
    r.params = Json{{"n", n}, {"trials", trials}, {"max_word", max_word}, {"seed", seed}};
    const auto rep = orbit_cover_check(n, trials, max_word, seed);
    Json hist = Json::object();
    for (auto [i, c] : rep.intersection_histogram) hist[std::to_string(i)] = c;
    r.witness = Json{{"vertex_pass", rep.vertex_pass}, {"vertex_fail", rep.vertex_fail},
                     {"edge_pass", rep.edge_pass},     {"edge_fail", rep.edge_fail},
                     {"worst_twists", rep.worst_twists}, {"initial_intersections", hist}};
    if (!rep.failures.empty()) r.witness["failures"] = rep.failures;
    if (!rep.passed()) fail(r, "some trials did not normalize into Z_n");
    return r;
}

static VerificationReport verify_farey_impl(int bound, int steps, int cover) {
    VerificationReport r;
    r.check = "farey";
    r.params = Json{{"bound", bound}, {"steps", steps}, {"cover", cover}};
    // Two triangles per edge: the mediant and the difference slope are both
    // adjacent to the ends, and nothing else is.
    std::set<Slope> box;
    for (long long q = 0; q <= bound; ++q)
        for (long long p = -bound; p <= bound; ++p)
            if (std::gcd(p, q) == 1) box.insert(Slope(p, q));
    long long edges = 0;
    for (auto i = box.begin(); i != box.end(); ++i)
        for (auto j = std::next(i); j != box.end(); ++j) {
            if (!farey_adjacent(*i, *j)) continue;
            ++edges;
            const auto [c1, c2] = edge_triangles(*i, *j);
            if (c1 == c2 || !farey_adjacent(c1, *i) || !farey_adjacent(c1, *j) || !farey_adjacent(c2, *i) ||
                !farey_adjacent(c2, *j)) {
                r.witness["edge"] = Json::array({to_json(*i), to_json(*j)});
                return fail(r, "edge does not lie in two triangles");
            }
        }
    r.witness["edges_checked"] = edges;

    const auto stages = farey_exhaustion(standard_triangle(), steps);
    Json sizes = Json::array();
    for (std::size_t s = 0; s < stages.size(); ++s) {
        sizes.push_back(stages[s].vertices.size());
        if (s > 0 && !(stages[s].vertices.size() > stages[s - 1].vertices.size() &&
                       std::includes(stages[s].vertices.begin(), stages[s].vertices.end(),
                                     stages[s - 1].vertices.begin(), stages[s - 1].vertices.end())))
            return fail(r, "stages do not increase strictly");
    }
    r.witness["stage_vertices"] = sizes;
    for (const auto& s : box)
        if (std::llabs(s.p()) <= cover && s.q() <= cover && !stages.back().vertices.count(s)) {
            r.witness["missing"] = to_json(s);
            return fail(r, "slope not reached by the exhaustion");
        }
    return r;
}

VerificationReport verify_z5_pentagon(const CrossPredicate& crosses) {
    return timed([&] { return verify_z5_pentagon_impl(crosses); });
}

VerificationReport verify_x5_shape() {
    return timed([&] { return verify_x5_shape_impl(); });
}

VerificationReport verify_overlap_n5(const ChordId& alpha, int sign) {
    return timed([&] { return verify_overlap_n5_impl(alpha, sign); });
}

VerificationReport verify_restriction_iso(int n, const ChordId& alpha) {
    return timed([&] { return verify_restriction_iso_impl(n, alpha); });
}

VerificationReport verify_overlap_contains(int n, const ChordId& alpha, int sign) {
    return timed([&] { return verify_overlap_contains_impl(n, alpha, sign); });
}

VerificationReport verify_orbit_cover(int n, int trials, int max_word, std::uint64_t seed) {
    return timed([&] { return verify_orbit_cover_impl(n, trials, max_word, seed); });
}

VerificationReport verify_farey(int bound, int steps, int cover) {
    return timed([&] { return verify_farey_impl(bound, steps, cover); });
}

std::vector<VerificationReport> verify_all(int n, std::uint64_t seed, int trials, int max_word) {
    std::vector<VerificationReport> out;
    if (n < 4) throw Error(ErrorKind::InvalidSurface, "n must be at least 4");
    if (n == 4) {
        out.push_back(verify_farey());
        return out;
    }
    if (n == 5) {
        out.push_back(verify_z5_pentagon());
        out.push_back(verify_x5_shape());
        for (const auto& c : chain_curves(5))
            for (int sign : {1, -1}) out.push_back(verify_overlap_n5(c, sign));
    } else {
        for (const auto& c : chain_curves(n)) out.push_back(verify_restriction_iso(n, c));
        for (const auto& c : chain_curves(n))
            for (int sign : {1, -1}) out.push_back(verify_overlap_contains(n, c, sign));
    }
    out.push_back(verify_orbit_cover(n, trials, max_word, seed));
    return out;
}

}  // namespace pantsgraph
