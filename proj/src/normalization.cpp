#include "pantsgraph/normalization.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "pantsgraph/errors.hpp"
#include "pantsgraph/rigid_sets.hpp"

namespace pantsgraph {

bool DualTree::well_formed() const {
    const int N = num_nodes();
    if (N != 2 * n - 2) return false;
    std::size_t degree_sum = 0;
    for (int v = 0; v < N; ++v) {
        const auto d = adj[v].size();
        if (is_leaf(v) ? d != 1 : d != 3) return false;
        degree_sum += d;
    }
    if (degree_sum != 2 * static_cast<std::size_t>(N - 1)) return false;
    return is_connected(adj);
}

DualTree dual_tree(const PantsDecomposition& p) {
    const int n = p.n();
    const auto report = complement(n, p.multicurve());
    DualTree t;
    t.n = n;
    t.adj.assign(static_cast<std::size_t>(n) + report.pieces.size(), {});
    auto link = [&](int a, int b) {
        t.adj[a].push_back(b);
        t.adj[b].push_back(a);
    };
    for (std::size_t pi = 0; pi < report.pieces.size(); ++pi) {
        const int node = n + static_cast<int>(pi);
        for (int k : report.pieces[pi].punctures) link(k - 1, node);
        // Piece pi (pi >= 1) is owned by curve pi-1; the other boundary
        // curves lead to the pieces they own.
        for (int b : report.pieces[pi].boundary) {
            if (static_cast<int>(pi) == b + 1) continue;
            const int other = n + b + 1;
            link(node, other);
            t.edge_curve[{std::min(node, other), std::max(node, other)}] = b;
        }
    }
    for (auto& l : t.adj) std::sort(l.begin(), l.end());
    return t;
}

StandardVertex standard_vertex_from_tree(const DualTree& t) {
    if (!t.well_formed()) throw Error(ErrorKind::InvalidMulticurve, "malformed dual tree");
    const int n = t.n;
    const int N = t.num_nodes();
    std::vector<int> parent(N, -1), min_leaf(N, n + 1);
    // Root at leaf 0 (puncture 1); compute smallest leaf label below each node.
    std::vector<int> order;
    {
        std::vector<int> stack{0};
        std::vector<char> seen(N, 0);
        seen[0] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int w : t.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    stack.push_back(w);
                }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        if (t.is_leaf(v)) min_leaf[v] = v + 1;
        if (parent[v] >= 0) min_leaf[parent[v]] = std::min(min_leaf[parent[v]], min_leaf[v]);
    }

    StandardVertex out;
    out.position.assign(static_cast<std::size_t>(n + 1), 0);
    std::vector<int> first(N, 0), count(N, 0);
    int next = 1;
    std::function<void(int)> dfs = [&](int v) {
        first[v] = next;
        if (t.is_leaf(v)) {
            out.position[v + 1] = next++;
        }
        std::vector<int> kids;
        for (int w : t.adj[v])
            if (w != parent[v]) kids.push_back(w);
        std::sort(kids.begin(), kids.end(), [&](int a, int b) { return min_leaf[a] < min_leaf[b]; });
        for (int w : kids) dfs(w);
        count[v] = next - first[v];
    };
    dfs(0);

    const auto model = sphere_model(n);
    std::vector<std::pair<int, Curve>> by_source;
    for (const auto& [e, curve] : t.edge_curve) {
        const int child = parent[e.first] == e.second ? e.first : e.second;
        const ChordId c = chord_around(n, first[child], count[child]);
        by_source.emplace_back(curve, Curve::from_chord(model, c));
    }
    std::sort(by_source.begin(), by_source.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Curve> cs;
    for (const auto& [idx, c] : by_source) cs.push_back(c);
    out.vertex = PantsDecomposition(n, cs);
    out.curve_to_chord.resize(by_source.size());
    const auto& sorted = out.vertex.curves();
    for (std::size_t k = 0; k < by_source.size(); ++k)
        out.curve_to_chord[by_source[k].first] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), by_source[k].second) - sorted.begin());
    return out;
}

VertexNormalization normalize_vertex(const PantsDecomposition& p) {
    const int n = p.n();
    const auto sv = standard_vertex_from_tree(dual_tree(p));
    VertexNormalization out{sv.vertex, sv.position, {}};
    const auto src = complement(n, p.multicurve());
    const auto dst = complement(n, sv.vertex.multicurve());
    auto signature = [](std::vector<int> punctures, std::vector<int> boundary) {
        std::sort(punctures.begin(), punctures.end());
        std::sort(boundary.begin(), boundary.end());
        return std::make_pair(punctures, boundary);
    };
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> dst_index;
    for (std::size_t k = 0; k < dst.pieces.size(); ++k)
        dst_index[signature(dst.pieces[k].punctures, dst.pieces[k].boundary)] = static_cast<int>(k);
    for (std::size_t k = 0; k < src.pieces.size(); ++k) {
        std::vector<int> ps, bs;
        for (int x : src.pieces[k].punctures) ps.push_back(sv.position[x]);
        for (int b : src.pieces[k].boundary) bs.push_back(sv.curve_to_chord[b]);
        auto it = dst_index.find(signature(ps, bs));
        if (it == dst_index.end()) throw Error(ErrorKind::InvariantViolation, "piece without a counterpart");
        out.pieces.emplace_back(static_cast<int>(k), it->second);
    }
    return out;
}

std::vector<int> split_profile(const PantsDecomposition& p) {
    std::vector<int> out;
    for (const auto& c : p.curves()) {
        const int k = std::popcount(c.inside_mask());
        out.push_back(std::min(k, p.n() - k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_Zn(const PantsDecomposition& p) { return chord_labels(p).has_value(); }

ChordId flip_partner(const PantsDecomposition& p1, const ChordId& u1) {
    const int n = p1.n();
    auto labels = chord_labels(p1);
    if (!labels) throw Error(ErrorKind::InvalidMulticurve, "vertex is not in Z_n");
    std::vector<ChordId> rest;
    for (const auto& c : *labels)
        if (c != u1) rest.push_back(c);
    if (rest.size() != labels->size() - 1) throw Error(ErrorKind::InvalidChord, "chord is not in the vertex");
    std::vector<ChordId> found;
    for (const auto& c : gamma_family(n)) {
        if (c == u1 || std::find(rest.begin(), rest.end(), c) != rest.end()) continue;
        if (std::none_of(rest.begin(), rest.end(), [&](const ChordId& r) { return chords_cross(r, c); }))
            found.push_back(c);
    }
    if (found.size() != 1)
        throw Error(ErrorKind::InvariantViolation,
                    "expected one flip partner, found " + std::to_string(found.size()));
    return found[0];
}

EdgeNormalization normalize_edge(const PantsDecomposition& p1, const PantsDecomposition& p2) {
    const int n = p1.n();
    if (!adjacent(p1, p2)) throw Error(ErrorKind::NotAdjacent, "the two vertices do not differ by an elementary move");
    if (!in_Zn(p1)) throw Error(ErrorKind::InvalidMulticurve, "first vertex must lie in Z_n");
    Curve u1c, u2;
    for (const auto& c : p1.curves())
        if (!p2.contains(c)) u1c = c;
    for (const auto& c : p2.curves())
        if (!p1.contains(c)) u2 = c;

    EdgeNormalization out;
    out.u1 = *as_chord(u1c);
    out.alpha = flip_partner(p1, out.u1);
    const auto alpha = Curve::from_chord(sphere_model(n), out.alpha);
    std::vector<Generator> word;

    int i = intersection_number(u2, alpha);
    out.initial_intersection = i;
    out.intersections.push_back(i);
    const int limit = i / 2;
    while (i > 2) {
        if (out.twists >= limit)
            throw Error(ErrorKind::InvariantViolation, "twist loop did not reach intersection 0 or 2");
        int best = 0, best_i = i;
        Curve best_c;
        for (int sign : {1, -1}) {
            auto cand = apply(dehn_twist_word(n, out.u1, sign), u2);
            const int ci = intersection_number(cand, alpha);
            if (ci < best_i) {
                best = sign;
                best_i = ci;
                best_c = cand;
            }
        }
        if (best == 0 || best_i >= i)
            throw Error(ErrorKind::InvariantViolation, "no twist direction reduces the intersection number");
        if (i - best_i != 4)
            throw Error(ErrorKind::InvariantViolation,
                        "twist reduced the intersection number by " + std::to_string(i - best_i) + ", not 4");
        const auto twist = dehn_twist_word(n, out.u1, best);
        word.insert(word.end(), twist.gens().begin(), twist.gens().end());
        u2 = best_c;
        i = best_i;
        ++out.twists;
        out.intersections.push_back(i);
    }
    if (i == 0) {
        if (!(u2 == alpha)) throw Error(ErrorKind::InvariantViolation, "disjoint curve in the piece is not alpha");
    } else {
        // The half twist also reflects the curves nested inside u1, so the
        // image of u2' is the flip partner of u1 in the reflected vertex.
        for (int sign : {1, -1}) {
            const auto h = half_twist_interval_word(n, out.u1, sign);
            const auto image = apply(h, u2);
            if (!as_chord(image)) continue;
            out.half_twist_sign = sign;
            out.half_twist_hits_alpha = image == alpha;
            word.insert(word.end(), h.gens().begin(), h.gens().end());
            break;
        }
        if (out.half_twist_sign == 0) throw Error(ErrorKind::InvariantViolation, "no half twist maps the curve into Gamma_n");
    }
    out.word = MappingClassWord(n, std::move(word));
    out.p1 = apply(out.word, p1);
    out.p2 = apply(out.word, p2);
    if (!in_Zn(out.p1) || !in_Zn(out.p2) || !adjacent(out.p1, out.p2))
        throw Error(ErrorKind::InvariantViolation, "normalized edge is not in Z_n");
    return out;
}

Curve random_neighbour(int n, const std::vector<Curve>& rest, const Curve& u1, int k) {
    const auto h = piece_embedding(n, Multicurve::trusted(rest), 4);
    if (!h) throw Error(ErrorKind::InvalidMulticurve, "complement has no S_{0,4} piece");
    const auto small = sphere_model(4);
    ChordId a(4, 1, 3), b(4, 2, 4);
    if (!(h->map(Curve::from_chord(small, a)) == u1)) std::swap(a, b);
    if (!(h->map(Curve::from_chord(small, a)) == u1))
        throw Error(ErrorKind::InvariantViolation, "curve is not a boundary of the S_{0,4} piece");
    Curve c = Curve::from_chord(small, b);
    const auto g = half_twist(a, k >= 0 ? 1 : -1);
    for (int s = 0; s < (k >= 0 ? k : -k); ++s) c = apply(g, c);
    return h->map(c);
}

MappingClassWord random_word(int n, int max_len, std::mt19937_64& rng) {
    const auto chains = chain_curves(n);
    const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_len)));
    std::vector<Generator> gens;
    for (int k = 0; k < len; ++k)
        gens.push_back(half_twist(chains[rng() % chains.size()], rng() % 2 ? 1 : -1));
    return MappingClassWord(n, std::move(gens));
}

OrbitReport orbit_cover_check(int n, int trials, int max_word, std::uint64_t seed) {
    if (n < 5) throw Error(ErrorKind::Unsupported, "orbit check needs n >= 5");
    OrbitReport r;
    r.n = n;
    r.trials = trials;
    r.max_word = max_word;
    r.seed = seed;
    std::mt19937_64 rng(seed);
    const auto zn = build_Zn(n);
    const auto model = sphere_model(n);
    auto note = [&](const std::string& what) {
        if (r.failures.size() < 10) r.failures.push_back(what);
    };
    for (int t = 0; t < trials; ++t) {
        // Vertex trial.
        {
            const auto& v = zn.vertex(static_cast<int>(rng() % zn.num_vertices()));
            const auto w = random_word(n, max_word, rng);
            try {
                const auto pv = PantsDecomposition(n, apply(w, v).curves());
                const auto tree = dual_tree(pv);
                const auto norm = normalize_vertex(pv);
                if (tree.well_formed() && in_Zn(norm.standard) && split_profile(pv) == split_profile(norm.standard))
                    ++r.vertex_pass;
                else {
                    ++r.vertex_fail;
                    note("vertex trial " + std::to_string(t) + ": normalized vertex failed checks");
                }
            } catch (const Error& e) {
                ++r.vertex_fail;
                note("vertex trial " + std::to_string(t) + ": " + e.what());
            }
        }
        // Edge trial: p2 replaces u1 by a half-twist image of its flip partner.
        {
            const auto& p1 = zn.vertex(static_cast<int>(rng() % zn.num_vertices()));
            const auto labels = *chord_labels(p1);
            const auto u1 = labels[rng() % labels.size()];
            const int span = 2 * std::max(1, max_word) + 1;
            const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(span)) - std::max(1, max_word);
            try {
                const auto u1c = Curve::from_chord(model, u1);
                std::vector<Curve> cs;
                for (const auto& c : p1.curves())
                    if (!(c == u1c)) cs.push_back(c);
                cs.push_back(random_neighbour(n, cs, u1c, k));
                const PantsDecomposition p2(n, cs);
                const auto e = normalize_edge(p1, p2);
                ++r.intersection_histogram[e.initial_intersection];
                r.worst_twists = std::max(r.worst_twists, e.twists);
                bool drops = true;
                for (std::size_t s = 1; s < e.intersections.size(); ++s)
                    drops = drops && e.intersections[s - 1] - e.intersections[s] == 4;
                if (drops && adjacent(e.p1, e.p2) && zn.contains(e.p1) && zn.contains(e.p2))
                    ++r.edge_pass;
                else {
                    ++r.edge_fail;
                    note("edge trial " + std::to_string(t) + ": normalized edge failed checks");
                }
            } catch (const Error& e) {
                ++r.edge_fail;
                note("edge trial " + std::to_string(t) + ": " + e.what());
            }
        }
    }
    return r;
}

}  // namespace pantsgraph
