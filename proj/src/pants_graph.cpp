#include "pantsgraph/pants_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pantsgraph/errors.hpp"

namespace pantsgraph {

std::size_t KeyHash::operator()(const std::vector<int>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : k) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 1099511628211ull;
    return h;
}

std::vector<std::pair<int, int>> PantsGraphFragment::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges_);
    for (int a = 0; a < static_cast<int>(adj_.size()); ++a)
        for (int b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

std::optional<int> PantsGraphFragment::find(const PantsDecomposition& p) const { return find_key(p.key()); }

std::optional<int> PantsGraphFragment::find_key(const VertexKey& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool PantsGraphFragment::has_edge(int a, int b) const {
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int PantsGraphFragment::add_vertex(const PantsDecomposition& p) {
    if (n_ == 0) n_ = p.n();
    if (p.n() != n_) throw Error(ErrorKind::ModelMismatch, "vertex on a different surface");
    auto k = p.key();
    auto [it, inserted] = index_.emplace(k, static_cast<int>(vertices_.size()));
    if (inserted) {
        vertices_.push_back(p);
        keys_.push_back(std::move(k));
        adj_.emplace_back();
    }
    return it->second;
}

void PantsGraphFragment::add_edge(int a, int b) {
    if (a == b) throw Error(ErrorKind::InvariantViolation, "self-loop");
    auto& la = adj_[a];
    auto pos = std::lower_bound(la.begin(), la.end(), b);
    if (pos != la.end() && *pos == b) return;
    la.insert(pos, b);
    auto& lb = adj_[b];
    lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
    ++num_edges_;
}

void PantsGraphFragment::recompute_edges() {
    for (auto& l : adj_) l.clear();
    num_edges_ = 0;

    // Intern curves so intersection tests are cached per pair.
    std::unordered_map<std::vector<int>, int, KeyHash> curve_id;
    std::vector<const Curve*> curves;
    std::vector<std::vector<int>> vids(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        for (const auto& c : vertices_[v].curves()) {
            auto [it, inserted] = curve_id.emplace(c.coords(), static_cast<int>(curves.size()));
            if (inserted) curves.push_back(&c);
            vids[v].push_back(it->second);
        }
    }
    std::unordered_map<long long, bool> twice;
    auto meet_twice = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        const long long key = static_cast<long long>(a) * static_cast<long long>(curves.size()) + b;
        auto it = twice.find(key);
        if (it != twice.end()) return it->second;
        const bool r = intersection_number_capped(*curves[a], *curves[b], 2) == 2;
        twice.emplace(key, r);
        return r;
    };

    // Vertices differing by one curve share exactly one (n-4)-subset.
    std::unordered_map<std::vector<int>, std::vector<std::pair<int, int>>, KeyHash> buckets;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        const auto& ids = vids[v];
        for (std::size_t drop = 0; drop < ids.size(); ++drop) {
            std::vector<int> rest;
            rest.reserve(ids.size() - 1);
            for (std::size_t t = 0; t < ids.size(); ++t)
                if (t != drop) rest.push_back(ids[t]);
            std::sort(rest.begin(), rest.end());
            buckets[rest].emplace_back(static_cast<int>(v), ids[drop]);
        }
    }
    for (const auto& [rest, members] : buckets)
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y)
                if (members[x].second != members[y].second && meet_twice(members[x].second, members[y].second))
                    add_edge(members[x].first, members[y].first);
}

bool adjacent(const PantsDecomposition& p1, const PantsDecomposition& p2) {
    if (p1.n() != p2.n()) throw Error(ErrorKind::ModelMismatch, "pants decompositions on different surfaces");
    std::vector<Curve> only1, only2;
    for (const auto& c : p1.curves())
        if (!p2.contains(c)) only1.push_back(c);
    for (const auto& c : p2.curves())
        if (!p1.contains(c)) only2.push_back(c);
    if (only1.size() != 1 || only2.size() != 1) return false;
    return intersection_number_capped(only1[0], only2[0], 2) == 2;
}

std::vector<std::vector<ChordId>> noncrossing_chord_sets(int n, const CrossPredicate& crosses) {
    const auto chords = gamma_family(n);
    std::vector<std::vector<ChordId>> out;
    std::vector<ChordId> cur;
    const std::size_t target = static_cast<std::size_t>(n - 3);
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == target) {
            out.push_back(cur);
            return;
        }
        if (chords.size() - start < target - cur.size()) return;
        for (std::size_t t = start; t < chords.size(); ++t) {
            bool ok = true;
            for (const auto& c : cur)
                if (crosses(c, chords[t])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(chords[t]);
            rec(t + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

PantsGraphFragment build_Zn(int n, const CrossPredicate& crosses) {
    const auto model = sphere_model(n);
    std::map<ChordId, Curve> curve_of;
    for (const auto& c : gamma_family(n)) curve_of.emplace(c, Curve::from_chord(model, c));
    PantsGraphFragment g(n);
    for (const auto& set : noncrossing_chord_sets(n, crosses)) {
        std::vector<Curve> cs;
        for (const auto& c : set) cs.push_back(curve_of.at(c));
        g.add_vertex(PantsDecomposition::trusted(n, std::move(cs)));
    }
    g.recompute_edges();
    return g;
}

PantsGraphFragment induced(const PantsGraphFragment& g, const std::vector<int>& vertices) {
    PantsGraphFragment out(g.n());
    std::vector<int> local(g.num_vertices(), -1);
    for (int v : vertices) local[v] = out.add_vertex(g.vertex(v));
    for (int v : vertices)
        for (int w : g.adjacency()[v])
            if (local[w] >= 0 && v < w) out.add_edge(local[v], local[w]);
    return out;
}

PantsGraphFragment restriction(const PantsGraphFragment& g, const Curve& alpha) {
    std::vector<int> keep;
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v)
        if (g.vertex(v).contains(alpha)) keep.push_back(v);
    return induced(g, keep);
}

PantsGraphFragment overlap(const PantsGraphFragment& g1, const PantsGraphFragment& g2) {
    std::vector<int> keep;
    for (int v = 0; v < static_cast<int>(g1.num_vertices()); ++v)
        if (g2.find_key(g1.key(v))) keep.push_back(v);
    return induced(g1, keep);
}

bool is_subgraph(const PantsGraphFragment& a, const PantsGraphFragment& b) {
    std::vector<int> image(a.num_vertices());
    for (int v = 0; v < static_cast<int>(a.num_vertices()); ++v) {
        auto w = b.find_key(a.key(v));
        if (!w) return false;
        image[v] = *w;
    }
    for (auto [x, y] : a.edges())
        if (!b.has_edge(image[x], image[y])) return false;
    return true;
}

PantsGraphFragment merged(const PantsGraphFragment& a, const PantsGraphFragment& b) {
    PantsGraphFragment out(a.n() ? a.n() : b.n());
    for (const auto& p : a.vertices()) out.add_vertex(p);
    for (const auto& p : b.vertices()) out.add_vertex(p);
    out.recompute_edges();
    return out;
}

bool is_connected(const AdjacencyList& g) {
    if (g.empty()) return true;
    std::vector<char> seen(g.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.size();
}

namespace {

int triangles_at(const AdjacencyList& g, int v) {
    int t = 0;
    for (int a : g[v])
        for (int b : g[v])
            if (a < b && std::binary_search(g[a].begin(), g[a].end(), b)) ++t;
    return t;
}

std::vector<std::vector<int>> invariants(const AdjacencyList& g) {
    std::vector<std::vector<int>> inv(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        std::vector<int> nd;
        for (int w : g[v]) nd.push_back(static_cast<int>(g[w].size()));
        std::sort(nd.begin(), nd.end());
        inv[v].push_back(static_cast<int>(g[v].size()));
        inv[v].push_back(triangles_at(g, static_cast<int>(v)));
        inv[v].insert(inv[v].end(), nd.begin(), nd.end());
    }
    return inv;
}

AdjacencyList sorted_copy(const AdjacencyList& g) {
    AdjacencyList s = g;
    for (auto& l : s) std::sort(l.begin(), l.end());
    return s;
}

}  // namespace

bool is_isomorphism(const AdjacencyList& g1, const AdjacencyList& g2, const std::vector<int>& m) {
    if (g1.size() != g2.size() || m.size() != g1.size()) return false;
    std::vector<char> hit(g2.size(), 0);
    for (int x : m) {
        if (x < 0 || x >= static_cast<int>(g2.size()) || hit[x]) return false;
        hit[x] = 1;
    }
    const auto s2 = sorted_copy(g2);
    std::size_t e1 = 0, e2 = 0;
    for (const auto& l : g1) e1 += l.size();
    for (const auto& l : g2) e2 += l.size();
    if (e1 != e2) return false;
    for (std::size_t v = 0; v < g1.size(); ++v)
        for (int w : g1[v])
            if (!std::binary_search(s2[m[v]].begin(), s2[m[v]].end(), m[w])) return false;
    return true;
}

std::optional<std::vector<int>> graph_isomorphic(const AdjacencyList& a, const AdjacencyList& b) {
    if (a.size() > kIsomorphismVertexCap || b.size() > kIsomorphismVertexCap)
        throw Error(ErrorKind::Unsupported, "graph too large for isomorphism testing");
    if (a.size() != b.size()) return std::nullopt;
    const auto g1 = sorted_copy(a);
    const auto g2 = sorted_copy(b);
    std::size_t e1 = 0, e2 = 0;
    for (const auto& l : g1) e1 += l.size();
    for (const auto& l : g2) e2 += l.size();
    if (e1 != e2) return std::nullopt;
    const std::size_t N = g1.size();
    if (N == 0) return std::vector<int>{};

    const auto inv1 = invariants(g1);
    const auto inv2 = invariants(g2);
    {
        auto s1 = inv1, s2 = inv2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    // Visit order: BFS within components so most vertices have a mapped neighbour.
    std::vector<int> order, anchor(N, -1);
    {
        std::vector<char> seen(N, 0);
        for (std::size_t s = 0; s < N; ++s) {
            if (seen[s]) continue;
            seen[s] = 1;
            std::vector<int> queue{static_cast<int>(s)};
            for (std::size_t h = 0; h < queue.size(); ++h) {
                const int v = queue[h];
                order.push_back(v);
                for (int w : g1[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        anchor[w] = v;
                        queue.push_back(w);
                    }
            }
        }
    }

    std::vector<int> m(N, -1), used_by(N, -1);
    std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
        if (depth == N) return true;
        const int v = order[depth];
        const std::vector<int>* pool = nullptr;
        std::vector<int> all;
        if (anchor[v] >= 0) {
            pool = &g2[m[anchor[v]]];
        } else {
            all.resize(N);
            for (std::size_t t = 0; t < N; ++t) all[t] = static_cast<int>(t);
            pool = &all;
        }
        for (int x : *pool) {
            if (used_by[x] >= 0 || inv1[v] != inv2[x]) continue;
            bool ok = true;
            for (int w : g1[v]) {
                if (m[w] >= 0 && !std::binary_search(g2[x].begin(), g2[x].end(), m[w])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            // Mapped non-neighbours of v must be non-neighbours of x.
            int mapped_nbrs = 0;
            for (int w : g1[v])
                if (m[w] >= 0) ++mapped_nbrs;
            int mapped_nbrs_x = 0;
            for (int y : g2[x])
                if (used_by[y] >= 0) ++mapped_nbrs_x;
            if (mapped_nbrs != mapped_nbrs_x) continue;
            m[v] = x;
            used_by[x] = v;
            if (rec(depth + 1)) return true;
            m[v] = -1;
            used_by[x] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return m;
}

std::optional<std::vector<int>> graph_isomorphic(const PantsGraphFragment& g1, const PantsGraphFragment& g2) {
    return graph_isomorphic(g1.adjacency(), g2.adjacency());
}

std::vector<std::vector<int>> cycles_of_length(const AdjacencyList& raw, int k) {
    if (k < 3 || k > 5) throw Error(ErrorKind::Unsupported, "cycle length must be 3, 4 or 5");
    const auto g = sorted_copy(raw);
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> on(g.size(), 0);
    std::function<void(int)> dfs = [&](int v) {
        if (static_cast<int>(path.size()) == k) {
            const int s = path.front();
            if (std::binary_search(g[v].begin(), g[v].end(), s) && path[1] < path.back()) out.push_back(path);
            return;
        }
        for (int w : g[v]) {
            if (w <= path.front() || on[w]) continue;
            on[w] = 1;
            path.push_back(w);
            dfs(w);
            path.pop_back();
            on[w] = 0;
        }
    };
    for (int s = 0; s < static_cast<int>(g.size()); ++s) {
        path = {s};
        on[s] = 1;
        dfs(s);
        on[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

AdjacencyList cycle_graph(int k) {
    AdjacencyList g(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) {
        g[v].push_back((v + 1) % k);
        g[v].push_back((v + k - 1) % k);
        std::sort(g[v].begin(), g[v].end());
    }
    return g;
}

std::optional<std::vector<ChordId>> chord_labels(const PantsDecomposition& p) {
    std::vector<ChordId> out;
    for (const auto& c : p.curves()) {
        auto ch = as_chord(c);
        if (!ch) return std::nullopt;
        out.push_back(*ch);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_dot(const PantsGraphFragment& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
        os << "  v" << v << " [label=\"";
        if (auto labels = chord_labels(g.vertex(v))) {
            for (std::size_t t = 0; t < labels->size(); ++t)
                os << (t ? " " : "") << "a" << (*labels)[t].i() << "," << (*labels)[t].j();
        } else {
            os << std::hex << KeyHash{}(g.key(v)) << std::dec;
        }
        os << "\"];\n";
    }
    for (auto [a, b] : g.edges()) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace pantsgraph
