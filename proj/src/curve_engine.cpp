#include "pantsgraph/curve_engine.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>

#include "pantsgraph/errors.hpp"
#include "pantsgraph/free_group.hpp"

namespace pantsgraph {

namespace {

int dual_step(const TriangulationSpec& t, int edge, int from_tri) {
    return 2 * edge + (t.edge_tris[edge][0] == from_tri ? 0 : 1);
}

void validate_coords(const SphereModel& model, std::span<const int> coords) {
    if (static_cast<int>(coords.size()) != model.num_edges())
        throw Error(ErrorKind::MalformedCoordinates,
                    "expected " + std::to_string(model.num_edges()) + " coordinates, got " +
                        std::to_string(coords.size()));
    for (int x : coords)
        if (x < 0) throw Error(ErrorKind::MalformedCoordinates, "negative coordinate");
    const auto& tri = model.triangulation();
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        const auto& e = tri.triangles[t].edges;
        const int a = coords[e[0]], b = coords[e[1]], c = coords[e[2]];
        if ((a + b + c) % 2 != 0)
            throw Error(ErrorKind::MalformedCoordinates, "odd weight sum in triangle " + std::to_string(t));
        if (a > b + c || b > a + c || c > a + b)
            throw Error(ErrorKind::MalformedCoordinates,
                        "triangle inequality fails in triangle " + std::to_string(t));
    }
}

// Traces every component of a normal multicurve; each component is returned
// as its cyclic sequence of dual steps, starting at the lowest (edge, position).
std::vector<std::vector<int>> trace_components(const SphereModel& model, std::span<const int> coords) {
    validate_coords(model, coords);
    const auto& tri = model.triangulation();
    const int E = model.num_edges();
    std::vector<int> offset(E + 1, 0);
    for (int e = 0; e < E; ++e) offset[e + 1] = offset[e] + coords[e];
    std::vector<char> seen(static_cast<std::size_t>(offset[E]), 0);

    std::vector<std::vector<int>> out;
    for (int e0 = 0; e0 < E; ++e0) {
        for (int g0 = 0; g0 < coords[e0]; ++g0) {
            if (seen[offset[e0] + g0]) continue;
            std::vector<int> walk;
            int e = e0, g = g0, d = 0;
            while (true) {
                seen[offset[e] + g] = 1;
                walk.push_back(2 * e + d);
                const int t = tri.edge_tris[e][1 - d];
                // t traverses e as u->v iff d == 1.
                const int x = coords[e];
                const int p = d == 1 ? g : x - 1 - g;
                const auto& T = tri.triangles[t];
                const int j = tri.slot(t, e);
                const int w[3] = {coords[T.edges[0]], coords[T.edges[1]], coords[T.edges[2]]};
                const int cj = (w[(j + 2) % 3] + w[j] - w[(j + 1) % 3]) / 2;
                int exit_slot, q;
                if (p < cj) {
                    exit_slot = (j + 2) % 3;
                    q = w[exit_slot] - 1 - p;
                } else {
                    exit_slot = (j + 1) % 3;
                    q = x - 1 - p;
                }
                const int e2 = T.edges[exit_slot];
                const int d2 = tri.edge_tris[e2][0] == t ? 0 : 1;
                const int g2 = d2 == 0 ? q : coords[e2] - 1 - q;
                if (e2 == e0 && g2 == g0) {
                    if (d2 != 0) throw Error(ErrorKind::InvariantViolation, "inconsistent trace direction");
                    break;
                }
                e = e2;
                g = g2;
                d = d2;
            }
            out.push_back(std::move(walk));
        }
    }
    return out;
}

std::vector<int> chord_coords(const SphereModel& model, const ChordId& c) {
    const int n = model.n();
    std::vector<int> coords(static_cast<std::size_t>(model.num_edges()), 0);
    coords[model.side_edge(c.i())] = 1;
    coords[model.side_edge(c.j())] = 1;
    for (int k = 3; k <= n - 1; ++k) {
        const bool i_in = 2 <= c.i() && c.i() <= k;
        const bool j_in = 2 <= c.j() && c.j() <= k;
        if (i_in != j_in) {
            coords[model.front_diag(k)] = 1;
            coords[model.back_diag(k)] = 1;
        }
    }
    return coords;
}

const std::map<std::vector<int>, ChordId>& chord_table(int n) {
    static std::mutex mu;
    static std::map<int, std::map<std::vector<int>, ChordId>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto& table = cache[n];
    const auto model = sphere_model(n);
    for (const auto& c : gamma_family(n)) table.emplace(chord_coords(*model, c), c);
    return table;
}

bool ccw_before(const TriangulationSpec& t, int tri, int shared, int a, int b) {
    const int s = t.slot(tri, shared);
    const int da = (t.slot(tri, a) - s + 3) % 3;
    const int db = (t.slot(tri, b) - s + 3) % 3;
    return da < db;
}

}  // namespace

std::size_t CurveHash::operator()(const Curve& c) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : c.coords()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
}

int count_components(const SphereModel& model, std::span<const int> coords) {
    return static_cast<int>(trace_components(model, coords).size());
}

std::vector<int> walk_from_word(const SphereModel& model, std::span<const int> w) {
    const auto& tri = model.triangulation();
    std::vector<int> steps;
    steps.reserve(w.size());
    for (int x : w) {
        const auto& cut = model.cut(x > 0 ? x : -x);
        steps.push_back(dual_step(tri, cut.edge, x > 0 ? cut.from : cut.to));
    }
    std::vector<int> walk;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        walk.push_back(steps[i]);
        const int next = steps[(i + 1) % steps.size()];
        const auto& path = model.tree_path(step_to(tri, steps[i]), step_from(tri, next));
        walk.insert(walk.end(), path.begin(), path.end());
    }
    return walk;
}

std::vector<int> word_from_walk(const SphereModel& model, std::span<const int> walk) {
    const auto& tri = model.triangulation();
    std::vector<int> w;
    for (int s : walk) {
        const int k = model.cut_generator(step_edge(s));
        if (k == 0) continue;
        w.push_back(step_from(tri, s) == model.cut(k).from ? k : -k);
    }
    return w;
}

std::vector<int> coords_from_walk(const SphereModel& model, std::span<const int> walk) {
    std::vector<int> coords(static_cast<std::size_t>(model.num_edges()), 0);
    for (int s : walk) ++coords[step_edge(s)];
    return coords;
}

Curve Curve::build(ModelPtr model, std::vector<int> word, std::vector<int> walk) {
    const int n = model->n();
    std::vector<int> exponent(static_cast<std::size_t>(n + 1), 0);
    for (int x : word) exponent[x > 0 ? x : -x] += x > 0 ? 1 : -1;
    std::uint32_t inside = 0;
    for (int k = 2; k <= n; ++k)
        if (exponent[k] != 0) inside |= 1u << (k - 1);
    const int size = std::popcount(inside);
    if (size < 2 || size > n - 2)
        throw Error(ErrorKind::InessentialCurve,
                    size == 0 ? "curve is null-homotopic" : "curve is peripheral");
    auto d = std::make_shared<Data>();
    d->coords = coords_from_walk(*model, walk);
    d->model = std::move(model);
    d->word = std::move(word);
    d->walk = std::move(walk);
    d->inside = inside;
    return Curve(std::move(d));
}

Curve Curve::from_coords(ModelPtr model, std::vector<int> coords) {
    auto comps = trace_components(*model, coords);
    if (comps.empty()) throw Error(ErrorKind::InessentialCurve, "zero coordinates");
    if (comps.size() > 1)
        throw Error(ErrorKind::NotACurve, std::to_string(comps.size()) + " components");
    auto word = word_from_walk(*model, comps.front());
    return build(std::move(model), std::move(word), std::move(comps.front()));
}

Curve Curve::from_word(ModelPtr model, std::span<const int> word) {
    auto w = free_group::cyclic_reduce(word);
    auto walk = walk_from_word(*model, w);
    return build(std::move(model), std::move(w), std::move(walk));
}

Curve Curve::from_chord(ModelPtr model, const ChordId& chord) {
    auto coords = chord_coords(*model, chord);
    return from_coords(std::move(model), std::move(coords));
}

Curve canonicalize(ModelPtr model, std::vector<int> raw_coords) {
    return Curve::from_coords(std::move(model), std::move(raw_coords));
}

std::optional<ChordId> as_chord(const Curve& c) {
    const auto& table = chord_table(c.n());
    auto it = table.find(c.coords());
    if (it == table.end()) return std::nullopt;
    return it->second;
}

int intersection_number_capped(const Curve& a, const Curve& b, int cap) {
    if (a.n() != b.n()) throw Error(ErrorKind::ModelMismatch, "curves on different surfaces");
    const auto& tri = a.model()->triangulation();
    const auto& A = a.walk();
    const int p = static_cast<int>(A.size());
    const int q = b.length();
    if (p == 0 || q == 0) return 0;

    std::vector<std::vector<int>> where(static_cast<std::size_t>(2 * a.model()->num_edges()));
    int count = 0;
    for (int orient = 0; orient < 2; ++orient) {
        std::vector<int> B = b.walk();
        if (orient == 1) {
            std::reverse(B.begin(), B.end());
            for (int& s : B) s = step_reverse(s);
        }
        for (auto& v : where) v.clear();
        for (int j = 0; j < q; ++j) where[B[j]].push_back(j);
        for (int i = 0; i < p; ++i) {
            const int prev_a = A[(i + p - 1) % p];
            for (int j : where[A[i]]) {
                const int prev_b = B[(j + q - 1) % q];
                if (prev_a == prev_b) continue;
                int len = 1;
                while (len < p + q && A[(i + len) % p] == B[(j + len) % q]) ++len;
                if (len >= p + q) continue;  // parallel copies never cross
                const int u = step_from(tri, A[i]);
                const int v = step_to(tri, A[(i + len - 1) % p]);
                const bool at_start = ccw_before(tri, u, step_edge(A[i]), step_edge(prev_a), step_edge(prev_b));
                const bool at_end = ccw_before(tri, v, step_edge(A[(i + len - 1) % p]),
                                               step_edge(A[(i + len) % p]), step_edge(B[(j + len) % q]));
                if (at_start == at_end && ++count > cap) return count;
            }
        }
    }
    return count;
}

int intersection_number(const Curve& a, const Curve& b) {
    return intersection_number_capped(a, b, std::numeric_limits<int>::max() - 1);
}

Multicurve::Multicurve(std::vector<Curve> curves) : curves_(std::move(curves)) {
    std::sort(curves_.begin(), curves_.end());
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        if (!curves_[i].valid()) throw Error(ErrorKind::InvalidMulticurve, "empty curve handle");
        if (curves_[i].n() != curves_[0].n()) throw Error(ErrorKind::ModelMismatch, "mixed surfaces");
        if (i > 0 && curves_[i] == curves_[i - 1])
            throw Error(ErrorKind::InvalidMulticurve, "duplicate curve");
    }
    for (std::size_t i = 0; i < curves_.size(); ++i)
        for (std::size_t j = i + 1; j < curves_.size(); ++j)
            if (intersection_number_capped(curves_[i], curves_[j], 0) != 0)
                throw Error(ErrorKind::InvalidMulticurve, "curves intersect");
}

Multicurve Multicurve::trusted(std::vector<Curve> curves) {
    Multicurve m;
    m.curves_ = std::move(curves);
    std::sort(m.curves_.begin(), m.curves_.end());
    return m;
}

bool Multicurve::contains(const Curve& c) const {
    return std::binary_search(curves_.begin(), curves_.end(), c);
}

int deficiency(int n, const Multicurve& q) { return (n - 3) - static_cast<int>(q.size()); }

ComplementReport complement(int n, const Multicurve& q) {
    const auto& cs = q.curves();
    const std::size_t m = cs.size();
    // Disjoint separating curves have nested or disjoint inside sets.
    std::vector<int> parent(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        const auto a = cs[i].inside_mask();
        int best = -1;
        for (std::size_t j = 0; j < m; ++j) {
            const auto b = cs[j].inside_mask();
            if (i == j || (a & b) != a || a == b) continue;
            if (best < 0 || std::popcount(b) < std::popcount(cs[best].inside_mask())) best = static_cast<int>(j);
        }
        parent[i] = best;
    }
    auto build_piece = [&](int owner) {
        ComplementPiece piece;
        std::uint32_t region = owner < 0 ? ((n >= 32 ? 0xffffffffu : (1u << n) - 1u)) : cs[owner].inside_mask();
        if (owner >= 0) piece.boundary.push_back(owner);
        for (std::size_t c = 0; c < m; ++c) {
            if (parent[c] != owner) continue;
            piece.boundary.push_back(static_cast<int>(c));
            region &= ~cs[c].inside_mask();
        }
        std::sort(piece.boundary.begin(), piece.boundary.end());
        for (int k = 1; k <= n; ++k)
            if (region & (1u << (k - 1))) piece.punctures.push_back(k);
        return piece;
    };
    ComplementReport report;
    report.pieces.push_back(build_piece(-1));
    for (std::size_t c = 0; c < m; ++c) report.pieces.push_back(build_piece(static_cast<int>(c)));
    for (std::size_t i = 0; i < report.pieces.size(); ++i)
        if (report.pieces[i].type() >= 4) report.nontrivial.push_back(i);
    return report;
}

bool is_pants_decomposition(int n, const Multicurve& q) {
    return static_cast<int>(q.size()) == n - 3 && complement(n, q).nontrivial.empty();
}

PantsDecomposition::PantsDecomposition(int n, std::vector<Curve> curves) : n_(n), curves_(std::move(curves)) {
    for (const auto& c : curves_.curves())
        if (c.n() != n) throw Error(ErrorKind::ModelMismatch, "curve on a different surface");
    if (!is_pants_decomposition(n, curves_))
        throw Error(ErrorKind::InvalidMulticurve, "not a pants decomposition");
}

PantsDecomposition PantsDecomposition::trusted(int n, std::vector<Curve> curves) {
    PantsDecomposition p;
    p.n_ = n;
    p.curves_ = Multicurve::trusted(std::move(curves));
    return p;
}

std::vector<int> PantsDecomposition::key() const {
    std::vector<int> k;
    for (const auto& c : curves()) k.insert(k.end(), c.coords().begin(), c.coords().end());
    return k;
}

PantsDecomposition pants_from_chords(int n, std::span<const ChordId> chords) {
    const auto model = sphere_model(n);
    std::vector<Curve> cs;
    for (const auto& c : chords) cs.push_back(Curve::from_chord(model, c));
    return PantsDecomposition(n, std::move(cs));
}

}  // namespace pantsgraph
