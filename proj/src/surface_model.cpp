#include "pantsgraph/surface_model.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include "pantsgraph/errors.hpp"

namespace pantsgraph {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidSurface: return "invalid-surface";
        case ErrorKind::InvalidChord: return "invalid-chord";
        case ErrorKind::MalformedCoordinates: return "malformed-coordinates";
        case ErrorKind::NotACurve: return "not-a-curve";
        case ErrorKind::InessentialCurve: return "inessential-curve";
        case ErrorKind::ModelMismatch: return "model-mismatch";
        case ErrorKind::InvalidMulticurve: return "invalid-multicurve";
        case ErrorKind::NotAdjacent: return "not-adjacent";
        case ErrorKind::Unsupported: return "unsupported";
        case ErrorKind::BudgetExceeded: return "budget-exceeded";
        case ErrorKind::InvariantViolation: return "internal-invariant-violation";
        case ErrorKind::Parse: return "parse-error";
    }
    return "error";
}

namespace {

int wrap(int k, int n) { return ((k - 1) % n + n) % n + 1; }

void require_surface(int n) {
    if (n < 4) throw Error(ErrorKind::InvalidSurface, "need n >= 4, got " + std::to_string(n));
    if (n > 31) throw Error(ErrorKind::InvalidSurface, "n > 31 is not supported");
}

}  // namespace

int TriangulationSpec::slot(int tri, int edge) const {
    const auto& t = triangles[tri];
    for (int i = 0; i < 3; ++i)
        if (t.edges[i] == edge) return i;
    return -1;
}

int step_from(const TriangulationSpec& t, int step) { return t.edge_tris[step >> 1][step & 1]; }
int step_to(const TriangulationSpec& t, int step) { return t.edge_tris[step >> 1][1 - (step & 1)]; }

ChordId::ChordId(int n, int i, int j) {
    i = wrap(i, n);
    j = wrap(j, n);
    if (i > j) std::swap(i, j);
    const int d = j - i;
    if (d < 2 || d > n - 2)
        throw Error(ErrorKind::InvalidChord,
                    "sides " + std::to_string(i) + "," + std::to_string(j) + " are equal or adjacent");
    i_ = i;
    j_ = j;
}

std::uint32_t ChordId::interval_mask(int) const {
    std::uint32_t m = 0;
    for (int k = i_; k < j_; ++k) m |= 1u << (k - 1);
    return m;
}

std::pair<int, int> ChordId::enclosed_interval(int n) const {
    const int a = j_ - i_;
    if (a <= n - a) return {i_, a};
    return {j_, n - a};
}

bool ChordId::is_chain(int n) const { return j_ - i_ == 2 || j_ - i_ == n - 2; }

ChordId chord_around(int n, int first, int size) { return ChordId(n, first, first + size); }

SphereModel::SphereModel(int n) : n_(n) {
    require_surface(n);
    auto& E = tri_.edges;
    E.resize(static_cast<std::size_t>(3 * n - 6));
    for (int s = 1; s <= n; ++s) E[side_edge(s)] = {s == 1 ? n : s - 1, s, EdgeKind::Side, s};
    for (int k = 3; k <= n - 1; ++k) {
        E[front_diag(k)] = {1, k, EdgeKind::Front, k};
        E[back_diag(k)] = {1, k, EdgeKind::Back, k};
    }

    auto edge_between = [&](bool front, int a, int b) {
        if (a > b) std::swap(a, b);
        if (b == a + 1) return side_edge(b);
        if (a == 1 && b == n) return side_edge(1);
        return front ? front_diag(b) : back_diag(b);
    };
    for (int k = 2; k <= n - 1; ++k) {
        Triangle t;
        t.front = true;
        t.verts = {1, k, k + 1};
        tri_.triangles.push_back(t);
    }
    for (int k = 2; k <= n - 1; ++k) {
        Triangle t;
        t.front = false;
        t.verts = {1, k + 1, k};
        tri_.triangles.push_back(t);
    }
    tri_.edge_tris.assign(E.size(), {-1, -1});
    for (int ti = 0; ti < static_cast<int>(tri_.triangles.size()); ++ti) {
        auto& t = tri_.triangles[ti];
        for (int s = 0; s < 3; ++s) {
            const int a = t.verts[s], b = t.verts[(s + 1) % 3];
            const int e = edge_between(t.front, a, b);
            t.edges[s] = e;
            tri_.edge_tris[e][E[e].u == a ? 0 : 1] = ti;
        }
    }

    // Free generators: g_k crosses the cut edge from puncture 1 to puncture k,
    // positively when turning counterclockwise around puncture 1.
    cuts_.assign(static_cast<std::size_t>(n + 1), {-1, -1, -1});
    edge_gen_.assign(E.size(), 0);
    auto cut_edge_for = [&](int k) {
        if (k == 2) return side_edge(2);
        if (k == n) return side_edge(1);
        return front_diag(k);
    };
    for (int k = 2; k <= n; ++k) edge_gen_[cut_edge_for(k)] = k;
    for (int ti = 0; ti < static_cast<int>(tri_.triangles.size()); ++ti) {
        const auto& t = tri_.triangles[ti];
        for (int s = 0; s < 3; ++s) {
            if (t.verts[s] != 1) continue;
            // Turning counterclockwise around verts[s] leaves through slot s+2.
            const int e = t.edges[(s + 2) % 3];
            const int k = edge_gen_[e];
            if (k == 0) continue;
            const int other = tri_.edge_tris[e][0] == ti ? tri_.edge_tris[e][1] : tri_.edge_tris[e][0];
            cuts_[k] = {e, ti, other};
        }
    }

    // Paths in the dual spanning tree (dual edges of non-cut edges).
    const int T = static_cast<int>(tri_.triangles.size());
    paths_.assign(static_cast<std::size_t>(T) * T, {});
    for (int src = 0; src < T; ++src) {
        std::vector<int> via(T, -2);
        via[src] = -1;
        std::deque<int> q{src};
        while (!q.empty()) {
            const int x = q.front();
            q.pop_front();
            for (int e : tri_.triangles[x].edges) {
                if (edge_gen_[e] != 0) continue;
                const int d = tri_.edge_tris[e][0] == x ? 0 : 1;
                const int y = tri_.edge_tris[e][1 - d];
                if (via[y] != -2) continue;
                via[y] = 2 * e + d;
                q.push_back(y);
            }
        }
        for (int dst = 0; dst < T; ++dst) {
            std::vector<int> rev;
            for (int x = dst; x != src; x = step_from(tri_, via[x])) rev.push_back(via[x]);
            std::reverse(rev.begin(), rev.end());
            paths_[static_cast<std::size_t>(src) * T + dst] = std::move(rev);
        }
    }
}

int SphereModel::side_edge(int side) const { return side - 1; }
int SphereModel::front_diag(int k) const { return n_ + (k - 3); }
int SphereModel::back_diag(int k) const { return n_ + (n_ - 3) + (k - 3); }

ModelPtr sphere_model(int n) {
    static std::mutex mu;
    static std::map<int, ModelPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const SphereModel>(n);
    return slot;
}

std::vector<ChordId> gamma_family(int n) {
    require_surface(n);
    std::vector<ChordId> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (j - i <= n - 2) out.emplace_back(n, i, j);
    return out;
}

std::vector<ChordId> chain_curves(int n) {
    require_surface(n);
    std::vector<ChordId> out;
    for (int m = 1; m <= n; ++m) {
        ChordId c(n, m, m + 2);
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
}

bool chords_cross(const ChordId& a, const ChordId& b) {
    const int i = a.i(), j = a.j(), k = b.i(), l = b.j();
    if (i == k || i == l || j == k || j == l) return false;
    const bool k_in = i < k && k < j;
    const bool l_in = i < l && l < j;
    return k_in != l_in;
}

}  // namespace pantsgraph
