#include "pantsgraph/farey.hpp"

#include <algorithm>
#include <numeric>

#include "pantsgraph/errors.hpp"

namespace pantsgraph {

Slope::Slope(long long p, long long q) {
    if (p == 0 && q == 0) throw Error(ErrorKind::Parse, "0/0 is not a slope");
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    const long long g = std::gcd(p < 0 ? -p : p, q);
    p_ = p / g;
    q_ = q / g;
}

std::string Slope::str() const { return is_infinity() ? "1/0" : std::to_string(p_) + "/" + std::to_string(q_); }

bool farey_adjacent(const Slope& a, const Slope& b) {
    const long long d = a.p() * b.q() - b.p() * a.q();
    return d == 1 || d == -1;
}

std::pair<Slope, Slope> edge_triangles(const Slope& a, const Slope& b) {
    if (!farey_adjacent(a, b))
        throw Error(ErrorKind::NotAdjacent, a.str() + " and " + b.str() + " are not Farey neighbours");
    Slope s(a.p() + b.p(), a.q() + b.q());
    Slope t(a.p() - b.p(), a.q() - b.q());
    if (t < s) std::swap(s, t);
    return {s, t};
}

SlopeEdge make_edge(const Slope& a, const Slope& b) { return a < b ? SlopeEdge{a, b} : SlopeEdge{b, a}; }

SlopeTriangle make_triangle(const Slope& a, const Slope& b, const Slope& c) {
    SlopeTriangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

SlopeTriangle standard_triangle() { return make_triangle(Slope(0, 1), Slope(1, 1), Slope(1, 0)); }

void SlopeGraph::add_triangle(const SlopeTriangle& t) {
    triangles.insert(t);
    for (const auto& s : t) vertices.insert(s);
    edges.insert(make_edge(t[0], t[1]));
    edges.insert(make_edge(t[1], t[2]));
    edges.insert(make_edge(t[0], t[2]));
}

int SlopeGraph::triangles_on(const SlopeEdge& e) const {
    int count = 0;
    for (const auto& third : {edge_triangles(e.first, e.second).first, edge_triangles(e.first, e.second).second})
        if (triangles.count(make_triangle(e.first, e.second, third))) ++count;
    return count;
}

std::vector<SlopeGraph> farey_exhaustion(const SlopeTriangle& start, int steps) {
    if (!farey_adjacent(start[0], start[1]) || !farey_adjacent(start[1], start[2]) ||
        !farey_adjacent(start[0], start[2]))
        throw Error(ErrorKind::NotAdjacent, "start is not a Farey triangle");
    if (steps < 0) throw Error(ErrorKind::Parse, "steps must be nonnegative");
    std::vector<SlopeGraph> out(1);
    out[0].add_triangle(make_triangle(start[0], start[1], start[2]));
    for (int s = 0; s < steps; ++s) {
        SlopeGraph next = out.back();
        for (const auto& e : out.back().edges) {
            if (out.back().triangles_on(e) != 1) continue;
            const auto [x, y] = edge_triangles(e.first, e.second);
            for (const auto& third : {x, y}) {
                auto t = make_triangle(e.first, e.second, third);
                if (!out.back().triangles.count(t)) next.add_triangle(t);
            }
        }
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace pantsgraph
