#pragma once

// The Farey graph as a model of P(S_{0,4}): a_{1,3} is 0/1 and a_{2,4} is 1/0.

#include <array>
#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pantsgraph {

class Slope {
public:
    /// Reduces p/q; q = 0 gives infinity (stored as 1/0).
    Slope(long long p = 0, long long q = 1);

    long long p() const { return p_; }
    long long q() const { return q_; }
    bool is_infinity() const { return q_ == 0; }
    std::string str() const;

    auto operator<=>(const Slope&) const = default;

private:
    long long p_ = 0;
    long long q_ = 1;
};

bool farey_adjacent(const Slope& a, const Slope& b);

/// Third vertices of the two Farey triangles on the edge {a, b}, sorted.
std::pair<Slope, Slope> edge_triangles(const Slope& a, const Slope& b);

using SlopeEdge = std::pair<Slope, Slope>;              // first < second
using SlopeTriangle = std::array<Slope, 3>;             // sorted

SlopeEdge make_edge(const Slope& a, const Slope& b);
SlopeTriangle make_triangle(const Slope& a, const Slope& b, const Slope& c);

struct SlopeGraph {
    std::set<Slope> vertices;
    std::set<SlopeEdge> edges;
    std::set<SlopeTriangle> triangles;

    void add_triangle(const SlopeTriangle& t);
    /// Number of triangles of this graph containing the edge.
    int triangles_on(const SlopeEdge& e) const;
};

/// X_1 = the start triangle; X_{m+1} attaches the missing triangle to every
/// edge of X_m that lies in only one of its triangles. Returns X_1..X_{steps+1}.
std::vector<SlopeGraph> farey_exhaustion(const SlopeTriangle& start, int steps);

SlopeTriangle standard_triangle();  // {0/1, 1/1, 1/0}

}  // namespace pantsgraph
