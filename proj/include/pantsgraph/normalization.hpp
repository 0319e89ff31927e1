#pragma once

// Dual trees of pants decompositions, and moving vertices and edges of
// P(S_{0,n}) into Z_n.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pantsgraph/mcg_action.hpp"
#include "pantsgraph/pants_graph.hpp"

namespace pantsgraph {

/// Nodes 0..n-1 are the punctures 1..n; nodes n..2n-3 are the pants pieces.
struct DualTree {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted
    /// For each internal-internal edge, the curve index of the source
    /// decomposition it crosses, keyed by (min node, max node).
    std::map<std::pair<int, int>, int> edge_curve;

    int num_nodes() const { return static_cast<int>(adj.size()); }
    bool is_leaf(int v) const { return v < n; }
    /// 2n-2 nodes, leaves of degree 1, internal nodes of degree 3, acyclic and connected.
    bool well_formed() const;
};

DualTree dual_tree(const PantsDecomposition& p);

struct StandardVertex {
    PantsDecomposition vertex;        // in Z_n
    std::vector<int> position;        // position[k] = polygon vertex of puncture k (index 0 unused)
    std::vector<int> curve_to_chord;  // curve index in the source -> curve index in `vertex`
};

/// Draws the tree in the polygon: leaves go to polygon vertices in the DFS
/// order from puncture 1 (children visited by smallest leaf label), and each
/// internal edge becomes the chord cutting off its leaves.
StandardVertex standard_vertex_from_tree(const DualTree& t);

struct VertexNormalization {
    PantsDecomposition standard;
    std::vector<int> position;
    /// (piece index in complement(p), piece index in complement(standard))
    std::vector<std::pair<int, int>> pieces;
};

VertexNormalization normalize_vertex(const PantsDecomposition& p);

/// Sorted multiset of min(|split|, n - |split|) over the curves.
std::vector<int> split_profile(const PantsDecomposition& p);

struct EdgeNormalization {
    PantsDecomposition p1;  // images of the input edge under `word`, both in Z_n
    PantsDecomposition p2;
    MappingClassWord word;
    ChordId u1;
    ChordId alpha;
    int initial_intersection = 0;
    std::vector<int> intersections;  // i(u2', alpha) before each twist and after the last
    int twists = 0;
    int half_twist_sign = 0;  // 0 when no half twist was needed
    bool half_twist_hits_alpha = false;  // the half twist sent u2' to alpha itself
};

/// The Gamma_n chord other than u1 in the S_{0,4} piece of p1 minus u1.
ChordId flip_partner(const PantsDecomposition& p1, const ChordId& u1);

/// Requires p1 in Z_n adjacent to p2. Twists about u1 until i(u2', alpha)
/// is 0 or 2; at 2, half twists about u1 (either sign) until u2' is a chord.
/// The returned edge is the image of (p1, p2) under the accumulated word.
EdgeNormalization normalize_edge(const PantsDecomposition& p1, const PantsDecomposition& p2);

bool in_Zn(const PantsDecomposition& p);

struct OrbitReport {
    int n = 0;
    int trials = 0;
    int max_word = 0;
    std::uint64_t seed = 0;
    int vertex_pass = 0;
    int vertex_fail = 0;
    int edge_pass = 0;
    int edge_fail = 0;
    int worst_twists = 0;
    std::map<int, int> intersection_histogram;  // i(u2, alpha) at the start of each edge trial
    std::vector<std::string> failures;           // first few, for reports
    bool passed() const { return vertex_fail == 0 && edge_fail == 0; }
};

/// Curve T_{u1}^{k/2}(alpha) inside the S_{0,4} piece left by `rest`, where
/// the half twist is taken within the piece and alpha is the flip partner.
Curve random_neighbour(int n, const std::vector<Curve>& rest, const Curve& u1, int k);

/// Random chain half-twist word of length 1..max_len.
MappingClassWord random_word(int n, int max_len, std::mt19937_64& rng);

OrbitReport orbit_cover_check(int n, int trials, int max_word, std::uint64_t seed);

}  // namespace pantsgraph
