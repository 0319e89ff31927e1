#pragma once

// Finite fragments of the pants graph P(S_{0,n}).

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pantsgraph/curve_engine.hpp"

namespace pantsgraph {

using VertexKey = std::vector<int>;

struct KeyHash {
    std::size_t operator()(const std::vector<int>& k) const;
};

/// Adjacency-list graph on vertices 0..size-1; used for templates and
/// isomorphism tests.
using AdjacencyList = std::vector<std::vector<int>>;

class PantsGraphFragment {
public:
    PantsGraphFragment() = default;
    explicit PantsGraphFragment(int n) : n_(n) {}

    int n() const { return n_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    const std::vector<PantsDecomposition>& vertices() const { return vertices_; }
    const PantsDecomposition& vertex(int v) const { return vertices_[v]; }
    const VertexKey& key(int v) const { return keys_[v]; }
    /// Sorted neighbour lists.
    const AdjacencyList& adjacency() const { return adj_; }
    /// Edges (a, b) with a < b, sorted.
    std::vector<std::pair<int, int>> edges() const;

    std::optional<int> find(const PantsDecomposition& p) const;
    std::optional<int> find_key(const VertexKey& k) const;
    bool contains(const PantsDecomposition& p) const { return find(p).has_value(); }
    bool has_edge(int a, int b) const;

    /// Index of p, inserting it when new.
    int add_vertex(const PantsDecomposition& p);
    void add_edge(int a, int b);
    /// Drops all edges and recomputes elementary moves among the vertices.
    void recompute_edges();

private:
    int n_ = 0;
    std::vector<PantsDecomposition> vertices_;
    std::vector<VertexKey> keys_;
    std::unordered_map<VertexKey, int, KeyHash> index_;
    AdjacencyList adj_;
    std::size_t num_edges_ = 0;
};

/// True iff p1 and p2 differ by an elementary move.
bool adjacent(const PantsDecomposition& p1, const PantsDecomposition& p2);

using CrossPredicate = std::function<bool(const ChordId&, const ChordId&)>;

/// All maximal non-crossing chord sets (n-3 chords each), in lexicographic order.
std::vector<std::vector<ChordId>> noncrossing_chord_sets(int n, const CrossPredicate& crosses = chords_cross);

/// Z_n. A non-default predicate is only meant for negative controls; the
/// resulting vertices are not validated.
PantsGraphFragment build_Zn(int n, const CrossPredicate& crosses = chords_cross);

/// Induced subgraph on the listed vertices (in that order).
PantsGraphFragment induced(const PantsGraphFragment& g, const std::vector<int>& vertices);
/// Induced subgraph on vertices containing alpha.
PantsGraphFragment restriction(const PantsGraphFragment& g, const Curve& alpha);
/// Induced subgraph of g1 on the vertices common to g1 and g2.
PantsGraphFragment overlap(const PantsGraphFragment& g1, const PantsGraphFragment& g2);
/// Every vertex and edge of a is present in b.
bool is_subgraph(const PantsGraphFragment& a, const PantsGraphFragment& b);
/// Union of vertex sets with edges recomputed.
PantsGraphFragment merged(const PantsGraphFragment& a, const PantsGraphFragment& b);

bool is_connected(const AdjacencyList& g);

/// Graphs above this many vertices are refused by graph_isomorphic.
inline constexpr std::size_t kIsomorphismVertexCap = 50000;

/// Witness map m with m[v] the image in g2 of vertex v of g1, or nullopt.
std::optional<std::vector<int>> graph_isomorphic(const AdjacencyList& g1, const AdjacencyList& g2);
std::optional<std::vector<int>> graph_isomorphic(const PantsGraphFragment& g1, const PantsGraphFragment& g2);

/// True iff m is an isomorphism from g1 onto g2.
bool is_isomorphism(const AdjacencyList& g1, const AdjacencyList& g2, const std::vector<int>& m);

/// Simple cycles of length k (3 <= k <= 5), each listed once starting at its
/// smallest vertex.
std::vector<std::vector<int>> cycles_of_length(const AdjacencyList& g, int k);

AdjacencyList cycle_graph(int k);

/// Chord labels of a vertex, when all its curves are in Gamma_n.
std::optional<std::vector<ChordId>> chord_labels(const PantsDecomposition& p);

std::string to_dot(const PantsGraphFragment& g, const std::string& name = "pants");

}  // namespace pantsgraph
