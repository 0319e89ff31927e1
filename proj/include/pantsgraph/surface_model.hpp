#pragma once

// Combinatorial model of the n-punctured sphere as a doubled regular n-gon.
//
// Punctures 1..n sit at the polygon corners; puncture k lies between sides
// k and k+1 (indices mod n), so side s joins punctures s-1 and s. The
// reference ideal triangulation uses the n sides (the equator) plus a fan of
// diagonals from puncture 1 on each of the front and back polygons.

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace pantsgraph {

enum class EdgeKind { Side, Front, Back };

struct TriEdge {
    int u = 0;  // endpoint punctures; positions along the edge count from u
    int v = 0;
    EdgeKind kind = EdgeKind::Side;
    int label = 0;  // side number for Side, far puncture k for diagonals (1,k)
};

struct Triangle {
    std::array<int, 3> verts{};  // counterclockwise seen from outside the sphere
    std::array<int, 3> edges{};  // edges[i] joins verts[i] and verts[(i+1)%3]
    bool front = true;
};

struct TriangulationSpec {
    std::vector<TriEdge> edges;
    std::vector<Triangle> triangles;
    // edge_tris[e][0] traverses e as u->v in its boundary, edge_tris[e][1] as v->u.
    std::vector<std::array<int, 2>> edge_tris;

    int slot(int tri, int edge) const;
};

/// Side chord a_{i,j}: connects the midpoints of two non-adjacent sides.
/// Stored with i < j.
class ChordId {
public:
    ChordId() = default;
    ChordId(int n, int i, int j);

    int i() const { return i_; }
    int j() const { return j_; }

    /// Punctures on the side i..j-1 (the side not containing puncture j..).
    /// Returned as a bitmask over punctures 1..n (bit k-1).
    std::uint32_t interval_mask(int n) const;

    /// The smaller puncture interval bounded by the chord, as (first, size);
    /// ties go to the i..j-1 side. Intervals are cyclic.
    std::pair<int, int> enclosed_interval(int n) const;

    bool is_chain(int n) const;

    auto operator<=>(const ChordId&) const = default;

private:
    int i_ = 0;
    int j_ = 0;
};

/// Chord whose enclosed punctures are the cyclic interval first..first+size-1.
ChordId chord_around(int n, int first, int size);

class SphereModel {
public:
    explicit SphereModel(int n);

    int n() const { return n_; }
    int num_edges() const { return 3 * n_ - 6; }
    const TriangulationSpec& triangulation() const { return tri_; }

    int side_edge(int side) const;   // side in 1..n
    int front_diag(int k) const;     // diagonal (1,k), 3 <= k <= n-1
    int back_diag(int k) const;

    /// Cut edge crossed by free generator g_k (k = 2..n) and its positive
    /// direction: from tri `from` into tri `to`.
    struct CutCrossing {
        int edge;
        int from;
        int to;
    };
    const CutCrossing& cut(int k) const { return cuts_[k]; }
    /// Generator index k for a cut edge, or 0 when the edge is not cut.
    int cut_generator(int edge) const { return edge_gen_[edge]; }

    /// Steps (as encoded dual steps) of the unique dual-tree path from tri a to b.
    const std::vector<int>& tree_path(int a, int b) const {
        return paths_[static_cast<std::size_t>(a) * tri_.triangles.size() + b];
    }

    std::uint32_t all_punctures() const { return n_ >= 32 ? 0xffffffffu : ((1u << n_) - 1u); }

    bool operator==(const SphereModel& o) const { return n_ == o.n_; }

private:
    int n_;
    TriangulationSpec tri_;
    std::vector<CutCrossing> cuts_;
    std::vector<int> edge_gen_;
    std::vector<std::vector<int>> paths_;
};

using ModelPtr = std::shared_ptr<const SphereModel>;

/// Shared immutable model per puncture count.
ModelPtr sphere_model(int n);

std::vector<ChordId> gamma_family(int n);
std::vector<ChordId> chain_curves(int n);
bool chords_cross(const ChordId& a, const ChordId& b);

// Dual steps: crossing edge e from edge_tris[e][d] to edge_tris[e][1-d] is 2e+d.
inline int step_edge(int step) { return step >> 1; }
inline int step_reverse(int step) { return step ^ 1; }
int step_from(const TriangulationSpec& t, int step);
int step_to(const TriangulationSpec& t, int step);

}  // namespace pantsgraph
