#pragma once

// X_5, X_n and the half-twist exhaustion X_1 ⊂ X_2 ⊂ ...

#include <cstdint>
#include <optional>
#include <vector>

#include "pantsgraph/mcg_action.hpp"
#include "pantsgraph/pants_graph.hpp"

namespace pantsgraph {

/// Embedding of S_{0,m} onto a complementary piece of S_{0,n}.
///
/// The piece has m features in cyclic order: punctures of the piece and
/// boundary curves, each boundary curve standing for the cyclic interval of
/// punctures it cuts off. Puncture t of S_{0,m} goes to feature t, counted
/// from the feature containing puncture 1.
struct PieceEmbedding {
    int m = 0;
    int n = 0;
    std::vector<std::vector<int>> features;  // cyclic intervals, each listed in increasing cyclic order

    Curve map(const Curve& c) const;
    /// h(u) ∪ extra.
    PantsDecomposition map(const PantsDecomposition& u, const std::vector<Curve>& extra) const;
};

/// Embedding onto the unique complementary piece of q with `piece_type`
/// features, or nullopt when there is no such piece.
std::optional<PieceEmbedding> piece_embedding(int n, const Multicurve& q, int piece_type);

struct WPiece {
    std::vector<ChordId> chords;
    Multicurve curves;
    ComplementPiece piece;
    PieceEmbedding h;
};

PantsGraphFragment build_X5();
std::vector<WPiece> enumerate_W(int n);
PantsGraphFragment induced_x5(const WPiece& w);
PantsGraphFragment induced_x5(const WPiece& w, const PantsGraphFragment& x5);
PantsGraphFragment build_Xn(int n);
/// build_X5 for n = 5, build_Xn otherwise.
PantsGraphFragment build_X(int n);

struct Provenance {
    int origin = 0;                // vertex index in stage 1
    std::vector<Generator> word;   // applied left to right to the origin
};

struct RigidSetStage {
    int index = 1;
    PantsGraphFragment fragment;
    std::vector<Provenance> provenance;  // per vertex
};

inline constexpr std::uint64_t kDefaultBudget = 1000000;

/// Budget from PANTSGRAPH_BUDGET when set, else kDefaultBudget.
std::uint64_t budget_from_env();

RigidSetStage initial_stage(int n);
/// Adds every T_alpha^{±1/2}(v), alpha in `chains`, v in the stage.
RigidSetStage exhaust_step(const RigidSetStage& stage, const std::vector<ChordId>& chains);
/// Upper bound |X_1| (2|C| + 1)^steps on the last stage's vertex count.
double projected_vertices(std::size_t first_stage, std::size_t generators, int steps);
/// Stages X_1 .. X_{steps+1}. Throws BudgetExceeded up front when the
/// projection exceeds the budget, and during the build if a stage does.
std::vector<RigidSetStage> exhaustion_sequence(int n, int steps, std::uint64_t budget = kDefaultBudget);

}  // namespace pantsgraph
