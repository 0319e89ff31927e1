#include <doctest.h>

#include <set>

#include "pantsgraph/errors.hpp"
#include "pantsgraph/rigid_sets.hpp"

using namespace pantsgraph;

namespace {

std::size_t brute_x5_size() {
    // Dedupe the 5 + 10*5 candidate vertices by their sorted coordinate lists.
    std::set<std::vector<std::vector<int>>> seen;
    auto add = [&](const PantsDecomposition& p) {
        std::vector<std::vector<int>> k;
        for (const auto& c : p.curves()) k.push_back(c.coords());
        std::sort(k.begin(), k.end());
        seen.insert(k);
    };
    const auto z = build_Zn(5);
    for (const auto& v : z.vertices()) add(v);
    for (const auto& c : gamma_family(5))
        for (int s : {1, -1})
            for (const auto& v : z.vertices()) add(apply(MappingClassWord(5, {half_twist(c, s)}), v));
    return seen.size();
}

}  // namespace

TEST_CASE("X_5") {
    const auto x = build_X5();
    CHECK(x.num_vertices() == brute_x5_size());
    CHECK(x.num_vertices() == 25);
    CHECK(x.num_edges() == 55);
    CHECK(is_connected(x.adjacency()));
    CHECK(is_subgraph(build_Zn(5), x));
}

TEST_CASE("deficiency-2 pieces") {
    CHECK_THROWS_AS(enumerate_W(5), Error);
    const auto ws = enumerate_W(6);
    CHECK(ws.size() == 6);
    const auto x5 = build_X5();
    for (const auto& w : ws) {
        CHECK(w.chords.size() == 1);
        CHECK(w.h.features.size() == 5);
        const auto img = induced_x5(w, x5);
        CHECK(img.num_vertices() == x5.num_vertices());
        CHECK(graph_isomorphic(img, x5).has_value());
        for (const auto& v : img.vertices())
            for (const auto& c : w.curves.curves()) CHECK(v.contains(c));
    }
    CHECK(enumerate_W(7).size() == 28);
}

TEST_CASE("X_n sizes") {
    const auto x6 = build_Xn(6);
    CHECK(x6.num_vertices() == 116);
    CHECK(x6.num_edges() == 297);
    CHECK(is_connected(x6.adjacency()));
    CHECK(is_subgraph(build_Zn(6), x6));
    const auto x7 = build_Xn(7);
    CHECK(x7.num_vertices() == 490);
    CHECK(x7.num_edges() == 1442);
}

TEST_CASE("piece embeddings") {
    const auto m = sphere_model(6);
    const auto a = Curve::from_chord(m, ChordId(6, 1, 3));
    const auto h = piece_embedding(6, Multicurve::trusted({a}), 5);
    REQUIRE(h.has_value());
    CHECK(h->features.front() == std::vector<int>{1, 2});
    // The embedding sends Gamma_5 to Gamma_6 curves disjoint from a.
    for (const auto& c : gamma_family(5)) {
        const auto img = h->map(Curve::from_chord(sphere_model(5), c));
        CHECK(as_chord(img).has_value());
        CHECK(intersection_number(img, a) == 0);
    }
    // A 3|3 split has no five-holed piece.
    CHECK_FALSE(piece_embedding(6, Multicurve::trusted({Curve::from_chord(m, ChordId(6, 1, 4))}), 5).has_value());
}

TEST_CASE("exhaustion") {
    const auto stages = exhaustion_sequence(5, 2);
    REQUIRE(stages.size() == 3);
    CHECK(stages[0].fragment.num_vertices() == 25);
    CHECK(stages[1].fragment.num_vertices() == 95);
    CHECK(stages[2].fragment.num_vertices() == 345);
    CHECK(stages[2].fragment.num_edges() == 945);
    for (std::size_t s = 1; s < stages.size(); ++s) CHECK(is_subgraph(stages[s - 1].fragment, stages[s].fragment));
    // Provenance words reproduce every vertex.
    const auto& last = stages.back();
    for (int v = 0; v < static_cast<int>(last.fragment.num_vertices()); ++v) {
        const auto& pr = last.provenance[v];
        CHECK(pr.word.size() <= 2);
        const auto img = apply(MappingClassWord(5, pr.word), stages[0].fragment.vertex(pr.origin));
        CHECK(img.key() == last.fragment.key(v));
    }
}

TEST_CASE("budget guard") {
    CHECK(projected_vertices(25, 5, 2) == doctest::Approx(25.0 * 121));
    try {
        exhaustion_sequence(5, 50);
        FAIL("expected a budget error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
    CHECK_THROWS_AS(exhaustion_sequence(5, 1, 100), Error);
    CHECK_NOTHROW(exhaustion_sequence(5, 1, 1000));
}
