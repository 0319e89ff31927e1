#include <doctest.h>

#include <random>

#include "pantsgraph/errors.hpp"
#include "pantsgraph/normalization.hpp"

using namespace pantsgraph;

TEST_CASE("dual trees of Z_n vertices") {
    for (int n = 4; n <= 8; ++n) {
        const auto z = build_Zn(n);
        for (const auto& v : z.vertices()) {
            const auto t = dual_tree(v);
            CHECK(t.num_nodes() == 2 * n - 2);
            CHECK(t.well_formed());
            int leaves = 0, inner = 0;
            for (int k = 0; k < t.num_nodes(); ++k) {
                if (t.adj[k].size() == 1) ++leaves;
                if (t.adj[k].size() == 3) ++inner;
            }
            CHECK(leaves == n);
            CHECK(inner == n - 2);
        }
    }
}

TEST_CASE("standard vertices are fixed on Z_n") {
    for (int n = 4; n <= 8; ++n) {
        const auto z = build_Zn(n);
        for (const auto& v : z.vertices()) {
            const auto sv = standard_vertex_from_tree(dual_tree(v));
            CHECK(in_Zn(sv.vertex));
            const auto again = standard_vertex_from_tree(dual_tree(sv.vertex));
            CHECK(again.vertex == sv.vertex);
        }
    }
}

TEST_CASE("vertex normalization of twisted vertices") {
    for (int n : {5, 6, 7}) {
        std::mt19937_64 rng(31 + n);
        const auto z = build_Zn(n);
        for (int t = 0; t < 60; ++t) {
            const auto w = random_word(n, 6, rng);
            const auto v = apply(w, z.vertex(static_cast<int>(rng() % z.num_vertices())));
            const auto norm = normalize_vertex(v);
            CHECK(in_Zn(norm.standard));
            CHECK(split_profile(norm.standard) == split_profile(v));
            CHECK(norm.pieces.size() == static_cast<std::size_t>(n - 2));
        }
    }
}

TEST_CASE("edge normalization lowers intersection by four per twist") {
    for (int n : {5, 6}) {
        std::mt19937_64 rng(5 + n);
        const auto z = build_Zn(n);
        const auto m = sphere_model(n);
        for (int t = 0; t < 60; ++t) {
            const auto& p1 = z.vertex(static_cast<int>(rng() % z.num_vertices()));
            const auto labels = *chord_labels(p1);
            const auto u1 = labels[rng() % labels.size()];
            const auto u1c = Curve::from_chord(m, u1);
            std::vector<Curve> rest;
            for (const auto& c : p1.curves())
                if (!(c == u1c)) rest.push_back(c);
            const int k = static_cast<int>(rng() % 13) - 6;
            auto cs = rest;
            cs.push_back(random_neighbour(n, rest, u1c, k));
            const PantsDecomposition p2(n, cs);
            const auto e = normalize_edge(p1, p2);
            CHECK(in_Zn(e.p1));
            CHECK(in_Zn(e.p2));
            CHECK(adjacent(e.p1, e.p2));
            for (std::size_t s = 1; s < e.intersections.size(); ++s)
                CHECK(e.intersections[s - 1] - e.intersections[s] == 4);
            CHECK(e.intersections.back() <= 2);
            CHECK(apply(e.word, p1) == e.p1);
            CHECK(apply(e.word, p2) == e.p2);
        }
    }
}

TEST_CASE("edge normalization preconditions") {
    const auto z = build_Zn(6);
    CHECK_THROWS_AS(normalize_edge(z.vertex(0), z.vertex(0)), Error);
    const auto w = MappingClassWord(6, {half_twist(ChordId(6, 2, 4), 1)});
    const auto off = apply(w, z.vertex(0));
    const auto off2 = apply(w, z.vertex(z.adjacency()[0][0]));
    if (!in_Zn(off)) CHECK_THROWS_AS(normalize_edge(off, off2), Error);
}

TEST_CASE("orbit check") {
    const auto r = orbit_cover_check(5, 100, 6, 7);
    CHECK(r.passed());
    CHECK(r.vertex_pass == 100);
    CHECK(r.edge_pass == 100);
    for (auto [i, c] : r.intersection_histogram) CHECK(i % 2 == 0);
    const auto again = orbit_cover_check(5, 100, 6, 7);
    CHECK(again.intersection_histogram == r.intersection_histogram);
}
