#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pantsgraph/errors.hpp"
#include "pantsgraph/mcg_action.hpp"
#include "pantsgraph/normalization.hpp"

using namespace pantsgraph;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("chord curves round-trip through coordinates") {
    for (int n = 4; n <= 9; ++n) {
        const auto m = sphere_model(n);
        for (const auto& c : gamma_family(n)) {
            const auto curve = Curve::from_chord(m, c);
            CHECK(curve.coords().size() == static_cast<std::size_t>(3 * n - 6));
            for (int x : curve.coords()) CHECK(x >= 0);
            CHECK(Curve::from_coords(m, curve.coords()) == curve);
            CHECK(Curve::from_word(m, curve.word()) == curve);
            REQUIRE(as_chord(curve).has_value());
            CHECK(*as_chord(curve) == c);
        }
    }
}

TEST_CASE("chord oracle for intersection numbers") {
    // Distinct chords meet twice exactly when the straight segments cross.
    for (int n = 4; n <= 8; ++n) {
        const auto m = sphere_model(n);
        const auto cs = gamma_family(n);
        for (const auto& a : cs)
            for (const auto& b : cs) {
                const int i = intersection_number(Curve::from_chord(m, a), Curve::from_chord(m, b));
                CHECK(i == (oracle::segments_cross(n, a.i(), a.j(), b.i(), b.j()) ? 2 : 0));
            }
    }
}

TEST_CASE("intersection numbers are symmetric, vanish on the diagonal and are invariant") {
    for (int n : {5, 6}) {
        std::mt19937_64 rng(2024 + n);
        const auto m = sphere_model(n);
        const auto cs = gamma_family(n);
        for (int t = 0; t < 100; ++t) {
            const auto a = apply(random_word(n, 4, rng), Curve::from_chord(m, cs[rng() % cs.size()]));
            const auto b = apply(random_word(n, 4, rng), Curve::from_chord(m, cs[rng() % cs.size()]));
            const auto w = random_word(n, 5, rng);
            const int i = intersection_number(a, b);
            CHECK(i == intersection_number(b, a));
            CHECK(intersection_number(a, a) == 0);
            CHECK(i % 2 == 0);
            CHECK(intersection_number(apply(w, a), apply(w, b)) == i);
            CHECK(intersection_number_capped(a, b, 2) == std::min(i, 3));
        }
    }
}

TEST_CASE("malformed coordinates are rejected") {
    const auto m = sphere_model(5);
    const auto c = Curve::from_chord(m, ChordId(5, 1, 3)).coords();
    CHECK(kind_of([&] { Curve::from_coords(m, {1, 2}); }) == ErrorKind::MalformedCoordinates);
    auto neg = c;
    neg[0] = -1;
    CHECK(kind_of([&] { Curve::from_coords(m, neg); }) == ErrorKind::MalformedCoordinates);
    auto doubled = c;
    for (auto& x : doubled) x *= 2;
    CHECK(kind_of([&] { Curve::from_coords(m, doubled); }) == ErrorKind::NotACurve);
    CHECK(kind_of([&] { Curve::from_coords(m, std::vector<int>(c.size(), 0)); }) != ErrorKind::Parse);
}

TEST_CASE("peripheral loops are inessential") {
    for (int n = 4; n <= 7; ++n) {
        const auto m = sphere_model(n);
        for (int k = 2; k <= n; ++k) {
            const std::vector<int> w{-k};
            CHECK(kind_of([&] { Curve::from_word(m, w); }) == ErrorKind::InessentialCurve);
        }
        std::vector<int> y1;
        for (int k = 2; k <= n; ++k) y1.push_back(k);
        CHECK(kind_of([&] { Curve::from_word(m, y1); }) == ErrorKind::InessentialCurve);
    }
}

TEST_CASE("inside mask matches the enclosed interval") {
    for (int n = 4; n <= 8; ++n)
        for (const auto& c : gamma_family(n)) {
            const auto curve = Curve::from_chord(sphere_model(n), c);
            const auto inside = curve.inside_mask();
            const auto all = sphere_model(n)->all_punctures();
            const auto [first, size] = c.enclosed_interval(n);
            std::uint32_t mask = 0;
            for (int k = 0; k < size; ++k) mask |= 1u << ((first - 1 + k) % n);
            CHECK((inside == mask || inside == (all & ~mask)));
            CHECK((inside & 1u) == 0);  // measured away from puncture 1
        }
}

TEST_CASE("multicurves and pants decompositions") {
    const int n = 6;
    const auto m = sphere_model(n);
    auto ch = [&](int i, int j) { return Curve::from_chord(m, ChordId(n, i, j)); };
    CHECK_THROWS_AS(Multicurve({ch(1, 3), ch(2, 4)}), Error);
    CHECK_THROWS_AS(Multicurve({ch(1, 3), ch(1, 3)}), Error);
    const Multicurve q({ch(1, 3), ch(1, 5)});
    CHECK(deficiency(n, q) == 1);
    CHECK_FALSE(is_pants_decomposition(n, q));
    const auto rep = complement(n, q);
    int four = 0;
    for (const auto& p : rep.pieces) four += p.type() == 4;
    CHECK(four == 1);
    CHECK(rep.nontrivial.size() == 1);

    const PantsDecomposition p(n, {ch(1, 3), ch(1, 4), ch(1, 5)});
    CHECK(p.curves().size() == 3);
    CHECK(complement(n, p.multicurve()).pieces.size() == static_cast<std::size_t>(n - 2));
    for (const auto& piece : complement(n, p.multicurve()).pieces) CHECK(piece.type() == 3);
    CHECK_THROWS_AS(PantsDecomposition(n, {ch(1, 3), ch(1, 4)}), Error);
    CHECK_THROWS_AS(PantsDecomposition(n, {ch(1, 3), ch(1, 4), ch(2, 4)}), Error);
    const PantsDecomposition same(n, {ch(1, 5), ch(1, 3), ch(1, 4)});
    CHECK(same == p);
    CHECK(same.key() == p.key());
}

TEST_CASE("curves on different models do not compare") {
    const auto a = Curve::from_chord(sphere_model(5), ChordId(5, 1, 3));
    const auto b = Curve::from_chord(sphere_model(6), ChordId(6, 1, 3));
    CHECK_THROWS_AS(intersection_number(a, b), Error);
}
