#include <doctest.h>

#include <random>

#include "pantsgraph/errors.hpp"
#include "pantsgraph/free_group.hpp"
#include "pantsgraph/mcg_action.hpp"
#include "pantsgraph/normalization.hpp"

using namespace pantsgraph;

namespace {

std::vector<Curve> sample_curves(int n, int random_count, std::uint64_t seed) {
    const auto m = sphere_model(n);
    std::vector<Curve> out;
    for (const auto& c : gamma_family(n)) out.push_back(Curve::from_chord(m, c));
    std::mt19937_64 rng(seed);
    const auto cs = gamma_family(n);
    for (int t = 0; t < random_count; ++t)
        out.push_back(apply(random_word(n, 5, rng), Curve::from_chord(m, cs[rng() % cs.size()])));
    return out;
}

// Dehn twist about the disk around punctures a, b (both != 1), written as
// conjugation of g_a and g_b by a boundary word. `variant` picks the word
// (g_a g_b or g_b g_a) and the direction.
Curve conjugation_twist(const Curve& x, int a, int b, int variant) {
    const int n = x.n();
    std::vector<free_group::Word> img(static_cast<std::size_t>(n + 1));
    for (int k = 2; k <= n; ++k) img[k] = {k};
    const free_group::Word d = (variant & 1) ? free_group::Word{a, b} : free_group::Word{b, a};
    const auto dinv = free_group::inverse(d);
    for (int k : {a, b}) {
        free_group::Word w = (variant & 2) ? d : dinv;
        w.push_back(k);
        const auto& tail = (variant & 2) ? dinv : d;
        w.insert(w.end(), tail.begin(), tail.end());
        img[k] = w;
    }
    return Curve::from_word(x.model(), free_group::substitute(x.word(), img));
}

}  // namespace

TEST_CASE("half twist squared is the Dehn twist (conjugation oracle)") {
    for (int n = 5; n <= 7; ++n) {
        const auto curves = sample_curves(n, 100, 77 + n);
        for (int m = 2; m <= n - 1; ++m) {
            const auto c = chain_for_pair(n, m);
            for (int sign : {1, -1}) {
                const auto h = half_twist(c, sign);
                std::vector<Curve> twice;
                for (const auto& x : curves) twice.push_back(apply(h, apply(h, x)));
                bool some_variant = false;
                for (int v = 0; v < 4 && !some_variant; ++v) {
                    bool all = true;
                    for (std::size_t k = 0; k < curves.size() && all; ++k)
                        all = conjugation_twist(curves[k], m + 1, m, v) == twice[k];
                    some_variant = all;
                }
                CHECK_MESSAGE(some_variant, "n=" << n << " m=" << m << " sign=" << sign);
                // The library's own full twist word agrees.
                const auto d = dehn_twist_word(n, c, sign);
                for (std::size_t k = 0; k < curves.size(); ++k) CHECK(apply(d, curves[k]) == twice[k]);
            }
        }
    }
}

TEST_CASE("Dehn twists satisfy i(T_c x, x) = i(c, x)^2") {
    for (int n = 5; n <= 7; ++n) {
        const auto m = sphere_model(n);
        const auto curves = sample_curves(n, 30, 5 + n);
        for (const auto& c : gamma_family(n)) {
            const auto cc = Curve::from_chord(m, c);
            const auto d = dehn_twist_word(n, c, 1);
            for (const auto& x : curves) {
                const int i = intersection_number(cc, x);
                if (i > 6) continue;
                CHECK(intersection_number(apply(d, x), x) == i * i);
            }
        }
    }
}

TEST_CASE("images of simple curves are simple") {
    for (int n = 5; n <= 7; ++n)
        for (const auto& x : sample_curves(n, 40, 11 + n))
            CHECK_NOTHROW(Curve::from_coords(x.model(), x.coords()));
}

TEST_CASE("inverses, braid and commutation relations") {
    for (int n = 5; n <= 7; ++n) {
        const auto curves = sample_curves(n, 20, 3 + n);
        std::mt19937_64 rng(99 + n);
        for (int t = 0; t < 10; ++t) {
            const auto w = random_word(n, 6, rng);
            for (const auto& x : curves) CHECK(apply(invert(w), apply(w, x)) == x);
        }
        for (int m = 1; m <= n; ++m) {
            const auto s1 = half_twist(chain_for_pair(n, m), 1);
            const auto s2 = half_twist(chain_for_pair(n, m % n + 1), 1);
            const MappingClassWord lhs(n, {s1, s2, s1}), rhs(n, {s2, s1, s2});
            for (const auto& x : curves) CHECK(apply(lhs, x) == apply(rhs, x));
            if (n >= 5) {
                const auto s3 = half_twist(chain_for_pair(n, (m + 1) % n + 1), 1);
                const MappingClassWord ab(n, {s1, s3}), ba(n, {s3, s1});
                for (const auto& x : curves) CHECK(apply(ab, x) == apply(ba, x));
            }
        }
    }
}

TEST_CASE("half twists fix their own and disjoint curves and make Farey triangles") {
    for (int n = 5; n <= 8; ++n) {
        const auto m = sphere_model(n);
        for (const auto& c : chain_curves(n)) {
            const auto cc = Curve::from_chord(m, c);
            for (int sign : {1, -1}) {
                const auto h = half_twist(c, sign);
                CHECK(apply(h, cc) == cc);
                for (const auto& d : gamma_family(n)) {
                    const auto dc = Curve::from_chord(m, d);
                    const auto img = apply(h, dc);
                    if (!chords_cross(c, d)) {
                        CHECK(img == dc);
                    } else {
                        CHECK(intersection_number(img, cc) == 2);
                        CHECK(intersection_number(img, dc) == 2);
                    }
                }
            }
        }
    }
}

TEST_CASE("rotation shifts chords") {
    for (int n = 4; n <= 8; ++n) {
        const auto m = sphere_model(n);
        const auto r = rotation_word(n, 1);
        for (const auto& c : gamma_family(n)) {
            const auto img = as_chord(apply(r, Curve::from_chord(m, c)));
            REQUIRE(img.has_value());
            CHECK(*img == ChordId(n, c.i() % n + 1, c.j() % n + 1));
        }
        std::vector<Generator> full(static_cast<std::size_t>(n), rotation_word(n, 1).gens()[0]);
        for (const auto& x : sample_curves(n, 10, 1)) CHECK(apply(MappingClassWord(n, full), x) == x);
    }
}

TEST_CASE("involution e") {
    const auto m = sphere_model(5);
    const auto e = involution_e_word(5);
    for (const auto& c : gamma_family(5)) {
        const auto cc = Curve::from_chord(m, c);
        CHECK(apply(e, cc) == cc);
    }
    for (const auto& x : sample_curves(5, 30, 8)) CHECK(apply(e, apply(e, x)) == x);
    CHECK_THROWS_AS(involution_e_word(6), Error);
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(MappingClassWord(7, {half_twist(ChordId(7, 1, 4), 1)}), Error);
    CHECK_THROWS_AS(MappingClassWord(6, {Generator{GenKind::HalfTwistChain, ChordId(6, 1, 3), 2}}), Error);
    CHECK(gen_kind_from_string("half_twist_chain") == GenKind::HalfTwistChain);
    CHECK_THROWS_AS(gen_kind_from_string("twist"), Error);
}

TEST_CASE("interval half twist squares to the full twist") {
    for (int n = 6; n <= 7; ++n) {
        const auto curves = sample_curves(n, 20, 17);
        for (const auto& c : gamma_family(n)) {
            for (int sign : {1, -1}) {
                const auto h = half_twist_interval_word(n, c, sign);
                const auto d = dehn_twist_word(n, c, sign);
                for (const auto& x : curves) CHECK(apply(h, apply(h, x)) == apply(d, x));
            }
        }
    }
}
