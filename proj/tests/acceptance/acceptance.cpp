// Acceptance suite: one line per criterion, nonzero exit if any is red.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pantsgraph/free_group.hpp"
#include "pantsgraph/normalization.hpp"
#include "pantsgraph/rigid_sets.hpp"
#include "pantsgraph/verify.hpp"

using namespace pantsgraph;

namespace {

struct Result {
    bool ok = true;
    std::string detail;
};

Result z_structure() {
    Result o;
    std::ostringstream d;
    for (int n = 4; n <= 8; ++n) {
        const auto z = build_Zn(n);
        const auto expected = oracle::catalan(n - 2);
        bool regular = true;
        for (const auto& nb : z.adjacency()) regular = regular && nb.size() == static_cast<std::size_t>(n - 3);
        o.ok = o.ok && z.num_vertices() == expected && oracle::maximal_noncrossing(n).size() == expected && regular;
        d << (n > 4 ? "," : "") << z.num_vertices();
    }
    o.detail = "|V| = " + d.str();
    return o;
}

Result farey_locality() {
    Result o;
    const auto small = oracle::slope_box(20);
    const auto big = oracle::slope_box(41);
    int edges = 0;
    for (auto i = small.begin(); i != small.end(); ++i)
        for (auto j = std::next(i); j != small.end(); ++j) {
            if (!oracle::det_one(*i, *j)) continue;
            ++edges;
            std::set<Slope> apexes;
            for (const auto& s : big)
                if (oracle::det_one(s, *i) && oracle::det_one(s, *j)) apexes.emplace(s.first, s.second);
            const auto [a, b] = edge_triangles(Slope(i->first, i->second), Slope(j->first, j->second));
            o.ok = o.ok && apexes.size() == 2 && apexes == std::set<Slope>{a, b};
        }
    o.detail = std::to_string(edges) + " edges, two triangles each";
    return o;
}

Result farey_exhaust() {
    Result o;
    const auto stages = farey_exhaustion(standard_triangle(), 6);
    std::ostringstream d;
    for (std::size_t s = 0; s < stages.size(); ++s) {
        d << (s ? "," : "") << stages[s].vertices.size();
        if (s)
            o.ok = o.ok && stages[s].vertices.size() > stages[s - 1].vertices.size() &&
                   std::includes(stages[s].vertices.begin(), stages[s].vertices.end(), stages[s - 1].vertices.begin(),
                                 stages[s - 1].vertices.end());
    }
    int covered = 0;
    for (const auto& [p, q] : oracle::slope_box(5)) {
        const bool in = stages.back().vertices.count(Slope(p, q)) > 0;
        covered += in;
        o.ok = o.ok && in;
    }
    o.detail = "stage sizes " + d.str() + "; " + std::to_string(covered) + " slopes with |p|,q <= 5 reached";
    return o;
}

// Dehn twist about the disk around punctures m, m+1 (2 <= m < n) as
// conjugation of g_m, g_{m+1}; variant picks the boundary word and direction.
Curve conj_twist(const Curve& x, int m, int variant) {
    const int n = x.n();
    std::vector<free_group::Word> img(static_cast<std::size_t>(n + 1));
    for (int k = 2; k <= n; ++k) img[k] = {k};
    const free_group::Word d = (variant & 1) ? free_group::Word{m + 1, m} : free_group::Word{m, m + 1};
    const auto dinv = free_group::inverse(d);
    for (int k : {m, m + 1}) {
        free_group::Word w = (variant & 2) ? d : dinv;
        w.push_back(k);
        const auto& tail = (variant & 2) ? dinv : d;
        w.insert(w.end(), tail.begin(), tail.end());
        img[k] = w;
    }
    return Curve::from_word(x.model(), free_group::substitute(x.word(), img));
}

Result half_twist_calculus() {
    Result o;
    int checked = 0;
    for (int n = 5; n <= 7; ++n) {
        const auto model = sphere_model(n);
        std::vector<Curve> curves;
        for (const auto& c : gamma_family(n)) curves.push_back(Curve::from_chord(model, c));
        std::mt19937_64 rng(1000 + n);
        const auto cs = gamma_family(n);
        for (int t = 0; t < 100; ++t)
            curves.push_back(apply(random_word(n, 5, rng), Curve::from_chord(model, cs[rng() % cs.size()])));
        const auto rot = rotation_word(n, 1);
        for (int sign : {1, -1}) {
            // Find the oracle variant on the chain around punctures 2, 3.
            const auto h0 = half_twist(chain_for_pair(n, 2), sign);
            int variant = -1;
            for (int v = 0; v < 4 && variant < 0; ++v) {
                bool all = true;
                for (std::size_t k = 0; k < curves.size() && all; ++k)
                    all = apply(h0, apply(h0, curves[k])) == conj_twist(curves[k], 2, v);
                if (all) variant = v;
            }
            if (variant < 0) {
                o.ok = false;
                continue;
            }
            // Every chain is a rotation of that one: T_{r^k c} = r^k T_c r^-k.
            for (int k = 0; k < n; ++k) {
                const auto c = chain_for_pair(n, (2 + k - 1) % n + 1);
                const auto h = half_twist(c, sign);
                std::vector<Generator> fwd(static_cast<std::size_t>(k), rot.gens()[0]);
                const MappingClassWord rk(n, fwd);
                const auto rinv = invert(rk);
                for (const auto& x : curves) {
                    const auto lhs = apply(h, apply(h, x));
                    const auto rhs = apply(rk, conj_twist(apply(rinv, x), 2, variant));
                    o.ok = o.ok && lhs == rhs;
                    ++checked;
                }
            }
        }
    }
    o.detail = std::to_string(checked) + " curve/twist pairs";
    return o;
}

Result x5_shape() {
    const auto r = verify_x5_shape();
    return {r.passed(), std::to_string(r.witness["triangles_attached"].get<int>()) + " attached triangles (" +
                            std::to_string(r.witness["triangles_total"].get<int>()) + " triangles in all of X_5), " +
                            "e fixes Z_5 and swaps each pair" + (r.passed() ? "" : "; " + r.reason)};
}

// Exact reading: the overlap is nothing but Z_5, T(Z_5) and the four
// triangles on both. The local configuration is reported alongside.
Result overlap_n5() {
    Result o;
    bool local = true;
    Json w;
    for (const auto& c : chain_curves(5))
        for (int s : {1, -1}) {
            const auto r = verify_overlap_n5(c, s);
            local = local && r.passed();
            w = r.witness;
            const auto& ov = w["overlap"];
            o.ok = o.ok && r.passed() && ov["vertices"] == w["configuration_vertices"] && ov["pentagons"] == 2 &&
                   ov["triangles"] == 4;
        }
    const auto& ov = w["overlap"];
    o.detail = std::string(local ? "Z_5 and T(Z_5) share one edge with 4 triangles on both"
                                 : "local configuration missing") +
               "; the whole overlap has " + ov["vertices"].dump() + " vertices (configuration " +
               w["configuration_vertices"].dump() + "), " + ov["edges"].dump() + " edges, " + ov["pentagons"].dump() +
               " 5-cycles, " + ov["triangles"].dump() + " triangles";
    return o;
}

Result restriction_iso() {
    Result o;
    for (const auto& c : chain_curves(6)) {
        const auto r = verify_restriction_iso(6, c);
        o.ok = o.ok && r.passed();
    }
    o.detail = "restriction(X_6, a) = h^a(X_5) for all 6 chains";
    return o;
}

Result overlap_contains() {
    Result o;
    int overlap = 0, rest = 0;
    for (const auto& c : chain_curves(6))
        for (int s : {1, -1}) {
            const auto r = verify_overlap_contains(6, c, s);
            o.ok = o.ok && r.passed();
            overlap = r.witness["overlap"]["vertices"].get<int>();
            rest = r.witness["restriction"]["vertices"].get<int>();
        }
    o.detail = std::to_string(rest) + "-vertex restriction inside " + std::to_string(overlap) +
               "-vertex overlap; T(P') adjacent to P and avoids a";
    return o;
}

Result normalization() {
    Result o;
    std::ostringstream d;
    for (int n : {5, 6}) {
        const auto r = orbit_cover_check(n, 500, 6, 7);
        o.ok = o.ok && r.passed() && r.vertex_pass == 500 && r.edge_pass == 500;
        d << "n=" << n << ": " << r.vertex_pass << "+" << r.edge_pass << " trials, worst " << r.worst_twists
          << " twists" << (n == 5 ? "; " : "");
    }
    o.detail = d.str();
    return o;
}

Result exhaustion_coverage() {
    Result o;
    const auto stages = exhaustion_sequence(5, 2);
    const auto& x1 = stages[0].fragment;
    const auto& x3 = stages[2].fragment;
    o.ok = stages[1].fragment.num_vertices() > x1.num_vertices() && x3.num_vertices() > stages[1].fragment.num_vertices();
    std::vector<Generator> gens;
    for (const auto& c : chain_curves(5))
        for (int s : {1, -1}) gens.push_back(half_twist(c, s));
    int words = 0;
    std::vector<std::vector<Generator>> all{{}};
    for (const auto& g : gens) all.push_back({g});
    for (const auto& g : gens)
        for (const auto& h : gens) all.push_back({g, h});
    for (const auto& w : all) {
        ++words;
        const MappingClassWord u(5, w);
        for (const auto& v : x1.vertices()) o.ok = o.ok && x3.contains(apply(u, v));
    }
    o.detail = std::to_string(words) + " words x " + std::to_string(x1.num_vertices()) + " vertices land in X_3; sizes " +
               std::to_string(x1.num_vertices()) + "," + std::to_string(stages[1].fragment.num_vertices()) + "," +
               std::to_string(x3.num_vertices());
    return o;
}

Result intersection_axioms() {
    Result o;
    int pairs = 0, chord_pairs = 0;
    for (int n : {5, 6}) {
        std::mt19937_64 rng(4242 + n);
        const auto model = sphere_model(n);
        const auto cs = gamma_family(n);
        for (int t = 0; t < 200; ++t) {
            const auto a = apply(random_word(n, 4, rng), Curve::from_chord(model, cs[rng() % cs.size()]));
            const auto b = apply(random_word(n, 4, rng), Curve::from_chord(model, cs[rng() % cs.size()]));
            const auto w = random_word(n, 5, rng);
            const int i = intersection_number(a, b);
            o.ok = o.ok && i == intersection_number(b, a) && intersection_number(a, a) == 0 &&
                   intersection_number(apply(w, a), apply(w, b)) == i;
            ++pairs;
        }
    }
    for (int n = 4; n <= 8; ++n) {
        const auto model = sphere_model(n);
        for (const auto& a : gamma_family(n))
            for (const auto& b : gamma_family(n)) {
                const bool cross = oracle::segments_cross(n, a.i(), a.j(), b.i(), b.j());
                o.ok = o.ok && intersection_number(Curve::from_chord(model, a), Curve::from_chord(model, b)) ==
                                   (cross ? 2 : 0);
                ++chord_pairs;
            }
    }
    o.detail = std::to_string(pairs) + " random pairs, " + std::to_string(chord_pairs) + " chord pairs";
    return o;
}

std::pair<int, std::string> run_tool(const std::string& args) {
    const std::string cmd = std::string(PANTSGRAPH_TOOL) + " " + args;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Result determinism() {
    const auto a = run_tool("verify all --n 5 --seed 7");
    const auto b = run_tool("verify all --n 5 --seed 7");
    Result o;
    o.ok = a.first == 0 && b.first == 0 && !a.second.empty() && a.second == b.second;
    o.detail = "two runs, " + std::to_string(a.second.size()) + " bytes each, exit " + std::to_string(a.first) + "/" +
               std::to_string(b.first) + (a.second == b.second ? ", identical" : ", different");
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Result()> run;
};

}  // namespace

// Usage: acceptance [--expect-red ID]...
// An expected-red criterion that passes counts as a failure.
int main(int argc, char** argv) {
    std::set<int> expected_red;
    for (int k = 1; k + 1 < argc; ++k)
        if (std::string(argv[k]) == "--expect-red") expected_red.insert(std::atoi(argv[++k]));
    const std::vector<Criterion> criteria{
        {1, "Z_n structure", 10, z_structure},
        {2, "Farey locality", 5, farey_locality},
        {3, "Farey exhaustion", 5, farey_exhaust},
        {4, "half-twist calculus", 30, half_twist_calculus},
        {5, "X_5 shape", 10, x5_shape},
        {6, "overlap structure", 60, overlap_n5},
        {7, "restriction isomorphism n=6", 300, restriction_iso},
        {8, "overlap containment n=6", 300, overlap_contains},
        {9, "normalization", 120, normalization},
        {10, "exhaustion coverage n=5", 120, exhaustion_coverage},
        {11, "intersection axioms", 60, intersection_axioms},
        {12, "determinism", 60, determinism},
    };
    int failed = 0, red = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Result o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            o.ok = false;
            o.detail += "; over the time limit";
        }
        const bool known = expected_red.count(c.id) > 0;
        const char* tag = o.ok ? (known ? "XPASS" : "PASS") : (known ? "RED" : "FAIL");
        failed += o.ok == known;
        red += !o.ok;
        std::printf("%-5s %2d  %-28s %s (%.2fs)\n", tag, c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed", static_cast<int>(criteria.size()) - red, criteria.size());
    if (!expected_red.empty()) std::printf(", %zu expected red", expected_red.size());
    std::printf("\n");
    return failed == 0 ? 0 : 1;
}
