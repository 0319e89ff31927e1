#include "pantsgraph/rigid_sets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>

#include "pantsgraph/errors.hpp"
#include "pantsgraph/free_group.hpp"

namespace pantsgraph {

namespace fg = free_group;

Curve PieceEmbedding::map(const Curve& c) const {
    if (c.n() != m) throw Error(ErrorKind::ModelMismatch, "curve is not on the embedded surface");
    // y^(m)_t goes to the product of the y's of feature t in relation order.
    std::vector<fg::Word> img(static_cast<std::size_t>(m + 1));
    for (int t = 2; t <= m; ++t) {
        const auto& f = features[t - 1];
        std::vector<int> yword(f.rbegin(), f.rend());
        img[t] = fg::inverse(expand_peripheral(n, yword));
    }
    const auto w = fg::substitute(c.word(), img);
    return Curve::from_word(sphere_model(n), w);
}

PantsDecomposition PieceEmbedding::map(const PantsDecomposition& u, const std::vector<Curve>& extra) const {
    std::vector<Curve> cs = extra;
    for (const auto& c : u.curves()) cs.push_back(map(c));
    return PantsDecomposition::trusted(n, std::move(cs));
}

std::optional<PieceEmbedding> piece_embedding(int n, const Multicurve& q, int piece_type) {
    const auto report = complement(n, q);
    const ComplementPiece* found = nullptr;
    int owner = -2;
    for (std::size_t p = 0; p < report.pieces.size(); ++p) {
        if (report.pieces[p].type() != piece_type) continue;
        if (found) return std::nullopt;
        found = &report.pieces[p];
        owner = static_cast<int>(p) - 1;  // piece 0 is the outer piece
    }
    if (!found) return std::nullopt;

    const std::uint32_t all = sphere_model(n)->all_punctures();
    std::vector<std::uint32_t> masks;
    for (int k : found->punctures) masks.push_back(1u << (k - 1));
    for (int b : found->boundary) {
        const auto inside = q.curves()[b].inside_mask();
        masks.push_back(b == owner ? (all & ~inside) : inside);
    }
    auto in = [](std::uint32_t mask, int k) { return (mask >> (k - 1)) & 1u; };
    PieceEmbedding h;
    h.m = piece_type;
    h.n = n;
    for (auto mask : masks) {
        // Start of the cyclic interval: the member whose predecessor is outside.
        int start = 0;
        for (int k = 1; k <= n; ++k)
            if (in(mask, k) && !in(mask, (k + n - 2) % n + 1)) {
                if (start) throw Error(ErrorKind::InvariantViolation, "feature is not a cyclic interval");
                start = k;
            }
        if (!start) throw Error(ErrorKind::InvariantViolation, "feature covers every puncture");
        std::vector<int> f;
        for (int k = start; in(mask, k); k = k % n + 1) f.push_back(k);
        h.features.push_back(std::move(f));
    }
    // Order features cyclically, starting from the one containing puncture 1.
    auto first_of = [&](const std::vector<int>& f) {
        const bool has_one = std::find(f.begin(), f.end(), 1) != f.end();
        return has_one ? -1 : f.front();
    };
    std::sort(h.features.begin(), h.features.end(),
              [&](const auto& a, const auto& b) { return first_of(a) < first_of(b); });
    return h;
}

PantsGraphFragment build_X5() {
    const int n = 5;
    const auto z = build_Zn(n);
    PantsGraphFragment x(n);
    for (const auto& v : z.vertices()) x.add_vertex(v);
    for (const auto& c : gamma_family(n))
        for (int sign : {1, -1}) {
            const auto g = half_twist(c, sign);
            for (const auto& v : z.vertices()) x.add_vertex(apply(g, v));
        }
    x.recompute_edges();
    return x;
}

std::vector<WPiece> enumerate_W(int n) {
    if (n < 6) throw Error(ErrorKind::Unsupported, "deficiency-2 pieces need n >= 6");
    const auto model = sphere_model(n);
    const auto chords = gamma_family(n);
    const std::size_t size = static_cast<std::size_t>(n - 5);
    std::vector<WPiece> out;
    std::vector<ChordId> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == size) {
            std::vector<Curve> cs;
            for (const auto& c : cur) cs.push_back(Curve::from_chord(model, c));
            auto q = Multicurve::trusted(std::move(cs));
            const auto report = complement(n, q);
            if (report.nontrivial.size() != 1 || report.pieces[report.nontrivial[0]].type() != 5) return;
            auto h = piece_embedding(n, q, 5);
            if (!h) return;
            out.push_back(WPiece{cur, q, report.pieces[report.nontrivial[0]], *h});
            return;
        }
        for (std::size_t t = start; t < chords.size(); ++t) {
            if (std::any_of(cur.begin(), cur.end(), [&](const ChordId& c) { return chords_cross(c, chords[t]); }))
                continue;
            cur.push_back(chords[t]);
            rec(t + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

PantsGraphFragment induced_x5(const WPiece& w, const PantsGraphFragment& x5) {
    PantsGraphFragment out(w.h.n);
    for (const auto& u : x5.vertices()) out.add_vertex(w.h.map(u, w.curves.curves()));
    out.recompute_edges();
    return out;
}

PantsGraphFragment induced_x5(const WPiece& w) { return induced_x5(w, build_X5()); }

PantsGraphFragment build_Xn(int n) {
    if (n < 6) throw Error(ErrorKind::Unsupported, "build_Xn needs n >= 6");
    const auto x5 = build_X5();
    auto x = build_Zn(n);
    for (const auto& w : enumerate_W(n))
        for (const auto& u : x5.vertices()) x.add_vertex(w.h.map(u, w.curves.curves()));
    x.recompute_edges();
    return x;
}

PantsGraphFragment build_X(int n) {
    if (n == 5) return build_X5();
    return build_Xn(n);
}

std::uint64_t budget_from_env() {
    const char* s = std::getenv("PANTSGRAPH_BUDGET");
    if (!s || !*s) return kDefaultBudget;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != std::string(s).size() || v == 0) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, std::string("PANTSGRAPH_BUDGET is not a positive integer: ") + s);
    }
}

RigidSetStage initial_stage(int n) {
    RigidSetStage s;
    s.index = 1;
    s.fragment = build_X(n);
    for (int v = 0; v < static_cast<int>(s.fragment.num_vertices()); ++v) s.provenance.push_back(Provenance{v, {}});
    return s;
}

RigidSetStage exhaust_step(const RigidSetStage& stage, const std::vector<ChordId>& chains) {
    RigidSetStage next;
    next.index = stage.index + 1;
    next.fragment = PantsGraphFragment(stage.fragment.n());
    for (const auto& v : stage.fragment.vertices()) next.fragment.add_vertex(v);
    next.provenance = stage.provenance;
    for (int v = 0; v < static_cast<int>(stage.fragment.num_vertices()); ++v) {
        for (const auto& c : chains)
            for (int sign : {1, -1}) {
                const auto g = half_twist(c, sign);
                const auto before = next.fragment.num_vertices();
                next.fragment.add_vertex(apply(g, stage.fragment.vertex(v)));
                if (next.fragment.num_vertices() > before) {
                    Provenance p = stage.provenance[v];
                    p.word.push_back(g);
                    next.provenance.push_back(std::move(p));
                }
            }
    }
    next.fragment.recompute_edges();
    return next;
}

double projected_vertices(std::size_t first_stage, std::size_t generators, int steps) {
    return static_cast<double>(first_stage) * std::pow(static_cast<double>(2 * generators + 1), steps);
}

std::vector<RigidSetStage> exhaustion_sequence(int n, int steps, std::uint64_t budget) {
    if (n < 5) throw Error(ErrorKind::Unsupported, "exhaustion needs n >= 5");
    if (steps < 0) throw Error(ErrorKind::Parse, "steps must be nonnegative");
    if (budget == 0) throw Error(ErrorKind::Parse, "budget must be positive");
    const auto chains = chain_curves(n);
    std::vector<RigidSetStage> out;
    out.push_back(initial_stage(n));
    const double projected = projected_vertices(out[0].fragment.num_vertices(), chains.size(), steps);
    if (projected > static_cast<double>(budget)) {
        std::ostringstream msg;
        msg << "projected " << std::setprecision(3) << projected << " vertices exceeds budget " << budget;
        throw Error(ErrorKind::BudgetExceeded, msg.str());
    }
    for (int s = 0; s < steps; ++s) {
        out.push_back(exhaust_step(out.back(), chains));
        if (out.back().fragment.num_vertices() > budget)
            throw Error(ErrorKind::BudgetExceeded, "stage " + std::to_string(out.back().index) + " exceeds budget");
    }
    return out;
}

}  // namespace pantsgraph
