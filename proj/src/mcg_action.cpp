#include "pantsgraph/mcg_action.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "pantsgraph/errors.hpp"
#include "pantsgraph/free_group.hpp"

namespace pantsgraph {

namespace fg = free_group;

namespace {

// Images of g_2..g_n (indexed by generator) given images of y_1..y_n.
std::vector<fg::Word> g_images(int n, const std::vector<fg::Word>& yimg) {
    std::vector<fg::Word> img(static_cast<std::size_t>(n + 1));
    for (int k = 2; k <= n; ++k) img[k] = fg::inverse(expand_peripheral(n, yimg[k]));
    return img;
}

struct Tables {
    // half[m][s]: pair (m, m+1), s = 0 for sign +1, 1 for sign -1.
    std::vector<std::array<std::vector<fg::Word>, 2>> half;
    std::array<std::vector<fg::Word>, 2> rotation;
};

Tables make_tables(int n) {
    Tables t;
    t.half.resize(static_cast<std::size_t>(n + 1));
    auto identity = [n] {
        std::vector<fg::Word> y(static_cast<std::size_t>(n + 1));
        for (int k = 1; k <= n; ++k) y[k] = {k};
        return y;
    };
    for (int m = 1; m <= n; ++m) {
        const int a = m % n + 1;
        const int b = m;
        auto plus = identity();
        plus[a] = {a, b, -a};
        plus[b] = {a};
        auto minus = identity();
        minus[a] = {b};
        minus[b] = {-b, a, b};
        t.half[m][0] = g_images(n, plus);
        t.half[m][1] = g_images(n, minus);
    }
    auto fwd = identity();
    auto back = identity();
    for (int k = 1; k <= n; ++k) {
        fwd[k] = {k % n + 1};
        back[k] = {(k + n - 2) % n + 1};
    }
    t.rotation[0] = g_images(n, fwd);
    t.rotation[1] = g_images(n, back);
    return t;
}

const Tables& tables(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Tables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Tables>(make_tables(n));
    return *slot;
}

int pair_of_chain(int n, const ChordId& c) { return c.enclosed_interval(n).first; }

void check_generator(int n, const Generator& g) {
    if (g.sign != 1 && g.sign != -1) throw Error(ErrorKind::InvalidChord, "generator sign must be +1 or -1");
    switch (g.kind) {
        case GenKind::HalfTwistChain:
            // Re-validate against n: the chord may have been built for another surface.
            if (ChordId(n, g.chord.i(), g.chord.j()) != g.chord || !g.chord.is_chain(n))
                throw Error(ErrorKind::InvalidChord, "half twist requires a chain curve");
            break;
        case GenKind::FullTwistInterval:
        case GenKind::HalfTwistInterval:
            if (ChordId(n, g.chord.i(), g.chord.j()) != g.chord)
                throw Error(ErrorKind::InvalidChord, "chord not in the curve family");
            break;
        case GenKind::InvolutionE:
            if (n != 5) throw Error(ErrorKind::Unsupported, "involution e is only defined for n = 5");
            break;
        case GenKind::Rotation:
            break;
    }
}

// Garside word on the puncture interval first..first+size-1, in pair indices.
std::vector<int> garside_pairs(int n, int first, int size) {
    std::vector<int> pairs;
    for (int r = size - 1; r >= 1; --r)
        for (int t = 0; t < r; ++t) pairs.push_back((first - 1 + t) % n + 1);
    return pairs;
}

void expand_into(int n, const Generator& g, std::vector<Generator>& out) {
    switch (g.kind) {
        case GenKind::HalfTwistChain:
        case GenKind::Rotation:
        case GenKind::InvolutionE:
            out.push_back(g);
            return;
        case GenKind::FullTwistInterval:
        case GenKind::HalfTwistInterval: {
            const auto [first, size] = g.chord.enclosed_interval(n);
            auto pairs = garside_pairs(n, first, size);
            std::vector<Generator> once;
            for (int m : pairs) once.push_back(half_twist(chain_for_pair(n, m), 1));
            if (g.sign < 0) {
                std::reverse(once.begin(), once.end());
                for (auto& x : once) x.sign = -1;
            }
            const int reps = g.kind == GenKind::FullTwistInterval ? 2 : 1;
            for (int r = 0; r < reps; ++r) out.insert(out.end(), once.begin(), once.end());
            return;
        }
    }
}

std::vector<int> swap_front_back(const SphereModel& model, const std::vector<int>& coords) {
    std::vector<int> out = coords;
    for (int k = 3; k <= model.n() - 1; ++k) std::swap(out[model.front_diag(k)], out[model.back_diag(k)]);
    return out;
}

// Runs primitive generators over a curve, keeping only the word between
// coordinate-level steps.
Curve run(const std::vector<Generator>& prims, const Curve& c) {
    const int n = c.n();
    const auto& tab = tables(n);
    Curve cur = c;
    fg::Word w = c.word();
    bool dirty = false;
    for (const auto& g : prims) {
        switch (g.kind) {
            case GenKind::HalfTwistChain:
                w = fg::cyclic_reduce(
                    fg::substitute(w, tab.half[pair_of_chain(n, g.chord)][g.sign > 0 ? 0 : 1]));
                dirty = true;
                break;
            case GenKind::Rotation:
                w = fg::cyclic_reduce(fg::substitute(w, tab.rotation[g.sign > 0 ? 0 : 1]));
                dirty = true;
                break;
            case GenKind::InvolutionE: {
                if (dirty) cur = Curve::from_word(c.model(), w);
                cur = Curve::from_coords(c.model(), swap_front_back(*c.model(), cur.coords()));
                w = cur.word();
                dirty = false;
                break;
            }
            default:
                throw Error(ErrorKind::InvariantViolation, "non-primitive generator in expansion");
        }
    }
    if (dirty) cur = Curve::from_word(c.model(), w);
    return cur;
}

}  // namespace

std::vector<int> expand_peripheral(int n, std::span<const int> yword) {
    fg::Word out;
    for (int x : yword) {
        const int k = x > 0 ? x : -x;
        fg::Word piece;
        if (k == 1) {
            for (int g = 2; g <= n; ++g) piece.push_back(g);
        } else {
            piece.push_back(-k);
        }
        if (x < 0) piece = fg::inverse(piece);
        fg::append_reduced(out, piece);
    }
    return out;
}

const char* to_string(GenKind kind) {
    switch (kind) {
        case GenKind::HalfTwistChain: return "half_twist_chain";
        case GenKind::FullTwistInterval: return "full_twist_interval";
        case GenKind::HalfTwistInterval: return "half_twist_interval";
        case GenKind::Rotation: return "rotation";
        case GenKind::InvolutionE: return "involution_e";
    }
    return "?";
}

GenKind gen_kind_from_string(const std::string& name) {
    for (auto k : {GenKind::HalfTwistChain, GenKind::FullTwistInterval, GenKind::HalfTwistInterval,
                   GenKind::Rotation, GenKind::InvolutionE})
        if (name == to_string(k)) return k;
    throw Error(ErrorKind::Parse, "unknown generator '" + name + "'");
}

Generator Generator::inverse() const {
    Generator g = *this;
    if (kind != GenKind::InvolutionE) g.sign = -sign;
    return g;
}

MappingClassWord::MappingClassWord(int n, std::vector<Generator> gens) : n_(n), gens_(std::move(gens)) {
    if (n < 4) throw Error(ErrorKind::InvalidSurface, "n must be at least 4");
    for (const auto& g : gens_) check_generator(n, g);
}

std::vector<Generator> MappingClassWord::primitive_gens() const {
    std::vector<Generator> out;
    for (const auto& g : gens_) expand_into(n_, g, out);
    return out;
}

Generator half_twist(const ChordId& chain, int sign) { return Generator{GenKind::HalfTwistChain, chain, sign}; }

ChordId chain_for_pair(int n, int m) { return chord_around(n, m, 2); }

MappingClassWord compose(const MappingClassWord& first, const MappingClassWord& second) {
    if (first.empty() && first.n() == 0) return second;
    if (second.empty() && second.n() == 0) return first;
    if (first.n() != second.n()) throw Error(ErrorKind::ModelMismatch, "words on different surfaces");
    auto gens = first.gens();
    gens.insert(gens.end(), second.gens().begin(), second.gens().end());
    return MappingClassWord(first.n(), std::move(gens));
}

MappingClassWord invert(const MappingClassWord& w) {
    std::vector<Generator> gens;
    for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it) gens.push_back(it->inverse());
    return MappingClassWord(w.n(), std::move(gens));
}

MappingClassWord dehn_twist_word(int n, const ChordId& c, int sign) {
    return MappingClassWord(n, {Generator{GenKind::FullTwistInterval, c, sign}});
}

MappingClassWord half_twist_interval_word(int n, const ChordId& c, int sign) {
    return MappingClassWord(n, {Generator{GenKind::HalfTwistInterval, c, sign}});
}

MappingClassWord involution_e_word(int n) {
    if (n != 5) throw Error(ErrorKind::Unsupported, "involution e is only defined for n = 5");
    return MappingClassWord(n, {Generator{GenKind::InvolutionE, ChordId{}, 1}});
}

MappingClassWord rotation_word(int n, int sign) {
    return MappingClassWord(n, {Generator{GenKind::Rotation, ChordId{}, sign}});
}

Curve apply(const MappingClassWord& w, const Curve& c) {
    if (w.empty()) return c;
    if (w.n() != c.n()) throw Error(ErrorKind::ModelMismatch, "word and curve on different surfaces");
    return run(w.primitive_gens(), c);
}

Curve apply(const Generator& g, const Curve& c) {
    const int n = c.n();
    check_generator(n, g);
    std::vector<Generator> prims;
    expand_into(n, g, prims);
    return run(prims, c);
}

Multicurve apply(const MappingClassWord& w, const Multicurve& m) {
    if (w.empty()) return m;
    if (!m.curves().empty() && w.n() != m.n())
        throw Error(ErrorKind::ModelMismatch, "word and multicurve on different surfaces");
    const auto prims = w.primitive_gens();
    std::vector<Curve> out;
    out.reserve(m.size());
    for (const auto& c : m.curves()) out.push_back(run(prims, c));
    return Multicurve::trusted(std::move(out));
}

PantsDecomposition apply(const MappingClassWord& w, const PantsDecomposition& p) {
    if (w.empty()) return p;
    if (w.n() != p.n()) throw Error(ErrorKind::ModelMismatch, "word and pants decomposition on different surfaces");
    const auto prims = w.primitive_gens();
    std::vector<Curve> out;
    out.reserve(p.curves().size());
    for (const auto& c : p.curves()) out.push_back(run(prims, c));
    return PantsDecomposition::trusted(p.n(), std::move(out));
}

PantsDecomposition apply(const Generator& g, const PantsDecomposition& p) {
    const int n = p.n();
    check_generator(n, g);
    std::vector<Generator> prims;
    expand_into(n, g, prims);
    std::vector<Curve> out;
    out.reserve(p.curves().size());
    for (const auto& c : p.curves()) out.push_back(run(prims, c));
    return PantsDecomposition::trusted(n, std::move(out));
}

}  // namespace pantsgraph
