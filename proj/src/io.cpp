#include "pantsgraph/io.hpp"

#include <sstream>

#include "pantsgraph/errors.hpp"

namespace pantsgraph {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

}  // namespace

Json to_json(const ChordId& c) { return Json::array({c.i(), c.j()}); }

Json to_json(const Curve& c) { return Json{{"coords", c.coords()}}; }

Json to_json(const PantsDecomposition& p, bool canonical) {
    Json curves = Json::array();
    for (const auto& c : p.curves()) curves.push_back(to_json(c));
    Json j{{"n", p.n()}, {"curves", curves}};
    if (auto labels = chord_labels(p)) {
        Json chords = Json::array();
        for (const auto& c : *labels) chords.push_back(to_json(c));
        j["chords"] = chords;
    }
    if (canonical) j["canonical"] = true;
    return j;
}

Json to_json(const Generator& g) {
    Json j{{"gen", to_string(g.kind)}};
    if (g.kind == GenKind::Rotation || g.kind == GenKind::InvolutionE)
        j["chord"] = nullptr;
    else
        j["chord"] = to_json(g.chord);
    j["sign"] = g.sign;
    return j;
}

Json to_json(const MappingClassWord& w) {
    Json out = Json::array();
    for (const auto& g : w.gens()) out.push_back(to_json(g));
    return out;
}

Json to_json(const PantsGraphFragment& g) {
    Json vertices = Json::array();
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
        Json curves = Json::array();
        for (const auto& c : g.vertex(v).curves()) curves.push_back(to_json(c));
        Json vj{{"id", v}, {"curves", curves}};
        if (auto labels = chord_labels(g.vertex(v))) {
            Json chords = Json::array();
            for (const auto& c : *labels) chords.push_back(to_json(c));
            vj["chords"] = chords;
        }
        vertices.push_back(vj);
    }
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
    return Json{{"n", g.n()}, {"vertices", vertices}, {"edges", edges}};
}

Json to_json(const Slope& s) { return Json::array({s.p(), s.q()}); }

Json to_json(const SlopeGraph& g) {
    Json vertices = Json::array(), edges = Json::array(), triangles = Json::array();
    for (const auto& s : g.vertices) vertices.push_back(to_json(s));
    for (const auto& [a, b] : g.edges) edges.push_back(Json::array({to_json(a), to_json(b)}));
    for (const auto& t : g.triangles) triangles.push_back(Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}));
    return Json{{"vertices", vertices}, {"edges", edges}, {"triangles", triangles}};
}

Json normalization_json(const PantsDecomposition& p) {
    const auto norm = normalize_vertex(p);
    return Json{{"input", to_json(p)},
                {"standard", to_json(norm.standard)},
                {"position", Json(std::vector<int>(norm.position.begin() + 1, norm.position.end()))},
                {"split_profile", split_profile(p)},
                {"in_Zn", in_Zn(norm.standard)}};
}

Json to_json(const EdgeNormalization& e) {
    return Json{{"p1", to_json(e.p1)},
                {"p2", to_json(e.p2)},
                {"word", to_json(e.word)},
                {"u1", to_json(e.u1)},
                {"alpha", to_json(e.alpha)},
                {"initial_intersection", e.initial_intersection},
                {"intersections", e.intersections},
                {"twists", e.twists},
                {"half_twist_sign", e.half_twist_sign},
                {"half_twist_hits_alpha", e.half_twist_hits_alpha}};
}

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Translate the byte offset into a line and column.
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t k = 0; k < stop; ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        bad(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

ChordId chord_from_json(int n, const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("chord must be [i, j]");
    return ChordId(n, as_int(j[0], "chord side"), as_int(j[1], "chord side"));
}

Curve curve_from_json(int n, const Json& j) {
    const auto model = sphere_model(n);
    if (j.is_object() && j.contains("coords")) return Curve::from_coords(model, int_list(j.at("coords"), "coords"));
    if (j.is_object() && j.contains("chord")) return Curve::from_chord(model, chord_from_json(n, j.at("chord")));
    if (j.is_object() && j.contains("word")) {
        const auto w = int_list(j.at("word"), "word");
        for (int x : w)
            if (x == 0 || x > n || x < -n || x == 1 || x == -1) bad("word letters must be +-2..+-n");
        const auto c = Curve::from_word(model, w);
        if (count_components(*model, c.coords()) != 1) throw Error(ErrorKind::NotACurve, "word is not simple");
        return c;
    }
    bad("curve must have \"coords\", \"chord\" or \"word\"");
}

MappingClassWord word_from_json(int n, const Json& j) {
    if (!j.is_array()) bad("word must be an array of generators");
    std::vector<Generator> gens;
    for (const auto& g : j) {
        Generator x;
        const auto& name = field(g, "gen");
        if (!name.is_string()) bad("\"gen\" must be a string");
        x.kind = gen_kind_from_string(name.get<std::string>());
        x.sign = g.contains("sign") ? as_int(g.at("sign"), "sign") : 1;
        if (x.kind != GenKind::Rotation && x.kind != GenKind::InvolutionE) x.chord = chord_from_json(n, field(g, "chord"));
        gens.push_back(x);
    }
    return MappingClassWord(n, std::move(gens));
}

PantsDecomposition pants_from_json(const Json& j, int n) {
    if (!j.is_object()) bad("pants decomposition must be an object");
    if (j.contains("n")) n = as_int(j.at("n"), "n");
    if (n < 4) bad("missing or invalid \"n\"");
    std::vector<Curve> cs;
    if (j.contains("chords")) {
        for (const auto& c : j.at("chords")) cs.push_back(Curve::from_chord(sphere_model(n), chord_from_json(n, c)));
    } else {
        const auto& curves = field(j, "curves");
        if (!curves.is_array()) bad("\"curves\" must be an array");
        for (const auto& c : curves) cs.push_back(curve_from_json(n, c));
    }
    PantsDecomposition p(n, std::move(cs));
    if (j.contains("apply")) p = PantsDecomposition(n, apply(word_from_json(n, j.at("apply")), p).curves());
    return p;
}

std::string to_dot(const SlopeGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (const auto& s : g.vertices) os << "  \"" << s.str() << "\";\n";
    for (const auto& [a, b] : g.edges) os << "  \"" << a.str() << "\" -- \"" << b.str() << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace pantsgraph
