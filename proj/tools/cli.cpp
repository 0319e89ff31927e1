#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pantsgraph/errors.hpp"
#include "pantsgraph/farey.hpp"
#include "pantsgraph/io.hpp"
#include "pantsgraph/normalization.hpp"
#include "pantsgraph/rigid_sets.hpp"
#include "pantsgraph/verify.hpp"

namespace pantsgraph::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 7;

struct RunConfig {
    std::string what;
    int n = 5;
    int steps = 2;
    std::optional<std::uint64_t> budget;
    std::uint64_t seed = kDefaultSeed;
    std::string format;  // "", "json" or "dot"
    bool stats = false;
    bool timing = false;
    std::string out_path;
    std::string in_path;
    int trials = 500;
    int max_word = 6;
    std::vector<int> alpha;
    int sign = 1;
};

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error(ErrorKind::Parse, "cannot open " + path + " for writing");
            os_ = &file_;
        }
    }
    std::ostream& operator*() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

std::string read_input(const std::string& path) {
    if (path.empty()) throw Error(ErrorKind::Parse, "--in is required");
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::Parse, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

PantsGraphFragment build_named(const std::string& what, int n) {
    if (what == "zn") return build_Zn(n);
    if (what == "x5") {
        if (n != 5) throw Error(ErrorKind::Unsupported, "x5 needs --n 5");
        return build_X5();
    }
    return build_X(n);
}

Json small_stats(const PantsGraphFragment& g) { return Json{{"vertices", g.num_vertices()}, {"edges", g.num_edges()}}; }

Json full_stats(const PantsGraphFragment& g) {
    const auto& adj = g.adjacency();
    std::map<std::size_t, int> degrees;
    for (const auto& nb : adj) ++degrees[nb.size()];
    Json deg = Json::object();
    for (auto [d, c] : degrees) deg[std::to_string(d)] = c;
    return Json{{"n", g.n()},
                {"vertices", g.num_vertices()},
                {"edges", g.num_edges()},
                {"connected", is_connected(adj)},
                {"degrees", deg},
                {"triangles", cycles_of_length(adj, 3).size()},
                {"rectangles", cycles_of_length(adj, 4).size()},
                {"pentagons", cycles_of_length(adj, 5).size()}};
}

void emit_fragment(const RunConfig& c, const PantsGraphFragment& g, std::ostream& os, const std::string& name) {
    if (c.stats) {
        os << small_stats(g).dump() << "\n";
    } else if (c.format == "dot") {
        os << to_dot(g, name);
    } else {
        os << to_json(g).dump(2) << "\n";
    }
}

int cmd_build(const RunConfig& c, std::ostream& os) {
    emit_fragment(c, build_named(c.what, c.n), os, c.what);
    return kOk;
}

int cmd_export(RunConfig c, std::ostream& os) {
    if (c.format.empty()) c.format = "dot";
    emit_fragment(c, build_named(c.what, c.n), os, c.what);
    return kOk;
}

int cmd_stats(const RunConfig& c, std::ostream& os) {
    os << full_stats(build_named(c.what, c.n)).dump() << "\n";
    return kOk;
}

int cmd_exhaust(const RunConfig& c, std::ostream& os) {
    const auto budget = c.budget ? *c.budget : budget_from_env();
    const auto stages = exhaustion_sequence(c.n, c.steps, budget);
    if (!c.format.empty() && !c.stats) {
        emit_fragment(c, stages.back().fragment, os, "exhaustion");
        return kOk;
    }
    Json out = Json::array();
    for (const auto& s : stages)
        out.push_back(Json{{"stage", s.index}, {"vertices", s.fragment.num_vertices()}, {"edges", s.fragment.num_edges()}});
    os << (c.stats ? out.dump() : out.dump(2)) << "\n";
    return kOk;
}

int cmd_normalize(const RunConfig& c, std::ostream& os) {
    const auto in = parse_json(read_input(c.in_path), c.in_path);
    if (c.what == "vertex") {
        os << normalization_json(pants_from_json(in, c.n)).dump(2) << "\n";
        return kOk;
    }
    const int n = in.contains("n") ? in.at("n").get<int>() : c.n;
    if (!in.contains("p1") || !in.contains("p2")) throw Error(ErrorKind::Parse, "edge input needs \"p1\" and \"p2\"");
    const auto p1 = pants_from_json(in.at("p1"), n);
    const auto p2 = pants_from_json(in.at("p2"), n);
    if (!adjacent(p1, p2)) throw Error(ErrorKind::NotAdjacent, "p1 and p2 do not differ by an elementary move");
    os << to_json(normalize_edge(p1, p2)).dump(2) << "\n";
    return kOk;
}

int report(const RunConfig& c, const std::vector<VerificationReport>& rs, std::ostream& os, std::ostream& err) {
    os << to_json(rs).dump(2) << "\n";
    bool ok = true;
    for (const auto& r : rs) {
        if (c.timing) err << r.check << " " << r.seconds << "s\n";
        ok = ok && r.outcome != Outcome::Fail;
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_orbit(const RunConfig& c, std::ostream& os, std::ostream& err) {
    return report(c, {verify_orbit_cover(c.n, c.trials, c.max_word, c.seed)}, os, err);
}

int cmd_verify(const RunConfig& c, std::ostream& os, std::ostream& err) {
    std::vector<VerificationReport> rs;
    auto alpha = [&](int n) {
        if (c.alpha.size() != 2) throw Error(ErrorKind::Parse, "--alpha i,j is required");
        return ChordId(n, c.alpha[0], c.alpha[1]);
    };
    if (c.what == "all") {
        rs = verify_all(c.n, c.seed, c.trials, c.max_word);
    } else if (c.what == "z5-pentagon") {
        rs.push_back(verify_z5_pentagon());
    } else if (c.what == "x5-shape") {
        rs.push_back(verify_x5_shape());
    } else if (c.what == "overlap-n5") {
        rs.push_back(verify_overlap_n5(alpha(5), c.sign));
    } else if (c.what == "restriction-iso") {
        rs.push_back(verify_restriction_iso(c.n, alpha(c.n)));
    } else if (c.what == "overlap-contains") {
        rs.push_back(verify_overlap_contains(c.n, alpha(c.n), c.sign));
    } else if (c.what == "orbit-cover") {
        rs.push_back(verify_orbit_cover(c.n, c.trials, c.max_word, c.seed));
    } else if (c.what == "farey") {
        rs.push_back(verify_farey());
    }
    return report(c, rs, os, err);
}

int cmd_farey(const RunConfig& c, std::ostream& os) {
    if (c.steps < 0) throw Error(ErrorKind::Parse, "steps must be nonnegative");
    const auto stages = farey_exhaustion(standard_triangle(), c.steps);
    if (c.format == "dot") {
        os << to_dot(stages.back());
        return kOk;
    }
    if (c.format == "json") {
        os << to_json(stages.back()).dump(2) << "\n";
        return kOk;
    }
    Json out = Json::array();
    for (std::size_t s = 0; s < stages.size(); ++s)
        out.push_back(Json{{"stage", s + 1},
                           {"vertices", stages[s].vertices.size()},
                           {"edges", stages[s].edges.size()},
                           {"triangles", stages[s].triangles.size()}});
    os << (c.stats ? out.dump() : out.dump(2)) << "\n";
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Finite rigid sets in pants graphs of punctured spheres", "pantsgraph"};
    app.require_subcommand(1);

    const std::vector<std::string> graphs{"zn", "x5", "xn"};
    auto add_n = [&](CLI::App* s) { s->add_option("--n", c.n, "number of punctures")->check(CLI::Range(4, 12)); };
    auto add_out = [&](CLI::App* s) { s->add_option("--out", c.out_path, "write output to a file"); };
    auto add_format = [&](CLI::App* s) {
        s->add_option("--export", c.format, "output format")->check(CLI::IsMember({"json", "dot"}));
    };

    auto* build = app.add_subcommand("build", "build Z_n, X_5 or X_n");
    build->add_option("what", c.what)->required()->check(CLI::IsMember(graphs));
    add_n(build);
    add_format(build);
    add_out(build);
    build->add_flag("--stats", c.stats, "print vertex and edge counts only");

    auto* exhaust = app.add_subcommand("exhaust", "half-twist exhaustion X_1, X_2, ...");
    add_n(exhaust);
    exhaust->add_option("--steps", c.steps)->check(CLI::NonNegativeNumber);
    exhaust->add_option("--budget", c.budget, "vertex budget (default PANTSGRAPH_BUDGET or 1000000)")
        ->check(CLI::PositiveNumber);
    add_format(exhaust);
    add_out(exhaust);
    exhaust->add_flag("--stats", c.stats);

    auto* normalize = app.add_subcommand("normalize", "move a vertex or edge into Z_n");
    normalize->add_option("what", c.what)->required()->check(CLI::IsMember({"vertex", "edge"}));
    normalize->add_option("--in", c.in_path, "JSON input file, or - for stdin")->required();
    add_n(normalize);
    add_out(normalize);

    auto* orbit = app.add_subcommand("orbit-check", "normalize random vertices and edges");
    add_n(orbit);
    orbit->add_option("--trials", c.trials)->check(CLI::PositiveNumber);
    orbit->add_option("--max-word", c.max_word)->check(CLI::PositiveNumber);
    orbit->add_option("--seed", c.seed);
    add_out(orbit);
    orbit->add_flag("--timing", c.timing, "print check times to stderr");

    auto* verify = app.add_subcommand("verify", "run structural checks");
    verify->add_option("what", c.what)
        ->required()
        ->check(CLI::IsMember({"all", "z5-pentagon", "x5-shape", "overlap-n5", "restriction-iso", "overlap-contains",
                               "orbit-cover", "farey"}));
    add_n(verify);
    verify->add_option("--alpha", c.alpha, "chord i,j")->delimiter(',')->expected(2);
    verify->add_option("--sign", c.sign)->check(CLI::IsMember({-1, 1}));
    verify->add_option("--seed", c.seed);
    verify->add_option("--trials", c.trials)->check(CLI::PositiveNumber);
    verify->add_option("--max-word", c.max_word)->check(CLI::PositiveNumber);
    add_out(verify);
    verify->add_flag("--timing", c.timing, "print check times to stderr");

    auto* farey = app.add_subcommand("farey-exhaust", "triangle exhaustion of the Farey graph");
    farey->add_option("--steps", c.steps)->check(CLI::NonNegativeNumber);
    add_format(farey);
    add_out(farey);
    farey->add_flag("--stats", c.stats);

    auto* exp = app.add_subcommand("export", "write Z_n, X_5 or X_n as DOT (default) or JSON");
    exp->add_option("what", c.what)->required()->check(CLI::IsMember(graphs));
    add_n(exp);
    add_format(exp);
    add_out(exp);

    auto* stats = app.add_subcommand("stats", "counts, degrees and short cycles");
    stats->add_option("what", c.what)->required()->check(CLI::IsMember(graphs));
    add_n(stats);
    add_out(stats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Output o(c.out_path, out);
        if (*build) return cmd_build(c, *o);
        if (*exhaust) return cmd_exhaust(c, *o);
        if (*normalize) return cmd_normalize(c, *o);
        if (*orbit) return cmd_orbit(c, *o, err);
        if (*verify) return cmd_verify(c, *o, err);
        if (*farey) return cmd_farey(c, *o);
        if (*exp) return cmd_export(c, *o);
        if (*stats) return cmd_stats(c, *o);
    } catch (const Error& e) {
        err << "pantsgraph: " << e.what() << "\n";
        if (e.kind() == ErrorKind::BudgetExceeded) return kBudget;
        if (e.kind() == ErrorKind::InvariantViolation) return kCheckFailed;
        return kUsage;
    } catch (const std::exception& e) {
        err << "pantsgraph: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace pantsgraph::cli
