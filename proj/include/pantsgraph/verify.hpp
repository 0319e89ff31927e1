#pragma once

// Machine checks of the finite structure of Z_n, X_5, X_n and their
// half-twist overlaps.

#include <cstdint>
#include <string>
#include <vector>

#include "pantsgraph/io.hpp"
#include "pantsgraph/pants_graph.hpp"

namespace pantsgraph {

enum class Outcome { Pass, Fail, Skipped };

const char* to_string(Outcome o);

struct VerificationReport {
    std::string check;
    Json params = Json::object();
    Outcome outcome = Outcome::Pass;
    std::string reason;  // set for fail and skipped
    Json witness = Json::object();
    double seconds = 0;  // wall time; not serialized

    bool passed() const { return outcome == Outcome::Pass; }
    Json to_json() const;
};

/// Z_5 is a 5-cycle whose consecutive vertices share one curve each, the five
/// shared curves being distinct. `crosses` exists for negative controls.
VerificationReport verify_z5_pentagon(const CrossPredicate& crosses = chords_cross);

/// X_5 is Z_5 plus 10 attached triangles, two on each Z_5 edge, each with one
/// vertex off Z_5; e fixes Z_5 and swaps the triangles on every edge.
VerificationReport verify_x5_shape();

/// X_5 ∩ T(X_5), T = T_alpha^{sign/2}: two alternating pentagons sharing one
/// edge, and four triangles attached to both.
VerificationReport verify_overlap_n5(const ChordId& alpha, int sign);

/// restriction(X_n, alpha) is the image of X_{n-1} under h^alpha.
VerificationReport verify_restriction_iso(int n, const ChordId& alpha);

/// restriction(X_n, alpha) is a proper subgraph of X_n ∩ T(X_n), with the
/// flipped vertex T(P') as the witness.
VerificationReport verify_overlap_contains(int n, const ChordId& alpha, int sign);

VerificationReport verify_orbit_cover(int n, int trials, int max_word, std::uint64_t seed);

/// Farey edges with |p|, q <= bound each lie in two triangles, and the
/// exhaustion from the standard triangle covers slopes with |p|, q <= cover.
VerificationReport verify_farey(int bound = 20, int steps = 6, int cover = 5);

/// Full suite for n: n = 4 runs the Farey checks, n = 5 the pentagon, X_5
/// and overlap checks, n >= 6 the restriction checks over all chains.
/// Every n >= 5 also runs the orbit check with the given seed.
std::vector<VerificationReport> verify_all(int n, std::uint64_t seed, int trials = 500, int max_word = 6);

/// Cached X_n (n >= 5).
const PantsGraphFragment& cached_X(int n);

Json to_json(const std::vector<VerificationReport>& reports);

}  // namespace pantsgraph
