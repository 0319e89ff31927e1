#pragma once

// Mapping classes of S_{0,n} as words in half twists.
//
// Words act left to right: the first generator is applied first. Chain half
// twists and the rotation act through automorphism tables of the free group
// pi_1(S_{0,n}); interval twists expand into chain half twists. The front/back
// involution (n = 5 only) acts by swapping front and back fan coordinates.

#include <span>
#include <string>
#include <vector>

#include "pantsgraph/curve_engine.hpp"
#include "pantsgraph/surface_model.hpp"

namespace pantsgraph {

enum class GenKind { HalfTwistChain, FullTwistInterval, HalfTwistInterval, Rotation, InvolutionE };

const char* to_string(GenKind kind);
GenKind gen_kind_from_string(const std::string& name);

struct Generator {
    GenKind kind = GenKind::HalfTwistChain;
    ChordId chord;  // unused for Rotation / InvolutionE
    int sign = 1;

    Generator inverse() const;
    friend bool operator==(const Generator&, const Generator&) = default;
};

class MappingClassWord {
public:
    MappingClassWord() = default;
    explicit MappingClassWord(int n, std::vector<Generator> gens = {});

    int n() const { return n_; }
    const std::vector<Generator>& gens() const { return gens_; }
    bool empty() const { return gens_.empty(); }
    std::size_t size() const { return gens_.size(); }

    /// Every generator expanded to chain half twists, rotations and e.
    std::vector<Generator> primitive_gens() const;

    friend bool operator==(const MappingClassWord&, const MappingClassWord&) = default;

private:
    int n_ = 0;
    std::vector<Generator> gens_;
};

Generator half_twist(const ChordId& chain, int sign);

MappingClassWord compose(const MappingClassWord& first, const MappingClassWord& second);
MappingClassWord invert(const MappingClassWord& w);

/// Full Dehn twist about a_{i,j}: the squared Garside word in chain half
/// twists on the enclosed puncture interval.
MappingClassWord dehn_twist_word(int n, const ChordId& c, int sign);
/// Half twist about a_{i,j}: the Garside word on the enclosed interval.
MappingClassWord half_twist_interval_word(int n, const ChordId& c, int sign);
MappingClassWord involution_e_word(int n);
MappingClassWord rotation_word(int n, int sign);

Curve apply(const MappingClassWord& w, const Curve& c);
Multicurve apply(const MappingClassWord& w, const Multicurve& m);
PantsDecomposition apply(const MappingClassWord& w, const PantsDecomposition& p);

/// Image of a single generator; faster than building a one-letter word.
Curve apply(const Generator& g, const Curve& c);
PantsDecomposition apply(const Generator& g, const PantsDecomposition& p);

/// Word in g_2..g_n for a word in the peripheral loops y_1..y_n, where
/// y_1 = g_2 ... g_n and y_k = g_k^{-1}; they satisfy y_1 y_n ... y_2 = 1.
std::vector<int> expand_peripheral(int n, std::span<const int> yword);

/// Chain curve enclosing the punctures m and m+1 (mod n).
ChordId chain_for_pair(int n, int m);

}  // namespace pantsgraph
