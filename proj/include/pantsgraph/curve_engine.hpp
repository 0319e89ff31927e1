#pragma once

// Essential simple closed curves on S_{0,n}.
//
// A curve is identified by its normal coordinates over the reference
// triangulation: the number of times its normal representative crosses each
// edge. Alongside the coordinates every curve carries a cyclically reduced
// word in the free group pi_1(S_{0,n}) = F(g_2, ..., g_n), where g_k records
// a crossing of the triangulation edge joining punctures 1 and k on the front
// (or the equator). The word drives the mapping class action; the dual-graph
// walk it determines drives intersection numbers.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pantsgraph/surface_model.hpp"

namespace pantsgraph {

class Curve {
public:
    Curve() = default;

    /// Validates normal coordinates, traces them and returns the curve.
    static Curve from_coords(ModelPtr model, std::vector<int> coords);
    /// Curve represented by a (not necessarily reduced) word. The caller
    /// guarantees the class is simple; essentiality is checked.
    static Curve from_word(ModelPtr model, std::span<const int> word);
    static Curve from_chord(ModelPtr model, const ChordId& chord);

    int n() const { return data_->model->n(); }
    const ModelPtr& model() const { return data_->model; }
    const std::vector<int>& coords() const { return data_->coords; }
    const std::vector<int>& word() const { return data_->word; }
    /// Cyclic sequence of dual steps of the normal representative.
    const std::vector<int>& walk() const { return data_->walk; }
    /// Punctures on the side of the curve away from puncture 1 (bit k-1).
    std::uint32_t inside_mask() const { return data_->inside; }
    /// Total number of crossings with the triangulation.
    int length() const { return static_cast<int>(data_->walk.size()); }

    bool valid() const { return static_cast<bool>(data_); }

    friend bool operator==(const Curve& a, const Curve& b) { return a.coords() == b.coords(); }
    friend auto operator<=>(const Curve& a, const Curve& b) { return a.coords() <=> b.coords(); }

private:
    struct Data {
        ModelPtr model;
        std::vector<int> coords;
        std::vector<int> word;
        std::vector<int> walk;
        std::uint32_t inside = 0;
    };
    explicit Curve(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    static Curve build(ModelPtr model, std::vector<int> word, std::vector<int> walk);

    std::shared_ptr<const Data> data_;
};

struct CurveHash {
    std::size_t operator()(const Curve& c) const;
};

/// Same as Curve::from_coords.
Curve canonicalize(ModelPtr model, std::vector<int> raw_coords);

/// Number of connected components of a normal multicurve given by
/// coordinates (peripheral components included). Throws on malformed input.
int count_components(const SphereModel& model, std::span<const int> coords);

std::vector<int> walk_from_word(const SphereModel& model, std::span<const int> cyclic_word);
std::vector<int> word_from_walk(const SphereModel& model, std::span<const int> walk);
std::vector<int> coords_from_walk(const SphereModel& model, std::span<const int> walk);

/// Geometric intersection number.
int intersection_number(const Curve& a, const Curve& b);
/// Stops counting once the count exceeds `cap`; returns min(i, cap + 1).
int intersection_number_capped(const Curve& a, const Curve& b, int cap);

class Multicurve {
public:
    Multicurve() = default;
    /// Rejects duplicates, mismatched models and intersecting pairs.
    explicit Multicurve(std::vector<Curve> curves);
    /// Sorts without validation; for images of known-valid multicurves.
    static Multicurve trusted(std::vector<Curve> curves);

    const std::vector<Curve>& curves() const { return curves_; }
    std::size_t size() const { return curves_.size(); }
    bool contains(const Curve& c) const;
    int n() const { return curves_.empty() ? 0 : curves_.front().n(); }

    friend bool operator==(const Multicurve&, const Multicurve&) = default;

private:
    std::vector<Curve> curves_;  // sorted by coordinates
};

struct ComplementPiece {
    std::vector<int> punctures;       // labels 1..n
    std::vector<int> boundary;        // indices into the multicurve
    int type() const { return static_cast<int>(punctures.size() + boundary.size()); }  // S_{0,k}
};

struct ComplementReport {
    std::vector<ComplementPiece> pieces;
    std::vector<std::size_t> nontrivial;  // indices of pieces with type >= 4
};

int deficiency(int n, const Multicurve& q);
ComplementReport complement(int n, const Multicurve& q);
bool is_pants_decomposition(int n, const Multicurve& q);

class PantsDecomposition {
public:
    PantsDecomposition() = default;
    /// Throws unless the curves form a pants decomposition of S_{0,n}.
    PantsDecomposition(int n, std::vector<Curve> curves);
    static PantsDecomposition trusted(int n, std::vector<Curve> curves);

    int n() const { return n_; }
    const std::vector<Curve>& curves() const { return curves_.curves(); }
    const Multicurve& multicurve() const { return curves_; }
    bool contains(const Curve& c) const { return curves_.contains(c); }
    /// Concatenated coordinates of the sorted curves.
    std::vector<int> key() const;

    friend bool operator==(const PantsDecomposition&, const PantsDecomposition&) = default;

private:
    int n_ = 0;
    Multicurve curves_;
};

PantsDecomposition pants_from_chords(int n, std::span<const ChordId> chords);

/// Chord whose curve this is, when the curve belongs to Gamma_n.
std::optional<ChordId> as_chord(const Curve& c);

}  // namespace pantsgraph
