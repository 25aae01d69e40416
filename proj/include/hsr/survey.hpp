#pragma once

#include "hsr/coloring.hpp"
#include "hsr/generators.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hsr {

/// One representative per orbit under relabeling and complementation, sorted.
/// Built by augmenting the (n-1)-vertex representatives with every possible
/// neighbourhood of a new vertex. 3 <= n <= 8.
std::vector<Coloring> enumerate_canonical(std::size_t n);

struct CampaignOptions {
    /// Worker threads. Results never depend on this value.
    std::size_t workers = 1;
    /// Seed for sampled surveys.
    std::uint64_t seed = 0;
    /// Random draws for sampled surveys (n = 7, 8); 0 picks the default.
    std::size_t samples = 0;
};

inline constexpr std::size_t kDefaultSurveySamples = 2000;

struct Violation {
    Coloring coloring;
    std::string check;

    friend bool operator==(const Violation &, const Violation &) = default;
};

struct SurveyResult {
    std::size_t n = 0;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    /// Random draws made (sampled surveys only).
    std::size_t samples = 0;
    /// Distinct canonical colorings classified.
    std::size_t total = 0;
    std::size_t reconstructible = 0;
    std::size_t unreconstructible_with_critical = 0;
    std::size_t unreconstructible_without_critical = 0;
    /// Representatives whose model count tripped the enumeration guard; they
    /// are counted in total but in no class.
    std::size_t guarded = 0;
    std::map<std::size_t, std::size_t> r_histogram;
    std::vector<Violation> violations;

    friend bool operator==(const SurveyResult &, const SurveyResult &) = default;
};

/// Classifies every canonical coloring on n vertices (3 <= n <= 6), or a
/// deduplicated seeded sample for n = 7, 8. Each representative is checked
/// for: r != 2; a critical pair forces non-reconstructibility and r = 1 (and
/// conversely); the single-vertex change criterion; and consistency of the
/// 4-set certificate.
SurveyResult survey(std::size_t n, const CampaignOptions & options = {});

/// Canonical colorings that are not reconstructible yet have no critical
/// pair. 4 <= n <= 7.
std::vector<Coloring> hunt_no_critical(std::size_t n, const CampaignOptions & options = {});

struct SegmentWitness {
    Coloring coloring;
    /// m in [n0, n-1) such that the prefix {0..m} has a critical pair {j, m}.
    std::vector<std::size_t> critical_steps;

    friend bool operator==(const SegmentWitness &, const SegmentWitness &) = default;
};

/// Colorings phi on n vertices that are reconstructible while every prefix
/// {0..m-1}, n0 <= m < n, is not. Witnesses are listed once per orbit under
/// relabelings of {0..n0-1} and complementation. 3 <= n0 < n <= 7.
std::vector<SegmentWitness> hunt_segment_question(
    std::size_t n, std::size_t n0, const CampaignOptions & options = {});

struct PrefixEntry {
    std::size_t m = 0;
    bool reconstructible = false;
    std::vector<Pair> critical_pairs;
    /// Present when the prefix has at most kPrefixRValueClasses edge classes.
    std::optional<std::size_t> r_value;
};

inline constexpr std::size_t kPrefixRValueClasses = 26;

/// Generates spec once and profiles each prefix {0..m-1}, 3 <= m <= n_max.
/// The generated ground set must have at least n_max vertices.
std::vector<PrefixEntry> prefix_profile(const GeneratorSpec & spec, std::size_t n_max);

struct RecognitionOutcome {
    bool realizable = false;
    /// Lexicographically least coloring whose homogeneous triples are T.
    std::optional<Coloring> canonical_reconstruction;
    /// A triple outside T whose three edges are forced into one class. Absent
    /// when T is unrealizable without such a collapse (the search is then
    /// exhausted with no solution).
    std::optional<Triple> infeasibility_witness;
};

RecognitionOutcome recognize_triples(const TripleFamily & t);

struct TwoMaximalReport {
    std::vector<VertexSet> maximals;
    /// The remaining fields are meaningful only when there are exactly two
    /// maximals.
    bool applicable = false;
    /// Every homogeneous set lies inside one of the two maximals.
    bool a_holds = false;
    /// Both maximals carry the same color.
    bool b_holds = false;
    /// At most one vertex lies outside their union.
    bool c_holds = false;
    std::vector<Vertex> uncovered;
    bool reconstructible = false;
    /// Finite-scale departures from the statements known for infinite ground
    /// sets; recorded, never thrown.
    std::vector<std::string> deviations;
};

TwoMaximalReport two_maximal_analysis(const Coloring & phi);

} // namespace hsr
