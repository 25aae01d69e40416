#pragma once

#include "hsr/coloring.hpp"
#include "hsr/constraints.hpp"

#include <optional>
#include <vector>

namespace hsr {

/// Cap on models enumerated by r_value and classify.
inline constexpr std::size_t kModelGuard = std::size_t{1} << 22;

struct ReconstructionReport {
    bool reconstructible = false;
    /// Number of psi with H(psi) = H(phi), including phi and its complement.
    std::size_t solution_count = 0;
    /// 0 when reconstructible, otherwise the least number of pairs on which a
    /// nontrivial reconstruction differs from phi.
    std::size_t r_value = 0;
    std::vector<Pair> critical_pairs;
    /// Lexicographically least nontrivial reconstruction.
    std::optional<Coloring> witness;
};

/// Every psi sharing phi's homogeneous sets, in lexicographic order.
SolveResult reconstructions(const Coloring & phi, std::size_t limit);

/// True iff phi and 1 - phi are the only colorings with phi's homogeneous
/// sets. Stops at the third solution.
bool is_reconstructible(const Coloring & phi);

std::vector<Pair> critical_pairs(const Coloring & phi);

/// Minimum Hamming distance from phi to a nontrivial reconstruction, 0 if
/// reconstructible. Throws ResourceError past kModelGuard solutions and
/// InvariantViolation if the distance is ever 2.
std::size_t r_value(const Coloring & phi);

/// Full classification; same guards as r_value.
ReconstructionReport classify(const Coloring & phi);

/// Checks that "some reconstruction psi != phi differs from phi only on pairs
/// through a single vertex" holds exactly when phi has a critical pair.
/// Returns whether both sides agree.
bool check_single_vertex_criterion(const Coloring & phi);

struct FourSetWitness {
    VertexSet four;
    /// Smallest (size, then mask) superset with a reconstructible restriction.
    std::optional<VertexSet> witness;
};

/// For every 4-subset F, the least Y containing F with restriction(phi, Y)
/// reconstructible. If every F has a witness, phi itself must be
/// reconstructible; a failure of that implication throws InvariantViolation.
std::vector<FourSetWitness> four_set_certificate(const Coloring & phi);

struct ExtensionCheck {
    bool holds = true;
    /// First F (by size, then mask) with no vertex joined to all of it in color i.
    std::optional<VertexSet> failing;
};

/// Smallest z outside f with color(z, x) == color for every x in f.
std::optional<Vertex> extension_witness(const Coloring & phi, Color color, const VertexSet & f);

/// Every F with |F| <= max_f has an extension witness inside the ground set.
ExtensionCheck extension_property(const Coloring & phi, Color color, std::size_t max_f);

/// Adds two vertices joined to everything (and each other) in color 1.
Coloring extend_reconstructible(const Coloring & phi);

/// Adds vertex a = n with color(a, x0) = 1 and color(a, x) = 1 - color(x0, x),
/// which makes {x0, a} critical.
Coloring extend_unreconstructible(const Coloring & phi, Vertex x0);

} // namespace hsr
