#pragma once

#include "hsr/coloring.hpp"

namespace hsr {

/// Largest ground set accepted by canonical_form (exact minimisation over
/// all vertex orders).
inline constexpr std::size_t kCanonicalMaxVertices = 9;

enum class Orbit {
    relabeling,                ///< vertex permutations only
    relabeling_and_complement, ///< permutations combined with 1 - phi
};

/// Lexicographically least edge bit-vector over the orbit of phi. With the
/// default orbit this identifies phi with every relabeling of phi and of its
/// complement. Throws ResourceError above kCanonicalMaxVertices.
Coloring canonical_form(const Coloring & phi, Orbit orbit = Orbit::relabeling_and_complement);

} // namespace hsr
