#pragma once

#include "hsr/coloring.hpp"

#include <cstdint>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace hsr {

using ClassId = std::uint32_t;

/// Three edge classes that may not all receive the same color. Members are
/// sorted and may repeat (a repeated class turns it into a disequality).
struct NaeConstraint {
    ClassId a = 0, b = 0, c = 0;

    friend auto operator<=>(const NaeConstraint &, const NaeConstraint &) = default;
};

/// The colorings psi with hom_triples(psi) == T, as a constraint problem:
/// the three edges of every triple in T are merged into one equality class,
/// and every triple outside T becomes a not-all-equal constraint over the
/// classes of its edges.
///
/// Classes are numbered in order of their smallest edge index, so assigning
/// classes in id order visits edges in pair-index order.
class ConstraintSystem {
public:
    std::size_t size() const noexcept { return n_; }
    std::size_t class_count() const noexcept { return representative_.size(); }
    ClassId class_of(std::size_t pair) const { return class_of_edge_.at(pair); }
    /// Smallest pair index in class c.
    std::size_t representative(ClassId c) const { return representative_.at(c); }
    const std::vector<NaeConstraint> & nae() const noexcept { return nae_; }
    const TripleFamily & source() const noexcept { return source_; }

    /// False when some triple outside T had all three edges merged into one
    /// class; such a system has no solutions.
    bool feasible() const noexcept { return !collapsed_.has_value(); }
    /// The first (in triple-index order) non-member triple that collapsed.
    const std::optional<Triple> & collapsed_triple() const noexcept { return collapsed_; }

    /// Expands a class assignment (one color per class) to a coloring.
    Coloring expand(const std::vector<Color> & class_colors) const;

private:
    friend ConstraintSystem build_constraints(const TripleFamily & t);

    std::size_t n_ = 0;
    std::vector<ClassId> class_of_edge_;
    std::vector<std::size_t> representative_;
    std::vector<NaeConstraint> nae_;
    std::optional<Triple> collapsed_;
    TripleFamily source_;
};

ConstraintSystem build_constraints(const TripleFamily & t);

struct SolveResult {
    std::vector<Coloring> solutions;
    bool truncated = false;
};

/// Above this many classes, solve_all refuses limits larger than
/// kSmallSolveLimit.
inline constexpr std::size_t kSolveClassGuard = 40;
inline constexpr std::size_t kSmallSolveLimit = 1024;

/// All solutions in lexicographic edge-bit-vector order, at most `limit` of
/// them. `truncated` is set when a further solution exists. Requires limit >= 2.
SolveResult solve_all(const ConstraintSystem & cs, std::size_t limit);

/// Visits solutions in lexicographic order until the visitor returns false or
/// `stop_after` solutions have been visited. Returns the number visited.
std::size_t for_each_solution(const ConstraintSystem & cs, const std::function<bool(const Coloring &)> & visit,
    std::size_t stop_after = SIZE_MAX);

} // namespace hsr
