#pragma once

#include "hsr/coloring.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace hsr {

/// Color 1 exactly inside blocks. Blocks must be nonempty, disjoint and cover
/// 0..n-1 where n is the total number of members.
struct PartitionSpec {
    std::vector<std::vector<Vertex>> blocks;
};

/// perm[v] is the rank attached to vertex v; {v, w} with v < w gets color 1
/// iff the ranks increase.
struct SierpinskiSpec {
    std::vector<Vertex> perm;
};

/// Same coloring as SierpinskiSpec, read as "v < w agrees with the order perm".
struct LinearOrderSpec {
    std::vector<Vertex> perm;
};

/// All binary strings of length <= depth, numbered by length and then value
/// (string s of length L gets index 2^L - 1 + value(s)). Color 1 iff one
/// string extends the other.
struct BinaryTreeSpec {
    std::size_t depth = 0;
};

/// Pair k (in pair-index order) draws the k-th SplitMix64 output x and gets
/// color 1 iff x mod den < num.
struct RandomGraphSpec {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t num = 1;
    std::uint64_t den = 2;
};

/// {i, j} with i < j gets color 1 iff bit i of j is set.
struct BitPredicateSpec {
    std::size_t n = 0;
};

/// Inner coloring on 0..3 plus vertices 4 and 5 joined to everything (and to
/// each other) in color 1.
struct ApexPairGadgetSpec {
    Coloring inner;
};

/// Inner coloring on 0..4 plus three anchors 5, 6, 7. The only 1-pairs
/// between the two parts are {0,5}, {1,5}, {2,6}, {3,7}; the anchors are
/// pairwise 0.
struct TripleAnchorGadgetSpec {
    Coloring inner;
};

/// Two maximal homogeneous sets, {2..n-1} and the odd vertices, whose union
/// misses vertex 0. For v < w: {0,1} -> 1, {0,w} -> 0, {1,w} -> w odd,
/// everything else 1.
struct UncoveredTwoMaxSpec {
    std::size_t n = 0;
};

/// Blocks of sizes a, b, c laid out consecutively (first members a0, b0, c0).
/// 1-pairs: inside each block, {a0,b0}, {a0,c_even}, {b0,c_odd}.
struct ThreeMaxSpec {
    std::size_t a = 0, b = 0, c = 0;
};

/// Evens pairwise 0, odds pairwise 1, and {2k, 2m+1} -> 1 iff k > m.
struct InterleavedTwoMaxSpec {
    std::size_t n = 0;
};

/// Partition {0,1}, {odd v > 1}, {even v > 0}, optionally followed by a
/// fixed finite change. Variant a flips {0,4},{1,5},{4,5}; variant b flips
/// {4,5}. Needs n >= 6 for a variant.
struct PairBlockPartitionSpec {
    enum class Variant { none, a, b };
    std::size_t n = 0;
    Variant variant = Variant::none;
};

/// Starting from base, appends `steps` vertices. With x_0 = x0 and x_k the
/// k-th appended vertex, color(x_k, x_{k+1}) = diag[k] and
/// color(z, x_{k+1}) = 1 - color(z, x_k) for every other earlier z.
struct RecursiveExtensionSpec {
    Coloring base;
    Vertex x0 = 0;
    std::size_t steps = 0;
    std::vector<Color> diag;
};

/// {0,1} -> 1, {0,2} -> 1, {1,2} -> 0; vertex m+1 (m >= 2) gets
/// color(0, m+1) = 1 - color(0, m) and color(k, m+1) = 1 - color(0, k).
/// Every prefix {0..m} has {0, m} critical.
struct CriticalChainSpec {
    std::size_t n = 0;
};

using GeneratorSpec = std::variant<PartitionSpec, SierpinskiSpec, LinearOrderSpec, BinaryTreeSpec, RandomGraphSpec,
    BitPredicateSpec, ApexPairGadgetSpec, TripleAnchorGadgetSpec, UncoveredTwoMaxSpec, ThreeMaxSpec,
    InterleavedTwoMaxSpec, PairBlockPartitionSpec, RecursiveExtensionSpec, CriticalChainSpec>;

/// Stable identifier of the variant, as used in the textual spec form.
std::string kind_name(const GeneratorSpec & spec);

/// Builds the coloring. Throws DomainError when the spec is malformed.
Coloring generate(const GeneratorSpec & spec);

Coloring partition_coloring(const std::vector<std::vector<Vertex>> & blocks);

Coloring recursive_extension(const Coloring & base, Vertex x0, std::size_t steps, const std::vector<Color> & diag);

/// Density 1/2 sample; shorthand for RandomGraphSpec{n, seed, 1, 2}.
Coloring random_coloring(std::size_t n, std::uint64_t seed);

/// The SplitMix64 stream used by every sampler in the project.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

} // namespace hsr
