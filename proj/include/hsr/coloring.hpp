#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace hsr {

using Vertex = std::uint32_t;
using Color = std::uint8_t;

/// Largest ground set representable; adjacency rows are single 64-bit words.
inline constexpr std::size_t kMaxVertices = 64;

constexpr std::size_t choose2(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr std::size_t choose3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

/// Colexicographic pair index: j(j-1)/2 + i for i < j. This order is the
/// serialization contract for every edge bit-vector in the project.
constexpr std::size_t pair_index(Vertex i, Vertex j)
{
    return i < j ? choose2(j) + i : choose2(i) + j;
}

/// Colexicographic triple index C(k,3) + C(j,2) + i for i < j < k.
std::size_t triple_index(Vertex a, Vertex b, Vertex c);

/// An unordered pair, always stored with lo < hi.
struct Pair {
    Vertex lo = 0;
    Vertex hi = 0;

    Pair() = default;
    Pair(Vertex a, Vertex b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

    friend auto operator<=>(const Pair &, const Pair &) = default;
};

/// Inverse of pair_index.
Pair pair_at(std::size_t index);

struct Triple {
    Vertex a = 0, b = 0, c = 0;

    Triple() = default;
    Triple(Vertex x, Vertex y, Vertex z);

    friend auto operator<=>(const Triple &, const Triple &) = default;
};

/// Subset of {0, ..., n-1}. Ordered by the integer value of its bitmask
/// (vertex v has weight 2^v), which is the "bit-vector order" used for
/// every sorted list of vertex sets.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::size_t n, std::uint64_t mask);
    VertexSet(std::size_t n, std::initializer_list<Vertex> members);
    VertexSet(std::size_t n, std::span<const Vertex> members);

    static VertexSet full(std::size_t n);

    std::size_t universe() const noexcept { return n_; }
    std::uint64_t mask() const noexcept { return mask_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }
    bool contains(Vertex v) const noexcept { return v < n_ && ((mask_ >> v) & 1U); }
    bool is_subset_of(const VertexSet & other) const noexcept { return (mask_ & ~other.mask_) == 0; }
    std::vector<Vertex> members() const;

    VertexSet with(Vertex v) const;

    friend bool operator==(const VertexSet & a, const VertexSet & b) noexcept { return a.mask_ == b.mask_ && a.n_ == b.n_; }
    friend std::strong_ordering operator<=>(const VertexSet & a, const VertexSet & b) noexcept
    {
        if (auto c = a.mask_ <=> b.mask_; c != 0)
            return c;
        return a.n_ <=> b.n_;
    }

private:
    std::size_t n_ = 0;
    std::uint64_t mask_ = 0;
};

/// A 2-coloring of all pairs of {0, ..., n-1}.
///
/// Stored as one adjacency word per vertex (bit j of row(i) is the color of
/// {i, j}). Ordering and equality follow the colexicographic edge bit-vector:
/// colorings compare lexicographically with pair index 0 first and 0 < 1.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::size_t n, Color fill = 0);

    /// Builds from a packed edge bit-vector (bit k of the stream is pair k).
    static Coloring from_edge_bits(std::size_t n, std::span<const std::uint64_t> bits);
    static Coloring from_ones(std::size_t n, std::span<const Pair> ones);

    std::size_t size() const noexcept { return n_; }
    std::size_t pair_count() const noexcept { return choose2(n_); }

    /// Unchecked accessors for kernels; i != j, both < n.
    Color at(Vertex i, Vertex j) const noexcept { return static_cast<Color>((rows_[i] >> j) & 1U); }
    std::uint64_t row(Vertex v) const noexcept { return rows_[v]; }
    Color bit(std::size_t pair) const;

    void set(Vertex i, Vertex j, Color c);
    void flip(Vertex i, Vertex j);

    std::vector<std::uint64_t> edge_bits() const;
    std::vector<Pair> ones() const;
    std::size_t count_ones() const;

    /// Mask with bits 0..n-1 set.
    std::uint64_t vertex_mask() const noexcept;

    friend bool operator==(const Coloring & a, const Coloring & b) noexcept { return a.n_ == b.n_ && a.rows_ == b.rows_; }
    friend std::strong_ordering operator<=>(const Coloring & a, const Coloring & b) noexcept;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Homogeneous 3-subsets of a ground set, indexed by triple_index.
class TripleFamily {
public:
    TripleFamily() = default;
    explicit TripleFamily(std::size_t n);
    TripleFamily(std::size_t n, std::span<const Triple> triples);

    static TripleFamily all(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    bool contains(Vertex a, Vertex b, Vertex c) const;
    bool contains(const Triple & t) const { return contains(t.a, t.b, t.c); }
    void insert(Vertex a, Vertex b, Vertex c);
    std::size_t count() const;
    std::vector<Triple> triples() const;

    std::span<const std::uint64_t> words() const noexcept { return bits_; }
    void set_index(std::size_t index);
    bool test_index(std::size_t index) const noexcept { return (bits_[index >> 6] >> (index & 63)) & 1U; }

    friend bool operator==(const TripleFamily &, const TripleFamily &) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> bits_;
};

enum class Homogeneity {
    strict,  ///< |H| > 2, the standard definition of a homogeneous set
    relaxed, ///< |H| >= 2, pairs count as homogeneous
};

/// Color of {i, j}; throws DomainError on out-of-range vertices or i == j.
Color pair_color(const Coloring & phi, Vertex i, Vertex j);

Coloring complement(const Coloring & phi);

/// Induced coloring on the members of s; vertex k of the result is the k-th
/// smallest member.
Coloring restriction(const Coloring & phi, const VertexSet & s);

/// Restriction to the initial segment {0, ..., m-1}.
Coloring prefix(const Coloring & phi, std::size_t m);

/// Flips exactly the listed pairs (symmetric difference of the 1-pairs with a).
Coloring finite_change(const Coloring & phi, std::span<const Pair> a);

/// Relabels vertex v as perm[v].
Coloring relabel(const Coloring & phi, std::span<const Vertex> perm);

std::optional<Color> is_homogeneous(const Coloring & phi, const VertexSet & h, Homogeneity mode = Homogeneity::strict);

TripleFamily hom_triples(const Coloring & phi);

/// Brute-force list of homogeneous sets of size >= min_size, sorted. n <= 14.
std::vector<VertexSet> homogeneous_family(const Coloring & phi, std::size_t min_size = 3);

/// Maximal homogeneous sets, as maximal cliques of size >= 3 in either color
/// graph. Deduplicated and sorted.
std::vector<VertexSet> maximal_homogeneous(const Coloring & phi);

} // namespace hsr
