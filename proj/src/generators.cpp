#include "hsr/generators.hpp"

#include "hsr/errors.hpp"

#include <algorithm>
#include <string>

namespace hsr {

namespace {

void require_size(std::size_t n, const char * what)
{
    if (n > kMaxVertices)
        throw DomainError(std::string(what) + ": at most " + std::to_string(kMaxVertices) + " vertices");
}

void require_permutation(const std::vector<Vertex> & perm)
{
    require_size(perm.size(), "permutation");
    std::vector<bool> seen(perm.size(), false);
    for (Vertex r : perm) {
        if (r >= perm.size() || seen[r])
            throw DomainError("not a permutation of 0..n-1");
        seen[r] = true;
    }
}

Coloring rank_order(const std::vector<Vertex> & perm)
{
    require_permutation(perm);
    Coloring out(perm.size());
    for (Vertex w = 1; w < perm.size(); ++w)
        for (Vertex v = 0; v < w; ++v)
            if (perm[v] < perm[w])
                out.set(v, w, 1);
    return out;
}

Coloring binary_tree(std::size_t depth)
{
    if (depth > 5)
        throw DomainError("binary tree depth is limited to 5 (63 vertices)");
    std::size_t n = (std::size_t{2} << depth) - 1;
    std::vector<std::size_t> length(n), value(n);
    for (std::size_t len = 0, idx = 0; len <= depth; ++len)
        for (std::size_t v = 0; v < (std::size_t{1} << len); ++v, ++idx) {
            length[idx] = len;
            value[idx] = v;
        }
    Coloring out(n);
    for (Vertex t = 1; t < n; ++t)
        for (Vertex s = 0; s < t; ++s)
            if (length[s] < length[t] && (value[t] >> (length[t] - length[s])) == value[s])
                out.set(s, t, 1);
    return out;
}

Coloring random_graph(const RandomGraphSpec & spec)
{
    require_size(spec.n, "random graph");
    if (spec.den == 0 || spec.num > spec.den)
        throw DomainError("random graph density must satisfy 0 <= num <= den, den > 0");
    SplitMix64 rng(spec.seed);
    Coloring out(spec.n);
    for (Vertex j = 1; j < spec.n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if (rng.next() % spec.den < spec.num)
                out.set(i, j, 1);
    return out;
}

Coloring bit_predicate(std::size_t n)
{
    require_size(n, "bit predicate");
    Coloring out(n);
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if ((j >> i) & 1U)
                out.set(i, j, 1);
    return out;
}

Coloring embed(const Coloring & inner, std::size_t n)
{
    Coloring out(n);
    for (const Pair & p : inner.ones())
        out.set(p.lo, p.hi, 1);
    return out;
}

Coloring apex_pair_gadget(const Coloring & inner)
{
    if (inner.size() != 4)
        throw DomainError("apex pair gadget needs an inner coloring on 4 vertices");
    Coloring out = embed(inner, 6);
    for (Vertex apex : {4U, 5U})
        for (Vertex v = 0; v < 6; ++v)
            if (v != apex)
                out.set(v, apex, 1);
    return out;
}

Coloring triple_anchor_gadget(const Coloring & inner)
{
    if (inner.size() != 5)
        throw DomainError("triple anchor gadget needs an inner coloring on 5 vertices");
    Coloring out = embed(inner, 8);
    out.set(0, 5, 1);
    out.set(1, 5, 1);
    out.set(2, 6, 1);
    out.set(3, 7, 1);
    return out;
}

Coloring uncovered_two_max(std::size_t n)
{
    require_size(n, "uncovered two-max");
    Coloring out(n, 1);
    for (Vertex w = 2; w < n; ++w) {
        out.set(0, w, 0);
        if (w % 2 == 0)
            out.set(1, w, 0);
    }
    return out;
}

Coloring three_max(const ThreeMaxSpec & spec)
{
    if (spec.a == 0 || spec.b == 0)
        throw DomainError("three-max needs nonempty first and second blocks");
    std::size_t n = spec.a + spec.b + spec.c;
    require_size(n, "three-max");
    Coloring out = partition_coloring([&] {
        std::vector<std::vector<Vertex>> blocks(3);
        Vertex v = 0;
        for (std::size_t k = 0; k < spec.a; ++k)
            blocks[0].push_back(v++);
        for (std::size_t k = 0; k < spec.b; ++k)
            blocks[1].push_back(v++);
        for (std::size_t k = 0; k < spec.c; ++k)
            blocks[2].push_back(v++);
        std::erase_if(blocks, [](const auto & b) { return b.empty(); });
        return blocks;
    }());
    auto a0 = Vertex{0};
    auto b0 = static_cast<Vertex>(spec.a);
    auto c0 = static_cast<Vertex>(spec.a + spec.b);
    out.set(a0, b0, 1);
    for (std::size_t i = 0; i < spec.c; ++i)
        out.set(i % 2 == 0 ? a0 : b0, static_cast<Vertex>(c0 + i), 1);
    return out;
}

Coloring interleaved_two_max(std::size_t n)
{
    require_size(n, "interleaved two-max");
    Coloring out(n);
    for (Vertex w = 1; w < n; ++w)
        for (Vertex v = 0; v < w; ++v) {
            if (v % 2 == 1 && w % 2 == 1)
                out.set(v, w, 1);
            else if (v % 2 != w % 2) {
                Vertex even = v % 2 == 0 ? v : w;
                Vertex odd = v % 2 == 0 ? w : v;
                if (even / 2 > odd / 2)
                    out.set(v, w, 1);
            }
        }
    return out;
}

Coloring pair_block_partition(const PairBlockPartitionSpec & spec)
{
    using Variant = PairBlockPartitionSpec::Variant;
    if (spec.n < 2)
        throw DomainError("pair-block partition needs at least 2 vertices");
    if (spec.variant != Variant::none && spec.n < 6)
        throw DomainError("pair-block partition variants need at least 6 vertices");
    require_size(spec.n, "pair-block partition");
    std::vector<std::vector<Vertex>> blocks(3);
    blocks[0] = {0, 1};
    for (Vertex v = 2; v < spec.n; ++v)
        blocks[v % 2 == 1 ? 1 : 2].push_back(v);
    std::erase_if(blocks, [](const auto & b) { return b.empty(); });
    Coloring out = partition_coloring(blocks);
    if (spec.variant == Variant::a) {
        const Pair flips[] = {{0, 4}, {1, 5}, {4, 5}};
        out = finite_change(out, flips);
    }
    else if (spec.variant == Variant::b) {
        const Pair flips[] = {{4, 5}};
        out = finite_change(out, flips);
    }
    return out;
}

Coloring critical_chain(std::size_t n)
{
    require_size(n, "critical chain");
    Coloring out(n);
    if (n >= 2)
        out.set(0, 1, 1);
    if (n >= 3)
        out.set(0, 2, 1);
    for (Vertex m = 2; m + 1 < n; ++m) {
        out.set(0, m + 1, 1 - out.at(0, m));
        for (Vertex k = 1; k <= m; ++k)
            out.set(k, m + 1, 1 - out.at(0, k));
    }
    return out;
}

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

} // namespace

std::string kind_name(const GeneratorSpec & spec)
{
    return std::visit(Overloaded{
                          [](const PartitionSpec &) { return "partition"; },
                          [](const SierpinskiSpec &) { return "sierpinski"; },
                          [](const LinearOrderSpec &) { return "linear_order"; },
                          [](const BinaryTreeSpec &) { return "binary_tree"; },
                          [](const RandomGraphSpec &) { return "random"; },
                          [](const BitPredicateSpec &) { return "bit_predicate"; },
                          [](const ApexPairGadgetSpec &) { return "apex_pair_gadget"; },
                          [](const TripleAnchorGadgetSpec &) { return "triple_anchor_gadget"; },
                          [](const UncoveredTwoMaxSpec &) { return "uncovered_two_max"; },
                          [](const ThreeMaxSpec &) { return "three_max"; },
                          [](const InterleavedTwoMaxSpec &) { return "interleaved_two_max"; },
                          [](const PairBlockPartitionSpec &) { return "pair_block_partition"; },
                          [](const RecursiveExtensionSpec &) { return "recursive_extension"; },
                          [](const CriticalChainSpec &) { return "critical_chain"; },
                      },
        spec);
}

Coloring generate(const GeneratorSpec & spec)
{
    return std::visit(Overloaded{
                          [](const PartitionSpec & s) { return partition_coloring(s.blocks); },
                          [](const SierpinskiSpec & s) { return rank_order(s.perm); },
                          [](const LinearOrderSpec & s) { return rank_order(s.perm); },
                          [](const BinaryTreeSpec & s) { return binary_tree(s.depth); },
                          [](const RandomGraphSpec & s) { return random_graph(s); },
                          [](const BitPredicateSpec & s) { return bit_predicate(s.n); },
                          [](const ApexPairGadgetSpec & s) { return apex_pair_gadget(s.inner); },
                          [](const TripleAnchorGadgetSpec & s) { return triple_anchor_gadget(s.inner); },
                          [](const UncoveredTwoMaxSpec & s) { return uncovered_two_max(s.n); },
                          [](const ThreeMaxSpec & s) { return three_max(s); },
                          [](const InterleavedTwoMaxSpec & s) { return interleaved_two_max(s.n); },
                          [](const PairBlockPartitionSpec & s) { return pair_block_partition(s); },
                          [](const RecursiveExtensionSpec & s) {
                              return recursive_extension(s.base, s.x0, s.steps, s.diag);
                          },
                          [](const CriticalChainSpec & s) { return critical_chain(s.n); },
                      },
        spec);
}

Coloring partition_coloring(const std::vector<std::vector<Vertex>> & blocks)
{
    std::size_t n = 0;
    for (const auto & b : blocks) {
        if (b.empty())
            throw DomainError("partition blocks must be nonempty");
        n += b.size();
    }
    require_size(n, "partition");
    std::vector<bool> seen(n, false);
    for (const auto & b : blocks)
        for (Vertex v : b) {
            if (v >= n || seen[v])
                throw DomainError("partition blocks must be disjoint and cover 0..n-1");
            seen[v] = true;
        }
    Coloring out(n);
    for (const auto & b : blocks)
        for (std::size_t x = 0; x < b.size(); ++x)
            for (std::size_t y = x + 1; y < b.size(); ++y)
                out.set(b[x], b[y], 1);
    return out;
}

Coloring recursive_extension(const Coloring & base, Vertex x0, std::size_t steps, const std::vector<Color> & diag)
{
    if (x0 >= base.size())
        throw DomainError("x0 out of range");
    if (diag.size() != steps)
        throw DomainError("recursive extension needs one diagonal color per step");
    std::size_t n = base.size() + steps;
    require_size(n, "recursive extension");
    Coloring out = embed(base, n);
    Vertex prev = x0;
    for (std::size_t k = 0; k < steps; ++k) {
        auto next = static_cast<Vertex>(base.size() + k);
        if (diag[k] > 1)
            throw DomainError("diagonal colors must be 0 or 1");
        for (Vertex z = 0; z < next; ++z)
            if (z != prev)
                out.set(z, next, 1 - out.at(z, prev));
        out.set(prev, next, diag[k]);
        prev = next;
    }
    return out;
}

Coloring random_coloring(std::size_t n, std::uint64_t seed) { return random_graph({n, seed, 1, 2}); }

} // namespace hsr
