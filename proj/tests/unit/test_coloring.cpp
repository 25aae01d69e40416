#include "hsr/canonical.hpp"
#include "hsr/coloring.hpp"
#include "hsr/errors.hpp"
#include "hsr/generators.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace hsr;

namespace {

Coloring even_odd(std::size_t n)
{
    std::vector<std::vector<Vertex>> blocks(2);
    for (Vertex v = 0; v < n; ++v)
        blocks[v % 2].push_back(v);
    return partition_coloring(blocks);
}

std::vector<std::uint64_t> masks(const std::vector<VertexSet> & sets)
{
    std::vector<std::uint64_t> out;
    for (const auto & s : sets)
        out.push_back(s.mask());
    return out;
}

} // namespace

TEST_CASE("pair and triple indexing is colexicographic")
{
    CHECK(pair_index(0, 1) == 0);
    CHECK(pair_index(0, 2) == 1);
    CHECK(pair_index(1, 2) == 2);
    CHECK(pair_index(0, 3) == 3);
    CHECK(pair_index(3, 0) == 3);
    for (std::size_t k = 0; k < choose2(20); ++k) {
        Pair p = pair_at(k);
        CHECK(pair_index(p.lo, p.hi) == k);
    }
    CHECK(triple_index(0, 1, 2) == 0);
    CHECK(triple_index(0, 1, 3) == 1);
    CHECK(triple_index(2, 1, 3) == 3);
    CHECK(triple_index(0, 1, 4) == 4);
}

TEST_CASE("pair_color is symmetric and range-checked")
{
    Coloring ones(3, 1);
    CHECK(pair_color(ones, 0, 1) == 1);
    CHECK(pair_color(ones, 1, 0) == 1);
    CHECK(pair_color(even_odd(6), 0, 1) == 0);
    CHECK_THROWS_AS(pair_color(ones, 0, 0), DomainError);
    CHECK_THROWS_AS(pair_color(ones, 0, 3), DomainError);
}

TEST_CASE("edge bits round trip in pair-index order")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Coloring phi = random_coloring(12, seed);
        auto bits = phi.edge_bits();
        CHECK(Coloring::from_edge_bits(12, bits) == phi);
        for (std::size_t k = 0; k < phi.pair_count(); ++k) {
            Pair p = pair_at(k);
            CHECK(((bits[k / 64] >> (k % 64)) & 1U) == phi.at(p.lo, p.hi));
        }
    }
}

TEST_CASE("complement and finite change are involutions")
{
    CHECK(complement(Coloring(4, 0)) == Coloring(4, 1));
    Coloring cross = complement(even_odd(4));
    CHECK(cross.count_ones() == 4);
    CHECK(cross.at(0, 1) == 1);
    CHECK(cross.at(0, 2) == 0);

    Coloring phi = random_coloring(9, 7);
    CHECK(complement(complement(phi)) == phi);
    CHECK(finite_change(phi, {}) == phi);
    std::vector<Pair> all;
    for (std::size_t k = 0; k < phi.pair_count(); ++k)
        all.push_back(pair_at(k));
    CHECK(finite_change(phi, all) == complement(phi));
    const Pair some[] = {{0, 3}, {2, 8}, {5, 1}};
    CHECK(finite_change(finite_change(phi, some), some) == phi);

    const Pair first[] = {{0, 1}};
    Coloring changed = finite_change(even_odd(6), first);
    CHECK(changed.at(0, 1) == 1);
    CHECK(changed.at(2, 3) == 0);
    CHECK(changed.count_ones() == even_odd(6).count_ones() + 1);
    const Pair bad[] = {{0, 6}};
    CHECK_THROWS_AS(finite_change(even_odd(6), bad), DomainError);
}

TEST_CASE("restriction keeps members in increasing order")
{
    Coloring phi = even_odd(6);
    CHECK(restriction(phi, VertexSet::full(6)) == phi);
    CHECK(restriction(phi, VertexSet(6, {0, 2, 4})) == Coloring(3, 1));
    Coloring three = partition_coloring({{0, 1, 2}, {3, 4}, {5}});
    CHECK(restriction(three, VertexSet(6, {0, 3, 5})) == Coloring(3, 0));
    CHECK(restriction(three, VertexSet(6, std::uint64_t{0})).size() == 0);

    Coloring r = random_coloring(10, 3);
    VertexSet big(10, {1, 2, 4, 6, 7, 9});
    VertexSet small(10, {2, 6, 9});
    // small sits at positions 1, 3, 5 of big
    CHECK(restriction(restriction(r, big), VertexSet(6, {1, 3, 5})) == restriction(r, small));
}

TEST_CASE("is_homogeneous follows the size convention")
{
    CHECK(is_homogeneous(Coloring(4, 1), VertexSet(4, {0, 1, 2})) == Color{1});
    CHECK_FALSE(is_homogeneous(even_odd(6), VertexSet(6, {0, 1, 2})).has_value());
    CHECK_FALSE(is_homogeneous(Coloring(4, 1), VertexSet(4, {0, 1})).has_value());
    CHECK(is_homogeneous(Coloring(4, 1), VertexSet(4, {0, 1}), Homogeneity::relaxed) == Color{1});
}

TEST_CASE("hom_triples examples")
{
    CHECK(hom_triples(Coloring(3, 1)).count() == 1);
    CHECK(hom_triples(even_odd(4)).count() == 0);
    TripleFamily t = hom_triples(partition_coloring({{0, 1, 2}, {3, 4}, {5}}));
    CHECK(t.contains(0, 1, 2));
    CHECK(t.contains(0, 3, 5));
    CHECK(t.contains(5, 3, 0));
    CHECK_FALSE(t.contains(0, 1, 3));
    CHECK_THROWS_AS(hom_triples(Coloring(2)), DomainError);
}

TEST_CASE("hom_triples matches the brute-force triple scan")
{
    for (int n = 3; n <= 5; ++n)
        for (const auto & m : oracle::all_colorings(n)) {
            TripleFamily t = hom_triples(oracle::to(m));
            auto flags = oracle::triple_flags(m);
            std::size_t k = 0;
            for (Vertex i = 0; i < static_cast<Vertex>(n); ++i)
                for (Vertex j = i + 1; j < static_cast<Vertex>(n); ++j)
                    for (Vertex l = j + 1; l < static_cast<Vertex>(n); ++l)
                        REQUIRE(t.contains(i, j, l) == flags[k++]);
            REQUIRE(hom_triples(complement(oracle::to(m))) == t);
        }
}

TEST_CASE("homogeneous_family examples and guard")
{
    CHECK(homogeneous_family(Coloring(4, 1)).size() == 5);
    auto parts = homogeneous_family(even_odd(6));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == VertexSet(6, {0, 2, 4}));
    CHECK(parts[1] == VertexSet(6, {1, 3, 5}));
    CHECK(generate(SierpinskiSpec{{0, 1, 2, 3}}) == Coloring(4, 1));
    CHECK_THROWS_AS(homogeneous_family(Coloring(15)), ResourceError);
}

TEST_CASE("maximal_homogeneous agrees with brute force up to n = 8")
{
    CHECK(masks(maximal_homogeneous(even_odd(6))) == std::vector<std::uint64_t>{0b010101, 0b101010});
    CHECK(masks(maximal_homogeneous(Coloring(5, 1))) == std::vector<std::uint64_t>{0b11111});
    for (int n = 3; n <= 5; ++n)
        for (const auto & m : oracle::all_colorings(n))
            REQUIRE(masks(maximal_homogeneous(oracle::to(m))) == oracle::maximal_sets(m));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::size_t n = 6 + seed % 3;
        Coloring phi = random_coloring(n, seed);
        REQUIRE(masks(maximal_homogeneous(phi)) == oracle::maximal_sets(oracle::from(phi)));
        REQUIRE(masks(homogeneous_family(phi)) == oracle::homogeneous_sets(oracle::from(phi)));
    }
}

TEST_CASE("homogeneous_family is closed under same-color subsets")
{
    Coloring phi = random_coloring(9, 11);
    auto family = homogeneous_family(phi);
    std::set<std::uint64_t> present;
    for (const auto & s : family)
        present.insert(s.mask());
    for (const auto & s : family)
        for (Vertex v : s.members())
            if (s.size() > 3)
                CHECK(present.count(s.mask() & ~(std::uint64_t{1} << v)));
}

TEST_CASE("canonical_form is the least orbit member")
{
    CHECK(canonical_form(Coloring(4, 1)) == Coloring(4, 0));
    for (int n = 3; n <= 5; ++n)
        for (const auto & m : oracle::all_colorings(n)) {
            REQUIRE(oracle::from(canonical_form(oracle::to(m))) == oracle::least_form(m, true));
            REQUIRE(oracle::from(canonical_form(oracle::to(m), Orbit::relabeling)) == oracle::least_form(m, false));
        }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Coloring phi = random_coloring(7, seed);
        REQUIRE(oracle::from(canonical_form(phi)) == oracle::least_form(oracle::from(phi), true));
    }
}

TEST_CASE("canonical_form is orbit-invariant and idempotent")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Coloring phi = random_coloring(9, seed);
        Coloring c = canonical_form(phi);
        CHECK(canonical_form(c) == c);
        CHECK(canonical_form(complement(phi)) == c);
        std::vector<Vertex> perm{3, 8, 0, 5, 1, 7, 2, 6, 4};
        CHECK(canonical_form(relabel(phi, perm)) == c);
    }
    CHECK_THROWS_AS(canonical_form(Coloring(10)), ResourceError);
}

TEST_CASE("orbit counts at n = 4 match brute force")
{
    std::set<std::vector<int>> forms;
    for (const auto & m : oracle::all_colorings(4))
        forms.insert(oracle::colex_vector(oracle::least_form(m, true)));
    std::set<Coloring> ours;
    for (const auto & m : oracle::all_colorings(4))
        ours.insert(canonical_form(oracle::to(m)));
    CHECK(forms.size() == 6);
    CHECK(ours.size() == forms.size());
}
