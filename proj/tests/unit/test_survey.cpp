#include "hsr/canonical.hpp"
#include "hsr/errors.hpp"
#include "hsr/reconstruction.hpp"
#include "hsr/survey.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace hsr;

TEST_CASE("enumerate_canonical counts orbits")
{
    const std::size_t expected[] = {0, 0, 0, 2, 6, 18, 78, 522};
    for (std::size_t n = 3; n <= 7; ++n) {
        auto reps = enumerate_canonical(n);
        CHECK(reps.size() == expected[n]);
        for (const Coloring & r : reps)
            REQUIRE(canonical_form(r) == r);
        CHECK(std::is_sorted(reps.begin(), reps.end()));
    }
    for (int n = 3; n <= 5; ++n) {
        std::set<std::vector<int>> forms;
        for (const auto & m : oracle::all_colorings(n))
            forms.insert(oracle::colex_vector(oracle::least_form(m, true)));
        std::set<std::vector<int>> ours;
        for (const Coloring & r : enumerate_canonical(static_cast<std::size_t>(n)))
            ours.insert(oracle::colex_vector(oracle::from(r)));
        CHECK(ours == forms);
    }
    CHECK_THROWS_AS(enumerate_canonical(2), DomainError);
    CHECK_THROWS_AS(enumerate_canonical(9), DomainError);
}

TEST_CASE("survey at n = 3")
{
    SurveyResult s = survey(3);
    CHECK(s.total == 2);
    CHECK(s.reconstructible == 1);
    CHECK(s.unreconstructible_with_critical == 1);
    CHECK(s.unreconstructible_without_critical == 0);
    CHECK(s.violations.empty());
}

TEST_CASE("survey n = 4..6 is clean and consistent with brute force")
{
    for (std::size_t n = 4; n <= 6; ++n) {
        SurveyResult s = survey(n, {2, 0, 0});
        CHECK(s.exhaustive);
        CHECK(s.violations.empty());
        CHECK(s.guarded == 0);
        CHECK(s.reconstructible + s.unreconstructible_with_critical + s.unreconstructible_without_critical == s.total);
        CHECK(s.r_histogram.count(2) == 0);
        std::size_t mass = 0;
        for (auto [r, c] : s.r_histogram)
            mass += c;
        CHECK(mass == s.total);
        CHECK(s.r_histogram[0] == s.reconstructible);
        CHECK(s.r_histogram[1] == s.unreconstructible_with_critical);
        if (n >= 5)
            CHECK(s.unreconstructible_without_critical > 0);
    }
    SurveyResult five = survey(5);
    std::size_t r = 0;
    for (const Coloring & rep : enumerate_canonical(5))
        r += oracle::reconstructible(oracle::from(rep));
    CHECK(five.reconstructible == r);
}

TEST_CASE("sampled survey is seeded")
{
    CampaignOptions o{1, 42, 150};
    SurveyResult a = survey(7, o);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.seed == 42);
    CHECK(a.samples == 150);
    CHECK(a.total <= 150);
    CHECK(a.violations.empty());
    o.workers = 3;
    CHECK(survey(7, o) == a);
    o.seed = 43;
    CHECK_FALSE(survey(7, o) == a);
}

TEST_CASE("hunt_no_critical")
{
    CHECK(hunt_no_critical(4).empty());
    for (std::size_t n = 5; n <= 6; ++n) {
        auto found = hunt_no_critical(n);
        CHECK_FALSE(found.empty());
        for (const Coloring & phi : found) {
            CHECK(critical_pairs(phi).empty());
            CHECK_FALSE(is_reconstructible(phi));
            CHECK(r_value(phi) >= 3);
        }
        if (n == 5)
            for (const Coloring & phi : found) {
                auto m = oracle::from(phi);
                CHECK_FALSE(oracle::reconstructible(m));
                CHECK(oracle::critical_pairs(m).empty());
            }
    }
    CHECK(hunt_no_critical(6, {4, 0, 0}) == hunt_no_critical(6));
}

TEST_CASE("hunt_segment_question")
{
    for (std::size_t n0 = 3; n0 <= 4; ++n0)
        for (std::size_t n = n0 + 1; n <= 6; ++n) {
            auto found = hunt_segment_question(n, n0);
            CHECK(hunt_segment_question(n, n0, {3, 0, 0}) == found);
            for (const SegmentWitness & w : found) {
                REQUIRE(w.coloring.size() == n);
                CHECK(oracle::reconstructible(oracle::from(w.coloring)));
                for (std::size_t m = n0; m < n; ++m)
                    CHECK_FALSE(is_reconstructible(prefix(w.coloring, m)));
                for (std::size_t m = n0; m + 1 < n; ++m) {
                    bool step = false;
                    for (const Pair & p : critical_pairs(prefix(w.coloring, m + 1)))
                        step = step || p.hi == m;
                    CHECK(step == (std::count(w.critical_steps.begin(), w.critical_steps.end(), m) == 1));
                }
            }
        }
    // Exhaustive cross-check at n = 5 from n0 = 4 by direct filtering.
    std::set<Coloring> direct;
    for (const auto & m : oracle::all_colorings(5)) {
        Coloring phi = oracle::to(m);
        if (oracle::reconstructible(m) && !is_reconstructible(prefix(phi, 4)))
            direct.insert(phi);
    }
    auto found = hunt_segment_question(5, 4);
    // Each witness stands for the orbit under relabeling 0..3 and complement.
    std::set<Coloring> covered;
    for (const Coloring & phi : direct) {
        std::vector<Vertex> perm{0, 1, 2, 3, 4};
        Coloring best = phi;
        do {
            best = std::min({best, relabel(phi, perm), relabel(complement(phi), perm)});
        } while (std::next_permutation(perm.begin(), perm.begin() + 4));
        covered.insert(best);
    }
    std::set<Coloring> listed;
    for (const auto & w : found)
        listed.insert(w.coloring);
    CHECK(listed == covered);
    CHECK_THROWS_AS(hunt_segment_question(8, 4), DomainError);
    CHECK_THROWS_AS(hunt_segment_question(4, 4), DomainError);
}

TEST_CASE("prefix profile")
{
    auto chain = prefix_profile(CriticalChainSpec{8}, 8);
    REQUIRE(chain.size() == 6);
    for (const PrefixEntry & e : chain) {
        CHECK_FALSE(e.reconstructible);
        CHECK(std::find(e.critical_pairs.begin(), e.critical_pairs.end(), Pair(0, static_cast<Vertex>(e.m - 1))) !=
            e.critical_pairs.end());
        if (e.r_value)
            CHECK(*e.r_value == 1);
        // no critical pair {j, k} with 2 <= j < k at the top level
        for (const Pair & p : e.critical_pairs)
            if (p.hi == e.m - 1 && e.m >= 5)
                CHECK(p.lo < 2);
    }
    auto halves = prefix_profile(PartitionSpec{{{0, 2, 4, 6}, {1, 3, 5, 7}}}, 8);
    for (const PrefixEntry & e : halves) {
        CHECK_FALSE(e.reconstructible);
        for (const Pair & p : e.critical_pairs)
            CHECK((p.lo + p.hi) % 2 == 1);
    }
    CHECK_THROWS_AS(prefix_profile(CriticalChainSpec{5}, 8), DomainError);
}

TEST_CASE("recognize_triples")
{
    auto full = recognize_triples(TripleFamily::all(4));
    CHECK(full.realizable);
    CHECK(full.canonical_reconstruction == Coloring(4, 0));

    auto empty = recognize_triples(TripleFamily(4));
    CHECK(empty.realizable);
    REQUIRE(empty.canonical_reconstruction);
    CHECK(hom_triples(*empty.canonical_reconstruction).count() == 0);
    const Pair cycle[] = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    CHECK(hom_triples(Coloring::from_ones(4, cycle)).count() == 0);

    const Triple t[] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
    auto merged = recognize_triples(TripleFamily(4, t));
    CHECK_FALSE(merged.realizable);
    CHECK(merged.infeasibility_witness == Triple(1, 2, 3));
    CHECK_FALSE(merged.canonical_reconstruction);

    // No collapse, yet unrealizable: every 6-vertex coloring has a homogeneous triple.
    auto ramsey = recognize_triples(TripleFamily(6));
    CHECK_FALSE(ramsey.realizable);
    CHECK_FALSE(ramsey.infeasibility_witness);
    CHECK_FALSE(ramsey.canonical_reconstruction);
}

TEST_CASE("recognize_triples round trip, n <= 5")
{
    for (int n = 3; n <= 5; ++n) {
        oracle::Atlas atlas(n);
        for (const auto & [flags, group] : atlas.groups()) {
            TripleFamily t = hom_triples(oracle::to(group.front()));
            auto r = recognize_triples(t);
            REQUIRE(r.realizable);
            REQUIRE(hom_triples(*r.canonical_reconstruction) == t);
            Coloring least = oracle::to(group.front());
            for (const auto & m : group)
                least = std::min(least, oracle::to(m));
            CHECK(*r.canonical_reconstruction == least);
        }
    }
}

TEST_CASE("two_maximal_analysis")
{
    auto eo = two_maximal_analysis(partition_coloring({{0, 2, 4}, {1, 3, 5}}));
    CHECK(eo.applicable);
    CHECK(eo.a_holds);
    CHECK(eo.b_holds);
    CHECK(eo.c_holds);
    CHECK(eo.uncovered.empty());
    CHECK_FALSE(eo.reconstructible);
    CHECK(eo.deviations.empty());

    auto ex = two_maximal_analysis(generate(UncoveredTwoMaxSpec{12}));
    CHECK(ex.applicable);
    CHECK(ex.a_holds);
    CHECK(ex.b_holds);
    CHECK(ex.uncovered == std::vector<Vertex>{0});
    CHECK_FALSE(ex.reconstructible);

    CHECK_FALSE(two_maximal_analysis(Coloring(5, 1)).applicable);
    CHECK_THROWS_AS(two_maximal_analysis(Coloring(4)), DomainError);

    // Scan n = 5, 6: record deviations without failing.
    std::size_t applicable = 0, deviating = 0;
    for (std::size_t n = 5; n <= 6; ++n)
        for (const Coloring & phi : enumerate_canonical(n)) {
            auto r = two_maximal_analysis(phi);
            if (!r.applicable)
                continue;
            ++applicable;
            CHECK(r.a_holds);
            deviating += !r.deviations.empty();
        }
    CHECK(applicable > 0);
    MESSAGE("two-maximal instances: " << applicable << ", with finite deviations: " << deviating);
}
