#include "hsr/survey.hpp"

#include "hsr/canonical.hpp"
#include "hsr/constraints.hpp"
#include "hsr/errors.hpp"
#include "hsr/reconstruction.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>
#include <string>
#include <thread>

namespace hsr {

namespace {

// Runs f(i) for i in [0, count) on `workers` threads, striding the indices.
// Results land in slot i, so the output is independent of scheduling. The
// exception from the lowest failing index is rethrown.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, std::size_t workers, F f)
{
    std::vector<T> out(count);
    std::vector<std::exception_ptr> errors(count);
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
    auto run = [&](std::size_t w) {
        for (std::size_t i = w; i < count; i += workers) {
            try {
                out[i] = f(i);
            }
            catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1)
        run(0);
    else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (auto & t : pool)
            t.join();
    }
    for (auto & e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

// phi on n vertices plus vertex n joined in color 1 to the members of mask.
Coloring augment(const Coloring & phi, std::uint64_t mask)
{
    std::size_t n = phi.size();
    Coloring out(n + 1);
    for (const Pair & p : phi.ones())
        out.set(p.lo, p.hi, 1);
    for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1U)
            out.set(v, static_cast<Vertex>(n), 1);
    return out;
}

void require_range(std::size_t n, std::size_t lo, std::size_t hi, const char * op)
{
    if (n < lo || n > hi)
        throw DomainError(std::string(op) + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
}

enum class Verdict { reconstructible, with_critical, without_critical, guarded };

struct Outcome {
    Verdict verdict = Verdict::guarded;
    std::size_t r = 0;
    std::vector<std::string> failures;
};

Outcome examine(const Coloring & phi)
{
    Outcome out;
    try {
        ReconstructionReport report = classify(phi);
        out.r = report.r_value;
        bool critical = !report.critical_pairs.empty();
        out.verdict = report.reconstructible ? Verdict::reconstructible
            : critical                       ? Verdict::with_critical
                                             : Verdict::without_critical;
        if (critical != (report.r_value == 1))
            out.failures.push_back("critical pair iff r = 1");
        if (report.reconstructible != (report.solution_count == 2))
            out.failures.push_back("reconstructible iff two solutions");
        if (!check_single_vertex_criterion(phi))
            out.failures.push_back("single-vertex change iff critical pair");
    }
    catch (const InvariantViolation & e) {
        out.failures.push_back(e.what());
        return out;
    }
    catch (const ResourceError &) {
        out.verdict = Verdict::guarded;
        return out;
    }
    if (phi.size() >= 4) {
        try {
            four_set_certificate(phi);
        }
        catch (const InvariantViolation & e) {
            out.failures.push_back(e.what());
        }
    }
    return out;
}

// Least image of phi under relabelings of {0..k-1} and complementation.
Coloring least_under_head_relabeling(const Coloring & phi, std::size_t k)
{
    std::vector<Vertex> perm(phi.size());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    Coloring inverse = complement(phi);
    Coloring best = std::min(phi, inverse);
    do {
        best = std::min({best, relabel(phi, perm), relabel(inverse, perm)});
    } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k)));
    return best;
}

} // namespace

std::vector<Coloring> enumerate_canonical(std::size_t n)
{
    require_range(n, 3, 8, "enumerate_canonical");
    std::vector<Coloring> reps{Coloring(1)};
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<Coloring> next;
        next.reserve(reps.size() << k);
        for (const Coloring & r : reps)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask)
                next.push_back(canonical_form(augment(r, mask)));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        reps = std::move(next);
    }
    return reps;
}

SurveyResult survey(std::size_t n, const CampaignOptions & options)
{
    require_range(n, 3, 8, "survey");
    SurveyResult result;
    result.n = n;
    std::vector<Coloring> reps;
    if (n <= 6)
        reps = enumerate_canonical(n);
    else {
        result.exhaustive = false;
        result.seed = options.seed;
        result.samples = options.samples ? options.samples : kDefaultSurveySamples;
        SplitMix64 rng(options.seed);
        std::vector<std::uint64_t> seeds(result.samples);
        for (auto & s : seeds)
            s = rng.next();
        reps = parallel_map<Coloring>(seeds.size(), options.workers,
            [&](std::size_t i) { return canonical_form(random_coloring(n, seeds[i])); });
        std::sort(reps.begin(), reps.end());
        reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    }

    auto outcomes = parallel_map<Outcome>(reps.size(), options.workers, [&](std::size_t i) { return examine(reps[i]); });
    result.total = reps.size();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const Outcome & o = outcomes[i];
        switch (o.verdict) {
        case Verdict::reconstructible: ++result.reconstructible; break;
        case Verdict::with_critical: ++result.unreconstructible_with_critical; break;
        case Verdict::without_critical: ++result.unreconstructible_without_critical; break;
        case Verdict::guarded: ++result.guarded; break;
        }
        if (o.verdict != Verdict::guarded && o.failures.empty())
            ++result.r_histogram[o.r];
        for (const auto & f : o.failures)
            result.violations.push_back({reps[i], f});
    }
    return result;
}

std::vector<Coloring> hunt_no_critical(std::size_t n, const CampaignOptions & options)
{
    require_range(n, 4, 7, "hunt_no_critical");
    auto reps = enumerate_canonical(n);
    auto hit = parallel_map<char>(reps.size(), options.workers,
        [&](std::size_t i) { return static_cast<char>(critical_pairs(reps[i]).empty() && !is_reconstructible(reps[i])); });
    std::vector<Coloring> out;
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (hit[i])
            out.push_back(reps[i]);
    return out;
}

std::vector<SegmentWitness> hunt_segment_question(std::size_t n, std::size_t n0, const CampaignOptions & options)
{
    require_range(n0, 3, 6, "hunt_segment_question (n0)");
    require_range(n, n0 + 1, 7, "hunt_segment_question");
    std::vector<Coloring> seeds;
    for (Coloring & c : enumerate_canonical(n0))
        if (!is_reconstructible(c))
            seeds.push_back(std::move(c));

    auto found = parallel_map<std::vector<Coloring>>(seeds.size(), options.workers, [&](std::size_t i) {
        std::vector<Coloring> hits;
        auto grow = [&](auto & self, const Coloring & phi) -> void {
            std::size_t m = phi.size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                Coloring next = augment(phi, mask);
                bool good = is_reconstructible(next);
                if (m + 1 == n) {
                    if (good)
                        hits.push_back(least_under_head_relabeling(next, n0));
                }
                else if (!good)
                    self(self, next);
            }
        };
        grow(grow, seeds[i]);
        return hits;
    });

    std::set<Coloring> unique;
    for (auto & batch : found)
        unique.insert(batch.begin(), batch.end());
    std::vector<SegmentWitness> out;
    for (const Coloring & phi : unique) {
        SegmentWitness w{phi, {}};
        for (std::size_t m = n0; m + 1 < n; ++m)
            for (const Pair & p : critical_pairs(prefix(phi, m + 1)))
                if (p.hi == m) {
                    w.critical_steps.push_back(m);
                    break;
                }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<PrefixEntry> prefix_profile(const GeneratorSpec & spec, std::size_t n_max)
{
    if (n_max < 3)
        throw DomainError("prefix_profile needs n_max >= 3");
    Coloring phi = generate(spec);
    if (phi.size() < n_max)
        throw DomainError("generated coloring has " + std::to_string(phi.size()) + " vertices, fewer than n_max");
    std::vector<PrefixEntry> out;
    for (std::size_t m = 3; m <= n_max; ++m) {
        Coloring p = prefix(phi, m);
        PrefixEntry e;
        e.m = m;
        e.reconstructible = is_reconstructible(p);
        e.critical_pairs = critical_pairs(p);
        if (build_constraints(hom_triples(p)).class_count() <= kPrefixRValueClasses) {
            try {
                e.r_value = r_value(p);
            }
            catch (const ResourceError &) {
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

RecognitionOutcome recognize_triples(const TripleFamily & t)
{
    ConstraintSystem cs = build_constraints(t);
    RecognitionOutcome out;
    if (!cs.feasible()) {
        out.infeasibility_witness = cs.collapsed_triple();
        return out;
    }
    for_each_solution(cs, [&](const Coloring & psi) {
        out.canonical_reconstruction = psi;
        return false;
    }, 1);
    out.realizable = out.canonical_reconstruction.has_value();
    return out;
}

TwoMaximalReport two_maximal_analysis(const Coloring & phi)
{
    std::size_t n = phi.size();
    if (n < 5)
        throw DomainError("two_maximal_analysis needs at least 5 vertices");
    TwoMaximalReport report;
    report.maximals = maximal_homogeneous(phi);
    report.reconstructible = is_reconstructible(phi);
    if (report.maximals.size() != 2)
        return report;
    report.applicable = true;
    const VertexSet & h1 = report.maximals[0];
    const VertexSet & h2 = report.maximals[1];

    // Any homogeneous set extends to a maximal one, so (a) can only fail if
    // the clique enumeration is wrong; the brute-force family cross-checks it.
    report.a_holds = true;
    if (n <= 14)
        for (const VertexSet & h : homogeneous_family(phi))
            if (!h.is_subset_of(h1) && !h.is_subset_of(h2))
                report.a_holds = false;
    report.b_holds = is_homogeneous(phi, h1) == is_homogeneous(phi, h2);
    std::uint64_t outside = phi.vertex_mask() & ~(h1.mask() | h2.mask());
    report.uncovered = VertexSet(n, outside).members();
    report.c_holds = report.uncovered.size() <= 1;

    if (!report.a_holds)
        report.deviations.push_back("a homogeneous set lies in neither maximal");
    if (!report.b_holds)
        report.deviations.push_back("the two maximals carry different colors");
    if (!report.c_holds)
        report.deviations.push_back(std::to_string(report.uncovered.size()) + " vertices outside both maximals");
    if (report.reconstructible)
        report.deviations.push_back("reconstructible with exactly two maximals");
    return report;
}

} // namespace hsr
