#include "hsr/reconstruction.hpp"

#include "hsr/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

namespace hsr {

namespace {

void require_classifiable(const Coloring & phi, const char * op)
{
    if (phi.size() < 3)
        throw DomainError(std::string(op) + " needs at least 3 vertices");
}

std::size_t distance(const Coloring & a, const Coloring & b)
{
    std::size_t total = 0;
    for (Vertex v = 0; v < a.size(); ++v)
        total += static_cast<std::size_t>(std::popcount(a.row(v) ^ b.row(v)));
    return total / 2;
}

// Next integer with the same popcount (Gosper).
std::uint64_t next_same_popcount(std::uint64_t x)
{
    std::uint64_t c = x & (~x + 1);
    std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

} // namespace

SolveResult reconstructions(const Coloring & phi, std::size_t limit)
{
    require_classifiable(phi, "reconstructions");
    return solve_all(build_constraints(hom_triples(phi)), limit);
}

bool is_reconstructible(const Coloring & phi)
{
    require_classifiable(phi, "is_reconstructible");
    auto cs = build_constraints(hom_triples(phi));
    std::size_t found = for_each_solution(cs, [](const Coloring &) { return true; }, 3);
    return found == 2;
}

std::vector<Pair> critical_pairs(const Coloring & phi)
{
    require_classifiable(phi, "critical_pairs");
    std::vector<Pair> out;
    std::uint64_t all = phi.vertex_mask();
    for (Vertex x = 0; x < phi.size(); ++x)
        for (Vertex y = x + 1; y < phi.size(); ++y) {
            std::uint64_t others = all & ~(std::uint64_t{1} << x) & ~(std::uint64_t{1} << y);
            if (((phi.row(x) ^ phi.row(y)) & others) == others)
                out.emplace_back(x, y);
        }
    return out;
}

ReconstructionReport classify(const Coloring & phi)
{
    require_classifiable(phi, "classify");
    auto cs = build_constraints(hom_triples(phi));
    Coloring inverse = complement(phi);
    ReconstructionReport report;
    std::size_t best = 0;
    std::size_t seen = for_each_solution(cs, [&](const Coloring & psi) {
        if (psi == phi || psi == inverse)
            return true;
        std::size_t d = distance(phi, psi);
        if (!report.witness)
            report.witness = psi;
        if (best == 0 || d < best)
            best = d;
        return true;
    }, kModelGuard + 1);
    if (seen > kModelGuard)
        throw ResourceError("more than " + std::to_string(kModelGuard) + " reconstructions");
    report.solution_count = seen;
    report.reconstructible = seen == 2;
    report.r_value = report.reconstructible ? 0 : best;
    report.critical_pairs = critical_pairs(phi);
    if (report.r_value == 2)
        throw InvariantViolation("r-value 2 observed");
    if (!report.critical_pairs.empty() && report.reconstructible)
        throw InvariantViolation("reconstructible coloring with a critical pair");
    return report;
}

std::size_t r_value(const Coloring & phi) { return classify(phi).r_value; }

bool check_single_vertex_criterion(const Coloring & phi)
{
    require_classifiable(phi, "check_single_vertex_criterion");
    auto cs = build_constraints(hom_triples(phi));
    bool local_change = false;
    std::size_t seen = for_each_solution(cs, [&](const Coloring & psi) {
        if (psi == phi)
            return true;
        std::size_t total = distance(phi, psi);
        for (Vertex x = 0; x < phi.size(); ++x)
            if (static_cast<std::size_t>(std::popcount(phi.row(x) ^ psi.row(x))) == total) {
                local_change = true;
                return false;
            }
        return true;
    }, kModelGuard + 1);
    if (seen > kModelGuard)
        throw ResourceError("more than " + std::to_string(kModelGuard) + " reconstructions");
    return local_change == !critical_pairs(phi).empty();
}

std::vector<FourSetWitness> four_set_certificate(const Coloring & phi)
{
    constexpr std::size_t guard = 16;
    std::size_t n = phi.size();
    if (n < 4)
        throw DomainError("four_set_certificate needs at least 4 vertices");
    if (n > guard)
        throw ResourceError("four_set_certificate is limited to n <= " + std::to_string(guard));

    std::unordered_map<std::uint64_t, bool> memo;
    auto good = [&](std::uint64_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end())
            return it->second;
        bool r = is_reconstructible(restriction(phi, VertexSet(n, mask)));
        memo.emplace(mask, r);
        return r;
    };

    std::uint64_t all = phi.vertex_mask();
    std::vector<FourSetWitness> out;
    bool total = true;
    for (std::uint64_t f = 0b1111; f <= all; f = next_same_popcount(f)) {
        std::uint64_t rest = all & ~f;
        std::vector<std::uint64_t> candidates;
        for (std::uint64_t t = rest;; t = (t - 1) & rest) {
            candidates.push_back(f | t);
            if (t == 0)
                break;
        }
        std::sort(candidates.begin(), candidates.end(), [](std::uint64_t a, std::uint64_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        FourSetWitness entry{VertexSet(n, f), std::nullopt};
        for (std::uint64_t y : candidates)
            if (good(y)) {
                entry.witness = VertexSet(n, y);
                break;
            }
        total = total && entry.witness.has_value();
        out.push_back(entry);
        if (f == all)
            break;
    }
    if (total && !is_reconstructible(phi))
        throw InvariantViolation("every 4-set has a reconstructible superset but the coloring is not reconstructible");
    return out;
}

std::optional<Vertex> extension_witness(const Coloring & phi, Color color, const VertexSet & f)
{
    std::uint64_t fm = f.mask();
    for (Vertex z = 0; z < phi.size(); ++z) {
        if ((fm >> z) & 1U)
            continue;
        std::uint64_t seen = phi.row(z) & fm;
        if (color ? seen == fm : seen == 0)
            return z;
    }
    return std::nullopt;
}

ExtensionCheck extension_property(const Coloring & phi, Color color, std::size_t max_f)
{
    std::size_t n = phi.size();
    if (max_f + 1 > n)
        throw DomainError("extension_property needs max_f <= n - 1");
    if (color > 1)
        throw DomainError("color must be 0 or 1");
    ExtensionCheck check;
    for (std::size_t s = 0; s <= max_f; ++s) {
        std::uint64_t first = s == 0 ? 0 : (std::uint64_t{1} << s) - 1;
        std::uint64_t last = first << (n - s);
        for (std::uint64_t f = first;; f = next_same_popcount(f)) {
            VertexSet fs(n, f);
            if (!extension_witness(phi, color, fs)) {
                check.holds = false;
                check.failing = fs;
                return check;
            }
            if (f == last)
                break;
        }
    }
    return check;
}

Coloring extend_reconstructible(const Coloring & phi)
{
    std::size_t n = phi.size();
    Coloring out(n + 2);
    for (const Pair & p : phi.ones())
        out.set(p.lo, p.hi, 1);
    auto a = static_cast<Vertex>(n), b = static_cast<Vertex>(n + 1);
    out.set(a, b, 1);
    for (Vertex x = 0; x < n; ++x) {
        out.set(a, x, 1);
        out.set(b, x, 1);
    }
    return out;
}

Coloring extend_unreconstructible(const Coloring & phi, Vertex x0)
{
    std::size_t n = phi.size();
    if (n < 2)
        throw DomainError("extend_unreconstructible needs at least 2 vertices");
    if (x0 >= n)
        throw DomainError("x0 out of range");
    Coloring out(n + 1);
    for (const Pair & p : phi.ones())
        out.set(p.lo, p.hi, 1);
    auto a = static_cast<Vertex>(n);
    out.set(a, x0, 1);
    for (Vertex x = 0; x < n; ++x)
        if (x != x0 && !phi.at(x0, x))
            out.set(a, x, 1);
    return out;
}

} // namespace hsr
