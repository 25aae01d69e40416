#include "hsr/coloring.hpp"

#include "hsr/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hsr {

namespace {

constexpr std::uint64_t low_mask(std::size_t k) noexcept
{
    return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
}

void check_size(std::size_t n)
{
    if (n > kMaxVertices)
        throw DomainError("ground set of " + std::to_string(n) + " vertices exceeds the limit of " + std::to_string(kMaxVertices));
}

void check_vertex(std::size_t n, Vertex v)
{
    if (v >= n)
        throw DomainError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
}

// Bron-Kerbosch with Tomita pivoting on 64-bit neighbourhoods. `adj[v]`
// must not contain v itself.
template <typename Emit>
void enumerate_maximal_cliques(const std::vector<std::uint64_t> & adj, std::uint64_t r, std::uint64_t p, std::uint64_t x, Emit & emit)
{
    if (p == 0 && x == 0) {
        emit(r);
        return;
    }
    std::uint64_t px = p | x;
    Vertex pivot = 0;
    int best = -1;
    for (std::uint64_t m = px; m; m &= m - 1) {
        auto u = static_cast<Vertex>(std::countr_zero(m));
        int c = std::popcount(p & adj[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (std::uint64_t cand = p & ~adj[pivot]; cand; cand &= cand - 1) {
        auto v = static_cast<Vertex>(std::countr_zero(cand));
        std::uint64_t bit = std::uint64_t{1} << v;
        enumerate_maximal_cliques(adj, r | bit, p & adj[v], x & adj[v], emit);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

std::size_t triple_index(Vertex a, Vertex b, Vertex c)
{
    Triple t(a, b, c);
    return choose3(t.c) + choose2(t.b) + t.a;
}

Pair pair_at(std::size_t index)
{
    Vertex j = 1;
    while (choose2(j + 1) <= index)
        ++j;
    return Pair(static_cast<Vertex>(index - choose2(j)), j);
}

Triple::Triple(Vertex x, Vertex y, Vertex z)
{
    if (x > y)
        std::swap(x, y);
    if (y > z)
        std::swap(y, z);
    if (x > y)
        std::swap(x, y);
    a = x;
    b = y;
    c = z;
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask)
{
    check_size(n);
    if (mask & ~low_mask(n))
        throw DomainError("vertex set has members outside the ground set");
}

VertexSet::VertexSet(std::size_t n, std::initializer_list<Vertex> members) :
    VertexSet(n, std::span<const Vertex>(members.begin(), members.size()))
{
}

VertexSet::VertexSet(std::size_t n, std::span<const Vertex> members) : n_(n)
{
    check_size(n);
    for (Vertex v : members) {
        check_vertex(n, v);
        mask_ |= std::uint64_t{1} << v;
    }
}

VertexSet VertexSet::full(std::size_t n) { return VertexSet(n, low_mask(n)); }

std::size_t VertexSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m; m &= m - 1)
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    return out;
}

VertexSet VertexSet::with(Vertex v) const
{
    check_vertex(n_, v);
    return VertexSet(n_, mask_ | (std::uint64_t{1} << v));
}

// ----------------------------------------------------------------- Coloring

Coloring::Coloring(std::size_t n, Color fill) : n_(n)
{
    check_size(n);
    rows_.assign(n, 0);
    if (fill)
        for (Vertex v = 0; v < n; ++v)
            rows_[v] = low_mask(n) & ~(std::uint64_t{1} << v);
}

Coloring Coloring::from_edge_bits(std::size_t n, std::span<const std::uint64_t> bits)
{
    Coloring phi(n);
    std::size_t m = choose2(n);
    if (bits.size() * 64 < m)
        throw DomainError("edge bit-vector too short for n=" + std::to_string(n));
    for (std::size_t k = m; k < bits.size() * 64; ++k)
        if ((bits[k >> 6] >> (k & 63)) & 1U)
            throw DomainError("edge bit-vector has bits beyond the last pair");
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if ((bits[k >> 6] >> (k & 63)) & 1U)
                phi.set(i, j, 1);
    return phi;
}

Coloring Coloring::from_ones(std::size_t n, std::span<const Pair> ones)
{
    Coloring phi(n);
    for (const Pair & p : ones) {
        check_vertex(n, p.hi);
        if (p.lo == p.hi)
            throw DomainError("pair with equal endpoints");
        phi.set(p.lo, p.hi, 1);
    }
    return phi;
}

Color Coloring::bit(std::size_t pair) const
{
    if (pair >= pair_count())
        throw DomainError("pair index " + std::to_string(pair) + " out of range");
    Pair p = pair_at(pair);
    return at(p.lo, p.hi);
}

void Coloring::set(Vertex i, Vertex j, Color c)
{
    check_vertex(n_, i);
    check_vertex(n_, j);
    if (i == j)
        throw DomainError("pair with equal endpoints");
    std::uint64_t bi = std::uint64_t{1} << i, bj = std::uint64_t{1} << j;
    if (c) {
        rows_[i] |= bj;
        rows_[j] |= bi;
    }
    else {
        rows_[i] &= ~bj;
        rows_[j] &= ~bi;
    }
}

void Coloring::flip(Vertex i, Vertex j) { set(i, j, static_cast<Color>(1 - pair_color(*this, i, j))); }

std::vector<std::uint64_t> Coloring::edge_bits() const
{
    std::vector<std::uint64_t> out((pair_count() + 63) / 64, 0);
    std::size_t k = 0;
    for (Vertex j = 1; j < n_; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if (at(i, j))
                out[k >> 6] |= std::uint64_t{1} << (k & 63);
    return out;
}

std::vector<Pair> Coloring::ones() const
{
    std::vector<Pair> out;
    for (Vertex i = 0; i < n_; ++i)
        for (std::uint64_t m = rows_[i] & ~low_mask(i + 1); m; m &= m - 1)
            out.emplace_back(i, static_cast<Vertex>(std::countr_zero(m)));
    return out;
}

std::size_t Coloring::count_ones() const
{
    std::size_t total = 0;
    for (auto r : rows_)
        total += static_cast<std::size_t>(std::popcount(r));
    return total / 2;
}

std::uint64_t Coloring::vertex_mask() const noexcept { return low_mask(n_); }

std::strong_ordering operator<=>(const Coloring & a, const Coloring & b) noexcept
{
    if (a.n_ != b.n_)
        return a.n_ <=> b.n_;
    for (Vertex j = 1; j < a.n_; ++j) {
        std::uint64_t ca = a.rows_[j] & low_mask(j), cb = b.rows_[j] & low_mask(j);
        if (std::uint64_t d = ca ^ cb) {
            std::uint64_t first = d & (~d + 1);
            return (ca & first) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

// ------------------------------------------------------------- TripleFamily

TripleFamily::TripleFamily(std::size_t n) : n_(n), bits_((choose3(n) + 63) / 64, 0) { check_size(n); }

TripleFamily::TripleFamily(std::size_t n, std::span<const Triple> triples) : TripleFamily(n)
{
    for (const Triple & t : triples)
        insert(t.a, t.b, t.c);
}

TripleFamily TripleFamily::all(std::size_t n)
{
    TripleFamily t(n);
    for (std::size_t k = 0; k < choose3(n); ++k)
        t.set_index(k);
    return t;
}

bool TripleFamily::contains(Vertex a, Vertex b, Vertex c) const
{
    Triple t(a, b, c);
    if (t.c >= n_ || t.a == t.b || t.b == t.c)
        throw DomainError("invalid triple for n=" + std::to_string(n_));
    return test_index(triple_index(t.a, t.b, t.c));
}

void TripleFamily::insert(Vertex a, Vertex b, Vertex c)
{
    Triple t(a, b, c);
    if (t.c >= n_ || t.a == t.b || t.b == t.c)
        throw DomainError("invalid triple for n=" + std::to_string(n_));
    set_index(triple_index(t.a, t.b, t.c));
}

void TripleFamily::set_index(std::size_t index) { bits_[index >> 6] |= std::uint64_t{1} << (index & 63); }

std::size_t TripleFamily::count() const
{
    std::size_t total = 0;
    for (auto w : bits_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::vector<Triple> TripleFamily::triples() const
{
    std::vector<Triple> out;
    std::size_t idx = 0;
    for (Vertex k = 2; k < n_; ++k)
        for (Vertex j = 1; j < k; ++j)
            for (Vertex i = 0; i < j; ++i, ++idx)
                if (test_index(idx))
                    out.emplace_back(i, j, k);
    return out;
}

// --------------------------------------------------------------- operations

Color pair_color(const Coloring & phi, Vertex i, Vertex j)
{
    check_vertex(phi.size(), i);
    check_vertex(phi.size(), j);
    if (i == j)
        throw DomainError("pair_color requires two distinct vertices");
    return phi.at(i, j);
}

Coloring complement(const Coloring & phi)
{
    Coloring out(phi.size(), 1);
    for (const Pair & p : phi.ones())
        out.set(p.lo, p.hi, 0);
    return out;
}

Coloring restriction(const Coloring & phi, const VertexSet & s)
{
    if (s.mask() & ~phi.vertex_mask())
        throw DomainError("restriction set is not a subset of the ground set");
    auto members = s.members();
    Coloring out(members.size());
    for (Vertex b = 1; b < members.size(); ++b)
        for (Vertex a = 0; a < b; ++a)
            if (phi.at(members[a], members[b]))
                out.set(a, b, 1);
    return out;
}

Coloring prefix(const Coloring & phi, std::size_t m)
{
    if (m > phi.size())
        throw DomainError("prefix longer than the ground set");
    return restriction(phi, VertexSet(phi.size(), low_mask(m)));
}

Coloring finite_change(const Coloring & phi, std::span<const Pair> a)
{
    Coloring out = phi;
    std::vector<Pair> sorted(a.begin(), a.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const Pair & p : sorted) {
        if (p.lo == p.hi)
            throw DomainError("pair with equal endpoints");
        out.flip(p.lo, p.hi);
    }
    return out;
}

Coloring relabel(const Coloring & phi, std::span<const Vertex> perm)
{
    std::size_t n = phi.size();
    if (perm.size() != n)
        throw DomainError("permutation length differs from the ground set size");
    std::uint64_t seen = 0;
    for (Vertex v : perm) {
        check_vertex(n, v);
        seen |= std::uint64_t{1} << v;
    }
    if (seen != low_mask(n))
        throw DomainError("relabeling is not a permutation");
    Coloring out(n);
    for (const Pair & p : phi.ones())
        out.set(perm[p.lo], perm[p.hi], 1);
    return out;
}

std::optional<Color> is_homogeneous(const Coloring & phi, const VertexSet & h, Homogeneity mode)
{
    if (h.mask() & ~phi.vertex_mask())
        throw DomainError("vertex set is not a subset of the ground set");
    std::size_t need = mode == Homogeneity::strict ? 3 : 2;
    if (h.size() < need)
        return std::nullopt;
    auto members = h.members();
    Color c = phi.at(members[0], members[1]);
    std::uint64_t m = h.mask();
    for (Vertex v : members) {
        std::uint64_t others = m & ~(std::uint64_t{1} << v);
        std::uint64_t seen = phi.row(v) & others;
        if (c ? seen != others : seen != 0)
            return std::nullopt;
    }
    return c;
}

TripleFamily hom_triples(const Coloring & phi)
{
    std::size_t n = phi.size();
    if (n < 3)
        throw DomainError("hom_triples needs at least 3 vertices");
    TripleFamily t(n);
    for (Vertex k = 2; k < n; ++k) {
        std::uint64_t rk = phi.row(k);
        for (Vertex j = 1; j < k; ++j) {
            std::uint64_t rj = phi.row(j);
            std::uint64_t same = phi.at(j, k) ? (rj & rk) : (~rj & ~rk);
            same &= low_mask(j);
            std::size_t base = choose3(k) + choose2(j);
            for (; same; same &= same - 1)
                t.set_index(base + static_cast<std::size_t>(std::countr_zero(same)));
        }
    }
    return t;
}

std::vector<VertexSet> homogeneous_family(const Coloring & phi, std::size_t min_size)
{
    constexpr std::size_t guard = 14;
    std::size_t n = phi.size();
    if (n > guard)
        throw ResourceError("homogeneous_family is limited to n <= " + std::to_string(guard));
    Homogeneity mode = min_size <= 2 ? Homogeneity::relaxed : Homogeneity::strict;
    std::vector<VertexSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) < std::max<std::size_t>(min_size, 2))
            continue;
        VertexSet s(n, m);
        if (is_homogeneous(phi, s, mode))
            out.push_back(s);
    }
    return out;
}

std::vector<VertexSet> maximal_homogeneous(const Coloring & phi)
{
    std::size_t n = phi.size();
    if (n < 3)
        throw DomainError("maximal_homogeneous needs at least 3 vertices");
    std::vector<VertexSet> out;
    auto emit = [&](std::uint64_t clique) {
        if (std::popcount(clique) >= 3)
            out.emplace_back(n, clique);
    };
    std::uint64_t all = phi.vertex_mask();
    std::vector<std::uint64_t> ones(n), zeros(n);
    for (Vertex v = 0; v < n; ++v) {
        ones[v] = phi.row(v);
        zeros[v] = ~phi.row(v) & all & ~(std::uint64_t{1} << v);
    }
    enumerate_maximal_cliques(ones, 0, all, 0, emit);
    enumerate_maximal_cliques(zeros, 0, all, 0, emit);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace hsr
