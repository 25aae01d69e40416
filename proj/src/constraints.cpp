#include "hsr/constraints.hpp"

#include "hsr/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hsr {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

// Depth-first enumeration over class colors. Classes are branched in id
// order, 0 before 1; not-all-equal constraints propagate forced colors.
class NaeSearch {
public:
    NaeSearch(const ConstraintSystem & cs, const std::function<bool(const Coloring &)> & visit, std::size_t stop_after) :
        cs_(cs), visit_(visit), stop_after_(stop_after), value_(cs.class_count(), kUnset), watches_(cs.class_count())
    {
        const auto & nae = cs.nae();
        for (std::uint32_t id = 0; id < nae.size(); ++id) {
            const auto & k = nae[id];
            watches_[k.a].push_back(id);
            if (k.b != k.a)
                watches_[k.b].push_back(id);
            if (k.c != k.b)
                watches_[k.c].push_back(id);
        }
    }

    std::size_t run()
    {
        if (!cs_.feasible())
            return 0;
        descend(0);
        return visited_;
    }

private:
    static constexpr std::int8_t kUnset = -1;

    // Returns false to abort the whole search.
    bool descend(ClassId next)
    {
        while (next < value_.size() && value_[next] != kUnset)
            ++next;
        if (next == value_.size()) {
            ++visited_;
            std::vector<Color> colors(value_.begin(), value_.end());
            return visit_(cs_.expand(colors)) && visited_ < stop_after_;
        }
        for (std::int8_t v = 0; v <= 1; ++v) {
            std::size_t mark = trail_.size();
            bool ok = assign(next, v);
            bool keep_going = !ok || descend(next + 1);
            undo(mark);
            if (!keep_going)
                return false;
        }
        return true;
    }

    bool assign(ClassId c, std::int8_t v)
    {
        std::size_t head = trail_.size();
        value_[c] = v;
        trail_.push_back(c);
        while (head < trail_.size()) {
            ClassId cur = trail_[head++];
            for (std::uint32_t id : watches_[cur])
                if (!propagate(cs_.nae()[id]))
                    return false;
        }
        return true;
    }

    bool propagate(const NaeConstraint & k)
    {
        const ClassId slots[3] = {k.a, k.b, k.c};
        std::int8_t seen = kUnset;
        bool mixed = false;
        ClassId open = 0;
        int open_classes = 0;
        for (ClassId s : slots) {
            std::int8_t v = value_[s];
            if (v == kUnset) {
                if (open_classes == 0 || open != s) {
                    open = s;
                    ++open_classes;
                }
            }
            else if (seen == kUnset)
                seen = v;
            else if (seen != v)
                mixed = true;
        }
        if (mixed)
            return true;
        if (open_classes == 0)
            return false;
        if (open_classes == 1 && seen != kUnset) {
            value_[open] = static_cast<std::int8_t>(1 - seen);
            trail_.push_back(open);
        }
        return true;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            value_[trail_.back()] = kUnset;
            trail_.pop_back();
        }
    }

    const ConstraintSystem & cs_;
    const std::function<bool(const Coloring &)> & visit_;
    std::size_t stop_after_;
    std::vector<std::int8_t> value_;
    std::vector<std::vector<std::uint32_t>> watches_;
    std::vector<ClassId> trail_;
    std::size_t visited_ = 0;
};

} // namespace

Coloring ConstraintSystem::expand(const std::vector<Color> & class_colors) const
{
    if (class_colors.size() != class_count())
        throw DomainError("class assignment has the wrong length");
    Coloring out(n_);
    std::size_t k = 0;
    for (Vertex j = 1; j < n_; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if (class_colors[class_of_edge_[k]])
                out.set(i, j, 1);
    return out;
}

ConstraintSystem build_constraints(const TripleFamily & t)
{
    std::size_t n = t.size();
    if (n < 3)
        throw DomainError("build_constraints needs at least 3 vertices");
    std::size_t m = choose2(n);
    DisjointSets sets(m);
    std::size_t idx = 0;
    for (Vertex k = 2; k < n; ++k)
        for (Vertex j = 1; j < k; ++j)
            for (Vertex i = 0; i < j; ++i, ++idx)
                if (t.test_index(idx)) {
                    sets.unite(pair_index(i, j), pair_index(i, k));
                    sets.unite(pair_index(i, j), pair_index(j, k));
                }

    ConstraintSystem cs;
    cs.n_ = n;
    cs.source_ = t;
    cs.class_of_edge_.resize(m);
    std::vector<ClassId> id_of_root(m, ~ClassId{0});
    for (std::size_t e = 0; e < m; ++e) {
        std::size_t root = sets.find(e);
        if (id_of_root[root] == ~ClassId{0}) {
            id_of_root[root] = static_cast<ClassId>(cs.representative_.size());
            cs.representative_.push_back(e);
        }
        cs.class_of_edge_[e] = id_of_root[root];
    }

    idx = 0;
    for (Vertex k = 2; k < n; ++k)
        for (Vertex j = 1; j < k; ++j)
            for (Vertex i = 0; i < j; ++i, ++idx) {
                if (t.test_index(idx))
                    continue;
                ClassId c[3] = {cs.class_of_edge_[pair_index(i, j)], cs.class_of_edge_[pair_index(i, k)],
                    cs.class_of_edge_[pair_index(j, k)]};
                std::sort(std::begin(c), std::end(c));
                if (c[0] == c[2] && !cs.collapsed_)
                    cs.collapsed_ = Triple(i, j, k);
                cs.nae_.push_back({c[0], c[1], c[2]});
            }
    std::sort(cs.nae_.begin(), cs.nae_.end());
    cs.nae_.erase(std::unique(cs.nae_.begin(), cs.nae_.end()), cs.nae_.end());
    return cs;
}

SolveResult solve_all(const ConstraintSystem & cs, std::size_t limit)
{
    if (limit < 2)
        throw DomainError("solve_all needs a limit of at least 2");
    if (cs.class_count() > kSolveClassGuard && limit > kSmallSolveLimit)
        throw ResourceError("solve_all: " + std::to_string(cs.class_count()) + " classes exceeds the guard of " +
            std::to_string(kSolveClassGuard) + " for limit " + std::to_string(limit));
    SolveResult result;
    for_each_solution(cs, [&](const Coloring & psi) {
        if (result.solutions.size() == limit) {
            result.truncated = true;
            return false;
        }
        result.solutions.push_back(psi);
        return true;
    });
    return result;
}

std::size_t for_each_solution(const ConstraintSystem & cs, const std::function<bool(const Coloring &)> & visit,
    std::size_t stop_after)
{
    if (stop_after == 0)
        return 0;
    NaeSearch search(cs, visit, stop_after);
    return search.run();
}

} // namespace hsr
