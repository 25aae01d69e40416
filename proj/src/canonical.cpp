#include "hsr/canonical.hpp"

#include "hsr/errors.hpp"

#include <array>
#include <string>

namespace hsr {

namespace {

// Column k of a relabeled coloring holds the colors between the vertex placed
// at position k and the vertices at positions 0..k-1 (bit i = position i).
// Columns are compared as bit strings read from bit 0 upward.
int compare_columns(std::uint64_t a, std::uint64_t b) noexcept
{
    std::uint64_t d = a ^ b;
    if (!d)
        return 0;
    std::uint64_t first = d & (~d + 1);
    return (a & first) ? 1 : -1;
}

class LeastRelabeling {
public:
    explicit LeastRelabeling(std::size_t n) : n_(n) {}

    void search(const Coloring & g)
    {
        graph_ = &g;
        descend(0, 0, have_best_);
    }

    Coloring result() const
    {
        Coloring out(n_);
        for (Vertex k = 1; k < n_; ++k)
            for (Vertex i = 0; i < k; ++i)
                if ((best_[k] >> i) & 1U)
                    out.set(i, k, 1);
        return out;
    }

private:
    // `tied` means positions 0..k-1 reproduce the best columns exactly;
    // otherwise the current prefix is strictly smaller (or there is no best).
    bool descend(std::size_t k, std::uint64_t used, bool tied)
    {
        if (k == n_) {
            if (tied)
                return false;
            best_ = cur_;
            have_best_ = true;
            return true;
        }
        bool updated = false;
        for (Vertex v = 0; v < n_; ++v) {
            if ((used >> v) & 1U)
                continue;
            std::uint64_t column = 0;
            std::uint64_t row = graph_->row(v);
            for (std::size_t i = 0; i < k; ++i)
                column |= ((row >> order_[i]) & 1U) << i;
            bool child_tied = false;
            if (tied) {
                int c = compare_columns(column, best_[k]);
                if (c > 0)
                    continue;
                child_tied = c == 0;
            }
            cur_[k] = column;
            order_[k] = v;
            if (descend(k + 1, used | (std::uint64_t{1} << v), child_tied)) {
                updated = true;
                tied = true;
            }
        }
        return updated;
    }

    std::size_t n_;
    const Coloring * graph_ = nullptr;
    bool have_best_ = false;
    std::array<std::uint64_t, kCanonicalMaxVertices> cur_{};
    std::array<std::uint64_t, kCanonicalMaxVertices> best_{};
    std::array<Vertex, kCanonicalMaxVertices> order_{};
};

} // namespace

Coloring canonical_form(const Coloring & phi, Orbit orbit)
{
    if (phi.size() > kCanonicalMaxVertices)
        throw ResourceError("canonical_form is limited to n <= " + std::to_string(kCanonicalMaxVertices));
    LeastRelabeling least(phi.size());
    least.search(phi);
    if (orbit == Orbit::relabeling_and_complement)
        least.search(complement(phi));
    return least.result();
}

} // namespace hsr
