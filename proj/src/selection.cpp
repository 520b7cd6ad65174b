#include "coxeter/selection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace coxeter {

namespace {

class Compare {
public:
    Compare(std::span<const double> z, ComparisonCounter* counter) : z_(z), counter_(counter) {}

    bool greater(std::size_t a, std::size_t b) const {
        tick();
        return z_[a] > z_[b];
    }
    bool greater(std::size_t a, double v) const {
        tick();
        return z_[a] > v;
    }
    bool less(std::size_t a, double v) const {
        tick();
        return z_[a] < v;
    }
    double value(std::size_t a) const { return z_[a]; }

private:
    void tick() const {
        if (counter_ != nullptr) {
            ++counter_->comparisons;
        }
    }

    std::span<const double> z_;
    ComparisonCounter* counter_;
};

// Descending insertion sort of idx[lo, hi).
void insertion_sort(const Compare& cmp, std::span<std::size_t> idx, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo + 1; i < hi; ++i) {
        const std::size_t key = idx[i];
        std::size_t j = i;
        while (j > lo && cmp.greater(key, idx[j - 1])) {
            idx[j] = idx[j - 1];
            --j;
        }
        idx[j] = key;
    }
}

// Position (within idx) of the median of the five entries starting at `at`,
// using six comparisons.
std::size_t median_of_five(const Compare& cmp, std::span<const std::size_t> idx, std::size_t at) {
    std::size_t a = at, b = at + 1, c = at + 2, d = at + 3, e = at + 4;
    if (cmp.greater(idx[b], idx[a])) std::swap(a, b);  // a >= b
    if (cmp.greater(idx[d], idx[c])) std::swap(c, d);  // c >= d
    if (cmp.greater(idx[c], idx[a])) {                  // a >= c >= d, a >= b
        std::swap(a, c);
        std::swap(b, d);
    }
    // a dominates b, c, d so it cannot be the median; replace it with e.
    a = e;
    if (cmp.greater(idx[b], idx[a])) std::swap(a, b);
    if (cmp.greater(idx[c], idx[a])) {
        std::swap(a, c);
        std::swap(b, d);
    }
    // a dominates three again; the median is the larger of b and c.
    return cmp.greater(idx[c], idx[b]) ? c : b;
}

void select_in_place(const Compare& cmp, std::span<std::size_t> idx, std::size_t lo, std::size_t hi,
                     std::size_t target) {
    while (true) {
        const std::size_t len = hi - lo;
        if (len <= 5) {
            insertion_sort(cmp, idx, lo, hi);
            return;
        }

        // Gather group medians at the front of the range. A group's median is
        // moved to lo+g, which lies in an already processed group.
        const std::size_t full_groups = len / 5;
        std::size_t groups = 0;
        for (std::size_t gi = 0; gi < full_groups; ++gi, ++groups) {
            const std::size_t med = median_of_five(cmp, idx, lo + 5 * gi);
            std::swap(idx[lo + groups], idx[med]);
        }
        if (const std::size_t rest = len % 5; rest != 0) {
            const std::size_t start = lo + 5 * full_groups;
            insertion_sort(cmp, idx, start, start + rest);
            std::swap(idx[lo + groups], idx[start + (rest - 1) / 2]);
            ++groups;
        }

        const std::size_t mid = lo + (groups - 1) / 2;
        select_in_place(cmp, idx, lo, lo + groups, mid);
        const double pivot = cmp.value(idx[mid]);

        // Three-way partition into [> pivot | == pivot | < pivot].
        std::size_t gt = lo;
        std::size_t i = lo;
        std::size_t lt = hi;
        while (i < lt) {
            if (cmp.greater(idx[i], pivot)) {
                std::swap(idx[gt++], idx[i++]);
            } else if (cmp.less(idx[i], pivot)) {
                std::swap(idx[i], idx[--lt]);
            } else {
                ++i;
            }
        }

        if (target < gt) {
            hi = gt;
        } else if (target >= lt) {
            lo = lt;
        } else {
            return;
        }
    }
}

} // namespace

IndexVector sort_indices(std::span<const double> z) {
    IndexVector s(z.size());
    std::iota(s.begin(), s.end(), std::size_t{0});
    std::stable_sort(s.begin(), s.end(), [z](std::size_t a, std::size_t b) { return z[a] > z[b]; });
    return s;
}

void partition_at(std::span<const double> z, std::span<std::size_t> idx, std::size_t c,
                  ComparisonCounter* counter) {
    if (c < 1 || c > idx.size()) {
        throw std::out_of_range("partition rank out of range");
    }
    select_in_place(Compare{z, counter}, idx, 0, idx.size(), c - 1);
}

void partition_two(std::span<const double> z, std::span<std::size_t> idx, std::size_t g, std::size_t p,
                   ComparisonCounter* counter) {
    if (g < 1 || g > p || p > idx.size()) {
        throw std::out_of_range("partition_two requires 1 <= g <= p <= |B|");
    }
    partition_at(z, idx, p, counter);
    // The p-th element stays put; only the strict prefix is refined.
    if (g < p) {
        partition_at(z, idx.first(p - 1), g, counter);
    }
}

std::size_t select_kth_descending(std::span<const double> z, std::span<const std::size_t> indices,
                                  std::size_t k, ComparisonCounter* counter) {
    if (k < 1 || k > indices.size()) {
        throw std::out_of_range("select rank out of range");
    }
    IndexVector buf(indices.begin(), indices.end());
    partition_at(z, buf, k, counter);
    return buf[k - 1];
}

IndexVector quickpartition(std::span<const double> z, std::span<const std::size_t> indices, std::size_t c,
                           ComparisonCounter* counter) {
    IndexVector buf(indices.begin(), indices.end());
    partition_at(z, buf, c, counter);
    return buf;
}

IndexVector quickpartition_two(std::span<const double> z, std::span<const std::size_t> indices,
                               std::size_t g, std::size_t p, ComparisonCounter* counter) {
    IndexVector buf(indices.begin(), indices.end());
    partition_two(z, buf, g, p, counter);
    return buf;
}

} // namespace coxeter
