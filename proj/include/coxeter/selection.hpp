// Order-statistics kernels over a value vector addressed through an index
// buffer. Values are never permuted; only indices move.
//
// All orderings are descending: rank 1 is the largest value. Ranks (k, c, g, p)
// are 1-based to match the rank semantics; returned indices are 0-based
// positions into z.

#ifndef COXETER_SELECTION_HPP
#define COXETER_SELECTION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace coxeter {

using IndexVector = std::vector<std::size_t>;

/// Optional instrumentation: counts value comparisons made by the selection
/// kernels.
struct ComparisonCounter {
    std::uint64_t comparisons = 0;
};

/// Indices s with z[s[0]] >= z[s[1]] >= ...; equal values keep ascending index.
IndexVector sort_indices(std::span<const double> z);

/// Rearranges idx in place so that position c-1 holds a c-th largest value,
/// every earlier position holds a value >= it and every later one a value <= it.
/// Deterministic median-of-medians (groups of five), worst-case O(|idx|).
/// Throws std::out_of_range unless 1 <= c <= idx.size().
void partition_at(std::span<const double> z, std::span<std::size_t> idx, std::size_t c,
                  ComparisonCounter* counter = nullptr);

/// Two nested partitions: positions g-1 and p-1 hold the g-th and p-th largest
/// values with the blocks between them ordered accordingly.
/// Throws std::out_of_range unless 1 <= g <= p <= idx.size().
void partition_two(std::span<const double> z, std::span<std::size_t> idx, std::size_t g,
                   std::size_t p, ComparisonCounter* counter = nullptr);

/// Index i from the set such that z[i] is a k-th largest value.
std::size_t select_kth_descending(std::span<const double> z, std::span<const std::size_t> indices,
                                  std::size_t k, ComparisonCounter* counter = nullptr);

/// Copy of `indices` partitioned at rank c (see partition_at).
IndexVector quickpartition(std::span<const double> z, std::span<const std::size_t> indices,
                           std::size_t c, ComparisonCounter* counter = nullptr);

/// Copy of `indices` partitioned at ranks g <= p (see partition_two).
IndexVector quickpartition_two(std::span<const double> z, std::span<const std::size_t> indices,
                               std::size_t g, std::size_t p, ComparisonCounter* counter = nullptr);

} // namespace coxeter

#endif // COXETER_SELECTION_HPP
