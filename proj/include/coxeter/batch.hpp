// Decoding many queries at once. Each query is independent, so the batch is
// split across OpenMP threads; decode_batch_serial is the reference the
// parallel kernel is tested and benchmarked against.

#ifndef COXETER_BATCH_HPP
#define COXETER_BATCH_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "coxeter/lattice.hpp"
#include "coxeter/nearest_point.hpp"

namespace coxeter {

/// Row-major block of queries, each of length n+1.
struct QueryBlock {
    std::span<const double> values;
    std::size_t dim = 0;

    std::size_t rows() const noexcept { return dim == 0 ? 0 : values.size() / dim; }
    std::span<const double> row(std::size_t i) const { return values.subspan(i * dim, dim); }
};

/// Throws std::invalid_argument if the block width differs from n+1 or the
/// value count is not a multiple of it. Exceptions raised while decoding a row
/// are rethrown after the parallel region (first failing row wins).
std::vector<NearestPointResult> decode_batch(const CoxeterLattice& lattice, Algorithm alg, QueryBlock block);
std::vector<NearestPointResult> decode_batch_serial(const CoxeterLattice& lattice, Algorithm alg,
                                                    QueryBlock block);

/// Number of threads an OpenMP parallel region would use.
int max_threads() noexcept;

} // namespace coxeter

#endif // COXETER_BATCH_HPP
