#include "coxeter/batch.hpp"

#include <exception>
#include <stdexcept>

#include <omp.h>

namespace coxeter {

namespace {

void check_block(const CoxeterLattice& lattice, QueryBlock block) {
    if (block.dim != lattice.dim()) {
        throw std::invalid_argument("query block width does not match n+1");
    }
    if (block.values.size() % block.dim != 0) {
        throw std::invalid_argument("query block is not a whole number of rows");
    }
}

} // namespace

std::vector<NearestPointResult> decode_batch_serial(const CoxeterLattice& lattice, Algorithm alg,
                                                    QueryBlock block) {
    check_block(lattice, block);
    std::vector<NearestPointResult> out(block.rows());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = decode(lattice, alg, block.row(i));
    }
    return out;
}

std::vector<NearestPointResult> decode_batch(const CoxeterLattice& lattice, Algorithm alg, QueryBlock block) {
    check_block(lattice, block);
    const auto rows = static_cast<std::ptrdiff_t>(block.rows());
    std::vector<NearestPointResult> out(block.rows());
    std::vector<std::exception_ptr> errors(block.rows());

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        const auto row = static_cast<std::size_t>(i);
        try {
            out[row] = decode(lattice, alg, block.row(row));
        } catch (...) {
            errors[row] = std::current_exception();
        }
    }

    for (const std::exception_ptr& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

int max_threads() noexcept { return omp_get_max_threads(); }

} // namespace coxeter
