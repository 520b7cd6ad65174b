// Brute-force references for small dimensions. Nothing here shares code with
// the scan decoders beyond projection, rounding and membership.

#ifndef COXETER_ORACLE_HPP
#define COXETER_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <span>

#include "coxeter/lattice.hpp"
#include "coxeter/nearest_point.hpp"

namespace coxeter {

inline constexpr std::size_t kOracleMaxDimension = 9;

struct ShellReport {
    double min_norm2 = 0.0;
    /// (n+1) * min_norm2, exact.
    std::int64_t scaled_min_norm2 = 0;
    std::uint64_t count = 0;
};

/// Exhaustive nearest point search over integer w with
/// |w_i - round(y_i)| <= radius and sum(w) == 0 (mod m).
/// Throws std::invalid_argument if n > 9, radius < 2 or the length is wrong.
/// The leading coordinate is split across OpenMP threads; the result is the
/// same as the serial search.
NearestPointResult np_bruteforce(const CoxeterLattice& lattice, std::span<const double> y, int radius = 2);
NearestPointResult np_bruteforce_serial(const CoxeterLattice& lattice, std::span<const double> y,
                                        int radius = 2);

/// Minimal nonzero squared norm of A_{n/m} among pre-images with
/// |w_i| <= coord_bound, and the number of distinct lattice vectors attaining
/// it. Pre-images that differ by a multiple of 1 are counted once, through the
/// representative whose coordinate sum lies in (-(n+1)/2, (n+1)/2].
ShellReport enumerate_shell(const CoxeterLattice& lattice, int coord_bound);
ShellReport enumerate_shell_serial(const CoxeterLattice& lattice, int coord_bound);

} // namespace coxeter

#endif // COXETER_ORACLE_HPP
