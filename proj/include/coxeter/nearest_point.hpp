// Nearest point decoders for the Coxeter lattices A_{n/m}.
//
// Every decoder returns the integer pre-image u, the lattice point x = Q u and
// the squared distance between x and the projection of the query. Distances
// are recomputed directly at the end; the candidate scans compare the
// recursive objective beta - alpha^2/(n+1) instead.
//
// Ties between equally distant lattice points are broken by the first
// candidate reaching the strict minimum, so different decoders may return
// different points with the same distance.

#ifndef COXETER_NEAREST_POINT_HPP
#define COXETER_NEAREST_POINT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "coxeter/lattice.hpp"
#include "coxeter/selection.hpp"

namespace coxeter {

struct NearestPointResult {
    PreImage u;
    RealVector x;
    double d2 = 0.0;
};

/// Running scalars of a candidate scan after `step` unit increments.
struct ScanState {
    std::size_t step = 0;
    double alpha = 0.0;   // z'1
    double beta = 0.0;    // z'z
    std::int64_t gamma = 0;  // u'1 mod m
    double d = 0.0;       // beta - alpha^2/(n+1)
    double best = 0.0;    // D after this candidate was considered
    std::size_t k_star = 0;
    bool tested = false;
};

/// Optional record of a decoder scan. `order` is the coordinate order in which
/// increments are applied (s for the log-linear scan, the bucket concatenation
/// w for the linear one); candidate `step` is round(y) + e_{order[0]} + ... +
/// e_{order[step-1]}.
struct ScanTrace {
    RealVector z;
    PreImage u0;
    IndexVector order;
    std::vector<ScanState> states;
};

/// Index lists B_1..B_q stored contiguously: bucket j occupies
/// indices[offsets[j], offsets[j+1]). Insertion order inside a bucket is
/// ascending coordinate index.
struct BucketPartition {
    IndexVector indices;
    std::vector<std::size_t> offsets;

    std::size_t bucket_count() const noexcept { return offsets.empty() ? 0 : offsets.size() - 1; }
    std::span<const std::size_t> bucket(std::size_t j) const {
        return std::span<const std::size_t>(indices).subspan(offsets[j], offsets[j + 1] - offsets[j]);
    }
};

/// Glue vector [i] = (1/(n+1)) (i,...,i, -j,...,-j) with j = n+1-i leading
/// entries i and i trailing entries -j, kept as exact integer numerators.
struct GlueVector {
    std::vector<std::int64_t> numerators;
    std::int64_t denominator = 1;

    RealVector to_real() const;
};

enum class Algorithm {
    kLogLinear,
    kLinear,
    kGlue,
    kAnLogLinear,
    kAnLinear,
    kAnStarLogLinear,
    kAnStarLinear,
};

enum class AnDecoder { kLogLinear, kLinear };

std::string_view algorithm_name(Algorithm alg) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

/// Sorting-based scan over all n+1 candidates, O(n log n).
NearestPointResult np_loglinear(const CoxeterLattice& lattice, std::span<const double> y);
NearestPointResult np_loglinear(const CoxeterLattice& lattice, std::span<const double> y, ScanTrace& trace);

/// Bucketed scan testing at most two candidates per bucket, worst-case O(n).
NearestPointResult np_linear(const CoxeterLattice& lattice, std::span<const double> y);
NearestPointResult np_linear(const CoxeterLattice& lattice, std::span<const double> y, ScanTrace& trace);

/// q translates of A_n, one A_n decode each; O(q n).
NearestPointResult np_glue(const CoxeterLattice& lattice, std::span<const double> y,
                           AnDecoder an_decoder = AnDecoder::kLinear);

/// A_n = A_{n/n+1}.
NearestPointResult np_an_loglinear(std::span<const double> y);
NearestPointResult np_an_linear(std::span<const double> y);

/// A_n* = A_{n/1}.
NearestPointResult np_anstar_loglinear(std::span<const double> y);
NearestPointResult np_anstar_linear(std::span<const double> y);

/// Assigns coordinate i to bucket q - floor(q (z_i + 1/2)) (1-based; stored
/// 0-based). Requires every z_i in [-0.5, 0.5); throws std::domain_error
/// otherwise.
BucketPartition bucket_partition(const CoxeterLattice& lattice, std::span<const double> z);

/// Throws std::out_of_range unless i <= n.
GlueVector glue_vector(const CoxeterLattice& lattice, std::size_t i);

/// Dispatches to the named decoder. The A_n and A_n* decoders require the
/// lattice to be A_{n/n+1} and A_{n/1} respectively (std::invalid_argument
/// otherwise).
NearestPointResult decode(const CoxeterLattice& lattice, Algorithm alg, std::span<const double> y);

namespace testing {

/// While alive, the scan decoders round the first coordinate of the query the
/// wrong way. Used as a negative control for the verification suite.
class ScopedRoundingFault {
public:
    ScopedRoundingFault();
    ~ScopedRoundingFault();
    ScopedRoundingFault(const ScopedRoundingFault&) = delete;
    ScopedRoundingFault& operator=(const ScopedRoundingFault&) = delete;
};

bool rounding_fault_active() noexcept;

} // namespace testing

} // namespace coxeter

#endif // COXETER_NEAREST_POINT_HPP
