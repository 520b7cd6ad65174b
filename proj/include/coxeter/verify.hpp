// Self-check suite: decoders against the brute-force oracle plus the
// structural invariants of the lattice family. Used by `coxeter verify` and
// the acceptance tests.

#ifndef COXETER_VERIFY_HPP
#define COXETER_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "coxeter/lattice.hpp"
#include "coxeter/nearest_point.hpp"
#include "coxeter/random.hpp"

namespace coxeter {

inline constexpr double kDistanceTolerance = 1e-9;
inline constexpr std::size_t kVerifyMaxDimension = 7;

enum class InputKind {
    kUniform,           // uniform on [-range, range)
    kHalfIntegers,      // k/2, exercising the rounding tie
    kBucketBoundaries,  // k/(n+1), landing on bucket edges
};

/// `count` queries of length dim, row-major.
RealVector make_queries(InputKind kind, std::uint64_t seed, std::size_t dim, std::size_t count, double range);

struct Tally {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const noexcept { return failures == 0; }
    void merge(const Tally& other);
};

/// Compares each decoder's d2 with the oracle's on every query (oracle run
/// once per query). One tally per entry of `algorithms`.
std::vector<Tally> check_against_oracle(const CoxeterLattice& lattice, const std::vector<Algorithm>& algorithms,
                                        const RealVector& queries, int radius,
                                        double tolerance = kDistanceTolerance);

/// d2 of `candidate` equals d2 of `reference` on every query.
Tally check_agreement(const CoxeterLattice& lattice, Algorithm candidate, Algorithm reference,
                      const RealVector& queries, double tolerance = kDistanceTolerance);

struct VerifyConfig {
    std::size_t max_n = kVerifyMaxDimension;
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    double range = 10.0;
    int radius = 2;
};

struct PropertyResult {
    std::string name;
    Tally tally;
};

struct VerifyReport {
    std::vector<PropertyResult> properties;

    bool all_passed() const noexcept;
};

/// Throws std::invalid_argument if max_n is 0 or above 7, trials is 0 or the
/// radius is below 2.
VerifyReport run_verification(const VerifyConfig& config);

/// One line per property; contains no timing so output is reproducible.
void print_report(std::ostream& os, const VerifyReport& report);

} // namespace coxeter

#endif // COXETER_VERIFY_HPP
