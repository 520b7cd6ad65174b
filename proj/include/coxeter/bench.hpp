// Benchmark sweeps over (n, m, algorithm) with CSV output.
//
// Inputs for a given (n, m) come from one seeded stream, so every algorithm
// decodes the same vectors. Generation happens outside the timed region; each
// configuration gets an untimed warm-up of max(trials/10, 100) calls.

#ifndef COXETER_BENCH_HPP
#define COXETER_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/nearest_point.hpp"

namespace coxeter {

/// fixed:K gives m = K, proportional:K gives m = (n+1)/K. Either needs K to
/// divide n+1.
struct OrderRule {
    enum class Kind { kFixed, kProportional };

    Kind kind = Kind::kFixed;
    std::size_t k = 4;

    std::optional<std::size_t> order_for(std::size_t n) const noexcept;
    std::string to_string() const;

    /// Throws std::invalid_argument on a malformed rule.
    static OrderRule parse(std::string_view text);
};

struct BenchConfig {
    std::vector<std::size_t> dims{27, 99, 1023};
    OrderRule order_rule;
    std::vector<Algorithm> algorithms{Algorithm::kLinear, Algorithm::kLogLinear, Algorithm::kGlue};
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    double range = 10.0;
};

struct BenchRow {
    std::size_t n = 0;
    std::size_t m = 0;
    std::string algorithm;
    std::size_t trials = 0;
    double total_seconds = 0.0;
    double mean_ns = 0.0;
};

inline constexpr std::string_view kBenchCsvHeader = "n,m,algorithm,trials,total_seconds,mean_ns";

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const BenchRow& row);

/// Runs every (n, m, algorithm) in order. Rows are written to `csv` as they
/// complete when it is non-null (the header first). Skipped pairs (m does not
/// divide n+1, or an A_n / A_n* decoder on a lattice of another order) are
/// reported on `log`. trials == 0 writes the header and nothing else.
std::vector<BenchRow> run_bench(const BenchConfig& config, std::ostream* csv = nullptr,
                                std::ostream* log = nullptr);

} // namespace coxeter

#endif // COXETER_BENCH_HPP
