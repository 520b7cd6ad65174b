#include "coxeter/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "coxeter/lattice.hpp"
#include "coxeter/random.hpp"

namespace coxeter {

namespace {

constexpr std::size_t kChunkRows = 64;

// Keeps the decode results observable.
volatile double g_sink = 0.0;

// Decodes `count` generated queries; only the decode calls are timed.
double timed_decodes(const CoxeterLattice& lattice, Algorithm alg, QueryStream& stream, std::size_t count,
                     double& sink) {
    using Clock = std::chrono::steady_clock;
    const std::size_t dim = lattice.dim();
    RealVector chunk(kChunkRows * dim);
    Clock::duration elapsed{};
    for (std::size_t done = 0; done < count;) {
        const std::size_t rows = std::min(kChunkRows, count - done);
        stream.fill(std::span<double>(chunk).first(rows * dim));
        const auto start = Clock::now();
        for (std::size_t r = 0; r < rows; ++r) {
            sink += decode(lattice, alg, std::span<const double>(chunk).subspan(r * dim, dim)).d2;
        }
        elapsed += Clock::now() - start;
        done += rows;
    }
    return std::chrono::duration<double>(elapsed).count();
}

bool algorithm_applies(Algorithm alg, const CoxeterLattice& lattice) {
    switch (alg) {
    case Algorithm::kAnLinear:
    case Algorithm::kAnLogLinear: return lattice.is_an();
    case Algorithm::kAnStarLinear:
    case Algorithm::kAnStarLogLinear: return lattice.is_anstar();
    default: return true;
    }
}

} // namespace

std::optional<std::size_t> OrderRule::order_for(std::size_t n) const noexcept {
    if (k == 0 || (n + 1) % k != 0) {
        return std::nullopt;
    }
    return kind == Kind::kFixed ? k : (n + 1) / k;
}

std::string OrderRule::to_string() const {
    return (kind == Kind::kFixed ? "fixed:" : "proportional:") + std::to_string(k);
}

OrderRule OrderRule::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("order rule must look like fixed:K or proportional:K");
    }
    const std::string_view kind = text.substr(0, colon);
    const std::string_view value = text.substr(colon + 1);
    OrderRule rule;
    if (kind == "fixed") {
        rule.kind = Kind::kFixed;
    } else if (kind == "proportional") {
        rule.kind = Kind::kProportional;
    } else {
        throw std::invalid_argument("unknown order rule '" + std::string(kind) + "'");
    }
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), rule.k);
    if (ec != std::errc{} || ptr != value.data() + value.size() || rule.k == 0) {
        throw std::invalid_argument("order rule needs a positive integer, got '" + std::string(value) + "'");
    }
    return rule;
}

void write_csv_header(std::ostream& os) { os << kBenchCsvHeader << '\n'; }

void write_csv_row(std::ostream& os, const BenchRow& row) {
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.6f,%.1f", row.total_seconds, row.mean_ns);
    os << row.n << ',' << row.m << ',' << row.algorithm << ',' << row.trials << ',' << timing << '\n';
}

std::vector<BenchRow> run_bench(const BenchConfig& config, std::ostream* csv, std::ostream* log) {
    if (csv != nullptr) {
        write_csv_header(*csv);
        csv->flush();
    }
    std::vector<BenchRow> rows;
    if (config.trials == 0) {
        return rows;
    }
    double sink = 0.0;
    for (const std::size_t n : config.dims) {
        const std::optional<std::size_t> m = n == 0 ? std::nullopt : config.order_rule.order_for(n);
        if (!m) {
            if (log != nullptr) {
                *log << "skipping n=" << n << ": " << config.order_rule.to_string()
                     << " does not give an order dividing n+1\n";
            }
            continue;
        }
        const CoxeterLattice lattice(n, *m);
        for (const Algorithm alg : config.algorithms) {
            if (!algorithm_applies(alg, lattice)) {
                if (log != nullptr) {
                    *log << "skipping n=" << n << " m=" << *m << " for " << algorithm_name(alg)
                         << ": decoder needs a different order\n";
                }
                continue;
            }
            BenchRow row;
            row.n = n;
            row.m = *m;
            row.algorithm = std::string(algorithm_name(alg));
            row.trials = config.trials;
            QueryStream warmup(mix_seed(config.seed, {n, *m, 1}), config.range);
            timed_decodes(lattice, alg, warmup, std::max<std::size_t>(config.trials / 10, 100), sink);
            QueryStream stream(mix_seed(config.seed, {n, *m, 0}), config.range);
            row.total_seconds = timed_decodes(lattice, alg, stream, config.trials, sink);
            row.mean_ns = row.total_seconds * 1e9 / static_cast<double>(config.trials);
            if (csv != nullptr) {
                write_csv_row(*csv, row);
                csv->flush();
            }
            rows.push_back(std::move(row));
        }
    }
    g_sink = sink;
    return rows;
}

} // namespace coxeter
