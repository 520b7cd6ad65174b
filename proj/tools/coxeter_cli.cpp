// coxeter: nearest point decoding, benchmark sweeps and self-verification for
// the Coxeter lattices A_{n/m}.
//
//   coxeter np --n 2 --m 3 --alg linear [FILE]
//   coxeter bench --dims 1023,4095 --order-rule fixed:4 --alg linear,loglinear,glue
//   coxeter verify --max-n 7 --trials 200 --seed 1
//
// Exit codes: 0 success, 1 input error, 2 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coxeter/bench.hpp"
#include "coxeter/lattice.hpp"
#include "coxeter/nearest_point.hpp"
#include "coxeter/oracle.hpp"
#include "coxeter/vector_io.hpp"
#include "coxeter/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerifyFailed = 2;

struct NpOptions {
    std::size_t n = 0;
    std::optional<std::size_t> m;
    std::string alg = "linear";
    int radius = 2;
    std::string input = "-";
};

struct BenchOptions {
    std::vector<std::size_t> dims{27, 99, 1023};
    std::string order_rule = "fixed:4";
    std::vector<std::string> algs{"linear", "loglinear", "glue"};
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    double range = 10.0;
};

struct VerifyOptions {
    coxeter::VerifyConfig config;
    bool inject_fault = false;
};

// The A_n and A_n* decoders fix the order; an explicit conflicting --m is an error.
std::optional<coxeter::CoxeterLattice> lattice_for(const NpOptions& opt, const std::string& alg) {
    std::size_t m = opt.m.value_or(1);
    const bool an = alg == "an" || alg == "an-linear" || alg == "an-loglinear";
    const bool anstar = alg == "anstar" || alg == "anstar-linear" || alg == "anstar-loglinear";
    if (an || anstar) {
        const std::size_t forced = an ? opt.n + 1 : 1;
        if (opt.m && *opt.m != forced) {
            std::cerr << "error: --alg " << alg << " decodes A_{n/" << forced << "}, got --m " << *opt.m << '\n';
            return std::nullopt;
        }
        m = forced;
    } else if (!opt.m) {
        std::cerr << "error: --m is required for --alg " << alg << '\n';
        return std::nullopt;
    }
    try {
        return coxeter::CoxeterLattice(opt.n, m);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return std::nullopt;
    }
}

int run_np(const NpOptions& opt) {
    const auto lattice = lattice_for(opt, opt.alg);
    if (!lattice) {
        return kExitInputError;
    }
    const bool use_oracle = opt.alg == "oracle";
    const std::optional<coxeter::Algorithm> alg = coxeter::parse_algorithm(opt.alg);
    if (!use_oracle && !alg) {
        std::cerr << "error: unknown algorithm '" << opt.alg << "'\n";
        return kExitInputError;
    }

    std::unique_ptr<std::ifstream> file;
    std::istream* in = &std::cin;
    if (opt.input != "-") {
        file = std::make_unique<std::ifstream>(opt.input);
        if (!*file) {
            std::cerr << "error: cannot open " << opt.input << '\n';
            return kExitInputError;
        }
        in = file.get();
    }

    int status = kExitOk;
    std::string line;
    for (std::size_t line_no = 1; std::getline(*in, line); ++line_no) {
        const coxeter::VectorLine parsed = coxeter::parse_vector_line(line);
        if (parsed.kind == coxeter::VectorLine::Kind::kSkip) {
            continue;
        }
        if (parsed.kind == coxeter::VectorLine::Kind::kError) {
            std::cerr << "line " << line_no << ": " << parsed.error << '\n';
            status = kExitInputError;
            continue;
        }
        if (parsed.values.size() != lattice->dim()) {
            std::cerr << "line " << line_no << ": expected " << lattice->dim() << " values, got "
                      << parsed.values.size() << '\n';
            status = kExitInputError;
            continue;
        }
        try {
            const coxeter::NearestPointResult r = use_oracle
                                                      ? coxeter::np_bruteforce(*lattice, parsed.values, opt.radius)
                                                      : coxeter::decode(*lattice, *alg, parsed.values);
            std::cout << coxeter::format_result(r) << '\n';
        } catch (const std::exception& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            status = kExitInputError;
        }
    }
    return status;
}

int run_bench(const BenchOptions& opt) {
    coxeter::BenchConfig config;
    try {
        config.order_rule = coxeter::OrderRule::parse(opt.order_rule);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    config.algorithms.clear();
    for (const std::string& name : opt.algs) {
        const auto alg = coxeter::parse_algorithm(name);
        if (!alg) {
            std::cerr << "error: unknown algorithm '" << name << "'\n";
            return kExitInputError;
        }
        config.algorithms.push_back(*alg);
    }
    config.dims = opt.dims;
    config.trials = opt.trials;
    config.seed = opt.seed;
    config.range = opt.range;
    coxeter::run_bench(config, &std::cout, &std::cerr);
    return kExitOk;
}

int run_verify(const VerifyOptions& opt) {
    std::optional<coxeter::testing::ScopedRoundingFault> fault;
    if (opt.inject_fault) {
        fault.emplace();
    }
    coxeter::VerifyReport report;
    try {
        report = coxeter::run_verification(opt.config);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    coxeter::print_report(std::cout, report);
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nearest point decoding for the Coxeter lattices A_{n/m}"};
    app.require_subcommand(1);

    NpOptions np;
    auto* np_cmd = app.add_subcommand("np", "Decode vectors (one per line) from FILE or stdin");
    np_cmd->add_option("--n", np.n, "Lattice dimension n (vectors have n+1 entries)")->required();
    np_cmd->add_option("--m", np.m, "Glue order m (must divide n+1, otherwise A_{n/1} is used)");
    np_cmd->add_option("--alg", np.alg,
                       "loglinear | linear | glue | an | an-loglinear | anstar | anstar-loglinear | oracle");
    np_cmd->add_option("--radius", np.radius, "Search radius for --alg oracle")->check(CLI::Range(2, 16));
    np_cmd->add_option("input", np.input, "Vector file ('-' for stdin)");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time decoders over seeded random inputs; CSV on stdout");
    bench_cmd->add_option("--dims", bench.dims, "Comma-separated list of n")->delimiter(',');
    bench_cmd->add_option("--order-rule", bench.order_rule, "fixed:K (m=K) or proportional:K (m=(n+1)/K)");
    bench_cmd->add_option("--alg", bench.algs, "Comma-separated decoders")->delimiter(',');
    bench_cmd->add_option("--trials", bench.trials, "Decodes per configuration");
    bench_cmd->add_option("--seed", bench.seed, "Input stream seed");
    bench_cmd->add_option("--range", bench.range, "Inputs are uniform on [-range, range)")
        ->check(CLI::PositiveNumber);

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the oracle and invariant suite");
    verify_cmd->add_option("--max-n", verify.config.max_n, "Largest n checked (at most 7)");
    verify_cmd->add_option("--trials", verify.config.trials, "Random queries per lattice and property");
    verify_cmd->add_option("--seed", verify.config.seed, "Input stream seed");
    verify_cmd->add_option("--range", verify.config.range, "Inputs are uniform on [-range, range)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--radius", verify.config.radius, "Oracle search radius")->check(CLI::Range(2, 16));
    verify_cmd->add_flag("--inject-fault", verify.inject_fault, "Negative control: misround one coordinate")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (*np_cmd) return run_np(np);
    if (*bench_cmd) return run_bench(bench);
    if (*verify_cmd) return run_verify(verify);
    return kExitInputError;
}
