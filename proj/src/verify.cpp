#include "coxeter/verify.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <stdexcept>

#include "coxeter/oracle.hpp"

namespace coxeter {

namespace {

const std::vector<Algorithm> kGeneralDecoders{Algorithm::kLogLinear, Algorithm::kLinear, Algorithm::kGlue};

std::string describe(const CoxeterLattice& lattice, std::string_view alg, std::size_t row) {
    return "n=" + std::to_string(lattice.n()) + " m=" + std::to_string(lattice.m()) + " " + std::string(alg) +
           " query#" + std::to_string(row);
}

std::string number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Records a failure; `what` is built lazily so passing cases cost nothing.
template <typename Describe>
void record(Tally& t, bool ok, Describe&& what) {
    ++t.cases;
    if (!ok) {
        if (t.failures == 0) {
            t.first_failure = what();
        }
        ++t.failures;
    }
}

struct Outcome {
    double d2 = 0.0;
    std::string error;
};

Outcome run_decoder(const CoxeterLattice& lattice, Algorithm alg, std::span<const double> y) {
    try {
        return {decode(lattice, alg, y).d2, {}};
    } catch (const std::exception& e) {
        return {0.0, e.what()};
    }
}

PreImage random_member(const CoxeterLattice& lattice, QueryStream& stream) {
    PreImage v(lattice.dim());
    std::int64_t sum = 0;
    for (auto& x : v) {
        x = stream.next_int(-3, 3);
        sum += x;
    }
    v.back() -= floor_mod(sum, static_cast<std::int64_t>(lattice.m()));
    return v;
}

bool same_point(const RealVector& a, const RealVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > kDistanceTolerance) {
            return false;
        }
    }
    return true;
}

// Lattice-level invariants for one decoder on one (lattice, query set).
void check_structure(const CoxeterLattice& lattice, Algorithm alg, const RealVector& queries,
                     QueryStream& stream, double range, Tally& shift, Tally& translation, Tally& membership) {
    const std::size_t dim = lattice.dim();
    const std::size_t rows = queries.size() / dim;
    const std::string_view name = algorithm_name(alg);
    RealVector moved(dim);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::span<const double> y(queries.data() + r * dim, dim);
        try {
            const NearestPointResult base = decode(lattice, alg, y);

            const bool member = is_member(lattice, base.u) && is_zero_sum(base.x) &&
                                same_point(base.x, project(std::span<const std::int64_t>(base.u)));
            record(membership, member, [&] { return describe(lattice, name, r) + ": result not in lattice"; });

            const double c = stream.next() + 0.5 * range;
            for (std::size_t i = 0; i < dim; ++i) moved[i] = y[i] + c;
            const NearestPointResult shifted = decode(lattice, alg, moved);
            record(shift, same_point(base.x, shifted.x),
                   [&] { return describe(lattice, name, r) + ": point moved under shift by " + number(c); });

            const PreImage v = random_member(lattice, stream);
            for (std::size_t i = 0; i < dim; ++i) moved[i] = y[i] + static_cast<double>(v[i]);
            const NearestPointResult translated = decode(lattice, alg, moved);
            record(translation, std::abs(translated.d2 - base.d2) <= kDistanceTolerance, [&] {
                return describe(lattice, name, r) + ": d2 " + number(base.d2) + " became " + number(translated.d2);
            });
        } catch (const std::exception& e) {
            const std::string msg = describe(lattice, name, r) + ": " + e.what();
            record(membership, false, [&] { return msg; });
            record(shift, false, [&] { return msg; });
            record(translation, false, [&] { return msg; });
        }
    }
}

void check_shell(Tally& t, const CoxeterLattice& lattice, std::uint64_t expected, int bound, int stable_bound) {
    const ShellReport a = enumerate_shell(lattice, bound);
    const ShellReport b = enumerate_shell(lattice, stable_bound);
    const bool ok = a.count == expected && b.count == expected && a.scaled_min_norm2 == b.scaled_min_norm2;
    record(t, ok, [&] {
        return "A_{" + std::to_string(lattice.n()) + "/" + std::to_string(lattice.m()) + "}: counts " +
               std::to_string(a.count) + "/" + std::to_string(b.count) + ", expected " + std::to_string(expected);
    });
}

} // namespace

void Tally::merge(const Tally& other) {
    if (failures == 0 && other.failures != 0) {
        first_failure = other.first_failure;
    }
    cases += other.cases;
    failures += other.failures;
}

RealVector make_queries(InputKind kind, std::uint64_t seed, std::size_t dim, std::size_t count, double range) {
    RealVector out(dim * count);
    QueryStream stream(seed, range);
    const auto span = static_cast<std::int64_t>(std::ceil(range));
    const auto d = static_cast<std::int64_t>(dim);
    for (double& v : out) {
        switch (kind) {
        case InputKind::kUniform: v = stream.next(); break;
        case InputKind::kHalfIntegers: v = static_cast<double>(stream.next_int(-2 * span, 2 * span)) / 2.0; break;
        case InputKind::kBucketBoundaries:
            v = static_cast<double>(stream.next_int(-span * d, span * d)) / static_cast<double>(d);
            break;
        }
    }
    return out;
}

std::vector<Tally> check_against_oracle(const CoxeterLattice& lattice, const std::vector<Algorithm>& algorithms,
                                        const RealVector& queries, int radius, double tolerance) {
    const std::size_t dim = lattice.dim();
    const std::size_t rows = queries.size() / dim;
    const std::size_t algs = algorithms.size();
    std::vector<double> oracle(rows);
    std::vector<Outcome> outcomes(rows * algs);
    std::vector<std::string> oracle_error(rows);

    // The oracle itself is serial here; the parallelism is across queries.
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t ri = 0; ri < static_cast<std::ptrdiff_t>(rows); ++ri) {
        const auto r = static_cast<std::size_t>(ri);
        const std::span<const double> y(queries.data() + r * dim, dim);
        try {
            oracle[r] = np_bruteforce_serial(lattice, y, radius).d2;
        } catch (const std::exception& e) {
            oracle_error[r] = e.what();
        }
        for (std::size_t a = 0; a < algs; ++a) {
            outcomes[r * algs + a] = run_decoder(lattice, algorithms[a], y);
        }
    }

    std::vector<Tally> tallies(algs);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t a = 0; a < algs; ++a) {
            const Outcome& o = outcomes[r * algs + a];
            const std::string_view name = algorithm_name(algorithms[a]);
            if (!oracle_error[r].empty()) {
                record(tallies[a], false, [&] { return describe(lattice, name, r) + ": oracle: " + oracle_error[r]; });
            } else if (!o.error.empty()) {
                record(tallies[a], false, [&] { return describe(lattice, name, r) + ": " + o.error; });
            } else {
                record(tallies[a], std::abs(o.d2 - oracle[r]) <= tolerance, [&] {
                    return describe(lattice, name, r) + ": d2=" + number(o.d2) + " oracle=" + number(oracle[r]);
                });
            }
        }
    }
    return tallies;
}

Tally check_agreement(const CoxeterLattice& lattice, Algorithm candidate, Algorithm reference,
                      const RealVector& queries, double tolerance) {
    const std::size_t dim = lattice.dim();
    const std::size_t rows = queries.size() / dim;
    Tally t;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::span<const double> y(queries.data() + r * dim, dim);
        const Outcome a = run_decoder(lattice, candidate, y);
        const Outcome b = run_decoder(lattice, reference, y);
        const std::string_view name = algorithm_name(candidate);
        if (!a.error.empty() || !b.error.empty()) {
            record(t, false, [&] { return describe(lattice, name, r) + ": " + a.error + b.error; });
            continue;
        }
        record(t, std::abs(a.d2 - b.d2) <= tolerance, [&] {
            return describe(lattice, name, r) + ": d2=" + number(a.d2) + " vs " +
                   std::string(algorithm_name(reference)) + " " + number(b.d2);
        });
    }
    return t;
}

bool VerifyReport::all_passed() const noexcept {
    for (const PropertyResult& p : properties) {
        if (!p.tally.passed()) {
            return false;
        }
    }
    return !properties.empty();
}

VerifyReport run_verification(const VerifyConfig& config) {
    if (config.max_n == 0 || config.max_n > kVerifyMaxDimension) {
        throw std::invalid_argument("verify supports 1 <= max n <= " + std::to_string(kVerifyMaxDimension));
    }
    if (config.trials == 0) {
        throw std::invalid_argument("verify needs at least one trial");
    }
    if (config.radius < 2) {
        throw std::invalid_argument("oracle radius must be at least 2");
    }

    std::map<std::string, Tally> by_name;
    std::vector<std::string> order;
    auto tally = [&](const std::string& name) -> Tally& {
        auto [it, inserted] = by_name.try_emplace(name);
        if (inserted) order.push_back(name);
        return it->second;
    };

    for (const Algorithm alg : kGeneralDecoders) {
        tally("oracle-" + std::string(algorithm_name(alg)));
    }
    for (std::size_t n = 1; n <= config.max_n; ++n) {
        const std::size_t dim = n + 1;
        for (const std::size_t m : lattice_orders(n)) {
            const CoxeterLattice lattice(n, m);
            const RealVector uniform =
                make_queries(InputKind::kUniform, mix_seed(config.seed, {n, m, 0}), dim, config.trials, config.range);
            const auto uniform_tallies = check_against_oracle(lattice, kGeneralDecoders, uniform, config.radius);
            for (std::size_t a = 0; a < kGeneralDecoders.size(); ++a) {
                tally("oracle-" + std::string(algorithm_name(kGeneralDecoders[a]))).merge(uniform_tallies[a]);
            }

            const RealVector halves = make_queries(InputKind::kHalfIntegers, mix_seed(config.seed, {n, m, 1}), dim,
                                                   config.trials, config.range);
            for (const Tally& t : check_against_oracle(lattice, kGeneralDecoders, halves, config.radius)) {
                tally("adversarial-halves").merge(t);
            }
            const RealVector edges = make_queries(InputKind::kBucketBoundaries, mix_seed(config.seed, {n, m, 2}),
                                                  dim, config.trials, config.range);
            for (const Tally& t : check_against_oracle(lattice, kGeneralDecoders, edges, config.radius)) {
                tally("adversarial-boundaries").merge(t);
            }

            QueryStream stream(mix_seed(config.seed, {n, m, 3}), config.range);
            for (const Algorithm alg : kGeneralDecoders) {
                check_structure(lattice, alg, uniform, stream, config.range, tally("shift-invariance"),
                                tally("lattice-translation"), tally("membership"));
            }
        }

        // Denser lattices (smaller m) are never farther away.
        const std::vector<std::size_t> orders = lattice_orders(n);
        const RealVector queries =
            make_queries(InputKind::kUniform, mix_seed(config.seed, {n, 4}), dim, config.trials, config.range);
        Tally& nesting = tally("nesting-monotonicity");
        for (std::size_t r = 0; r < config.trials; ++r) {
            const std::span<const double> y(queries.data() + r * dim, dim);
            std::vector<double> d2;
            for (const std::size_t m : orders) {
                d2.push_back(run_decoder(CoxeterLattice(n, m), Algorithm::kLinear, y).d2);
            }
            for (std::size_t a = 0; a < orders.size(); ++a) {
                for (std::size_t b = a + 1; b < orders.size(); ++b) {
                    if (orders[b] % orders[a] != 0) {
                        continue;  // nesting holds along divisibility
                    }
                    record(nesting, d2[a] <= d2[b] + kDistanceTolerance, [&] {
                        return "n=" + std::to_string(n) + " query#" + std::to_string(r) + ": d2(m=" +
                               std::to_string(orders[a]) + ")=" + number(d2[a]) + " > d2(m=" +
                               std::to_string(orders[b]) + ")=" + number(d2[b]);
                    });
                }
            }
        }

        const RealVector special =
            make_queries(InputKind::kUniform, mix_seed(config.seed, {n, 5}), dim, config.trials, config.range);
        const CoxeterLattice an = CoxeterLattice::an(n);
        const CoxeterLattice anstar = CoxeterLattice::anstar(n);
        tally("specialization-an").merge(check_agreement(an, Algorithm::kAnLinear, Algorithm::kLinear, special));
        tally("specialization-an").merge(check_agreement(an, Algorithm::kAnLogLinear, Algorithm::kLinear, special));
        tally("specialization-anstar")
            .merge(check_agreement(anstar, Algorithm::kAnStarLinear, Algorithm::kLinear, special));
        tally("specialization-anstar")
            .merge(check_agreement(anstar, Algorithm::kAnStarLogLinear, Algorithm::kLinear, special));
    }

    Tally& shells = tally("shell-counts");
    for (std::size_t n = 2; n <= 4; ++n) {
        check_shell(shells, CoxeterLattice::an(n), n * (n + 1), 2, 3);
        check_shell(shells, CoxeterLattice::anstar(n), 2 * (n + 1), 2, 3);
    }
    check_shell(shells, CoxeterLattice(8, 3), 240, 2, 3);
    check_shell(shells, CoxeterLattice(7, 4), 126, 2, 3);
    check_shell(shells, CoxeterLattice(7, 2), 56, 2, 3);

    VerifyReport report;
    for (const std::string& name : order) {
        report.properties.push_back({name, by_name[name]});
    }
    return report;
}

void print_report(std::ostream& os, const VerifyReport& report) {
    for (const PropertyResult& p : report.properties) {
        char line[160];
        std::snprintf(line, sizeof line, "%-4s  %-24s cases=%-8zu failures=%zu", p.tally.passed() ? "PASS" : "FAIL",
                      p.name.c_str(), p.tally.cases, p.tally.failures);
        os << line << '\n';
        if (!p.tally.passed()) {
            os << "      first failure: " << p.tally.first_failure << '\n';
        }
    }
    os << (report.all_passed() ? "all properties passed" : "verification FAILED") << '\n';
}

} // namespace coxeter
