#include "coxeter/nearest_point.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace coxeter {

namespace {

std::atomic<int> g_rounding_fault{0};

void require_length(const CoxeterLattice& lattice, std::span<const double> y) {
    if (y.size() != lattice.dim()) {
        throw std::invalid_argument("query length " + std::to_string(y.size()) + " does not match n+1=" +
                                    std::to_string(lattice.dim()));
    }
}

// round(y) and z = y - round(y), with the test-only fault applied.
void round_query(std::span<const double> y, PreImage& u, RealVector& z) {
    require_finite(y);
    u.resize(y.size());
    z.resize(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        u[i] = round_half_up(y[i]);
    }
    if (!u.empty() && testing::rounding_fault_active()) {
        const double f = std::floor(y[0]);
        u[0] = static_cast<std::int64_t>(f) + (y[0] - f >= 0.5 ? 0 : 1);
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
        z[i] = y[i] - static_cast<double>(u[i]);
    }
}

NearestPointResult finish(std::span<const double> y, PreImage u) {
    canonicalize_preimage(u);
    NearestPointResult r;
    r.x = project(std::span<const std::int64_t>(u));
    r.u = std::move(u);
    const double mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
    double d2 = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double d = (y[i] - mean) - r.x[i];
        d2 += d * d;
    }
    r.d2 = d2;
    return r;
}

struct ScanScalars {
    double alpha = 0.0;
    double beta = 0.0;
    std::int64_t gamma = 0;
};

ScanScalars initial_scalars(std::span<const double> z, std::span<const std::int64_t> u, std::int64_t m) {
    ScanScalars s;
    std::int64_t usum = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        s.alpha += z[i];
        s.beta += z[i] * z[i];
        usum += u[i];
    }
    s.gamma = floor_mod(usum, m);
    return s;
}

template <bool CheckGamma>
NearestPointResult loglinear_scan(const CoxeterLattice& lattice, std::span<const double> y, ScanTrace* trace) {
    require_length(lattice, y);
    PreImage u;
    RealVector z;
    round_query(y, u, z);

    const auto m = static_cast<std::int64_t>(lattice.m());
    const double count = static_cast<double>(lattice.dim());
    auto [alpha, beta, gamma] = initial_scalars(z, u, m);
    const IndexVector s = sort_indices(z);

    double best = std::numeric_limits<double>::infinity();
    std::size_t k_star = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double d = beta - alpha * alpha / count;
        const bool admissible = !CheckGamma || gamma == 0;
        if (admissible && d < best) {
            best = d;
            k_star = i;
        }
        if (trace != nullptr) {
            trace->states.push_back({i, alpha, beta, gamma, d, best, k_star, admissible});
        }
        alpha -= 1.0;
        beta += 1.0 - 2.0 * z[s[i]];
        if (++gamma == m) {
            gamma = 0;
        }
    }
    if (trace != nullptr) {
        trace->z = z;
        trace->u0 = u;
        trace->order = s;
    }
    for (std::size_t i = 0; i < k_star; ++i) {
        ++u[s[i]];
    }
    return finish(y, std::move(u));
}

// The m = 1 variant only needs each bucket's maximum in front, found by a
// single pass instead of a selection.
template <bool AnStar>
NearestPointResult linear_scan(const CoxeterLattice& lattice, std::span<const double> y, ScanTrace* trace) {
    require_length(lattice, y);
    PreImage u;
    RealVector z;
    round_query(y, u, z);

    const auto m = static_cast<std::int64_t>(lattice.m());
    const double count = static_cast<double>(lattice.dim());
    auto [alpha, beta, gamma] = initial_scalars(z, u, m);

    // Buckets are stored back to back, so after partitioning each one in place
    // the flat index array is the concatenation w.
    BucketPartition buckets = bucket_partition(lattice, z);
    IndexVector& w = buckets.indices;

    double best = std::numeric_limits<double>::infinity();
    std::size_t k_star = 0;
    std::size_t k = 1;
    for (std::size_t j = 0; j < buckets.bucket_count(); ++j) {
        const std::size_t begin = buckets.offsets[j];
        const auto size = static_cast<std::int64_t>(buckets.offsets[j + 1] - begin);
        if (size == 0) {
            continue;
        }
        std::span<std::size_t> bucket(w.data() + begin, static_cast<std::size_t>(size));

        // First and last in-bucket steps whose running sum is 0 mod m.
        const std::int64_t g = m - gamma;
        const std::int64_t p = size - (size + gamma) % m;
        if constexpr (AnStar) {
            std::size_t top = 0;
            for (std::size_t i = 1; i < bucket.size(); ++i) {
                if (z[bucket[i]] > z[bucket[top]]) {
                    top = i;
                }
            }
            std::swap(bucket[0], bucket[top]);
        } else if (g <= size) {
            partition_two(z, bucket, static_cast<std::size_t>(g), static_cast<std::size_t>(p));
        }

        for (std::int64_t i = 1; i <= size; ++i, ++k) {
            alpha -= 1.0;
            beta += 1.0 - 2.0 * z[bucket[static_cast<std::size_t>(i - 1)]];
            if (++gamma == m) {
                gamma = 0;
            }
            const bool tested = i == g || i == p;
            const double d = beta - alpha * alpha / count;
            if (tested && d < best) {
                best = d;
                k_star = k;
            }
            if (trace != nullptr) {
                trace->states.push_back({k, alpha, beta, gamma, d, best, k_star, tested});
            }
        }
    }
    if (trace != nullptr) {
        trace->z = z;
        trace->u0 = u;
        trace->order = w;
    }
    // u_{n+1} = u_0 + 1 projects to the same point; report u_0.
    if (k_star == w.size()) {
        k_star = 0;
    }
    for (std::size_t i = 0; i < k_star; ++i) {
        ++u[w[i]];
    }
    return finish(y, std::move(u));
}

PreImage an_preimage(std::span<const double> y, AnDecoder decoder) {
    PreImage u;
    RealVector z;
    round_query(y, u, z);
    const auto count = static_cast<std::int64_t>(y.size());
    const std::int64_t usum = std::accumulate(u.begin(), u.end(), std::int64_t{0});
    const auto gamma = static_cast<std::size_t>(floor_mod(count - usum, count));
    if (gamma == 0) {
        return u;
    }
    IndexVector order;
    if (decoder == AnDecoder::kLogLinear) {
        order = sort_indices(z);
    } else {
        order.resize(y.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        partition_at(z, order, gamma);
    }
    for (std::size_t i = 0; i < gamma; ++i) {
        ++u[order[i]];
    }
    return u;
}

NearestPointResult an_decode(std::span<const double> y, AnDecoder decoder) {
    if (y.empty()) {
        throw std::invalid_argument("query must have at least two coordinates");
    }
    CoxeterLattice lattice = CoxeterLattice::an(y.size() - 1);
    require_length(lattice, y);
    return finish(y, an_preimage(y, decoder));
}

CoxeterLattice lattice_for(std::span<const double> y, std::size_t m_if_valid) {
    if (y.size() < 2) {
        throw std::invalid_argument("query must have at least two coordinates");
    }
    return {y.size() - 1, m_if_valid};
}

} // namespace

RealVector GlueVector::to_real() const {
    RealVector out(numerators.size());
    for (std::size_t i = 0; i < numerators.size(); ++i) {
        out[i] = static_cast<double>(numerators[i]) / static_cast<double>(denominator);
    }
    return out;
}

std::string_view algorithm_name(Algorithm alg) noexcept {
    switch (alg) {
    case Algorithm::kLogLinear: return "loglinear";
    case Algorithm::kLinear: return "linear";
    case Algorithm::kGlue: return "glue";
    case Algorithm::kAnLogLinear: return "an-loglinear";
    case Algorithm::kAnLinear: return "an";
    case Algorithm::kAnStarLogLinear: return "anstar-loglinear";
    case Algorithm::kAnStarLinear: return "anstar";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    for (Algorithm alg : {Algorithm::kLogLinear, Algorithm::kLinear, Algorithm::kGlue, Algorithm::kAnLogLinear,
                          Algorithm::kAnLinear, Algorithm::kAnStarLogLinear, Algorithm::kAnStarLinear}) {
        if (algorithm_name(alg) == name) {
            return alg;
        }
    }
    if (name == "an-linear") return Algorithm::kAnLinear;
    if (name == "anstar-linear") return Algorithm::kAnStarLinear;
    return std::nullopt;
}

NearestPointResult np_loglinear(const CoxeterLattice& lattice, std::span<const double> y) {
    return loglinear_scan<true>(lattice, y, nullptr);
}

NearestPointResult np_loglinear(const CoxeterLattice& lattice, std::span<const double> y, ScanTrace& trace) {
    trace = {};
    return loglinear_scan<true>(lattice, y, &trace);
}

NearestPointResult np_linear(const CoxeterLattice& lattice, std::span<const double> y) {
    return linear_scan<false>(lattice, y, nullptr);
}

NearestPointResult np_linear(const CoxeterLattice& lattice, std::span<const double> y, ScanTrace& trace) {
    trace = {};
    return linear_scan<false>(lattice, y, &trace);
}

BucketPartition bucket_partition(const CoxeterLattice& lattice, std::span<const double> z) {
    if (z.size() != lattice.dim()) {
        throw std::invalid_argument("bucket_partition: length mismatch");
    }
    const std::size_t q = lattice.q();
    const double qd = static_cast<double>(q);
    // Bucket of each coordinate (0-based), then a counting sort keeps
    // ascending coordinate order inside each bucket.
    std::vector<std::size_t> label(z.size());
    BucketPartition out;
    out.offsets.assign(q + 1, 0);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (!(z[i] >= -0.5 && z[i] < 0.5)) {
            throw std::domain_error("fractional part " + std::to_string(z[i]) + " outside [-0.5, 0.5)");
        }
        // z just below 0.5 can round q(z + 1/2) up to q.
        auto slot = static_cast<std::size_t>(std::floor(qd * (z[i] + 0.5)));
        if (slot >= q) {
            slot = q - 1;
        }
        label[i] = q - 1 - slot;
        ++out.offsets[label[i] + 1];
    }
    std::partial_sum(out.offsets.begin(), out.offsets.end(), out.offsets.begin());
    out.indices.resize(z.size());
    std::vector<std::size_t> cursor(out.offsets.begin(), out.offsets.end() - 1);
    for (std::size_t i = 0; i < z.size(); ++i) {
        out.indices[cursor[label[i]]++] = i;
    }
    return out;
}

GlueVector glue_vector(const CoxeterLattice& lattice, std::size_t i) {
    const std::size_t n = lattice.n();
    if (i > n) {
        throw std::out_of_range("glue index " + std::to_string(i) + " exceeds n=" + std::to_string(n));
    }
    const auto count = static_cast<std::int64_t>(n + 1);
    const auto ii = static_cast<std::int64_t>(i);
    const std::int64_t j = count - ii;
    GlueVector g;
    g.denominator = count;
    g.numerators.assign(static_cast<std::size_t>(j), ii);
    g.numerators.resize(n + 1, -j);
    return g;
}

NearestPointResult np_glue(const CoxeterLattice& lattice, std::span<const double> y, AnDecoder an_decoder) {
    require_length(lattice, y);
    require_finite(y);
    const std::size_t dim = lattice.dim();
    const RealVector py = project(y);

    RealVector shifted(dim);
    PreImage best_u;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lattice.q(); ++i) {
        const std::size_t glue_index = i * lattice.m();
        const RealVector glue = glue_vector(lattice, glue_index).to_real();
        for (std::size_t c = 0; c < dim; ++c) {
            shifted[c] = y[c] - glue[c];
        }
        PreImage u = an_preimage(shifted, an_decoder);
        // [k] = Q(0,...,0,-1,...,-1) with k trailing -1 entries.
        for (std::size_t c = dim - glue_index; c < dim; ++c) {
            --u[c];
        }
        const RealVector x = project(std::span<const std::int64_t>(u));
        const double d2 = squared_distance(py, x);
        if (d2 < best) {
            best = d2;
            best_u = std::move(u);
        }
    }
    return finish(y, std::move(best_u));
}

NearestPointResult np_an_loglinear(std::span<const double> y) {
    return an_decode(y, AnDecoder::kLogLinear);
}

NearestPointResult np_an_linear(std::span<const double> y) {
    return an_decode(y, AnDecoder::kLinear);
}

NearestPointResult np_anstar_loglinear(std::span<const double> y) {
    return loglinear_scan<false>(lattice_for(y, 1), y, nullptr);
}

NearestPointResult np_anstar_linear(std::span<const double> y) {
    return linear_scan<true>(lattice_for(y, 1), y, nullptr);
}

NearestPointResult decode(const CoxeterLattice& lattice, Algorithm alg, std::span<const double> y) {
    switch (alg) {
    case Algorithm::kLogLinear: return np_loglinear(lattice, y);
    case Algorithm::kLinear: return np_linear(lattice, y);
    case Algorithm::kGlue: return np_glue(lattice, y);
    case Algorithm::kAnLogLinear:
    case Algorithm::kAnLinear:
        if (!lattice.is_an()) {
            throw std::invalid_argument("A_n decoder requires m = n+1");
        }
        require_length(lattice, y);
        return alg == Algorithm::kAnLinear ? np_an_linear(y) : np_an_loglinear(y);
    case Algorithm::kAnStarLogLinear:
    case Algorithm::kAnStarLinear:
        if (!lattice.is_anstar()) {
            throw std::invalid_argument("A_n* decoder requires m = 1");
        }
        require_length(lattice, y);
        return alg == Algorithm::kAnStarLinear ? np_anstar_linear(y) : np_anstar_loglinear(y);
    }
    throw std::invalid_argument("unknown algorithm");
}

namespace testing {

ScopedRoundingFault::ScopedRoundingFault() { g_rounding_fault.fetch_add(1); }
ScopedRoundingFault::~ScopedRoundingFault() { g_rounding_fault.fetch_sub(1); }

bool rounding_fault_active() noexcept { return g_rounding_fault.load(std::memory_order_relaxed) > 0; }

} // namespace testing

} // namespace coxeter
