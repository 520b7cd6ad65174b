#include "coxeter/lattice.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace coxeter {

CoxeterLattice::CoxeterLattice(std::size_t n, std::size_t m) : n_(n), m_(m), q_(0) {
    if (n == 0) {
        throw std::invalid_argument("lattice dimension n must be positive");
    }
    if (m == 0) {
        throw std::invalid_argument("lattice order m must be positive");
    }
    if (m > n + 1) {
        throw std::invalid_argument("lattice order m=" + std::to_string(m) + " exceeds n+1=" +
                                    std::to_string(n + 1));
    }
    // A_{n/m} = A_{n/1} whenever m does not divide n+1.
    if ((n + 1) % m != 0) {
        m_ = 1;
    }
    q_ = (n_ + 1) / m_;
}

void require_finite(std::span<const double> v) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("vector has a non-finite entry");
        }
    }
}

RealVector project(std::span<const double> v) {
    require_finite(v);
    RealVector out(v.begin(), v.end());
    if (out.empty()) {
        return out;
    }
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    for (double& x : out) {
        x -= mean;
    }
    return out;
}

RealVector project(std::span<const std::int64_t> u) {
    RealVector out(u.size());
    if (u.empty()) {
        return out;
    }
    // Integer sum is exact; a single division keeps the projection as accurate
    // as the double format allows.
    const std::int64_t sum = std::accumulate(u.begin(), u.end(), std::int64_t{0});
    const double mean = static_cast<double>(sum) / static_cast<double>(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] = static_cast<double>(u[i]) - mean;
    }
    return out;
}

std::int64_t round_half_up(double y) noexcept {
    // floor(y + 0.5) misrounds 0.49999999999999994; y - floor(y) is exact.
    const double f = std::floor(y);
    return static_cast<std::int64_t>(f) + (y - f >= 0.5 ? 1 : 0);
}

PreImage round_half_up(std::span<const double> y) {
    require_finite(y);
    PreImage out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        out[i] = round_half_up(y[i]);
    }
    return out;
}

double centered_frac(double y) noexcept {
    // Subtracting the nearby integer from y is exact; (y - f) - 1 is not.
    const double f = std::floor(y);
    return y - (y - f >= 0.5 ? f + 1.0 : f);
}

RealVector centered_frac(std::span<const double> y) {
    require_finite(y);
    RealVector out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        out[i] = centered_frac(y[i]);
    }
    return out;
}

Decomposition decompose(std::span<const double> y) {
    require_finite(y);
    Decomposition d;
    d.projected.assign(y.begin(), y.end());
    if (y.empty()) {
        return d;
    }
    d.t = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
    for (double& x : d.projected) {
        x -= d.t;
    }
    return d;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) noexcept {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

bool is_member(const CoxeterLattice& lattice, std::span<const std::int64_t> u) {
    if (u.size() != lattice.dim()) {
        throw std::invalid_argument("pre-image length " + std::to_string(u.size()) +
                                    " does not match n+1=" + std::to_string(lattice.dim()));
    }
    const std::int64_t sum = std::accumulate(u.begin(), u.end(), std::int64_t{0});
    return floor_mod(sum, static_cast<std::int64_t>(lattice.m())) == 0;
}

void canonicalize_preimage(std::span<std::int64_t> u) noexcept {
    if (u.empty()) {
        return;
    }
    const auto dim = static_cast<std::int64_t>(u.size());
    const std::int64_t sum = std::accumulate(u.begin(), u.end(), std::int64_t{0});
    // c = ceil((2 sum - dim) / (2 dim))
    const std::int64_t num = 2 * sum + dim - 1;
    const std::int64_t den = 2 * dim;
    const std::int64_t c = num / den - (num % den < 0 ? 1 : 0);
    for (auto& x : u) {
        x -= c;
    }
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("squared_distance: length mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

bool is_zero_sum(std::span<const double> x) noexcept {
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    return std::abs(sum) <= kProjectionEps * static_cast<double>(x.size());
}

std::vector<std::size_t> lattice_orders(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t m = 1; m <= n + 1; ++m) {
        if ((n + 1) % m == 0) {
            out.push_back(m);
        }
    }
    return out;
}

} // namespace coxeter
