// Coxeter lattice family A_{n/m}: lattice descriptor, projection onto the
// zero-sum hyperplane, rounding primitives and membership checks.
//
// A_{n/m} is the set of projections Q u of integer vectors u in Z^{n+1}
// whose coordinate sum is divisible by m, with Q = I - 11'/(n+1).
// A_{n/1} is A_n*, A_{n/n+1} is A_n.

#ifndef COXETER_LATTICE_HPP
#define COXETER_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace coxeter {

using PreImage = std::vector<std::int64_t>;
using RealVector = std::vector<double>;

/// Tolerance per coordinate for zero-sum checks: |sum(x)| <= kProjectionEps * (n+1).
inline constexpr double kProjectionEps = 1e-9;

class CoxeterLattice {
public:
    /// Builds A_{n/m}. If m does not divide n+1 the lattice equals A_{n/1} and
    /// the descriptor is normalized to m = 1. Throws std::invalid_argument for
    /// n == 0, m == 0 or m > n+1.
    CoxeterLattice(std::size_t n, std::size_t m);

    static CoxeterLattice an(std::size_t n) { return {n, n + 1}; }
    static CoxeterLattice anstar(std::size_t n) { return {n, 1}; }

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }
    /// Number of A_n cosets glued together, (n+1)/m.
    std::size_t q() const noexcept { return q_; }
    /// Length of ambient vectors, n+1.
    std::size_t dim() const noexcept { return n_ + 1; }

    bool is_an() const noexcept { return m_ == n_ + 1; }
    bool is_anstar() const noexcept { return m_ == 1; }

    friend bool operator==(const CoxeterLattice&, const CoxeterLattice&) = default;

private:
    std::size_t n_;
    std::size_t m_;
    std::size_t q_;
};

inline CoxeterLattice make_lattice(std::size_t n, std::size_t m) { return {n, m}; }

/// Orthogonal component along the all-ones direction removed.
struct Decomposition {
    RealVector projected;
    double t = 0.0;
};

/// v - (sum(v)/(n+1)) 1, in O(n). Throws std::invalid_argument on non-finite input.
RealVector project(std::span<const double> v);
RealVector project(std::span<const std::int64_t> u);

/// Nearest integer, exact halves rounded toward +inf.
std::int64_t round_half_up(double y) noexcept;
PreImage round_half_up(std::span<const double> y);

/// y - round_half_up(y); every coordinate lies in [-0.5, 0.5).
double centered_frac(double y) noexcept;
RealVector centered_frac(std::span<const double> y);

Decomposition decompose(std::span<const double> y);

/// Mathematician's modulus, result in [0, m).
std::int64_t floor_mod(std::int64_t a, std::int64_t m) noexcept;

/// sum(u) == 0 (mod m). Throws std::invalid_argument on length mismatch.
bool is_member(const CoxeterLattice& lattice, std::span<const std::int64_t> u);

/// u and u + c(1,...,1) map to the same point. Shifts u in place so that
/// sum(u) lies in (-(n+1)/2, (n+1)/2].
void canonicalize_preimage(std::span<std::int64_t> u) noexcept;

/// Throws std::invalid_argument on length mismatch.
double squared_distance(std::span<const double> a, std::span<const double> b);

/// True when |sum(x)| <= kProjectionEps * len(x).
bool is_zero_sum(std::span<const double> x) noexcept;

/// Throws std::invalid_argument if any entry is NaN or infinite.
void require_finite(std::span<const double> v);

/// Divisors of n+1 in ascending order, i.e. every distinct m for A_{n/m}.
std::vector<std::size_t> lattice_orders(std::size_t n);

} // namespace coxeter

#endif // COXETER_LATTICE_HPP
