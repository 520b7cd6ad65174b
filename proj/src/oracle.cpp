#include "coxeter/oracle.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxeter {

namespace {

void check_dimension(const CoxeterLattice& lattice) {
    if (lattice.n() > kOracleMaxDimension) {
        throw std::invalid_argument("oracle enumeration limited to n <= " + std::to_string(kOracleMaxDimension) +
                                    ", got n=" + std::to_string(lattice.n()));
    }
}

// Lexicographic enumeration of the box around round(y). The objective is
// |Q(y - w)|^2 = |y - w|^2 - (1'(y - w))^2 / (n+1), accumulated coordinate by
// coordinate.
class BoxSearch {
public:
    BoxSearch(std::span<const double> y, const PreImage& center, int radius, std::int64_t m)
        : y_(y), center_(center), radius_(radius), m_(m), count_(static_cast<double>(y.size())),
          w_(y.size()), best_w_(y.size()) {}

    // Enumerates every w whose leading coordinate equals `lead`.
    void run_with_lead(std::int64_t lead) {
        w_[0] = lead;
        const double diff = y_[0] - static_cast<double>(lead);
        recurse(1, diff * diff, diff, lead);
    }

    bool found() const noexcept { return found_; }
    double best() const noexcept { return best_; }
    const PreImage& best_w() const noexcept { return best_w_; }

private:
    void recurse(std::size_t pos, double sumsq, double sum, std::int64_t isum) {
        if (pos == w_.size()) {
            if (floor_mod(isum, m_) != 0) {
                return;
            }
            const double d = sumsq - sum * sum / count_;
            if (d < best_) {
                best_ = d;
                best_w_ = w_;
                found_ = true;
            }
            return;
        }
        for (std::int64_t v = center_[pos] - radius_; v <= center_[pos] + radius_; ++v) {
            w_[pos] = v;
            const double diff = y_[pos] - static_cast<double>(v);
            recurse(pos + 1, sumsq + diff * diff, sum + diff, isum + v);
        }
    }

    std::span<const double> y_;
    const PreImage& center_;
    std::int64_t radius_;
    std::int64_t m_;
    double count_;
    PreImage w_;
    PreImage best_w_;
    double best_ = std::numeric_limits<double>::infinity();
    bool found_ = false;
};

struct Prepared {
    PreImage center;
    std::int64_t width = 0;
};

Prepared prepare_bruteforce(const CoxeterLattice& lattice, std::span<const double> y, int radius) {
    check_dimension(lattice);
    if (radius < 2) {
        throw std::invalid_argument("oracle radius must be at least 2");
    }
    if (y.size() != lattice.dim()) {
        throw std::invalid_argument("query length does not match n+1");
    }
    return {round_half_up(y), 2 * static_cast<std::int64_t>(radius) + 1};
}

NearestPointResult bruteforce_result(std::span<const double> y, const PreImage& w) {
    NearestPointResult r;
    r.u = w;
    canonicalize_preimage(r.u);
    r.x = project(std::span<const std::int64_t>(w));
    r.d2 = squared_distance(project(y), r.x);
    return r;
}

struct ShellCounter {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::uint64_t count = 0;

    void offer(std::int64_t value) {
        if (value < best) {
            best = value;
            count = 1;
        } else if (value == best) {
            ++count;
        }
    }
    void merge(const ShellCounter& other) {
        if (other.count == 0) {
            return;
        }
        if (other.best < best) {
            *this = other;
        } else if (other.best == best) {
            count += other.count;
        }
    }
};

// Exact arithmetic: (n+1)|Qw|^2 = (n+1) w'w - (1'w)^2.
class ShellSearch {
public:
    ShellSearch(std::size_t dim, std::int64_t bound, std::int64_t m)
        : dim_(static_cast<std::int64_t>(dim)), positions_(dim), bound_(bound), m_(m) {}

    void run_with_lead(std::int64_t lead, ShellCounter& counter) const {
        recurse(1, lead * lead, lead, counter);
    }

private:
    void recurse(std::size_t pos, std::int64_t sumsq, std::int64_t sum, ShellCounter& counter) const {
        if (pos == positions_) {
            if (floor_mod(sum, m_) != 0) {
                return;
            }
            // Canonical member of {w + c1}: sum in (-(n+1)/2, (n+1)/2].
            if (2 * sum <= -dim_ || 2 * sum > dim_) {
                return;
            }
            const std::int64_t scaled = dim_ * sumsq - sum * sum;
            if (scaled != 0) {
                counter.offer(scaled);
            }
            return;
        }
        for (std::int64_t v = -bound_; v <= bound_; ++v) {
            recurse(pos + 1, sumsq + v * v, sum + v, counter);
        }
    }

    std::int64_t dim_;
    std::size_t positions_;
    std::int64_t bound_;
    std::int64_t m_;
};

ShellReport make_report(const CoxeterLattice& lattice, const ShellCounter& counter) {
    ShellReport r;
    r.scaled_min_norm2 = counter.best;
    r.count = counter.count;
    r.min_norm2 = static_cast<double>(counter.best) / static_cast<double>(lattice.dim());
    return r;
}

void check_shell_args(const CoxeterLattice& lattice, int coord_bound) {
    check_dimension(lattice);
    if (coord_bound < 2) {
        throw std::invalid_argument("shell coordinate bound must be at least 2");
    }
}

} // namespace

NearestPointResult np_bruteforce_serial(const CoxeterLattice& lattice, std::span<const double> y, int radius) {
    const Prepared prep = prepare_bruteforce(lattice, y, radius);
    BoxSearch search(y, prep.center, radius, static_cast<std::int64_t>(lattice.m()));
    for (std::int64_t off = 0; off < prep.width; ++off) {
        search.run_with_lead(prep.center[0] - radius + off);
    }
    return bruteforce_result(y, search.best_w());
}

NearestPointResult np_bruteforce(const CoxeterLattice& lattice, std::span<const double> y, int radius) {
    const Prepared prep = prepare_bruteforce(lattice, y, radius);
    const auto m = static_cast<std::int64_t>(lattice.m());

    // One slot per leading value; reducing in slot order with a strict "<"
    // reproduces the serial lexicographic choice.
    std::vector<double> slot_best(static_cast<std::size_t>(prep.width),
                                  std::numeric_limits<double>::infinity());
    std::vector<PreImage> slot_w(static_cast<std::size_t>(prep.width));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t off = 0; off < prep.width; ++off) {
        BoxSearch search(y, prep.center, radius, m);
        search.run_with_lead(prep.center[0] - radius + off);
        if (search.found()) {
            slot_best[static_cast<std::size_t>(off)] = search.best();
            slot_w[static_cast<std::size_t>(off)] = search.best_w();
        }
    }
    std::size_t winner = 0;
    for (std::size_t s = 1; s < slot_best.size(); ++s) {
        if (slot_best[s] < slot_best[winner]) {
            winner = s;
        }
    }
    return bruteforce_result(y, slot_w[winner]);
}

ShellReport enumerate_shell_serial(const CoxeterLattice& lattice, int coord_bound) {
    check_shell_args(lattice, coord_bound);
    const ShellSearch search(lattice.dim(), coord_bound, static_cast<std::int64_t>(lattice.m()));
    ShellCounter counter;
    for (std::int64_t lead = -coord_bound; lead <= coord_bound; ++lead) {
        search.run_with_lead(lead, counter);
    }
    return make_report(lattice, counter);
}

ShellReport enumerate_shell(const CoxeterLattice& lattice, int coord_bound) {
    check_shell_args(lattice, coord_bound);
    const ShellSearch search(lattice.dim(), coord_bound, static_cast<std::int64_t>(lattice.m()));
    const auto width = static_cast<std::size_t>(2 * coord_bound + 1);
    std::vector<ShellCounter> slots(width);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t s = 0; s < width; ++s) {
        search.run_with_lead(static_cast<std::int64_t>(s) - coord_bound, slots[s]);
    }
    ShellCounter total;
    for (const ShellCounter& c : slots) {
        total.merge(c);
    }
    return make_report(lattice, total);
}

} // namespace coxeter
