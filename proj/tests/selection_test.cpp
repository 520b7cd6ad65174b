#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "coxeter/random.hpp"
#include "coxeter/selection.hpp"
#include "gtest/gtest.h"

namespace coxeter {
namespace {

IndexVector iota(std::size_t n) {
    IndexVector v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

// Direct scan of the partition contract around position c-1.
bool partitioned_at(const std::vector<double>& z, const IndexVector& b, std::size_t c) {
    const double pivot = z[b[c - 1]];
    for (std::size_t i = 0; i + 1 < c; ++i) {
        if (z[b[i]] < pivot) return false;
    }
    for (std::size_t t = c; t < b.size(); ++t) {
        if (z[b[t]] > pivot) return false;
    }
    return true;
}

bool same_set(IndexVector a, IndexVector b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Half the trials draw from a small value set to force many ties.
std::vector<double> random_values(QueryStream& stream, std::size_t n, bool ties) {
    std::vector<double> z(n);
    for (double& v : z) {
        v = ties ? static_cast<double>(stream.next_int(-3, 3)) / 8.0 : stream.next();
    }
    return z;
}

TEST(SortIndicesTest, Examples) {
    EXPECT_EQ(sort_indices(std::vector<double>{0.3, -0.1, 0.4}), (IndexVector{2, 0, 1}));
    EXPECT_EQ(sort_indices(std::vector<double>{0.2, 0.2}), (IndexVector{0, 1}));
    EXPECT_EQ(sort_indices(std::vector<double>{-0.5}), (IndexVector{0}));
    EXPECT_TRUE(sort_indices(std::vector<double>{}).empty());
}

TEST(SortIndicesTest, StableOnTies) {
    EXPECT_EQ(sort_indices(std::vector<double>{0.1, 0.3, 0.1, 0.3}), (IndexVector{1, 3, 0, 2}));
}

TEST(SelectKthTest, Examples) {
    const std::vector<double> z{0.3, -0.1, 0.4};
    const IndexVector all = iota(3);
    EXPECT_EQ(select_kth_descending(z, all, 1), 2u);
    EXPECT_EQ(select_kth_descending(z, all, 3), 1u);
    const std::vector<double> same{5, 5, 5};
    EXPECT_EQ(same[select_kth_descending(same, all, 2)], 5.0);
}

TEST(SelectKthTest, RejectsRankOutOfRange) {
    const std::vector<double> z{0.3, -0.1, 0.4};
    EXPECT_THROW(select_kth_descending(z, iota(3), 0), std::out_of_range);
    EXPECT_THROW(select_kth_descending(z, iota(3), 4), std::out_of_range);
}

TEST(SelectKthTest, AgreesWithSortInValue) {
    QueryStream stream(21, 1.0);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(stream.next_int(0, 120));
        const std::vector<double> z = random_values(stream, n, trial % 2 == 0);
        const IndexVector sorted = sort_indices(z);
        for (std::size_t k = 1; k <= n; ++k) {
            ASSERT_EQ(z[select_kth_descending(z, iota(n), k)], z[sorted[k - 1]]) << "n=" << n << " k=" << k;
        }
    }
}

TEST(QuickPartitionTest, Examples) {
    const std::vector<double> z{0.3, -0.1, 0.4, 0.0};
    const IndexVector b = quickpartition(z, iota(4), 2);
    EXPECT_EQ(b[0], 2u);
    EXPECT_EQ(b[1], 0u);
    EXPECT_TRUE(same_set({b[2], b[3]}, {1, 3}));

    EXPECT_EQ(quickpartition(z, iota(4), 1)[0], 2u);
    EXPECT_EQ(quickpartition(z, iota(4), 4)[3], 1u);
}

TEST(QuickPartitionTest, RejectsRankOutOfRange) {
    const std::vector<double> z{0.3, -0.1};
    EXPECT_THROW(quickpartition(z, iota(2), 0), std::out_of_range);
    EXPECT_THROW(quickpartition(z, iota(2), 3), std::out_of_range);
    EXPECT_THROW(quickpartition(z, IndexVector{}, 1), std::out_of_range);
}

TEST(QuickPartitionTest, WorksOnIndexSubsets) {
    const std::vector<double> z{9.0, 0.3, 7.0, -0.1, 0.4, 8.0};
    const IndexVector subset{1, 3, 4};
    const IndexVector b = quickpartition(z, subset, 1);
    EXPECT_EQ(b[0], 4u);
    EXPECT_TRUE(same_set(b, subset));
}

TEST(QuickPartitionTest, ContractHoldsOnRandomInputs) {
    QueryStream stream(42, 1.0);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t universe = 1 + static_cast<std::size_t>(stream.next_int(0, 600));
        const std::vector<double> z = random_values(stream, universe, trial % 2 == 1);
        // Random subset B of the coordinates, at most 512 long.
        IndexVector B;
        for (std::size_t i = 0; i < universe && B.size() < 512; ++i) {
            if (stream.next_int(0, 3) != 0) B.push_back(i);
        }
        if (B.empty()) B.push_back(0);
        const auto c = static_cast<std::size_t>(stream.next_int(1, static_cast<std::int64_t>(B.size())));
        const IndexVector b = quickpartition(z, B, c);
        ASSERT_TRUE(same_set(b, B));
        ASSERT_TRUE(partitioned_at(z, b, c)) << "trial " << trial << " |B|=" << B.size() << " c=" << c;
    }
}

TEST(QuickPartitionTest, ContractHoldsForEveryRank) {
    QueryStream stream(43, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(stream.next_int(0, 300));
        const std::vector<double> z = random_values(stream, n, trial % 3 == 0);
        for (std::size_t c = 1; c <= n; ++c) {
            ASSERT_TRUE(partitioned_at(z, quickpartition(z, iota(n), c), c)) << "n=" << n << " c=" << c;
        }
    }
}

TEST(QuickPartitionTwoTest, Examples) {
    const std::vector<double> z{4, 3, 2, 1};
    EXPECT_EQ(quickpartition_two(z, iota(4), 2, 3), (IndexVector{0, 1, 2, 3}));

    const std::vector<double> w{0.3, -0.1, 0.4, 0.0};
    const IndexVector b = quickpartition_two(w, iota(4), 2, 2);
    EXPECT_EQ(b[1], 0u);
    EXPECT_TRUE(partitioned_at(w, b, 2));

    const std::vector<double> flat(7, 1.5);
    const IndexVector f = quickpartition_two(flat, iota(7), 3, 5);
    EXPECT_TRUE(same_set(f, iota(7)));
}

TEST(QuickPartitionTwoTest, RejectsBadRanks) {
    const std::vector<double> z{4, 3, 2, 1};
    EXPECT_THROW(quickpartition_two(z, iota(4), 0, 2), std::out_of_range);
    EXPECT_THROW(quickpartition_two(z, iota(4), 3, 2), std::out_of_range);
    EXPECT_THROW(quickpartition_two(z, iota(4), 2, 5), std::out_of_range);
}

TEST(QuickPartitionTwoTest, ContractHoldsOnRandomInputs) {
    QueryStream stream(44, 1.0);
    for (int trial = 0; trial < 5000; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(stream.next_int(0, 512));
        const std::vector<double> z = random_values(stream, n, trial % 2 == 0);
        const auto p = static_cast<std::size_t>(stream.next_int(1, static_cast<std::int64_t>(n)));
        const auto g = static_cast<std::size_t>(stream.next_int(1, static_cast<std::int64_t>(p)));
        const IndexVector b = quickpartition_two(z, iota(n), g, p);
        ASSERT_TRUE(same_set(b, iota(n)));
        // z[b_i] >= z[b_g] >= z[b_t] >= z[b_p] >= z[b_c] for i < g < t < p < c.
        const double zg = z[b[g - 1]];
        const double zp = z[b[p - 1]];
        for (std::size_t i = 0; i < n; ++i) {
            const double v = z[b[i]];
            if (i + 1 < g) ASSERT_GE(v, zg);
            if (i + 1 > g && i + 1 < p) {
                ASSERT_LE(v, zg);
                ASSERT_GE(v, zp);
            }
            if (i + 1 > p) ASSERT_LE(v, zp);
        }
        ASSERT_GE(zg, zp);
    }
}

std::vector<double> pattern(const std::string& name, std::size_t n) {
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = static_cast<double>(i);
        if (name == "ascending") z[i] = d;
        else if (name == "descending") z[i] = -d;
        else if (name == "equal") z[i] = 0.25;
        else z[i] = static_cast<double>(std::min(i, n - 1 - i));  // organ pipe
    }
    return z;
}

TEST(SelectionCostTest, LinearComparisonBoundOnAdversarialInputs) {
    for (const std::string name : {"ascending", "descending", "equal", "organ"}) {
        for (std::size_t n : {1u, 2u, 5u, 7u, 31u, 100u, 1000u, 4097u, 100000u}) {
            const std::vector<double> z = pattern(name, n);
            for (std::size_t k : {std::size_t{1}, (n + 1) / 2, n, std::max<std::size_t>(1, n / 3)}) {
                ComparisonCounter counter;
                select_kth_descending(z, iota(n), k, &counter);
                EXPECT_LE(counter.comparisons, 30u * n) << name << " n=" << n << " k=" << k;
            }
        }
    }
}

} // namespace
} // namespace coxeter
