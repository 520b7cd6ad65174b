#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxeter/bench.hpp"
#include "gtest/gtest.h"

namespace coxeter {
namespace {

// CSV with the two timing columns removed.
std::string strip_timing(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::string out;
    while (std::getline(in, line)) {
        std::size_t cut = line.size();
        int commas = 0;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == ',' && ++commas == 4) {
                cut = i;
                break;
            }
        }
        out += line.substr(0, cut) + "\n";
    }
    return out;
}

TEST(OrderRuleTest, Parse) {
    const OrderRule fixed = OrderRule::parse("fixed:4");
    EXPECT_EQ(fixed.kind, OrderRule::Kind::kFixed);
    EXPECT_EQ(fixed.k, 4u);
    EXPECT_EQ(fixed.to_string(), "fixed:4");
    const OrderRule prop = OrderRule::parse("proportional:4");
    EXPECT_EQ(prop.kind, OrderRule::Kind::kProportional);
    EXPECT_EQ(prop.to_string(), "proportional:4");
    for (const char* bad : {"", "fixed", "fixed:", "fixed:0", "fixed:x", "linear:4", "fixed:4x", "proportional:-1"}) {
        EXPECT_THROW(OrderRule::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(OrderRuleTest, OrderFor) {
    const OrderRule fixed = OrderRule::parse("fixed:4");
    EXPECT_EQ(fixed.order_for(1023), 4u);
    EXPECT_EQ(fixed.order_for(3), 4u);
    EXPECT_FALSE(fixed.order_for(1000).has_value());
    const OrderRule prop = OrderRule::parse("proportional:4");
    EXPECT_EQ(prop.order_for(1023), 256u);
    EXPECT_EQ(prop.order_for(3), 1u);
    EXPECT_FALSE(prop.order_for(24).has_value());
}

TEST(RunBenchTest, ZeroTrialsGivesHeaderOnly) {
    BenchConfig config;
    config.dims = {7, 15};
    config.trials = 0;
    std::ostringstream csv;
    EXPECT_TRUE(run_bench(config, &csv).empty());
    EXPECT_EQ(csv.str(), std::string(kBenchCsvHeader) + "\n");
}

TEST(RunBenchTest, SkipsAndReportsUnusableDimensions) {
    BenchConfig config;
    config.dims = {24, 7};
    config.trials = 10;
    config.algorithms = {Algorithm::kLinear, Algorithm::kAnLinear};
    std::ostringstream csv;
    std::ostringstream log;
    const std::vector<BenchRow> rows = run_bench(config, &csv, &log);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].n, 7u);
    EXPECT_EQ(rows[0].m, 4u);
    EXPECT_EQ(rows[0].algorithm, "linear");
    EXPECT_NE(log.str().find("n=24"), std::string::npos);
    EXPECT_NE(log.str().find("an"), std::string::npos);
}

TEST(RunBenchTest, RowsAreConsistent) {
    BenchConfig config;
    config.dims = {7, 63};
    config.trials = 200;
    const std::vector<BenchRow> rows = run_bench(config);
    ASSERT_EQ(rows.size(), 6u);
    for (const BenchRow& row : rows) {
        EXPECT_EQ(row.trials, 200u);
        EXPECT_GE(row.total_seconds, 0.0);
        EXPECT_NEAR(row.mean_ns, row.total_seconds * 1e9 / 200.0, 1e-6 * std::max(1.0, row.mean_ns));
    }
}

TEST(RunBenchTest, NonTimingOutputIsDeterministic) {
    BenchConfig config;
    config.dims = {3, 7, 11};
    config.order_rule = OrderRule::parse("proportional:2");
    config.algorithms = {Algorithm::kLinear, Algorithm::kGlue, Algorithm::kLogLinear};
    config.trials = 50;
    config.seed = 12345;
    std::ostringstream a;
    std::ostringstream b;
    run_bench(config, &a);
    run_bench(config, &b);
    EXPECT_EQ(strip_timing(a.str()), strip_timing(b.str()));
    EXPECT_EQ(strip_timing(a.str()).substr(0, 19), "n,m,algorithm,trial");
}

TEST(CsvTest, RowFormat) {
    std::ostringstream os;
    write_csv_header(os);
    write_csv_row(os, BenchRow{1023, 4, "linear", 10, 0.5, 50000000.0});
    EXPECT_EQ(os.str(), "n,m,algorithm,trials,total_seconds,mean_ns\n1023,4,linear,10,0.500000,50000000.0\n");
}

} // namespace
} // namespace coxeter
