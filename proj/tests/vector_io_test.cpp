#include <string>

#include "coxeter/vector_io.hpp"
#include "gtest/gtest.h"

namespace coxeter {
namespace {

using Kind = VectorLine::Kind;

TEST(ParseVectorLineTest, Separators) {
    EXPECT_EQ(parse_vector_line("0 0 0").values, (RealVector{0, 0, 0}));
    EXPECT_EQ(parse_vector_line("0.6,0.1,-0.3").values, (RealVector{0.6, 0.1, -0.3}));
    EXPECT_EQ(parse_vector_line("  1.5 ,\t-2e-1 , +3 ").values, (RealVector{1.5, -0.2, 3}));
    EXPECT_EQ(parse_vector_line("1 2\r").values, (RealVector{1, 2}));
}

TEST(ParseVectorLineTest, SkipsBlankAndComments) {
    EXPECT_EQ(parse_vector_line("").kind, Kind::kSkip);
    EXPECT_EQ(parse_vector_line("   \t").kind, Kind::kSkip);
    EXPECT_EQ(parse_vector_line("# 1 2 3").kind, Kind::kSkip);
    EXPECT_EQ(parse_vector_line("  # indented").kind, Kind::kSkip);
}

TEST(ParseVectorLineTest, ReportsMalformedInput) {
    for (const std::string bad : {"1,,2", "1,2,", ",1", "1 abc 2", "1.2.3", "0x10", "1 2 nan", "inf"}) {
        const VectorLine line = parse_vector_line(bad);
        EXPECT_EQ(line.kind, Kind::kError) << bad;
        EXPECT_FALSE(line.error.empty()) << bad;
    }
}

TEST(FormatResultTest, Layout) {
    NearestPointResult r;
    r.u = {0, 0, 0};
    r.x = {0.0, -0.0, 0.0};
    r.d2 = 0.0;
    EXPECT_EQ(format_result(r), "u=[0,0,0] x=[0.000000000000,0.000000000000,0.000000000000] d2=0.000000000000");

    r.u = {1, -1, 0};
    r.x = {1.0, -1.0, 0.0};
    r.d2 = 61.0 / 150.0;
    EXPECT_EQ(format_result(r), "u=[1,-1,0] x=[1.000000000000,-1.000000000000,0.000000000000] d2=0.406666666667");
}

} // namespace
} // namespace coxeter
