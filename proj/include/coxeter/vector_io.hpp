// Text format for query vectors: one vector per line, decimals separated by
// commas and/or whitespace. Lines starting with '#' are comments.

#ifndef COXETER_VECTOR_IO_HPP
#define COXETER_VECTOR_IO_HPP

#include <string>
#include <string_view>

#include "coxeter/lattice.hpp"
#include "coxeter/nearest_point.hpp"

namespace coxeter {

struct VectorLine {
    enum class Kind { kSkip, kVector, kError };

    Kind kind = Kind::kSkip;
    RealVector values;
    std::string error;
};

/// Blank and comment lines give kSkip; malformed numbers or empty fields give
/// kError with a message.
VectorLine parse_vector_line(std::string_view line);

/// "u=[...] x=[...] d2=..." with 12 decimals for reals.
std::string format_result(const NearestPointResult& result);

} // namespace coxeter

#endif // COXETER_VECTOR_IO_HPP
