#include "coxeter/vector_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace coxeter {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::string fixed12(double v) {
    // Avoid printing "-0.000000000000".
    if (std::abs(v) < 5e-13) {
        v = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

} // namespace

VectorLine parse_vector_line(std::string_view line) {
    VectorLine out;
    std::size_t pos = 0;
    while (pos < line.size() && is_space(line[pos])) {
        ++pos;
    }
    if (pos == line.size() || line[pos] == '#') {
        return out;
    }

    out.kind = VectorLine::Kind::kVector;
    bool need_value = true;  // a comma was just consumed, or at the start
    while (pos < line.size()) {
        const char c = line[pos];
        if (is_space(c)) {
            ++pos;
            continue;
        }
        if (c == ',') {
            if (need_value) {
                out.kind = VectorLine::Kind::kError;
                out.error = "empty field at column " + std::to_string(pos + 1);
                return out;
            }
            need_value = true;
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < line.size() && !is_space(line[end]) && line[end] != ',') {
            ++end;
        }
        const std::string_view token = line.substr(pos, end - pos);
        // from_chars rejects a leading '+', which is still a valid decimal.
        std::string_view digits = token;
        if (!digits.empty() && digits.front() == '+') {
            digits.remove_prefix(1);
        }
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || !std::isfinite(value) ||
            digits.empty()) {
            out.kind = VectorLine::Kind::kError;
            out.error = "malformed number '" + std::string(token) + "'";
            return out;
        }
        out.values.push_back(value);
        need_value = false;
        pos = end;
    }
    if (need_value) {
        out.kind = VectorLine::Kind::kError;
        out.error = "trailing comma";
    }
    return out;
}

std::string format_result(const NearestPointResult& result) {
    std::string s = "u=[";
    for (std::size_t i = 0; i < result.u.size(); ++i) {
        if (i != 0) s += ',';
        s += std::to_string(result.u[i]);
    }
    s += "] x=[";
    for (std::size_t i = 0; i < result.x.size(); ++i) {
        if (i != 0) s += ',';
        s += fixed12(result.x[i]);
    }
    s += "] d2=";
    s += fixed12(result.d2);
    return s;
}

} // namespace coxeter
