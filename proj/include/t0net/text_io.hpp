// Bit-exact text formats.
//
// Matrix: m lines of exactly m characters '0'/'1'; line i is row i, char j
// is column j. Compact one-line form: the rows joined by ','. Point sets:
// one point per line, coordinates as exact dyadic rationals "k/2^m"
// separated by tabs, or CSV with float rendering.
#pragma once

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "t0net/bitmatrix.hpp"
#include "t0net/digital_net.hpp"

namespace t0net {

// Parse failure with 1-based line/column of the offending character.
struct ParseError : std::runtime_error {
    int line = 0;
    int col = 0;
    ParseError(int line_, int col_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ": " + what),
          line(line_),
          col(col_) {}
};

namespace detail {

inline std::vector<std::string_view> split_rows(std::string_view text, char sep) {
    std::vector<std::string_view> rows;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(sep, start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view row = text.substr(start, end - start);
        if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
        rows.push_back(row);
        if (end == text.size()) break;
        start = end + 1;
    }
    // a trailing newline produces one empty final row; drop it
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return rows;
}

}  // namespace detail

// Accepts both the multi-line and the comma-joined one-line form. The
// dimension is taken from the content; pass expect_m >= 1 to enforce one.
inline BitMatrix parse_matrix(std::string_view text, int expect_m = 0) {
    const bool compact = text.find(',') != std::string_view::npos &&
                         text.find('\n') == std::string_view::npos;
    const std::vector<std::string_view> rows = detail::split_rows(text, compact ? ',' : '\n');
    if (rows.empty()) throw ParseError(1, 1, "empty matrix");
    const int m = int(rows[0].size());
    if (m < 1 || m > kMaxDim)
        throw ParseError(1, 1, "row length " + std::to_string(m) + " outside [1, 64]");
    if (expect_m > 0 && m != expect_m)
        throw ParseError(1, 1, "row length " + std::to_string(m) + " does not match m = " +
                                   std::to_string(expect_m));
    if (int(rows.size()) != m)
        throw ParseError(int(rows.size()), 1,
                         "expected " + std::to_string(m) + " rows, got " + std::to_string(rows.size()));
    BitMatrix a{m};
    for (int i = 0; i < m; ++i) {
        if (int(rows[i].size()) != m)
            throw ParseError(i + 1, int(rows[i].size()) + 1, "row has wrong length");
        for (int j = 0; j < m; ++j) {
            const char ch = rows[size_t(i)][size_t(j)];
            if (ch != '0' && ch != '1')
                throw ParseError(i + 1, j + 1, std::string("invalid character '") + ch + "'");
            if (ch == '1') a.set(i, j, true);
        }
    }
    return a;
}

inline BitVector parse_bitvector(std::string_view text, int expect_m = 0) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    const int m = int(text.size());
    if (m < 1 || m > kMaxDim) throw ParseError(1, 1, "vector length outside [1, 64]");
    if (expect_m > 0 && m != expect_m)
        throw ParseError(1, 1, "vector length does not match m = " + std::to_string(expect_m));
    BitVector v{m, 0};
    for (int i = 0; i < m; ++i) {
        const char ch = text[size_t(i)];
        if (ch != '0' && ch != '1')
            throw ParseError(1, i + 1, std::string("invalid character '") + ch + "'");
        if (ch == '1') v.bits |= 1ull << i;
    }
    return v;
}

inline std::string format_row(const BitMatrix& a, int i) {
    std::string s(size_t(a.m), '0');
    for (int j = 0; j < a.m; ++j)
        if (a.get(i, j)) s[size_t(j)] = '1';
    return s;
}

inline std::string format_matrix(const BitMatrix& a) {
    std::string out;
    for (int i = 0; i < a.m; ++i) {
        out += format_row(a, i);
        out += '\n';
    }
    return out;
}

inline std::string format_matrix_compact(const BitMatrix& a) {
    std::string out;
    for (int i = 0; i < a.m; ++i) {
        if (i) out += ',';
        out += format_row(a, i);
    }
    return out;
}

inline std::string format_bitvector(const BitVector& v) {
    std::string s(size_t(v.m), '0');
    for (int i = 0; i < v.m; ++i)
        if (v.get(i)) s[size_t(i)] = '1';
    return s;
}

namespace detail {

inline std::string format_points_text(int m, int s, std::span<const uint64_t> coords) {
    const uint64_t denom = uint64_t(1) << m;
    std::string out;
    char buf[64];
    const uint64_t n = coords.size() / uint64_t(s);
    for (uint64_t l = 0; l < n; ++l) {
        for (int j = 0; j < s; ++j) {
            std::snprintf(buf, sizeof buf, "%" PRIu64 "/%" PRIu64, coords[l * uint64_t(s) + j], denom);
            if (j) out += '\t';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

inline std::string format_points_csv(int m, int s, std::span<const uint64_t> coords) {
    const double denom = double(uint64_t(1) << m);
    std::string out;
    char buf[64];
    const uint64_t n = coords.size() / uint64_t(s);
    for (uint64_t l = 0; l < n; ++l) {
        for (int j = 0; j < s; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", double(coords[l * uint64_t(s) + j]) / denom);
            if (j) out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace detail

inline std::string format_point_set(const PointSet& ps) {
    return detail::format_points_text(ps.m, ps.s, ps.coords);
}

inline std::string format_point_set_csv(const PointSet& ps) {
    return detail::format_points_csv(ps.m, ps.s, ps.coords);
}

}  // namespace t0net
