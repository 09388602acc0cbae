// Digital nets over GF(2) and their exact t-value.
//
// A net spec is an ordered tuple of s generating matrices of size m. The
// l-th of the 2^m points uses the base-2 digits of l, least significant
// digit first, as the input column vector; each output coordinate is the
// dyadic fraction whose most significant bit is the first vector entry.
//
// Two independent t-value routes are provided: the row-rank criterion over
// all digit compositions, and the geometric definition by counting points
// in every elementary interval. They are tested against each other.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "t0net/bitmatrix.hpp"

namespace t0net {

struct NetSpec {
    int m = 0;
    std::vector<BitMatrix> mats;  // may be singular; duplicates points then occur

    int s() const { return int(mats.size()); }
};

inline void check_spec(const NetSpec& spec) {
    check_dim(spec.m);
    if (spec.mats.empty()) throw std::invalid_argument("net spec needs at least one matrix");
    for (const BitMatrix& c : spec.mats)
        if (c.m != spec.m) throw std::invalid_argument("net spec: matrix dimension mismatch");
}

// Multiset of 2^m points in [0,1)^s, coordinates stored as integers
// k = 2^m * value. Point l, coordinate j lives at coords[l*s + j].
struct PointSet {
    int m = 0;
    int s = 0;
    std::vector<uint64_t> coords;

    uint64_t size() const { return uint64_t(1) << m; }
    uint64_t coord(uint64_t l, int j) const { return coords[l * s + j]; }
};

// Exact t-value plus a minimality certificate: for t >= 1, `witness` is a
// composition of m-t+1 whose selected rows are dependent. Empty iff t = 0.
struct TValueResult {
    int m = 0;
    int s = 0;
    int t = 0;
    std::vector<int> witness;
};

// phi maps a digit vector to 2^m times the dyadic fraction it denotes:
// the first vector entry becomes the most significant output bit.
inline uint64_t phi(const BitVector& v) { return reverse_bits(v.bits, v.m); }

inline PointSet generate_points(const NetSpec& spec) {
    check_spec(spec);
    if (spec.m > 24) throw std::invalid_argument("generate_points: 2^m points exceed the supported budget (m <= 24)");
    const int m = spec.m;
    const int s = spec.s();
    const uint64_t n = uint64_t(1) << m;
    PointSet ps{m, s, std::vector<uint64_t>(n * s, 0)};
    for (int j = 0; j < s; ++j) {
        // phi is linear, so track phi(C * digits) directly: XOR one
        // bit-reversed column per Gray-code step.
        uint64_t revcol[kMaxDim];
        const BitMatrix ct = transpose(spec.mats[j]);
        for (int k = 0; k < m; ++k) revcol[k] = reverse_bits(ct.row[k], m);
        uint64_t y = 0;
        for (uint64_t i = 1; i < n; ++i) {
            y ^= revcol[std::countr_zero(i)];
            const uint64_t gray = i ^ (i >> 1);
            ps.coords[gray * s + j] = y;
        }
    }
    return ps;
}

// Visits every tuple of `parts` nonnegative integers summing to `total`,
// first part decreasing first: (total,0,..), .., (0,..,0,total).
template <class Fn>
void for_each_composition(int total, int parts, Fn&& fn) {
    if (total < 0 || parts < 1) throw std::invalid_argument("for_each_composition: bad arguments");
    std::vector<int> d(size_t(parts), 0);
    auto rec = [&](auto&& self, int part, int remaining) -> void {
        if (part == parts - 1) {
            d[part] = remaining;
            fn(const_cast<const std::vector<int>&>(d));
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            d[part] = v;
            self(self, part + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
}

inline std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    for_each_composition(total, parts, [&](const std::vector<int>& d) { out.push_back(d); });
    return out;
}

namespace detail {

// Scans the compositions of `total` into `parts`, in the enumeration order
// above, for the first one whose selected row system {first d_i rows of
// mats[i]} is linearly dependent. Shares the echelon basis across the
// common prefix of consecutive compositions; `basis` must arrive empty-at
// this recursion level and is restored on return. Fills out[0..parts) and
// returns true when a dependent composition exists.
inline bool find_dependent_composition(const BitMatrix* mats, int parts, int total,
                                       RowBasis& basis, int* out, int part = 0) {
    const uint64_t* rows = mats[part].row.data();
    if (part == parts - 1) {
        int undo[kMaxDim];
        int n_undo = 0;
        bool dep = false;
        for (int r = 0; r < total; ++r) {
            const int p = basis.insert(rows[r]);
            if (p < 0) {
                dep = true;
                break;
            }
            undo[n_undo++] = p;
        }
        while (n_undo > 0) basis.undo(undo[--n_undo]);
        if (dep) out[part] = total;
        return dep;
    }
    int undo[kMaxDim];
    int n_undo = 0;
    for (int r = 0; r < total; ++r) {
        const int p = basis.insert(rows[r]);
        if (p < 0) {
            // Rows 0..r of this part are dependent already, so the first
            // composition visited from this prefix, (.., total, 0, .., 0),
            // is dependent.
            while (n_undo > 0) basis.undo(undo[--n_undo]);
            out[part] = total;
            for (int q = part + 1; q < parts; ++q) out[q] = 0;
            return true;
        }
        undo[n_undo++] = p;
    }
    for (int d = total;; --d) {
        out[part] = d;
        if (find_dependent_composition(mats, parts, total - d, basis, out, part + 1)) {
            // rows 0..d-1 of this part are still admitted; restore the basis
            for (int k = d - 1; k >= 0; --k) basis.undo(undo[k]);
            return true;
        }
        if (d == 0) break;
        basis.undo(undo[d - 1]);
    }
    return false;
}

inline bool all_compositions_independent(const BitMatrix* mats, int parts, int total) {
    RowBasis basis;
    int out[kMaxDim];
    return !find_dependent_composition(mats, parts, total, basis, out);
}

}  // namespace detail

// Exact t-value by the rank criterion: the least t such that every
// composition (d_1,..,d_s) of m-t selects a linearly independent row
// system. Levels are probed from t = 0 upward cost-wise by scanning the
// row-sum downward, so the dependent witness for level m-t+1 is already in
// hand when the answer is found.
inline TValueResult t_value_rank(const NetSpec& spec) {
    check_spec(spec);
    const int m = spec.m;
    const int s = spec.s();
    RowBasis basis;
    std::vector<int> comp(size_t(s), 0);
    std::vector<int> witness;
    for (int n = m; n >= 1; --n) {
        if (!detail::find_dependent_composition(spec.mats.data(), s, n, basis, comp.data()))
            return {m, s, m - n, std::move(witness)};
        witness = comp;
    }
    return {m, s, m, std::move(witness)};
}

// Exact t-value from the definition: the least t such that every
// elementary interval of volume 2^(t-m) holds exactly 2^t points, counted
// with multiplicity. Work is bounded by `budget` point-to-cell
// assignments; past it the computation aborts rather than degrade.
inline int t_value_geometric(const PointSet& ps, uint64_t budget = 1'000'000'000ull) {
    if (ps.m < 1 || ps.m > 24) throw std::invalid_argument("t_value_geometric: m must be in [1, 24]");
    if (ps.s < 1 || ps.coords.size() != ps.size() * uint64_t(ps.s))
        throw std::invalid_argument("t_value_geometric: malformed point set");
    const int m = ps.m;
    const int s = ps.s;
    const uint64_t n_points = ps.size();
    std::vector<uint32_t> counts;
    uint64_t spent = 0;
    for (int t = 0; t <= m; ++t) {
        const int n = m - t;
        const uint64_t per_cell = uint64_t(1) << t;
        bool level_ok = true;
        for_each_composition(n, s, [&](const std::vector<int>& d) {
            if (!level_ok) return;
            spent += n_points * uint64_t(s);
            if (spent > budget) throw std::runtime_error("t_value_geometric: cell-assignment budget exceeded");
            counts.assign(size_t(1) << n, 0);
            for (uint64_t l = 0; l < n_points; ++l) {
                uint64_t key = 0;
                for (int j = 0; j < s; ++j) key = (key << d[j]) | (ps.coord(l, j) >> (m - d[j]));
                ++counts[key];
            }
            for (uint32_t c : counts) {
                if (c != per_cell) {
                    level_ok = false;
                    return;
                }
            }
        });
        if (level_ok) return t;
    }
    throw std::logic_error("t_value_geometric: no level passed");  // unreachable: t = m always does
}

inline int t_value_geometric(const NetSpec& spec, uint64_t budget = 1'000'000'000ull) {
    return t_value_geometric(generate_points(spec), budget);
}

// Property-test helper for left/right transformation invariance: compares
// the t-value of (C_1,..,C_s) with that of (L_1 C_1 G,..,L_s C_s G) for
// unit-diagonal lower L_i and invertible G. Always true by the theory.
inline bool t_invariance_check(const NetSpec& spec, const std::vector<BitMatrix>& lefts,
                               const BitMatrix& g) {
    check_spec(spec);
    if (int(lefts.size()) != spec.s()) throw std::invalid_argument("t_invariance_check: need one left factor per matrix");
    if (g.m != spec.m) throw std::invalid_argument("t_invariance_check: dimension mismatch");
    if (!is_invertible(g)) throw std::invalid_argument("t_invariance_check: g is singular");
    NetSpec transformed{spec.m, {}};
    transformed.mats.reserve(spec.mats.size());
    for (int i = 0; i < spec.s(); ++i) {
        if (lefts[i].m != spec.m) throw std::invalid_argument("t_invariance_check: dimension mismatch");
        if (!is_unit_lower(lefts[i])) throw std::invalid_argument("t_invariance_check: left factor not unit lower triangular");
        transformed.mats.push_back(multiply(multiply(lefts[i], spec.mats[i]), g));
    }
    return t_value_rank(spec).t == t_value_rank(transformed).t;
}

}  // namespace t0net
