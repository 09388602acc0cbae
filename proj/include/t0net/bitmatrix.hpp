// Bit-packed linear algebra over GF(2) for square matrices up to 64x64.
//
// One machine word per row: bit j of a row word holds column j (0-based),
// so adding one row to another is a single XOR. Everything here is a pure
// function over immutable values; singular inputs are reportable outcomes,
// not crashes.
#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace t0net {

inline constexpr int kMaxDim = 64;

inline void check_dim(int m) {
    if (m < 1 || m > kMaxDim)
        throw std::invalid_argument("dimension must be in [1, 64], got " + std::to_string(m));
}

// Reverses the low `m` bits of `v` (bit 0 <-> bit m-1); higher bits must be zero.
inline uint64_t reverse_bits(uint64_t v, int m) {
    v = ((v & 0x5555555555555555ull) << 1) | ((v >> 1) & 0x5555555555555555ull);
    v = ((v & 0x3333333333333333ull) << 2) | ((v >> 2) & 0x3333333333333333ull);
    v = ((v & 0x0f0f0f0f0f0f0f0full) << 4) | ((v >> 4) & 0x0f0f0f0f0f0f0f0full);
    v = ((v & 0x00ff00ff00ff00ffull) << 8) | ((v >> 8) & 0x00ff00ff00ff00ffull);
    v = ((v & 0x0000ffff0000ffffull) << 16) | ((v >> 16) & 0x0000ffff0000ffffull);
    v = (v << 32) | (v >> 32);
    return m == 64 ? v : v >> (64 - m);
}

// Column vector over GF(2); component i (0-based) lives in bit i.
struct BitVector {
    int m = 0;
    uint64_t bits = 0;

    bool get(int i) const { return (bits >> i) & 1; }
    friend bool operator==(const BitVector&, const BitVector&) = default;
};

// Square matrix over GF(2), one word per row. Rows at index >= m stay zero,
// as do bits at column >= m, so whole-value comparison is well defined.
struct BitMatrix {
    int m = 0;
    std::array<uint64_t, kMaxDim> row{};

    bool get(int i, int j) const { return (row[i] >> j) & 1; }
    void set(int i, int j, bool v) {
        row[i] = v ? (row[i] | (1ull << j)) : (row[i] & ~(1ull << j));
    }
    uint64_t row_mask() const { return m == 64 ? ~0ull : (1ull << m) - 1; }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

inline BitMatrix identity(int m) {
    check_dim(m);
    BitMatrix a{m};
    for (int i = 0; i < m; ++i) a.row[i] = 1ull << i;
    return a;
}

// All ones on the anti-diagonal: entry (i, j) = 1 iff i + j = m - 1.
inline BitMatrix antidiag(int m) {
    check_dim(m);
    BitMatrix a{m};
    for (int i = 0; i < m; ++i) a.row[i] = 1ull << (m - 1 - i);
    return a;
}

// Upper-triangular Pascal matrix mod 2: entry (i, j) = binom(j, i) mod 2,
// built by the Pascal recurrence (no big integers).
inline BitMatrix pascal(int m) {
    check_dim(m);
    BitMatrix a{m};
    a.row[0] = a.row_mask();  // binom(j, 0) = 1
    for (int i = 1; i < m; ++i) {
        // binom(j, i) = binom(j-1, i) + binom(j-1, i-1)
        uint64_t r = 0;
        for (int j = i; j < m; ++j) {
            const bool v = ((r >> (j - 1)) & 1) ^ a.get(i - 1, j - 1);
            r |= uint64_t(v) << j;
        }
        a.row[i] = r;
    }
    return a;
}

inline BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.m != b.m) throw std::invalid_argument("multiply: dimension mismatch");
    BitMatrix out{a.m};
    for (int i = 0; i < a.m; ++i) {
        uint64_t acc = 0;
        uint64_t bits = a.row[i];
        while (bits) {
            acc ^= b.row[std::countr_zero(bits)];
            bits &= bits - 1;
        }
        out.row[i] = acc;
    }
    return out;
}

inline BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) { return multiply(a, b); }

// Matrix times packed column vector.
inline uint64_t apply(const BitMatrix& a, uint64_t v) {
    uint64_t y = 0;
    for (int i = 0; i < a.m; ++i) y |= uint64_t(std::popcount(a.row[i] & v) & 1) << i;
    return y;
}

inline BitVector apply(const BitMatrix& a, const BitVector& v) {
    if (a.m != v.m) throw std::invalid_argument("apply: dimension mismatch");
    return BitVector{a.m, apply(a, v.bits)};
}

inline BitMatrix transpose(const BitMatrix& a) {
    BitMatrix out{a.m};
    for (int i = 0; i < a.m; ++i)
        for (int j = 0; j < a.m; ++j)
            if (a.get(i, j)) out.set(j, i, true);
    return out;
}

// Incremental row-echelon basis. insert() reduces the incoming vector only,
// so undo() restores the exact previous state as long as calls are strictly
// LIFO (undo the most recent surviving insert first).
class RowBasis {
public:
    // Returns the pivot slot taken by v, or -1 if v is dependent on the basis.
    int insert(uint64_t v) {
        while (v != 0) {
            const int p = std::bit_width(v) - 1;
            if (piv_[p] == 0) {
                piv_[p] = v;
                ++rank_;
                return p;
            }
            v ^= piv_[p];
        }
        return -1;
    }
    void undo(int pivot) {
        piv_[pivot] = 0;
        --rank_;
    }
    bool contains(uint64_t v) const {
        while (v != 0) {
            const int p = std::bit_width(v) - 1;
            if (piv_[p] == 0) return false;
            v ^= piv_[p];
        }
        return true;
    }
    int rank() const { return rank_; }

private:
    std::array<uint64_t, kMaxDim> piv_{};
    int rank_ = 0;
};

inline int rank_of(std::span<const uint64_t> rows) {
    RowBasis basis;
    for (uint64_t r : rows) basis.insert(r);
    return basis.rank();
}

inline int rank_of(const std::vector<BitVector>& vecs) {
    RowBasis basis;
    for (const BitVector& v : vecs) basis.insert(v.bits);
    return basis.rank();
}

inline int rank_of(const BitMatrix& a) {
    return rank_of(std::span<const uint64_t>(a.row.data(), size_t(a.m)));
}

// Zero-pattern predicates only; the diagonal is not constrained.
inline bool is_lower_triangular(const BitMatrix& a) {
    for (int i = 0; i < a.m; ++i) {
        const uint64_t above = a.row[i] >> (i + 1) << (i + 1);
        if ((above & a.row_mask()) != 0) return false;
    }
    return true;
}

inline bool is_upper_triangular(const BitMatrix& a) {
    for (int i = 0; i < a.m; ++i)
        if ((a.row[i] & ((1ull << i) - 1)) != 0) return false;
    return true;
}

inline bool is_unit_lower(const BitMatrix& a) {
    if (!is_lower_triangular(a)) return false;
    for (int i = 0; i < a.m; ++i)
        if (!a.get(i, i)) return false;
    return true;
}

inline bool is_unit_upper(const BitMatrix& a) {
    if (!is_upper_triangular(a)) return false;
    for (int i = 0; i < a.m; ++i)
        if (!a.get(i, i)) return false;
    return true;
}

namespace detail {

// Destructive elimination without pivoting over the first m words of w.
// Succeeds iff every leading principal minor is nonsingular.
inline bool leading_minors_ok(uint64_t* w, int m) {
    for (int k = 0; k < m; ++k) {
        if (!((w[k] >> k) & 1)) return false;
        for (int i = k + 1; i < m; ++i)
            if ((w[i] >> k) & 1) w[i] ^= w[k];
    }
    return true;
}

}  // namespace detail

inline bool leading_minors_nonsingular(const BitMatrix& a) {
    std::array<uint64_t, kMaxDim> w = a.row;
    return detail::leading_minors_ok(w.data(), a.m);
}

struct TriangularPair {
    BitMatrix l;  // lower triangular, unit diagonal
    BitMatrix u;  // upper triangular, unit diagonal
};

// Unit-diagonal LU factorization, a = l*u. Exists iff every leading
// principal minor of a is nonsingular, and is then unique (over GF(2) the
// diagonal factor is forced to I).
inline std::optional<TriangularPair> lu_unit_diagonal(const BitMatrix& a) {
    BitMatrix u = a;
    BitMatrix l = identity(a.m);
    for (int k = 0; k < a.m; ++k) {
        if (!u.get(k, k)) return std::nullopt;
        for (int i = k + 1; i < a.m; ++i) {
            if (u.get(i, k)) {
                u.row[i] ^= u.row[k];
                l.set(i, k, true);
            }
        }
    }
    return TriangularPair{l, u};
}

inline std::optional<BitMatrix> inverse(const BitMatrix& a) {
    BitMatrix w = a;
    BitMatrix inv = identity(a.m);
    for (int k = 0; k < a.m; ++k) {
        int p = -1;
        for (int i = k; i < a.m; ++i) {
            if (w.get(i, k)) {
                p = i;
                break;
            }
        }
        if (p < 0) return std::nullopt;
        std::swap(w.row[k], w.row[p]);
        std::swap(inv.row[k], inv.row[p]);
        for (int i = 0; i < a.m; ++i) {
            if (i != k && w.get(i, k)) {
                w.row[i] ^= w.row[k];
                inv.row[i] ^= inv.row[k];
            }
        }
    }
    return inv;
}

inline bool is_invertible(const BitMatrix& a) { return rank_of(a) == a.m; }

struct OrderResult {
    enum class Status { found, singular, cap_exceeded };
    Status status = Status::singular;
    uint64_t order = 0;  // valid when status == found
};

// Least n >= 1 with a^n = I, by repeated multiplication with early exit.
// Cost is O(order) matrix products; callers bound it via `cap`.
inline OrderResult multiplicative_order(const BitMatrix& a, uint64_t cap) {
    if (cap < 1) throw std::invalid_argument("multiplicative_order: cap must be >= 1");
    if (!is_invertible(a)) return {OrderResult::Status::singular, 0};
    const BitMatrix id = identity(a.m);
    BitMatrix x = a;
    for (uint64_t n = 1; n <= cap; ++n) {
        if (x == id) return {OrderResult::Status::found, n};
        if (n == cap) break;  // n+1 would pass cap
        x = multiply(x, a);
    }
    return {OrderResult::Status::cap_exceeded, 0};
}

// Maximal-period test: order exactly 2^m - 1. Order can exceed 2^m - 1 in
// GL(m, 2), so cap_exceeded also means non-primitive.
inline bool is_primitive(const BitMatrix& a) {
    const uint64_t target = (a.m == 64) ? ~0ull : (1ull << a.m) - 1;
    const OrderResult r = multiplicative_order(a, target);
    return r.status == OrderResult::Status::found && r.order == target;
}

// Visits every unit-diagonal lower-triangular m x m matrix exactly once.
// Order: the strictly-lower entries, scanned row-major ((1,0), (2,0), (2,1),
// (3,0), ...), are the bits of a counter, least significant first.
template <class Fn>
void for_each_unipotent_lower(int m, Fn&& fn) {
    check_dim(m);
    if (m > 8) throw std::invalid_argument("for_each_unipotent_lower: m > 8 not enumerable");
    const int free_bits = m * (m - 1) / 2;
    const uint64_t total = 1ull << free_bits;
    for (uint64_t c = 0; c < total; ++c) {
        BitMatrix l = identity(m);
        int b = 0;
        for (int i = 1; i < m; ++i)
            for (int j = 0; j < i; ++j, ++b)
                if ((c >> b) & 1) l.set(i, j, true);
        fn(l);
    }
}

inline std::vector<BitMatrix> enumerate_unipotent_lower(int m) {
    check_dim(m);
    if (m > 6) throw std::invalid_argument("enumerate_unipotent_lower: m > 6 too large to materialize");
    std::vector<BitMatrix> out;
    out.reserve(size_t(1) << (m * (m - 1) / 2));
    for_each_unipotent_lower(m, [&](const BitMatrix& l) { out.push_back(l); });
    return out;
}

// Canonical integer key: the row strings concatenated, row 0 most
// significant, leftmost column most significant within a row.
inline uint64_t canonical_key(const BitMatrix& a) {
    if (a.m > 8) throw std::invalid_argument("canonical_key: m > 8 does not fit in 64 bits");
    uint64_t key = 0;
    for (int i = 0; i < a.m; ++i) key = (key << a.m) | reverse_bits(a.row[i], a.m);
    return key;
}

}  // namespace t0net
