// Structure of matrices B whose triple (I, B, B^2) generates a digital net
// with t-value zero: constructive 2d factorization B = L1*J*L2, lower-
// triangular transport between third matrices, the conjugation witness
// B = L*P*J*L^-1, orbit enumeration, and the exhaustive search that checks
// the found set against the orbit. Also the row-subspace probes that
// justify the transport step.
#pragma once

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "t0net/bitmatrix.hpp"
#include "t0net/digital_net.hpp"

namespace t0net {

namespace detail {
inline std::string rows_to_string(const BitMatrix& a) {
    std::string s;
    for (int i = 0; i < a.m; ++i) {
        if (i) s += ',';
        for (int j = 0; j < a.m; ++j) s += a.get(i, j) ? '1' : '0';
    }
    return s;
}
}  // namespace detail

// A t=0 input produced an algebraically impossible intermediate. This can
// only mean a bug (the structure theorem rules it out), so it is never a
// reportable outcome: it aborts the computation with the offending input.
struct TheoremViolation : std::logic_error {
    BitMatrix input;
    TheoremViolation(const BitMatrix& b, const std::string& what)
        : std::logic_error("theorem violation on input [" + detail::rows_to_string(b) + "]: " + what),
          input(b) {}
};

// A probe was called on inputs that fail its t-value hypothesis.
struct HypothesisError : std::invalid_argument {
    TValueResult witness;
    explicit HypothesisError(TValueResult w)
        : std::invalid_argument("hypothesis t = 0 fails: t = " + std::to_string(w.t)),
          witness(std::move(w)) {}
};

struct Characterization2D {
    BitMatrix l1;  // unit-diagonal lower
    BitMatrix l2;  // unit-diagonal lower; l1 * J * l2 = B
};

struct Char2DResult {
    std::optional<Characterization2D> factors;     // engaged iff t(I,B) = 0
    std::optional<TValueResult> obstruction;       // witness from t(I,B) otherwise
    bool ok() const { return factors.has_value(); }
};

// t(I,B) = 0 iff B = L1*J*L2 with unit-diagonal lower factors. The factors
// come from the unit-diagonal LU of B*J: B*J = l*u gives B = l*J*(J*u*J),
// and conjugating an upper factor by J flips it to lower.
inline Char2DResult characterize_2d(const BitMatrix& b) {
    check_dim(b.m);
    const BitMatrix j = antidiag(b.m);
    if (auto lu = lu_unit_diagonal(multiply(b, j))) {
        Characterization2D out{lu->l, multiply(multiply(j, lu->u), j)};
        if (multiply(multiply(out.l1, j), out.l2) != b)
            throw TheoremViolation(b, "L1*J*L2 recomposition mismatch");
        return {std::move(out), std::nullopt};
    }
    return {std::nullopt, t_value_rank(NetSpec{b.m, {identity(b.m), b}})};
}

// Finds a unit-diagonal lower-triangular L with L*c = c'. Row i of c' must
// equal row i of c plus a combination of earlier rows of c; free
// coefficients are set to zero, so the result is one valid transporter,
// deterministically chosen, not the only one.
inline std::optional<BitMatrix> lower_transform(const BitMatrix& c, const BitMatrix& cp) {
    if (c.m != cp.m) throw std::invalid_argument("lower_transform: dimension mismatch");
    const int m = c.m;
    BitMatrix l = identity(m);
    std::array<uint64_t, kMaxDim> piv_vec{};
    std::array<uint64_t, kMaxDim> piv_combo{};
    for (int i = 0; i < m; ++i) {
        uint64_t v = c.row[i] ^ cp.row[i];
        uint64_t combo = 0;
        while (v != 0) {
            const int p = std::bit_width(v) - 1;
            if (piv_vec[p] == 0) return std::nullopt;  // row i of c' unreachable
            v ^= piv_vec[p];
            combo ^= piv_combo[p];
        }
        l.row[i] |= combo;
        // admit row i of c for later rows
        uint64_t w = c.row[i];
        uint64_t wc = 1ull << i;
        while (w != 0) {
            const int p = std::bit_width(w) - 1;
            if (piv_vec[p] == 0) {
                piv_vec[p] = w;
                piv_combo[p] = wc;
                break;
            }
            w ^= piv_vec[p];
            wc ^= piv_combo[p];
        }
    }
    return l;
}

struct DecomposeResult {
    std::optional<BitMatrix> conjugator;      // L with B = L*P*J*L^-1
    std::optional<TValueResult> obstruction;  // witness from t(I,B,B^2) otherwise
    bool ok() const { return conjugator.has_value(); }
};

// Constructive direction of the structure theorem: if t(I,B,B^2) = 0 then
// B = L*P*J*L^-1 for L = L1 of the 2d factorization, because J*L2*L1*J is
// forced to equal P. Both facts are re-checked on the spot; a mismatch is
// a TheoremViolation, never a silent wrong answer.
inline DecomposeResult decompose_t0_triple(const BitMatrix& b) {
    check_dim(b.m);
    const int m = b.m;
    const BitMatrix b2 = multiply(b, b);
    const NetSpec triple{m, {identity(m), b, b2}};
    if (!detail::all_compositions_independent(triple.mats.data(), 3, m))
        return {std::nullopt, t_value_rank(triple)};
    Char2DResult c2 = characterize_2d(b);
    if (!c2.ok()) throw TheoremViolation(b, "t(I,B,B^2) = 0 but t(I,B) > 0");
    const BitMatrix j = antidiag(m);
    const BitMatrix p = pascal(m);
    if (multiply(multiply(multiply(j, c2.factors->l2), c2.factors->l1), j) != p)
        throw TheoremViolation(b, "J*L2*L1*J != P for a t = 0 triple");
    const BitMatrix l = c2.factors->l1;
    const BitMatrix linv = *inverse(l);  // unit lower triangular, always invertible
    if (multiply(multiply(multiply(l, p), j), linv) != b)
        throw TheoremViolation(b, "L*P*J*L^-1 recomposition mismatch");
    return {l, std::nullopt};
}

// All conjugates L*(P*J)*L^-1 over unit-diagonal lower L, deduplicated and
// sorted by canonical key.
inline std::vector<BitMatrix> conjugacy_orbit(int m) {
    check_dim(m);
    if (m > 8) throw std::invalid_argument("conjugacy_orbit: m > 8 not enumerable");
    const BitMatrix pj = multiply(pascal(m), antidiag(m));
    std::vector<std::pair<uint64_t, BitMatrix>> seen;
    for_each_unipotent_lower(m, [&](const BitMatrix& l) {
        const BitMatrix x = multiply(multiply(l, pj), *inverse(l));
        seen.emplace_back(canonical_key(x), x);
    });
    std::sort(seen.begin(), seen.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<BitMatrix> out;
    for (size_t i = 0; i < seen.size(); ++i)
        if (i == 0 || seen[i].first != seen[i - 1].first) out.push_back(seen[i].second);
    return out;
}

// P^2 = J^2 = (PJ)^3 = I, evaluated by multiplication.
inline bool pj_identities_check(int m) {
    check_dim(m);
    const BitMatrix p = pascal(m);
    const BitMatrix j = antidiag(m);
    const BitMatrix id = identity(m);
    const BitMatrix pj = multiply(p, j);
    return multiply(p, p) == id && multiply(j, j) == id &&
           multiply(multiply(pj, pj), pj) == id;
}

struct SearchReport {
    int m = 0;
    std::vector<BitMatrix> found;   // every B with t(I,B,B^2) = 0, canonical order
    std::vector<BitMatrix> orbit;   // {L*P*J*L^-1}, canonical order
    bool equal_sets = false;
    bool all_cubes_identity = false;
    std::vector<BitMatrix> primitive_members;
    uint64_t candidates_scanned = 0;
    uint64_t filter_pass = 0;
    int64_t elapsed_ms = 0;
};

namespace detail {

// One worker's scan over candidate codes [lo, hi). Row i of the candidate
// is bits [i*m, (i+1)*m) of the code. The cheap necessary filter is
// t(I,B) = 0, tested as "all leading principal minors of B*J nonsingular";
// only survivors pay for B^2 and the full triple test.
inline void scan_t0_range(int m, uint64_t lo, uint64_t hi,
                          std::vector<uint64_t>& found_codes, uint64_t& filter_pass) {
    const uint64_t rowmask = (1ull << m) - 1;
    uint64_t rev[32];  // column reversal table: row of B -> row of B*J
    for (uint64_t v = 0; v <= rowmask; ++v) rev[v] = reverse_bits(v, m);
    const BitMatrix ident = identity(m);
    for (uint64_t code = lo; code < hi; ++code) {
        uint64_t w[8];
        for (int i = 0; i < m; ++i) w[i] = rev[(code >> (i * m)) & rowmask];
        const bool pass = leading_minors_ok(w, m);
#ifndef NDEBUG
        {
            BitMatrix b{m};
            for (int i = 0; i < m; ++i) b.row[i] = (code >> (i * m)) & rowmask;
            const BitMatrix pair[2] = {ident, b};
            assert(pass == all_compositions_independent(pair, 2, m));
        }
#endif
        if (!pass) continue;
        ++filter_pass;
        BitMatrix b{m};
        for (int i = 0; i < m; ++i) b.row[i] = (code >> (i * m)) & rowmask;
        const BitMatrix mats[3] = {ident, b, multiply(b, b)};
        if (all_compositions_independent(mats, 3, m)) found_codes.push_back(code);
    }
}

}  // namespace detail

// Scans all 2^(m*m) matrices B for t(I,B,B^2) = 0 and cross-checks the
// found set against the conjugation orbit. Candidate ranges are scanned by
// `workers` independent threads; the merged report does not depend on the
// partitioning.
inline SearchReport exhaustive_search_t0(int m, int workers = 1) {
    check_dim(m);
    if (m > 5) throw std::invalid_argument("exhaustive_search_t0: m > 5 (search space past 2^25)");
    if (workers < 1) throw std::invalid_argument("exhaustive_search_t0: workers must be >= 1");
    const auto t_start = std::chrono::steady_clock::now();
    const uint64_t space = uint64_t(1) << (m * m);
    workers = int(std::min<uint64_t>(uint64_t(workers), space));

    std::vector<std::vector<uint64_t>> found_parts(static_cast<size_t>(workers));
    std::vector<uint64_t> filter_parts(static_cast<size_t>(workers), 0);
    if (workers == 1) {
        detail::scan_t0_range(m, 0, space, found_parts[0], filter_parts[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(size_t(workers));
        for (int w = 0; w < workers; ++w) {
            const uint64_t lo = space * uint64_t(w) / uint64_t(workers);
            const uint64_t hi = space * uint64_t(w + 1) / uint64_t(workers);
            pool.emplace_back([=, &found_parts, &filter_parts] {
                detail::scan_t0_range(m, lo, hi, found_parts[size_t(w)], filter_parts[size_t(w)]);
            });
        }
        for (std::thread& th : pool) th.join();
    }

    SearchReport rep;
    rep.m = m;
    rep.candidates_scanned = space;
    const uint64_t rowmask = (uint64_t(1) << m) - 1;
    std::vector<std::pair<uint64_t, BitMatrix>> keyed;
    for (size_t w = 0; w < found_parts.size(); ++w) {
        rep.filter_pass += filter_parts[w];
        for (uint64_t code : found_parts[w]) {
            BitMatrix b{m};
            for (int i = 0; i < m; ++i) b.row[i] = (code >> (i * m)) & rowmask;
            keyed.emplace_back(canonical_key(b), b);
        }
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, b] : keyed) rep.found.push_back(b);

    rep.orbit = conjugacy_orbit(m);
    rep.equal_sets = rep.found.size() == rep.orbit.size() &&
                     std::equal(rep.found.begin(), rep.found.end(), rep.orbit.begin());
    const BitMatrix id = identity(m);
    rep.all_cubes_identity = true;
    for (const BitMatrix& b : rep.found) {
        if (multiply(multiply(b, b), b) != id) rep.all_cubes_identity = false;
        if (is_primitive(b)) rep.primitive_members.push_back(b);
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t_start)
                         .count();
    return rep;
}

namespace detail {

// Basis of {x : row . x = 0 for every listed row} (dot products mod 2).
inline std::vector<uint64_t> row_nullspace(std::span<const uint64_t> rows, int m) {
    std::array<uint64_t, kMaxDim> ech{};
    for (uint64_t v : rows) {
        while (v != 0) {
            const int p = std::bit_width(v) - 1;
            if (ech[p] == 0) {
                ech[p] = v;
                break;
            }
            v ^= ech[p];
        }
    }
    // back-substitute so each pivot column appears in its own equation only
    for (int p = 0; p < m; ++p) {
        if (ech[p] == 0) continue;
        for (int q = p + 1; q < m; ++q)
            if (ech[q] != 0 && ((ech[q] >> p) & 1)) ech[q] ^= ech[p];
    }
    std::vector<uint64_t> basis;
    for (int c = 0; c < m; ++c) {
        if (ech[c] != 0) continue;
        uint64_t x = 1ull << c;
        for (int p = 0; p < m; ++p)
            if (ech[p] != 0 && ((ech[p] >> c) & 1)) x |= 1ull << p;
        basis.push_back(x);
    }
    return basis;
}

// Fully reduced row echelon form, pivot rows in descending pivot order;
// equal spans produce equal vectors.
inline std::vector<uint64_t> canonical_span(std::span<const uint64_t> rows) {
    std::array<uint64_t, kMaxDim> ech{};
    for (uint64_t v : rows) {
        while (v != 0) {
            const int p = std::bit_width(v) - 1;
            if (ech[p] == 0) {
                ech[p] = v;
                break;
            }
            v ^= ech[p];
        }
    }
    for (int p = kMaxDim - 1; p >= 0; --p) {
        if (ech[p] == 0) continue;
        for (int q = p + 1; q < kMaxDim; ++q)
            if (ech[q] != 0 && ((ech[q] >> p) & 1)) ech[q] ^= ech[p];
    }
    std::vector<uint64_t> out;
    for (int p = kMaxDim - 1; p >= 0; --p)
        if (ech[p] != 0) out.push_back(ech[p]);
    return out;
}

// Rows spanning V_{i,j}: first i rows of a, first m-i-j-1 rows of b, first
// j rows of c.
inline std::vector<uint64_t> subspace_rows(const BitMatrix& a, const BitMatrix& b,
                                           const BitMatrix& c, int i, int j) {
    std::vector<uint64_t> rows;
    rows.reserve(size_t(a.m) - 1);
    for (int r = 0; r < i; ++r) rows.push_back(a.row[r]);
    for (int r = 0; r < a.m - i - j - 1; ++r) rows.push_back(b.row[r]);
    for (int r = 0; r < j; ++r) rows.push_back(c.row[r]);
    return rows;
}

inline void require_t0_triple(const BitMatrix& a, const BitMatrix& b, const BitMatrix& c) {
    const NetSpec spec{a.m, {a, b, c}};
    const TValueResult t = t_value_rank(spec);
    if (t.t != 0) throw HypothesisError(t);
}

}  // namespace detail

// Dimension/cardinality facts about the row subspaces V_{i,j} of a t = 0
// triple (a, b, c): each selected V has dimension m-1, the intersection
// over k selected indices has dimension m-k, and exactly 2^j row vectors
// avoid every V_{i,j} as i runs over its full range.
struct SubspaceDimProbe {
    int m = 0;
    int j = 0;
    std::vector<int> indices;
    std::vector<int> v_dims;        // dim V_{i,j} for each selected i
    int intersection_dim = 0;       // dim of the intersection of the selected V's
    uint64_t complement_count = 0;  // |intersection over all i of complement of V_{i,j}|
};

inline SubspaceDimProbe subspace_dimension_probe(const BitMatrix& a, const BitMatrix& b,
                                                 const BitMatrix& c, int j,
                                                 std::vector<int> indices) {
    if (a.m != b.m || a.m != c.m) throw std::invalid_argument("subspace probe: dimension mismatch");
    const int m = a.m;
    check_dim(m);
    if (m > 12) throw std::invalid_argument("subspace probe: m > 12 exceeds the enumeration budget");
    if (j < 0 || indices.empty()) throw std::invalid_argument("subspace probe: need j >= 0 and at least one index");
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (indices.front() < 0 || indices.back() + j > m - 1)
        throw std::invalid_argument("subspace probe: index out of range (need i + j <= m-1)");
    detail::require_t0_triple(a, b, c);

    SubspaceDimProbe probe;
    probe.m = m;
    probe.j = j;
    probe.indices = indices;
    std::vector<uint64_t> normals;
    for (int i : indices) {
        const std::vector<uint64_t> rows = detail::subspace_rows(a, b, c, i, j);
        const int dim = rank_of(rows);
        probe.v_dims.push_back(dim);
        if (dim != m - 1)
            throw TheoremViolation(a, "V_{" + std::to_string(i) + "," + std::to_string(j) +
                                          "} has dimension " + std::to_string(dim) +
                                          " != m-1 under a t = 0 hypothesis");
        normals.push_back(detail::row_nullspace(rows, m).front());
    }
    probe.intersection_dim = m - rank_of(normals);

    // complement count over the full index range of i
    std::vector<uint64_t> all_normals;
    for (int i = 0; i <= m - j - 1; ++i) {
        const std::vector<uint64_t> rows = detail::subspace_rows(a, b, c, i, j);
        all_normals.push_back(detail::row_nullspace(rows, m).front());
    }
    for (uint64_t x = 0; x < (uint64_t(1) << m); ++x) {
        bool outside_all = true;
        for (uint64_t n : all_normals) {
            if ((std::popcount(x & n) & 1) == 0) {  // x in V
                outside_all = false;
                break;
            }
        }
        if (outside_all) ++probe.complement_count;
    }
    return probe;
}

// Transport facts between two t = 0 triples (a,b,c) and (a,b,c'): row j of
// c' lies in the coset of row j of c over the earlier c rows, the leading
// row spans agree, the V and W subspaces agree, and a unit-diagonal lower
// transporter L with L*c = c' exists.
struct TransportProbe {
    bool coset_ok = false;     // c'_j in c_j + <c_1..c_{j-1}> for every j
    bool span_ok = false;      // <c_1..c_j> = <c'_1..c'_j> for every j
    bool subspace_ok = false;  // V_{i,j} = W_{i,j} for all i + j <= m-1
    std::optional<BitMatrix> transport;  // L with L*c = c'
    bool ok() const { return coset_ok && span_ok && subspace_ok && transport.has_value(); }
};

inline TransportProbe c_transport_probe(const BitMatrix& a, const BitMatrix& b,
                                        const BitMatrix& c, const BitMatrix& cp) {
    if (a.m != b.m || a.m != c.m || a.m != cp.m)
        throw std::invalid_argument("transport probe: dimension mismatch");
    const int m = a.m;
    check_dim(m);
    if (m > 12) throw std::invalid_argument("transport probe: m > 12 exceeds the enumeration budget");
    detail::require_t0_triple(a, b, c);
    detail::require_t0_triple(a, b, cp);

    TransportProbe probe;
    probe.coset_ok = true;
    probe.span_ok = true;
    for (int j = 1; j <= m; ++j) {
        RowBasis earlier;
        for (int r = 0; r + 1 < j; ++r) earlier.insert(c.row[r]);
        if (!earlier.contains(c.row[j - 1] ^ cp.row[j - 1])) probe.coset_ok = false;
        const std::span<const uint64_t> lead_c(c.row.data(), size_t(j));
        const std::span<const uint64_t> lead_cp(cp.row.data(), size_t(j));
        if (detail::canonical_span(lead_c) != detail::canonical_span(lead_cp)) probe.span_ok = false;
    }
    probe.subspace_ok = true;
    for (int j = 0; j <= m - 1; ++j) {
        for (int i = 0; i + j <= m - 1; ++i) {
            const std::vector<uint64_t> v = detail::subspace_rows(a, b, c, i, j);
            const std::vector<uint64_t> w = detail::subspace_rows(a, b, cp, i, j);
            if (detail::canonical_span(v) != detail::canonical_span(w)) {
                probe.subspace_ok = false;
                break;
            }
        }
    }
    probe.transport = lower_transform(c, cp);
    if (probe.transport && multiply(*probe.transport, c) != cp)
        throw TheoremViolation(c, "transporter does not map c to c'");
    return probe;
}

}  // namespace t0net
