// Shared deterministic generators for the test suites.
#pragma once

#include <random>

#include "t0net/t0net.hpp"

namespace testutil {

inline t0net::BitMatrix random_matrix(std::mt19937_64& rng, int m) {
    t0net::BitMatrix a{m};
    for (int i = 0; i < m; ++i) a.row[i] = rng() & a.row_mask();
    return a;
}

inline t0net::BitMatrix random_invertible(std::mt19937_64& rng, int m) {
    for (;;) {
        const t0net::BitMatrix a = random_matrix(rng, m);
        if (t0net::is_invertible(a)) return a;
    }
}

inline t0net::BitMatrix random_unit_lower(std::mt19937_64& rng, int m) {
    t0net::BitMatrix l = t0net::identity(m);
    for (int i = 1; i < m; ++i) l.row[i] |= rng() & ((1ull << i) - 1);
    return l;
}

inline t0net::BitMatrix power(const t0net::BitMatrix& a, int e) {
    t0net::BitMatrix x = t0net::identity(a.m);
    for (int k = 0; k < e; ++k) x = t0net::multiply(x, a);
    return x;
}

}  // namespace testutil
