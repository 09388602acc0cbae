// Periodic GF(2)-linear recurrences x_{i+1} = B x_i, their overlapping
// s-tuples, and the identity of the tuple set (plus the origin) with the
// digital net of (I, B, .., B^{s-1}) for maximal-period B. Also the
// Faure-block net specs (I, P) and (I, P, J).
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "t0net/bitmatrix.hpp"
#include "t0net/digital_net.hpp"

namespace t0net {

struct RecurrenceSpec {
    BitMatrix b;        // invertible
    BitVector seed;     // nonzero
    uint64_t length = 0;  // states to emit
};

struct OrbitResult {
    std::vector<uint64_t> states;  // x_1 = seed, x_2 = B x_1, ..
    uint64_t period = 0;           // least p with x_{p+1} = x_1
};

// Overlapping s-tuples of the periodic orbit, one per i = 1..p, as phi
// values; indices wrap modulo the period so the set has cardinality p.
struct TupleSet {
    int m = 0;
    int s = 0;
    uint64_t period = 0;
    std::vector<uint64_t> coords;  // tuple i, coordinate j at [i*s + j]

    uint64_t coord(uint64_t i, int j) const { return coords[i * s + j]; }
};

inline void check_recurrence(const RecurrenceSpec& spec) {
    check_dim(spec.b.m);
    if (spec.seed.m != spec.b.m) throw std::invalid_argument("recurrence: seed dimension mismatch");
    if (spec.seed.bits == 0) throw std::invalid_argument("recurrence: seed must be nonzero");
    if (!is_invertible(spec.b)) throw std::invalid_argument("recurrence: matrix is singular");
    if (spec.b.m > 24) throw std::invalid_argument("recurrence: m > 24 exceeds the period-scan budget");
}

inline OrbitResult recurrence_orbit(const RecurrenceSpec& spec) {
    check_recurrence(spec);
    OrbitResult out;
    // period first: invertibility makes the orbit purely periodic
    uint64_t x = spec.seed.bits;
    do {
        x = apply(spec.b, x);
        ++out.period;
    } while (x != spec.seed.bits);
    out.states.reserve(spec.length);
    x = spec.seed.bits;
    for (uint64_t i = 0; i < spec.length; ++i) {
        out.states.push_back(x);
        x = apply(spec.b, x);
    }
    return out;
}

inline TupleSet overlapping_tuples(const RecurrenceSpec& spec, int s) {
    if (s < 1) throw std::invalid_argument("overlapping_tuples: width must be >= 1");
    RecurrenceSpec full = spec;
    full.length = 0;
    const uint64_t p = recurrence_orbit(full).period;
    full.length = p;
    const std::vector<uint64_t> states = recurrence_orbit(full).states;
    TupleSet out{spec.b.m, s, p, std::vector<uint64_t>(p * uint64_t(s), 0)};
    for (uint64_t i = 0; i < p; ++i)
        for (int j = 0; j < s; ++j)
            out.coords[i * uint64_t(s) + j] = phi(BitVector{spec.b.m, states[(i + j) % p]});
    return out;
}

// For maximal-period B: the overlapping s-tuples together with the origin
// equal, as a set, the digital net generated by (I, B, .., B^{s-1}).
inline bool tuple_set_equals_net(const RecurrenceSpec& spec, int s) {
    if (!is_primitive(spec.b)) throw std::invalid_argument("tuple_set_equals_net: matrix is not primitive");
    const TupleSet tuples = overlapping_tuples(spec, s);
    NetSpec net{spec.b.m, {}};
    BitMatrix power = identity(spec.b.m);
    for (int j = 0; j < s; ++j) {
        net.mats.push_back(power);
        power = multiply(power, spec.b);
    }
    const PointSet points = generate_points(net);

    std::vector<std::vector<uint64_t>> lhs;
    lhs.reserve(tuples.period + 1);
    for (uint64_t i = 0; i < tuples.period; ++i) {
        std::vector<uint64_t> pt(size_t(s), 0);
        for (int j = 0; j < s; ++j) pt[size_t(j)] = tuples.coord(i, j);
        lhs.push_back(std::move(pt));
    }
    lhs.emplace_back(size_t(s), 0);  // adjoin the origin
    std::vector<std::vector<uint64_t>> rhs;
    rhs.reserve(points.size());
    for (uint64_t l = 0; l < points.size(); ++l) {
        std::vector<uint64_t> pt(size_t(s), 0);
        for (int j = 0; j < s; ++j) pt[size_t(j)] = points.coord(l, j);
        rhs.push_back(std::move(pt));
    }
    auto setify = [](std::vector<std::vector<uint64_t>>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    setify(lhs);
    setify(rhs);
    return lhs == rhs;
}

// The first-2^m-points Faure block (I, P) and its 3d extension (I, P, J);
// both have t-value 0 for every m.
inline std::pair<NetSpec, NetSpec> faure_nets(int m) {
    check_dim(m);
    return {NetSpec{m, {identity(m), pascal(m)}},
            NetSpec{m, {identity(m), pascal(m), antidiag(m)}}};
}

}  // namespace t0net
