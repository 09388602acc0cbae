#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "t0net/characterization.hpp"
#include "t0net/text_io.hpp"
#include "test_util.hpp"

using namespace t0net;
using testutil::power;
using testutil::random_invertible;
using testutil::random_matrix;
using testutil::random_unit_lower;

namespace {

bool pair_t0(const BitMatrix& b) {
    return t_value_rank({b.m, {identity(b.m), b}}).t == 0;
}

bool triple_t0(const BitMatrix& b) {
    return t_value_rank({b.m, {identity(b.m), b, multiply(b, b)}}).t == 0;
}

}  // namespace

TEST_CASE("characterize_2d on J gives identity factors") {
    const Char2DResult r = characterize_2d(antidiag(3));
    REQUIRE(r.ok());
    CHECK(r.factors->l1 == identity(3));
    CHECK(r.factors->l2 == identity(3));
}

TEST_CASE("characterize_2d recomposes P*J") {
    const BitMatrix b = multiply(pascal(2), antidiag(2));  // "11,10"
    const Char2DResult r = characterize_2d(b);
    REQUIRE(r.ok());
    CHECK(multiply(multiply(r.factors->l1, antidiag(2)), r.factors->l2) == b);
    CHECK(is_unit_lower(r.factors->l1));
    CHECK(is_unit_lower(r.factors->l2));
}

TEST_CASE("characterize_2d rejects a zero first row with a witness") {
    BitMatrix b = pascal(3);
    b.row[0] = 0;
    const Char2DResult r = characterize_2d(b);
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.obstruction.has_value());
    CHECK(r.obstruction->t >= 1);
    // the witness composition really is dependent
    std::vector<uint64_t> rows;
    const BitMatrix mats[2] = {identity(3), b};
    int sum = 0;
    for (int j = 0; j < 2; ++j) {
        sum += r.obstruction->witness[j];
        for (int k = 0; k < r.obstruction->witness[j]; ++k) rows.push_back(mats[j].row[k]);
    }
    CHECK(rank_of(rows) < sum);
}

TEST_CASE("characterize_2d succeeds exactly on t(I,B) = 0") {
    for (int m = 1; m <= 3; ++m) {  // exhaustive
        for (uint64_t code = 0; code < (uint64_t(1) << (m * m)); ++code) {
            BitMatrix b{m};
            for (int i = 0; i < m; ++i) b.row[i] = (code >> (i * m)) & b.row_mask();
            const Char2DResult r = characterize_2d(b);
            CHECK(r.ok() == pair_t0(b));
            if (r.ok()) {
                CHECK(multiply(multiply(r.factors->l1, antidiag(m)), r.factors->l2) == b);
                CHECK(is_unit_lower(r.factors->l1));
                CHECK(is_unit_lower(r.factors->l2));
            }
        }
    }
    std::mt19937_64 rng(20);
    for (int rep = 0; rep < 2000; ++rep) {  // random larger
        const int m = 4 + int(rng() % 3);
        const BitMatrix b = random_matrix(rng, m);
        const Char2DResult r = characterize_2d(b);
        CHECK(r.ok() == pair_t0(b));
        if (r.ok())
            CHECK(multiply(multiply(r.factors->l1, antidiag(m)), r.factors->l2) == b);
    }
}

TEST_CASE("lower_transform") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 30; ++rep) {
        const int m = 1 + int(rng() % 8);
        const BitMatrix c = random_invertible(rng, m);
        CHECK(*lower_transform(c, c) == identity(m));  // identity transport
    }
    const BitMatrix cp = parse_matrix("10,11");
    CHECK(*lower_transform(identity(2), cp) == cp);  // L = c' when c = I
    CHECK_FALSE(lower_transform(antidiag(2), pascal(2)).has_value());

    // whenever it returns, the result transports and is unit lower
    for (int rep = 0; rep < 200; ++rep) {
        const int m = 1 + int(rng() % 6);
        const BitMatrix c = random_matrix(rng, m);
        const BitMatrix cp = random_matrix(rng, m);
        if (const auto l = lower_transform(c, cp)) {
            CHECK(multiply(*l, c) == cp);
            CHECK(is_unit_lower(*l));
        }
    }
    // constructed solvable instances
    for (int rep = 0; rep < 200; ++rep) {
        const int m = 1 + int(rng() % 6);
        const BitMatrix c = random_matrix(rng, m);
        const BitMatrix cp = multiply(random_unit_lower(rng, m), c);
        const auto l = lower_transform(c, cp);
        REQUIRE(l.has_value());
        CHECK(multiply(*l, c) == cp);
    }
}

TEST_CASE("decompose_t0_triple on P*J is conjugation by identity") {
    for (int m = 1; m <= 6; ++m) {
        const DecomposeResult r = decompose_t0_triple(multiply(pascal(m), antidiag(m)));
        REQUIRE(r.ok());
        CHECK(*r.conjugator == identity(m));
    }
}

TEST_CASE("decompose_t0_triple recovers the unipotent conjugator at m = 2") {
    const DecomposeResult r = decompose_t0_triple(parse_matrix("01,11"));
    REQUIRE(r.ok());
    CHECK(format_matrix_compact(*r.conjugator) == "10,11");
}

TEST_CASE("decompose_t0_triple rejects the identity matrix") {
    for (int m = 2; m <= 5; ++m) {
        const DecomposeResult r = decompose_t0_triple(identity(m));
        REQUIRE_FALSE(r.ok());
        CHECK(r.obstruction->t == m - 1);
        std::vector<int> expect{1, 1, 0};
        CHECK(r.obstruction->witness == expect);  // rows e1, e1
    }
}

TEST_CASE("conjugacy orbit members") {
    const auto one = conjugacy_orbit(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == identity(1));

    const auto two = conjugacy_orbit(2);
    REQUIRE(two.size() == 2);
    CHECK(format_matrix_compact(two[0]) == "01,11");
    CHECK(format_matrix_compact(two[1]) == "11,10");

    for (int m : {3, 4}) {
        const auto orbit = conjugacy_orbit(m);
        for (const BitMatrix& x : orbit) {
            CHECK(power(x, 3) == identity(m));
            CHECK(x != identity(m));  // order exactly 3 for m >= 2
            CHECK(triple_t0(x));
        }
    }
}

TEST_CASE("orbit members round-trip through decompose") {
    for (int m = 1; m <= 5; ++m) {
        for (const BitMatrix& x : conjugacy_orbit(m)) {
            const DecomposeResult r = decompose_t0_triple(x);
            REQUIRE(r.ok());
            const BitMatrix& l = *r.conjugator;
            CHECK(multiply(multiply(multiply(l, pascal(m)), antidiag(m)), *inverse(l)) == x);
        }
    }
}

TEST_CASE("exhaustive search confirms the structure at small m") {
    const SearchReport one = exhaustive_search_t0(1);
    CHECK(one.found.size() == 1);
    CHECK(one.found[0] == identity(1));
    CHECK(one.primitive_members.size() == 1);
    CHECK(one.equal_sets);
    CHECK(one.all_cubes_identity);

    const SearchReport two = exhaustive_search_t0(2);
    CHECK(two.found.size() == 2);
    CHECK(two.primitive_members.size() == 2);  // both have order 3 = 2^2 - 1
    CHECK(two.equal_sets);
    CHECK(two.all_cubes_identity);
    CHECK(two.candidates_scanned == 16);

    for (int m : {3, 4}) {
        const SearchReport rep = exhaustive_search_t0(m);
        CHECK(rep.equal_sets);
        CHECK(rep.all_cubes_identity);
        CHECK(rep.primitive_members.empty());
        CHECK(rep.candidates_scanned == (uint64_t(1) << (m * m)));
        // the filter passes exactly the B with t(I,B) = 0
        uint64_t pair_count = 0;
        for (uint64_t code = 0; code < (uint64_t(1) << (m * m)); ++code) {
            BitMatrix b{m};
            for (int i = 0; i < m; ++i) b.row[i] = (code >> (i * m)) & b.row_mask();
            if (pair_t0(b)) ++pair_count;
        }
        CHECK(rep.filter_pass == pair_count);
    }
    CHECK_THROWS_AS(exhaustive_search_t0(6), std::invalid_argument);
}

TEST_CASE("search report does not depend on the worker count") {
    const SearchReport a = exhaustive_search_t0(3, 1);
    const SearchReport b = exhaustive_search_t0(3, 4);
    CHECK(a.found == b.found);
    CHECK(a.orbit == b.orbit);
    CHECK(a.filter_pass == b.filter_pass);
    CHECK(a.primitive_members == b.primitive_members);
    CHECK(a.equal_sets == b.equal_sets);
}

TEST_CASE("pj identities") {
    CHECK(pj_identities_check(1));
    CHECK(pj_identities_check(5));
    CHECK(pj_identities_check(64));
}

TEST_CASE("subspace dimension probe") {
    // t(J, P, I) = 0 by symmetry of the rank condition
    const SubspaceDimProbe p1 =
        subspace_dimension_probe(antidiag(3), pascal(3), identity(3), 0, {0, 1, 2});
    CHECK(p1.v_dims == std::vector<int>{2, 2, 2});
    CHECK(p1.intersection_dim == 0);   // m - k = 3 - 3
    CHECK(p1.complement_count == 1);   // 2^j = 2^0

    // a single index always gives dimension m - 1
    std::mt19937_64 rng(22);
    for (int rep = 0; rep < 50; ++rep) {
        const int m = 2 + int(rng() % 5);
        const BitMatrix l = random_unit_lower(rng, m);
        const BitMatrix g = random_invertible(rng, m);
        const BitMatrix a = multiply(multiply(l, identity(m)), g);
        const BitMatrix b = multiply(multiply(random_unit_lower(rng, m), pascal(m)), g);
        const BitMatrix c = multiply(multiply(random_unit_lower(rng, m), antidiag(m)), g);
        const int j = int(rng() % m);
        const int i = int(rng() % (m - j));
        const SubspaceDimProbe p = subspace_dimension_probe(a, b, c, j, {i});
        CHECK(p.intersection_dim == m - 1);
    }

    const BitMatrix pj4 = multiply(pascal(4), antidiag(4));
    const SubspaceDimProbe p2 =
        subspace_dimension_probe(identity(4), pj4, multiply(pj4, pj4), 2, {0, 1});
    CHECK(p2.complement_count == 4);  // 2^j = 2^2

    CHECK_THROWS_AS(subspace_dimension_probe(identity(3), identity(3), identity(3), 0, {0}),
                    HypothesisError);
    CHECK_THROWS_AS(subspace_dimension_probe(antidiag(3), pascal(3), identity(3), 2, {1}),
                    std::invalid_argument);  // i + j > m - 1
}

TEST_CASE("transport probe") {
    // identical third matrices: everything trivially holds, L = I
    const TransportProbe same =
        c_transport_probe(identity(3), antidiag(3), pascal(3), pascal(3));
    CHECK(same.ok());
    CHECK(*same.transport == identity(3));

    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        const int m = 2 + int(rng() % 5);
        const BitMatrix l0 = random_unit_lower(rng, m);
        // (I, J, P) vs (I, J, L0 * P)
        const TransportProbe p =
            c_transport_probe(identity(m), antidiag(m), pascal(m), multiply(l0, pascal(m)));
        CHECK(p.ok());
        CHECK(*p.transport == l0);  // P invertible makes the transporter unique

        // (I, B, B^2) vs (I, B, L0 * B^2) for B = P*J
        const BitMatrix b = multiply(pascal(m), antidiag(m));
        const BitMatrix b2 = multiply(b, b);
        const TransportProbe q =
            c_transport_probe(identity(m), b, b2, multiply(l0, b2));
        CHECK(q.ok());
        CHECK(*q.transport == l0);
    }

    CHECK_THROWS_AS(c_transport_probe(identity(3), identity(3), pascal(3), pascal(3)),
                    HypothesisError);
}
