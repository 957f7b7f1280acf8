#include <doctest.h>

#include "chowforge/zlinalg.hpp"
#include "support/oracles.hpp"

using namespace chowforge;

namespace {

IntVector vec(std::initializer_list<long> xs)
{
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

std::vector<std::vector<mpz_class>> rows_of(const IntMatrix& m)
{
    std::vector<std::vector<mpz_class>> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

bool is_hnf(const HnfResult& r)
{
    const IntMatrix& h = r.h;
    for (std::size_t i = 0; i < r.rank; ++i) {
        std::size_t p = r.pivot_cols[i];
        if (h(i, p) <= 0)
            return false;
        for (std::size_t j = 0; j < p; ++j)
            if (h(i, j) != 0)
                return false;
        if (i && p <= r.pivot_cols[i - 1])
            return false;
        for (std::size_t k = 0; k < i; ++k)
            if (h(k, p) < 0 || h(k, p) >= h(i, p))
                return false;
    }
    for (std::size_t i = r.rank; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0)
                return false;
    return true;
}

}  // namespace

TEST_SUITE("zlinalg") {

TEST_CASE("hnf of the identity")
{
    IntMatrix id = IntMatrix::identity(4);
    HnfResult r = hnf(id);
    CHECK(r.h == id);
    CHECK(r.u == id);
    CHECK(r.rank == 4);
}

TEST_CASE("hnf of the degree-one relation lattice")
{
    // hand reduction: (8,-6) - 4(2,0) = (0,-6); (4,2) - 2(2,0) = (0,2); -6 + 3*2 = 0
    IntMatrix a{{2, 0}, {8, -6}, {4, 2}};
    HnfResult r = hnf(a);
    CHECK(r.h == IntMatrix{{2, 0}, {0, 2}, {0, 0}});
    CHECK(r.rank == 2);
    CHECK(r.u * a == r.h);
    CHECK(abs(oracle::determinant(r.u)) == 1);
}

TEST_CASE("hnf of zero and empty matrices")
{
    HnfResult z = hnf(IntMatrix(1, 3));
    CHECK(z.h.is_zero());
    CHECK(z.rank == 0);
    HnfResult e = hnf(IntMatrix(0, 3));
    CHECK(e.h.rows() == 0);
    CHECK(hnf(IntMatrix(2, 0)).rank == 0);
}

TEST_CASE("snf examples")
{
    // d1 = gcd of entries = 2, d1 * d2 = |det| = 12
    SnfResult s = snf(IntMatrix{{2, 4}, {0, 6}});
    CHECK(s.d == IntMatrix{{2, 0}, {0, 6}});
    CHECK(s.cokernel.to_string() == "Z/2 + Z/6");

    SnfResult i = snf(IntMatrix::identity(2));
    CHECK(i.d == IntMatrix::identity(2));
    CHECK(i.cokernel.free_rank == 0);
    CHECK(i.cokernel.torsion.empty());
    CHECK(i.cokernel.to_string() == "0");

    SnfResult t = snf(IntMatrix{{2, 0}, {8, -6}, {4, 2}});
    CHECK(t.cokernel.free_rank == 0);
    CHECK(t.cokernel.torsion == IntVector{2, 2});
    CHECK(t.cokernel.to_string() == "(Z/2)^2");

    SnfResult f = snf(IntMatrix{{0, 3, 0}});
    CHECK(f.cokernel.to_string() == "Z^2 + Z/3");
    CHECK(snf(IntMatrix(0, 1)).cokernel.to_string() == "Z");
}

TEST_CASE("lattice membership")
{
    IntMatrix a{{2, 0}, {0, 2}};
    auto x = solve_in_row_lattice(a, vec({4, 6}));
    REQUIRE(x);
    CHECK(row_times(*x, a) == vec({4, 6}));
    CHECK(*x == vec({2, 3}));
    CHECK_FALSE(solve_in_row_lattice(a, vec({1, 0})));
    CHECK_THROWS_AS(solve_in_row_lattice(a, vec({1, 0, 0})), Error);
    CHECK(solve_in_row_lattice(IntMatrix(0, 2), vec({0, 0})));
    CHECK_FALSE(solve_in_row_lattice(IntMatrix(0, 2), vec({0, 1})));
}

TEST_CASE("property: hnf shape, transform, idempotence, lattice")
{
    oracle::Rng rng(314159);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t m = static_cast<std::size_t>(oracle::uniform(rng, 1, 8));
        std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
        IntMatrix a = oracle::random_matrix(rng, m, n, -20, 20);
        if (trial % 5 == 0 && m > 1)  // force dependent rows
            for (std::size_t j = 0; j < n; ++j)
                a(m - 1, j) = 3 * a(0, j);
        HnfResult r = hnf(a);
        REQUIRE(is_hnf(r));
        REQUIRE(r.u * a == r.h);
        REQUIRE(abs(oracle::determinant(r.u)) == 1);
        REQUIRE(hnf(r.h).h == r.h);
        for (std::size_t i = 0; i < m; ++i) {
            REQUIRE(solve_in_row_lattice(r.h, a.row(i)));
            REQUIRE(solve_in_row_lattice(a, r.h.row(i)));
        }
    }
}

TEST_CASE("property: hnf is canonical for the row lattice")
{
    oracle::Rng rng(2718);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = oracle::random_matrix(rng, 4, 4, -9, 9);
        // random unimodular mixing of the rows
        IntMatrix b = a;
        for (int k = 0; k < 6; ++k) {
            auto i = static_cast<std::size_t>(oracle::uniform(rng, 0, 3));
            auto j = static_cast<std::size_t>(oracle::uniform(rng, 0, 3));
            if (i != j)
                b.add_row_multiple(i, j, oracle::uniform(rng, -3, 3));
            else
                b.negate_row(i);
        }
        REQUIRE(hnf(a).h == hnf(b).h);
    }
}

TEST_CASE("property: snf transforms recomputed")
{
    oracle::Rng rng(161803);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t m = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
        std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
        IntMatrix a = oracle::random_matrix(rng, m, n, -99, 99);
        SnfResult s = snf(a);
        REQUIRE(s.u * a * s.v == s.d);
        REQUIRE(abs(oracle::determinant(s.u)) == 1);
        REQUIRE(abs(oracle::determinant(s.v)) == 1);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    REQUIRE(s.d(i, j) == 0);
        for (std::size_t i = 0; i + 1 < s.rank; ++i)
            REQUIRE(mpz_divisible_p(s.d(i + 1, i + 1).get_mpz_t(), s.d(i, i).get_mpz_t()));
        for (std::size_t i = 0; i < s.rank; ++i)
            REQUIRE(s.d(i, i) > 0);
        REQUIRE(s.cokernel.free_rank == n - s.rank);
        for (const auto& x : s.cokernel.torsion)
            REQUIRE(x >= 2);
    }
}

TEST_CASE("property: membership agrees with the rational oracle")
{
    oracle::Rng rng(4242);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t m = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
        std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
        IntMatrix a = oracle::random_matrix(rng, m, n, -6, 6);
        IntVector v(n);
        if (trial % 2 == 0) {
            IntVector x(m);
            for (auto& c : x)
                c = oracle::uniform(rng, -4, 4);
            v = row_times(x, a);
            v[0] += oracle::uniform(rng, 0, 1);
        } else {
            for (auto& c : v)
                c = oracle::uniform(rng, -12, 12);
        }
        bool expected = false;
        try {
            expected = oracle::in_row_lattice(rows_of(a), v);
        } catch (const oracle::TooLarge&) {
            continue;
        }
        auto x = solve_in_row_lattice(a, v);
        REQUIRE(x.has_value() == expected);
        if (x)
            REQUIRE(row_times(*x, a) == v);
        ++checked;
    }
    CHECK(checked >= 400);
}

}  // TEST_SUITE
