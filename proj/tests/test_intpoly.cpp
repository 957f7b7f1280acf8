#include <doctest.h>

#include "chowforge/intpoly.hpp"
#include "support/oracles.hpp"

using namespace chowforge;

namespace {

Ring tcc() { return ring_make({{"t", 1}, {"c1", 1}, {"c2", 2}}); }

Polynomial var(const Ring& r, const char* n) { return Polynomial::variable(r, n); }

}  // namespace

TEST_SUITE("intpoly") {

TEST_CASE("ring construction and validation")
{
    Ring r = tcc();
    CHECK(r->size() == 3);
    CHECK(r->header() == "t:1, c1:1, c2:2");
    CHECK(r->require_index("c2") == 2);
    CHECK_FALSE(r->contains("xi2a"));
    CHECK_THROWS_AS(ring_make({{"x", 1}, {"x", 1}}), Error);
    CHECK_THROWS_AS(ring_make({{"c2", 0}}), Error);
    CHECK_THROWS_AS(ring_make({{"Bad", 1}}), Error);
}

TEST_CASE("addition cancels and merges")
{
    Ring r = ring_make({{"c1", 1}, {"c2", 2}, {"xi", 1}});
    auto c1 = var(r, "c1"), c2 = var(r, "c2"), xi = var(r, "xi");
    CHECK((2 * var(r, "c1") + (-2) * var(r, "c1")).is_zero());
    CHECK((xi * xi - c1 * xi) + (c1 * xi + c2) == xi * xi + c2);
    Polynomial d = 4 * c2 + -(c1 * c1);
    CHECK(d.term_count() == 2);
    CHECK(canonical_string(d) == "-c1^2 + 4*c2");
}

TEST_CASE("multiplication")
{
    Ring r = ring_make({{"c1", 1}, {"xi", 1}, {"t1", 1}, {"t2", 1}});
    auto xi = var(r, "xi"), t1 = var(r, "t1"), t2 = var(r, "t2"), c1 = var(r, "c1");
    CHECK((xi - t1) * (xi - t2) == xi * xi - (t1 + t2) * xi + t1 * t2);
    Polynomial one = Polynomial::constant(r, 1);
    Polynomial p = 3 * xi * c1 - 7 * t2;
    CHECK(p * one == p);
    CHECK((2 * xi - 2 * c1) * (2 * xi + 2 * c1) == 4 * xi * xi - 4 * c1 * c1);
    CHECK((p * Polynomial(r)).is_zero());
}

TEST_CASE("operations on different rings throw")
{
    Ring a = tcc();
    Ring b = ring_make({{"t", 1}, {"c1", 1}});
    CHECK_THROWS_AS(var(a, "t") + var(b, "t"), RingMismatch);
    CHECK_THROWS_AS(var(a, "t") * var(b, "t"), RingMismatch);
    CHECK_THROWS_AS(Polynomial::variable(a, "u"), Error);
}

TEST_CASE("weighted degree")
{
    Ring r = ring_make({{"c1", 1}, {"c2", 2}, {"xi2a", 1}, {"xi2b", 1}});
    const long a = 1, b = 1;
    Polynomial rel = var(r, "xi2a") * var(r, "xi2b") - 4 * a * b * var(r, "c2");
    CHECK(*weighted_degree(rel).degree == 2);

    Ring s = tcc();
    Homogeneity h = weighted_degree(var(s, "t") + var(s, "c2"));
    CHECK_FALSE(h.homogeneous());
    REQUIRE(h.witnesses);
    CHECK(s->degree_of(h.witnesses->first) != s->degree_of(h.witnesses->second));

    const long n = 3;
    CHECK(*weighted_degree(2 * (2 * n - 1) * var(s, "t")).degree == 1);
    CHECK_THROWS_AS(weighted_degree(Polynomial(s)), Error);
    CHECK(is_homogeneous(Polynomial(s)));
    CHECK(is_homogeneous_of(Polynomial(s), 7));
    CHECK(*weighted_degree(Polynomial::constant(s, 5)).degree == 0);
}

TEST_CASE("substitution")
{
    Ring r = ring_make({{"c1", 1}, {"c2", 2}, {"xi2a", 1}});
    auto c1 = var(r, "c1"), xa = var(r, "xi2a");
    const long a = 1;
    Polynomial f = 2 * (2 * a - 1) * xa - 2 * a * (2 * a - 1) * c1;
    Images pull{{"xi2a", xa - a * c1}, {"c1", c1}};
    // direct expansion: 2(xi - c1) - 2 c1
    CHECK(substitute(f, pull, r) == 2 * xa - 4 * c1);

    Images id{{"c1", c1}, {"c2", var(r, "c2")}, {"xi2a", xa}};
    Polynomial g = xa * xa * var(r, "c2") - 9 * c1;
    CHECK(substitute(g, id, r) == g);

    // xi_{2n} -> n c1 - t at n = 2 sends the first squaring class to -6t
    Ring target = tcc();
    const long n = 2;
    Ring src = ring_make({{"c1", 1}, {"xi2n", 1}});
    Polynomial row = 2 * (2 * n - 1) * var(src, "xi2n") - 2 * n * (2 * n - 1) * var(src, "c1");
    Images tors{{"xi2n", n * var(target, "c1") - var(target, "t")}, {"c1", var(target, "c1")}};
    CHECK(substitute(row, tors, target) == -6 * var(target, "t"));
}

TEST_CASE("substitution errors")
{
    Ring r = tcc();
    Polynomial p = var(r, "t") * var(r, "c1");
    CHECK_THROWS_AS(substitute(p, Images{{"t", var(r, "t")}}, r), Error);
    CHECK_THROWS_AS(substitute(p, Images{{"t", var(r, "c2")}, {"c1", var(r, "c1")}}, r), Error);
    // unused variables need no image
    CHECK(substitute(var(r, "t"), Images{{"t", var(r, "c1")}}, r) == var(r, "c1"));
}

TEST_CASE("canonical strings")
{
    Ring r = tcc();
    auto t = var(r, "t"), c1 = var(r, "c1"), c2 = var(r, "c2");
    CHECK(canonical_string(4 * c2 - 2 * t * c1) == "-2*t*c1 + 4*c2");
    CHECK(canonical_string(Polynomial(r)) == "0");
    CHECK(canonical_string(Polynomial::constant(r, -3)) == "-3");
    CHECK(canonical_string(t * t * t - c1) == "t^3 - c1");
    CHECK(canonical_string(-t) == "-t");
    // degree first, then registry position
    CHECK(canonical_string(c2 + t * t + t * c1 + c1 * c1) == "t^2 + t*c1 + c1^2 + c2");
}

TEST_CASE("coefficients do not overflow")
{
    Ring r = tcc();
    Polynomial p = Polynomial::constant(r, 1);
    mpz_class big("123456789012345678901234567890");
    Polynomial q = big * var(r, "c2");
    Polynomial sq = q * q;
    CHECK(sq.coefficient(Exponents{0, 0, 2}) == big * big);
    CHECK(canonical_string(sq) == mpz_class(big * big).get_str() + "*c2^2");
    // quartic parameter coefficient at a large genus
    const mpz_class g = 1000001, n = 3;
    Polynomial row7 = 2 * n * (2 * n - 1) * (g + 1 - n) * (2 * g + 1 - 2 * n) * p;
    CHECK(row7.coefficient(Exponents{0, 0, 0}) == 2 * n * (2 * n - 1) * (g + 1 - n) * (2 * g + 1 - 2 * n));
}

TEST_CASE("property: ring axioms on random triples")
{
    oracle::Rng rng(20261014);
    Ring r = tcc();
    for (int trial = 0; trial < 1000; ++trial) {
        Polynomial p = oracle::random_poly(rng, r);
        Polynomial q = oracle::random_poly(rng, r);
        Polynomial s = oracle::random_poly(rng, r);
        REQUIRE((p + q) + s == p + (q + s));
        REQUIRE(p + q == q + p);
        REQUIRE((p * q) * s == p * (q * s));
        REQUIRE(p * q == q * p);
        REQUIRE(p * (q + s) == p * q + p * s);
        REQUIRE((p - p).is_zero());
        const Polynomial pq = p * q;
        for (const auto& [e, c] : pq.terms())
            REQUIRE(c != 0);
    }
}

TEST_CASE("property: substitution is a graded homomorphism")
{
    oracle::Rng rng(7);
    Ring src = tcc();
    Ring dst = ring_make({{"c1", 1}, {"c2", 2}, {"xi", 1}});
    for (int trial = 0; trial < 300; ++trial) {
        Images im{{"t", oracle::random_homogeneous(rng, dst, 1, 3, 9)},
                  {"c1", oracle::random_homogeneous(rng, dst, 1, 3, 9)},
                  {"c2", oracle::random_homogeneous(rng, dst, 2, 4, 9)}};
        Polynomial p = oracle::random_homogeneous(rng, src, oracle::uniform(rng, 0, 3), 4, 20);
        Polynomial q = oracle::random_homogeneous(rng, src, oracle::uniform(rng, 0, 3), 4, 20);
        Polynomial fp = substitute(p, im, dst), fq = substitute(q, im, dst);
        REQUIRE(substitute(p * q, im, dst) == fp * fq);
        REQUIRE(substitute(p + q, im, dst) == fp + fq);
        if (!fp.is_zero() && !p.is_zero())
            REQUIRE(*weighted_degree(fp).degree == *weighted_degree(p).degree);
    }
}

TEST_CASE("property: canonical string is injective")
{
    oracle::Rng rng(99);
    Ring r = tcc();
    std::map<std::string, Polynomial> seen;
    for (int trial = 0; trial < 2000; ++trial) {
        Polynomial p = oracle::random_poly(rng, r, 3, 2);
        auto [it, fresh] = seen.emplace(canonical_string(p), p);
        if (!fresh)
            REQUIRE(it->second == p);
    }
}

}  // TEST_SUITE
