#include "fixdiv/fixdiv.hpp"
#include "fixdiv/poly.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace fixdiv;
using namespace testutil;

namespace {

ScalarPoly poly_z(std::initializer_list<std::pair<std::uint64_t, long>> terms) {
    std::vector<ScalarTerm> ts;
    for (auto& [e, c] : terms) ts.push_back({e, elem(zz(), c)});
    return ScalarPoly(zz(), std::move(ts));
}

// x^m - x^n
ScalarPoly power_diff(std::uint64_t m, std::uint64_t n) { return poly_z({{m, 1}, {n, -1}}); }

mpz_class brute_gcd(const ScalarPoly& g, long lo, long hi) {
    mpz_class d = 0;
    for (long a = lo; a <= hi; ++a) {
        mpz_class v = eval(g, elem(zz(), a)).a();
        mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), v.get_mpz_t());
    }
    return d;
}

Ideal brute_box_ideal(const ScalarPoly& g, long box) {
    std::vector<RingElem> values;
    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b) {
            if (g.ring().is_z() && b != 0) continue;
            values.push_back(eval(g, elem(g.ring(), a, b)));
        }
    return Ideal::from_generators(g.ring(), values);
}

ScalarPoly random_sparse(SplitMix64& rng, RingDesc ring, int max_terms, std::uint64_t max_exp,
                         long coeff_box) {
    int k = 1 + static_cast<int>(rng.next() % static_cast<unsigned>(max_terms));
    std::vector<ScalarTerm> ts;
    for (int i = 0; i < k; ++i)
        ts.push_back({rng.next() % (max_exp + 1), random_elem(rng, ring, coeff_box)});
    return ScalarPoly(ring, std::move(ts));
}

}  // namespace

TEST_CASE("polynomial normalization") {
    ScalarPoly g = poly_z({{2, 1}, {2, 2}, {0, 5}, {1, 0}});
    REQUIRE(g.terms().size() == 2);
    CHECK(g.terms()[0].exp == 0);
    CHECK(g.terms()[0].coeff == elem(zz(), 5));
    CHECK(g.terms()[1].exp == 2);
    CHECK(g.terms()[1].coeff == elem(zz(), 3));

    CHECK(poly_z({{2, 1}, {2, -1}}).is_zero());
    CHECK(poly_z({}).is_zero());
}

TEST_CASE("evaluation") {
    ScalarPoly g = power_diff(2, 1);
    CHECK(eval(g, elem(zz(), 3)) == elem(zz(), 6));

    RingDesc gi = gauss();
    std::vector<MatrixTerm> ts;
    ts.push_back({2, Mat::identity(zz(), 2)});
    ts.push_back({1, -Mat::identity(zz(), 2)});
    MatrixPoly f(zz(), 2, std::move(ts));
    Mat c(zz(), 2);
    c.at(0, 1) = elem(zz(), 1);
    Mat v = eval(f, c);
    CHECK(v.at(0, 1) == elem(zz(), -1));
    CHECK(v.at(0, 0) == elem(zz(), 0));
    CHECK(v.at(1, 0) == elem(zz(), 0));
    CHECK(v.at(1, 1) == elem(zz(), 0));

    CHECK(eval(f, Mat(zz(), 2)).is_zero());
    (void)gi;
}

TEST_CASE("entry polynomials") {
    std::vector<MatrixTerm> ts;
    Mat a1(zz(), 2);
    a1.at(0, 0) = elem(zz(), 1);
    Mat a2(zz(), 2);
    a2.at(0, 0) = elem(zz(), -1);
    a2.at(0, 1) = elem(zz(), 2);
    ts.push_back({3, a1});
    ts.push_back({1, a2});
    MatrixPoly f(zz(), 2, std::move(ts));

    CHECK(entry_poly(f, 0, 0) == poly_z({{3, 1}, {1, -1}}));
    CHECK(entry_poly(f, 0, 1) == poly_z({{1, 2}}));
    CHECK(entry_poly(f, 1, 1).is_zero());
    CHECK_THROWS(entry_poly(f, 0, 2));
}

TEST_CASE("fixed divisor over Z") {
    CHECK(fixdiv_int(power_diff(2, 1)) == 2);
    CHECK(fixdiv_int(power_diff(5, 1)) == 30);
    CHECK(fixdiv_int(poly_z({{1, 1}})) == 1);
    CHECK(fixdiv_int(poly_z({})) == 0);
    CHECK(fixdiv_int(poly_z({{0, -6}})) == 6);

    CHECK(fixdiv_int(power_diff(2, 1)) == brute_gcd(power_diff(2, 1), -10, 10));
    CHECK(fixdiv_int(power_diff(5, 1)) == brute_gcd(power_diff(5, 1), -10, 10));
}

TEST_CASE("dense and sparse paths agree") {
    CHECK(fixdiv_int_dense(power_diff(16, 4)) == fixdiv_int_sparse(power_diff(16, 4)));
    SplitMix64 rng(101);
    for (int i = 0; i < 60; ++i) {
        ScalarPoly g = random_sparse(rng, zz(), 4, 64, 50);
        CAPTURE(g.to_string());
        CHECK(fixdiv_int_dense(g) == fixdiv_int_sparse(g));
    }
}

TEST_CASE("fixed divisor maximality certificate") {
    // For each prime power not dividing the result, some point value must be
    // nonzero modulo it.
    SplitMix64 rng(103);
    std::vector<long> primes;
    for (long p = 2; p <= 1000; ++p) {
        bool is_p = true;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) is_p = false;
        if (is_p) primes.push_back(p);
    }
    for (int trial = 0; trial < 5; ++trial) {
        ScalarPoly g = random_sparse(rng, zz(), 3, 24, 20);
        if (g.is_zero()) continue;
        mpz_class d = fixdiv_int(g);
        for (long p : primes) {
            for (mpz_class pe = p; pe <= 1000; pe *= p) {
                if (mpz_divisible_p(d.get_mpz_t(), pe.get_mpz_t())) continue;
                bool witness = false;
                for (mpz_class a = 0; a < pe && !witness; ++a) {
                    mpz_class v = eval(g, RingElem(zz(), a)).a() % pe;
                    if (v != 0) witness = true;
                }
                CHECK(witness);
                break;  // larger powers of p fail a fortiori
            }
        }
    }
}

TEST_CASE("fixed divisor over quadratic rings") {
    RingDesc gi = gauss();
    ScalarPoly g(gi, {{2, elem(gi, 1)}, {1, elem(gi, -1)}});
    Ideal d = fixdiv_ring(g);
    CHECK(d == Ideal::principal(elem(gi, 1, 1)));
    CHECK(d == brute_box_ideal(g, 10));

    // the general path over Z coincides with fixdiv_int
    ScalarPoly gz = power_diff(2, 1);
    Ideal dz = fixdiv_ring(gz);
    CHECK(dz == Ideal::principal(elem(zz(), 2)));
    CHECK(dz.g() == fixdiv_int(gz));

    ScalarPoly constant(gi, {{0, elem(gi, 3, 1)}});
    CHECK(fixdiv_ring(constant) == Ideal::principal(elem(gi, 3, 1)));

    // half-integer basis: w^2 - w = -1 in the d=3 ring, so x^2 - x takes a
    // unit value and the fixed divisor collapses to (1)
    RingDesc r3 = ring_d(3);
    ScalarPoly g3(r3, {{2, elem(r3, 1)}, {1, elem(r3, -1)}});
    CHECK(fixdiv_ring(g3).is_unit());
    CHECK(fixdiv_ring(g3) == brute_box_ideal(g3, 10));

    SplitMix64 rng(107);
    for (unsigned long dd : {1UL, 2UL, 3UL, 7UL}) {
        RingDesc r = ring_d(dd);
        for (int i = 0; i < 10; ++i) {
            ScalarPoly h = random_sparse(rng, r, 3, 12, 6);
            CAPTURE(h.to_string());
            CHECK(fixdiv_ring(h) == brute_box_ideal(h, 10));
        }
    }
}

TEST_CASE("fixed divisor caps") {
    ScalarPoly g = poly_z({{1, 1000}});
    CHECK_THROWS_AS((void)fixdiv_int_sparse(g, 10), FixdivCapError);
    try {
        (void)fixdiv_int_sparse(g, 10);
    } catch (const FixdivCapError& e) {
        REQUIRE_FALSE(e.best().is_zero());
        CHECK(e.best().g() == 1000);  // generated by actual values
    }

    RingDesc gi = gauss();
    ScalarPoly h(gi, {{1, elem(gi, 0, 50)}});
    CHECK_THROWS_AS((void)fixdiv_ring(h, 100), FixdivCapError);
}

TEST_CASE("matrix fixed divisor") {
    std::vector<MatrixTerm> ts;
    ts.push_back({2, Mat::identity(zz(), 2)});
    ts.push_back({1, -Mat::identity(zz(), 2)});
    MatrixPoly f(zz(), 2, std::move(ts));

    MatrixFixdiv d = fixdiv_matrix(f);
    CHECK(d.certified);
    CHECK(d.ideal.is_unit());

    // brute-force lower bound over a small entry box reaches the same ideal
    Ideal brute = Ideal::zero(zz());
    for (long a = -2; a <= 2 && !brute.is_unit(); ++a)
        for (long b = -2; b <= 2 && !brute.is_unit(); ++b)
            for (long c = -2; c <= 2 && !brute.is_unit(); ++c)
                for (long e = -2; e <= 2 && !brute.is_unit(); ++e) {
                    Mat m(zz(), 2);
                    m.at(0, 0) = elem(zz(), a);
                    m.at(0, 1) = elem(zz(), b);
                    m.at(1, 0) = elem(zz(), c);
                    m.at(1, 1) = elem(zz(), e);
                    brute = ideal_join(brute, entry_ideal(eval(f, m)));
                }
    CHECK(brute == d.ideal);

    // one-dimensional collapse
    std::vector<MatrixTerm> t1;
    Mat one(zz(), 1);
    one.at(0, 0) = elem(zz(), 1);
    Mat neg(zz(), 1);
    neg.at(0, 0) = elem(zz(), -1);
    t1.push_back({2, one});
    t1.push_back({1, neg});
    MatrixPoly f1(zz(), 1, std::move(t1));
    MatrixFixdiv d1 = fixdiv_matrix(f1);
    CHECK(d1.certified);
    CHECK(d1.ideal.g() == 2);
    CHECK(d1.ideal.g() == fixdiv_int(power_diff(2, 1)));

    // single term with identity coefficient
    std::vector<MatrixTerm> t2;
    t2.push_back({1, Mat::identity(zz(), 2)});
    MatrixPoly f2(zz(), 2, std::move(t2));
    CHECK(fixdiv_matrix(f2).ideal.is_unit());

    // zero polynomial
    MatrixPoly f0(zz(), 2, {});
    MatrixFixdiv d0 = fixdiv_matrix(f0);
    CHECK(d0.certified);
    CHECK(d0.ideal.is_zero());
}

TEST_CASE("sampled mode is contained in exact mode") {
    SplitMix64 rng(109);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<MatrixTerm> ts;
        int k = 1 + static_cast<int>(rng.next() % 3);
        for (int i = 0; i < k; ++i)
            ts.push_back({rng.next() % 5, random_mat(rng, zz(), 2, 3)});
        MatrixPoly f(zz(), 2, std::move(ts));
        MatrixFixdiv exact = fixdiv_matrix(f);
        MatrixFixdiv sampled = fixdiv_matrix(f, FixdivMode::sampled(200, trial));
        CHECK(exact.certified);
        CHECK_FALSE(sampled.certified);
        CHECK(exact.ideal.contains(sampled.ideal));
    }
}

TEST_CASE("sampled mode is reproducible") {
    std::vector<MatrixTerm> ts;
    ts.push_back({3, Mat::identity(zz(), 2)});
    ts.push_back({1, -Mat::identity(zz(), 2)});
    MatrixPoly f(zz(), 2, std::move(ts));
    MatrixFixdiv a = fixdiv_matrix(f, FixdivMode::sampled(500, 42));
    MatrixFixdiv b = fixdiv_matrix(f, FixdivMode::sampled(500, 42));
    CHECK(a.ideal == b.ideal);
}

TEST_CASE("matrix fixed divisor collapses to the scalar one at n = 1") {
    SplitMix64 rng(113);
    for (unsigned long dd : {1UL, 2UL}) {
        RingDesc r = ring_d(dd);
        for (int i = 0; i < 8; ++i) {
            ScalarPoly g = random_sparse(rng, r, 3, 8, 4);
            if (g.is_zero()) continue;
            std::vector<MatrixTerm> ts;
            for (const ScalarTerm& t : g.terms()) ts.push_back({t.exp, Mat::scalar(r, 1, t.coeff)});
            MatrixPoly f(r, 1, std::move(ts));
            CHECK(fixdiv_matrix(f).ideal == fixdiv_ring(g));
        }
    }
}

TEST_CASE("matrix fixed divisor contains every entry polynomial's fixed divisor") {
    SplitMix64 rng(127);
    for (int trial = 0; trial < 10; ++trial) {
        RingDesc r = (trial % 2 == 0) ? zz() : gauss();
        std::vector<MatrixTerm> ts;
        int k = 1 + static_cast<int>(rng.next() % 2);
        for (int i = 0; i < k; ++i)
            ts.push_back({rng.next() % 4, random_mat(rng, r, 2, 2)});
        MatrixPoly f(r, 2, std::move(ts));
        if (f.is_zero()) continue;
        MatrixFixdiv d = fixdiv_matrix(f);
        REQUIRE(d.certified);
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) {
                Ideal dg = fixdiv_ring(entry_poly(f, p, q));
                CHECK(d.ideal.contains(dg));
            }
    }
}
