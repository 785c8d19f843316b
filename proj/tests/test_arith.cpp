#include "egr/arith.hpp"

#include <gmp.h>

#include "doctest.h"

using namespace egr;

TEST_CASE("primality: small, pseudoprime traps, large") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));         // Carmichael
    CHECK_FALSE(is_prime(3215031751));  // strong pseudoprime to bases 2,3,5,7
    CHECK(is_prime(mpz_class("1000000007")));
    CHECK(is_prime((mpz_class(1) << 61) - 1));  // Mersenne M61
    CHECK_FALSE(is_prime((mpz_class(1) << 67) - 1));
    // cross-check against GMP over a window
    for (int n = 2; n < 3000; n++) {
        CAPTURE(n);
        CHECK(is_prime(n) == (mpz_probab_prime_p(mpz_class(n).get_mpz_t(), 40) > 0));
    }
}

TEST_CASE("factor: signs, exponents, reconstruction") {
    using pe = std::pair<mpz_class, unsigned>;
    Factorization f = factor(6272);
    CHECK(f.sign == 1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == pe(2, 7));
    CHECK(f.factors[1] == pe(7, 2));
    CHECK(f.value() == 6272);

    f = factor(-34496);
    CHECK(f.sign == -1);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == pe(2, 6));
    CHECK(f.factors[1] == pe(7, 2));
    CHECK(f.factors[2] == pe(11, 1));
    CHECK(f.value() == -34496);

    CHECK(factor(1).factors.empty());
    CHECK(factor(1).value() == 1);
    CHECK(factor(-1).sign == -1);
    CHECK_THROWS(factor(0));
}

TEST_CASE("factor: beyond trial division") {
    // semiprime with both factors above the trial-division bound
    using pe = std::pair<mpz_class, unsigned>;
    mpz_class p = 1000003, q = 1000033;
    Factorization f = factor(p * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == pe(p, 1));
    CHECK(f.factors[1] == pe(q, 1));

    // prime-power of a large prime (perfect-power path)
    mpz_class cube = mpz_class(10007) * 10007 * 10007;
    f = factor(cube);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == pe(10007, 3));

    // mixed: 2^3 * 104723 * 104729
    mpz_class n = 8 * mpz_class(104723) * 104729;
    f = factor(n);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.value() == n);
}

TEST_CASE("squarefree_part") {
    auto check = [](const mpz_class& n, const mpz_class& d, const mpz_class& t) {
        auto [dd, tt] = squarefree_part(n);
        CAPTURE(n);
        CHECK(dd == d);
        CHECK(tt == t);
        CHECK(dd * tt * tt == n);
    };
    check(6272, 2, 56);
    check(2368, 37, 8);
    check(-5103, -7, 27);
    check(1, 1, 1);
    check(-1, -1, 1);
    check(97, 97, 1);
    check(-34496, -11, 56);  // -2^6 7^2 11: odd exponent only on 11
}

TEST_CASE("kronecker agrees with GMP everywhere") {
    for (int a = -60; a <= 60; a++) {
        for (int n = -60; n <= 60; n++) {
            if (n == 0) continue;
            CAPTURE(a);
            CAPTURE(n);
            CHECK(kronecker(a, n) ==
                  mpz_kronecker(mpz_class(a).get_mpz_t(), mpz_class(n).get_mpz_t()));
        }
    }
    // larger spot checks
    mpz_class big = mpz_class("982451653");  // prime
    CHECK(kronecker(5, big) == mpz_kronecker(mpz_class(5).get_mpz_t(), big.get_mpz_t()));
    CHECK(kronecker(-big, 997) == mpz_kronecker(mpz_class(-big).get_mpz_t(),
                                                mpz_class(997).get_mpz_t()));
    CHECK_THROWS(kronecker(3, 0));
}

TEST_CASE("kronecker: quadratic-residue meaning at odd primes") {
    // (a/p) = 1 exactly when a is a nonzero square mod p
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        std::vector<bool> sq(p, false);
        for (long x = 1; x < p; x++) sq[(x * x) % p] = true;
        for (long a = 1; a < p; a++) {
            CAPTURE(p);
            CAPTURE(a);
            CHECK(kronecker(a, p) == (sq[a] ? 1 : -1));
        }
        CHECK(kronecker(mpz_class(p), p) == 0);
    }
}

TEST_CASE("sieve_primes") {
    auto ps = sieve_primes(30);
    CHECK((ps == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
    CHECK((sieve_primes(2) == std::vector<std::uint64_t>{2}));
    CHECK(sieve_primes(10000).size() == 1229);
    auto million = sieve_primes(1000000);
    CHECK(million.size() == 78498);
    CHECK(million.back() == 999983);
    CHECK_THROWS(sieve_primes(1));
}
