#include "egr/density.hpp"

#include <cmath>
#include <stdexcept>

#include "egr/arith.hpp"
#include "egr/setzer.hpp"
#include "doctest.h"

using namespace egr;

TEST_CASE("family_for: validation and frozen specs") {
    CHECK_THROWS_AS(family_for(0), std::invalid_argument);
    CHECK_THROWS_AS(family_for(1), std::invalid_argument);
    CHECK_THROWS_AS(family_for(-1), std::invalid_argument);
    CHECK_THROWS_AS(family_for(4), std::invalid_argument);

    FamilySpec f2 = family_for(2);
    CHECK(f2.eps == -1);
    CHECK(f2.sign_q == 1);
    CHECK(f2.odd_primes.empty());
    CHECK(f2.even_extra);
    CHECK(f2.delta == 1);
    CHECK(f2.has_residue);
    CHECK(f2.residue == 3);  // q = D+1 (mod 8)
    CHECK(f2.r == 1);
    CHECK(f2.alpha == doctest::Approx(0.5));
    CHECK(f2.real_field);

    FamilySpec f37 = family_for(37);
    CHECK(f37.eps == 1);
    CHECK(f37.sign_q == -1);
    REQUIRE(f37.odd_primes.size() == 1);
    CHECK(f37.odd_primes[0] == 37);
    CHECK_FALSE(f37.even_extra);
    CHECK(f37.has_residue);
    CHECK(f37.residue == 1);  // 37 = -3 (mod 8): q = D+4 (mod 8)
    CHECK(f37.alpha == doctest::Approx(0.5));
    CHECK_FALSE(f37.real_field);

    FamilySpec f26 = family_for(-26);
    CHECK(f26.eps == -1);
    CHECK(f26.sign_q == 1);
    REQUIRE(f26.odd_primes.size() == 1);
    CHECK(f26.odd_primes[0] == 13);
    CHECK(f26.even_extra);
    CHECK(f26.delta == -1);  // -13 = 3 (mod 4)
    CHECK(f26.has_residue);
    CHECK(f26.residue == 7);  // -25 = 7 (mod 8)
    CHECK(f26.r == 2);
    CHECK(f26.alpha == doctest::Approx(0.75));
    CHECK_FALSE(f26.real_field);

    FamilySpec f7 = family_for(-7);
    CHECK(f7.sign_q == -1);
    CHECK_FALSE(f7.has_residue);  // -7 = 1 (mod 8): no mod-8 pin
    CHECK(f7.real_field);

    FamilySpec f79 = family_for(79);
    CHECK(f79.sign_q == 1);
    CHECK_FALSE(f79.has_residue);  // 79 = -1 (mod 8)
    CHECK(f79.real_field);
}

TEST_CASE("family membership is sound for the divisor conditions") {
    // every accepted q yields a square-free m = D*q passing all five
    // conditions; the sieve family may be a strict subset of the passing set
    for (long D : {2L, 37L, -26L, -7L, 79L}) {
        FamilySpec spec = family_for(D);
        int members = 0;
        for (long k = 1; k <= 1000; ++k) {
            mpz_class q = spec.sign_q * k;
            mpz_class m = D * q;
            if (m == 1 || squarefree_part(m).second != 1) {
                CHECK_FALSE(spec.accepts(q));
                continue;
            }
            CAPTURE(D); CAPTURE(k);
            if (spec.accepts(q)) {
                CHECK(check_conditions(D, q).pass());
                ++members;
            }
        }
        CHECK(members > 0);
        // the family never accepts wrong-sign or non-square-free q
        CHECK_FALSE(spec.accepts(-spec.sign_q * 3));
        CHECK_FALSE(spec.accepts(spec.sign_q * 9));
    }

    // converse: for one-prime D without a mod-8 pin finer than the
    // conditions, every passing q is a family member -- condition (b) is
    // per-prime already and reciprocity turns it into the family's splitting
    // constraint, while (a) follows by multiplicativity
    for (long D : {2L, -7L, 79L}) {
        FamilySpec spec = family_for(D);
        for (long k = 1; k <= 1000; ++k) {
            mpz_class q = spec.sign_q * k;
            mpz_class m = D * q;
            if (m == 1 || squarefree_part(m).second != 1) continue;
            CAPTURE(D); CAPTURE(k);
            CHECK(spec.accepts(q) == check_conditions(D, q).pass());
        }
    }

    // D = 37 pins q = D+4 = 1 (mod 8), finer than condition (d)'s mod-4
    // congruence: q = -3 = 5 (mod 8) passes all five conditions yet lies
    // outside the family
    FamilySpec f37 = family_for(37);
    CHECK(f37.has_residue);
    CHECK(f37.residue == 1);
    CHECK_FALSE(f37.accepts(-3));
    CHECK(check_conditions(37, -3).pass());

    // strictness for two-prime D: q = 703 = 19 * 37 passes the five
    // conditions for D = -26 because (2|19) = (19|13) = -1 and
    // (2|37) = (37|13) = -1 cancel in the products (a) and (b), while the
    // per-prime sieve family rejects both primes
    FamilySpec f26 = family_for(-26);
    CHECK_FALSE(f26.accepts(703));
    CHECK_FALSE(f26.accepts_prime(19));
    CHECK_FALSE(f26.accepts_prime(37));
    CHECK(check_conditions(-26, 703).pass());
    CHECK(kronecker(2, 19) == -1);
    CHECK(kronecker(19, 13) == -1);
    CHECK(kronecker(2, 37) == -1);
    CHECK(kronecker(37, 13) == -1);
}

TEST_CASE("count_family matches the naive member count") {
    for (long D : {2L, 37L, -26L}) {
        FamilySpec spec = family_for(D);
        CountReport rep = count_family(spec, 3000);
        REQUIRE(!rep.grid.empty());
        CHECK(rep.label == std::string("D=") + mpz_class(D).get_str());
        CHECK(rep.grid.back() == 3000);
        uint64_t naive = 0;
        for (long k = 1; k <= 3000; ++k)
            if (spec.accepts(spec.sign_q * k)) ++naive;
        CHECK(rep.counts.back() == naive);
        // normalized = count * (log X)^alpha / X
        double X = 3000.0;
        double expect = static_cast<double>(naive) * std::pow(std::log(X), spec.alpha) / X;
        CHECK(rep.normalized.back() == doctest::Approx(expect));
    }
}

TEST_CASE("count_family: frozen small counts and grid shape") {
    CHECK_THROWS_AS(count_family(family_for(2), 5), std::invalid_argument);
    CountReport rep = count_family(family_for(2), 10);
    REQUIRE(rep.grid.size() == 1);
    CHECK(rep.grid[0] == 10);
    CHECK(rep.counts[0] == 1);  // q = 3 only
    CountReport rep2 = count_family(family_for(2), 120);
    REQUIRE(rep2.grid.size() == 3);  // 10, 100, 120
    CHECK(rep2.grid[1] == 100);
    CHECK(rep2.counts[1] == 8);  // 3, 11, 19, 43, 51, 59, 67, 83
    CHECK(rep2.grid[2] == 120);
}

TEST_CASE("aggregate counts by absolute discriminant") {
    // real fields from D=2: |disc| = 8q
    CountReport R = aggregate_RX(100);
    CHECK(R.counts.back() == 2);  // q = 3, 11
    CHECK(aggregate_RX(25).counts.back() == 1);   // only q = 3 (8*3 = 24 < 25)
    CHECK(aggregate_RX(24).counts.back() == 0);   // strict inequality
    // imaginary fields from D=37: |disc| = 37|q|
    CHECK(aggregate_IX(10).counts.back() == 0);
    CHECK(aggregate_IX(1000).counts.back() == 1);  // q = -7: 259 < 1000
}

TEST_CASE("growth_check needs three nonzero grid points") {
    CountReport tiny = count_family(family_for(2), 100);  // grid 10, 100
    CHECK_THROWS_AS(growth_check(tiny), std::domain_error);
    CountReport ok = count_family(family_for(2), 10000);
    GrowthTable g = growth_check(ok);
    REQUIRE(g.grid.size() >= 3);
    REQUIRE(g.ratios.size() == g.normalized.size() - 1);
    CHECK(g.drift >= 0.0);
    double mx = g.normalized.front(), mn = g.normalized.front();
    for (double v : g.normalized) { mx = std::max(mx, v); mn = std::min(mn, v); }
    CHECK(g.drift == doctest::Approx(mx / mn - 1.0));
}

TEST_CASE("csv renderings") {
    CountReport rep = count_family(family_for(2), 10);
    std::string csv = count_csv(rep);
    CHECK(csv.rfind("X,count,normalized\n", 0) == 0);
    CHECK(csv.find("10,1,") != std::string::npos);
    std::string csvl = count_csv_long({rep});
    CHECK(csvl.rfind("family,X,count,normalized\n", 0) == 0);
    CHECK(csvl.find("D=2,10,1,") != std::string::npos);
}
