// Sieve-backed counting of the quadratic-field families proving the density
// lower bounds: for a good D, the generated q give m = D*q passing every
// divisor condition, and the member count grows like X / (log X)^alpha.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace egr {

struct FamilySpec {
    mpz_class D;
    int eps = 0;                        // epsilon(D)
    int sign_q = 0;                     // -eps: the sign of every accepted q
    std::vector<mpz_class> odd_primes;  // odd primes dividing D
    bool even_extra = false;            // D even: require (-2*delta | q_j) = 1
    int delta = 0;                      // +1 iff D/2 = 1 (mod 4)
    bool has_residue = false;           // mod-8 pin on the signed q
    long residue = 0;                   // in [0, 8)
    unsigned r = 0;                     // number of distinct primes of D
    double alpha = 0.0;                 // 1 - 2^{-r}
    bool real_field = false;            // true iff accepted m = D*q are positive

    // whether the prime p may divide q
    bool accepts_prime(const mpz_class& p) const;
    // full membership test for a signed q
    bool accepts(const mpz_class& q) const;
};

// Family rules for a good D (square-free, outside {0, +-1}; throws otherwise):
// sign(q) = -eps(D); every prime q_j | q needs (q_j | p_i) = 1 at the odd
// primes p_i | D, plus (-2*delta | q_j) = 1 for even D; the signed q is pinned
// mod 8 to D+1 (D even) or D+4 (D = +-3 mod 8).
FamilySpec family_for(const mpz_class& D);

struct CountReport {
    std::string label;
    double alpha = 0.0;
    std::vector<uint64_t> grid;       // thresholds, ascending
    std::vector<uint64_t> counts;
    std::vector<double> normalized;   // count * (log X)^alpha / X
};

// Count members with |q| <= X at a geometric grid (powers of 10 from
// grid_start, plus X itself).  Requires X >= 10.
CountReport count_family(const FamilySpec& spec, uint64_t X, uint64_t grid_start = 10);

// Real fields m = 2q in the D = 2 family, counted by |disc| = 8q < X.
CountReport aggregate_RX(uint64_t X, uint64_t grid_start = 10);
// Imaginary fields m = 37q (q < 0) in the D = 37 family, by |disc| = 37|q| < X.
CountReport aggregate_IX(uint64_t X, uint64_t grid_start = 10);

struct GrowthTable {
    std::vector<uint64_t> grid;      // grid points with nonzero counts
    std::vector<double> normalized;
    std::vector<double> ratios;      // successive normalized quotients
    double drift = 0.0;              // max/min - 1 over the normalized values
};

// Stability check of the normalized counts; requires at least 3 grid points
// with nonzero counts (throws std::domain_error otherwise).
GrowthTable growth_check(const CountReport& report);

std::string count_csv(const CountReport& report);  // header X,count,normalized
// header family,X,count,normalized
std::string count_csv_long(const std::vector<CountReport>& reports);

}  // namespace egr
