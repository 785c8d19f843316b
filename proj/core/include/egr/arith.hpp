// Exact integer arithmetic: primality, factoring, square-free decomposition,
// Kronecker symbol, prime sieve.  Everything is deterministic: primality is
// Miller-Rabin with fixed bases below 2^64 and 64 rounds of mpz_probab_prime_p
// above (error < 2^-128); Pollard rho uses a fixed parameter sequence so equal
// inputs always give byte-identical factorizations.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace egr {

struct Factorization {
    int sign = 1;  // +1 or -1
    std::vector<std::pair<mpz_class, unsigned>> factors;  // (prime, exponent), primes ascending

    mpz_class value() const {
        mpz_class v = sign;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; i++) v *= p;
        return v;
    }
};

// Primality of |n|; n in {0, +-1} is not prime.
bool is_prime(const mpz_class& n);

// Full factorization of n != 0.  Intended scale: |n| up to ~10^18 quickly,
// larger smooth numbers fine (trial division strips small primes first).
Factorization factor(const mpz_class& n);

// n = d * t^2 with d square-free, sign(d) = sign(n), t > 0.
std::pair<mpz_class, mpz_class> squarefree_part(const mpz_class& n);

// Kronecker symbol (a/n), n != 0.  Multiplicative in both arguments; equals
// the Legendre symbol for odd prime n.
int kronecker(const mpz_class& a, const mpz_class& n);

// All primes <= limit, ascending.  limit >= 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

}  // namespace egr
