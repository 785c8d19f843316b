// Local solvability machinery for the conic x^2 - m y^2 = c z^2.

#pragma once

#include <gmpxx.h>

namespace egr {

// Hilbert symbol (a, b)_p for nonzero integers a, b; p = 0 denotes the real
// place, otherwise p must be prime.  Returns +1 or -1.
int hilbert_symbol(const mpz_class& a, const mpz_class& b, const mpz_class& p);

// Whether x^2 - m y^2 = c z^2 has a nontrivial rational solution, decided by
// the product formula over the real place and the primes dividing 2mc.
// Requires m, c nonzero.
bool conic_is_solvable(const mpz_class& m, const mpz_class& c);

}  // namespace egr
