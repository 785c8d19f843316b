#include "egr/arith.hpp"

#include <algorithm>
#include <map>

namespace egr {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for n < 2^64 with the standard 12-base set.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; s++; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; i++) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

const std::vector<u64>& small_primes() {
    static const std::vector<u64> ps = sieve_primes(10000);
    return ps;
}

// Brent-cycle Pollard rho; n odd composite, not a prime power of a small prime.
// Deterministic: c walks 1, 2, 3, ... until a factor splits off.
mpz_class rho_split(const mpz_class& n) {
    for (mpz_class c = 1;; c++) {
        mpz_class x = 2, y = 2, d = 1, q = 1, saved_x;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (d == 1) {
            saved_x = y;
            for (unsigned long i = 0; i < r; i++) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                mpz_class ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; i++) {
                    y = (y * y + c) % n;
                    mpz_class diff = saved_x - y;
                    if (diff < 0) diff = -diff;
                    if (diff != 0) q = q * diff % n;
                }
                d = gcd(q, n);
                if (d == n) {
                    // backtrack one step at a time
                    d = 1;
                    y = ys;
                    while (d == 1) {
                        y = (y * y + c) % n;
                        mpz_class diff = saved_x - y;
                        if (diff < 0) diff = -diff;
                        d = gcd(diff, n);
                    }
                    break;
                }
                k += lim;
            }
            r *= 2;
        }
        if (d != n) return d;
        // cycle collapsed onto n itself: retry with next c
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out[n]++; return; }
    // perfect power? (rho struggles on p^k): take the root if so
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); k++) {
            mpz_class root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::map<mpz_class, unsigned> sub;
                factor_into(root, sub);
                for (auto& [p, e] : sub) out[p] += e * k;
                return;
            }
        }
    }
    mpz_class d = rho_split(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_prime(const mpz_class& n) {
    mpz_class a = abs(n);
    if (a.fits_ulong_p()) return is_prime_u64(a.get_ui());
    if (mpz_sizeinbase(a.get_mpz_t(), 2) <= 64) {
        // doesn't fit ulong on this ABI only if > 64 bits, so unreachable; keep for safety
        return mpz_probab_prime_p(a.get_mpz_t(), 64) > 0;
    }
    return mpz_probab_prime_p(a.get_mpz_t(), 64) > 0;
}

Factorization factor(const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("factor: n must be nonzero");
    Factorization f;
    f.sign = (n < 0) ? -1 : 1;
    mpz_class rest = abs(n);
    std::map<mpz_class, unsigned> acc;
    for (u64 p : small_primes()) {
        if (rest == 1) break;
        mpz_class P = (unsigned long)p;
        if (P * P > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= P;
            acc[P]++;
        }
    }
    if (rest > 1) {
        if (is_prime(rest)) acc[rest]++;
        else factor_into(rest, acc);
    }
    f.factors.assign(acc.begin(), acc.end());
    return f;
}

std::pair<mpz_class, mpz_class> squarefree_part(const mpz_class& n) {
    Factorization f = factor(n);
    mpz_class d = f.sign, t = 1;
    for (const auto& [p, e] : f.factors) {
        if (e & 1) d *= p;
        for (unsigned i = 0; i < e / 2; i++) t *= p;
    }
    return {d, t};
}

int kronecker(const mpz_class& a_in, const mpz_class& n_in) {
    if (n_in == 0) throw std::invalid_argument("kronecker: n must be nonzero");
    mpz_class a = a_in, n = n_in;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;  // (a/-1)
    }
    if (n == 0) return 0;  // unreachable
    // strip factors of 2 from n: (a/2) = 0 for even a, else +-1 by a mod 8
    unsigned long e2 = mpz_scan1(n.get_mpz_t(), 0);
    if (e2 > 0) {
        if (mpz_even_p(a.get_mpz_t())) return 0;
        mpz_tdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), e2);
        if (e2 & 1) {
            unsigned long am8 = mpz_class(((a % 8) + 8) % 8).get_ui();
            if (am8 == 3 || am8 == 5) result = -result;
        }
    }
    // now n odd > 0: Jacobi loop
    a = ((a % n) + n) % n;
    while (a != 0) {
        unsigned long v = mpz_scan1(a.get_mpz_t(), 0);
        if (v > 0) {
            mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), v);
            if (v & 1) {
                unsigned long nm8 = mpz_class(n % 8).get_ui();
                if (nm8 == 3 || nm8 == 5) result = -result;
            }
        }
        // reciprocity: a, n odd positive
        if (mpz_class(a % 4) == 3 && mpz_class(n % 4) == 3) result = -result;
        std::swap(a, n);
        a = a % n;
    }
    return (n == 1) ? result : 0;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    if (limit < 2) throw std::invalid_argument("sieve_primes: limit must be >= 2");
    std::vector<bool> composite(limit + 1, false);
    std::vector<u64> primes;
    for (u64 i = 2; i <= limit; i++) {
        if (!composite[i]) {
            primes.push_back(i);
            for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
        }
        if (i * i > limit) break;
    }
    // finish collecting the remainder above sqrt(limit)
    u64 start = primes.empty() ? 2 : primes.back() + 1;
    for (u64 i = start; i <= limit; i++)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

}  // namespace egr
