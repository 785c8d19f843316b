#include "egr/conic.hpp"

#include <set>
#include <stdexcept>

#include "egr/arith.hpp"

namespace egr {

namespace {

// exponent parities of (u-1)/2 and (u^2-1)/8 for odd u
int eps2(const mpz_class& u) { return mpz_class(u % 4) == 1 || mpz_class(u % 4) == -3 ? 0 : 1; }
int omega2(const mpz_class& u) {
    mpz_class r = u % 8;
    if (r < 0) r += 8;
    return (r == 1 || r == 7) ? 0 : 1;
}

}  // namespace

int hilbert_symbol(const mpz_class& a, const mpz_class& b, const mpz_class& p) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("hilbert_symbol: p must be prime or 0");

    // a = p^alpha * a', b = p^beta * b'
    mpz_class ap(a), bp(b);
    unsigned long alpha = mpz_remove(ap.get_mpz_t(), ap.get_mpz_t(), p.get_mpz_t());
    unsigned long beta = mpz_remove(bp.get_mpz_t(), bp.get_mpz_t(), p.get_mpz_t());

    if (p == 2) {
        int e = eps2(ap) * eps2(bp) + static_cast<int>(alpha % 2) * omega2(bp) +
                static_cast<int>(beta % 2) * omega2(ap);
        return (e % 2 == 0) ? 1 : -1;
    }
    int sign = 1;
    if ((alpha % 2) && (beta % 2) && eps2(p)) sign = -sign;
    if (beta % 2) sign *= kronecker(ap, p);
    if (alpha % 2) sign *= kronecker(bp, p);
    return sign;
}

bool conic_is_solvable(const mpz_class& m, const mpz_class& c) {
    if (m == 0 || c == 0) throw std::invalid_argument("conic_is_solvable: m, c must be nonzero");
    // z^2 = x'^2 - m y'^2 rearranged: solvable iff (m, c)_v = 1 at every place
    if (hilbert_symbol(m, c, 0) != 1) return false;
    std::set<mpz_class> ps{mpz_class(2)};
    for (const auto& [p, e] : factor(m).factors) ps.insert(p);
    for (const auto& [p, e] : factor(c).factors) ps.insert(p);
    for (const mpz_class& p : ps)
        if (hilbert_symbol(m, c, p) != 1) return false;
    return true;
}

}  // namespace egr
