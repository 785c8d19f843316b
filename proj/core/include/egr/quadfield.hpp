// Arithmetic in K = Q(sqrt(m)) for square-free m (m != 0, 1), exactly.
//
// Conventions used throughout:
//  - Elements are stored as a + b*sqrt(m) with rational a, b.
//  - theta denotes the standard integral generator: theta = (1+sqrt(m))/2 when
//    m = 1 (mod 4), else theta = sqrt(m); O_K = Z[theta].  x is integral iff
//    its theta-coordinates are integers.
//  - A prime ideal P above p is identified by p, its splitting kind, and a
//    root datum: for odd p (and ramified 2) the root c in [0,p) with
//    c^2 = m (mod p), so P = (p, sqrt(m) - c); for split 2 (m = 1 mod 8),
//    where both ideals share c = 1 (mod 2), the root r in {0,1} of
//    X^2 - X - (m-1)/4, so P = (2, theta - r).
//  - Valuations are computed by stripping rational-prime content in the theta
//    basis plus a single residue test (no completion arithmetic).  For split P
//    the identities v_P(x) + v_Pbar(x) = v_p(N(x)) hold; for inert P,
//    v_P = v_p(N)/2; for ramified P, v_P = v_p(N).
//  - Residues at split p of elements with p-power denominators (which arise
//    from dividing by a uniformizer) are evaluated through a Hensel-lifted
//    root of theta's minimal polynomial, to whatever precision the
//    denominator requires.  This is exact.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace egr {

class QuadraticField {
  public:
    // Throws unless m is square-free and m != 0, 1.
    explicit QuadraticField(const mpz_class& m);

    const mpz_class& m() const { return m_; }
    const mpz_class& discriminant() const { return disc_; }
    bool m_is_1_mod_4() const { return one_mod_4_; }

    bool operator==(const QuadraticField& o) const { return m_ == o.m_; }

  private:
    mpz_class m_;
    mpz_class disc_;
    bool one_mod_4_;
};

class FieldElement {
  public:
    FieldElement(const QuadraticField& K, const mpq_class& a, const mpq_class& b)
        : K_(K), a_(a), b_(b) {}
    // rational constant
    static FieldElement from_rational(const QuadraticField& K, const mpq_class& a) {
        return FieldElement(K, a, 0);
    }
    static FieldElement sqrt_m(const QuadraticField& K) { return FieldElement(K, 0, 1); }

    const QuadraticField& field() const { return K_; }
    const mpq_class& a() const { return a_; }  // rational part
    const mpq_class& b() const { return b_; }  // sqrt(m) coefficient

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    FieldElement conjugate() const { return FieldElement(K_, a_, -b_); }
    mpq_class norm() const;   // a^2 - m b^2
    mpq_class trace() const { return 2 * a_; }

    bool is_integral() const;
    // Coordinates (s, t) with x = s + t*theta; throws if not integral.
    std::pair<mpz_class, mpz_class> integral_coords() const;
    // Same but rational (always defined).
    std::pair<mpq_class, mpq_class> theta_coords() const;

    FieldElement operator-() const { return FieldElement(K_, -a_, -b_); }
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;  // exact; throws on 0
    bool operator==(const FieldElement& o) const { return a_ == o.a_ && b_ == o.b_; }

    FieldElement operator*(const mpq_class& c) const { return FieldElement(K_, a_ * c, b_ * c); }
    FieldElement operator/(const mpq_class& c) const;
    FieldElement pow(unsigned long e) const;

    std::string str() const;  // "a + b*sqrt(m)" rendering

  private:
    QuadraticField K_;
    mpq_class a_, b_;
};

inline FieldElement operator*(const mpq_class& c, const FieldElement& x) { return x * c; }

enum class SplitKind { split, inert, ramified };

struct PrimeIdeal {
    QuadraticField field;
    mpz_class p;       // rational prime below
    SplitKind kind;
    mpz_class root;    // see header comment for semantics
    bool omega_root = false;  // true iff root is an omega-root (split 2, m = 1 mod 8)

    long ramification_index() const { return kind == SplitKind::ramified ? 2 : 1; }
    long residue_degree() const { return kind == SplitKind::inert ? 2 : 1; }
    mpz_class ideal_norm() const;  // p^f
    long residue_char_small() const;  // p as long if it fits, else throws

    // Element of valuation exactly 1 at this P and 0 at the conjugate.
    FieldElement uniformizer() const;

    bool operator==(const PrimeIdeal& o) const {
        return field == o.field && p == o.p && kind == o.kind && root == o.root;
    }
    // ordering for reports: by (p, root)
    bool operator<(const PrimeIdeal& o) const {
        if (p != o.p) return p < o.p;
        return root < o.root;
    }

    std::string str() const;  // "(p, sqrt(m)-c)" / "(2, w-r)" / "(p)" rendering
};

// All primes above rational prime p (p prime, positive), sorted by root.
std::vector<PrimeIdeal> split_prime(const QuadraticField& K, const mpz_class& p);

// v_P(x) for x != 0 (throws on x = 0).  Works for any x in K^x.
long valuation(const FieldElement& x, const PrimeIdeal& P);

// Residue field O_K/P and its elements.  f = 1: value stored in u (v = 0).
// f = 2: u + v*thetabar where thetabar is the class of theta, with
// thetabar^2 = A*thetabar + B the reduction of theta's minimal polynomial.
// FFElem is a plain value; all arithmetic goes through the ResidueField.
struct FFElem {
    mpz_class u, v;

    bool is_zero() const { return u == 0 && v == 0; }
    bool operator==(const FFElem& o) const { return u == o.u && v == o.v; }
};

class ResidueField {
  public:
    explicit ResidueField(const PrimeIdeal& P);

    const PrimeIdeal& prime() const { return P_; }
    const mpz_class& characteristic() const { return p_; }
    int degree() const { return f_; }
    mpz_class size() const { return f_ == 2 ? p_ * p_ : p_; }

    FFElem zero() const { return {0, 0}; }
    FFElem one() const { return {mpz_class(1 % p_), 0}; }
    FFElem from_int(const mpz_class& n) const { return {mod_p(n), 0}; }

    // Reduce x mod P.  Requires v_P(x) >= 0; for split P the coordinates may
    // carry p-power denominators (handled via Hensel lifting), otherwise
    // denominators must be prime to p.
    FFElem reduce(const FieldElement& x) const;

    // A lift to O_K (theta-basis coordinates = (u, v)).
    FieldElement lift(const FFElem& e) const;

    FFElem add(const FFElem& x, const FFElem& y) const;
    FFElem sub(const FFElem& x, const FFElem& y) const;
    FFElem mul(const FFElem& x, const FFElem& y) const;
    FFElem neg(const FFElem& x) const;
    FFElem inv(const FFElem& x) const;  // throws on 0
    FFElem pow(const FFElem& x, const mpz_class& e) const;
    FFElem sqrt_char2(const FFElem& x) const;  // Frobenius preimage; char 2 only

    // All field elements (for small fields; throws if size > 10^6).
    std::vector<FFElem> all_elements() const;

  private:
    mpz_class mod_p(const mpz_class& n) const {
        mpz_class r = n % p_;
        if (r < 0) r += p_;
        return r;
    }
    PrimeIdeal P_;
    mpz_class p_;
    int f_;
    mpz_class A_, B_;  // thetabar^2 = A*thetabar + B (f = 2 only)
};

// Residue of x in O_K/P (the k = 1 residue field).
FFElem residue(const FieldElement& x, const PrimeIdeal& P);

// Canonical value of x in O_K/P^k for split or odd-ramified-free cases:
// split/ramified p: an integer mod p^k via the lifted root (split) or direct
// reduction (ramified requires k = 1); inert p: theta-coordinates mod p^k.
// Use congruent_mod for the general congruence test v_P(x - y) >= k.
std::vector<mpz_class> residue_mod(const FieldElement& x, const PrimeIdeal& P, unsigned k);
bool congruent_mod(const FieldElement& x, const FieldElement& y, const PrimeIdeal& P, unsigned k);

// Hensel-lift the root datum of split P to a root of theta's minimal
// polynomial mod p^k (returns the sqrt(m)-root for theta = sqrt(m), the
// omega-root for theta = omega).
mpz_class lifted_root(const PrimeIdeal& P, unsigned k);

}  // namespace egr
