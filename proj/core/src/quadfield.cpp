#include "egr/quadfield.hpp"

#include <sstream>

#include "egr/arith.hpp"

namespace egr {

namespace {

mpz_class mod_pos(const mpz_class& a, const mpz_class& n) {
    mpz_class r = a % n;
    if (r < 0) r += n;
    return r;
}

mpz_class pow_mpz(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

mpz_class powmod(const mpz_class& b, const mpz_class& e, const mpz_class& n) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
    return r;
}

mpz_class invmod(const mpz_class& a, const mpz_class& n) {
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()))
        throw std::domain_error("invmod: not invertible");
    return r;
}

// v_p of a nonzero integer.
long val_p(const mpz_class& n, const mpz_class& p) {
    mpz_class q;
    return static_cast<long>(mpz_remove(q.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

// Square root of a mod odd prime p (a must be a residue; 0 allowed).
mpz_class sqrt_mod(const mpz_class& a_in, const mpz_class& p) {
    mpz_class a = mod_pos(a_in, p);
    if (a == 0) return 0;
    mpz_class r;
    if (mod_pos(p, 4) == 3) {
        r = powmod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        mpz_class q = p - 1;
        unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
        q >>= s;
        mpz_class z = 2;
        while (kronecker(z, p) != -1) ++z;
        mpz_class m = s, c = powmod(z, q, p), t = powmod(a, q, p);
        r = powmod(a, (q + 1) / 2, p);
        while (t != 1) {
            mpz_class tt = t;
            unsigned long i = 0;
            while (tt != 1) {
                tt = tt * tt % p;
                ++i;
            }
            mpz_class b = c;
            for (mpz_class j = 0; j < m - i - 1; ++j) b = b * b % p;
            m = i;
            c = b * b % p;
            t = t * c % p;
            r = r * b % p;
        }
    }
    if (mod_pos(r * r - a, p) != 0) throw std::domain_error("sqrt_mod: not a residue");
    return r;
}

// Hensel lift: root of f(X) = X^2 - m from mod p to mod p^k (p odd or p = 2
// never occurs here since f' = 2X).
mpz_class lift_sqrtm_root(const mpz_class& m, const mpz_class& p, const mpz_class& c0, unsigned k) {
    mpz_class r = c0, pk = p;
    for (unsigned j = 1; j < k; ++j) {
        mpz_class pk1 = pk * p;
        mpz_class f = mod_pos(r * r - m, pk1);
        mpz_class d = invmod(mod_pos(2 * r, p), p);
        r = mod_pos(r - f * d, pk1);
        pk = pk1;
    }
    return r;
}

// Hensel lift: root of f(X) = X^2 - X - (m-1)/4 from mod 2 to mod 2^k
// (f'(r) = 2r - 1 is odd, hence a unit).
mpz_class lift_omega_root(const mpz_class& m, const mpz_class& r0, unsigned k) {
    mpz_class B = (m - 1) / 4;
    mpz_class r = r0, pk = 2;
    for (unsigned j = 1; j < k; ++j) {
        mpz_class pk1 = pk * 2;
        mpz_class f = mod_pos(r * r - r - B, pk1);
        mpz_class d = invmod(mod_pos(2 * r - 1, pk1), pk1);
        r = mod_pos(r - f * d, pk1);
        pk = pk1;
    }
    return r;
}

}  // namespace

QuadraticField::QuadraticField(const mpz_class& m) : m_(m) {
    if (m == 0 || m == 1) throw std::invalid_argument("QuadraticField: m must not be 0 or 1");
    auto [core, sq] = squarefree_part(m);
    if (sq != 1) throw std::invalid_argument("QuadraticField: m must be square-free");
    one_mod_4_ = mod_pos(m, 4) == 1;
    disc_ = one_mod_4_ ? m : 4 * m;
}

mpq_class FieldElement::norm() const {
    mpq_class n = a_ * a_ - K_.m() * b_ * b_;
    n.canonicalize();
    return n;
}

std::pair<mpq_class, mpq_class> FieldElement::theta_coords() const {
    if (!K_.m_is_1_mod_4()) return {a_, b_};
    mpq_class s = a_ - b_, t = 2 * b_;
    s.canonicalize();
    t.canonicalize();
    return {s, t};
}

bool FieldElement::is_integral() const {
    auto [s, t] = theta_coords();
    return s.get_den() == 1 && t.get_den() == 1;
}

std::pair<mpz_class, mpz_class> FieldElement::integral_coords() const {
    auto [s, t] = theta_coords();
    if (s.get_den() != 1 || t.get_den() != 1)
        throw std::domain_error("integral_coords: element is not an algebraic integer");
    return {s.get_num(), t.get_num()};
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return FieldElement(K_, a_ + o.a_, b_ + o.b_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return FieldElement(K_, a_ - o.a_, b_ - o.b_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    return FieldElement(K_, a_ * o.a_ + K_.m() * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    mpq_class n = o.norm();
    if (n == 0) throw std::domain_error("FieldElement: division by zero");
    FieldElement num = *this * o.conjugate();
    return FieldElement(K_, num.a_ / n, num.b_ / n);
}

FieldElement FieldElement::operator/(const mpq_class& c) const {
    if (c == 0) throw std::domain_error("FieldElement: division by zero");
    return FieldElement(K_, a_ / c, b_ / c);
}

FieldElement FieldElement::pow(unsigned long e) const {
    FieldElement r = from_rational(K_, 1), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    std::string root = "sqrt(" + K_.m().get_str() + ")";
    if (b_ == 0) {
        os << a_.get_str();
    } else {
        std::string bs;
        mpq_class ab = abs(b_);
        if (ab == 1)
            bs = root;
        else
            bs = ab.get_str() + "*" + root;
        if (a_ == 0) {
            os << (b_ < 0 ? "-" : "") << bs;
        } else {
            os << a_.get_str() << (b_ < 0 ? " - " : " + ") << bs;
        }
    }
    return os.str();
}

mpz_class PrimeIdeal::ideal_norm() const {
    return kind == SplitKind::inert ? p * p : p;
}

long PrimeIdeal::residue_char_small() const {
    if (!p.fits_slong_p()) throw std::overflow_error("residue characteristic too large");
    return p.get_si();
}

FieldElement PrimeIdeal::uniformizer() const {
    const QuadraticField& K = field;
    switch (kind) {
        case SplitKind::inert:
            return FieldElement::from_rational(K, mpq_class(p));
        case SplitKind::ramified:
            if (p == 2 && mod_pos(K.m(), 4) == 3)
                return FieldElement(K, 1, 1);  // 1 + sqrt(m), norm valuation 1
            return FieldElement::sqrt_m(K);    // p | m, square-free
        case SplitKind::split: {
            if (p == 2) {
                // omega - r' with r' = (omega-root mod 4) + 2: N = f(r') has
                // v_2 exactly 1, and omega = r at P so v_P = 1, v_Pbar = 0.
                mpz_class r2 = lift_omega_root(K.m(), root, 2) + 2;
                // omega - r2 = (1 - 2 r2)/2 + sqrt(m)/2
                return FieldElement(K, mpq_class(mpz_class(1 - 2 * r2)) / 2, mpq_class(1, 2));
            }
            mpz_class c2 = lift_sqrtm_root(K.m(), p, root, 2) + p;
            return FieldElement(K, mpq_class(mpz_class(-c2)), 1);  // sqrt(m) - c2
        }
    }
    throw std::logic_error("unreachable");
}

std::string PrimeIdeal::str() const {
    std::ostringstream os;
    switch (kind) {
        case SplitKind::inert:
            os << "(" << p.get_str() << ")";
            break;
        case SplitKind::ramified:
        case SplitKind::split:
            if (p == 2 && omega_root) {
                os << "(2, w-" << root.get_str() << ")";
            } else if (root == 0) {
                os << "(" << p.get_str() << ", sqrt(" << field.m().get_str() << "))";
            } else {
                os << "(" << p.get_str() << ", sqrt(" << field.m().get_str() << ")-"
                   << root.get_str() << ")";
            }
            break;
    }
    return os.str();
}

std::vector<PrimeIdeal> split_prime(const QuadraticField& K, const mpz_class& p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("split_prime: p must be a prime");
    const mpz_class& m = K.m();
    if (p == 2) {
        if (K.m_is_1_mod_4()) {
            if (mod_pos(m, 8) == 1) {
                // X^2 - X - (m-1)/4 = X(X-1) mod 2: two ideals (2, w - r)
                PrimeIdeal P0{K, 2, SplitKind::split, 0, true};
                PrimeIdeal P1{K, 2, SplitKind::split, 1, true};
                return {P0, P1};
            }
            return {PrimeIdeal{K, 2, SplitKind::inert, 0, false}};
        }
        return {PrimeIdeal{K, 2, SplitKind::ramified, mod_pos(m, 2), false}};
    }
    if (mod_pos(m, p) == 0) return {PrimeIdeal{K, p, SplitKind::ramified, 0, false}};
    int kr = kronecker(m, p);
    if (kr == -1) return {PrimeIdeal{K, p, SplitKind::inert, 0, false}};
    mpz_class c = sqrt_mod(m, p);
    mpz_class c2 = p - c;
    if (c > c2) std::swap(c, c2);
    return {PrimeIdeal{K, p, SplitKind::split, c, false},
            PrimeIdeal{K, p, SplitKind::split, c2, false}};
}

mpz_class lifted_root(const PrimeIdeal& P, unsigned k) {
    if (P.kind != SplitKind::split) throw std::invalid_argument("lifted_root: split primes only");
    if (k == 0) throw std::invalid_argument("lifted_root: k must be positive");
    const mpz_class& m = P.field.m();
    if (P.p == 2) return lift_omega_root(m, P.root, k);
    mpz_class c = lift_sqrtm_root(m, P.p, P.root, k);
    if (!P.field.m_is_1_mod_4()) return c;
    // theta = omega: omega-root is (1 + c)/2 mod p^k
    mpz_class pk = pow_mpz(P.p, k);
    return mod_pos((1 + c) * invmod(2, pk), pk);
}

namespace {

// Residue of theta at a degree-one prime P, as an integer mod p.
mpz_class theta_bar(const PrimeIdeal& P) {
    const mpz_class& p = P.p;
    if (P.field.m_is_1_mod_4()) {
        if (P.omega_root) return P.root;  // split 2
        // odd p: omega = (1 + sqrt(m))/2, sqrt(m) = root (split/ramified)
        return mod_pos((1 + P.root) * invmod(2, p), p);
    }
    return mod_pos(P.root, p);  // theta = sqrt(m)
}

// Residue of an element with *integral* theta-coordinates (S, T).
FFElem reduce_integral(const ResidueField& F, const mpz_class& S, const mpz_class& T) {
    const PrimeIdeal& P = F.prime();
    if (F.degree() == 2) {
        FFElem r = F.from_int(S);
        FFElem th = {0, 1};
        return F.add(r, F.mul(F.from_int(T), th));
    }
    return F.from_int(S + T * theta_bar(P));
}

}  // namespace

long valuation(const FieldElement& x, const PrimeIdeal& P) {
    if (x.is_zero()) throw std::domain_error("valuation: zero element");
    auto [s, t] = x.theta_coords();
    mpz_class w;
    mpz_lcm(w.get_mpz_t(), s.get_den().get_mpz_t(), t.get_den().get_mpz_t());
    mpz_class S = s.get_num() * (w / s.get_den());
    mpz_class T = t.get_num() * (w / t.get_den());
    const mpz_class& p = P.p;
    long kw = val_p(w, p);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), S.get_mpz_t(), T.get_mpz_t());
    long gv = val_p(g, p);
    mpz_class pg = pow_mpz(p, static_cast<unsigned long>(gv));
    mpz_class S1 = S / pg, T1 = T / pg;

    long e = P.ramification_index();
    long base = e * (gv - kw);
    ResidueField F(P);
    FFElem r = reduce_integral(F, S1, T1);
    switch (P.kind) {
        case SplitKind::inert:
            return base;  // primitive part is a unit
        case SplitKind::ramified:
            return base + (r.is_zero() ? 1 : 0);
        case SplitKind::split: {
            if (!r.is_zero()) return base;
            // all of v_p(N) sits at P (the conjugate residue is nonzero)
            FieldElement prim = F.lift(FFElem{S1, T1});  // re-use theta->(a,b) conversion
            mpq_class n = prim.norm();
            return base + val_p(n.get_num(), p);
        }
    }
    throw std::logic_error("unreachable");
}

ResidueField::ResidueField(const PrimeIdeal& P) : P_(P), p_(P.p) {
    f_ = P.kind == SplitKind::inert ? 2 : 1;
    if (f_ == 2) {
        if (P.field.m_is_1_mod_4()) {
            A_ = mod_p(1);
            B_ = mod_p((P.field.m() - 1) / 4);
        } else {
            A_ = 0;
            B_ = mod_p(P.field.m());
        }
    }
}

FieldElement ResidueField::lift(const FFElem& e) const {
    const QuadraticField& K = P_.field;
    if (K.m_is_1_mod_4()) {
        // u + v*omega = (u + v/2) + (v/2) sqrt(m)
        return FieldElement(K, mpq_class(e.u) + mpq_class(e.v) / 2, mpq_class(e.v) / 2);
    }
    return FieldElement(K, mpq_class(e.u), mpq_class(e.v));
}

FFElem ResidueField::add(const FFElem& x, const FFElem& y) const {
    return {mod_p(x.u + y.u), mod_p(x.v + y.v)};
}

FFElem ResidueField::sub(const FFElem& x, const FFElem& y) const {
    return {mod_p(x.u - y.u), mod_p(x.v - y.v)};
}

FFElem ResidueField::neg(const FFElem& x) const { return {mod_p(-x.u), mod_p(-x.v)}; }

FFElem ResidueField::mul(const FFElem& x, const FFElem& y) const {
    if (f_ == 1) return {mod_p(x.u * y.u), 0};
    // (u1 + v1 t)(u2 + v2 t), t^2 = A t + B
    mpz_class uu = x.u * y.u + x.v * y.v * B_;
    mpz_class vv = x.u * y.v + x.v * y.u + x.v * y.v * A_;
    return {mod_p(uu), mod_p(vv)};
}

FFElem ResidueField::inv(const FFElem& x) const {
    if (x.is_zero()) throw std::domain_error("ResidueField: inverse of zero");
    if (f_ == 1) return {invmod(x.u, p_), 0};
    // conjugate of t is A - t; N(u + vt) = u^2 + A u v - B v^2
    mpz_class n = mod_p(x.u * x.u + A_ * x.u * x.v - B_ * x.v * x.v);
    mpz_class ni = invmod(n, p_);
    FFElem conj = {mod_p(x.u + A_ * x.v), mod_p(-x.v)};
    return {mod_p(conj.u * ni), mod_p(conj.v * ni)};
}

FFElem ResidueField::pow(const FFElem& x, const mpz_class& e_in) const {
    mpz_class e = e_in;
    if (e < 0) throw std::invalid_argument("ResidueField::pow: negative exponent");
    FFElem r = one(), b = x;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FFElem ResidueField::sqrt_char2(const FFElem& x) const {
    if (p_ != 2) throw std::domain_error("sqrt_char2: characteristic 2 only");
    return pow(x, size() / 2);
}

std::vector<FFElem> ResidueField::all_elements() const {
    if (size() > 1000000) throw std::length_error("residue field too large to enumerate");
    std::vector<FFElem> out;
    if (f_ == 1) {
        for (mpz_class u = 0; u < p_; ++u) out.push_back({u, 0});
    } else {
        for (mpz_class u = 0; u < p_; ++u)
            for (mpz_class v = 0; v < p_; ++v) out.push_back({u, v});
    }
    return out;
}

FFElem ResidueField::reduce(const FieldElement& x) const {
    if (x.is_zero()) return zero();
    auto [s, t] = x.theta_coords();
    mpz_class w;
    mpz_lcm(w.get_mpz_t(), s.get_den().get_mpz_t(), t.get_den().get_mpz_t());
    mpz_class S = s.get_num() * (w / s.get_den());
    mpz_class T = t.get_num() * (w / t.get_den());
    long kw = val_p(w, p_);
    if (kw == 0) {
        FFElem r = reduce_integral(*this, S, T);
        FFElem di = inv(from_int(w));
        return mul(r, di);
    }
    if (P_.kind != SplitKind::split)
        throw std::domain_error("reduce: element not integral at P");
    // x = (S + T*theta) / (p^kw * d'), p coprime to d'.  Embed theta via the
    // Hensel-lifted root R mod p^(kw+1); then x maps to (S + T R)/(p^kw d').
    unsigned prec = static_cast<unsigned>(kw) + 1;
    mpz_class pk1 = pow_mpz(p_, prec);
    mpz_class R = lifted_root(P_, prec);
    mpz_class num = mod_pos(S + T * R, pk1);
    mpz_class pk = pow_mpz(p_, static_cast<unsigned>(kw));
    if (num % pk != 0) throw std::domain_error("reduce: element not integral at P");
    mpz_class d1 = w / pk;
    mpz_class v = mod_p(num / pk);
    return {mod_p(v * invmod(mod_p(d1), p_)), 0};
}

FFElem residue(const FieldElement& x, const PrimeIdeal& P) {
    ResidueField F(P);
    return F.reduce(x);
}

std::vector<mpz_class> residue_mod(const FieldElement& x, const PrimeIdeal& P, unsigned k) {
    if (k == 0) throw std::invalid_argument("residue_mod: k must be positive");
    mpz_class pk = pow_mpz(P.p, k);
    if (x.is_zero()) {
        if (P.kind == SplitKind::inert) return {0, 0};
        return {0};
    }
    auto [s, t] = x.theta_coords();
    mpz_class w;
    mpz_lcm(w.get_mpz_t(), s.get_den().get_mpz_t(), t.get_den().get_mpz_t());
    mpz_class S = s.get_num() * (w / s.get_den());
    mpz_class T = t.get_num() * (w / t.get_den());
    long kw = val_p(w, P.p);
    switch (P.kind) {
        case SplitKind::inert: {
            if (kw > 0) throw std::domain_error("residue_mod: element not integral at P");
            mpz_class wi = invmod(mod_pos(w, pk), pk);
            return {mod_pos(S * wi, pk), mod_pos(T * wi, pk)};
        }
        case SplitKind::ramified: {
            if (k > 1)
                throw std::domain_error(
                    "residue_mod: O/P^k is not Z/p^k for ramified P; use congruent_mod");
            ResidueField F(P);
            FFElem r = F.reduce(x);
            return {r.u};
        }
        case SplitKind::split: {
            unsigned prec = k + static_cast<unsigned>(kw);
            mpz_class pkk = pow_mpz(P.p, prec);
            mpz_class R = lifted_root(P, prec);
            mpz_class num = mod_pos(S + T * R, pkk);
            mpz_class pw = pow_mpz(P.p, static_cast<unsigned>(kw));
            if (num % pw != 0) throw std::domain_error("residue_mod: element not integral at P");
            mpz_class d1 = w / pw;
            return {mod_pos((num / pw) * invmod(mod_pos(d1, pk), pk), pk)};
        }
    }
    throw std::logic_error("unreachable");
}

bool congruent_mod(const FieldElement& x, const FieldElement& y, const PrimeIdeal& P,
                   unsigned k) {
    FieldElement d = x - y;
    if (d.is_zero()) return true;
    return valuation(d, P) >= static_cast<long>(k);
}

}  // namespace egr
