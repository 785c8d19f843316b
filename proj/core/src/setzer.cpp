#include "egr/setzer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "egr/arith.hpp"

namespace egr {

namespace {

mpz_class mod_pos(const mpz_class& a, long n) {
    mpz_class r = a % n;
    if (r < 0) r += n;
    return r;
}

// all positive divisors of |m|, ascending
std::vector<mpz_class> positive_divisors(const mpz_class& m) {
    Factorization f = factor(m);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : f.factors) {
        size_t base = divs.size();
        mpz_class pk(1);
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t k = 0; k < base; ++k) divs.push_back(divs[k] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

const char* kCondNames = "abcde";

}  // namespace

bool in_R(const mpz_class& A) {
    if (mpz_divisible_ui_p(A.get_mpz_t(), 2)) {
        if (!mpz_divisible_ui_p(A.get_mpz_t(), 16) &&
            !mpz_divisible_ui_p(mpz_class(A - 4).get_mpz_t(), 16))
            return false;
    }
    if (mpz_divisible_ui_p(A.get_mpz_t(), 3)) {
        if (!mpz_divisible_ui_p(mpz_class(A - 12).get_mpz_t(), 27)) return false;
    }
    return true;
}

int epsilon(const mpz_class& D) { return mod_pos(D, 4) == 1 ? 1 : -1; }

GoodDTable scan_good_d(const mpz_class& A_max) {
    if (A_max < 1) throw std::invalid_argument("scan_good_d: A_max must be >= 1");
    GoodDTable table;
    for (mpz_class A = -A_max; A <= A_max; ++A) {
        if (A == 12 || !in_R(A)) continue;
        mpz_class C = A * A * A - 1728;
        if (C == 0) continue;
        auto [D, t] = squarefree_part(C);
        if (D == 1 || D == -1) continue;
        auto [d1, d2] = squarefree_part(3 * t);
        table[D].push_back(GoodDRecord{A, D, t, d1, d2, epsilon(D)});
    }
    for (auto& [D, recs] : table)
        std::sort(recs.begin(), recs.end(), [](const GoodDRecord& x, const GoodDRecord& y) {
            mpz_class ax = abs(x.A), ay = abs(y.A);
            if (ax != ay) return ax < ay;
            return x.A < y.A;
        });
    return table;
}

std::string good_d_csv(const GoodDTable& table) {
    std::ostringstream os;
    os << "A,D,t,d1,d2,epsilon\n";
    for (const auto& [D, recs] : table)
        for (const GoodDRecord& r : recs)
            os << r.A << "," << r.D << "," << r.t << "," << r.d1 << "," << r.d2 << "," << r.eps
               << "\n";
    return os.str();
}

bool ConditionReport::pass() const {
    for (const ConditionEntry& e : entries)
        if (!e.passed) return false;
    return true;
}

std::string ConditionReport::str() const {
    std::ostringstream os;
    os << "D=" << D << " q=" << q << ":";
    for (int i = 0; i < 5; ++i) {
        const ConditionEntry& e = entries[i];
        os << " (" << kCondNames[i] << ")";
        if (!e.applicable)
            os << "-";
        else if (e.passed)
            os << "+";
        else {
            os << "FAIL";
            if (e.witness_prime != 0) os << "@" << e.witness_prime;
        }
    }
    return os.str();
}

ConditionReport check_conditions(const mpz_class& D, const mpz_class& q) {
    if (D == 0 || D == 1 || D == -1)
        throw std::invalid_argument("check_conditions: D must lie outside {0, +-1}");
    if (q == 0) throw std::invalid_argument("check_conditions: q must be nonzero");
    mpz_class m = D * q;
    if (squarefree_part(m).second != 1)
        throw std::invalid_argument("check_conditions: D*q must be square-free");

    int eps = epsilon(D);
    ConditionReport rep;
    rep.D = D;
    rep.q = q;

    // (a): (-eps*q | p) = 1 for all odd primes p | D
    {
        ConditionEntry& e = rep.entries[0];
        mpz_class a = -eps * q;
        for (const auto& [p, ex] : factor(D).factors) {
            if (p == 2) continue;
            e.applicable = true;
            if (kronecker(a, p) != 1) {
                e.passed = false;
                e.witness_prime = p;
                break;
            }
        }
    }
    // (b): (eps*D | q') = 1 for all odd primes q' | q
    {
        ConditionEntry& e = rep.entries[1];
        mpz_class a = eps * D;
        for (const auto& [p, ex] : factor(q).factors) {
            if (p == 2) continue;
            e.applicable = true;
            if (kronecker(a, p) != 1) {
                e.passed = false;
                e.witness_prime = p;
                break;
            }
        }
    }
    // (c): eps*D < 0 forces m > 0
    {
        ConditionEntry& e = rep.entries[2];
        if (eps * D < 0) {
            e.applicable = true;
            e.passed = m > 0;
        }
    }
    // (d): D = +-3 (mod 8) forces q = D (mod 4)
    {
        ConditionEntry& e = rep.entries[3];
        mpz_class d8 = mod_pos(D, 8);
        if (d8 == 3 || d8 == 5) {
            e.applicable = true;
            e.passed = mod_pos(q, 4) == mod_pos(D, 4);
        }
    }
    // (e): D even forces q = D + 1 (mod 8)
    {
        ConditionEntry& e = rep.entries[4];
        if (mpz_divisible_ui_p(D.get_mpz_t(), 2)) {
            e.applicable = true;
            e.passed = mod_pos(q, 8) == mod_pos(D + 1, 8);
        }
    }
    return rep;
}

EgrVerdict decide(const mpz_class& m, const GoodDTable& table, const WitnessBuilder& build) {
    if (m == 0 || m == 1 || squarefree_part(m).first != m)
        throw std::invalid_argument("decide: m must be square-free, m != 0, 1");

    EgrVerdict verdict;
    verdict.m = m;
    for (const mpz_class& d : positive_divisors(m)) {
        for (int sign : {1, -1}) {
            mpz_class D = sign * d;
            if (D == 1 || D == -1) continue;
            mpz_class q = m / D;
            ConditionReport rep = check_conditions(D, q);
            if (!rep.pass()) {
                verdict.failures.push_back(std::move(rep));
                continue;
            }
            auto it = table.find(D);
            if (it == table.end()) {
                verdict.unresolved.push_back(D);
                continue;
            }
            const GoodDRecord& rec = it->second.front();
            EgrWitness w{rec, q, std::nullopt};
            if (build) w.curve = build(rec, q);
            verdict.status = EgrStatus::yes;
            verdict.witness = std::move(w);
            return verdict;
        }
    }
    verdict.status = verdict.unresolved.empty() ? EgrStatus::no : EgrStatus::unknown;
    return verdict;
}

std::pair<EgrVerdict, EgrVerdict> nonexistence_certificate(const mpz_class& p,
                                                           const GoodDTable& table) {
    if (!is_prime(p) || mod_pos(p, 8) != 3)
        throw std::invalid_argument("nonexistence_certificate: need p prime, p = 3 (mod 8)");
    return {decide(p, table), decide(-p, table)};
}

}  // namespace egr
