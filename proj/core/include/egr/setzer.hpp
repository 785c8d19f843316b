// Classification of good quadratic twists: the admissible set R of integers A,
// the table of good square-free D arising as square-free parts of A^3 - 1728,
// the five divisor conditions on a factorization m = D*q, and the decision
// procedure for "Q(sqrt(m)) carries a curve with everywhere good reduction
// and rational j-invariant".

#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "egr/curves.hpp"

namespace egr {

// A is admissible iff 2 | A implies 16 | A or 16 | (A - 4), and
// 3 | A implies 27 | (A - 12).
bool in_R(const mpz_class& A);

// +1 if D = 1 (mod 4), else -1 (D odd or even).
int epsilon(const mpz_class& D);

struct GoodDRecord {
    mpz_class A;   // admissible source, A != 12
    mpz_class D;   // square-free part of A^3 - 1728 (never +-1 in the table)
    mpz_class t;   // cofactor: A^3 - 1728 = D * t^2
    mpz_class d1;  // square-free part of 3t
    mpz_class d2;  // 3t = d1 * d2^2
    int eps;       // epsilon(D)
};

// D -> records with that square-free part, ordered by (|A|, A).
using GoodDTable = std::map<mpz_class, std::vector<GoodDRecord>>;

// Scan A in [-A_max, A_max]: admissible A != 12 with square-free part of
// A^3 - 1728 outside {+-1}.  Throws if A_max < 1.
GoodDTable scan_good_d(const mpz_class& A_max);

// CSV rendering, header "A,D,t,d1,d2,epsilon", rows by (D, |A|, A).
std::string good_d_csv(const GoodDTable& table);

enum class Condition { a, b, c, d, e };

struct ConditionEntry {
    bool applicable = false;
    bool passed = true;          // vacuously true when not applicable
    mpz_class witness_prime{0};  // failing prime for (a)/(b), else 0
};

struct ConditionReport {
    mpz_class D, q;
    std::array<ConditionEntry, 5> entries;  // indexed by Condition

    bool pass() const;
    const ConditionEntry& entry(Condition c) const { return entries[static_cast<int>(c)]; }
    std::string str() const;
};

// Evaluate all five conditions on the factorization m = D*q.  Requires
// D*q square-free and D outside {0, +-1} (throws otherwise):
//  (a) (-eps(D)*q | p) = 1 for every odd prime p | D
//  (b) (eps(D)*D | q') = 1 for every odd prime q' | q
//  (c) if eps(D)*D < 0 then m > 0
//  (d) if D = +-3 (mod 8) then q = D (mod 4)
//  (e) if D even then q = D + 1 (mod 8)
ConditionReport check_conditions(const mpz_class& D, const mpz_class& q);

enum class EgrStatus { yes, no, unknown };

struct EgrWitness {
    GoodDRecord record;
    mpz_class q;
    std::optional<CurveModel> curve;  // present when a witness builder ran
};

struct EgrVerdict {
    mpz_class m;
    EgrStatus status = EgrStatus::no;
    std::optional<EgrWitness> witness;        // set iff status == yes
    std::vector<ConditionReport> failures;    // failing candidates, in scan order
    std::vector<mpz_class> unresolved;        // passing D of unknown goodness
};

// Builds a verified witness curve for a passing candidate (D-record, q);
// throwing signals an internal fault and propagates.
using WitnessBuilder = std::function<CurveModel(const GoodDRecord&, const mpz_class&)>;

// Decide existence for square-free m (m != 0, 1; throws otherwise).  Signed
// divisors D of m are scanned by |D| ascending, positive sign first, skipping
// D = +-1.  The first candidate passing all five conditions whose D is in the
// table yields status yes (with a curve when a builder is supplied); passing
// candidates outside the table accumulate in `unresolved` and give status
// unknown when nothing resolves to yes; status no means every candidate
// failed some condition.
EgrVerdict decide(const mpz_class& m, const GoodDTable& table,
                  const WitnessBuilder& build = nullptr);

// For p prime, p = 3 (mod 8): verdicts for m = p and m = -p, both
// provably `no` (every divisor candidate fails a recorded condition).
// Throws if p is not such a prime.
std::pair<EgrVerdict, EgrVerdict> nonexistence_certificate(const mpz_class& p,
                                                           const GoodDTable& table);

}  // namespace egr
