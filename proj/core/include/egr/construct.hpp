// Witness-curve construction: solve the norm equation x^2 - m y^2 = c z^2,
// integralize, and twist the A-template into an everywhere-good model.

#pragma once

#include <functional>
#include <vector>

#include "egr/curves.hpp"
#include "egr/setzer.hpp"

namespace egr {

struct ConicSolution {
    mpz_class x, y, z;   // primitive: gcd(x, y, z) = 1, z > 0
    FieldElement alpha;  // (x + y*sqrt(m)) / z, of norm c
};

// First primitive solution of x^2 - m y^2 = c z^2 in box-search order
// (z ascending, y ascending, x >= 0 a perfect-square root).  Throws
// std::domain_error if the conic is insolvable, std::runtime_error if the
// search cap is exhausted.
ConicSolution solve_norm_equation(const mpz_class& m, const mpz_class& c);

// First `count` distinct primitive solutions in the same order.
std::vector<ConicSolution> solve_norm_equation_many(const mpz_class& m, const mpz_class& c,
                                                    unsigned count);

// (beta, n): n the least odd positive integer with n*alpha integral, beta =
// n*alpha.  Throws std::domain_error when no odd multiplier works (even
// denominator in the theta coordinates).
std::pair<FieldElement, mpz_class> integralize(const FieldElement& alpha);

// Twist candidates built from beta and d1: +-beta*d1, and for m = 3 (mod 4)
// additionally +-beta*d1*rho with rho = (m+1)/2 + sqrt(m).
std::vector<FieldElement> u_candidates(const FieldElement& beta, const mpz_class& d1);

// y^2 = x^3 - 3A(A^3-1728) u^2 x - 2(A^3-1728)^2 u^3; requires A admissible
// (A in R, A != 12) and u != 0.  j = A^3.
CurveModel build_curve(const mpz_class& A, const FieldElement& u);

struct WitnessCurve {
    CurveModel curve;
    mpz_class A;
    FieldElement alpha;   // conic solution as a field element
    FieldElement beta;    // integralized alpha
    mpz_class n;          // integralizing multiplier
    FieldElement u;       // successful twist
    int candidate_index;  // position of u in u_candidates (records sign/rho branch)
};

using ConicSolver =
    std::function<std::vector<ConicSolution>(const mpz_class& m, const mpz_class& c, unsigned count)>;
using CurveVerifier = std::function<bool(const CurveModel&)>;

// Full pipeline for a passing candidate (rec, q) with m = rec.D * q: solve the
// norm equation for c = eps*D keeping odd-z solutions (default cap 8), build
// the twist candidates for each, and return the first model the verifier
// accepts.  null solver/verifier select the built-in ones.  Throws
// std::runtime_error if every candidate is rejected (internal fault).
WitnessCurve construct_witness(const mpz_class& m, const GoodDRecord& rec, const mpz_class& q,
                               const ConicSolver& solver = nullptr,
                               const CurveVerifier& verifier = nullptr,
                               unsigned retry_cap = 8);

// decide() wired to the full construction + verification pipeline.
EgrVerdict decide_full(const mpz_class& m, const GoodDTable& table);

}  // namespace egr
