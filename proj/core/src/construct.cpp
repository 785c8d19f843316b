#include "egr/construct.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "egr/arith.hpp"
#include "egr/conic.hpp"
#include "egr/reduction.hpp"

namespace egr {

namespace {

mpz_class mod_pos(const mpz_class& a, long n) {
    mpz_class r = a % n;
    if (r < 0) r += n;
    return r;
}

// Box enumeration of primitive solutions, z ascending then y ascending, with
// doubling horizon.  Solvability must be pre-checked by the caller.  May
// return fewer than `count` when the hard cap box is exhausted.
std::vector<ConicSolution> enumerate_solutions(const QuadraticField& K, const mpz_class& c,
                                               unsigned count, bool odd_z_only) {
    const mpz_class& m = K.m();
    std::vector<ConicSolution> out;
    std::set<std::tuple<mpz_class, mpz_class, mpz_class>> seen;
    const unsigned long kHardCap = 1u << 12;
    for (unsigned long H = 32;; H *= 2) {
        if (H > kHardCap) return out;  // caller decides whether a shortfall is fatal
        out.clear();
        seen.clear();
        for (unsigned long zi = 1; zi <= H && out.size() < count; ++zi) {
            if (odd_z_only && zi % 2 == 0) continue;
            mpz_class z(zi);
            mpz_class base = c * z * z;
            for (unsigned long yi = 0; yi <= H && out.size() < count; ++yi) {
                mpz_class y(yi);
                mpz_class rhs = base + m * y * y;
                if (rhs < 0) {
                    if (m < 0) break;  // decreasing in y; nothing further
                    continue;
                }
                if (!mpz_perfect_square_p(rhs.get_mpz_t())) continue;
                mpz_class x;
                mpz_sqrt(x.get_mpz_t(), rhs.get_mpz_t());
                mpz_class g = gcd(gcd(x, y), z);
                mpz_class xr = x / g, yr = y / g, zr = z / g;
                if (odd_z_only && mod_pos(zr, 2) == 0) continue;
                if (!seen.insert({xr, yr, zr}).second) continue;
                mpq_class zq(zr);
                FieldElement alpha(K, mpq_class(xr) / zq, mpq_class(yr) / zq);
                out.push_back(ConicSolution{xr, yr, zr, alpha});
            }
        }
        if (out.size() >= count) return out;
    }
}

void require_solvable(const mpz_class& m, const mpz_class& c) {
    if (!conic_is_solvable(m, c))
        throw std::domain_error("solve_norm_equation: x^2 - m y^2 = c z^2 is insolvable");
}

}  // namespace

ConicSolution solve_norm_equation(const mpz_class& m, const mpz_class& c) {
    return solve_norm_equation_many(m, c, 1).front();
}

std::vector<ConicSolution> solve_norm_equation_many(const mpz_class& m, const mpz_class& c,
                                                    unsigned count) {
    if (count == 0) throw std::invalid_argument("solve_norm_equation_many: count must be >= 1");
    require_solvable(m, c);
    std::vector<ConicSolution> sols = enumerate_solutions(QuadraticField(m), c, count, false);
    if (sols.size() < count)
        throw std::runtime_error("solve_norm_equation: search cap exhausted (internal fault)");
    return sols;
}

std::pair<FieldElement, mpz_class> integralize(const FieldElement& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("integralize: alpha must be nonzero");
    auto [s, t] = alpha.theta_coords();
    mpz_class n;
    mpz_lcm(n.get_mpz_t(), s.get_den().get_mpz_t(), t.get_den().get_mpz_t());
    if (mod_pos(n, 2) == 0)
        throw std::domain_error("integralize: no odd multiplier clears the denominators");
    return {alpha * mpq_class(n), n};
}

std::vector<FieldElement> u_candidates(const FieldElement& beta, const mpz_class& d1) {
    if (beta.is_zero() || d1 == 0)
        throw std::invalid_argument("u_candidates: beta and d1 must be nonzero");
    const QuadraticField& K = beta.field();
    FieldElement B = beta * mpq_class(d1);
    std::vector<FieldElement> out{B, -B};
    if (mod_pos(K.m(), 4) == 3) {
        FieldElement rho(K, mpq_class(mpz_class((K.m() + 1) / 2)), 1);
        out.push_back(B * rho);
        out.push_back(-(B * rho));
    }
    return out;
}

CurveModel build_curve(const mpz_class& A, const FieldElement& u) {
    if (!in_R(A) || A == 12) throw std::invalid_argument("build_curve: A must be admissible");
    if (u.is_zero()) throw std::invalid_argument("build_curve: u must be nonzero");
    mpz_class C = A * A * A - 1728;
    FieldElement u2 = u * u, u3 = u2 * u;
    FieldElement a4 = u2 * mpq_class(mpz_class(-3 * A * C));
    FieldElement a6 = u3 * mpq_class(mpz_class(-2 * C * C));
    return CurveModel::short_model(u.field(), a4, a6);
}

WitnessCurve construct_witness(const mpz_class& m, const GoodDRecord& rec, const mpz_class& q,
                               const ConicSolver& solver, const CurveVerifier& verifier,
                               unsigned retry_cap) {
    if (m != rec.D * q) throw std::invalid_argument("construct_witness: m != D*q");
    if (retry_cap == 0) throw std::invalid_argument("construct_witness: retry_cap must be >= 1");
    mpz_class c = rec.eps * rec.D;
    QuadraticField K(m);

    CurveVerifier check = verifier ? verifier : [](const CurveModel& E) {
        return verify_egr(E).first;
    };
    auto attempt = [&](const ConicSolution& sol) -> std::optional<WitnessCurve> {
        auto [beta, n] = integralize(sol.alpha);
        std::vector<FieldElement> us = u_candidates(beta, rec.d1);
        for (size_t i = 0; i < us.size(); ++i) {
            CurveModel E = build_curve(rec.A, us[i]);
            if (check(E))
                return WitnessCurve{E, rec.A, sol.alpha, beta, n, us[i], static_cast<int>(i)};
        }
        return std::nullopt;
    };

    if (solver) {
        unsigned tried = 0;
        for (const ConicSolution& s : solver(m, c, retry_cap)) {
            if (mod_pos(s.z, 2) == 0) continue;  // pipeline keeps odd z only
            if (++tried > retry_cap) break;
            if (auto w = attempt(s)) return std::move(*w);
        }
    } else {
        require_solvable(m, c);
        std::set<std::tuple<mpz_class, mpz_class, mpz_class>> tried;
        for (unsigned k = 1; k <= retry_cap; ++k) {
            std::vector<ConicSolution> sols = enumerate_solutions(K, c, k, /*odd_z_only=*/true);
            if (sols.size() < k) break;  // odd-z supply exhausted
            const ConicSolution& sol = sols[k - 1];
            if (!tried.insert({sol.x, sol.y, sol.z}).second) continue;
            if (auto w = attempt(sol)) return std::move(*w);
        }
    }
    throw std::runtime_error("construct_witness: no twist candidate verified (internal fault)");
}

EgrVerdict decide_full(const mpz_class& m, const GoodDTable& table) {
    return decide(m, table, [&](const GoodDRecord& rec, const mpz_class& q) {
        return construct_witness(m, rec, q).curve;
    });
}

}  // namespace egr
