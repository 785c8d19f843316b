#include "egr/density.hpp"

#include <cmath>
#include <cstdio>
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

// acceptance flags over n = |q| in [0, limit], residue pin folded in
std::vector<uint8_t> family_flags(const FamilySpec& spec, uint64_t limit) {
    std::vector<uint8_t> ok(limit + 1, 1);
    ok[0] = 0;
    if (limit >= 2) {
        for (uint64_t p : sieve_primes(limit)) {
            if (spec.accepts_prime(mpz_class(p))) {
                for (uint64_t k = p * p; k <= limit; k += p * p) ok[k] = 0;  // square-free
            } else {
                for (uint64_t k = p; k <= limit; k += p) ok[k] = 0;
            }
        }
    }
    if (spec.has_residue) {
        // q = sign_q * n = residue (mod 8)  <=>  n = sign_q * residue (mod 8)
        uint64_t target = spec.sign_q == 1 ? spec.residue : (8 - spec.residue) % 8;
        for (uint64_t n = 1; n <= limit; ++n)
            if (n % 8 != target) ok[n] = 0;
    }
    return ok;
}

std::vector<uint64_t> prefix_counts(const std::vector<uint8_t>& flags) {
    std::vector<uint64_t> pref(flags.size() + 1, 0);
    for (size_t n = 0; n < flags.size(); ++n) pref[n + 1] = pref[n] + flags[n];
    return pref;
}

std::vector<uint64_t> geometric_grid(uint64_t X, uint64_t grid_start) {
    if (X < 10) throw std::invalid_argument("count grid: X must be >= 10");
    if (grid_start < 2) throw std::invalid_argument("count grid: grid_start must be >= 2");
    std::vector<uint64_t> grid;
    for (uint64_t g = grid_start; g < X; g *= 10) grid.push_back(g);
    grid.push_back(X);
    return grid;
}

double normalize(uint64_t count, uint64_t X, double alpha) {
    return static_cast<double>(count) * std::pow(std::log(static_cast<double>(X)), alpha) /
           static_cast<double>(X);
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// count members by |disc| < X where |disc| = scale * |q|
CountReport aggregate_by_disc(const FamilySpec& spec, const std::string& label, uint64_t scale,
                              uint64_t X, uint64_t grid_start) {
    CountReport rep;
    rep.label = label;
    rep.alpha = spec.alpha;
    rep.grid = geometric_grid(X, grid_start);
    uint64_t qmax = (X - 1) / scale;
    std::vector<uint64_t> pref = prefix_counts(family_flags(spec, qmax));
    for (uint64_t Xi : rep.grid) {
        uint64_t qi = (Xi - 1) / scale;
        uint64_t c = pref[std::min<uint64_t>(qi, qmax) + 1];
        rep.counts.push_back(c);
        rep.normalized.push_back(normalize(c, Xi, rep.alpha));
    }
    return rep;
}

}  // namespace

bool FamilySpec::accepts_prime(const mpz_class& p) const {
    if (mpz_divisible_p(D.get_mpz_t(), p.get_mpz_t())) return false;  // q coprime to D
    for (const mpz_class& pi : odd_primes)
        if (kronecker(p, pi) != 1) return false;
    if (even_extra && kronecker(mpz_class(-2 * delta), p) != 1) return false;
    return true;
}

bool FamilySpec::accepts(const mpz_class& q) const {
    if (q == 0) return false;
    if ((q > 0 ? 1 : -1) != sign_q) return false;
    mpz_class aq = abs(q);
    if (squarefree_part(aq).second != 1) return false;
    for (const auto& [p, e] : factor(aq).factors)
        if (!accepts_prime(p)) return false;
    if (has_residue && mod_pos(q, 8) != residue) return false;
    return true;
}

FamilySpec family_for(const mpz_class& D) {
    if (D == 0 || D == 1 || D == -1 || squarefree_part(D).second != 1)
        throw std::invalid_argument("family_for: D must be square-free, outside {0, +-1}");
    FamilySpec spec;
    spec.D = D;
    spec.eps = mod_pos(D, 4) == 1 ? 1 : -1;
    spec.sign_q = -spec.eps;
    Factorization f = factor(D);
    spec.r = static_cast<unsigned>(f.factors.size());
    bool even = false;
    for (const auto& [p, e] : f.factors) {
        if (p == 2)
            even = true;
        else
            spec.odd_primes.push_back(p);
    }
    if (even) {
        spec.even_extra = true;
        spec.delta = mod_pos(D / 2, 4) == 1 ? 1 : -1;
        spec.has_residue = true;
        spec.residue = mod_pos(D + 1, 8).get_si();
    } else {
        mpz_class d8 = mod_pos(D, 8);
        if (d8 == 3 || d8 == 5) {
            spec.has_residue = true;
            spec.residue = mod_pos(D + 4, 8).get_si();
        }
    }
    spec.alpha = 1.0 - std::ldexp(1.0, -static_cast<int>(spec.r));
    spec.real_field = mpz_class(spec.eps * D) < 0;
    return spec;
}

CountReport count_family(const FamilySpec& spec, uint64_t X, uint64_t grid_start) {
    CountReport rep;
    rep.label = "D=" + spec.D.get_str();
    rep.alpha = spec.alpha;
    rep.grid = geometric_grid(X, grid_start);
    std::vector<uint64_t> pref = prefix_counts(family_flags(spec, X));
    for (uint64_t Xi : rep.grid) {
        uint64_t c = pref[Xi + 1];
        rep.counts.push_back(c);
        rep.normalized.push_back(normalize(c, Xi, rep.alpha));
    }
    return rep;
}

CountReport aggregate_RX(uint64_t X, uint64_t grid_start) {
    return aggregate_by_disc(family_for(2), "R", 8, X, grid_start);
}

CountReport aggregate_IX(uint64_t X, uint64_t grid_start) {
    return aggregate_by_disc(family_for(37), "I", 37, X, grid_start);
}

GrowthTable growth_check(const CountReport& report) {
    GrowthTable g;
    for (size_t i = 0; i < report.grid.size(); ++i) {
        if (report.counts[i] == 0) continue;
        g.grid.push_back(report.grid[i]);
        g.normalized.push_back(report.normalized[i]);
    }
    if (g.normalized.size() < 3)
        throw std::domain_error("growth_check: need at least 3 grid points with nonzero counts");
    double lo = g.normalized.front(), hi = g.normalized.front();
    for (size_t i = 0; i < g.normalized.size(); ++i) {
        lo = std::min(lo, g.normalized[i]);
        hi = std::max(hi, g.normalized[i]);
        if (i + 1 < g.normalized.size()) g.ratios.push_back(g.normalized[i + 1] / g.normalized[i]);
    }
    g.drift = hi / lo - 1.0;
    return g;
}

std::string count_csv(const CountReport& report) {
    std::ostringstream os;
    os << "X,count,normalized\n";
    for (size_t i = 0; i < report.grid.size(); ++i)
        os << report.grid[i] << "," << report.counts[i] << "," << fmt_double(report.normalized[i])
           << "\n";
    return os.str();
}

std::string count_csv_long(const std::vector<CountReport>& reports) {
    std::ostringstream os;
    os << "family,X,count,normalized\n";
    for (const CountReport& r : reports)
        for (size_t i = 0; i < r.grid.size(); ++i)
            os << r.label << "," << r.grid[i] << "," << r.counts[i] << ","
               << fmt_double(r.normalized[i]) << "\n";
    return os.str();
}

}  // namespace egr
