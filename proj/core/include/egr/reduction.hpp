// Local reduction types via Tate's algorithm over Q(sqrt(m)), and the
// everywhere-good-reduction verifier.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "egr/curves.hpp"
#include "egr/quadfield.hpp"

namespace egr {

enum class KodairaType {
    good,       // I_0
    I_n,        // multiplicative, n >= 1
    II,
    III,
    IV,
    I_0_star,
    I_n_star,   // n >= 1
    IV_star,
    III_star,
    II_star,
};

std::string kodaira_str(KodairaType t, long n);  // "I0" / "In" / "II" / ... / "In*"

struct LocalReduction {
    PrimeIdeal prime;
    KodairaType kodaira;
    long n = 0;            // index for I_n / I_n*
    long v_min_delta = 0;  // valuation of the minimal discriminant

    bool is_good() const { return kodaira == KodairaType::good; }
    std::string str() const;  // "P=(...) type=... v(Dmin)=k"
};

// Local reduction type of an integral model at P.  Dispatches to the
// valuation shortcut for residue characteristic >= 5 and to the full
// algorithm for p = 2, 3.  Throws std::invalid_argument on non-integral
// models.
LocalReduction tate(const CurveModel& E, const PrimeIdeal& P);

// The full step-by-step algorithm, valid at every P (used directly in tests
// to cross-check the shortcut path).
LocalReduction tate_full(const CurveModel& E, const PrimeIdeal& P);

// True iff the model's discriminant is a unit of O_K (|N(Delta)| = 1); the
// model must be integral.
bool unit_discriminant(const CurveModel& E);

// Everywhere-good-reduction check.  Non-integral models are first rescaled
// integral.  Returns (true, {}) on unit discriminant; otherwise runs tate()
// at every prime dividing norm(Delta) and returns whether all types came out
// good plus the per-prime reports ordered by (p, root).
std::pair<bool, std::vector<LocalReduction>> verify_egr(const CurveModel& E);

// Text report, one line per LocalReduction.
std::string render_report(const std::vector<LocalReduction>& rows);
// JSON-lines rendering: {"prime": "...", "type": "...", "n": k, "v_min": k}
std::string render_report_jsonl(const std::vector<LocalReduction>& rows);

}  // namespace egr
