#include "egr/reduction.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "egr/arith.hpp"

namespace egr {

namespace {

constexpr long kInfVal = std::numeric_limits<long>::max() / 4;

long val(const FieldElement& x, const PrimeIdeal& P) {
    return x.is_zero() ? kInfVal : valuation(x, P);
}

// --- residue-field helpers -------------------------------------------------

struct Quadratic {  // a Y^2 + b Y + c over F (a nonzero)
    FFElem a, b, c;
};

FFElem quad_disc(const ResidueField& F, const Quadratic& q) {
    FFElem b2 = F.mul(q.b, q.b);
    FFElem fourac = F.mul(F.from_int(4), F.mul(q.a, q.c));
    return F.sub(b2, fourac);
}

// double root of a quadratic with vanishing discriminant
FFElem quad_double_root(const ResidueField& F, const Quadratic& q) {
    if (F.characteristic() == 2) {
        // disc = b^2 = 0 forces b = 0; root of a Y^2 + c: Y^2 = c/a
        return F.sqrt_char2(F.mul(q.c, F.inv(q.a)));
    }
    FFElem inv2a = F.inv(F.mul(F.from_int(2), q.a));
    return F.neg(F.mul(q.b, inv2a));
}

// discriminant of T^3 + b T^2 + c T + d (valid in every characteristic)
FFElem cubic_disc(const ResidueField& F, const FFElem& b, const FFElem& c, const FFElem& d) {
    FFElem t1 = F.mul(F.from_int(18), F.mul(b, F.mul(c, d)));
    FFElem t2 = F.mul(F.from_int(4), F.mul(b, F.mul(b, F.mul(b, d))));
    FFElem t3 = F.mul(F.mul(b, b), F.mul(c, c));
    FFElem t4 = F.mul(F.from_int(4), F.mul(c, F.mul(c, c)));
    FFElem t5 = F.mul(F.from_int(27), F.mul(d, d));
    return F.sub(F.add(F.sub(t1, t2), F.sub(t3, t4)), t5);
}

FFElem cubic_eval(const ResidueField& F, const FFElem& b, const FFElem& c, const FFElem& d,
                  const FFElem& x) {
    FFElem r = F.add(x, b);           // x + b
    r = F.add(F.mul(r, x), c);        // x^2 + bx + c
    return F.add(F.mul(r, x), d);     // x^3 + bx^2 + cx + d
}

// root of the cubic with multiplicity >= 2, together with its multiplicity
// (requires cubic_disc == 0)
std::pair<FFElem, int> cubic_repeated_root(const ResidueField& F, const FFElem& b,
                                           const FFElem& c, const FFElem& d) {
    for (const FFElem& x : F.all_elements()) {
        if (!cubic_eval(F, b, c, d, x).is_zero()) continue;
        // synthetic division to count multiplicity
        int mult = 0;
        std::vector<FFElem> poly{F.one(), b, c, d};
        while (poly.size() >= 2) {
            // divide by (T - x); remainder must vanish to count
            std::vector<FFElem> quot;
            FFElem acc = F.zero();
            for (const FFElem& coef : poly) {
                acc = F.add(F.mul(acc, x), coef);
                quot.push_back(acc);
            }
            if (!quot.back().is_zero()) break;
            quot.pop_back();
            poly = std::move(quot);
            ++mult;
        }
        if (mult >= 2) return {x, mult};
    }
    throw std::logic_error("cubic_repeated_root: no repeated root found");
}

// singular point of the reduced curve, as residue-field coordinates
std::pair<FFElem, FFElem> find_singular_point(const CurveModel& E, const ResidueField& F) {
    FFElem a1 = F.reduce(E.a1()), a2 = F.reduce(E.a2()), a3 = F.reduce(E.a3()),
           a4 = F.reduce(E.a4()), a6 = F.reduce(E.a6());
    bool char2 = F.characteristic() == 2;
    auto rhs = [&](const FFElem& x) {  // x^3 + a2 x^2 + a4 x + a6
        return cubic_eval(F, a2, a4, a6, x);
    };
    FFElem inv2 = char2 ? F.zero() : F.inv(F.from_int(2));
    for (const FFElem& x : F.all_elements()) {
        FFElem y;
        if (char2) {
            if (!F.add(F.mul(a1, x), a3).is_zero()) continue;  // df/dy = a1 x + a3
            y = F.sqrt_char2(rhs(x));                          // f = 0 then automatic
        } else {
            y = F.neg(F.mul(F.add(F.mul(a1, x), a3), inv2));   // df/dy = 2y + a1 x + a3
            FFElem f = F.sub(F.add(F.mul(y, y), F.mul(F.add(F.mul(a1, x), a3), y)), rhs(x));
            if (!f.is_zero()) continue;
        }
        // df/dx = a1 y - (3x^2 + 2 a2 x + a4)
        FFElem dx = F.add(F.mul(F.from_int(3), F.mul(x, x)),
                          F.add(F.mul(F.from_int(2), F.mul(a2, x)), a4));
        if (F.sub(F.mul(a1, y), dx).is_zero()) return {x, y};
    }
    throw std::logic_error("find_singular_point: reduction is not singular");
}

LocalReduction make(const PrimeIdeal& P, KodairaType t, long n, long vmin) {
    return LocalReduction{P, t, n, vmin};
}

// --- classification shortcut for residue characteristic >= 5 ---------------

LocalReduction tate_ge5(const CurveModel& E, const PrimeIdeal& P) {
    long vd = valuation(E.delta(), P);
    long vc4 = val(E.c4(), P);
    long vc6 = val(E.c6(), P);
    long k = vd / 12;
    if (vc4 != kInfVal) k = std::min(k, vc4 / 4);
    if (vc6 != kInfVal) k = std::min(k, vc6 / 6);
    long vmin = vd - 12 * k;
    long vc4m = (vc4 == kInfVal) ? kInfVal : vc4 - 4 * k;

    if (vmin == 0) return make(P, KodairaType::good, 0, 0);
    if (vc4m == 0) return make(P, KodairaType::I_n, vmin, vmin);
    if (vc4m == 2 && vmin >= 7) return make(P, KodairaType::I_n_star, vmin - 6, vmin);
    switch (vmin) {
        case 2: return make(P, KodairaType::II, 0, vmin);
        case 3: return make(P, KodairaType::III, 0, vmin);
        case 4: return make(P, KodairaType::IV, 0, vmin);
        case 6: return make(P, KodairaType::I_0_star, 0, vmin);
        case 8: return make(P, KodairaType::IV_star, 0, vmin);
        case 9: return make(P, KodairaType::III_star, 0, vmin);
        case 10: return make(P, KodairaType::II_star, 0, vmin);
        default: throw std::logic_error("tate: impossible minimal valuation data");
    }
}

}  // namespace

std::string kodaira_str(KodairaType t, long n) {
    switch (t) {
        case KodairaType::good: return "I0";
        case KodairaType::I_n: return "I" + std::to_string(n);
        case KodairaType::II: return "II";
        case KodairaType::III: return "III";
        case KodairaType::IV: return "IV";
        case KodairaType::I_0_star: return "I0*";
        case KodairaType::I_n_star: return "I" + std::to_string(n) + "*";
        case KodairaType::IV_star: return "IV*";
        case KodairaType::III_star: return "III*";
        case KodairaType::II_star: return "II*";
    }
    throw std::logic_error("kodaira_str: bad type");
}

std::string LocalReduction::str() const {
    std::ostringstream os;
    os << "P=" << prime.str() << " type=" << kodaira_str(kodaira, n) << " v(Dmin)=" << v_min_delta;
    return os.str();
}

LocalReduction tate_full(const CurveModel& E0, const PrimeIdeal& P) {
    if (!E0.is_integral()) throw std::invalid_argument("tate: model must be integral");
    const QuadraticField& K = E0.field();
    ResidueField F(P);
    bool char2 = (P.p == 2);
    FieldElement pi = (P.kind == SplitKind::ramified)
                          ? P.uniformizer()
                          : FieldElement::from_rational(K, mpq_class(P.p));
    FieldElement zero = FieldElement::from_rational(K, 0);
    FieldElement one = FieldElement::from_rational(K, 1);
    FieldElement pi2 = pi * pi;

    CurveModel E = E0;
    for (int rounds = 0; rounds < 1000; ++rounds) {
        // every transformation below keeps the model in the local ring at P;
        // a violation here means a bookkeeping bug, and it would invalidate
        // the good-reduction certificate (integral model, unit discriminant)
        for (const FieldElement* a : {&E.a1(), &E.a2(), &E.a3(), &E.a4(), &E.a6()})
            if (val(*a, P) < 0) throw std::logic_error("tate: model left the local ring at P");
        long vd = valuation(E.delta(), P);
        if (vd == 0) return make(P, KodairaType::good, 0, 0);

        // move the singular point of the reduction to the origin
        {
            auto [xb, yb] = find_singular_point(E, F);
            E = E.transformed(one, F.lift(xb), zero, F.lift(yb));
        }
        if (val(E.c4(), P) == 0) return make(P, KodairaType::I_n, vd, vd);
        if (val(E.a6(), P) < 2) return make(P, KodairaType::II, 0, vd);
        if (val(E.b8(), P) < 3) return make(P, KodairaType::III, 0, vd);
        if (val(E.b6(), P) < 3) return make(P, KodairaType::IV, 0, vd);

        // normalize: v(a1) >= 1, v(a2) >= 1, v(a3) >= 2, v(a4) >= 2, v(a6) >= 3
        if (char2) {
            FieldElement s = F.lift(F.sqrt_char2(F.reduce(E.a2())));
            E = E.transformed(one, zero, s, zero);
            FieldElement t = pi * F.lift(F.sqrt_char2(F.reduce(E.a6() / pi2)));
            E = E.transformed(one, zero, zero, t);
        } else {
            E = E.transformed(one, zero, -(E.a1() / mpq_class(2)), zero);
            E = E.transformed(one, zero, zero, -(E.a3() / mpq_class(2)));
        }

        // cubic T^3 + (a2/pi) T^2 + (a4/pi^2) T + (a6/pi^3)
        FFElem cb = F.reduce(E.a2() / pi);
        FFElem cc = F.reduce(E.a4() / pi2);
        FFElem cd = F.reduce(E.a6() / (pi2 * pi));
        if (!cubic_disc(F, cb, cc, cd).is_zero()) return make(P, KodairaType::I_0_star, 0, vd);

        auto [root, mult] = cubic_repeated_root(F, cb, cc, cd);
        E = E.transformed(one, pi * F.lift(root), zero, zero);

        if (mult == 2) {
            // I_nu* subloop: v(a2) = 1, v(a3) >= 2, v(a4) >= 3, v(a6) >= 4
            long nu = 1;
            FieldElement mx = pi2, my = pi2;
            while (nu < 100000) {
                Quadratic qy{F.one(), F.reduce(E.a3() / my), F.neg(F.reduce(E.a6() / (mx * my)))};
                if (!quad_disc(F, qy).is_zero())
                    return make(P, KodairaType::I_n_star, nu, vd);
                E = E.transformed(one, zero, zero, my * F.lift(quad_double_root(F, qy)));
                my = my * pi;
                ++nu;
                Quadratic qx{F.reduce(E.a2() / pi), F.reduce(E.a4() / (pi * mx)),
                             F.reduce(E.a6() / (mx * my))};
                if (!quad_disc(F, qx).is_zero())
                    return make(P, KodairaType::I_n_star, nu, vd);
                E = E.transformed(one, mx * F.lift(quad_double_root(F, qx)), zero, zero);
                mx = mx * pi;
                ++nu;
            }
            throw std::logic_error("tate: I_n* subloop failed to terminate");
        }

        // triple root: quadratic Y^2 + (a3/pi^2) Y - (a6/pi^4)
        Quadratic qy{F.one(), F.reduce(E.a3() / pi2), F.neg(F.reduce(E.a6() / (pi2 * pi2)))};
        if (!quad_disc(F, qy).is_zero()) return make(P, KodairaType::IV_star, 0, vd);
        E = E.transformed(one, zero, zero, pi2 * F.lift(quad_double_root(F, qy)));

        if (val(E.a4(), P) < 4) return make(P, KodairaType::III_star, 0, vd);
        if (val(E.a6(), P) < 6) return make(P, KodairaType::II_star, 0, vd);

        E = E.transformed(pi, zero, zero, zero);  // not minimal: rescale and restart
    }
    throw std::logic_error("tate: failed to terminate");
}

LocalReduction tate(const CurveModel& E, const PrimeIdeal& P) {
    if (!E.is_integral()) throw std::invalid_argument("tate: model must be integral");
    if (P.p >= 5) return tate_ge5(E, P);
    return tate_full(E, P);
}

bool unit_discriminant(const CurveModel& E) {
    if (!E.is_integral()) throw std::invalid_argument("unit_discriminant: model must be integral");
    return abs(E.delta().norm()) == 1;
}

std::pair<bool, std::vector<LocalReduction>> verify_egr(const CurveModel& E0) {
    CurveModel E = E0.is_integral() ? E0 : E0.rescaled(E0.denominator_lcm());
    if (unit_discriminant(E)) return {true, {}};

    mpq_class nd = E.delta().norm();
    mpz_class N = abs(nd.get_num());  // integral model: norm is an integer
    bool all_good = true;
    std::vector<LocalReduction> rows;
    for (const auto& [p, e] : factor(N).factors) {
        for (const PrimeIdeal& P : split_prime(E.field(), p)) {
            if (valuation(E.delta(), P) == 0) continue;
            LocalReduction r = tate(E, P);
            if (!r.is_good()) all_good = false;
            rows.push_back(std::move(r));
        }
    }
    return {all_good, rows};
}

std::string render_report(const std::vector<LocalReduction>& rows) {
    std::ostringstream os;
    for (const LocalReduction& r : rows) os << r.str() << "\n";
    return os.str();
}

std::string render_report_jsonl(const std::vector<LocalReduction>& rows) {
    std::ostringstream os;
    for (const LocalReduction& r : rows)
        os << "{\"prime\": \"" << r.prime.str() << "\", \"type\": \""
           << kodaira_str(r.kodaira, r.n) << "\", \"n\": " << r.n
           << ", \"v_min\": " << r.v_min_delta << "}\n";
    return os.str();
}

}  // namespace egr
