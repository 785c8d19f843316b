#include "egr/curves.hpp"

#include <sstream>
#include <stdexcept>

namespace egr {

namespace {

const mpq_class kQ2(2), kQ3(3), kQ4(4), kQ8(8), kQ9(9), kQ24(24), kQ27(27), kQ36(36), kQ216(216);

FieldElement compute_b8(const FieldElement& a1, const FieldElement& a2, const FieldElement& a3,
                        const FieldElement& a4, const FieldElement& a6) {
    return a1 * a1 * a6 + a2 * a6 * kQ4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}

// least n > 0 with n*q integral, over the naive (a, b) coordinates
mpz_class coeff_den(const FieldElement& x) {
    mpz_class d;
    mpz_lcm(d.get_mpz_t(), x.a().get_den().get_mpz_t(), x.b().get_den().get_mpz_t());
    return d;
}

// pretty term rendering: "" for 0, " + c*var" / " - c*var" otherwise
void append_term(std::ostream& os, const FieldElement& c, const std::string& var) {
    if (c.is_zero()) return;
    if (c.is_rational()) {
        mpq_class q = c.a();
        os << (q < 0 ? " - " : " + ");
        mpq_class aq = abs(q);
        if (var.empty()) {
            os << aq;
        } else if (aq == 1) {
            os << var;
        } else {
            os << aq << "*" << var;
        }
        return;
    }
    os << " + (" << c.str() << ")";
    if (!var.empty()) os << "*" << var;
}

}  // namespace

CurveModel::CurveModel(const QuadraticField& K, const FieldElement& a1, const FieldElement& a2,
                       const FieldElement& a3, const FieldElement& a4, const FieldElement& a6)
    : K_(K),
      a1_(a1),
      a2_(a2),
      a3_(a3),
      a4_(a4),
      a6_(a6),
      b2_(a1 * a1 + a2 * kQ4),
      b4_(a4 * kQ2 + a1 * a3),
      b6_(a3 * a3 + a6 * kQ4),
      b8_(compute_b8(a1, a2, a3, a4, a6)),
      c4_(b2_ * b2_ - b4_ * kQ24),
      c6_(-(b2_ * b2_ * b2_) + b2_ * b4_ * kQ36 - b6_ * kQ216),
      delta_(-(b2_ * b2_ * b8_) - b4_ * b4_ * b4_ * kQ8 - b6_ * b6_ * kQ27 + b2_ * b4_ * b6_ * kQ9),
      j_(a1) {
    if (delta_.is_zero()) throw std::invalid_argument("CurveModel: singular equation (Delta = 0)");
    j_ = c4_ * c4_ * c4_ / delta_;
}

CurveModel CurveModel::short_model(const QuadraticField& K, const FieldElement& a4,
                                   const FieldElement& a6) {
    FieldElement zero = FieldElement::from_rational(K, 0);
    return CurveModel(K, zero, zero, zero, a4, a6);
}

bool CurveModel::is_integral() const {
    return a1_.is_integral() && a2_.is_integral() && a3_.is_integral() && a4_.is_integral() &&
           a6_.is_integral();
}

CurveModel CurveModel::transformed(const FieldElement& u, const FieldElement& r,
                                   const FieldElement& s, const FieldElement& t) const {
    if (u.is_zero()) throw std::invalid_argument("transformed: u must be nonzero");
    FieldElement u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    FieldElement a1n = (a1_ + s * kQ2) / u;
    FieldElement a2n = (a2_ - s * a1_ + r * kQ3 - s * s) / u2;
    FieldElement a3n = (a3_ + r * a1_ + t * kQ2) / u3;
    FieldElement a4n = (a4_ - s * a3_ + r * a2_ * kQ2 - (t + r * s) * a1_ + r * r * kQ3 - s * t * kQ2) / u4;
    FieldElement a6n = (a6_ + r * a4_ + r * r * a2_ + r * r * r - t * a3_ - t * t - r * t * a1_) / u6;
    return CurveModel(K_, a1n, a2n, a3n, a4n, a6n);
}

CurveModel CurveModel::rescaled(const mpz_class& lambda) const {
    if (lambda == 0) throw std::invalid_argument("rescaled: lambda must be nonzero");
    mpq_class l(lambda), l2 = l * l, l3 = l2 * l, l4 = l2 * l2, l6 = l3 * l3;
    return CurveModel(K_, a1_ * l, a2_ * l2, a3_ * l3, a4_ * l4, a6_ * l6);
}

mpz_class CurveModel::denominator_lcm() const {
    mpz_class l(1);
    for (const FieldElement* a : {&a1_, &a2_, &a3_, &a4_, &a6_}) {
        mpz_class d = coeff_den(*a);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

std::string CurveModel::str() const {
    std::ostringstream os;
    os << "y^2";
    append_term(os, a1_, "xy");
    append_term(os, a3_, "y");
    os << " = x^3";
    append_term(os, a2_, "x^2");
    append_term(os, a4_, "x");
    append_term(os, a6_, "");
    os << " over Q(sqrt(" << K_.m() << "))";
    return os.str();
}

}  // namespace egr
