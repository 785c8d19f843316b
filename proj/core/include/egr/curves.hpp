// Weierstrass models over Q(sqrt(m)) with exact invariants.

#pragma once

#include <string>

#include "egr/quadfield.hpp"

namespace egr {

class CurveModel {
  public:
    // y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.  Throws if Delta = 0.
    CurveModel(const QuadraticField& K, const FieldElement& a1, const FieldElement& a2,
               const FieldElement& a3, const FieldElement& a4, const FieldElement& a6);
    static CurveModel short_model(const QuadraticField& K, const FieldElement& a4,
                                  const FieldElement& a6);

    const QuadraticField& field() const { return K_; }
    const FieldElement& a1() const { return a1_; }
    const FieldElement& a2() const { return a2_; }
    const FieldElement& a3() const { return a3_; }
    const FieldElement& a4() const { return a4_; }
    const FieldElement& a6() const { return a6_; }
    const FieldElement& b2() const { return b2_; }
    const FieldElement& b4() const { return b4_; }
    const FieldElement& b6() const { return b6_; }
    const FieldElement& b8() const { return b8_; }
    const FieldElement& c4() const { return c4_; }
    const FieldElement& c6() const { return c6_; }
    const FieldElement& delta() const { return delta_; }
    const FieldElement& j() const { return j_; }

    bool is_integral() const;

    // Admissible change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
    CurveModel transformed(const FieldElement& u, const FieldElement& r, const FieldElement& s,
                           const FieldElement& t) const;
    // Integer rescaling x -> x/lambda^2, y -> y/lambda^3 (a_i scaled by lambda^i);
    // with lambda the lcm of coefficient denominators this clears them.
    CurveModel rescaled(const mpz_class& lambda) const;
    // lcm of the coefficient denominators (1 for integral models).
    mpz_class denominator_lcm() const;

    std::string str() const;

  private:
    QuadraticField K_;
    FieldElement a1_, a2_, a3_, a4_, a6_;
    FieldElement b2_, b4_, b6_, b8_, c4_, c6_, delta_, j_;
};

}  // namespace egr
