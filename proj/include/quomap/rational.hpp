#pragma once

#include "quomap/pgl2.hpp"
#include "quomap/poly.hpp"

namespace quomap {

// Reduced fraction num/den with canonical scaling: gcd(num, den) = 1, num
// monic (the denominator absorbs the unit). Canonical forms are equal as
// pairs iff the functions are equal.
class RationalFunction {
  public:
    // Errors: ZeroNumerator, ZeroDenominator, FieldMismatch.
    static RationalFunction make(const Poly& num, const Poly& den);
    static RationalFunction of(const Poly& num) { return make(num, Poly::one(num.field())); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Field& field() const { return num_.field(); }

    std::size_t degree() const;  // max(deg num, deg den)

    // The paper's three-case rule: inf if deg num > deg den, leading-
    // coefficient ratio if equal, 0 if deg den > deg num.
    P1Value value_at_infinity() const;

    // Evaluation on P^1; poles map to infinity.
    P1Value eval(const P1Value& v) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  private:
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

inline RationalFunction rf_make(const Poly& num, const Poly& den) {
    return RationalFunction::make(num, den);
}

// F^Q = sum_i a_i g^i h^(deg F - i); degree multiplies, monic when
// deg num > deg den. Constants pass through unchanged.
// Errors: NotMonic, ValueAtInfinityIsRoot (F(Q(inf)) = 0).
Poly q_transform(const Poly& f, const RationalFunction& q);

// Q([A] o x) as a canonical rational function.
RationalFunction rf_compose_mobius(const RationalFunction& q, const ProjElement& a);

}  // namespace quomap
