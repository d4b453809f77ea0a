#include "quomap/rational.hpp"

namespace quomap {

using u64 = std::uint64_t;

RationalFunction RationalFunction::make(const Poly& num, const Poly& den) {
    if (den.is_zero()) fail(Errc::ZeroDenominator, "rational function with zero denominator");
    if (num.is_zero()) fail(Errc::ZeroNumerator, "rational function with zero numerator");
    if (!num.spec().same_field(den.spec())) fail(Errc::FieldMismatch, "numerator and denominator fields differ");
    Poly g = num, h = den;
    Poly d = gcd_monic(g, h);
    if (!d.is_one()) {
        g = exact_div(g, d);
        h = exact_div(h, d);
    }
    FieldElement s = g.leading().inv();
    return RationalFunction(g.scale(s), h.scale(s));
}

std::size_t RationalFunction::degree() const {
    std::size_t dn = num_.is_constant() ? 0 : num_.degree();
    std::size_t dd = den_.is_constant() ? 0 : den_.degree();
    return std::max(dn, dd);
}

P1Value RationalFunction::value_at_infinity() const {
    std::size_t dn = num_.is_constant() ? 0 : num_.degree();
    std::size_t dd = den_.is_constant() ? 0 : den_.degree();
    if (dn > dd) return P1Value::infinity(field());
    if (dn < dd) return P1Value::of(FieldElement(field(), 0));
    return P1Value::of(num_.leading() / den_.leading());
}

P1Value RationalFunction::eval(const P1Value& v) const {
    if (v.is_infinity()) return value_at_infinity();
    FieldElement hv = den_.eval(v.value());
    if (hv.is_zero()) return P1Value::infinity(field());
    return P1Value::of(num_.eval(v.value()) / hv);
}

Poly q_transform(const Poly& f, const RationalFunction& q) {
    if (f.is_zero() || !f.is_monic()) fail(Errc::NotMonic, "Q-transform needs a monic polynomial");
    if (f.is_constant()) return f;
    P1Value at_inf = q.value_at_infinity();
    if (at_inf.is_finite() && f.eval(at_inf.value()).is_zero())
        fail(Errc::ValueAtInfinityIsRoot, "F(Q(infinity)) = 0: the transform degree would drop");
    const Poly& g = q.num();
    const Poly& h = q.den();
    std::size_t k = f.degree();
    Poly s = Poly::constant(f.coeff(k));
    Poly hp = Poly::one(f.field());
    for (std::size_t i = k; i-- > 0;) {
        hp = hp * h;
        s = s * g + Poly::constant(f.coeff(i)) * hp;
    }
    if (s.is_zero() || s.degree() != k * q.degree())
        fail(Errc::Internal, "Q-transform degree mismatch");
    return s;
}

RationalFunction rf_compose_mobius(const RationalFunction& q, const ProjElement& m) {
    if (!q.field()->same_field(m.spec())) fail(Errc::FieldMismatch, "matrix over a different field");
    const Field& K = q.field();
    Poly u = Poly::from_codes(K, {m.b(), m.a()});  // ax + b
    Poly v = Poly::from_codes(K, {m.d(), m.c()});  // cx + d
    std::size_t deg = q.degree();
    auto homogenize = [&](const Poly& f) {
        // sum f_i u^i v^(D - i)
        Poly s = Poly::constant(f.coeff(deg));
        Poly vpow = Poly::one(K);
        for (std::size_t i = deg; i-- > 0;) {
            vpow = vpow * v;
            s = s * u + Poly::constant(f.coeff(i)) * vpow;
        }
        return s;
    };
    return RationalFunction::make(homogenize(q.num()), homogenize(q.den()));
}

}  // namespace quomap
