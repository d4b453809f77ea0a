#include "quomap/quotient.hpp"

#include <algorithm>

#include "quomap/factor.hpp"

namespace quomap {

using u64 = std::uint64_t;

bool verify_generator(const RationalFunction& q, const Subgroup& g) {
    if (q.degree() != g.size()) return false;
    for (const auto& a : g.elements()) {
        if (a.is_identity()) continue;
        if (rf_compose_mobius(q, a) != q) return false;
    }
    return true;
}

QuotientMap normalize_to_quotient_map(const RationalFunction& q, const Subgroup& g) {
    if (!verify_generator(q, g))
        fail(Errc::NotAGenerator, "degree != |G| or the function is not G-invariant");
    RationalFunction out = q;
    P1Value beta = out.value_at_infinity();
    if (beta.is_finite()) {
        // 1 / (Q - beta)
        Poly shifted = out.num() - out.den().scale(beta.value());
        out = RationalFunction::make(out.den(), shifted);
    }
    std::size_t dn = out.num().degree();
    std::size_t dd = out.den().is_constant() ? 0 : out.den().degree();
    if (dn != g.size() || dd >= dn || !out.num().is_monic() || !out.value_at_infinity().is_infinity())
        fail(Errc::Internal, "quotient map normalization failed");
    return QuotientMap(out, std::make_shared<Subgroup>(g));
}

QuotientMap quotient_map_fg(const Subgroup& g) {
    const Field& K = g.field();
    // N(x,y) = prod ((c x + d) y - (a x + b)), coefficients by y-power
    std::vector<Poly> coeff{Poly::one(K)};
    for (const auto& a : g.elements()) {
        Poly u = Poly::from_codes(K, {a.b(), a.a()});
        Poly v = Poly::from_codes(K, {a.d(), a.c()});
        std::vector<Poly> next(coeff.size() + 1, Poly::zero(K));
        for (std::size_t j = 0; j < coeff.size(); ++j) {
            next[j + 1] = next[j + 1] + v * coeff[j];
            next[j] = next[j] - u * coeff[j];
        }
        coeff = std::move(next);
    }
    const Poly& lead = coeff.back();
    for (std::size_t j = 0; j + 1 < coeff.size(); ++j) {
        if (coeff[j].is_zero()) continue;
        RationalFunction cand = RationalFunction::make(coeff[j], lead);
        if (cand.degree() != g.size()) continue;
        if (!verify_generator(cand, g)) continue;
        return normalize_to_quotient_map(cand, g);
    }
    fail(Errc::NoGeneratorFound, "no F_G(y) coefficient generates; this indicates a bug");
}

QuotientMap quotient_map_bluher(const Subgroup& g) {
    const Field& K = g.field();
    const FieldSpec& F = *K;
    if (F.q() > kEnumLimit) fail(Errc::BudgetExceeded, "base field too large to scan for orbits");

    PointOrbit inf_orbit = point_orbit(g, P1Value::infinity(K));
    std::vector<bool> in_inf(F.q(), false);
    for (const auto& pt : inf_orbit.orbit)
        if (pt.is_finite()) in_inf[pt.code()] = true;

    // scan base-field points in digit-lex order, grouping into orbits
    std::vector<bool> seen(F.q(), false);
    std::vector<P1Value> best;
    std::vector<u64> digits(F.n(), 0);
    for (u64 count = 0; count < F.q(); ++count) {
        u64 code = F.from_digits(digits);
        // odometer on (d0,...,d_{n-1}), last digit fastest = ascending lex
        for (std::size_t i = F.n(); i-- > 0;) {
            if (++digits[i] < F.p()) break;
            digits[i] = 0;
        }
        if (seen[code] || in_inf[code]) continue;
        PointOrbit orb = point_orbit(g, P1Value::of(FieldElement(K, code)));
        for (const auto& pt : orb.orbit) {
            if (pt.is_infinity()) fail(Errc::Internal, "orbit disjointness bookkeeping failed");
            seen[pt.code()] = true;
        }
        if (orb.orbit.size() > best.size()) best = orb.orbit;
    }
    if (best.empty()) fail(Errc::NoRationalOrbit, "every base-field orbit meets the orbit of infinity");

    u64 m_v = g.size() / best.size();
    Poly gv = Poly::one(K);
    for (const auto& pt : best) gv = gv * Poly::linear_root(pt.value());
    gv = poly_pow(gv, m_v);

    Poly h = Poly::one(K);
    for (const auto& pt : inf_orbit.orbit)
        if (pt.is_finite()) h = h * Poly::linear_root(pt.value());
    h = poly_pow(h, inf_orbit.stabilizer_size);

    return normalize_to_quotient_map(RationalFunction::make(gv, h), g);
}

namespace {

Field subfield_by_order(const Field& ambient, u64 q0) {
    unsigned m = 0;
    u64 t = 1;
    while (t < q0) t *= ambient->p(), ++m;
    if (t != q0 || m == 0 || ambient->n() % m != 0)
        fail(Errc::BadParams, "q0 is not a subfield order of the ambient field");
    return make_field(ambient->p(), m);
}

// diff == c * base for some scalar c (c = 0 allowed)
bool proportional(const Poly& diff, const Poly& base) {
    if (diff.is_zero()) return true;
    if (base.is_zero()) return false;
    if (diff.degree() != base.degree()) return false;
    FieldElement c = diff.leading() / base.leading();
    return diff == base.scale(c);
}

}  // namespace

bool affine_equivalent(const RationalFunction& q1, const RationalFunction& q2) {
    if (!q1.field()->same_field(*q2.field())) return false;
    // q2 = a*q1 + b in canonical form means den2 = den1/a and
    // num2 = num1 + (b/a) den1.
    if (!proportional(q2.den(), q1.den()) || q2.den().is_zero()) return false;
    return proportional(q2.num() - q1.num(), q1.den());
}

Poly embed_poly(const Poly& f, const Field& target) {
    std::vector<u64> codes(f.codes().size());
    for (std::size_t i = 0; i < codes.size(); ++i)
        codes[i] = embed(FieldElement(f.field(), f.codes()[i]), target).code();
    return Poly::from_codes(target, std::move(codes));
}

QuotientMap closed_form_borel(const Subgroup& borel, std::uint64_t q0) {
    const Field& K = borel.field();
    Field sub = subfield_by_order(K, q0);
    Poly prod = Poly::one(sub);
    for (const Poly& r : irreducibles_of_degree(sub, 2)) prod = prod * r;
    return normalize_to_quotient_map(RationalFunction::of(embed_poly(prod, K)), borel);
}

QuotientMap closed_form_pgl2(const Subgroup& pgl2, std::uint64_t q0) {
    const Field& K = pgl2.field();
    Field sub = subfield_by_order(K, q0);
    Poly num = Poly::one(sub);
    for (const Poly& r : irreducibles_of_degree(sub, 3)) num = num * r;
    Poly xq_x = Poly::monomial(sub, 1, q0) - Poly::x(sub);
    Poly den = poly_pow(xq_x, (q0 - 1) * q0);
    return normalize_to_quotient_map(
        RationalFunction::make(embed_poly(num, K), embed_poly(den, K)), pgl2);
}

QuotientMap closed_form_diagonal(const Subgroup& diag, std::uint64_t n) {
    const Field& K = diag.field();
    return normalize_to_quotient_map(RationalFunction::of(Poly::monomial(K, 1, n)), diag);
}

}  // namespace quomap
