#include "quomap/pgl2.hpp"

#include <algorithm>
#include <set>

#include "quomap/factor.hpp"

namespace quomap {

using u64 = std::uint64_t;

ProjElement ProjElement::canonical(const Field& field, u64 a, u64 b, u64 c, u64 d) {
    const FieldSpec& F = *field;
    u64 det = F.sub(F.mul(a, d), F.mul(b, c));
    if (det == 0) fail(Errc::SingularMatrix, "ad - bc = 0");
    u64 first = a ? a : (b ? b : (c ? c : d));
    u64 s = F.inv(first);
    return ProjElement(field, F.mul(a, s), F.mul(b, s), F.mul(c, s), F.mul(d, s));
}

ProjElement operator*(const ProjElement& x, const ProjElement& y) {
    if (!x.spec().same_field(y.spec())) fail(Errc::FieldMismatch, "matrices over different fields");
    const FieldSpec& F = x.spec();
    u64 a = F.add(F.mul(x.a_, y.a_), F.mul(x.b_, y.c_));
    u64 b = F.add(F.mul(x.a_, y.b_), F.mul(x.b_, y.d_));
    u64 c = F.add(F.mul(x.c_, y.a_), F.mul(x.d_, y.c_));
    u64 d = F.add(F.mul(x.c_, y.b_), F.mul(x.d_, y.d_));
    return ProjElement::canonical(x.field_, a, b, c, d);
}

bool Subgroup::contains(const ProjElement& e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

Subgroup closure(const std::vector<ProjElement>& generators, std::size_t cap) {
    if (generators.empty()) fail(Errc::BadParams, "closure needs at least one generator");
    const Field& K = generators.front().field();
    for (const auto& g : generators)
        if (!g.spec().same_field(*K)) fail(Errc::FieldMismatch, "generators over different fields");

    std::set<ProjElement> seen;
    seen.insert(ProjElement::identity(K));
    std::vector<ProjElement> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<ProjElement> next;
        for (const auto& e : frontier) {
            for (const auto& g : generators) {
                ProjElement prod = e * g;
                if (seen.insert(prod).second) {
                    if (seen.size() > cap)
                        fail(Errc::CapExceeded, "subgroup closure exceeds the element cap");
                    next.push_back(prod);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<ProjElement> elems(seen.begin(), seen.end());
#ifndef NDEBUG
    for (const auto& e : elems) {
        ProjElement inv = e.inverse();
        if (!std::binary_search(elems.begin(), elems.end(), inv))
            fail(Errc::Internal, "closure not closed under inverse");
    }
#endif
    return Subgroup(K, std::move(elems), generators);
}

Subgroup build_cyclic(const ProjElement& a, std::size_t cap) { return closure({a}, cap); }

Subgroup build_translations(const Field& field, const std::vector<FieldElement>& span,
                            std::size_t cap) {
    if (span.empty()) fail(Errc::BadParams, "translations need at least one spanning element");
    const FieldSpec& F = *field;
    for (const auto& v : span)
        if (!v.spec().same_field(F)) fail(Errc::FieldMismatch, "span element over wrong field");
    // independent size cross-check: the F_p-span
    std::set<u64> vspace{0};
    for (const auto& v : span) {
        std::set<u64> next = vspace;
        for (u64 s : vspace)
            for (u64 k = 1; k < F.p(); ++k) next.insert(F.add(s, F.mul(k % F.p(), v.code())));
        vspace = std::move(next);
        if (vspace.size() > cap) fail(Errc::CapExceeded, "translation subspace exceeds the cap");
    }
    std::vector<ProjElement> gens;
    for (const auto& v : span) gens.push_back(ProjElement::canonical(field, 1, v.code(), 0, 1));
    Subgroup g = closure(gens, cap);
    if (g.size() != vspace.size()) fail(Errc::Internal, "translation group size mismatch");
    return g;
}

namespace {

// element of exact multiplicative order n (n | q-1)
u64 element_of_order(const FieldSpec& F, u64 n) {
    std::vector<u64> primes;
    u64 v = n;
    for (u64 d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            primes.push_back(d);
            while (v % d == 0) v /= d;
        }
    if (v > 1) primes.push_back(v);
    for (u64 cand = 2; cand < F.q(); ++cand) {
        u64 a = F.pow(cand, (F.q() - 1) / n);
        if (a == 1 && n > 1) continue;
        bool exact = true;
        for (u64 ell : primes)
            if (F.pow(a, n / ell) == 1) {
                exact = false;
                break;
            }
        if (exact) return a;
    }
    fail(Errc::Internal, "no element of the requested order");
}

// validates q0 = p^m with m | n and returns GF(q0)
Field subfield_of(const Field& field, u64 q0) {
    const FieldSpec& F = *field;
    u64 p = F.p();
    unsigned m = 0;
    u64 t = 1;
    while (t < q0) t *= p, ++m;
    if (t != q0 || m == 0 || F.n() % m != 0)
        fail(Errc::BadParams, "q0 is not a subfield order of the ambient field");
    return make_field(p, m);
}

}  // namespace

Subgroup build_diagonal(const Field& field, u64 n, std::size_t cap) {
    const FieldSpec& F = *field;
    if (n == 0 || (F.q() - 1) % n != 0) fail(Errc::BadParams, "n must divide q - 1");
    if (n > cap) fail(Errc::CapExceeded, "diagonal subgroup larger than the cap");
    u64 a = n == 1 ? 1 : element_of_order(F, n);
    Subgroup g = build_cyclic(ProjElement::canonical(field, a, 0, 0, 1), cap);
    if (g.size() != n) fail(Errc::Internal, "diagonal subgroup size mismatch");
    return g;
}

Subgroup build_borel(const Field& field, u64 q0, std::size_t cap) {
    Field small = subfield_of(field, q0);
    if (q0 * (q0 - 1) > cap) fail(Errc::CapExceeded, "Borel subgroup larger than the cap");
    std::vector<ProjElement> gens;
    gens.push_back(ProjElement::canonical(field, 1, 1, 0, 1));
    if (q0 > 2) {
        u64 g0 = embed(FieldElement(small, small->primitive_element()), field).code();
        gens.push_back(ProjElement::canonical(field, g0, 0, 0, 1));
    }
    Subgroup g = closure(gens, cap);
    if (g.size() != q0 * (q0 - 1)) fail(Errc::Internal, "Borel subgroup size mismatch");
    return g;
}

Subgroup build_full_pgl2(const Field& field, u64 q0, std::size_t cap) {
    Field small = subfield_of(field, q0);
    u64 expected = q0 * q0 * q0 - q0;
    if (expected > cap) fail(Errc::CapExceeded, "PGL2 subgroup larger than the cap");
    std::vector<ProjElement> gens;
    gens.push_back(ProjElement::canonical(field, 1, 1, 0, 1));
    if (q0 > 2) {
        u64 g0 = embed(FieldElement(small, small->primitive_element()), field).code();
        gens.push_back(ProjElement::canonical(field, g0, 0, 0, 1));
    }
    gens.push_back(ProjElement::canonical(field, 0, 1, 1, 0));
    Subgroup g = closure(gens, cap);
    if (g.size() != expected) fail(Errc::Internal, "PGL2 subgroup size mismatch");
    return g;
}

P1Value mobius_apply(const ProjElement& m, const P1Value& v) {
    const FieldSpec& F = m.spec();
    if (!v.field()->same_field(F)) fail(Errc::FieldMismatch, "point over a different field");
    if (v.is_infinity()) {
        if (m.c() == 0) return P1Value::infinity(m.field());
        return P1Value::of(FieldElement(m.field(), F.div(m.a(), m.c())));
    }
    u64 w = v.code();
    u64 den = F.add(F.mul(m.c(), w), m.d());
    if (den == 0) return P1Value::infinity(m.field());
    u64 num = F.add(F.mul(m.a(), w), m.b());
    return P1Value::of(FieldElement(m.field(), F.div(num, den)));
}

Poly star_transform(const ProjElement& m, const Poly& f) {
    if (f.is_zero() || !f.is_monic()) fail(Errc::NotMonic, "*-action needs a monic polynomial");
    if (f.is_constant()) fail(Errc::BadParams, "*-action needs degree >= 1");
    if (!f.spec().same_field(m.spec())) fail(Errc::FieldMismatch, "polynomial over a different field");
    const Field& K = f.field();
    std::size_t k = f.degree();
    Poly u = Poly::from_codes(K, {m.b(), m.a()});  // ax + b
    Poly v = Poly::from_codes(K, {m.d(), m.c()});  // cx + d
    // Horner: s = f_k; s = s*u + f_i * v^(k-i)
    Poly s = Poly::one(K);
    Poly vpow = Poly::one(K);
    for (std::size_t i = k; i-- > 0;) {
        vpow = vpow * v;
        s = s * u + Poly::constant(f.coeff(i)) * vpow;
    }
    if (s.is_zero() || s.degree() != k)
        fail(Errc::DegreeDrop, "polynomial vanishes at [A] o infinity");
    return s.monic();
}

PointOrbit point_orbit(const Subgroup& g, const P1Value& v) {
    std::set<P1Value> orbit;
    for (const auto& e : g.elements()) orbit.insert(mobius_apply(e, v));
    PointOrbit out{std::vector<P1Value>(orbit.begin(), orbit.end()), 0};
    if (g.size() % out.orbit.size() != 0)
        fail(Errc::Internal, "orbit size does not divide the group order");
    out.stabilizer_size = g.size() / out.orbit.size();
    return out;
}

FixedPoints fixed_points(const ProjElement& m) {
    if (m.is_identity()) fail(Errc::IdentityInput, "fixed points of the identity");
    const Field& K = m.field();
    const FieldSpec& F = m.spec();
    FixedPoints out{{}, m.c() == 0};
    Poly eq = Poly::from_codes(K, {F.neg(m.b()), F.sub(m.d(), m.a()), m.c()});
    if (eq.is_zero() || eq.is_constant()) return out;  // only infinity
    Poly monic = eq.monic();
    if (monic.degree() == 1) {
        out.minpolys.push_back(monic);
        return out;
    }
    Factorization fac = factor(monic);
    for (const auto& [r, mult] : fac.factors) out.minpolys.push_back(r);
    std::sort(out.minpolys.begin(), out.minpolys.end(), poly_less);
    return out;
}

std::uint64_t element_order(const ProjElement& m) {
    ProjElement acc = m;
    u64 k = 1;
    while (!acc.is_identity()) {
        acc = acc * m;
        ++k;
    }
    return k;
}

}  // namespace quomap
