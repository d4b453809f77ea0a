#include "quomap/invariant.hpp"

#include <algorithm>
#include <set>

#include "quomap/factor.hpp"

namespace quomap {

using u64 = std::uint64_t;

bool in_nr(const Poly& f, const Subgroup& g) {
    if (f.is_zero() || !f.is_monic()) return false;
    PointOrbit inf = point_orbit(g, P1Value::infinity(g.field()));
    for (const auto& pt : inf.orbit) {
        if (pt.is_finite() && f.eval(pt.value()).is_zero()) return false;
    }
    return true;
}

bool is_invariant(const Poly& f, const Subgroup& g) {
    if (f.is_zero() || !f.is_monic()) fail(Errc::NotMonic, "invariance is defined for monic polynomials");
    if (!in_nr(f, g)) fail(Errc::OutsideNR, "polynomial has a root in the orbit of infinity");
    if (f.is_constant()) return true;
    for (const auto& a : g.generators()) {
        if (a.is_identity()) continue;
        if (star_transform(a, f) != f) return false;
    }
#ifndef NDEBUG
    for (const auto& a : g.elements()) {
        if (!a.is_identity() && star_transform(a, f) != f)
            fail(Errc::Internal, "generator invariance did not extend to the whole group");
    }
#endif
    return true;
}

OrbitPoly orbit_poly(const Poly& r, const Subgroup& g) {
    if (!in_nr(r, g)) fail(Errc::OutsideNR, "representative has a root in the orbit of infinity");
    if (r.is_constant() || !is_irreducible(r)) fail(Errc::NotIrreducible, "orbit representative must be irreducible");
    std::set<std::vector<u64>> seen;
    OrbitPoly out{{}, Poly::one(r.field())};
    for (const auto& a : g.elements()) {
        Poly t = star_transform(a, r);
        if (seen.insert(t.codes()).second) out.orbit.push_back(t);
    }
    std::sort(out.orbit.begin(), out.orbit.end(), poly_less);
    for (const auto& t : out.orbit) out.product = out.product * t;
    if (g.size() % out.orbit.size() != 0)
        fail(Errc::Internal, "orbit size does not divide the group order");
    return out;
}

OrbitCertificate::Checks validate_certificate(const Poly& F, const QuotientMap& q, const Poly& r,
                                              const std::vector<Poly>& orbit, unsigned k) {
    OrbitCertificate::Checks c;
    if (orbit.empty() || k == 0 || F.is_zero() || F.is_constant() || r.is_zero() || r.is_constant())
        return c;
    Poly transformed = q_transform(F, q.rf());
    Factorization fac = factor(transformed);

    std::vector<Poly> factors;
    c.uniform_multiplicity = true;
    for (const auto& [p, m] : fac.factors) {
        factors.push_back(p);
        if (m != k) c.uniform_multiplicity = false;
    }
    std::vector<Poly> sorted_orbit = orbit;
    std::sort(sorted_orbit.begin(), sorted_orbit.end(), poly_less);
    c.single_orbit = factors == sorted_orbit &&
                     std::binary_search(sorted_orbit.begin(), sorted_orbit.end(), r,
                                        [](const Poly& a, const Poly& b) { return poly_less(a, b); });

    Poly prod = Poly::one(F.field());
    for (const auto& t : sorted_orbit) prod = prod * t;
    c.product = poly_pow(prod, k) == transformed;

    c.degree_divides = r.degree() % F.degree() == 0;
    c.counting = sorted_orbit.size() * r.degree() * k == q.group().size() * F.degree();
    return c;
}

std::vector<Poly> exceptional_minpolys(const Subgroup& g) {
    PointOrbit inf = point_orbit(g, P1Value::infinity(g.field()));
    std::set<u64> inf_codes;
    for (const auto& pt : inf.orbit)
        if (pt.is_finite()) inf_codes.insert(pt.code());

    std::set<std::vector<u64>> seen;
    std::vector<Poly> out;
    for (const auto& a : g.elements()) {
        if (a.is_identity()) continue;
        for (const auto& mp : fixed_points(a).minpolys) {
            if (mp.degree() == 1 && inf_codes.count(mp.spec().neg(mp.code_at(0)))) continue;
            if (seen.insert(mp.codes()).second) out.push_back(mp);
        }
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

OrbitCertificate main_factorization(const Poly& F, const QuotientMap& q) {
    if (F.is_zero() || F.is_constant() || !is_irreducible(F))
        fail(Errc::NotIrreducible, "main factorization needs an irreducible input");
    if (!F.is_monic()) fail(Errc::NotMonic, "main factorization needs a monic input");

    Poly transformed = q_transform(F, q.rf());
    Factorization fac = factor(transformed);

    OrbitCertificate cert{F, fac.factors.front().first, {}, fac.factors.front().second, {}};
    OrbitPoly orb = orbit_poly(cert.r, q.group());
    cert.orbit = orb.orbit;
    cert.r = cert.orbit.front();
    cert.checks = validate_certificate(F, q, cert.r, cert.orbit, cert.k);
    if (!cert.checks.all())
        fail(Errc::CertificateViolation, "orbit certificate checks failed; this indicates a bug");

    // Theorem-level guarantee: regular fibers force k = 1. The computable
    // criterion is coprimality with the fixed-point minimal polynomials.
    Poly pexc = Poly::one(F.field());
    for (const Poly& mp : exceptional_minpolys(q.group())) pexc = pexc * mp;
    if (gcd_monic(transformed, pexc).is_one() && cert.k != 1)
        fail(Errc::CertificateViolation, "k > 1 on a transform coprime to the exceptional locus");
    return cert;
}

Poly pushforward_minpoly(const Poly& r, const QuotientMap& q) {
    if (!in_nr(r, q.group())) fail(Errc::OutsideNR, "polynomial has a root in the orbit of infinity");
    if (r.is_constant() || !is_irreducible(r)) fail(Errc::NotIrreducible, "pushforward needs an irreducible input");
    Poly res = resultant_in_y(r, q.num(), q.den()).monic();
    Factorization fac = factor(res);
    if (fac.factors.size() != 1)
        fail(Errc::CertificateViolation, "pushforward resultant is not a prime power");
    Poly F = fac.factors.front().first;
    if (r.degree() % F.degree() != 0)
        fail(Errc::CertificateViolation, "pushforward degree does not divide deg r");
    if (!divrem(q_transform(F, q.rf()), r).second.is_zero())
        fail(Errc::CertificateViolation, "r does not divide F^{Q_G}");
    return F;
}

ExceptionalLocus exceptional_locus(const Subgroup& g, const QuotientMap& q) {
    ExceptionalLocus out;
    for (const auto& a : g.elements()) {
        if (!a.is_identity() && fixed_points(a).fixes_infinity) {
            out.includes_infinity_class = true;
            break;
        }
    }
    out.minpolys = exceptional_minpolys(g);

    std::vector<bool> assigned(out.minpolys.size(), false);
    for (std::size_t i = 0; i < out.minpolys.size(); ++i) {
        if (assigned[i]) continue;
        OrbitPoly orb = orbit_poly(out.minpolys[i], g);
        std::vector<std::size_t> idx;
        for (const Poly& t : orb.orbit) {
            auto it = std::lower_bound(out.minpolys.begin(), out.minpolys.end(), t, poly_less);
            if (it == out.minpolys.end() || *it != t)
                fail(Errc::Internal, "fixed-point orbit leaves the exceptional locus");
            std::size_t j = static_cast<std::size_t>(it - out.minpolys.begin());
            assigned[j] = true;
            idx.push_back(j);
        }
        out.orbit_partition.push_back(std::move(idx));
    }

    for (std::size_t oi = 0; oi < out.orbit_partition.size(); ++oi) {
        const Poly& rep = out.minpolys[out.orbit_partition[oi].front()];
        Poly F = pushforward_minpoly(rep, q);
        OrbitCertificate cert = main_factorization(F, q);
        if (cert.k >= 2) out.nonconformal.push_back({F, cert.k, oi});
    }
    return out;
}

Decomposition decompose_invariant(const Poly& f, const Subgroup& g, const QuotientMap& q,
                                  const ExceptionalLocus& locus) {
    if (!is_invariant(f, g)) fail(Errc::NotInvariant, "input is not G-invariant");
    Decomposition out{f, Poly::one(f.field()), {}};
    for (std::size_t i = 0; i < locus.nonconformal.size(); ++i) out.exceptional_exponents[i] = 0;
    if (f.is_constant()) {
        if (!f.is_one()) fail(Errc::NotMonic, "constant invariant input must be 1");
        return out;
    }

    // orbit product for each nonconformal index
    std::vector<Poly> nc_products;
    std::vector<Poly> nc_reps;
    for (const auto& nc : locus.nonconformal) {
        Poly prod = Poly::one(f.field());
        for (std::size_t j : locus.orbit_partition[nc.orbit_index]) prod = prod * locus.minpolys[j];
        nc_products.push_back(prod);
        nc_reps.push_back(locus.minpolys[locus.orbit_partition[nc.orbit_index].front()]);
    }

    Factorization fac = factor(f);
    std::vector<bool> used(fac.factors.size(), false);
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        if (used[i]) continue;
        const auto& [r, mult] = fac.factors[i];
        OrbitPoly orb = orbit_poly(r, g);
        for (const Poly& t : orb.orbit) {
            bool found = false;
            for (std::size_t j = i; j < fac.factors.size(); ++j) {
                if (fac.factors[j].first == t) {
                    if (fac.factors[j].second != mult)
                        fail(Errc::MultiplicityMismatch, "orbit members divide with different multiplicities");
                    used[j] = true;
                    found = true;
                    break;
                }
            }
            if (!found)
                fail(Errc::MultiplicityMismatch, "orbit member missing from the factorization");
        }
        const Poly& rep = orb.orbit.front();
        auto nc_it = std::find(nc_reps.begin(), nc_reps.end(), rep);
        if (nc_it != nc_reps.end()) {
            std::size_t nci = static_cast<std::size_t>(nc_it - nc_reps.begin());
            unsigned n_i = locus.nonconformal[nci].n;
            out.exceptional_exponents[nci] = mult % n_i;
            out.F = out.F * poly_pow(locus.nonconformal[nci].F, mult / n_i);
        } else {
            out.F = out.F * poly_pow(pushforward_minpoly(rep, q), mult);
        }
    }

    // bit-exact recomposition
    Poly recomposed = q_transform(out.F, q.rf());
    for (std::size_t i = 0; i < nc_products.size(); ++i)
        recomposed = recomposed * poly_pow(nc_products[i], out.exceptional_exponents[i]);
    if (recomposed != f) fail(Errc::CertificateViolation, "decomposition does not recompose");
    return out;
}

FacfinReport facfin_check(const Poly& F, const Subgroup& g, const QuotientMap& q) {
    if (F.is_zero() || F.is_constant() || !is_irreducible(F))
        fail(Errc::NotIrreducible, "facfin needs an irreducible input");
    Poly transformed = q_transform(F, q.rf());
    Poly deriv = derivative(transformed);
    if (deriv.is_zero() || !gcd_monic(transformed, deriv).is_one())
        fail(Errc::NotSeparable, "F^{Q_G} is not separable");

    FacfinReport rep{};
    rep.mu = 0;
    for (const auto& a : g.elements()) rep.mu = std::max(rep.mu, element_order(a));

    Factorization fac = factor(transformed);
    rep.factor_count = fac.factors.size();
    rep.max_factor_degree = 0;
    bool cyclic_ok = true;
    for (const auto& [r, m] : fac.factors) {
        rep.factors.push_back(r);
        rep.max_factor_degree = std::max(rep.max_factor_degree, r.degree());
        std::vector<ProjElement> stab;
        for (const auto& a : g.elements())
            if (star_transform(a, r) == r) stab.push_back(a);
        rep.stabilizer_orders.push_back(stab.size());
        if (stab.size() * 1ULL != r.degree() / F.degree())
            fail(Errc::CertificateViolation, "stabilizer order disagrees with deg r / deg F");
        if (r.degree() >= 3) {
            bool has_full_order = false;
            for (const auto& a : stab)
                if (element_order(a) == stab.size()) {
                    has_full_order = true;
                    break;
                }
            cyclic_ok = cyclic_ok && has_full_order;
        }
    }
    rep.stabilizers_cyclic = cyclic_ok;
    rep.count_bound_ok = rep.factor_count * rep.mu >= g.size();
    rep.degree_bound_ok = rep.max_factor_degree <= rep.mu * F.degree();
    return rep;
}

}  // namespace quomap
