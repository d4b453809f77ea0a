#include "quomap/factor.hpp"

#include <algorithm>
#include <map>

#include "quomap/rng.hpp"

namespace quomap {

using u64 = std::uint64_t;

namespace {

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod) { return divrem(a * b, mod).second; }

Poly powmod(Poly base, u64 e, const Poly& mod) {
    Poly r = divrem(Poly::one(base.field()), mod).second;
    while (e) {
        if (e & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        e >>= 1;
    }
    return r;
}

// t -> t^q mod f
Poly frob_step(const Poly& t, const Poly& mod) { return powmod(t, mod.spec().q(), mod); }

std::vector<u64> prime_divisors(u64 v) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    if (v > 1) out.push_back(v);
    return out;
}

u64 poly_digest(const Poly& f) {
    std::vector<u64> parts{f.spec().q()};
    parts.insert(parts.end(), f.codes().begin(), f.codes().end());
    u64 h = 0xcbf29ce484222325ULL;
    for (u64 w : parts)
        for (int i = 0; i < 8; ++i) {
            h ^= (w >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    return h;
}

Poly random_poly_below(const Field& K, std::size_t deg_bound, Rng& rng) {
    std::vector<u64> c(deg_bound);
    for (auto& v : c) v = rng.below(K->q());
    return Poly::from_codes(K, std::move(c));
}

// Equal-degree splitting of a monic squarefree f whose irreducible factors
// all have degree d.
void edd(const Poly& f, unsigned d, Rng& rng, std::vector<Poly>& out) {
    if (f.is_one()) return;
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const Field& K = f.field();
    const FieldSpec& F = f.spec();
    for (int attempt = 0; attempt < 200; ++attempt) {
        Poly t = random_poly_below(K, f.degree(), rng);
        if (t.is_zero()) continue;
        Poly g = gcd_monic(f, t);
        if (!g.is_one() && g.degree() < f.degree()) {
            edd(g, d, rng, out);
            edd(exact_div(f, g), d, rng, out);
            return;
        }
        Poly s = Poly::zero(K);
        if (F.p() == 2) {
            // additive trace to F_2: sum of t^(2^i), i < n*d
            Poly acc = divrem(t, f).second;
            Poly cur = acc;
            u64 bits = static_cast<u64>(F.n()) * d;
            for (u64 i = 1; i < bits; ++i) {
                cur = mulmod(cur, cur, f);
                acc = acc + cur;
            }
            s = divrem(acc, f).second;
        } else {
            // norm to F_q^*, then a (q-1)/2 power: lands in {0, 1, -1} per factor
            Poly norm = divrem(t, f).second;
            Poly cur = norm;
            for (unsigned i = 1; i < d; ++i) {
                cur = frob_step(cur, f);
                norm = mulmod(norm, cur, f);
            }
            s = powmod(norm, (F.q() - 1) / 2, f) - Poly::one(K);
        }
        if (s.is_zero()) continue;
        g = gcd_monic(f, s);
        if (!g.is_one() && g.degree() < f.degree()) {
            edd(g, d, rng, out);
            edd(exact_div(f, g), d, rng, out);
            return;
        }
    }
    fail(Errc::Internal, "equal-degree splitting did not converge");
}

// Distinct-degree split of a monic squarefree u: (product, degree) pairs.
std::vector<std::pair<Poly, unsigned>> ddf(Poly u) {
    std::vector<std::pair<Poly, unsigned>> out;
    const Field& K = u.field();
    Poly h = divrem(Poly::x(K), u).second;
    unsigned d = 0;
    while (!u.is_constant() && 2 * (d + 1) <= u.degree()) {
        ++d;
        h = frob_step(h, u);
        Poly g = gcd_monic(h - Poly::x(K), u);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            u = exact_div(u, g);
            h = divrem(h, u).second;
        }
    }
    if (!u.is_constant()) out.emplace_back(u, static_cast<unsigned>(u.degree()));
    return out;
}

}  // namespace

Poly Factorization::reassemble() const {
    Poly acc = Poly::constant(leading);
    for (const auto& [f, m] : factors) acc = acc * poly_pow(f, m);
    return acc;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.is_constant()) fail(Errc::ConstantInput, "irreducibility needs degree >= 1");
    std::size_t d = f.degree();
    if (d == 1) return true;
    Poly fm = f.monic();
    const Field& K = f.field();
    // x^(q^e) mod f for the e we need
    std::vector<u64> checks;
    for (u64 ell : prime_divisors(d)) checks.push_back(d / ell);
    Poly t = divrem(Poly::x(K), fm).second;
    std::map<u64, Poly> at;
    for (u64 e = 1; e <= d; ++e) {
        t = frob_step(t, fm);
        if (e == d || std::find(checks.begin(), checks.end(), e) != checks.end()) at[e] = t;
    }
    if (at[d] != divrem(Poly::x(K), fm).second) return false;
    for (u64 e : checks) {
        Poly g = gcd_monic(at[e] - Poly::x(K), fm);
        if (!g.is_one()) return false;
    }
    return true;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero() || f.is_constant()) fail(Errc::ConstantInput, "factor needs degree >= 1");
    Factorization out{f, f.leading(), {}};
    Poly fm = f.monic();
    Rng rng(mix_seed({seed, poly_digest(fm)}));
    std::map<std::vector<u64>, std::pair<Poly, unsigned>> coll;
    for (const auto& [part, mult] : squarefree_decomposition(fm)) {
        for (const auto& [prod, d] : ddf(part)) {
            std::vector<Poly> irr;
            edd(prod, d, rng, irr);
            for (Poly& r : irr) {
                auto it = coll.find(r.codes());
                if (it == coll.end())
                    coll.emplace(r.codes(), std::make_pair(r, mult));
                else
                    it->second.second += mult;
            }
        }
    }
    for (auto& [codes, pm] : coll) out.factors.push_back(pm);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

std::uint64_t necklace_count(std::uint64_t q, unsigned d) {
    auto mobius = [](u64 v) -> int {
        int cnt = 0;
        for (u64 f = 2; f * f <= v; ++f)
            if (v % f == 0) {
                v /= f;
                if (v % f == 0) return 0;
                ++cnt;
            }
        if (v > 1) ++cnt;
        return (cnt % 2 == 0) ? 1 : -1;
    };
    __int128 sum = 0;
    for (u64 e = 1; e <= d; ++e) {
        if (d % e) continue;
        int mu = mobius(e);
        if (!mu) continue;
        __int128 term = 1;
        for (unsigned i = 0; i < d / e; ++i) term *= q;
        sum += mu * term;
    }
    return static_cast<u64>(sum / d);
}

std::vector<Poly> irreducibles_of_degree(const Field& field, unsigned d) {
    if (d < 1) fail(Errc::BadParams, "degree must be >= 1");
    u64 q = field->q();
    u64 total = 1;
    for (unsigned i = 0; i < d; ++i) {
        if (total > kEnumLimit / q) fail(Errc::BudgetExceeded, "q^d exceeds the enumeration budget");
        total *= q;
    }
    std::vector<Poly> out;
    std::vector<u64> c(d + 1, 0);
    c[d] = 1;
    for (u64 idx = 0; idx < total; ++idx) {
        u64 v = idx;
        for (unsigned i = 0; i < d; ++i) {
            c[i] = v % q;
            v /= q;
        }
        Poly cand = Poly::from_codes(field, c);
        if (is_irreducible(cand)) out.push_back(cand);
    }
    std::sort(out.begin(), out.end(), poly_less);
    if (out.size() != necklace_count(q, d))
        fail(Errc::Internal, "irreducible count disagrees with the necklace formula");
    return out;
}

Poly random_irreducible(const Field& field, unsigned d, std::uint64_t seed) {
    if (d < 1) fail(Errc::BadParams, "degree must be >= 1");
    Rng rng(mix_seed({seed, field->q(), d}));
    while (true) {
        std::vector<u64> c(d + 1);
        for (unsigned i = 0; i < d; ++i) c[i] = rng.below(field->q());
        c[d] = 1;
        Poly cand = Poly::from_codes(field, std::move(c));
        if (is_irreducible(cand)) return cand;
    }
}

std::vector<FieldElement> roots_in_field(const Poly& f) {
    if (f.is_zero() || f.is_constant()) return {};
    std::vector<FieldElement> out;
    for (const auto& [r, m] : factor(f).factors) {
        if (r.degree() == 1) out.emplace_back(f.field(), f.spec().neg(r.code_at(0)));
    }
    std::sort(out.begin(), out.end(), [&](const FieldElement& a, const FieldElement& b) {
        return f.spec().lex_less(a.code(), b.code());
    });
    return out;
}

}  // namespace quomap
