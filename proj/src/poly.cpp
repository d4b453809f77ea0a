#include "quomap/poly.hpp"

#include <algorithm>

namespace quomap {

using u64 = std::uint64_t;

void Poly::check_same(const Poly& a, const Poly& b) {
    if (!a.field_ || !b.field_ || !a.spec().same_field(b.spec()))
        fail(Errc::FieldMismatch, "polynomials over different fields");
}

Poly Poly::monic() const {
    if (is_zero()) fail(Errc::ZeroPolynomial, "monic() of zero");
    if (is_monic()) return *this;
    return scale(leading().inv());
}

Poly Poly::scale(const FieldElement& a) const {
    const FieldSpec& F = spec();
    std::vector<u64> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = F.mul(c_[i], a.code());
    return Poly(field_, std::move(out));
}

FieldElement Poly::eval(const FieldElement& v) const { return {field_, eval_code(v.code())}; }

std::uint64_t Poly::eval_code(std::uint64_t vcode) const {
    const FieldSpec& F = spec();
    u64 acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, vcode), c_[i]);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::check_same(a, b);
    const FieldSpec& F = a.spec();
    std::vector<u64> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.code_at(i), b.code_at(i));
    return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly::check_same(a, b);
    const FieldSpec& F = a.spec();
    std::vector<u64> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.code_at(i), b.code_at(i));
    return Poly(a.field_, std::move(out));
}

Poly Poly::operator-() const {
    const FieldSpec& F = spec();
    std::vector<u64> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = F.neg(c_[i]);
    return Poly(field_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
    const FieldSpec& F = a.spec();
    std::vector<u64> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        u64 ai = a.c_[i];
        if (!ai) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(ai, b.c_[j]));
    }
    return Poly(a.field_, std::move(out));
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
    if (g.is_zero()) fail(Errc::DivisionByZero, "division by the zero polynomial");
    if (f.is_zero()) return {Poly::zero(f.field()), Poly::zero(f.field())};
    const FieldSpec& F = f.spec();
    std::vector<u64> rem = f.codes();
    std::size_t dg = g.degree();
    if (rem.size() - 1 < dg) return {Poly::zero(f.field()), f};
    std::vector<u64> quot(rem.size() - dg, 0);
    u64 lead_inv = F.inv(g.codes().back());
    for (std::size_t i = rem.size(); i-- > dg;) {
        u64 c = F.mul(rem[i], lead_inv);
        if (!c) continue;
        quot[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j)
            rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(c, g.codes()[j]));
    }
    return {Poly::from_codes(f.field(), std::move(quot)), Poly::from_codes(f.field(), std::move(rem))};
}

Poly exact_div(const Poly& f, const Poly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) fail(Errc::Internal, "division expected to be exact");
    return q;
}

Poly gcd_monic(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) fail(Errc::BothZero, "gcd(0, 0)");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        a = divrem(a, b).second;
        std::swap(a, b);
    }
    return a.monic();
}

P1Value eval_p1(const Poly& f, const P1Value& v) {
    if (v.is_finite()) return P1Value::of(f.eval(v.value()));
    if (f.is_constant()) return P1Value::of(FieldElement(f.field(), f.code_at(0)));
    return P1Value::infinity(f.field());
}

Poly derivative(const Poly& f) {
    if (f.is_constant()) return Poly::zero(f.field());
    const FieldSpec& F = f.spec();
    std::vector<u64> out(f.codes().size() - 1);
    for (std::size_t i = 1; i < f.codes().size(); ++i)
        out[i - 1] = F.mul(f.codes()[i], i % F.p());
    return Poly::from_codes(f.field(), std::move(out));
}

namespace {

// u with u(x^p) = f; coefficients get p-th roots (Frobenius inverse).
Poly pth_root_poly(const Poly& f) {
    const FieldSpec& F = f.spec();
    u64 p = F.p();
    std::vector<u64> out(f.codes().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.codes().size(); ++i) {
        if (f.codes()[i] == 0) continue;
        if (i % p != 0) fail(Errc::Internal, "p-th root of a polynomial not in K[x^p]");
        out[i / p] = F.frob(f.codes()[i], F.n() == 1 ? 0 : F.n() - 1);
    }
    return Poly::from_codes(f.field(), std::move(out));
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "squarefree decomposition of zero");
    if (!f.is_monic()) return squarefree_decomposition(f.monic());
    std::vector<std::pair<Poly, unsigned>> out;
    if (f.is_constant()) return out;
    u64 p = f.spec().p();
    Poly fp = derivative(f);
    if (fp.is_zero()) {
        for (auto& [g, m] : squarefree_decomposition(pth_root_poly(f)))
            out.emplace_back(g, m * static_cast<unsigned>(p));
        return out;
    }
    Poly c = gcd_monic(f, fp);
    Poly w = exact_div(f, c);
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = gcd_monic(w, c);
        Poly z = exact_div(w, y);
        if (!z.is_constant()) out.emplace_back(z, i);
        w = y;
        c = exact_div(c, y);
        ++i;
    }
    if (!c.is_one()) {
        for (auto& [g, m] : squarefree_decomposition(pth_root_poly(c)))
            out.emplace_back(g, m * static_cast<unsigned>(p));
    }
    return out;
}

std::pair<Poly, Poly> derivative_squarefree(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "derivative of zero");
    Poly sq = Poly::one(f.field());
    if (!f.is_constant()) {
        for (auto& [g, m] : squarefree_decomposition(f)) sq = sq * g;
    }
    return {derivative(f), sq};
}

Poly poly_pow(const Poly& f, std::uint64_t e) {
    Poly r = Poly::one(f.field());
    Poly b = f;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly reciprocal(const Poly& r) {
    if (r.is_zero() || r.code_at(0) == 0)
        fail(Errc::BadParams, "reciprocal requires a nonzero constant term");
    std::vector<u64> rev(r.codes().rbegin(), r.codes().rend());
    Poly out = Poly::from_codes(r.field(), std::move(rev));
    return out.scale(FieldElement(r.field(), r.spec().inv(r.code_at(0))));
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() < !b.is_zero();
    if (a.codes().size() != b.codes().size()) return a.codes().size() < b.codes().size();
    const FieldSpec& F = a.spec();
    for (std::size_t i = a.codes().size(); i-- > 0;) {
        if (a.codes()[i] != b.codes()[i]) return F.lex_less(a.codes()[i], b.codes()[i]);
    }
    return false;
}

Poly resultant_in_y(const Poly& r, const Poly& g, const Poly& h) {
    if (r.is_zero()) fail(Errc::ZeroPolynomial, "resultant with zero polynomial");
    if (g.is_zero() || h.is_zero()) fail(Errc::BadParams, "resultant needs nonzero g and h");
    if (!gcd_monic(g, h).is_one()) fail(Errc::NotCoprime, "g and h are not coprime");
    if (!h.is_constant() && !gcd_monic(r, h).is_one())
        fail(Errc::NotCoprime, "r shares a root with h");

    const Field& K = r.field();
    std::size_t D = std::max(g.is_constant() ? 0 : g.degree(), h.is_constant() ? 0 : h.degree());
    if (r.is_constant()) {
        // Res_x(c, s) = c^D
        return Poly::constant(FieldElement(K, r.spec().pow(r.code_at(0), D)));
    }
    std::size_t m = r.degree();
    if (D == 0) {
        // s is constant in x: g0 - y*h0 -> Res = s^m
        Poly s = Poly::from_codes(K, {g.code_at(0), 0}) -
                 Poly::from_codes(K, {0, h.code_at(0)});
        return poly_pow(s, m);
    }

    // Sylvester matrix of r (degree m, constant-in-y entries) and
    // s = g - y*h (formal x-degree D, entries of y-degree <= 1).
    std::size_t k = m + D;
    std::vector<std::vector<Poly>> M(k, std::vector<Poly>(k, Poly::zero(K)));
    for (std::size_t row = 0; row < D; ++row)
        for (std::size_t j = 0; j <= m; ++j)
            M[row][row + j] = Poly::constant(FieldElement(K, r.code_at(m - j)));
    const FieldSpec& F = r.spec();
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t j = 0; j <= D; ++j) {
            std::size_t xi = D - j;
            M[D + row][row + j] =
                Poly::from_codes(K, {g.code_at(xi), F.neg(h.code_at(xi))});
        }

    // Bareiss fraction-free elimination over K[y].
    bool negate = false;
    Poly prev = Poly::one(K);
    for (std::size_t t = 0; t + 1 < k; ++t) {
        if (M[t][t].is_zero()) {
            std::size_t swap_row = t;
            for (std::size_t i = t + 1; i < k; ++i)
                if (!M[i][t].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == t) return Poly::zero(K);  // singular: resultant 0
            std::swap(M[t], M[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = t + 1; i < k; ++i) {
            for (std::size_t j = t + 1; j < k; ++j)
                M[i][j] = exact_div(M[t][t] * M[i][j] - M[i][t] * M[t][j], prev);
            M[i][t] = Poly::zero(K);
        }
        prev = M[t][t];
    }
    Poly det = M[k - 1][k - 1];
    return negate ? -det : det;
}

}  // namespace quomap
