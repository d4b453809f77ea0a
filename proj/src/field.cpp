#include "quomap/field.hpp"

#include <algorithm>

namespace quomap {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::DegreeTooLarge: return "DegreeTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::NotASubfield: return "NotASubfield";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::BothZero: return "BothZero";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::ConstantInput: return "ConstantInput";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::BadParams: return "BadParams";
        case Errc::IdentityInput: return "IdentityInput";
        case Errc::DegreeDrop: return "DegreeDrop";
        case Errc::NotMonic: return "NotMonic";
        case Errc::ZeroDenominator: return "ZeroDenominator";
        case Errc::ZeroNumerator: return "ZeroNumerator";
        case Errc::ValueAtInfinityIsRoot: return "ValueAtInfinityIsRoot";
        case Errc::NoGeneratorFound: return "NoGeneratorFound";
        case Errc::NoRationalOrbit: return "NoRationalOrbit";
        case Errc::NotAGenerator: return "NotAGenerator";
        case Errc::OutsideNR: return "OutsideNR";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::CertificateViolation: return "CertificateViolation";
        case Errc::NotInvariant: return "NotInvariant";
        case Errc::MultiplicityMismatch: return "MultiplicityMismatch";
        case Errc::NotSeparable: return "NotSeparable";
        case Errc::ParseError: return "ParseError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// --- polynomials over Z_p, dense ascending coefficients; for the modulus
// search only (runs before any FieldSpec exists).

using ZPoly = std::vector<u64>;

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmulmod(const ZPoly& a, const ZPoly& b, const ZPoly& mod, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u128> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += (u128)a[i] * b[j] % p;
    }
    ZPoly c(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<u64>(acc[i] % p);
    // reduce mod the monic modulus
    std::size_t n = mod.size() - 1;
    for (std::size_t i = c.size(); i-- > n;) {
        u64 t = c[i];
        if (!t) continue;
        c[i] = 0;
        for (std::size_t j = 0; j < n; ++j) c[i - n + j] = (c[i - n + j] + (p - mulmod(t, mod[j], p))) % p;
    }
    c.resize(n);
    ztrim(c);
    return c;
}

ZPoly zpowmod_xq(ZPoly base, u64 e, const ZPoly& mod, u64 p) {
    ZPoly r{1};
    while (e) {
        if (e & 1) r = zmulmod(r, base, mod, p);
        base = zmulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

ZPoly zgcd(ZPoly a, ZPoly b, u64 p) {
    ztrim(a);
    ztrim(b);
    while (!b.empty()) {
        // a mod b
        u64 lead_inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            u64 c = mulmod(a.back(), lead_inv, p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + (p - mulmod(c, b[i], p))) % p;
            ztrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

std::vector<u64> prime_factors_u64(u64 v) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

// Rabin irreducibility over Z_p for a monic f of degree >= 1.
bool zirreducible(const ZPoly& f, u64 p) {
    std::size_t n = f.size() - 1;
    if (n == 1) return true;
    ZPoly x{0, 1};
    // t = x^(p^e) mod f, advanced one p-power at a time
    ZPoly t = x;
    std::vector<ZPoly> at_degree(n + 1);
    for (std::size_t e = 1; e <= n; ++e) {
        t = zpowmod_xq(t, p, f, p);
        at_degree[e] = t;
    }
    ZPoly top = at_degree[n];
    // x^(p^n) == x mod f
    if (top != x) return false;
    for (u64 ell : prime_factors_u64(n)) {
        ZPoly d = at_degree[n / ell];
        // d - x
        ZPoly diff = d;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        ztrim(diff);
        ZPoly g = zgcd(f, diff, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (u64 s : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (v % s == 0) return v == s;
    }
    u64 d = v - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, v);
            if (x == v - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// --- FieldSpec code arithmetic ---

std::vector<std::uint64_t> FieldSpec::to_digits(std::uint64_t code) const {
    std::vector<u64> d(n_);
    for (unsigned i = 0; i < n_; ++i) {
        d[i] = code % p_;
        code /= p_;
    }
    return d;
}

std::uint64_t FieldSpec::from_digits(const std::vector<std::uint64_t>& digits) const {
    u64 code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * p_ + digits[i] % p_;
    return code;
}

std::uint64_t FieldSpec::add(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    if (n_ == 1) {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 out = 0;
    for (unsigned i = 0; i < n_; ++i) {
        u64 da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        u64 s = da + db;
        if (s >= p_) s -= p_;
        out += s * p_pow_[i];
    }
    return out;
}

std::uint64_t FieldSpec::neg(std::uint64_t a) const {
    if (p_ == 2) return a;
    if (n_ == 1) return a == 0 ? 0 : p_ - a;
    u64 out = 0;
    for (unsigned i = 0; i < n_; ++i) {
        u64 da = a % p_;
        a /= p_;
        out += (da == 0 ? 0 : p_ - da) * p_pow_[i];
    }
    return out;
}

std::uint64_t FieldSpec::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FieldSpec::mul_raw(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (n_ == 1) return mulmod(a, b, p_);
    std::vector<u64> da = to_digits(a), db = to_digits(b);
    std::vector<u128> acc(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < n_; ++j) acc[i + j] += (u128)da[i] * db[j] % p_;
    }
    std::vector<u64> c(2 * n_ - 1);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<u64>(acc[i] % p_);
    for (std::size_t i = c.size(); i-- > n_;) {
        u64 t = c[i];
        if (!t) continue;
        c[i] = 0;
        for (unsigned j = 0; j < n_; ++j) c[i - n_ + j] = (c[i - n_ + j] + (p_ - mulmod(t, modulus_[j], p_))) % p_;
    }
    c.resize(n_);
    return from_digits(c);
}

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) {
        u64 s = log_[a] + log_[b];
        u64 m = q_ - 1;
        if (s >= m) s -= m;
        return exp_[s];
    }
    return mul_raw(a, b);
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    if (tables_) {
        u64 l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }
    return pow(a, q_ - 2);
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const {
    if (tables_ && a != 0) {
        u64 m = q_ - 1;
        return exp_[static_cast<u64>((u128)log_[a] * (e % m) % m)];
    }
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldSpec::frob(std::uint64_t a, std::uint64_t iterations) const {
    iterations %= n_;
    for (u64 i = 0; i < iterations; ++i) a = pow(a, p_);
    return a;
}

bool FieldSpec::lex_less(std::uint64_t a, std::uint64_t b) const {
    if (a == b) return false;
    for (unsigned i = 0; i < n_; ++i) {
        u64 da = a % p_, db = b % p_;
        if (da != db) return da < db;
        a /= p_;
        b /= p_;
    }
    return false;
}

std::uint64_t FieldSpec::primitive_element() const {
    if (!tables_) fail(Errc::BudgetExceeded, "primitive element search needs q <= 2^20");
    return generator_;
}

void FieldSpec::init_tables() {
    if (q_ > kEnumLimit) return;
    std::vector<u64> fac = prime_factors_u64(q_ - 1);
    u64 g = 0;
    for (u64 cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (u64 ell : fac) {
            u64 e = (q_ - 1) / ell;
            // table-free power
            u64 r = 1, b = cand, k = e;
            while (k) {
                if (k & 1) r = mul_raw(r, b);
                b = mul_raw(b, b);
                k >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (g == 0 && q_ == 2) g = 1;
    if (g == 0) fail(Errc::Internal, "no primitive element found");
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    u64 v = 1;
    for (u64 i = 0; i < q_ - 1; ++i) {
        exp_[i] = v;
        log_[v] = static_cast<std::uint32_t>(i);
        v = mul_raw(v, g);
    }
    if (v != 1) fail(Errc::Internal, "generator order mismatch");
    generator_ = g;
    tables_ = true;
}

Field make_field(std::uint64_t p, unsigned n) {
    if (!is_prime_u64(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) fail(Errc::BadParams, "extension degree must be >= 1");
    u64 q = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (q > UINT64_MAX / p) fail(Errc::DegreeTooLarge, "p^n exceeds the 64-bit element budget");
        q *= p;
    }
    std::vector<u64> modulus;
    if (n == 1) {
        modulus = {0, 1};
    } else {
        // lex-smallest monic irreducible: scan (c0,...,c_{n-1}) with c0 most
        // significant; the c0 = 0 block is reducible (x divides), skip it.
        std::vector<u64> c(n, 0);
        c[0] = 1;
        auto advance = [&]() {  // odometer, c[n-1] fastest
            for (unsigned i = n; i-- > 0;) {
                if (++c[i] < p) return true;
                c[i] = 0;
            }
            return false;
        };
        bool found = false;
        do {
            ZPoly f(n + 1, 0);
            for (unsigned i = 0; i < n; ++i) f[i] = c[i];
            f[n] = 1;
            if (zirreducible(f, p)) {
                modulus = f;
                found = true;
                break;
            }
        } while (advance());
        if (!found) fail(Errc::Internal, "no irreducible modulus found");
    }
    return make_field_with_modulus(p, modulus);
}

Field make_field_with_modulus(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
    if (!is_prime_u64(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (modulus.size() < 2) fail(Errc::BadParams, "modulus must have degree >= 1");
    unsigned n = static_cast<unsigned>(modulus.size() - 1);
    ZPoly f = modulus;
    for (auto& coeff : f) {
        if (coeff >= p) fail(Errc::BadParams, "modulus coefficient out of range");
    }
    if (f[n] != 1) fail(Errc::NotMonic, "modulus must be monic");
    if (n > 1 && !zirreducible(f, p)) fail(Errc::BadParams, "modulus is reducible");
    u64 q = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (q > UINT64_MAX / p) fail(Errc::DegreeTooLarge, "p^n exceeds the 64-bit element budget");
        q *= p;
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->n_ = n;
    spec->q_ = q;
    spec->modulus_ = modulus;
    spec->p_pow_.resize(n + 1);
    spec->p_pow_[0] = 1;
    for (unsigned i = 1; i <= n; ++i) spec->p_pow_[i] = spec->p_pow_[i - 1] * p;
    spec->init_tables();
    return spec;
}

}  // namespace quomap
