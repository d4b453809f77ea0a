#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quomap/field.hpp"

namespace quomap {

// Dense univariate polynomial over one field. Coefficients ascending, stored
// as element codes with no trailing zeros; the empty sequence encodes 0.
// deg(0) is deliberately not representable: degree() requires a nonzero
// polynomial and every caller guards the zero case explicitly.
class Poly {
  public:
    Poly() = default;

    static Poly zero(const Field& f) { return Poly(f, {}); }
    static Poly one(const Field& f) { return Poly(f, {1}); }
    static Poly x(const Field& f) { return Poly(f, {0, 1}); }
    static Poly constant(const FieldElement& a) { return Poly(a.field(), {a.code()}); }
    static Poly from_codes(const Field& f, std::vector<std::uint64_t> codes) {
        return Poly(f, std::move(codes));
    }
    static Poly monomial(const Field& f, std::uint64_t coeff_code, std::size_t deg) {
        std::vector<std::uint64_t> c(deg + 1, 0);
        c[deg] = coeff_code;
        return Poly(f, std::move(c));
    }
    // x - root
    static Poly linear_root(const FieldElement& root) {
        return Poly(root.field(), {root.spec().neg(root.code()), 1});
    }

    const Field& field() const { return field_; }
    const FieldSpec& spec() const { return *field_; }
    const std::vector<std::uint64_t>& codes() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    std::size_t degree() const {
        if (is_zero()) fail(Errc::ZeroPolynomial, "degree of the zero polynomial");
        return c_.size() - 1;
    }

    std::uint64_t code_at(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FieldElement coeff(std::size_t i) const { return {field_, code_at(i)}; }
    FieldElement leading() const { return {field_, is_zero() ? 0 : c_.back()}; }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    Poly monic() const;
    Poly scale(const FieldElement& a) const;
    FieldElement eval(const FieldElement& v) const;
    std::uint64_t eval_code(std::uint64_t vcode) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.c_ == b.c_ && (a.c_.empty() || a.spec().same_field(b.spec()));
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    Poly(Field f, std::vector<std::uint64_t> codes) : field_(std::move(f)), c_(std::move(codes)) {
        trim();
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    static void check_same(const Poly& a, const Poly& b);

    Field field_;
    std::vector<std::uint64_t> c_;
};

// Point of the projective line over a field: an element or infinity.
class P1Value {
  public:
    static P1Value infinity(const Field& f) { return P1Value(f, false, 0); }
    static P1Value of(const FieldElement& a) { return P1Value(a.field(), true, a.code()); }

    bool is_finite() const { return finite_; }
    bool is_infinity() const { return !finite_; }
    FieldElement value() const {
        if (!finite_) fail(Errc::Internal, "value() on the point at infinity");
        return {field_, code_};
    }
    std::uint64_t code() const { return code_; }
    const Field& field() const { return field_; }

    friend bool operator==(const P1Value& a, const P1Value& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.code_ == b.code_);
    }
    friend bool operator!=(const P1Value& a, const P1Value& b) { return !(a == b); }
    // finite points in digit-lex order first, infinity last
    friend bool operator<(const P1Value& a, const P1Value& b) {
        if (a.finite_ != b.finite_) return a.finite_;
        if (!a.finite_) return false;
        return a.field_->lex_less(a.code_, b.code_);
    }

  private:
    P1Value(Field f, bool finite, std::uint64_t code)
        : field_(std::move(f)), finite_(finite), code_(code) {}

    Field field_;
    bool finite_;
    std::uint64_t code_;
};

// f = quot*g + rem with deg(rem) < deg(g). Errors: DivisionByZero.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
Poly exact_div(const Poly& f, const Poly& g);  // Internal error on nonzero remainder

// Monic gcd; gcd(f, 0) = monic(f). Errors: BothZero.
Poly gcd_monic(const Poly& f, const Poly& g);

// Evaluation with the projective conventions: f(inf) = inf for deg f >= 1,
// a(inf) = a for constants (including 0 for the zero polynomial).
P1Value eval_p1(const Poly& f, const P1Value& v);

Poly derivative(const Poly& f);

// (f', squarefree part of f). Handles the char-p derivative collapse via
// coefficient p-th roots (the base field is perfect). Errors: ZeroPolynomial.
std::pair<Poly, Poly> derivative_squarefree(const Poly& f);

// Full squarefree decomposition of a monic nonconstant f: pairwise coprime
// monic parts with multiplicities, product reassembles f.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

// Res_x(r(x), g(x) - y*h(x)) as a polynomial in y over the same field,
// computed by fraction-free (Bareiss) elimination on the Sylvester matrix.
// A nonzero scalar multiple of prod_{v in roots(r)} (y - g(v)/h(v)).
// Errors: NotCoprime (r shares a root with h, or gcd(g,h) != 1).
Poly resultant_in_y(const Poly& r, const Poly& g, const Poly& h);

Poly poly_pow(const Poly& f, std::uint64_t e);

// a0^{-1} x^{deg r} r(1/x); requires r(0) != 0.
Poly reciprocal(const Poly& r);

// Total order: zero first, then by degree, then coefficients compared from
// the leading one down, each by digit-lex. Fixes all canonical orderings
// (factor lists, orbit representatives, enumerations).
bool poly_less(const Poly& a, const Poly& b);

}  // namespace quomap
