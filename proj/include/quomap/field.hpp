#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "quomap/errors.hpp"

namespace quomap {

class FieldSpec;

// Shared immutable field description. Elements and polynomials keep one of
// these alive; all arithmetic goes through it.
using Field = std::shared_ptr<const FieldSpec>;

// Enumeration budget (irreducible listings, subgroup/table construction).
inline constexpr std::uint64_t kEnumLimit = 1ULL << 20;

// GF(p^n) with the canonical modulus: the lexicographically smallest monic
// irreducible of degree n over Z_p, comparing coefficient tuples
// (c0,...,c_{n-1}) with c0 (the constant term) most significant.
//
// Elements are stored as codes: code = sum_i d_i * p^i for the digit vector
// (d0,...,d_{n-1}), d0 the constant digit. Codes are dense in [0, q).
class FieldSpec {
  public:
    std::uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint64_t q() const { return q_; }
    bool is_prime_field() const { return n_ == 1; }
    // Ascending coefficients, length n+1, monic.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    bool same_field(const FieldSpec& other) const {
        return this == &other || (p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_);
    }

    // --- code-level arithmetic ---
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;  // DivisionByZero on 0
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t frob(std::uint64_t a, std::uint64_t iterations) const;  // a^(p^iterations)

    std::vector<std::uint64_t> to_digits(std::uint64_t code) const;
    std::uint64_t from_digits(const std::vector<std::uint64_t>& digits) const;

    // Digit-sequence lexicographic order (d0 first); the canonical total
    // order on elements used everywhere determinism is required.
    bool lex_less(std::uint64_t a, std::uint64_t b) const;

    // Smallest (in code order) generator of the multiplicative group.
    // Requires q <= kEnumLimit.
    std::uint64_t primitive_element() const;

  private:
    FieldSpec() = default;
    friend Field make_field(std::uint64_t p, unsigned n);
    friend Field make_field_with_modulus(std::uint64_t p, const std::vector<std::uint64_t>& modulus);

    void init_tables();
    std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const;  // table-free path

    std::uint64_t p_ = 0;
    unsigned n_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint64_t> p_pow_;  // p^0 .. p^n

    bool tables_ = false;
    std::uint64_t generator_ = 0;               // code of the table generator
    std::vector<std::uint32_t> log_;             // index by code, log_[0] unused
    std::vector<std::uint64_t> exp_;             // g^i for i in [0, q-1)
};

// Deterministic across runs and platforms. Errors: NotPrime, DegreeTooLarge.
Field make_field(std::uint64_t p, unsigned n);

// Same field but with a caller-supplied monic irreducible modulus
// (the CLI --modulus override). Validates the modulus.
Field make_field_with_modulus(std::uint64_t p, const std::vector<std::uint64_t>& modulus);

bool is_prime_u64(std::uint64_t v);

class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(Field field, std::uint64_t code) : field_(std::move(field)), code_(code) {}

    const Field& field() const { return field_; }
    const FieldSpec& spec() const { return *field_; }
    std::uint64_t code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }

    FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }
    FieldElement inv() const { return {field_, field_->inv(code_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->add(a.code_, b.code_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->sub(a.code_, b.code_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->mul(a.code_, b.code_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->div(a.code_, b.code_)};
    }
    FieldElement operator-() const { return {field_, field_->neg(code_)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.code_ == b.code_ && a.spec().same_field(b.spec());
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (!a.field_ || !b.field_ || !a.spec().same_field(b.spec()))
            fail(Errc::FieldMismatch, "elements belong to different fields");
    }

    Field field_;
    std::uint64_t code_ = 0;
};

inline FieldElement elem(const Field& f, std::uint64_t code) { return {f, code % f->q()}; }

inline FieldElement frobenius(const FieldElement& a, std::uint64_t iterations) {
    return {a.field(), a.spec().frob(a.code(), iterations)};
}

// Ring embedding GF(p^m) -> GF(p^(m*s)). The subfield generator maps to the
// root of the subfield modulus whose digit sequence is lex-smallest in the
// target. Errors: NotASubfield. Implemented in embed.cpp (needs factoring).
FieldElement embed(const FieldElement& a, const Field& target);

}  // namespace quomap
