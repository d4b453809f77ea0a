#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quomap/poly.hpp"

namespace quomap {

inline constexpr std::size_t kSubgroupCap = 2000;

// Class [A] in PGL_2(K), stored as the canonical representative: the first
// nonzero entry in order (a, b, c, d) is 1, so equality is bitwise.
class ProjElement {
  public:
    // Errors: SingularMatrix (ad - bc == 0).
    static ProjElement canonical(const Field& field, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c, std::uint64_t d);
    static ProjElement identity(const Field& field) { return canonical(field, 1, 0, 0, 1); }

    const Field& field() const { return field_; }
    const FieldSpec& spec() const { return *field_; }
    std::uint64_t a() const { return a_; }
    std::uint64_t b() const { return b_; }
    std::uint64_t c() const { return c_; }
    std::uint64_t d() const { return d_; }

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

    ProjElement inverse() const { return canonical(field_, d_, spec().neg(b_), spec().neg(c_), a_); }

    friend ProjElement operator*(const ProjElement& x, const ProjElement& y);

    friend bool operator==(const ProjElement& x, const ProjElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const ProjElement& x, const ProjElement& y) { return !(x == y); }
    friend bool operator<(const ProjElement& x, const ProjElement& y) {
        const FieldSpec& F = x.spec();
        if (x.a_ != y.a_) return F.lex_less(x.a_, y.a_);
        if (x.b_ != y.b_) return F.lex_less(x.b_, y.b_);
        if (x.c_ != y.c_) return F.lex_less(x.c_, y.c_);
        return F.lex_less(x.d_, y.d_);
    }

  private:
    ProjElement(Field f, std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d)
        : field_(std::move(f)), a_(a), b_(b), c_(c), d_(d) {}

    Field field_;
    std::uint64_t a_, b_, c_, d_;
};

inline ProjElement canonicalize(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                                const FieldElement& d) {
    return ProjElement::canonical(a.field(), a.code(), b.code(), c.code(), d.code());
}

// Finite closed subgroup, frozen after construction: sorted element set plus
// the generator list it was built from (provenance).
class Subgroup {
  public:
    const Field& field() const { return field_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<ProjElement>& elements() const { return elements_; }
    const std::vector<ProjElement>& generators() const { return generators_; }
    bool contains(const ProjElement& e) const;

  private:
    Subgroup(Field f, std::vector<ProjElement> elems, std::vector<ProjElement> gens)
        : field_(std::move(f)), elements_(std::move(elems)), generators_(std::move(gens)) {}
    friend Subgroup closure(const std::vector<ProjElement>& generators, std::size_t cap);

    Field field_;
    std::vector<ProjElement> elements_;
    std::vector<ProjElement> generators_;
};

// Breadth-first closure under products. Errors: CapExceeded, FieldMismatch.
Subgroup closure(const std::vector<ProjElement>& generators, std::size_t cap = kSubgroupCap);

// Named builders; each generates by closure and cross-checks the expected
// order formula. Errors: BadParams, CapExceeded.
Subgroup build_cyclic(const ProjElement& a, std::size_t cap = kSubgroupCap);
Subgroup build_translations(const Field& field, const std::vector<FieldElement>& span,
                            std::size_t cap = kSubgroupCap);
Subgroup build_diagonal(const Field& field, std::uint64_t n, std::size_t cap = kSubgroupCap);
Subgroup build_borel(const Field& field, std::uint64_t q0, std::size_t cap = kSubgroupCap);
Subgroup build_full_pgl2(const Field& field, std::uint64_t q0, std::size_t cap = kSubgroupCap);

// Moebius action on P^1: infinity |-> a/c (c != 0), -d/c |-> infinity,
// infinity |-> infinity when c == 0.
P1Value mobius_apply(const ProjElement& a, const P1Value& v);

// The *-action on monic polynomials: monic lambda * sum_i f_i (ax+b)^i (cx+d)^(deg-i).
// Roots transport as R_{[A]*f} = [A^-1] o R_f.
// Errors: NotMonic, DegreeDrop (f vanishes at [A] o infinity).
Poly star_transform(const ProjElement& a, const Poly& f);

struct PointOrbit {
    std::vector<P1Value> orbit;  // sorted
    std::size_t stabilizer_size;
};
PointOrbit point_orbit(const Subgroup& g, const P1Value& v);

struct FixedPoints {
    std::vector<Poly> minpolys;  // degree <= 2, monic, sorted
    bool fixes_infinity;
};
// Solves c v^2 + (d-a) v - b = 0 over the algebraic closure, reported through
// minimal polynomials over the base field. Errors: IdentityInput.
FixedPoints fixed_points(const ProjElement& a);

std::uint64_t element_order(const ProjElement& a);

}  // namespace quomap
