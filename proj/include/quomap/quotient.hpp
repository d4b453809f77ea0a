#pragma once

#include <memory>

#include "quomap/rational.hpp"

namespace quomap {

// Normalized generator of K(x)^G: deg num = |G| > deg den, num monic,
// invariance under every class of G verified at construction, and
// Q(infinity) = infinity.
class QuotientMap {
  public:
    const RationalFunction& rf() const { return rf_; }
    const Poly& num() const { return rf_.num(); }
    const Poly& den() const { return rf_.den(); }
    const Subgroup& group() const { return *group_; }
    std::shared_ptr<const Subgroup> group_ptr() const { return group_; }

  private:
    QuotientMap(RationalFunction rf, std::shared_ptr<const Subgroup> g)
        : rf_(std::move(rf)), group_(std::move(g)) {}
    friend QuotientMap normalize_to_quotient_map(const RationalFunction& q, const Subgroup& g);

    RationalFunction rf_;
    std::shared_ptr<const Subgroup> group_;
};

// deg Q = |G| and Q([A] o x) = Q for every [A] in G.
bool verify_generator(const RationalFunction& q, const Subgroup& g);

// If Q(infinity) is finite beta, pass to 1/(Q - beta); rescale. Errors:
// NotAGenerator.
QuotientMap normalize_to_quotient_map(const RationalFunction& q, const Subgroup& g);

// Coefficient method: N(x,y) = prod_{[A]}((c x + d) y - (a x + b)); the first
// y-coefficient ratio N_j / N_{|G|} (ascending j) of degree |G| that verifies
// becomes the quotient map. Errors: NoGeneratorFound (implementation bug;
// existence is guaranteed).
QuotientMap quotient_map_fg(const Subgroup& g);

// Orbit method: picks v in the base field with G o v disjoint from
// G o infinity, maximizing the orbit size (ties: digit-lex least), and forms
// prod (x-u)^{m_v} / prod (x-u)^{m_inf}. Errors: NoRationalOrbit.
QuotientMap quotient_map_bluher(const Subgroup& g);

// Same quotient map up to the affine freedom a*Q + b.
bool affine_equivalent(const RationalFunction& q1, const RationalFunction& q2);
inline bool affine_equivalent(const QuotientMap& q1, const QuotientMap& q2) {
    return affine_equivalent(q1.rf(), q2.rf());
}

// The documented closed forms for the named subgroup families; q0/n as in
// the corresponding builder. Coefficients live in the subfield and are
// embedded into the group's ambient field.
QuotientMap closed_form_borel(const Subgroup& borel, std::uint64_t q0);
QuotientMap closed_form_pgl2(const Subgroup& pgl2, std::uint64_t q0);
QuotientMap closed_form_diagonal(const Subgroup& diag, std::uint64_t n);

// Coefficientwise embedding of a polynomial into an extension.
Poly embed_poly(const Poly& f, const Field& target);

}  // namespace quomap
