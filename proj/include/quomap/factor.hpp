#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quomap/poly.hpp"

namespace quomap {

// Complete factorization: leading * prod factors[i]^mult[i] == input, the
// factors monic irreducible, pairwise distinct, sorted by (degree, lex).
struct Factorization {
    Poly input;
    FieldElement leading;
    std::vector<std::pair<Poly, unsigned>> factors;

    Poly reassemble() const;
};

// Rabin's test. Errors: ConstantInput.
bool is_irreducible(const Poly& f);

// Squarefree split, then distinct-degree, then equal-degree splitting
// (Cantor-Zassenhaus; additive-trace variant in characteristic 2).
// Deterministic given seed. Errors: ConstantInput.
Factorization factor(const Poly& f, std::uint64_t seed = 0);

// All monic irreducibles of degree d, sorted; |result| is checked against
// the necklace formula. Errors: BudgetExceeded (q^d > 2^20).
std::vector<Poly> irreducibles_of_degree(const Field& field, unsigned d);

// Rejection sampling with is_irreducible; deterministic given seed.
Poly random_irreducible(const Field& field, unsigned d, std::uint64_t seed);

// N_q(d) = (1/d) sum_{e|d} mu(e) q^(d/e)
std::uint64_t necklace_count(std::uint64_t q, unsigned d);

// Distinct roots of f in its own field, digit-lex sorted.
std::vector<FieldElement> roots_in_field(const Poly& f);

}  // namespace quomap
