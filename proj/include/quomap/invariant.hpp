#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "quomap/quotient.hpp"

namespace quomap {

// f monic with no roots in (G o infinity) \ {infinity}.
bool in_nr(const Poly& f, const Subgroup& g);

// star_transform(A, f) == f for the generators (all elements re-checked in
// debug builds). Errors: NotMonic, OutsideNR.
bool is_invariant(const Poly& f, const Subgroup& g);

struct OrbitPoly {
    std::vector<Poly> orbit;  // lex-sorted, deduplicated
    Poly product;             // the orbit polynomial, G-invariant
};
// Errors: NotIrreducible, OutsideNR.
OrbitPoly orbit_poly(const Poly& r, const Subgroup& g);

// Witness that F^{Q_G} = (prod orbit)^k for a single G-orbit.
struct OrbitCertificate {
    Poly F;
    Poly r;                   // lex-least orbit member
    std::vector<Poly> orbit;  // lex-sorted
    unsigned k;

    struct Checks {
        bool product = false;          // (prod orbit)^k == F^{Q_G}
        bool single_orbit = false;     // factor set == orbit set
        bool uniform_multiplicity = false;
        bool degree_divides = false;   // deg F | deg r
        bool counting = false;         // |orbit| * deg r * k == |G| * deg F
        bool all() const {
            return product && single_orbit && uniform_multiplicity && degree_divides && counting;
        }
    };
    Checks checks;
};

// Recomputes every certificate check from scratch; used by the factorizer
// and by fault-injection tests.
OrbitCertificate::Checks validate_certificate(const Poly& F, const QuotientMap& q, const Poly& r,
                                              const std::vector<Poly>& orbit, unsigned k);

// Factor F^{Q_G} and certify it as a power of a single orbit polynomial;
// k = 1 is enforced whenever F^{Q_G} is coprime to the fixed-point minimal
// polynomials. Errors: NotIrreducible, CertificateViolation.
OrbitCertificate main_factorization(const Poly& F, const QuotientMap& q);

// The unique F with r | F^{Q_G}, via Res_x(r, g - y h). Errors: OutsideNR.
Poly pushforward_minpoly(const Poly& r, const QuotientMap& q);

// Minimal polynomials of fixed points of non-identity classes, with the
// ones rooted in (G o infinity) \ {infinity} discarded; sorted, deduplicated.
std::vector<Poly> exceptional_minpolys(const Subgroup& g);

struct ExceptionalLocus {
    bool includes_infinity_class = false;           // infinity in P_G
    std::vector<Poly> minpolys;                     // the set P_G's minimal polynomials
    std::vector<std::vector<std::size_t>> orbit_partition;  // indices into minpolys

    struct NonConformal {
        Poly F;
        unsigned n;               // F^{Q_G} = (orbit polynomial)^n, n >= 2
        std::size_t orbit_index;  // into orbit_partition
    };
    std::vector<NonConformal> nonconformal;
};
ExceptionalLocus exceptional_locus(const Subgroup& g, const QuotientMap& q);

struct Decomposition {
    Poly input;
    Poly F;
    // nonconformal index -> k_i with 0 <= k_i < n_i (all indices present)
    std::map<std::size_t, unsigned> exceptional_exponents;
};

// Theorem-fac2 decomposition: f = (prod_i orbitpoly_i^{k_i}) * F^{Q_G},
// verified bit-exactly before returning. Errors: NotInvariant,
// MultiplicityMismatch, OutsideNR, CertificateViolation.
Decomposition decompose_invariant(const Poly& f, const Subgroup& g, const QuotientMap& q,
                                  const ExceptionalLocus& locus);

struct FacfinReport {
    std::uint64_t mu;                 // max order of an element of G
    std::size_t factor_count;
    std::size_t max_factor_degree;
    std::vector<Poly> factors;
    std::vector<std::size_t> stabilizer_orders;  // per factor, |Stab_G(r)|
    bool stabilizers_cyclic;          // for factors of degree >= 3
    bool count_bound_ok;              // factor_count >= |G| / mu
    bool degree_bound_ok;             // max degree <= mu * deg F
};

// Factor-count and factor-degree bounds for separable transforms.
// Errors: NotSeparable, NotIrreducible.
FacfinReport facfin_check(const Poly& F, const Subgroup& g, const QuotientMap& q);

}  // namespace quomap
