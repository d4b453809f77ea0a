#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "quomap/pgl2.hpp"
#include "quomap/rational.hpp"

namespace quomap {

// Element text form: integer literal for prime fields, `(c0,c1,...)` digit
// tuple for extensions (constant digit first). Polynomial text: terms joined
// by + or -, each `coeff`, `coeff*x^k`, `x^k`, `x`; canonical output is
// descending. Rational functions: `<poly>` or `<poly> / <poly>`. Matrices:
// `[[a,b],[c,d]]`.

std::string to_string(const FieldElement& a);
std::string to_string(const Poly& f);
std::string to_string(const RationalFunction& q);
std::string to_string(const ProjElement& m);
std::string to_string(const P1Value& v);

FieldElement parse_element(const Field& field, std::string_view text);
Poly parse_poly(const Field& field, std::string_view text);
RationalFunction parse_rf(const Field& field, std::string_view text);
ProjElement parse_matrix(const Field& field, std::string_view text);

struct FieldDesc {
    std::uint64_t p;
    unsigned n;
};
// `GF(q)` with q resolved as a prime power, or explicit `GF(p^n)`.
FieldDesc parse_field_desc(std::string_view text);

enum class GroupKind { Cyclic, Gens, Translations, Diagonal, Borel, Pgl2 };

struct GroupSpec {
    GroupKind kind;
    std::vector<ProjElement> matrices;   // cyclic, gens
    std::vector<FieldElement> elements;  // translations
    std::uint64_t param = 0;             // diagonal n, borel/pgl2 q0
};

// `cyclic:[[..]]`, `gens:[[..]],[[..]]`, `translations:v1,...`,
// `diagonal:n`, `borel:q0`, `pgl2:q0`
GroupSpec parse_group_spec(const Field& field, std::string_view text);
Subgroup build_group(const Field& field, const GroupSpec& spec, std::size_t cap = kSubgroupCap);

// caret-annotated two-line rendering of a parse failure
std::string render_parse_failure(const ParseFailure& err);

}  // namespace quomap
