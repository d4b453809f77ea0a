#pragma once

#include <json.hpp>

#include "quomap/factor.hpp"
#include "quomap/invariant.hpp"
#include "quomap/quotient.hpp"

namespace quomap {

using nlohmann::json;

// Elements serialize as numbers over prime fields and as `(c0,...)` strings
// over extensions; polynomials as ascending coefficient arrays.
json elem_json(const FieldElement& a);
json poly_json(const Poly& f);
json field_json(const FieldSpec& f);  // {"p":, "n":, "modulus": [...]}

// {"leading": <elem>, "factors": [{"poly": [...], "mult": m}, ...]}
json factorization_json(const Factorization& fac);

// {"num": [...], "den": [...], "group_size": n, "verified": true}
json quotient_map_json(const QuotientMap& q);

// {"F": [...], "r": [...], "orbit": [[...], ...], "k": k, "checks": {...}}
json certificate_json(const OrbitCertificate& cert);

json locus_json(const ExceptionalLocus& locus);

json decomposition_json(const Decomposition& dec);

}  // namespace quomap
