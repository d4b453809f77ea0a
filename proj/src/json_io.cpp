#include "quomap/json_io.hpp"

#include "quomap/text.hpp"

namespace quomap {

json elem_json(const FieldElement& a) {
    if (a.spec().is_prime_field()) return a.code();
    return to_string(a);
}

json poly_json(const Poly& f) {
    json arr = json::array();
    for (std::size_t i = 0; i < f.codes().size(); ++i) arr.push_back(elem_json(f.coeff(i)));
    return arr;
}

json field_json(const FieldSpec& f) {
    return json{{"p", f.p()}, {"n", f.n()}, {"modulus", f.modulus()}};
}

json factorization_json(const Factorization& fac) {
    json factors = json::array();
    for (const auto& [p, m] : fac.factors) factors.push_back(json{{"poly", poly_json(p)}, {"mult", m}});
    return json{{"leading", elem_json(fac.leading)}, {"factors", factors}};
}

json quotient_map_json(const QuotientMap& q) {
    return json{{"num", poly_json(q.num())},
                {"den", poly_json(q.den())},
                {"group_size", q.group().size()},
                {"verified", true}};
}

json certificate_json(const OrbitCertificate& cert) {
    json orbit = json::array();
    for (const Poly& t : cert.orbit) orbit.push_back(poly_json(t));
    return json{{"F", poly_json(cert.F)},
                {"r", poly_json(cert.r)},
                {"orbit", orbit},
                {"k", cert.k},
                {"checks",
                 json{{"product", cert.checks.product},
                      {"single_orbit", cert.checks.single_orbit},
                      {"uniform_mult", cert.checks.uniform_multiplicity},
                      {"degree_div", cert.checks.degree_divides},
                      {"count", cert.checks.counting}}}};
}

json locus_json(const ExceptionalLocus& locus) {
    json minpolys = json::array();
    for (const Poly& r : locus.minpolys) minpolys.push_back(poly_json(r));
    json partition = json::array();
    for (const auto& orbit : locus.orbit_partition) partition.push_back(orbit);
    json nc = json::array();
    for (const auto& e : locus.nonconformal)
        nc.push_back(json{{"F", poly_json(e.F)}, {"n", e.n}, {"orbit_index", e.orbit_index}});
    return json{{"includes_infinity_class", locus.includes_infinity_class},
                {"minpolys", minpolys},
                {"orbit_partition", partition},
                {"nonconformal", nc}};
}

json decomposition_json(const Decomposition& dec) {
    json exps = json::array();
    for (const auto& [i, k] : dec.exceptional_exponents) exps.push_back(json{{"i", i}, {"k", k}});
    return json{{"input", poly_json(dec.input)},
                {"F", poly_json(dec.F)},
                {"exceptional_exponents", exps}};
}

}  // namespace quomap
