#include "quomap/factor.hpp"
#include "quomap/field.hpp"

namespace quomap {

using u64 = std::uint64_t;

FieldElement embed(const FieldElement& a, const Field& target) {
    const FieldSpec& S = a.spec();
    const FieldSpec& T = *target;
    if (S.p() != T.p() || T.n() % S.n() != 0)
        fail(Errc::NotASubfield, "source field is not a subfield of the target");
    if (S.same_field(T)) return {target, a.code()};
    if (S.is_prime_field()) return {target, a.code()};  // constants embed as constants

    // Image of the subfield generator: lex-smallest root of the subfield
    // modulus in the target.
    std::vector<u64> mod_codes(S.modulus().begin(), S.modulus().end());
    Poly mu = Poly::from_codes(target, std::move(mod_codes));
    std::vector<FieldElement> roots = roots_in_field(mu);
    if (roots.size() != S.n())
        fail(Errc::Internal, "subfield modulus does not split in the target");
    u64 rho = roots.front().code();

    std::vector<u64> digits = S.to_digits(a.code());
    u64 acc = 0;
    for (std::size_t i = digits.size(); i-- > 0;) acc = T.add(T.mul(acc, rho), digits[i]);
    return {target, acc};
}

}  // namespace quomap
