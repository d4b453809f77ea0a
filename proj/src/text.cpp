#include "quomap/text.hpp"

#include <cctype>
#include <sstream>

namespace quomap {

using u64 = std::uint64_t;

std::string to_string(const FieldElement& a) {
    const FieldSpec& F = a.spec();
    if (F.is_prime_field()) return std::to_string(a.code());
    std::ostringstream os;
    os << '(';
    auto digits = F.to_digits(a.code());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) os << ',';
        os << digits[i];
    }
    os << ')';
    return os.str();
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.codes().size(); i-- > 0;) {
        u64 c = f.codes()[i];
        if (!c) continue;
        if (!first) os << '+';
        first = false;
        FieldElement coeff(f.field(), c);
        if (i == 0) {
            os << to_string(coeff);
            continue;
        }
        if (c != 1) os << to_string(coeff) << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::string to_string(const RationalFunction& q) {
    if (q.den().is_one()) return to_string(q.num());
    return "(" + to_string(q.num()) + ")/(" + to_string(q.den()) + ")";
}

std::string to_string(const ProjElement& m) {
    const Field& K = m.field();
    return "[[" + to_string(FieldElement(K, m.a())) + "," + to_string(FieldElement(K, m.b())) +
           "],[" + to_string(FieldElement(K, m.c())) + "," + to_string(FieldElement(K, m.d())) +
           "]]";
}

std::string to_string(const P1Value& v) {
    return v.is_infinity() ? std::string("inf") : to_string(v.value());
}

namespace {

struct Cursor {
    std::string text;
    std::size_t i = 0;

    explicit Cursor(std::string_view sv) : text(sv) {}

    [[noreturn]] void error(const std::string& msg) const { throw ParseFailure(i, msg, text); }

    void skip_ws() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= text.size();
    }
    char peek() {
        skip_ws();
        return i < text.size() ? text[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < text.size() && text[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) error(std::string("expected '") + c + "'");
    }
    u64 parse_uint() {
        skip_ws();
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            error("expected a number");
        u64 v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            u64 d = static_cast<u64>(text[i] - '0');
            if (v > (UINT64_MAX - d) / 10) error("number too large");
            v = v * 10 + d;
            ++i;
        }
        return v;
    }
};

u64 parse_element_code(Cursor& cur, const Field& field) {
    const FieldSpec& F = *field;
    if (cur.eat('(')) {
        std::vector<u64> digits;
        if (!cur.eat(')')) {
            do {
                digits.push_back(cur.parse_uint() % F.p());
            } while (cur.eat(','));
            cur.expect(')');
        }
        if (digits.size() > F.n()) cur.error("too many digits for this field");
        digits.resize(F.n(), 0);
        return F.from_digits(digits);
    }
    u64 v = cur.parse_uint();
    if (F.is_prime_field()) return v % F.p();
    return v % F.p();  // bare integers are prime-subfield constants
}

// term := coeff | coeff '*'? x-part | x-part;  x-part := 'x' ('^' k)?
std::pair<u64, std::size_t> parse_term(Cursor& cur, const Field& field) {
    u64 coeff = 1;
    bool have_coeff = false;
    char c = cur.peek();
    if (c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        coeff = parse_element_code(cur, field);
        have_coeff = true;
        cur.eat('*');
    }
    if (cur.peek() == 'x' || cur.peek() == 'X') {
        ++cur.i;
        std::size_t k = 1;
        if (cur.eat('^')) k = static_cast<std::size_t>(cur.parse_uint());
        return {coeff, k};
    }
    if (!have_coeff) cur.error("expected a coefficient or 'x'");
    return {coeff, 0};
}

Poly parse_poly_cursor(Cursor& cur, const Field& field) {
    const FieldSpec& F = *field;
    std::vector<u64> coeffs;
    bool negate = cur.eat('-');
    while (true) {
        auto [c, k] = parse_term(cur, field);
        if (negate) c = F.neg(c);
        if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
        coeffs[k] = F.add(coeffs[k], c);
        if (cur.eat('+'))
            negate = false;
        else if (cur.eat('-'))
            negate = true;
        else
            break;
    }
    return Poly::from_codes(field, std::move(coeffs));
}

}  // namespace

FieldElement parse_element(const Field& field, std::string_view text) {
    Cursor cur(text);
    u64 code = parse_element_code(cur, field);
    if (!cur.done()) cur.error("trailing input after element");
    return {field, code};
}

Poly parse_poly(const Field& field, std::string_view text) {
    Cursor cur(text);
    Poly f = parse_poly_cursor(cur, field);
    if (!cur.done()) cur.error("trailing input after polynomial");
    return f;
}

RationalFunction parse_rf(const Field& field, std::string_view text) {
    // split on a '/' at paren depth zero
    int depth = 0;
    std::size_t slash = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) {
            slash = i;
            break;
        }
    }
    auto strip_outer = [](std::string_view sv) {
        std::size_t a = sv.find_first_not_of(" \t");
        std::size_t b = sv.find_last_not_of(" \t");
        if (a == std::string_view::npos) return sv;
        sv = sv.substr(a, b - a + 1);
        if (sv.size() >= 2 && sv.front() == '(' && sv.back() == ')') {
            int d = 0;
            for (std::size_t i = 0; i + 1 < sv.size(); ++i) {
                if (sv[i] == '(') ++d;
                if (sv[i] == ')') --d;
                if (d == 0) return sv;  // outer parens close early: not strippable
            }
            return sv.substr(1, sv.size() - 2);
        }
        return sv;
    };
    if (slash == std::string_view::npos)
        return RationalFunction::of(parse_poly(field, strip_outer(text)));
    Poly num = parse_poly(field, strip_outer(text.substr(0, slash)));
    Poly den = parse_poly(field, strip_outer(text.substr(slash + 1)));
    return RationalFunction::make(num, den);
}

namespace {

ProjElement parse_matrix_cursor(Cursor& cur, const Field& field) {
    cur.expect('[');
    cur.expect('[');
    u64 a = parse_element_code(cur, field);
    cur.expect(',');
    u64 b = parse_element_code(cur, field);
    cur.expect(']');
    cur.expect(',');
    cur.expect('[');
    u64 c = parse_element_code(cur, field);
    cur.expect(',');
    u64 d = parse_element_code(cur, field);
    cur.expect(']');
    cur.expect(']');
    return ProjElement::canonical(field, a, b, c, d);
}

}  // namespace

ProjElement parse_matrix(const Field& field, std::string_view text) {
    Cursor cur(text);
    ProjElement m = parse_matrix_cursor(cur, field);
    if (!cur.done()) cur.error("trailing input after matrix");
    return m;
}

FieldDesc parse_field_desc(std::string_view text) {
    Cursor cur(text);
    cur.skip_ws();
    if (cur.text.compare(cur.i, 3, "GF(") != 0 && cur.text.compare(cur.i, 3, "gf(") != 0)
        cur.error("expected GF(...)");
    cur.i += 3;
    u64 base = cur.parse_uint();
    FieldDesc out{};
    if (cur.eat('^')) {
        u64 n = cur.parse_uint();
        if (n == 0 || n > 64) cur.error("extension degree out of range");
        out = {base, static_cast<unsigned>(n)};
    } else {
        if (base < 2) cur.error("field size must be at least 2");
        u64 p = 0;
        if (is_prime_u64(base)) {
            p = base;
        } else {
            for (u64 d = 2; d * d <= base && d <= kEnumLimit; ++d)
                if (base % d == 0) {
                    p = d;
                    break;
                }
            if (p == 0) cur.error("field size is not a prime power");
        }
        unsigned n = 0;
        u64 rest = base;
        while (rest > 1) {
            if (rest % p != 0) cur.error("field size is not a prime power");
            rest /= p;
            ++n;
        }
        out = {p, n};
    }
    cur.expect(')');
    if (!cur.done()) cur.error("trailing input after field");
    return out;
}

GroupSpec parse_group_spec(const Field& field, std::string_view text) {
    Cursor cur(text);
    cur.skip_ws();
    auto starts = [&](const char* kw) {
        std::size_t len = std::string(kw).size();
        if (cur.text.compare(cur.i, len, kw) == 0) {
            cur.i += len;
            return true;
        }
        return false;
    };
    GroupSpec out{};
    if (starts("cyclic:")) {
        out.kind = GroupKind::Cyclic;
        out.matrices.push_back(parse_matrix_cursor(cur, field));
    } else if (starts("gens:")) {
        out.kind = GroupKind::Gens;
        do {
            out.matrices.push_back(parse_matrix_cursor(cur, field));
        } while (cur.eat(','));
    } else if (starts("translations:")) {
        out.kind = GroupKind::Translations;
        do {
            out.elements.emplace_back(field, parse_element_code(cur, field));
        } while (cur.eat(','));
    } else if (starts("diagonal:")) {
        out.kind = GroupKind::Diagonal;
        out.param = cur.parse_uint();
    } else if (starts("borel:")) {
        out.kind = GroupKind::Borel;
        out.param = cur.parse_uint();
    } else if (starts("pgl2:")) {
        out.kind = GroupKind::Pgl2;
        out.param = cur.parse_uint();
    } else {
        cur.error("expected cyclic:, gens:, translations:, diagonal:, borel: or pgl2:");
    }
    if (!cur.done()) cur.error("trailing input after group spec");
    return out;
}

Subgroup build_group(const Field& field, const GroupSpec& spec, std::size_t cap) {
    switch (spec.kind) {
        case GroupKind::Cyclic: return build_cyclic(spec.matrices.front(), cap);
        case GroupKind::Gens: return closure(spec.matrices, cap);
        case GroupKind::Translations: return build_translations(field, spec.elements, cap);
        case GroupKind::Diagonal: return build_diagonal(field, spec.param, cap);
        case GroupKind::Borel: return build_borel(field, spec.param, cap);
        case GroupKind::Pgl2: return build_full_pgl2(field, spec.param, cap);
    }
    fail(Errc::Internal, "unreachable");
}

std::string render_parse_failure(const ParseFailure& err) {
    std::ostringstream os;
    os << "error: " << err.what() << "\n  " << err.input() << "\n  ";
    for (std::size_t i = 0; i < err.pos(); ++i) os << ' ';
    os << '^';
    return os.str();
}

}  // namespace quomap
