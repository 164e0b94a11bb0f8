#include "dihedral/affine.hpp"

#include <cctype>
#include <charconv>

namespace dihedral {

namespace {

Modulus checked_modulus(Modulus n) {
    if (n.value() < 3)
        throw std::invalid_argument("Aut(D_n) is identified with Aff(Z_n) only for n >= 3, got n = " +
                                    std::to_string(n.value()));
    return n;
}

UnitZn checked_unit(Modulus n, Int a) {
    const Int reduced = n.reduce(a);
    if (gcd(reduced, n.value()) != 1)
        throw std::invalid_argument("coefficient " + std::to_string(reduced) + " is not a unit mod " +
                                    std::to_string(n.value()));
    return UnitZn(n, reduced);
}

void require_same_modulus(const AffineAut& x, const AffineAut& y) {
    if (x.modulus() != y.modulus()) throw std::invalid_argument("automorphisms of different groups");
}

}  // namespace

AffineAut::AffineAut(Modulus n, Int a, Int b) : a_(checked_unit(checked_modulus(n), a)), b_(n, b) {}

Element apply(const AffineAut& theta, const Element& g) {
    const Group grp = Group::finite(theta.modulus());
    if (g.group() != grp) throw std::invalid_argument("element is not in D_" + std::to_string(theta.modulus().value()));
    const Int n = theta.modulus().value();
    Int k = mul_mod(theta.a().value(), g.rotation_index(), n);
    if (g.is_reflection()) k += theta.b().value();
    return Element(grp, k, g.is_reflection());
}

AffineAut compose(const AffineAut& t1, const AffineAut& t2) {
    require_same_modulus(t1, t2);
    const Int n = t1.modulus().value();
    return AffineAut(t1.modulus(), mul_mod(t1.a().value(), t2.a().value(), n),
                     mul_mod(t1.a().value(), t2.b().value(), n) + t1.b().value());
}

AffineAut invert(const AffineAut& theta) {
    const Int n = theta.modulus().value();
    const Int a_inv = theta.a().inverse().value();
    return AffineAut(theta.modulus(), a_inv, -mul_mod(a_inv, theta.b().value(), n));
}

AffineAut power(const AffineAut& theta, Int k) {
    AffineAut base = k < 0 ? invert(theta) : theta;
    if (k < 0) k = -k;
    AffineAut result = AffineAut::identity(theta.modulus());
    while (k > 0) {
        if (k & 1) result = compose(result, base);
        base = compose(base, base);
        k >>= 1;
    }
    return result;
}

Int aut_order(const AffineAut& theta) {
    const AffineAut id = AffineAut::identity(theta.modulus());
    const Int n = theta.modulus().value();
    const Int bound = n * euler_phi(n);
    AffineAut current = theta;
    for (Int k = 1; k <= bound; ++k) {
        if (current == id) return k;
        current = compose(theta, current);
    }
    throw std::logic_error("automorphism order exceeds |Aff(Z_n)|");
}

bool has_order_dividing(const AffineAut& theta, Int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const Int n = theta.modulus().value();
    const Int a = theta.a().value();
    return pow_mod(a, k, n) == 1 && mul_mod(geometric_sum(a, k, n), theta.b().value(), n) == 0;
}

std::vector<AffineAut> enumerate_aut_k(Modulus n, Int k) {
    checked_modulus(n);
    std::vector<AffineAut> out;
    for (const auto& a : kth_roots_of_unity(n, k)) {
        const auto ann = annihilator(ZnElem(n, geometric_sum(a.value(), k, n.value())));
        for (Int b : ann.elements()) out.emplace_back(n, a.value(), b);
    }
    return out;
}

Int count_aut_k(Modulus n, Int k) {
    checked_modulus(n);
    Int total = 0;
    for (const auto& a : kth_roots_of_unity(n, k)) total += gcd(geometric_sum(a.value(), k, n.value()), n.value());
    return total;
}

std::vector<AffineAut> enumerate_all(Modulus n) {
    checked_modulus(n);
    std::vector<AffineAut> out;
    for (const auto& a : units(n))
        for (Int b = 0; b < n.value(); ++b) out.emplace_back(n, a.value(), b);
    return out;
}

AffineAut from_conjugation(const Element& g) {
    const Modulus n = g.group().modulus();
    const Int b = 2 * g.rotation_index();
    return g.is_reflection() ? AffineAut(n, n.value() - 1, b) : AffineAut(n, 1, b);
}

bool is_inner(const AffineAut& theta) {
    const Int n = theta.modulus().value();
    const Int a = theta.a().value();
    return (a == 1 || a == n - 1) && theta.b().value() % gcd(2, n) == 0;
}

AffineAut diagram_automorphism(Modulus n) { return AffineAut(n, n.value() - 1, n.value() - 1); }

std::string to_string(const AffineAut& theta) {
    const Int a = theta.a().value();
    const Int b = theta.b().value();
    std::string out = a == 1 ? "x" : std::to_string(a) + "x";
    if (b != 0) out += "+" + std::to_string(b);
    return out;
}

AffineAut parse_aut(std::string_view text, Modulus n) {
    std::string s;
    std::vector<std::size_t> origin;  // position in `text` of each kept character
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
        s.push_back(text[i]);
        origin.push_back(i);
    }
    auto fail = [&](std::size_t i, const std::string& what) {
        const std::size_t pos = i < origin.size() ? origin[i] : text.size();
        throw ParseError("cannot parse automorphism '" + std::string(text) + "' at position " + std::to_string(pos) +
                             ": " + what,
                         pos);
    };
    auto read_int = [&](std::size_t& i) {
        Int v = 0;
        const char* first = s.data() + i;
        auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
        if (ec == std::errc::result_out_of_range) fail(i, "coefficient out of range");
        if (ec != std::errc{} || ptr == first) fail(i, "expected an integer");
        i = static_cast<std::size_t>(ptr - s.data());
        return v;
    };

    std::size_t i = 0;
    Int sign = 1;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) sign = s[i++] == '-' ? -1 : 1;
    Int a = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) a = read_int(i);
    if (i >= s.size() || s[i] != 'x') fail(i, "expected 'x'");
    ++i;
    Int b = 0;
    if (i < s.size()) {
        if (s[i] != '+' && s[i] != '-') fail(i, "expected '+' or '-'");
        const Int b_sign = s[i++] == '-' ? -1 : 1;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail(i, "expected an integer");
        b = b_sign * n.reduce(read_int(i));
    }
    if (i != s.size()) fail(i, "trailing characters");
    return AffineAut(n, sign * n.reduce(a), b);
}

}  // namespace dihedral
