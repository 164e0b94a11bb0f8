#include "dihedral/group.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace dihedral {

void Group::reject_infinite() { throw std::logic_error("D_inf has no modulus"); }

Int Group::size() const { return 2 * modulus().value(); }

Element::Element(Group g, Int rotation, bool reflection)
    : group_(g), rotation_(g.is_finite() ? g.modulus().reduce(rotation) : rotation), reflection_(reflection) {}

namespace {

void require_same_group(const Element& x, const Element& y) {
    if (x.group() != y.group()) throw std::invalid_argument("elements belong to different dihedral groups");
}

Int checked_add(Int x, Int y) {
    Int out;
    if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("D_inf rotation index overflow");
    return out;
}

Int checked_neg(Int x) {
    Int out;
    if (__builtin_sub_overflow(Int{0}, x, &out)) throw std::overflow_error("D_inf rotation index overflow");
    return out;
}

}  // namespace

Element multiply(const Element& x, const Element& y) {
    require_same_group(x, y);
    // r^a s^m * r^b s^p = r^{a + (-1)^m b} s^{m + p}
    const Int b = x.is_reflection() ? checked_neg(y.rotation_index()) : y.rotation_index();
    const Int k = x.group().is_finite() ? x.rotation_index() + b : checked_add(x.rotation_index(), b);
    return Element(x.group(), k, x.is_reflection() != y.is_reflection());
}

Element inverse(const Element& x) {
    if (x.is_reflection()) return x;
    return Element(x.group(), checked_neg(x.rotation_index()), false);
}

Element power(const Element& x, Int e) {
    Element base = e < 0 ? inverse(x) : x;
    if (e < 0) e = -e;
    Element result = Element::identity(x.group());
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return result;
}

Int element_order(const Element& x) {
    if (x.is_identity()) return 1;
    if (x.is_reflection()) return 2;
    if (!x.group().is_finite()) throw std::domain_error("nontrivial rotation of D_inf has infinite order");
    const Int n = x.group().modulus().value();
    return n / gcd(x.rotation_index(), n);
}

std::vector<Element> enumerate(Modulus n) {
    const Group g = Group::finite(n);
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(2 * n.value()));
    for (int m = 0; m < 2; ++m)
        for (Int k = 0; k < n.value(); ++k) out.emplace_back(g, k, m == 1);
    return out;
}

std::string to_string(const Element& x) {
    const Int k = x.rotation_index();
    std::string out;
    if (k == 1)
        out = "r";
    else if (k != 0)
        out = "r^" + std::to_string(k);
    if (x.is_reflection()) return out.empty() ? "s" : out + "*s";
    return out.empty() ? "1" : out;
}

Element parse_element(std::string_view text, Group g) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto fail = [&](std::size_t pos, const char* what) -> Element {
        throw std::invalid_argument("cannot parse element '" + std::string(text) + "' at position " +
                                    std::to_string(pos) + ": " + what);
    };
    if (s == "1") return Element::identity(g);

    std::size_t i = 0;
    Int k = 0;
    if (i < s.size() && s[i] == 'r') {
        ++i;
        k = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            const char* first = s.data() + i;
            auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), k);
            if (ec != std::errc{} || ptr == first) return fail(i, "expected exponent");
            i = static_cast<std::size_t>(ptr - s.data());
        }
        if (i < s.size() && s[i] == '*') {
            ++i;
            if (i == s.size() || s[i] != 's') return fail(i, "expected 's' after '*'");
        }
    }
    bool reflection = false;
    if (i < s.size() && s[i] == 's') {
        reflection = true;
        ++i;
    }
    if (i != s.size() || s.empty()) return fail(i, "unexpected character");
    return Element(g, k, reflection);
}

}  // namespace dihedral
