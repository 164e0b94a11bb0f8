#include "dihedral/spaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace dihedral {

namespace {

struct Params {
    Modulus n;
    Group group;
    Int a;
    Int b;
    ZnSubgroup image;  // <a - 1>
};

Params params(const AffineAut& theta) {
    const Modulus n = theta.modulus();
    return {n, Group::finite(n), theta.a().value(), theta.b().value(), cyclic_subgroup(ZnElem(n, theta.a().value() - 1))};
}

// Reflections r^k s with k(a - 1) = -b, shared by H and R.
void append_fixed_reflections(const Params& p, std::vector<Element>& out) {
    const Int nv = p.n.value();
    for (Int k = 0; k < nv; ++k)
        if (p.n.reduce(mul_mod(k, p.a - 1, nv) + p.b) == 0) out.push_back(Element::reflection(p.group, k));
}

bool is_involution_or_identity(const AffineAut& theta) { return has_order_dividing(theta, 2); }

}  // namespace

const char* to_string(HShape shape) noexcept { return shape == HShape::Cyclic ? "cyclic" : "dihedral"; }

std::vector<Element> fixed_group(const AffineAut& theta) {
    const Params p = params(theta);
    const ZnSubgroup kernel = annihilator(ZnElem(p.n, p.a - 1));
    std::vector<Element> out;
    for (Int k : kernel.elements()) out.push_back(Element::rotation(p.group, k));
    append_fixed_reflections(p, out);
    return out;
}

std::vector<Element> symmetric_space(const AffineAut& theta) {
    const Params p = params(theta);
    std::vector<Element> out;
    for (Int k = 0; k < p.n.value(); ++k)
        if (p.image.contains(k) || p.image.contains(k + p.b)) out.push_back(Element::rotation(p.group, k));
    return out;
}

std::vector<Element> twisted_involutions(const AffineAut& theta) {
    if (!is_involution_or_identity(theta))
        throw std::invalid_argument("twisted involutions are defined here only for involutions, got " + to_string(theta));
    const Params p = params(theta);
    const ZnSubgroup ann = annihilator(ZnElem(p.n, p.a + 1));
    std::vector<Element> out;
    for (Int k : ann.elements()) out.push_back(Element::rotation(p.group, k));
    append_fixed_reflections(p, out);
    return out;
}

HShape h_structure(const AffineAut& theta) {
    const Params p = params(theta);
    return p.image.contains(p.b) ? HShape::Dihedral : HShape::Cyclic;
}

std::optional<ZnSubgroup> q_subgroup(const AffineAut& theta) {
    const Params p = params(theta);
    if (p.image.contains(p.b)) return p.image;
    if (is_involution_or_identity(theta)) return annihilator(ZnElem(p.n, p.a + 1));
    // Two distinct cosets of <a - 1> form a subgroup iff they are the whole of
    // <a - 1, b>, i.e. iff 2b lies in <a - 1>.
    if (p.image.contains(2 * p.b)) return ZnSubgroup(p.n, gcd(p.image.generator(), p.b));
    return std::nullopt;
}

HqVerdict hq_equals_g(const AffineAut& theta) {
    const Params p = params(theta);
    const auto H = fixed_group(theta);
    const auto Q = symmetric_space(theta);
    const Int nv = p.n.value();

    std::vector<char> hit(static_cast<std::size_t>(2 * nv), 0);
    for (const auto& h : H)
        for (const auto& q : Q) {
            const Element x = multiply(h, q);
            hit[static_cast<std::size_t>(x.rotation_index() + (x.is_reflection() ? nv : 0))] = 1;
        }
    const bool covers = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

    std::size_t common = 0;
    for (const auto& q : Q)
        if (std::binary_search(H.begin(), H.end(), q)) ++common;

    const Int g = p.image.generator();
    return HqVerdict{covers, p.image.contains(p.b), common == 1, gcd(g, nv / g) == 1};
}

std::vector<std::vector<Element>> h_orbits_on_q(const AffineAut& theta) {
    const Params p = params(theta);
    std::vector<std::vector<Element>> out;
    if (!p.image.contains(p.b)) {
        for (const auto& q : symmetric_space(theta)) out.push_back({q});
        return out;
    }
    for (Int j : p.image.elements()) {
        const Int neg = p.n.reduce(-j);
        if (neg < j) continue;
        if (neg == j)
            out.push_back({Element::rotation(p.group, j)});
        else
            out.push_back({Element::rotation(p.group, j), Element::rotation(p.group, neg)});
    }
    return out;
}

Int g_orbits_on_q(const AffineAut& theta) {
    const auto Q = symmetric_space(theta);
    const Element one = Element::identity(Group::finite(theta.modulus()));
    std::vector<Element> orbit;
    for (const auto& g : enumerate(theta.modulus())) orbit.push_back(twisted_conjugate(g, one, theta));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    if (orbit != Q) throw std::logic_error("G-orbit of 1 differs from Q for " + to_string(theta));
    return 1;
}

Element twisted_conjugate(const Element& g, const Element& q, const AffineAut& theta) {
    return multiply(multiply(g, q), inverse(apply(theta, g)));
}

Element tau(const Element& g, const AffineAut& theta) { return multiply(g, inverse(apply(theta, g))); }

SpaceReport analyze(const AffineAut& theta) {
    std::optional<std::vector<Element>> R;
    if (is_involution_or_identity(theta)) R = twisted_involutions(theta);
    return SpaceReport{theta,
                       fixed_group(theta),
                       symmetric_space(theta),
                       std::move(R),
                       h_structure(theta),
                       q_subgroup(theta),
                       hq_equals_g(theta),
                       h_orbits_on_q(theta),
                       g_orbits_on_q(theta)};
}

}  // namespace dihedral
