#include "dihedral/infinite.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dihedral {

namespace {

const Group kInf = Group::infinite();

void require_involution(const InfiniteAut& theta) {
    if (!is_finite_order(theta))
        throw std::invalid_argument("x+" + std::to_string(theta.b()) + " has infinite order");
    if (theta == InfiniteAut::identity()) throw std::invalid_argument("expected an involution, got the identity");
}

// Floor-mod that stays correct for negative k.
Int mod_positive(Int k, Int g) {
    const Int r = k % g;
    return r < 0 ? r + g : r;
}

}  // namespace

InfiniteAut::InfiniteAut(Int a, Int b) : a_(a), b_(b) {
    if (a != 1 && a != -1) throw std::invalid_argument("units of Z are +-1, got " + std::to_string(a));
}

Element apply(const InfiniteAut& theta, const Element& g) {
    if (g.group().is_finite()) throw std::invalid_argument("element is not in D_inf");
    // r^{ak} s^m is r^{ak} times (r^b s)^m: stay inside the overflow-checked group law.
    const Element rot = power(Element::rotation(kInf, 1), theta.a() * g.rotation_index());
    if (!g.is_reflection()) return rot;
    return multiply(rot, Element::reflection(kInf, theta.b()));
}

InfiniteAut compose(const InfiniteAut& t1, const InfiniteAut& t2) {
    return InfiniteAut(t1.a() * t2.a(), t1.a() * t2.b() + t1.b());
}

InfiniteAut invert(const InfiniteAut& theta) { return InfiniteAut(theta.a(), -theta.a() * theta.b()); }

bool is_finite_order(const InfiniteAut& theta) { return theta.a() == -1 || theta.b() == 0; }

bool equivalent_infinite(const InfiniteAut& t1, const InfiniteAut& t2) {
    require_involution(t1);
    require_involution(t2);
    return mod_positive(t1.b() - t2.b(), 2) == 0;
}

SubsetDescriptor SubsetDescriptor::finite_set(std::vector<Element> elems) {
    std::sort(elems.begin(), elems.end());
    return {Kind::FiniteSet, std::nullopt, std::move(elems)};
}

SubsetDescriptor SubsetDescriptor::rotation_subgroup(Int generator) {
    if (generator < 1) throw std::invalid_argument("rotation subgroup generator must be >= 1");
    return {Kind::RotationSubgroup, generator, {}};
}

SubsetDescriptor SubsetDescriptor::rotation_subgroup_union(Int generator, std::vector<Element> extras) {
    if (generator < 1) throw std::invalid_argument("rotation subgroup generator must be >= 1");
    std::sort(extras.begin(), extras.end());
    return {Kind::RotationSubgroupUnion, generator, std::move(extras)};
}

bool SubsetDescriptor::contains(const Element& x) const {
    if (std::find(extras.begin(), extras.end(), x) != extras.end()) return true;
    if (kind == Kind::FiniteSet || x.is_reflection()) return false;
    return mod_positive(x.rotation_index(), *generator) == 0;
}

const char* to_string(SubsetDescriptor::Kind kind) noexcept {
    switch (kind) {
        case SubsetDescriptor::Kind::FiniteSet: return "finite_set";
        case SubsetDescriptor::Kind::RotationSubgroup: return "rotation_subgroup";
        case SubsetDescriptor::Kind::RotationSubgroupUnion: return "rotation_subgroup_union";
    }
    return "?";
}

std::string to_string(const SubsetDescriptor& d) {
    std::string out;
    if (d.generator) out = *d.generator == 1 ? "<r>" : "<r^" + std::to_string(*d.generator) + ">";
    if (d.extras.empty()) return out.empty() ? "{}" : out;
    std::string set = "{";
    for (std::size_t i = 0; i < d.extras.size(); ++i) set += (i ? ", " : "") + to_string(d.extras[i]);
    set += "}";
    return out.empty() ? set : out + " u " + set;
}

InfiniteSpaces spaces_infinite(const InfiniteAut& theta) {
    require_involution(theta);
    const Int b = theta.b();
    const bool even = mod_positive(b, 2) == 0;

    // theta(r^k) = r^{-k} for every k, so every rotation is a twisted
    // involution and only the identity rotation is fixed. A reflection r^k s
    // goes to r^{b-k} s: fixed (and twisted) iff 2k = b.
    std::vector<Element> reflections;
    if (even) reflections.push_back(Element::reflection(kInf, b / 2));

    std::vector<Element> h{Element::identity(kInf)};
    h.insert(h.end(), reflections.begin(), reflections.end());

    // tau(r^k) = r^{2k}, tau(r^k s) = r^{2k - b}.
    const Int q_gen = even ? 2 : 1;

    return InfiniteSpaces{
        SubsetDescriptor::finite_set(std::move(h)),
        SubsetDescriptor::rotation_subgroup(q_gen),
        even ? SubsetDescriptor::rotation_subgroup_union(1, std::move(reflections))
             : SubsetDescriptor::rotation_subgroup(1),
    };
}

}  // namespace dihedral
