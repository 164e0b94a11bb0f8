#pragma once

// Helpers shared by the test binaries: element literals and the defining
// set computations for H, Q and R (pointwise, through apply and multiply).

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dihedral/affine.hpp"
#include "dihedral/group.hpp"

namespace testing_support {

using dihedral::AffineAut;
using dihedral::Element;
using dihedral::Group;
using dihedral::Int;
using dihedral::Modulus;

inline Element rot(Int n, Int k) { return Element::rotation(Group::finite(n), k); }
inline Element refl(Int n, Int k) { return Element::reflection(Group::finite(n), k); }

/// "1, r^18, r*s" -> sorted element vector of D_n.
inline std::vector<Element> elems(Int n, std::string_view list) {
    std::vector<Element> out;
    std::string item;
    std::istringstream in{std::string(list)};
    while (std::getline(in, item, ','))
        out.push_back(dihedral::parse_element(item, Group::finite(n)));
    std::sort(out.begin(), out.end());
    return out;
}

/// {r^k : k = start, start + step, ...} below n, sorted.
inline std::vector<Element> rotation_range(Int n, Int start, Int step) {
    std::vector<Element> out;
    for (Int k = start; k < n; k += step) out.push_back(rot(n, k));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Element> def_fixed(const AffineAut& theta) {
    std::vector<Element> out;
    for (const Element& g : dihedral::enumerate(theta.modulus()))
        if (dihedral::apply(theta, g) == g) out.push_back(g);
    return out;
}

inline std::vector<Element> def_q(const AffineAut& theta) {
    std::set<Element> out;
    for (const Element& g : dihedral::enumerate(theta.modulus()))
        out.insert(dihedral::multiply(g, dihedral::inverse(dihedral::apply(theta, g))));
    return {out.begin(), out.end()};
}

inline std::vector<Element> def_r(const AffineAut& theta) {
    std::vector<Element> out;
    for (const Element& g : dihedral::enumerate(theta.modulus()))
        if (dihedral::apply(theta, g) == dihedral::inverse(g)) out.push_back(g);
    return out;
}

inline std::vector<Element> intersect(const std::vector<Element>& x, const std::vector<Element>& y) {
    std::vector<Element> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const std::vector<Element>& x, const std::vector<Element>& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

inline bool closed_subgroup(const std::vector<Element>& x) {
    if (x.empty() || !std::binary_search(x.begin(), x.end(), Element::identity(x.front().group()))) return false;
    for (const Element& p : x)
        for (const Element& q : x)
            if (!std::binary_search(x.begin(), x.end(), dihedral::multiply(p, dihedral::inverse(q)))) return false;
    return true;
}

}  // namespace testing_support

#include <map>

#include "dihedral/oracle.hpp"

namespace testing_support {

/// Reads off ax + b from a raw automorphism: r -> r^a, s -> r^b s.
inline AffineAut as_affine(const dihedral::oracle::RawAutomorphism& p) {
    return AffineAut(p.modulus(), p.image_of_r().rotation_index(), p.image_of_s().rotation_index());
}

/// Conjugacy classes of the automorphisms of order dividing k, as orbits of
/// sigma p sigma^{-1} computed on image tables. Each class is sorted; classes
/// are ordered by their least member.
inline std::vector<std::vector<AffineAut>> oracle_classes(Modulus n, Int k) {
    namespace oc = dihedral::oracle;
    const auto all = oc::all_automorphisms_bf(n);
    std::map<std::vector<Element>, std::size_t> by_table;
    for (std::size_t i = 0; i < all.size(); ++i) by_table.emplace(all[i].table(), i);
    const auto g = dihedral::enumerate(n);
    std::vector<bool> seen(all.size(), false);
    std::vector<std::vector<AffineAut>> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (seen[i] || !oc::has_order_dividing(all[i], k)) continue;
        std::set<AffineAut> cls;
        for (const auto& sigma : all) {
            std::vector<Element> table(g.size(), g.front());
            for (const Element& x : g) table[oc::index_of(sigma(x))] = sigma(all[i](x));
            const std::size_t j = by_table.at(table);
            seen[j] = true;
            cls.insert(as_affine(all[j]));
        }
        out.emplace_back(cls.begin(), cls.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testing_support
