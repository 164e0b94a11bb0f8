#include "dihedral/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace dihedral::oracle {

namespace {

// Order by repeated multiplication, bounded by the group order.
Int brute_order(const Element& x, Int bound) {
    Element acc = x;
    for (Int k = 1; k <= bound; ++k) {
        if (acc.is_identity()) return k;
        acc = multiply(acc, x);
    }
    throw std::logic_error("element order exceeds group order");
}

std::vector<Element> unique_sorted(std::vector<Element> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

}  // namespace

std::size_t index_of(const Element& g) {
    const Int n = g.group().modulus().value();
    return static_cast<std::size_t>(g.rotation_index() + (g.is_reflection() ? n : 0));
}

std::vector<Element> RawAutomorphism::powers_of(Modulus n, const Element& x) {
    std::vector<Element> powers{Element::identity(Group::finite(n))};
    for (Int k = 1; k < n.value(); ++k) powers.push_back(multiply(powers.back(), x));
    return powers;
}

std::optional<RawAutomorphism> RawAutomorphism::make(Modulus n, const Element& image_of_r, const Element& image_of_s) {
    const Group g = Group::finite(n);
    if (image_of_r.group() != g || image_of_s.group() != g) throw std::invalid_argument("images must lie in D_n");
    return make(n, image_of_r, image_of_s, powers_of(n, image_of_r));
}

std::optional<RawAutomorphism> RawAutomorphism::make(Modulus n, const Element& image_of_r, const Element& image_of_s,
                                                     const std::vector<Element>& powers) {
    const Element one = Element::identity(Group::finite(n));
    const std::size_t size = static_cast<std::size_t>(2 * n.value());

    // Defining relations: r^n = 1, s^2 = 1, s r = r^{-1} s.
    if (multiply(powers.back(), image_of_r) != one) return std::nullopt;
    if (multiply(image_of_s, image_of_s) != one) return std::nullopt;
    if (multiply(image_of_s, image_of_r) != multiply(inverse(image_of_r), image_of_s)) return std::nullopt;

    std::vector<Element> table;
    table.reserve(size);
    std::vector<char> hit(size, 0);
    for (int m = 0; m < 2; ++m)
        for (const auto& p : powers) {
            const Element image = m ? multiply(p, image_of_s) : p;
            auto& mark = hit[index_of(image)];
            if (mark) return std::nullopt;
            mark = 1;
            table.push_back(image);
        }
    return RawAutomorphism(n, image_of_r, image_of_s, std::move(table));
}

const Element& RawAutomorphism::operator()(const Element& g) const {
    if (g.group() != Group::finite(n_)) throw std::invalid_argument("element is not in this D_n");
    return table_[index_of(g)];
}

bool RawAutomorphism::is_identity() const {
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (index_of(table_[i]) != i) return false;
    return true;
}

RawAutomorphism compose(const RawAutomorphism& p1, const RawAutomorphism& p2) {
    if (p1.modulus() != p2.modulus()) throw std::invalid_argument("automorphisms of different groups");
    std::vector<Element> table;
    table.reserve(p2.table().size());
    for (const auto& x : p2.table()) table.push_back(p1(x));
    const Int n = p1.modulus().value();
    const Element r_image = table[static_cast<std::size_t>(1 % n == 0 ? 0 : 1)];
    const Element s_image = table[static_cast<std::size_t>(n)];
    return RawAutomorphism(p1.modulus(), r_image, s_image, std::move(table));
}

Int order(const RawAutomorphism& p) {
    const Int bound = p.modulus().value() * 2 * p.modulus().value();
    RawAutomorphism current = p;
    for (Int k = 1; k <= bound; ++k) {
        if (current.is_identity()) return k;
        current = compose(p, current);
    }
    throw std::logic_error("automorphism order exceeds bound");
}

bool has_order_dividing(const RawAutomorphism& p, Int k) {
    const auto& table = p.table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        std::size_t x = i;
        for (Int j = 0; j < k; ++j) x = index_of(table[x]);
        if (x != i) return false;
    }
    return true;
}

void for_each_automorphism_bf(Modulus n, const std::function<void(const RawAutomorphism&)>& visit) {
    const auto elements = enumerate(n);
    const Int bound = 2 * n.value();
    const Int order_r = brute_order(Element::rotation(Group::finite(n), 1), bound);
    const Int order_s = brute_order(Element::reflection(Group::finite(n), 0), bound);

    std::vector<Element> r_candidates, s_candidates;
    for (const auto& x : elements) {
        const Int o = brute_order(x, bound);
        if (o == order_r) r_candidates.push_back(x);
        if (o == order_s) s_candidates.push_back(x);
    }
    for (const auto& ir : r_candidates) {
        const auto powers = RawAutomorphism::powers_of(n, ir);
        for (const auto& is : s_candidates)
            if (auto p = RawAutomorphism::make(n, ir, is, powers)) visit(*p);
    }
}

std::vector<RawAutomorphism> all_automorphisms_bf(Modulus n) {
    std::vector<RawAutomorphism> out;
    for_each_automorphism_bf(n, [&](const RawAutomorphism& p) { out.push_back(p); });
    return out;
}

Spaces spaces_bf(const RawAutomorphism& p) {
    Spaces out;
    std::vector<Element> q;
    for (const auto& x : enumerate(p.modulus())) {
        const Element& image = p(x);
        if (image == x) out.H.push_back(x);
        if (image == inverse(x)) out.R.push_back(x);
        q.push_back(multiply(x, inverse(image)));
    }
    out.Q = unique_sorted(std::move(q));
    return out;
}

bool equivalent_bf(const RawAutomorphism& p1, const RawAutomorphism& p2, const std::vector<RawAutomorphism>& group) {
    if (p1.modulus() != p2.modulus()) throw std::invalid_argument("automorphisms of different groups");
    const auto elements = enumerate(p1.modulus());
    for (const auto& sigma : group) {
        const bool conjugates = std::all_of(elements.begin(), elements.end(),
                                            [&](const Element& x) { return sigma(p1(x)) == p2(sigma(x)); });
        if (conjugates) return true;
    }
    return false;
}

bool equivalent_bf(const RawAutomorphism& p1, const RawAutomorphism& p2) {
    return equivalent_bf(p1, p2, all_automorphisms_bf(p1.modulus()));
}

std::vector<std::vector<Element>> h_orbits_bf(const RawAutomorphism& p) {
    const Spaces s = spaces_bf(p);
    std::vector<std::vector<Element>> orbits;
    for (const auto& q : s.Q) {
        std::vector<Element> orbit;
        for (const auto& h : s.H) orbit.push_back(multiply(multiply(h, q), inverse(h)));
        orbit = unique_sorted(std::move(orbit));
        if (std::find(orbits.begin(), orbits.end(), orbit) == orbits.end()) orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return orbits;
}

}  // namespace dihedral::oracle
