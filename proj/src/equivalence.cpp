#include "dihedral/equivalence.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dihedral {

bool are_equivalent(const AffineAut& t1, const AffineAut& t2) {
    if (t1.modulus() != t2.modulus()) throw std::invalid_argument("automorphisms of different groups");
    if (t1.a() != t2.a()) return false;
    const Modulus n = t1.modulus();
    const ZnSubgroup image = cyclic_subgroup(ZnElem(n, t1.a().value() - 1));
    const Int b = t1.b().value();
    const Int d = t2.b().value();
    for (const auto& f : units(n))
        if (image.contains(mul_mod(f.value(), b, n.value()) - d)) return true;
    return false;
}

std::vector<EquivClass> enumerate_classes(Modulus n, Int k) {
    if (n.value() < 3) throw std::invalid_argument("Aut(D_n) = Aff(Z_n) requires n >= 3");
    std::vector<EquivClass> out;
    const auto unit_group = units(n);
    for (const auto& a : kth_roots_of_unity(n, k)) {
        const ZnSubgroup ann = annihilator(ZnElem(n, geometric_sum(a.value(), k, n.value())));
        const Int g = cyclic_subgroup(ZnElem(n, a.value() - 1)).generator();

        // Cosets of <g> inside Ann are labelled by their least member c in [0, g),
        // a multiple of ann.generator(). U_n acts by c -> f c mod g.
        const Int step = ann.generator();
        std::vector<char> seen(static_cast<std::size_t>(g / step), 0);
        for (Int c = 0; c < g; c += step) {
            if (seen[static_cast<std::size_t>(c / step)]) continue;
            std::vector<Int> orbit;
            for (const auto& f : unit_group) {
                const Int image = mul_mod(f.value(), c, g);
                auto& mark = seen[static_cast<std::size_t>(image / step)];
                if (!mark) {
                    mark = 1;
                    orbit.push_back(image);
                }
            }
            std::sort(orbit.begin(), orbit.end());

            std::vector<Int> members;
            for (Int b : ann.elements())
                if (std::binary_search(orbit.begin(), orbit.end(), b % g)) members.push_back(b);
            out.push_back(EquivClass{a, ZnElem(n, orbit.front()), static_cast<Int>(members.size()), k,
                                     std::move(members)});
        }
    }
    std::sort(out.begin(), out.end(), [](const EquivClass& x, const EquivClass& y) {
        return std::pair(x.a.value(), x.rep_b.value()) < std::pair(y.a.value(), y.rep_b.value());
    });
    return out;
}

Int count_classes_Na(Modulus n, Int k, const UnitZn& a) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (a.modulus() != n || pow_mod(a.value(), k, n.value()) != 1 % n.value())
        throw std::invalid_argument(std::to_string(a.value()) + " is not a root of unity of order dividing " +
                                    std::to_string(k) + " mod " + std::to_string(n.value()));
    const Int nv = n.value();
    const Int lower = gcd(a.value() - 1, nv);                       // generator of <a - 1>
    const Int ann_order = gcd(geometric_sum(a.value(), k, nv), nv);  // |Ann(...)|
    return num_divisors(lower * ann_order / nv);
}

Int involution_Na(Modulus n, const UnitZn& a) {
    if (a.modulus() != n || mul_mod(a.value(), a.value(), n.value()) != 1 % n.value())
        throw std::invalid_argument(std::to_string(a.value()) + " is not a square root of unity mod " +
                                    std::to_string(n.value()));
    const int m = factorize(n.value()).two_exponent;
    if (m == 0) return 1;
    const Int two_part = Int{1} << m;
    const Int residue = a.value() % two_part;
    return residue == 1 || residue == two_part - 1 ? 2 : 1;
}

Int count_involution_classes(Modulus n) {
    if (n.value() < 3) throw std::invalid_argument("C_n is defined here for n >= 3");
    const Factorization f = factorize(n.value());
    const int k = static_cast<int>(f.odd_primes.size());
    switch (f.two_exponent) {
        case 0: return Int{1} << k;
        case 1: return Int{1} << (k + 1);
        case 2: return Int{1} << (k + 2);
        default: return (Int{1} << (k + 3)) - (Int{1} << (k + 1));
    }
}

Int count_involutions(Modulus n) {
    if (n.value() < 3) throw std::invalid_argument("Aut(D_n) = Aff(Z_n) requires n >= 3");
    Int total = 0;
    for (const auto& a : kth_roots_of_unity(n, 2)) total += gcd(a.value() + 1, n.value());
    return total;
}

}  // namespace dihedral
