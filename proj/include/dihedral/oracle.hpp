#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth for D_n.
 *
 * Everything here works from definitions only: an automorphism is a pair of
 * generator images (theta(r), theta(s)) checked against the defining
 * relations and extended to a full image table by group multiplication.
 * H, Q, R, orbits and conjugacy are then computed by exhaustive search.
 * Nothing in this header depends on the affine description of Aut(D_n),
 * so formula bugs elsewhere cannot validate themselves against it.
 *
 * Cost is O(n^2) to build an automorphism and O(n phi(n) n) per conjugacy
 * search; intended for n up to a few hundred.
 */

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dihedral/group.hpp"

namespace dihedral::oracle {

class RawAutomorphism {
public:
    /// Returns nullopt unless r -> image_of_r, s -> image_of_s extends to a
    /// bijective homomorphism of D_n.
    static std::optional<RawAutomorphism> make(Modulus n, const Element& image_of_r, const Element& image_of_s);

    /// Same, with powers_of(n, image_of_r) precomputed by the caller.
    static std::optional<RawAutomorphism> make(Modulus n, const Element& image_of_r, const Element& image_of_s,
                                               const std::vector<Element>& powers);

    /// 1, x, x^2, ..., x^{n-1}.
    static std::vector<Element> powers_of(Modulus n, const Element& x);

    Modulus modulus() const noexcept { return n_; }
    const Element& image_of_r() const noexcept { return image_of_r_; }
    const Element& image_of_s() const noexcept { return image_of_s_; }

    /// Image of an element of D_n, by table lookup.
    const Element& operator()(const Element& g) const;

    /// Images of all 2n elements in enumeration order.
    const std::vector<Element>& table() const noexcept { return table_; }

    bool is_identity() const;

    friend bool operator==(const RawAutomorphism& x, const RawAutomorphism& y) { return x.table_ == y.table_; }

private:
    friend RawAutomorphism compose(const RawAutomorphism& p1, const RawAutomorphism& p2);
    RawAutomorphism(Modulus n, Element image_of_r, Element image_of_s, std::vector<Element> table)
        : n_(n), image_of_r_(image_of_r), image_of_s_(image_of_s), table_(std::move(table)) {}
    Modulus n_;
    Element image_of_r_;
    Element image_of_s_;
    std::vector<Element> table_;
};

/// Position of g in enumerate(n).
std::size_t index_of(const Element& g);

/// p1 after p2, pointwise.
RawAutomorphism compose(const RawAutomorphism& p1, const RawAutomorphism& p2);

/// Least k >= 1 with p^k = id, by repeated pointwise application.
Int order(const RawAutomorphism& p);

/// p^k = id pointwise.
bool has_order_dividing(const RawAutomorphism& p, Int k);

/// Visits every automorphism of D_n. Candidate images are prefiltered by
/// element order, computed by repeated multiplication.
void for_each_automorphism_bf(Modulus n, const std::function<void(const RawAutomorphism&)>& visit);

std::vector<RawAutomorphism> all_automorphisms_bf(Modulus n);

struct Spaces {
    std::vector<Element> H;
    std::vector<Element> Q;
    std::vector<Element> R;  // computed for every p; meaningful for involutions
};

Spaces spaces_bf(const RawAutomorphism& p);

/// Searches `group` for sigma with sigma p1 = p2 sigma.
bool equivalent_bf(const RawAutomorphism& p1, const RawAutomorphism& p2, const std::vector<RawAutomorphism>& group);
bool equivalent_bf(const RawAutomorphism& p1, const RawAutomorphism& p2);

/// Orbits of Q under conjugation by H; each sorted, ordered by least member.
std::vector<std::vector<Element>> h_orbits_bf(const RawAutomorphism& p);

}  // namespace dihedral::oracle
