#pragma once

// Finite-order automorphisms of D_inf. Aut(D_inf) = Aff(Z) = {+-x + b}; the
// finite-order ones are the identity and the involutions -x + b, and
// -x + b ~ -x + d iff b = d mod 2.

#include <optional>
#include <vector>

#include "dihedral/group.hpp"

namespace dihedral {

class InfiniteAut {
public:
    /// a must be +1 or -1; throws std::invalid_argument otherwise.
    InfiniteAut(Int a, Int b);

    static InfiniteAut identity() { return InfiniteAut(1, 0); }

    Int a() const noexcept { return a_; }
    Int b() const noexcept { return b_; }

    friend bool operator==(const InfiniteAut&, const InfiniteAut&) = default;

private:
    Int a_;
    Int b_;
};

/// theta(r^k s^m) = r^{ak + bm} s^m on D_inf.
Element apply(const InfiniteAut& theta, const Element& g);
InfiniteAut compose(const InfiniteAut& t1, const InfiniteAut& t2);
InfiniteAut invert(const InfiniteAut& theta);

bool is_finite_order(const InfiniteAut& theta);

/// Parity rule. Throws std::invalid_argument for the identity or an
/// infinite-order input.
bool equivalent_infinite(const InfiniteAut& t1, const InfiniteAut& t2);

/// Symbolic subset of D_inf: either a finite list, a rotation subgroup <r^g>,
/// or a rotation subgroup together with finitely many extra elements.
struct SubsetDescriptor {
    enum class Kind { FiniteSet, RotationSubgroup, RotationSubgroupUnion };

    Kind kind;
    std::optional<Int> generator;  // for the rotation kinds, >= 1
    std::vector<Element> extras;   // the finite part, sorted

    static SubsetDescriptor finite_set(std::vector<Element> elems);
    static SubsetDescriptor rotation_subgroup(Int generator);
    static SubsetDescriptor rotation_subgroup_union(Int generator, std::vector<Element> extras);

    bool contains(const Element& x) const;

    friend bool operator==(const SubsetDescriptor&, const SubsetDescriptor&) = default;
};

const char* to_string(SubsetDescriptor::Kind kind) noexcept;
std::string to_string(const SubsetDescriptor& d);

struct InfiniteSpaces {
    SubsetDescriptor H;
    SubsetDescriptor Q;
    SubsetDescriptor R;
};

/// H, Q and R for an involution -x + b. Throws std::invalid_argument for
/// the identity or an infinite-order input.
InfiniteSpaces spaces_infinite(const InfiniteAut& theta);

}  // namespace dihedral
