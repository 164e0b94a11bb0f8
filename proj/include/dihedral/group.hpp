#pragma once

// The dihedral groups D_n = <r, s | r^n = s^2 = 1, sr = r^{-1}s> and
// D_inf = <r, s | s^2 = 1, rs = sr^{-1}>, with elements in normal form r^k s^m.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "dihedral/modring.hpp"

namespace dihedral {

/// D_n for a finite n >= 1, or D_inf.
class Group {
public:
    static Group finite(Modulus n) { return Group(n.value()); }
    static Group finite(Int n) { return Group(Modulus(n).value()); }
    static Group infinite() { return Group(0); }

    bool is_finite() const noexcept { return n_ != 0; }
    /// Throws std::logic_error for D_inf.
    Modulus modulus() const {
        if (!is_finite()) reject_infinite();
        return Modulus(n_);
    }
    /// Number of elements, 2n. Throws std::logic_error for D_inf.
    Int size() const;

    friend bool operator==(Group, Group) = default;

private:
    explicit Group(Int n) : n_(n) {}
    [[noreturn]] static void reject_infinite();
    Int n_;  // 0 marks D_inf
};

/// r^rotation s^reflection. For finite groups 0 <= rotation < n.
class Element {
public:
    Element(Group g, Int rotation, bool reflection);

    static Element identity(Group g) { return Element(g, 0, false); }
    static Element rotation(Group g, Int k) { return Element(g, k, false); }
    static Element reflection(Group g, Int k) { return Element(g, k, true); }

    Group group() const noexcept { return group_; }
    Int rotation_index() const noexcept { return rotation_; }
    bool is_reflection() const noexcept { return reflection_; }
    bool is_identity() const noexcept { return rotation_ == 0 && !reflection_; }

    friend bool operator==(const Element&, const Element&) = default;
    /// Enumeration order: rotations before reflections, then by index.
    friend std::strong_ordering operator<=>(const Element& x, const Element& y) {
        if (auto c = x.reflection_ <=> y.reflection_; c != 0) return c;
        return x.rotation_ <=> y.rotation_;
    }

private:
    Group group_;
    Int rotation_;
    bool reflection_;
};

/// Throws std::invalid_argument on group mismatch and std::overflow_error
/// if a D_inf rotation index leaves the 64-bit range.
Element multiply(const Element& x, const Element& y);
Element inverse(const Element& x);
Element power(const Element& x, Int e);

/// Order of x. For D_inf only the identity and reflections have finite
/// order; other elements throw std::domain_error.
Int element_order(const Element& x);

/// All 2n elements of D_n: 1, r, ..., r^{n-1}, s, rs, ..., r^{n-1}s.
std::vector<Element> enumerate(Modulus n);

/// "1", "r", "r^k", "s", "r*s", "r^k*s". D_inf rotations may be negative ("r^-3").
std::string to_string(const Element& x);

/// Inverse of to_string; also accepts "r^1", "rs", "r^ks" and whitespace.
/// Finite rotation indices are reduced mod n. Throws std::invalid_argument.
Element parse_element(std::string_view text, Group g);

}  // namespace dihedral
