#pragma once

/**
 * @file affine.hpp
 * @brief Automorphisms of D_n as affine maps of Z_n.
 *
 * For n >= 3 every automorphism of D_n is determined by r -> r^a and
 * s -> r^b s with a a unit, and acts on normal forms by
 *
 *     (ax + b)(r^k s^m) = r^{ak + bm} s^m.
 *
 * Composition is that of affine maps: (a1 x + b1)(a2 x + b2) = a1 a2 x + a1 b2 + b1.
 * D_1 and D_2 are excluded because their automorphism groups are not Aff(Z_n).
 */

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dihedral/group.hpp"
#include "dihedral/modring.hpp"

namespace dihedral {

class AffineAut {
public:
    /// Reduces a and b mod n. Throws std::invalid_argument when n < 3 or a is
    /// not a unit.
    AffineAut(Modulus n, Int a, Int b);

    static AffineAut identity(Modulus n) { return AffineAut(n, 1, 0); }

    Modulus modulus() const noexcept { return a_.modulus(); }
    const UnitZn& a() const noexcept { return a_; }
    const ZnElem& b() const noexcept { return b_; }

    friend bool operator==(const AffineAut&, const AffineAut&) = default;
    /// Orders by (a, b).
    friend std::strong_ordering operator<=>(const AffineAut& x, const AffineAut& y) {
        if (auto c = x.a_.value() <=> y.a_.value(); c != 0) return c;
        return x.b_.value() <=> y.b_.value();
    }

private:
    UnitZn a_;
    ZnElem b_;
};

Element apply(const AffineAut& theta, const Element& g);

/// t1 after t2.
AffineAut compose(const AffineAut& t1, const AffineAut& t2);
AffineAut invert(const AffineAut& theta);
AffineAut power(const AffineAut& theta, Int k);

/// Least k >= 1 with theta^k = id, by iterated composition.
Int aut_order(const AffineAut& theta);

/// theta^k = id, tested through a^k = 1 and (a^{k-1} + ... + 1) b = 0.
bool has_order_dividing(const AffineAut& theta, Int k);

/// Aut_k(D_n) sorted by (a, b).
std::vector<AffineAut> enumerate_aut_k(Modulus n, Int k);

/// |Aut_k(D_n)| as the sum over a in R_n^k of gcd(a^{k-1} + ... + 1, n).
Int count_aut_k(Modulus n, Int k);

/// Every automorphism of D_n, sorted by (a, b). Size n * phi(n).
std::vector<AffineAut> enumerate_all(Modulus n);

/// conj(g): h -> g h g^{-1}.
AffineAut from_conjugation(const Element& g);

bool is_inner(const AffineAut& theta);

/// (n - 1)x + (n - 1), which swaps the two reflection classes when n is even.
AffineAut diagram_automorphism(Modulus n);

/// "x", "<a>x", "x+<b>", "<a>x+<b>".
std::string to_string(const AffineAut& theta);

/// Accepts "ax+b", "ax-b", "ax", "x+b", "x", "-x+b" with optional
/// whitespace; coefficients are reduced mod n. Syntax errors throw
/// ParseError carrying the offending position.
AffineAut parse_aut(std::string_view text, Modulus n);

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace dihedral
