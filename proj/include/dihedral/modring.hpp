#pragma once

/**
 * @file modring.hpp
 * @brief Exact arithmetic in Z_n.
 *
 * Units, annihilators, cyclic subgroups, the divisor lattice and roots of
 * unity. Every subgroup of Z_n is cyclic and is represented by its unique
 * positive divisor generator d | n, so that
 *
 *     <d> = {0, d, 2d, ..., n - d},   |<d>| = n / d,
 *
 * and membership reduces to a divisibility test. The trivial subgroup is
 * d = n (which coincides with d = 1 when n = 1).
 *
 * Moduli are 64-bit; products go through 128-bit intermediates.
 */

#include <compare>
#include <cstdint>
#include <vector>

namespace dihedral {

using Int = std::int64_t;

class Modulus {
public:
    explicit Modulus(Int n) : n_(n) {
        if (n < 1) reject(n);
    }

    constexpr Int value() const noexcept { return n_; }

    /// Canonical representative of x in [0, n).
    Int reduce(Int x) const noexcept {
        const Int r = x % n_;
        return r < 0 ? r + n_ : r;
    }

    friend bool operator==(Modulus, Modulus) = default;

private:
    [[noreturn]] static void reject(Int n);
    Int n_;
};

class ZnElem {
public:
    ZnElem(Modulus n, Int value) : n_(n), value_(n.reduce(value)) {}

    Int value() const noexcept { return value_; }
    Modulus modulus() const noexcept { return n_; }

    friend bool operator==(const ZnElem&, const ZnElem&) = default;
    friend auto operator<=>(const ZnElem& x, const ZnElem& y) { return x.value_ <=> y.value_; }

private:
    Modulus n_;
    Int value_;
};

/// Element of U_n. Construction throws std::invalid_argument when
/// gcd(value, n) != 1.
class UnitZn {
public:
    UnitZn(Modulus n, Int value);

    Int value() const noexcept { return value_; }
    Modulus modulus() const noexcept { return n_; }
    UnitZn inverse() const;

    friend bool operator==(const UnitZn&, const UnitZn&) = default;
    friend auto operator<=>(const UnitZn& x, const UnitZn& y) { return x.value_ <=> y.value_; }

private:
    Modulus n_;
    Int value_;
};

class ZnSubgroup {
public:
    /// `generator` must divide n.
    ZnSubgroup(Modulus n, Int generator);

    Int generator() const noexcept { return gen_; }
    Modulus modulus() const noexcept { return n_; }
    Int order() const noexcept { return n_.value() / gen_; }

    bool contains(Int x) const noexcept { return n_.reduce(x) % gen_ == 0; }
    /// True when this subgroup is contained in `other`.
    bool is_subgroup_of(const ZnSubgroup& other) const noexcept { return gen_ % other.gen_ == 0; }
    bool is_trivial() const noexcept { return gen_ == n_.value(); }

    /// Elements in ascending order.
    std::vector<Int> elements() const;

    friend bool operator==(const ZnSubgroup&, const ZnSubgroup&) = default;

private:
    Modulus n_;
    Int gen_;
};

struct PrimePower {
    Int prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = 2^two_exponent * prod p_i^{r_i}, odd primes strictly increasing.
struct Factorization {
    int two_exponent = 0;
    std::vector<PrimePower> odd_primes;

    /// Throws std::invalid_argument on a malformed factorization.
    void validate() const;
    Int value() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Scalar helpers.
Int gcd(Int a, Int b) noexcept;
Int mul_mod(Int a, Int b, Int n) noexcept;
Int pow_mod(Int base, Int exp, Int n) noexcept;
/// Throws std::invalid_argument if x is not invertible mod n.
Int inverse_mod(Int x, Int n);
/// 1 + a + a^2 + ... + a^{k-1} mod n.
Int geometric_sum(Int a, Int k, Int n) noexcept;
Int num_divisors(Int m);
std::vector<Int> divisors(Int m);
Int euler_phi(Int n);

Factorization factorize(Int n);

/// U_n in ascending order. U_1 = {0}.
std::vector<UnitZn> units(Modulus n);

ZnSubgroup cyclic_subgroup(const ZnElem& c);
ZnSubgroup annihilator(const ZnElem& c);

/// R_n^k by exhaustive scan of U_n, ascending.
std::vector<UnitZn> kth_roots_of_unity(Modulus n, Int k);

/// R_n^2 assembled from local roots of unity through the Chinese
/// remainder isomorphism; no scan of U_n. Ascending.
std::vector<UnitZn> square_roots_crt(const Factorization& f);

/// |R_n^2| from the shape of the factorization alone.
Int count_square_roots(const Factorization& f);

/// Number of subgroups L with <lower_gen> <= L <= <upper_gen> in Z_n.
/// Throws std::invalid_argument unless upper_gen | lower_gen | n.
Int divisor_interval_count(Modulus n, Int lower_gen, Int upper_gen);

}  // namespace dihedral
