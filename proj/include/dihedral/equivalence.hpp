#pragma once

/**
 * @file equivalence.hpp
 * @brief Conjugacy of automorphisms inside Aut(D_n).
 *
 * ax + b ~ cx + d  iff  a = c and f b - d lies in <a - 1> for some unit f.
 *
 * With a in R_n^k fixed, the classes with leading coefficient a are the
 * U_n-orbits on the coset space Ann(1 + a + ... + a^{k-1}) / <a - 1>. Their
 * number N_a is the number of divisors of
 *
 *     gcd(a - 1, n) gcd(1 + a + ... + a^{k-1}, n) / n.
 *
 * For involutions N_a <= 2, with N_a = 2 exactly when n = 2^m k (k odd,
 * m > 0) and a = +-1 mod 2^m. This gives the closed count C_n of classes in
 * Aut_2(D_n).
 */

#include <vector>

#include "dihedral/affine.hpp"
#include "dihedral/modring.hpp"

namespace dihedral {

struct EquivClass {
    UnitZn a;
    /// Least b over the class.
    ZnElem rep_b;
    /// Number of automorphisms in the class.
    Int size;
    /// Classes were enumerated inside Aut_k(D_n) for this k.
    Int order_bound;
    /// All b with ax + b in the class, ascending.
    std::vector<Int> members;

    AffineAut representative() const { return AffineAut(a.modulus(), a.value(), rep_b.value()); }
};

/// Scans f over U_n.
bool are_equivalent(const AffineAut& t1, const AffineAut& t2);

/// Partition of Aut_k(D_n) into classes, sorted by (a, rep_b).
std::vector<EquivClass> enumerate_classes(Modulus n, Int k);

/// Divisor-count formula for N_a. Throws std::invalid_argument if a^k != 1.
Int count_classes_Na(Modulus n, Int k, const UnitZn& a);

/// N_a for k = 2 from the 2-adic criterion. Throws std::invalid_argument if a^2 != 1.
Int involution_Na(Modulus n, const UnitZn& a);

/// C_n from the factorization of n.
Int count_involution_classes(Modulus n);

/// |Aut_2(D_n)| = sum over a in R_n^2 of gcd(a + 1, n). Includes the identity.
Int count_involutions(Modulus n);

}  // namespace dihedral
