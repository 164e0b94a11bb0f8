#pragma once

/**
 * @file spaces.hpp
 * @brief Fixed groups, generalized symmetric spaces and twisted involutions.
 *
 * For theta = ax + b of finite order on G = D_n:
 *
 *     H = {x : theta(x) = x}
 *       = {r^k : k(a - 1) = 0} u {r^k s : k(a - 1) = -b}
 *     Q = {x theta(x)^{-1}}
 *       = {r^k : k in <a - 1> u (-b + <a - 1>)}
 *     R = {x : theta(x) = x^{-1}}                     (theta^2 = id)
 *       = {r^k : k in Ann(a + 1)} u {r^k s : k(a - 1) = -b}
 *
 * G acts on Q by twisted conjugation g * q = g q theta(g)^{-1}; restricted
 * to H this is ordinary conjugation. Sets are returned in the enumeration
 * order of D_n (rotations first, ascending index).
 */

#include <optional>
#include <vector>

#include "dihedral/affine.hpp"
#include "dihedral/group.hpp"
#include "dihedral/modring.hpp"

namespace dihedral {

enum class HShape { Cyclic, Dihedral };

const char* to_string(HShape shape) noexcept;

std::vector<Element> fixed_group(const AffineAut& theta);
std::vector<Element> symmetric_space(const AffineAut& theta);

/// Throws std::invalid_argument unless theta^2 = id.
std::vector<Element> twisted_involutions(const AffineAut& theta);

/// Dihedral iff b lies in <a - 1>, i.e. H contains a reflection.
HShape h_structure(const AffineAut& theta);

/// Divisor generator of psi(Q) when Q is a subgroup of <r>, else nullopt.
std::optional<ZnSubgroup> q_subgroup(const AffineAut& theta);

struct HqVerdict {
    /// HQ = D_n, from the product set. This is the verdict.
    bool hq_is_g;
    bool b_in_image;          // b in <a - 1>
    bool trivial_intersection;  // H n Q = {1}
    bool gcd_coprime;           // gcd(a-1, n) coprime to n / gcd(a-1, n)
};

HqVerdict hq_equals_g(const AffineAut& theta);

/// H-orbits on Q, each sorted, ordered by least member.
std::vector<std::vector<Element>> h_orbits_on_q(const AffineAut& theta);

/// Number of G-orbits on Q. Always 1; throws std::logic_error if the orbit
/// of the identity differs from Q.
Int g_orbits_on_q(const AffineAut& theta);

/// g q theta(g)^{-1}
Element twisted_conjugate(const Element& g, const Element& q, const AffineAut& theta);

/// g theta(g)^{-1}
Element tau(const Element& g, const AffineAut& theta);

struct SpaceReport {
    AffineAut theta;
    std::vector<Element> H;
    std::vector<Element> Q;
    std::optional<std::vector<Element>> R;  // present when theta^2 = id
    HShape h_shape;
    std::optional<ZnSubgroup> q_generator;
    HqVerdict hq;
    std::vector<std::vector<Element>> h_orbits;
    Int g_orbit_count;
};

SpaceReport analyze(const AffineAut& theta);

}  // namespace dihedral
