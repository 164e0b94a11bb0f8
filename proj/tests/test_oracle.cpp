#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "dihedral/equivalence.hpp"
#include "dihedral/oracle.hpp"
#include "dihedral/spaces.hpp"
#include "support.hpp"

using namespace dihedral;
using namespace testing_support;
namespace oc = dihedral::oracle;

namespace {

oc::RawAutomorphism raw(Int n, Int a, Int b) { return *oc::RawAutomorphism::make(Modulus(n), rot(n, a), refl(n, b)); }

}  // namespace

TEST(Oracle, MakeChecksRelations) {
    EXPECT_TRUE(oc::RawAutomorphism::make(Modulus(8), rot(8, 3), refl(8, 5)).has_value());
    EXPECT_FALSE(oc::RawAutomorphism::make(Modulus(8), rot(8, 2), refl(8, 0)).has_value());  // not injective
    EXPECT_FALSE(oc::RawAutomorphism::make(Modulus(8), refl(8, 1), refl(8, 0)).has_value());
    EXPECT_FALSE(oc::RawAutomorphism::make(Modulus(8), rot(8, 1), rot(8, 4)).has_value());
    // In D_2 = Klein four every non-identity element has order 2.
    EXPECT_TRUE(oc::RawAutomorphism::make(Modulus(2), refl(2, 0), rot(2, 1)).has_value());
}

TEST(Oracle, AutomorphismCounts) {
    EXPECT_EQ(oc::all_automorphisms_bf(Modulus(1)).size(), 1u);
    EXPECT_EQ(oc::all_automorphisms_bf(Modulus(2)).size(), 6u);
    EXPECT_EQ(oc::all_automorphisms_bf(Modulus(3)).size(), 6u);
    EXPECT_EQ(oc::all_automorphisms_bf(Modulus(8)).size(), 32u);
    EXPECT_EQ(oc::all_automorphisms_bf(Modulus(36)).size(), 432u);
}

TEST(Oracle, TableAndOrder) {
    const auto p = raw(36, 19, 18);
    EXPECT_EQ(p(rot(36, 1)), rot(36, 19));
    EXPECT_EQ(p(refl(36, 0)), refl(36, 18));
    EXPECT_EQ(p.table().size(), 72u);
    EXPECT_EQ(oc::order(p), 2);
    EXPECT_EQ(oc::order(raw(36, 5, 2)), 6);
    EXPECT_TRUE(oc::has_order_dividing(raw(36, 5, 2), 6));
    EXPECT_FALSE(oc::has_order_dividing(raw(36, 5, 2), 3));
    EXPECT_TRUE(raw(36, 1, 0).is_identity());
    EXPECT_EQ(oc::compose(p, p), raw(36, 1, 0));
    EXPECT_EQ(oc::index_of(refl(36, 1)), 37u);
}

TEST(Oracle, SpacesExamples) {
    const auto s1 = oc::spaces_bf(raw(36, 19, 18));
    EXPECT_EQ(s1.Q, elems(36, "1, r^18"));
    EXPECT_EQ(s1.R.size(), 22u);
    const auto s2 = oc::spaces_bf(raw(36, 5, 2));
    EXPECT_EQ(s2.H, elems(36, "1, r^9, r^18, r^27"));
    const auto s3 = oc::spaces_bf(raw(36, 5, 4));
    EXPECT_EQ(s3.H, elems(36, "1, r^9, r^18, r^27, r^8*s, r^17*s, r^26*s, r^35*s"));
    EXPECT_EQ(s3.Q, rotation_range(36, 0, 4));
}

TEST(Oracle, OrbitExamples) {
    EXPECT_EQ(oc::h_orbits_bf(raw(36, 19, 18)), (std::vector<std::vector<Element>>{elems(36, "1"), elems(36, "r^18")}));
    EXPECT_EQ(oc::h_orbits_bf(raw(36, 1, 0)), std::vector<std::vector<Element>>{elems(36, "1")});
    const auto o3 = oc::h_orbits_bf(raw(36, 5, 4));
    ASSERT_EQ(o3.size(), 5u);
    EXPECT_EQ(std::count_if(o3.begin(), o3.end(), [](const auto& o) { return o.size() == 2; }), 4);
}

TEST(Oracle, EquivalenceExamples) {
    EXPECT_FALSE(oc::equivalent_bf(raw(8, 7, 0), raw(8, 3, 0)));
    EXPECT_TRUE(oc::equivalent_bf(raw(8, 7, 1), raw(8, 7, 3)));
    for (Int k = 1; k < 7; ++k)
        for (Int l = 1; l < 7; ++l) EXPECT_TRUE(oc::equivalent_bf(raw(7, 1, 2 * k), raw(7, 1, 2 * l)));
}

// The oracle and the affine description are built independently; every raw
// automorphism must be exactly one affine map.
TEST(Oracle, MatchesAffineMaps) {
    for (Int n = 3; n <= 30; ++n) {
        const auto all = oc::all_automorphisms_bf(Modulus(n));
        ASSERT_EQ(static_cast<Int>(all.size()), n * euler_phi(n));
        std::set<AffineAut> seen;
        const auto g = enumerate(Modulus(n));
        for (const auto& p : all) {
            Int matches = 0;
            for (const AffineAut& t : enumerate_all(Modulus(n))) {
                bool same = true;
                for (const Element& x : g) same = same && p(x) == apply(t, x);
                if (same) {
                    ++matches;
                    seen.insert(t);
                }
            }
            ASSERT_EQ(matches, 1) << n;
        }
        ASSERT_EQ(static_cast<Int>(seen.size()), n * euler_phi(n));
    }
}

TEST(Oracle, SpacesAgreeWithFormulas) {
    for (Int n = 3; n <= 30; ++n)
        for (const auto& p : oc::all_automorphisms_bf(Modulus(n))) {
            if (oc::order(p) > 6) continue;
            const AffineAut t = as_affine(p);
            const auto s = oc::spaces_bf(p);
            ASSERT_EQ(s.H, fixed_group(t)) << to_string(t);
            ASSERT_EQ(s.Q, symmetric_space(t)) << to_string(t);
            if (oc::order(p) <= 2) ASSERT_EQ(s.R, twisted_involutions(t)) << to_string(t);
            ASSERT_EQ(oc::h_orbits_bf(p), h_orbits_on_q(t)) << to_string(t);
        }
}

TEST(Oracle, PairwiseEquivalenceOnInvolutions) {
    for (Int n = 3; n <= 20; ++n) {
        const auto all = oc::all_automorphisms_bf(Modulus(n));
        std::vector<oc::RawAutomorphism> inv;
        for (const auto& p : all)
            if (oc::has_order_dividing(p, 2)) inv.push_back(p);
        for (const auto& p : inv)
            for (const auto& q : inv)
                ASSERT_EQ(oc::equivalent_bf(p, q, all), are_equivalent(as_affine(p), as_affine(q)))
                    << n << " " << to_string(as_affine(p)) << " " << to_string(as_affine(q));
    }
}
