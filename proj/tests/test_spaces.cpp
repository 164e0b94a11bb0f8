#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "dihedral/spaces.hpp"
#include "support.hpp"

using namespace dihedral;
using namespace testing_support;

namespace {

const Modulus n36(36);

std::vector<std::vector<Element>> brute_h_orbits(const std::vector<Element>& h, const std::vector<Element>& q) {
    std::set<std::vector<Element>> out;
    for (const Element& x : q) {
        std::set<Element> orbit;
        for (const Element& g : h) orbit.insert(multiply(multiply(g, x), inverse(g)));
        out.emplace(orbit.begin(), orbit.end());
    }
    return {out.begin(), out.end()};
}

std::vector<Element> product_set(const std::vector<Element>& x, const std::vector<Element>& y) {
    std::set<Element> out;
    for (const Element& p : x)
        for (const Element& q : y) out.insert(multiply(p, q));
    return {out.begin(), out.end()};
}

std::vector<Element> odd_reflections(Int n) {
    std::vector<Element> out;
    for (Int k = 1; k < n; k += 2) out.push_back(refl(n, k));
    return out;
}

template <class F>
void for_each_low_order(Int max_n, F f) {
    for (Int n = 3; n <= max_n; ++n)
        for (const AffineAut& t : enumerate_all(Modulus(n)))
            if (aut_order(t) <= 6) f(t);
}

}  // namespace

// =============================================================================
// D_36 worked examples
// =============================================================================

TEST(SpacesD36, Theta1) {
    const AffineAut t(n36, 19, 18);
    std::vector<Element> h = rotation_range(36, 0, 2);
    for (const Element& x : odd_reflections(36)) h.push_back(x);
    EXPECT_EQ(fixed_group(t), h);
    EXPECT_TRUE(std::binary_search(h.begin(), h.end(), refl(36, 1)));
    EXPECT_EQ(symmetric_space(t), elems(36, "1, r^18"));
    EXPECT_EQ(intersect(fixed_group(t), symmetric_space(t)), elems(36, "1, r^18"));
    EXPECT_EQ(h_structure(t), HShape::Dihedral);
    EXPECT_EQ(q_subgroup(t)->generator(), 18);
    EXPECT_EQ(h_orbits_on_q(t), (std::vector<std::vector<Element>>{elems(36, "1"), elems(36, "r^18")}));
    const HqVerdict v = hq_equals_g(t);
    EXPECT_FALSE(v.hq_is_g);
    EXPECT_TRUE(v.b_in_image);
    EXPECT_FALSE(v.trivial_intersection);
    EXPECT_FALSE(v.gcd_coprime);
}

TEST(SpacesD36, Theta1TwistedInvolutionsFollowDefinition) {
    const AffineAut t(n36, 19, 18);
    std::vector<Element> r = elems(36, "1, r^9, r^18, r^27");
    for (const Element& x : odd_reflections(36)) r.push_back(x);
    EXPECT_EQ(twisted_involutions(t), r);
    EXPECT_EQ(twisted_involutions(t), def_r(t));
    // r is not a twisted involution: theta(r) = r^19, r^{-1} = r^35.
    EXPECT_FALSE(std::binary_search(r.begin(), r.end(), rot(36, 1)));
}

TEST(SpacesD36, Theta2) {
    const AffineAut t(n36, 5, 2);
    EXPECT_EQ(fixed_group(t), elems(36, "1, r^9, r^18, r^27"));
    EXPECT_EQ(symmetric_space(t), rotation_range(36, 0, 2));
    EXPECT_EQ(intersect(fixed_group(t), symmetric_space(t)), elems(36, "1, r^18"));
    EXPECT_EQ(h_structure(t), HShape::Cyclic);
    EXPECT_EQ(q_subgroup(t)->generator(), 2);
    std::vector<std::vector<Element>> singletons;
    for (const Element& x : rotation_range(36, 0, 2)) singletons.push_back({x});
    EXPECT_EQ(h_orbits_on_q(t), singletons);
    // H and Q are both rotation sets, so HQ stays inside <r>.
    const HqVerdict v = hq_equals_g(t);
    EXPECT_FALSE(v.hq_is_g);
    EXPECT_FALSE(v.b_in_image);
    EXPECT_THROW(twisted_involutions(t), std::invalid_argument);
}

TEST(SpacesD36, Theta3) {
    const AffineAut t(n36, 5, 4);
    EXPECT_EQ(fixed_group(t), elems(36, "1, r^9, r^18, r^27, r^8*s, r^17*s, r^26*s, r^35*s"));
    EXPECT_EQ(symmetric_space(t), rotation_range(36, 0, 4));
    EXPECT_EQ(intersect(fixed_group(t), symmetric_space(t)), elems(36, "1"));
    EXPECT_EQ(h_structure(t), HShape::Dihedral);
    EXPECT_EQ(h_orbits_on_q(t), (std::vector<std::vector<Element>>{elems(36, "1"), elems(36, "r^4, r^32"),
                                                                   elems(36, "r^8, r^28"), elems(36, "r^12, r^24"),
                                                                   elems(36, "r^16, r^20")}));
    const HqVerdict v = hq_equals_g(t);
    EXPECT_TRUE(v.hq_is_g);
    EXPECT_TRUE(v.b_in_image);
    EXPECT_TRUE(v.trivial_intersection);
    EXPECT_TRUE(v.gcd_coprime);
    EXPECT_EQ(multiply(rot(36, 9), rot(36, 28)), rot(36, 1));
}

TEST(SpacesD36, Analyze) {
    const SpaceReport rep = analyze(AffineAut(n36, 19, 18));
    EXPECT_EQ(rep.theta, AffineAut(n36, 19, 18));
    EXPECT_EQ(rep.Q, elems(36, "1, r^18"));
    ASSERT_TRUE(rep.R.has_value());
    EXPECT_EQ(rep.R->size(), 22u);
    EXPECT_EQ(rep.g_orbit_count, 1);
    EXPECT_FALSE(analyze(AffineAut(n36, 5, 2)).R.has_value());
    EXPECT_STREQ(to_string(HShape::Cyclic), "cyclic");
    EXPECT_STREQ(to_string(HShape::Dihedral), "dihedral");
}

TEST(Spaces, IdentityAndInner) {
    const AffineAut id = AffineAut::identity(Modulus(12));
    EXPECT_EQ(fixed_group(id), enumerate(Modulus(12)));
    EXPECT_EQ(symmetric_space(id), elems(12, "1"));
    EXPECT_EQ(twisted_involutions(id), def_r(id));
    EXPECT_TRUE(hq_equals_g(id).hq_is_g);

    const AffineAut c = from_conjugation(refl(8, 0));  // 7x
    EXPECT_EQ(fixed_group(c), elems(8, "1, r^4, s, r^4*s"));
    EXPECT_EQ(twisted_involutions(c), def_r(c));
}

TEST(Spaces, TwistedConjugation) {
    const AffineAut t(n36, 19, 18);
    EXPECT_EQ(twisted_conjugate(rot(36, 1), rot(36, 0), t), rot(36, 18));
    EXPECT_EQ(tau(rot(36, 1), t), rot(36, 18));
    EXPECT_EQ(tau(refl(36, 0), t), rot(36, 18));
    EXPECT_EQ(tau(rot(36, 2), t), rot(36, 0));
    EXPECT_EQ(g_orbits_on_q(t), 1);
}

// =============================================================================
// Formulas against the definitions, every theta of order <= 6
// =============================================================================

TEST(SpacesProperties, HAndQMatchDefinitions) {
    for_each_low_order(40, [](const AffineAut& t) {
        const auto h = fixed_group(t);
        const auto q = symmetric_space(t);
        ASSERT_EQ(h, def_fixed(t)) << to_string(t);
        ASSERT_EQ(q, def_q(t)) << to_string(t);
        ASSERT_TRUE(closed_subgroup(h));
        const Int n = t.modulus().value();
        const Int g = gcd(t.a().value() - 1, n);
        ASSERT_EQ(static_cast<Int>(h.size()), h_structure(t) == HShape::Dihedral ? 2 * g : g) << to_string(t);
        ASSERT_EQ(h_structure(t) == HShape::Dihedral, std::any_of(h.begin(), h.end(), [](const Element& x) {
                      return x.is_reflection();
                  }));
    });
}

TEST(SpacesProperties, QSubgroupGenerator) {
    for_each_low_order(40, [](const AffineAut& t) {
        const auto q = symmetric_space(t);
        const auto gen = q_subgroup(t);
        ASSERT_EQ(gen.has_value(), closed_subgroup(q)) << to_string(t);
        if (!gen) return;
        std::vector<Element> rots;
        for (Int k : gen->elements()) rots.push_back(rot(t.modulus().value(), k));
        ASSERT_EQ(rots, q) << to_string(t);
    });
}

TEST(SpacesProperties, InvolutionR) {
    for (Int n = 3; n <= 40; ++n)
        for (const AffineAut& t : enumerate_aut_k(Modulus(n), 2)) {
            const auto q = symmetric_space(t);
            const auto r = twisted_involutions(t);
            ASSERT_EQ(r, def_r(t)) << to_string(t);
            ASSERT_TRUE(closed_subgroup(q)) << to_string(t);
            ASSERT_TRUE(is_subset(q, r)) << to_string(t);
            const bool b_in_image = cyclic_subgroup(ZnElem(t.modulus(), t.a().value() - 1)).contains(t.b().value());
            ASSERT_EQ(r == q, !b_in_image) << to_string(t);
        }
}

TEST(SpacesProperties, HqVerdict) {
    for_each_low_order(40, [](const AffineAut& t) {
        const auto h = fixed_group(t);
        const auto q = symmetric_space(t);
        const HqVerdict v = hq_equals_g(t);
        ASSERT_EQ(v.hq_is_g, product_set(h, q) == enumerate(t.modulus())) << to_string(t);
        ASSERT_EQ(v.trivial_intersection, intersect(h, q).size() == 1) << to_string(t);
        if (v.hq_is_g) ASSERT_EQ(static_cast<Int>(h.size() * q.size()), 2 * t.modulus().value());
        if (!v.b_in_image) ASSERT_FALSE(v.hq_is_g) << to_string(t);
        if (t.a().value() * t.a().value() % t.modulus().value() == 1 && v.b_in_image) {
            ASSERT_EQ(v.hq_is_g, v.trivial_intersection) << to_string(t);
            ASSERT_EQ(v.hq_is_g, v.gcd_coprime) << to_string(t);
        }
    });
}

TEST(SpacesProperties, Orbits) {
    for_each_low_order(30, [](const AffineAut& t) {
        ASSERT_EQ(h_orbits_on_q(t), brute_h_orbits(fixed_group(t), symmetric_space(t))) << to_string(t);
        ASSERT_EQ(g_orbits_on_q(t), 1);
    });
}

TEST(SpacesProperties, TwistedActionAndTau) {
    for (Int n = 3; n <= 16; ++n) {
        const auto g = enumerate(Modulus(n));
        for (const AffineAut& t : enumerate_aut_k(Modulus(n), 6)) {
            const auto h = fixed_group(t);
            const auto q = symmetric_space(t);
            for (const Element& x : g) {
                ASSERT_TRUE(std::binary_search(q.begin(), q.end(), tau(x, t)));
                for (const Element& y : h) ASSERT_EQ(tau(multiply(x, y), t), tau(x, t));
                for (const Element& y : g)
                    ASSERT_EQ(twisted_conjugate(multiply(x, y), q.front(), t),
                              twisted_conjugate(x, twisted_conjugate(y, q.front(), t), t));
            }
            // Restricted to H the twisted action is ordinary conjugation.
            for (const Element& y : h)
                for (const Element& x : q)
                    ASSERT_EQ(twisted_conjugate(y, x, t), multiply(multiply(y, x), inverse(y)));
        }
    }
}
