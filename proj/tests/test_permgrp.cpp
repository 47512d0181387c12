#include <doctest.h>

#include <map>

#include "outcat/permgrp.hpp"

using namespace outcat;

TEST_CASE("hom extension from generator images") {
    auto a3 = FiniteGroup::alternating(3);
    auto a6 = FiniteGroup::alternating(6);
    // trivial map
    auto triv = GroupHom::from_generator_images(a3, a6->type(), {Perm(6)});
    REQUIRE(triv.has_value());
    for (const Perm& p : triv->images()) CHECK(p.is_identity());
    // first-symbols inclusion
    auto incl = GroupHom::from_generator_images(a3, a6->type(), {Perm::from_cycles("(1 2 3)", 6)});
    REQUIRE(incl.has_value());
    CHECK(incl->eval(Perm::from_cycles("(1 3 2)", 3)) == Perm::from_cycles("(1 3 2)", 6));
    // order obstruction: a 3-cycle cannot map to an order-2 image
    auto bad = GroupHom::from_generator_images(a3, a6->type(), {Perm::from_cycles("(1 2)(3 4)", 6)});
    CHECK(!bad.has_value());
    // same obstruction with a plain 2-cycle in a symmetric-group target
    auto s6 = FiniteGroup::symmetric(6);
    auto bad2 = GroupHom::from_generator_images(a3, s6->type(), {Perm::from_cycles("(1 2)", 6)});
    CHECK(!bad2.has_value());
    // odd image is rejected by the target type
    auto odd = GroupHom::from_generator_images(a3, a6->type(), {Perm::from_cycles("(1 2)", 6)});
    CHECK(!odd.has_value());
}

TEST_CASE("inner_equivalent finds codomain-side conjugators") {
    auto a3 = FiniteGroup::alternating(3);
    auto a6 = FiniteGroup::alternating(6);
    GroupHom f = standard_embedding(3, 6, 1);
    // f vs itself: identity is the first conjugator in enumeration order
    auto self = inner_equivalent(f, f);
    REQUIRE(self.has_value());
    CHECK(self->is_identity());
    // conjugate by an even permutation and recover a working conjugator
    Perm h = Perm::from_cycles("(1 4)(2 5)", 6);
    GroupHom g = f.then_conjugation(h);
    auto found = inner_equivalent(f, g);
    REQUIRE(found.has_value());
    CHECK(f.then_conjugation(*found) == g);
    CHECK(found->sign() == 1);
    (void)a3;
}

TEST_CASE("multiplicity is a conjugation invariant and separates these maps") {
    // multiplicity-1 vs multiplicity-2 embeddings of A3 in A7: cycle types
    // of the generator images differ (3 vs 3+3), so no conjugator exists
    GroupHom m1 = standard_embedding(3, 7, 1);
    GroupHom m2 = standard_embedding(3, 7, 2);
    CHECK(!inner_equivalent(m1, m2).has_value());
    CHECK(!symmetric_conjugator(m1, m2).has_value());
    CHECK(multiplicity_of(m1) == 1);
    CHECK(multiplicity_of(m2) == 2);
}

TEST_CASE("automorphism group orders") {
    CHECK(automorphisms(FiniteGroup::alternating(3)).size() == 2);
    CHECK(automorphisms(FiniteGroup::alternating(4)).size() == 24);
    CHECK(automorphisms(FiniteGroup::alternating(5)).size() == 120);
    CHECK(automorphisms(FiniteGroup::alternating(6)).size() == 1440);
    CHECK_THROWS_AS(automorphisms(FiniteGroup::alternating(7)), CapError);
}

TEST_CASE("exceptional automorphism of A6") {
    GroupHom sigma = find_exceptional_a6_automorphism();
    Perm c3 = Perm::from_cycles("(1 2 3)", 6);
    CHECK(sigma.eval(c3) == Perm::from_cycles("(1 2 3)(4 5 6)", 6));
    CHECK(sigma.is_injective());
    // not inner: no conjugation can change the cycle type of (123)
    auto a6 = FiniteGroup::alternating(6);
    CHECK(!inner_equivalent(GroupHom::identity(a6), sigma).has_value());
    CHECK(!symmetric_conjugator(GroupHom::identity(a6), sigma).has_value());
    // closure under composition: sigma then sigma is again an automorphism
    GroupHom sq = sigma.then(sigma);
    CHECK(sq.is_injective());
    CHECK(sq.target() == a6->type());
}

TEST_CASE("the A3 -> A6 -> A7 class-product split") {
    NonclosureReport rep = verify_nonclosure_a3_a6_a7();
    CHECK(rep.straight_cycle_type == std::vector<int>{3});
    CHECK(rep.twisted_cycle_type == std::vector<int>{3, 3});
    CHECK(rep.twisted_factor_in_class);
    CHECK(rep.twisted_equals_multiplicity_two);
    CHECK(rep.conjugators_searched == 2 * 5040);
    CHECK(!rep.conjugator_found);
}

TEST_CASE("standard embeddings") {
    GroupHom k0 = standard_embedding(5, 10, 0, GroupCaps{10, 50000});
    for (const Perm& p : k0.generator_images()) CHECK(p.is_identity());
    CHECK(multiplicity_of(k0) == 0);
    GroupHom k2 = standard_embedding(5, 10, 2, GroupCaps{10, 50000});
    CHECK(k2.eval(Perm::from_cycles("(1 2 3 4 5)", 5)) ==
          Perm::from_cycles("(1 2 3 4 5)(6 7 8 9 10)", 10));
    CHECK(multiplicity_of(k2) == 2);
    CHECK_THROWS_AS(standard_embedding(5, 8, 2), ValidationError);
}

TEST_CASE("exotic six-point actions carry no multiplicity") {
    // the transitive A5 inside A6 and the outer twist of A6 are not
    // diagonal, so the multiplicity notion does not apply to them
    auto a5 = FiniteGroup::alternating(5);
    auto a6 = FiniteGroup::alternating(6);
    int exotic = 0;
    for (const auto& h : all_homs(a5, a6)) {
        auto m = multiplicity_of(h);
        if (!m) ++exotic;
    }
    CHECK(exotic == 720);
    GroupHom sigma = find_exceptional_a6_automorphism();
    CHECK(!multiplicity_of(sigma).has_value());
}

TEST_CASE("hom counts against subgroup arithmetic") {
    auto a5 = FiniteGroup::alternating(5);
    auto a6 = FiniteGroup::alternating(6);
    CHECK(all_homs(a5, a5).size() == 121);   // trivial + Aut(A5)
    CHECK(all_homs(a5, a6).size() == 1441);  // trivial + 12 subgroups x 120
    CHECK(all_homs(a6, a6).size() == 1441);  // trivial + Aut(A6)
    CHECK(all_homs(a6, a5).size() == 1);     // trivial only
}

TEST_CASE("block multiplicity data validates the fill constraint") {
    BlockMultiplicityData ok{{5}, {12}, {{2}}, {2}};
    ok.validate();
    BlockMultiplicityData bad{{5}, {12}, {{2}}, {1}};
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("inner reducibility condition") {
    // A5 -> A12 with multiplicity 2 and two fixed symbols
    CHECK(inner_reducibility_condition({{5}, {12}, {{2}}, {2}}));
    // odd-degree clause: multiplicity 2, no fixed symbols
    CHECK(inner_reducibility_condition({{5}, {10}, {{2}}, {0}}));
    // neither clause: multiplicity 1, one fixed symbol, even degree
    CHECK(!inner_reducibility_condition({{4}, {5}, {{1}}, {1}}));
}

TEST_CASE("even conjugators exist when the reducibility condition holds") {
    GroupCaps caps{12, 50000};
    SUBCASE("two fixed symbols, target degree 12") {
        BlockMultiplicityData data{{5}, {12}, {{2}}, {2}};
        REQUIRE(inner_reducibility_condition(data));
        GroupHom std_map = block_embedding(data, caps);
        GroupHom twisted = std_map.then_conjugation(Perm::from_cycles("(1 2)", 12)); // odd twist
        auto even = inner_equivalent(std_map, twisted);
        REQUIRE(even.has_value());
        CHECK(even->sign() == 1);
        CHECK(std_map.then_conjugation(*even) == twisted);
    }
    SUBCASE("odd-degree domain, multiplicity two, no fixed symbols") {
        BlockMultiplicityData data{{5}, {10}, {{2}}, {0}};
        REQUIRE(inner_reducibility_condition(data));
        GroupHom std_map = block_embedding(data, caps);
        GroupHom twisted = std_map.then_conjugation(Perm::from_cycles("(1 2)", 10));
        auto even = inner_equivalent(std_map, twisted);
        REQUIRE(even.has_value());
        CHECK(even->sign() == 1);
    }
    SUBCASE("negative control: condition fails and so does the even search") {
        // multiplicity 1 into a barely larger group: conjugators form a
        // single coset, all odd here
        GroupHom std_map = standard_embedding(5, 5, 1);
        GroupHom twisted = std_map.then_conjugation(Perm::from_cycles("(1 2)", 5));
        CHECK(!inner_equivalent(std_map, twisted).has_value());
        CHECK(symmetric_conjugator(std_map, twisted).has_value());
    }
}

TEST_CASE("generalized inner equivalence allows odd per-component conjugators") {
    GroupCaps caps{12, 50000};
    BlockMultiplicityData data{{5, 3}, {9, 4}, {{1, 1}, {0, 0}}, {1, 4}};
    data.validate();
    GroupHom f = block_embedding(data, caps);
    // twist by an odd permutation inside the first target component
    GroupHom g = f.then_conjugation(Perm::from_cycles("(1 2)", 13));
    CHECK(f == f);
    auto w = generalized_inner_equivalent(f, g);
    REQUIRE(w.has_value());
    CHECK(f.then_conjugation(*w) == g);
    // equal maps: identity witness
    auto id = generalized_inner_equivalent(f, f);
    REQUIRE(id.has_value());
    CHECK(id->is_identity());
    // different multiplicities: no witness
    BlockMultiplicityData data2{{5, 3}, {9, 4}, {{1, 0}, {0, 1}}, {4, 1}};
    GroupHom h = block_embedding(data2, caps);
    CHECK(!generalized_inner_equivalent(f, h).has_value());
}

TEST_CASE("domain-side inner composition reduces to the codomain side") {
    // (h then f) == (f then conj_{f(h)}): the concrete exchange identity
    auto a5 = FiniteGroup::alternating(5);
    auto a6 = FiniteGroup::alternating(6);
    GroupHom f = standard_embedding(5, 6, 1);
    int checked = 0;
    for (size_t i = 0; i < a5->size(); i += 7) {
        Perm h = a5->elements()[i];
        GroupHom lhs = f.after_endo(GroupHom::conjugation(a5, h));
        GroupHom rhs = f.then_conjugation(f.eval(h));
        CHECK(lhs == rhs);
        ++checked;
    }
    CHECK(checked > 5);
    (void)a6;
}

TEST_CASE("multiplicity is invariant under both equivalence notions") {
    GroupHom f = standard_embedding(5, 8, 1);
    GroupHom g = f.then_conjugation(Perm::from_cycles("(1 2)", 8));   // odd twist
    GroupHom k = f.then_conjugation(Perm::from_cycles("(1 2 3)", 8)); // even twist
    CHECK(multiplicity_of(f) == multiplicity_of(g));
    CHECK(multiplicity_of(f) == multiplicity_of(k));
}
