#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grsets/oracle.hpp"

using namespace grsets;
using namespace grsets::oracle;

TEST_CASE("jet dimensions count monomials") {
    MultiIndexSeries s = jet_dimension_series(8);
    CHECK(s.coefficient({0}) == 1);
    CHECK(s.coefficient({1}) == 2);
    CHECK(s.coefficient({4}) == 5);
    CHECK(s.coefficient({8}) == 9);
}

TEST_CASE("antipodal eigenspaces") {
    MonomialAction a = MonomialAction::antipodal();
    EquivariantSeries s = equivariant_jet_series(a, 4);
    Subgroup whole = Subgroup::whole(a.group());
    Character triv = Character::trivial(whole);
    Character sign(whole, {0, 1});

    EquivariantSeries expected(a.group(), 1, {4});
    for (int k = 0; k <= 4; ++k)
        expected.add_term({k}, k % 2 == 0 ? triv : sign, k + 1);
    CHECK(s == expected);
}

TEST_CASE("swap eigenspaces") {
    MonomialAction a = MonomialAction::swap_xy();
    EquivariantSeries s = equivariant_jet_series(a, 3);
    Subgroup whole = Subgroup::whole(a.group());
    Character triv = Character::trivial(whole);
    Character sign(whole, {0, 1});

    EquivariantSeries expected(a.group(), 1, {3});
    expected.add_term({0}, triv, 1);
    expected.add_term({1}, triv, 1); // x + y
    expected.add_term({1}, sign, 1); // x - y
    expected.add_term({2}, triv, 2);
    expected.add_term({2}, sign, 1);
    expected.add_term({3}, triv, 2);
    expected.add_term({3}, sign, 2);
    CHECK(s == expected);
}

TEST_CASE("eigenspace dimensions sum to the jet dimension") {
    for (const MonomialAction& a : {MonomialAction::antipodal(), MonomialAction::swap_xy()}) {
        EquivariantSeries s = equivariant_jet_series(a, 8);
        MultiIndexSeries totals(1, {8});
        for (const auto& [index, cell] : s.coefficients())
            for (const auto& [chi, dim] : cell)
                totals.add_term(index, dim);
        CHECK(totals == jet_dimension_series(8));
    }
}

TEST_CASE("an order-4 signed swap splits into quarter turns") {
    // (x,y) -> (y,-x) generates a cyclic group of order 4; on the
    // 2-cell {x, y} its eigenvalues are the primitive fourth roots.
    GroupPtr z4 = make_named_group(Group::Kind::cyclic, 4);
    std::vector<std::array<int, 4>> mats = {
        {{1, 0, 0, 1}}, {{0, 1, -1, 0}}, {{-1, 0, 0, -1}}, {{0, -1, 1, 0}}};
    MonomialAction a(z4, mats);
    EquivariantSeries s = equivariant_jet_series(a, 2);

    Subgroup whole = Subgroup::whole(z4);
    EquivariantSeries expected(z4, 1, {2});
    expected.add_term({0}, Character::trivial(whole), 1);
    expected.add_term({1}, Character(whole, {0, 1, 2, 3}), 1);
    expected.add_term({1}, Character(whole, {0, 3, 2, 1}), 1);
    expected.add_term({2}, Character(whole, {0, 2, 0, 2}), 2); // x*y and x^2-y^2
    expected.add_term({2}, Character(whole, {0, 0, 0, 0}), 1); // x^2+y^2
    CHECK(s == expected);
}

TEST_CASE("non-abelian or inconsistent actions are rejected") {
    GroupPtr s3 = make_named_group(Group::Kind::dihedral, 3);
    std::vector<std::array<int, 4>> mats(6, {1, 0, 0, 1});
    CHECK_THROWS_AS(MonomialAction(s3, mats), non_abelian_action);

    GroupPtr z2 = make_named_group(Group::Kind::cyclic, 2);
    // An order-4 rotation assigned to an order-2 element is not a
    // homomorphism.
    CHECK_THROWS_AS(MonomialAction(z2, {{{1, 0, 0, 1}}, {{0, 1, -1, 0}}}), non_abelian_action);
    CHECK_NOTHROW(MonomialAction(z2, {{{1, 0, 0, 1}}, {{-1, 0, 0, 1}}}));
    CHECK_THROWS_AS(MonomialAction(z2, {{{1, 0, 0, 1}}, {{2, 0, 0, 1}}}), non_abelian_action);
}

TEST_CASE("semigroup series") {
    MultiIndexSeries all = semigroup_series({1}, 3);
    for (int k = 0; k <= 3; ++k)
        CHECK(all.coefficient({k}) == 1);

    MultiIndexSeries cusp = semigroup_series({2, 3}, 6);
    CHECK(cusp.coefficient({0}) == 1);
    CHECK(cusp.coefficient({1}) == 0);
    for (int k = 2; k <= 6; ++k)
        CHECK(cusp.coefficient({k}) == 1);

    MultiIndexSeries even = semigroup_series({2}, 5);
    CHECK(even.coefficient({0}) == 1);
    CHECK(even.coefficient({2}) == 1);
    CHECK(even.coefficient({4}) == 1);
    CHECK(even.coefficient({1}) == 0);
    CHECK(even.coefficient({3}) == 0);
    CHECK(even.coefficient({5}) == 0);

    CHECK_THROWS_AS(semigroup_series({}, 3), error);
    CHECK_THROWS_AS(semigroup_series({0}, 3), error);
}
