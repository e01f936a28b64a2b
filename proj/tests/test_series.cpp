#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grsets/oracle.hpp"
#include "grsets/selftest.hpp"
#include "grsets/series.hpp"

using namespace grsets;

namespace {

MultiIndexSeries monomial_series(int r, const Bound& bound,
                                 std::initializer_list<std::pair<std::vector<int>, int>> terms) {
    MultiIndexSeries s(r, bound);
    for (const auto& [index, c] : terms)
        s.add_term(index, c);
    return s;
}

} // namespace

TEST_CASE("projection pi on generators") {
    GroupPtr z2 = make_named_group(Group::Kind::cyclic, 2);
    Context ctx{z2, 1, {4}};
    Subgroup triv = Subgroup::trivial(z2);
    Subgroup whole = Subgroup::whole(z2);

    CHECK(project_pi(RingElement::one(ctx)) ==
          monomial_series(1, {4}, {{{0}, 1}}));

    RingElement t1 = RingElement::from_orbit(
        Orbit::make(z2, triv, Character::trivial(triv), {{0, {0}}, {1, {1}}}, 1), ctx);
    CHECK(project_pi(t1) == monomial_series(1, {4}, {{{0}, 1}, {{1}, 1}}));

    // (1 - t3*t4)^(-2) truncated at 4: coefficients k+1.
    RingElement t3t4 = RingElement::from_orbit(
        Orbit::make(z2, whole, Character(whole, {0, 1}), {{0, {1}}}, 1), ctx);
    MultiIndexSeries s = project_pi(geometric_inverse_power(t3t4, 2));
    CHECK(s == oracle::jet_dimension_series(4));
    CHECK(s.to_string() == "1 + 2*t1 + 3*t1^2 + 4*t1^3 + 5*t1^4");
}

TEST_CASE("projection pi-prime keeps only fixed orbits") {
    GroupPtr z2 = make_named_group(Group::Kind::cyclic, 2);
    Context ctx{z2, 1, {4}};
    Subgroup triv = Subgroup::trivial(z2);
    Subgroup whole = Subgroup::whole(z2);
    Character sign(whole, {0, 1});

    RingElement t4 =
        RingElement::from_orbit(Orbit::make(z2, whole, sign, {{0, {0}}}, 1), ctx);
    EquivariantSeries s4 = project_pi_prime(t4);
    EquivariantSeries expected(z2, 1, {4});
    expected.add_term({0}, sign, 1);
    CHECK(s4 == expected);

    RingElement t1 = RingElement::from_orbit(
        Orbit::make(z2, triv, Character::trivial(triv), {{0, {0}}, {1, {1}}}, 1), ctx);
    CHECK(project_pi_prime(t1) == EquivariantSeries(z2, 1, {4}));

    RingElement t3t4 =
        RingElement::from_orbit(Orbit::make(z2, whole, sign, {{0, {1}}}, 1), ctx);
    EquivariantSeries s = project_pi_prime(geometric_inverse_power(t3t4, 2));
    EquivariantSeries jets(z2, 1, {4});
    Character triv_chi = Character::trivial(whole);
    for (int k = 0; k <= 4; ++k)
        jets.add_term({k}, k % 2 == 0 ? triv_chi : sign, k + 1);
    CHECK(s == jets);
}

TEST_CASE("series arithmetic") {
    MultiIndexSeries one_plus_t = monomial_series(1, {5}, {{{0}, 1}, {{1}, 1}});
    MultiIndexSeries one_minus_t = monomial_series(1, {5}, {{{0}, 1}, {{1}, -1}});
    CHECK(one_plus_t.mul(one_minus_t) == monomial_series(1, {5}, {{{0}, 1}, {{2}, -1}}));
    CHECK(one_plus_t.add(one_minus_t) == monomial_series(1, {5}, {{{0}, 2}}));
    CHECK_THROWS_AS(one_plus_t.add(monomial_series(1, {6}, {})), context_mismatch);
}

TEST_CASE("pi is a ring homomorphism on random elements") {
    std::mt19937_64 rng(4242);
    for (const auto& g : {make_named_group(Group::Kind::cyclic, 4),
                          make_named_group(Group::Kind::dihedral, 3)}) {
        Context ctx{g, 2, {4, 4}};
        for (int iter = 0; iter < 30; ++iter) {
            RingElement a = RingElement::from_orbit(
                selftest::realize(selftest::random_raw_orbit(rng, g, 2, 2), 2), ctx);
            RingElement b = RingElement::from_orbit(
                selftest::realize(selftest::random_raw_orbit(rng, g, 2, 2), 2), ctx);
            CHECK(project_pi(a.mul(b)) == project_pi(a).mul(project_pi(b)));
            CHECK(project_pi(a.add(b)) == project_pi(a).add(project_pi(b)));
        }
    }
}

TEST_CASE("pi-prime is a ring homomorphism") {
    std::mt19937_64 rng(999);
    GroupPtr g = make_named_group(Group::Kind::cyclic, 4);
    Context ctx{g, 1, {4}};
    for (int iter = 0; iter < 30; ++iter) {
        RingElement a = RingElement::from_orbit(
            selftest::realize(selftest::random_raw_orbit(rng, g, 1, 2), 1), ctx);
        RingElement b = RingElement::from_orbit(
            selftest::realize(selftest::random_raw_orbit(rng, g, 1, 2), 1), ctx);
        CHECK(project_pi_prime(a.mul(b)) == project_pi_prime(a).mul(project_pi_prime(b)));
        CHECK(project_pi_prime(a.add(b)) == project_pi_prime(a).add(project_pi_prime(b)));
    }
}

TEST_CASE("for the trivial group pi and pi-prime carry the same numbers") {
    std::mt19937_64 rng(31337);
    GroupPtr triv = make_named_group(Group::Kind::cyclic, 1);
    Context ctx{triv, 2, {3, 3}};
    Subgroup whole = Subgroup::whole(triv);
    Character chi = Character::trivial(whole);
    for (int iter = 0; iter < 20; ++iter) {
        RingElement a = RingElement::zero(ctx);
        for (int t = 0; t < 3; ++t) {
            Weight w{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
            a = a.add(RingElement::from_orbit(Orbit::make(triv, whole, chi, {{0, w}}, 2), ctx)
                          .scaled(static_cast<int>(rng() % 5) - 2));
        }
        MultiIndexSeries pi = project_pi(a);
        EquivariantSeries pip = project_pi_prime(a);
        EquivariantSeries expected(triv, 2, {3, 3});
        for (const auto& [index, c] : pi.coefficients())
            expected.add_term(index, chi, c);
        CHECK(pip == expected);
    }
}

TEST_CASE("rendering") {
    MultiIndexSeries s = monomial_series(2, {3, 3}, {{{0, 0}, 1}, {{1, 0}, -4}, {{1, 2}, 1}});
    CHECK(s.to_string() == "1 - 4*t1 + t1*t2^2");
    CHECK(MultiIndexSeries(1, {3}).to_string() == "0");

    GroupPtr z2 = make_named_group(Group::Kind::cyclic, 2);
    EquivariantSeries e(z2, 1, {3});
    Subgroup whole = Subgroup::whole(z2);
    e.add_term({1}, Character(whole, {0, 1}), 2);
    CHECK(e.to_string() == "(2*chi{0:0,1:1}/2)*t1");
}
