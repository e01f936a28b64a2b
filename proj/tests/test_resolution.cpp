#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "grsets/oracle.hpp"
#include "grsets/resolution.hpp"
#include "grsets/selftest.hpp"
#include "grsets/series.hpp"

using namespace grsets;

namespace {

Orbit trivial_point(const GroupPtr& g, int w) {
    Subgroup whole = Subgroup::whole(g);
    return Orbit::make(g, whole, Character::trivial(whole), {{g->identity(), {w}}}, 1);
}

} // namespace

TEST_CASE("spec validation") {
    GroupPtr triv = make_named_group(Group::Kind::cyclic, 1);
    ResolutionSpec ok{"ok", triv, 1, {4}, FiltrationKind::divisorial,
                      {{"E", 2, trivial_point(triv, 1)}}};
    CHECK_NOTHROW(validate_spec(ok));

    ResolutionSpec zero_weight{"zw", triv, 1, {4}, FiltrationKind::divisorial,
                               {{"E", 1, trivial_point(triv, 0)}}};
    CHECK_THROWS_AS(validate_spec(zero_weight), zero_weight_with_positive_euler);

    // Negative Euler characteristic keeps the factor polynomial.
    ResolutionSpec neg{"neg", triv, 1, {4}, FiltrationKind::divisorial,
                       {{"E", -1, trivial_point(triv, 0)}}};
    CHECK_NOTHROW(validate_spec(neg));

    ResolutionSpec dup{"dup", triv, 1, {4}, FiltrationKind::divisorial,
                       {{"E", 1, trivial_point(triv, 1)}, {"E", 1, trivial_point(triv, 2)}}};
    CHECK_THROWS_AS(validate_spec(dup), spec_error);

    ResolutionSpec bad_bound{"bb", triv, 1, {4, 4}, FiltrationKind::divisorial, {}};
    CHECK_THROWS_AS(validate_spec(bad_bound), spec_error);
}

TEST_CASE("first blow-up of the plane") {
    const ResolutionSpec& spec = builtin_spec("trivial-multiplicity");
    MultiIndexSeries s = project_pi(poincare_series(spec, Bound{8}));
    CHECK(s == oracle::jet_dimension_series(8));
}

TEST_CASE("antipodal involution") {
    const ResolutionSpec& spec = builtin_spec("z2-antipodal");
    RingElement p = poincare_series(spec, Bound{8});
    CHECK(project_pi(p) == oracle::jet_dimension_series(8));
    CHECK(project_pi_prime(p) ==
          oracle::equivariant_jet_series(oracle::MonomialAction::antipodal(), 8));
}

TEST_CASE("swap involution") {
    const ResolutionSpec& spec = builtin_spec("z2-swap");
    RingElement p = poincare_series(spec, Bound{8});
    CHECK(project_pi(p) == oracle::jet_dimension_series(8));
    CHECK(project_pi_prime(p) ==
          oracle::equivariant_jet_series(oracle::MonomialAction::swap_xy(), 8));
}

TEST_CASE("curve valuations against semigroups") {
    CHECK(project_pi(poincare_series(builtin_spec("smooth-branch"), Bound{8})) ==
          oracle::semigroup_series({1}, 8));
    CHECK(project_pi(poincare_series(builtin_spec("cusp"), Bound{8})) ==
          oracle::semigroup_series({2, 3}, 8));
}

TEST_CASE("stratum bookkeeping does not matter") {
    for (const ResolutionSpec& spec : builtin_specs()) {
        RingElement base = poincare_series(spec);

        ResolutionSpec reversed = spec;
        std::reverse(reversed.strata.begin(), reversed.strata.end());
        CHECK(poincare_series(reversed).equals(base));

        ResolutionSpec padded = spec;
        padded.strata.push_back({"padding", 0, spec.strata.front().curvette});
        CHECK(poincare_series(padded).equals(base));
    }
}

TEST_CASE("built-in library") {
    CHECK(builtin_specs().size() == 5);
    CHECK_NOTHROW(builtin_spec("cusp"));
    CHECK_THROWS_AS(builtin_spec("no-such-spec"), spec_error);
}

TEST_CASE("selftest reports a corrupted spec library") {
    std::vector<ResolutionSpec> corrupted = builtin_specs();
    for (auto& spec : corrupted)
        if (spec.name == "cusp")
            spec.strata[0].euler = 2;
    auto results = grsets::selftest::run_checks(corrupted, "pi-consistency/cusp");
    REQUIRE(results.size() == 1);
    CHECK_FALSE(results[0].passed);

    auto healthy = grsets::selftest::run_checks(builtin_specs(), "pi-consistency/cusp");
    REQUIRE(healthy.size() == 1);
    CHECK(healthy[0].passed);
}

TEST_CASE("zero weight with nonpositive euler evaluates") {
    // (1 - t4)^1 with t4 of weight zero stays a polynomial.
    GroupPtr z2 = make_named_group(Group::Kind::cyclic, 2);
    Subgroup whole = Subgroup::whole(z2);
    Orbit t4 = Orbit::make(z2, whole, Character(whole, {0, 1}), {{0, {0}}}, 1);
    ResolutionSpec spec{"poly", z2, 1, {4}, FiltrationKind::divisorial, {{"E", -1, t4}}};
    RingElement p = poincare_series(spec);
    Context ctx = spec.context();
    CHECK(p.equals(RingElement::one(ctx).sub(RingElement::from_orbit(t4, ctx))));
}
