#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grsets/json_io.hpp"
#include "grsets/selftest.hpp"

using namespace grsets;
using nlohmann::json;

TEST_CASE("group descriptors") {
    GroupPtr a = io::parse_group(json::parse(R"({"cayley": [[0,1],[1,0]]})"));
    CHECK(a->order() == 2);

    GroupPtr b = io::parse_group(json::parse(R"({"named": {"kind": "cyclic", "m": 2}})"));
    CHECK(*a == *b);

    GroupPtr d = io::parse_group(json::parse(R"({"named": {"kind": "dihedral", "m": 3}})"));
    CHECK(d->order() == 6);

    // Identity detection for tables where index 0 is not the identity.
    GroupPtr shifted = io::parse_group(json::parse(R"({"cayley": [[1,0],[0,1]]})"));
    CHECK(shifted->identity() == 1);

    CHECK_THROWS_AS(io::parse_group(json::parse(R"({})")), parse_error);
    CHECK_THROWS_AS(io::parse_group(json::parse(R"({"cayley": "x"})")), parse_error);
    CHECK_THROWS_AS(io::parse_group(json::parse(R"({"named": {"kind": "quaternion", "m": 2}})")),
                    unsupported_kind);
    CHECK_THROWS_AS(io::parse_group(json::parse(R"({"cayley": [[0,0],[1,1]]})")), not_a_group);
}

TEST_CASE("orbit descriptors round trip") {
    GroupPtr z2 = io::parse_group(json::parse(R"({"named": {"kind": "cyclic", "m": 2}})"));
    json desc = json::parse(R"({
        "stabilizer": [0],
        "character": {"0": 0},
        "points": [{"rep": 0, "weight": [0]}, {"rep": 1, "weight": [1]}]
    })");
    Orbit o = io::parse_orbit(desc, z2, 1);
    CHECK(o.size() == 2);
    Orbit back = io::parse_orbit(io::orbit_to_json(o), z2, 1);
    CHECK(back == o);

    CHECK_THROWS_AS(
        io::parse_orbit(json::parse(R"({"stabilizer": [0], "character": {"0": 0}})"), z2, 1),
        parse_error);
    CHECK_THROWS_AS(io::parse_orbit(json::parse(R"({
        "stabilizer": [0], "character": {"0": 0},
        "points": [{"rep": 0, "weight": [0]}]
    })"),
                                    z2, 1),
                    bad_transversal);
    CHECK_THROWS_AS(io::parse_orbit(json::parse(R"({
        "stabilizer": [0,1], "character": {"0": 0, "1": 1},
        "points": [{"rep": 0, "weight": [-2]}]
    })"),
                                    z2, 1),
                    negative_weight);
}

TEST_CASE("random orbits survive serialization") {
    std::mt19937_64 rng(808);
    for (const auto& g : {make_named_group(Group::Kind::cyclic, 6),
                          make_named_group(Group::Kind::dihedral, 3)}) {
        for (int iter = 0; iter < 40; ++iter) {
            Orbit o = selftest::realize(selftest::random_raw_orbit(rng, g, 2, 3), 2);
            CHECK(io::parse_orbit(io::orbit_to_json(o), g, 2) == o);
        }
    }
}

TEST_CASE("ring element json is byte stable") {
    GroupPtr z2 = make_named_group(Group::Kind::cyclic, 2);
    Context ctx{z2, 1, {6}};
    Subgroup triv = Subgroup::trivial(z2);
    Subgroup whole = Subgroup::whole(z2);
    RingElement e =
        RingElement::from_orbit(
            Orbit::make(z2, triv, Character::trivial(triv), {{0, {0}}, {1, {1}}}, 1), ctx)
            .scaled(-3)
            .add(RingElement::from_orbit(Orbit::make(z2, whole, Character(whole, {0, 1}), {{0, {2}}}, 1),
                                         ctx));
    const std::string once = io::ring_element_to_json(e).dump(2);
    RingElement parsed = io::parse_ring_element(json::parse(once));
    CHECK(parsed.equals(e));
    CHECK(io::ring_element_to_json(parsed).dump(2) == once);
}

TEST_CASE("huge coefficients serialize as strings") {
    GroupPtr triv = make_named_group(Group::Kind::cyclic, 1);
    Context ctx{triv, 1, {1}};
    Int big("123456789012345678901234567890");
    RingElement e = RingElement::one(ctx).scaled(big);
    json j = io::ring_element_to_json(e);
    CHECK(j["terms"][0]["coeff"].is_string());
    CHECK(io::parse_ring_element(j).equals(e));
}

TEST_CASE("spec files round trip through poincare") {
    for (const ResolutionSpec& spec : builtin_specs()) {
        json j = io::spec_to_json(spec);
        ResolutionSpec back = io::parse_spec(j);
        CHECK(poincare_series(back).equals(poincare_series(spec)));
        CHECK(io::spec_to_json(back).dump() == j.dump());
    }
    CHECK_THROWS_AS(io::parse_spec(json::parse(R"({"r": 1})")), parse_error);
    CHECK_THROWS_AS(io::parse_spec(json::parse(R"({
        "group": {"named": {"kind": "cyclic", "m": 1}},
        "r": 1, "bound": [4], "kind": "projective", "strata": []
    })")),
                    parse_error);
}

TEST_CASE("expression evaluation") {
    const char* t4_squared = R"({
        "group": {"named": {"kind": "cyclic", "m": 2}},
        "r": 1, "bound": [6],
        "expr": {"op": "mul", "args": [
            {"op": "orbit", "orbit": {"stabilizer": [0,1], "character": {"0": 0, "1": 1},
                                       "points": [{"rep": 0, "weight": [0]}]}},
            {"op": "orbit", "orbit": {"stabilizer": [0,1], "character": {"0": 0, "1": 1},
                                       "points": [{"rep": 0, "weight": [0]}]}}
        ]}
    })";
    RingElement e = io::eval_expression(json::parse(t4_squared));
    CHECK(io::render_ring_element(e) == "1");

    const char* a15 = R"({
        "group": {"named": {"kind": "cyclic", "m": 2}},
        "r": 1, "bound": [6],
        "expr": {"op": "sub", "args": [
            {"op": "add", "args": [
                {"op": "mul", "args": [
                    {"op": "pow", "exp": 4,
                     "base": {"op": "orbit", "orbit": {"stabilizer": [0], "character": {"0": 0},
                              "points": [{"rep": 0, "weight": [0]}, {"rep": 1, "weight": [1]}]}}},
                    {"op": "orbit", "orbit": {"stabilizer": [0,1], "character": {"0": 0, "1": 0},
                              "points": [{"rep": 0, "weight": [1]}]}}
                ]},
                {"op": "mul", "args": [
                    {"op": "orbit", "orbit": {"stabilizer": [0], "character": {"0": 0},
                              "points": [{"rep": 0, "weight": [0]}, {"rep": 1, "weight": [0]}]}},
                    {"op": "pow", "exp": 3,
                     "base": {"op": "orbit", "orbit": {"stabilizer": [0,1], "character": {"0": 0, "1": 0},
                              "points": [{"rep": 0, "weight": [1]}]}}}
                ]}
            ]},
            {"op": "mul", "args": [
                {"op": "int", "value": 4},
                {"op": "pow", "exp": 2,
                 "base": {"op": "orbit", "orbit": {"stabilizer": [0], "character": {"0": 0},
                          "points": [{"rep": 0, "weight": [0]}, {"rep": 1, "weight": [1]}]}}},
                {"op": "pow", "exp": 2,
                 "base": {"op": "orbit", "orbit": {"stabilizer": [0,1], "character": {"0": 0, "1": 0},
                          "points": [{"rep": 0, "weight": [1]}]}}}
            ]}
        ]}
    })";
    RingElement a = io::eval_expression(json::parse(a15));
    CHECK(io::render_ring_element(a) == "{stab=[0]; chi=[0]; pts=[0:(1), 1:(5)]}");

    const char* geom = R"({
        "group": {"named": {"kind": "cyclic", "m": 2}},
        "r": 1, "bound": [2],
        "expr": {"op": "geom", "euler": 2,
                 "arg": {"op": "orbit", "orbit": {"stabilizer": [0,1], "character": {"0": 0, "1": 1},
                         "points": [{"rep": 0, "weight": [1]}]}}}
    })";
    RingElement ge = io::eval_expression(json::parse(geom));
    CHECK(io::render_ring_element(ge) ==
          "1 + 2*{stab=[0,1]; chi=[0,1]; pts=[0:(1)]} + 3*{stab=[0,1]; chi=[0,0]; pts=[0:(2)]}");

    CHECK_THROWS_AS(io::eval_expression(json::parse(R"({
        "group": {"named": {"kind": "cyclic", "m": 1}}, "r": 1, "bound": [2],
        "expr": {"op": "frobenius"}
    })")),
                    parse_error);
}

TEST_CASE("renderings") {
    GroupPtr z2 = make_named_group(Group::Kind::cyclic, 2);
    Context ctx{z2, 1, {4}};
    CHECK(io::render_ring_element(RingElement::zero(ctx)) == "0");
    CHECK(io::render_ring_element(RingElement::one(ctx)) == "1");
    CHECK(io::render_ring_element(RingElement::one(ctx).scaled(-2)) == "-2");
}
