#include "grsets/resolution.hpp"

#include <set>

namespace grsets {

void validate_spec(const ResolutionSpec& spec) {
    if (!spec.group)
        throw spec_error("spec requires a group");
    if (spec.r < 1)
        throw spec_error("spec requires at least one valuation");
    if (static_cast<int>(spec.bound.size()) != spec.r)
        throw spec_error("bound arity differs from the valuation count");
    for (int v : spec.bound)
        if (v < 0)
            throw spec_error("bound entries must be nonnegative");
    std::set<std::string> names;
    for (const Stratum& s : spec.strata) {
        if (!names.insert(s.name).second)
            throw spec_error("duplicate stratum name: " + s.name);
        if (!(*s.curvette.group() == *spec.group))
            throw spec_error("stratum group differs from the spec group: " + s.name);
        if (s.curvette.r() != spec.r)
            throw spec_error("stratum arity differs from the spec: " + s.name);
        if (s.euler > 0 && !s.curvette.positively_weighted())
            throw zero_weight_with_positive_euler(
                "stratum with positive Euler characteristic has a zero-weight curvette point: " +
                s.name);
    }
}

RingElement poincare_series(const ResolutionSpec& spec, const Bound& bound) {
    ResolutionSpec at_bound = spec;
    at_bound.bound = bound;
    validate_spec(at_bound);
    Context ctx = at_bound.context();
    RingElement acc = RingElement::one(ctx);
    for (const Stratum& s : at_bound.strata) {
        RingElement factor =
            geometric_inverse_power(RingElement::from_orbit(s.curvette, ctx), s.euler);
        acc = acc.mul(factor);
    }
    return acc;
}

RingElement poincare_series(const ResolutionSpec& spec) {
    return poincare_series(spec, spec.bound);
}

namespace {

// One-point orbit of the trivial group with the given weight.
Orbit point_orbit(const GroupPtr& g, int w) {
    Subgroup whole = Subgroup::whole(g);
    return Orbit::make(g, whole, Character::trivial(whole), {{g->identity(), {w}}}, 1);
}

std::vector<ResolutionSpec> make_builtins() {
    std::vector<ResolutionSpec> specs;
    const Bound default_bound{8};

    // Multiplicity filtration on the plane: one blow-up, the whole
    // exceptional line is one stratum of Euler characteristic 2, and a
    // transversal line has multiplicity 1.
    {
        GroupPtr triv = make_named_group(Group::Kind::cyclic, 1);
        ResolutionSpec s;
        s.name = "trivial-multiplicity";
        s.group = triv;
        s.r = 1;
        s.bound = default_bound;
        s.kind = FiltrationKind::divisorial;
        s.strata.push_back({"E1", 2, point_orbit(triv, 1)});
        specs.push_back(std::move(s));
    }

    // Order of vanishing on the smooth branch x = 0: the exceptional
    // line minus the strict transform point.
    {
        GroupPtr triv = make_named_group(Group::Kind::cyclic, 1);
        ResolutionSpec s;
        s.name = "smooth-branch";
        s.group = triv;
        s.r = 1;
        s.bound = default_bound;
        s.kind = FiltrationKind::curve;
        s.strata.push_back({"E1", 1, point_orbit(triv, 1)});
        specs.push_back(std::move(s));
    }

    // Order of vanishing on the cusp y^2 = x^3, resolved by three
    // blow-ups. Component multiplicities along the branch are 2, 3, 6;
    // the last component meets the other two and the strict transform.
    {
        GroupPtr triv = make_named_group(Group::Kind::cyclic, 1);
        ResolutionSpec s;
        s.name = "cusp";
        s.group = triv;
        s.r = 1;
        s.bound = default_bound;
        s.kind = FiltrationKind::curve;
        s.strata.push_back({"E1", 1, point_orbit(triv, 2)});
        s.strata.push_back({"E2", 1, point_orbit(triv, 3)});
        s.strata.push_back({"E3", -1, point_orbit(triv, 6)});
        specs.push_back(std::move(s));
    }

    // Multiplicity under the antipodal involution (x,y) -> (-x,-y):
    // the involution fixes the exceptional line pointwise, so there is
    // one stratum with Euler characteristic 2. A transversal line
    // h = y - s*x satisfies sigma*h = -h, hence the sign character.
    {
        GroupPtr z2 = make_named_group(Group::Kind::cyclic, 2);
        Subgroup whole = Subgroup::whole(z2);
        Character sign(whole, {0, 1});
        Orbit fixed_sign = Orbit::make(z2, whole, sign, {{z2->identity(), {1}}}, 1);
        ResolutionSpec s;
        s.name = "z2-antipodal";
        s.group = z2;
        s.r = 1;
        s.bound = default_bound;
        s.kind = FiltrationKind::divisorial;
        s.strata.push_back({"E1", 2, fixed_sign});
        specs.push_back(std::move(s));
    }

    // Multiplicity under the coordinate swap (x,y) -> (y,x): the
    // involution on the exceptional line has the two fixed directions
    // x = y and x = -y (curvettes x-y and x+y, characters sign and
    // trivial), plus a free part of Euler characteristic zero.
    {
        GroupPtr z2 = make_named_group(Group::Kind::cyclic, 2);
        Subgroup whole = Subgroup::whole(z2);
        Subgroup triv_sub = Subgroup::trivial(z2);
        Character sign(whole, {0, 1});
        Orbit fixed_sign = Orbit::make(z2, whole, sign, {{z2->identity(), {1}}}, 1);
        Orbit fixed_triv =
            Orbit::make(z2, whole, Character::trivial(whole), {{z2->identity(), {1}}}, 1);
        Orbit free_pair = Orbit::make(z2, triv_sub, Character::trivial(triv_sub),
                                      {{0, {1}}, {1, {1}}}, 1);
        ResolutionSpec s;
        s.name = "z2-swap";
        s.group = z2;
        s.r = 1;
        s.bound = default_bound;
        s.kind = FiltrationKind::divisorial;
        s.strata.push_back({"fixed-diag", 1, fixed_sign});
        s.strata.push_back({"fixed-antidiag", 1, fixed_triv});
        s.strata.push_back({"free", 0, free_pair});
        specs.push_back(std::move(s));
    }

    for (const auto& s : specs)
        validate_spec(s);
    return specs;
}

} // namespace

const std::vector<ResolutionSpec>& builtin_specs() {
    static const std::vector<ResolutionSpec> specs = make_builtins();
    return specs;
}

const ResolutionSpec& builtin_spec(const std::string& name) {
    for (const ResolutionSpec& s : builtin_specs())
        if (s.name == name)
            return s;
    throw spec_error("unknown built-in spec: " + name);
}

} // namespace grsets
