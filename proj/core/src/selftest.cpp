#include "grsets/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace grsets::selftest {

namespace {

// Local coset bookkeeping for raw presentations; kept separate from
// the Orbit code path on purpose.
struct Cosets {
    std::vector<Elem> reps;
    std::vector<int> index_of;
};

Cosets cosets_of(const Subgroup& h) {
    const Group& g = *h.group();
    Cosets c;
    c.index_of.assign(static_cast<size_t>(g.order()), -1);
    for (Elem x = 0; x < g.order(); ++x) {
        if (c.index_of[static_cast<size_t>(x)] >= 0)
            continue;
        const int idx = static_cast<int>(c.reps.size());
        c.reps.push_back(x);
        for (Elem hh : h.elements())
            c.index_of[static_cast<size_t>(g.mul(x, hh))] = idx;
    }
    return c;
}

std::vector<GroupPtr> group_pool() {
    std::vector<GroupPtr> pool;
    for (int m = 1; m <= 6; ++m)
        pool.push_back(make_named_group(Group::Kind::cyclic, m));
    pool.push_back(make_named_group(Group::Kind::dihedral, 2));
    pool.push_back(make_named_group(Group::Kind::dihedral, 3));
    return pool;
}

int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

RingElement random_element(std::mt19937_64& rng, const Context& ctx, int max_weight,
                           bool positive_weights = false) {
    RingElement acc = RingElement::zero(ctx);
    const int terms = rand_int(rng, 1, 3);
    for (int t = 0; t < terms; ++t) {
        RawOrbit raw = random_raw_orbit(rng, ctx.group, ctx.r, max_weight);
        if (positive_weights) {
            for (auto& [rep, w] : raw.points) {
                if (std::all_of(w.begin(), w.end(), [](int v) { return v == 0; }))
                    w[static_cast<size_t>(rand_int(rng, 0, ctx.r - 1))] = 1;
            }
        }
        int coeff = rand_int(rng, -3, 3);
        if (coeff == 0)
            coeff = 1;
        acc = acc.add(RingElement::from_orbit(realize(raw, ctx.r), ctx).scaled(coeff));
    }
    return acc;
}

// Independent truncated polynomial arithmetic for the trivial-group
// comparison; componentwise truncation at the bound.
using Poly = std::map<std::vector<int>, Int>;

Poly poly_trim(Poly p, const Bound& bound) {
    for (auto it = p.begin(); it != p.end();) {
        bool drop = it->second == 0;
        for (size_t i = 0; i < bound.size() && !drop; ++i)
            drop = it->first[i] > bound[i];
        it = drop ? p.erase(it) : ++it;
    }
    return p;
}

Poly poly_add(const Poly& a, const Poly& b, const Bound& bound) {
    Poly out = a;
    for (const auto& [m, c] : b)
        out[m] += c;
    return poly_trim(std::move(out), bound);
}

Poly poly_mul(const Poly& a, const Poly& b, const Bound& bound) {
    Poly out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            std::vector<int> m(ma.size());
            for (size_t i = 0; i < ma.size(); ++i)
                m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
        }
    }
    return poly_trim(std::move(out), bound);
}

Poly as_poly(const RingElement& e) {
    Poly p;
    for (const auto& [orbit, coeff] : e.terms())
        p[orbit.weight(0)] += coeff;
    return p;
}

struct Check {
    std::string name;
    int criterion;
    std::function<bool(std::string&)> run;
};

// ---- shared fixtures -------------------------------------------------

struct Z2Fixture {
    GroupPtr g = make_named_group(Group::Kind::cyclic, 2);
    Context ctx;
    RingElement t1, t2, t3, t4, unit;

    explicit Z2Fixture(int bound)
        : ctx{g, 1, {bound}},
          t1(RingElement::zero(ctx)),
          t2(RingElement::zero(ctx)),
          t3(RingElement::zero(ctx)),
          t4(RingElement::zero(ctx)),
          unit(RingElement::one(ctx)) {
        Subgroup triv = Subgroup::trivial(g);
        Subgroup whole = Subgroup::whole(g);
        Character chi_triv_sub = Character::trivial(triv);
        Character chi_triv = Character::trivial(whole);
        Character chi_sign(whole, {0, 1});
        t1 = RingElement::from_orbit(
            Orbit::make(g, triv, chi_triv_sub, {{0, {0}}, {1, {1}}}, 1), ctx);
        t2 = RingElement::from_orbit(
            Orbit::make(g, triv, chi_triv_sub, {{0, {0}}, {1, {0}}}, 1), ctx);
        t3 = RingElement::from_orbit(Orbit::make(g, whole, chi_triv, {{0, {1}}}, 1), ctx);
        t4 = RingElement::from_orbit(Orbit::make(g, whole, chi_sign, {{0, {0}}}, 1), ctx);
    }
};

const ResolutionSpec* find_spec(const std::vector<ResolutionSpec>& specs,
                                const std::string& name) {
    for (const auto& s : specs)
        if (s.name == name)
            return &s;
    return nullptr;
}

// ---- criterion implementations ---------------------------------------

bool check_z2_relations(std::string& detail) {
    Z2Fixture f(10);
    struct Relation {
        const char* text;
        RingElement lhs;
        RingElement rhs;
    };
    const std::vector<Relation> relations = {
        {"t4*t4 = 1", f.t4.mul(f.t4), f.unit},
        {"t2*t2 = 2*t2", f.t2.mul(f.t2), f.t2.add(f.t2)},
        {"t2*t4 = t2", f.t2.mul(f.t4), f.t2},
        {"t1*t4 = t1", f.t1.mul(f.t4), f.t1},
        {"t1*t2 = 2*t1", f.t1.mul(f.t2), f.t1.add(f.t1)},
    };
    for (const auto& rel : relations) {
        if (!rel.lhs.equals(rel.rhs)) {
            detail = std::string("failed relation ") + rel.text;
            return false;
        }
    }
    detail = "five relations hold at bound (10)";
    return true;
}

bool check_a15(std::string& detail) {
    Z2Fixture f(6);
    RingElement lhs = f.t1.pow(4).mul(f.t3)
                          .add(f.t2.mul(f.t3.pow(3)))
                          .sub(f.t1.pow(2).mul(f.t3.pow(2)).scaled(4));
    Subgroup triv = Subgroup::trivial(f.g);
    Orbit a15 = Orbit::make(f.g, triv, Character::trivial(triv), {{0, {1}}, {1, {5}}}, 1);
    RingElement rhs = RingElement::from_orbit(a15, f.ctx);
    if (!lhs.equals(rhs)) {
        detail = "t1^4*t3 + t2*t3^3 - 4*t1^2*t3^2 did not reduce to the {1,5} orbit";
        return false;
    }
    detail = "identity holds at bound (6)";
    return true;
}

bool check_trivial_ring_isomorphism(std::string& detail) {
    std::mt19937_64 rng(2024030101ULL);
    GroupPtr triv = make_named_group(Group::Kind::cyclic, 1);
    Context ctx{triv, 2, {4, 4}};
    Subgroup whole = Subgroup::whole(triv);
    Character chi = Character::trivial(whole);

    auto random_poly_element = [&](RingElement& elem, Poly& poly) {
        elem = RingElement::zero(ctx);
        poly.clear();
        const int terms = rand_int(rng, 1, 4);
        for (int t = 0; t < terms; ++t) {
            Weight w{rand_int(rng, 0, 4), rand_int(rng, 0, 4)};
            int c = rand_int(rng, -3, 3);
            if (c == 0)
                c = 2;
            Orbit mono = Orbit::make(triv, whole, chi, {{0, w}}, 2);
            elem = elem.add(RingElement::from_orbit(mono, ctx).scaled(c));
            poly[w] += c;
        }
        poly = poly_trim(std::move(poly), ctx.bound);
    };

    for (int iter = 0; iter < 200; ++iter) {
        RingElement a = RingElement::zero(ctx), b = RingElement::zero(ctx);
        Poly pa, pb;
        random_poly_element(a, pa);
        random_poly_element(b, pb);
        if (as_poly(a.mul(b)) != poly_mul(pa, pb, ctx.bound)) {
            detail = "product disagreed with polynomial arithmetic at iteration " +
                     std::to_string(iter);
            return false;
        }
        if (as_poly(a.add(b)) != poly_add(pa, pb, ctx.bound)) {
            detail = "sum disagreed with polynomial arithmetic at iteration " +
                     std::to_string(iter);
            return false;
        }
    }
    detail = "200 random products and sums match polynomial arithmetic";
    return true;
}

bool check_pi_consistency(const std::vector<ResolutionSpec>& specs, const std::string& name,
                          const MultiIndexSeries& expected, std::string& detail) {
    const ResolutionSpec* spec = find_spec(specs, name);
    if (!spec) {
        detail = "spec not found: " + name;
        return false;
    }
    MultiIndexSeries got = project_pi(poincare_series(*spec, expected.bound()));
    if (!got.equals(expected)) {
        detail = "pi(P) = " + got.to_string() + ", oracle = " + expected.to_string();
        return false;
    }
    detail = "pi(P) = " + expected.to_string();
    return true;
}

bool check_pi_prime_consistency(const std::vector<ResolutionSpec>& specs,
                                const std::string& name, const oracle::MonomialAction& action,
                                std::string& detail) {
    const ResolutionSpec* spec = find_spec(specs, name);
    if (!spec) {
        detail = "spec not found: " + name;
        return false;
    }
    EquivariantSeries expected = oracle::equivariant_jet_series(action, 8);
    EquivariantSeries got = project_pi_prime(poincare_series(*spec, Bound{8}));
    if (!got.equals(expected)) {
        detail = "pi'(P) = " + got.to_string() + ", oracle = " + expected.to_string();
        return false;
    }
    detail = "pi'(P) matches the equivariant jet decomposition up to degree 8";
    return true;
}

bool check_strata_permutation(const std::vector<ResolutionSpec>& specs, std::string& detail) {
    for (const auto& spec : specs) {
        RingElement base = poincare_series(spec);
        ResolutionSpec reversed = spec;
        std::reverse(reversed.strata.begin(), reversed.strata.end());
        if (!poincare_series(reversed).equals(base)) {
            detail = "reversing strata changed the series for " + spec.name;
            return false;
        }
        ResolutionSpec rotated = spec;
        if (rotated.strata.size() > 1)
            std::rotate(rotated.strata.begin(), rotated.strata.begin() + 1,
                        rotated.strata.end());
        if (!poincare_series(rotated).equals(base)) {
            detail = "rotating strata changed the series for " + spec.name;
            return false;
        }
    }
    detail = "stratum order is immaterial for every spec";
    return true;
}

bool check_strata_euler_zero(const std::vector<ResolutionSpec>& specs, std::string& detail) {
    for (const auto& spec : specs) {
        if (spec.strata.empty())
            continue;
        RingElement base = poincare_series(spec);
        ResolutionSpec padded = spec;
        padded.strata.push_back({"padding", 0, spec.strata.front().curvette});
        if (!poincare_series(padded).equals(base)) {
            detail = "a zero Euler characteristic stratum changed the series for " + spec.name;
            return false;
        }
    }
    detail = "zero Euler characteristic strata contribute the factor one";
    return true;
}

bool check_ring_axioms(std::string& detail) {
    std::mt19937_64 rng(77003917ULL);
    const auto pool = group_pool();
    for (int iter = 0; iter < 500; ++iter) {
        const GroupPtr& g = pool[static_cast<size_t>(rand_int(rng, 0, static_cast<int>(pool.size()) - 1))];
        const int r = rand_int(rng, 1, 2);
        Bound bound(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j)
            bound[static_cast<size_t>(j)] = rand_int(rng, 2, 4);
        Context ctx{g, r, bound};
        RingElement a = random_element(rng, ctx, 2);
        RingElement b = random_element(rng, ctx, 2);
        RingElement c = random_element(rng, ctx, 2);
        if (!a.mul(b).equals(b.mul(a))) {
            detail = "commutativity failed at iteration " + std::to_string(iter);
            return false;
        }
        if (!a.mul(b).mul(c).equals(a.mul(b.mul(c)))) {
            detail = "associativity failed at iteration " + std::to_string(iter);
            return false;
        }
        if (!a.mul(b.add(c)).equals(a.mul(b).add(a.mul(c)))) {
            detail = "distributivity failed at iteration " + std::to_string(iter);
            return false;
        }
        if (!a.mul(RingElement::one(ctx)).equals(a) ||
            !a.add(RingElement::zero(ctx)).equals(a)) {
            detail = "identity failed at iteration " + std::to_string(iter);
            return false;
        }
    }
    detail = "500 random triples satisfy the ring axioms";
    return true;
}

bool check_geometric_inverse(std::string& detail) {
    std::mt19937_64 rng(900721ULL);
    const auto pool = group_pool();
    for (int iter = 0; iter < 100; ++iter) {
        const GroupPtr& g = pool[static_cast<size_t>(rand_int(rng, 0, static_cast<int>(pool.size()) - 1))];
        const int r = rand_int(rng, 1, 2);
        Bound bound(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j)
            bound[static_cast<size_t>(j)] = rand_int(rng, 2, 4);
        Context ctx{g, r, bound};
        RingElement t = random_element(rng, ctx, 2, /*positive_weights=*/true);
        RingElement one_minus_t = RingElement::one(ctx).sub(t);
        for (long long chi : {1LL, 2LL}) {
            RingElement lhs = geometric_inverse_power(t, chi).mul(one_minus_t.pow(static_cast<int>(chi)));
            if (!lhs.equals(RingElement::one(ctx))) {
                detail = "(1-T)^chi * geom(T,chi) != 1 at iteration " + std::to_string(iter) +
                         " with chi=" + std::to_string(chi);
                return false;
            }
        }
    }
    detail = "geom(T,chi)*(1-T)^chi = 1 for chi in {1,2} on 100 random elements";
    return true;
}

bool check_canonical_iso_pairs(std::string& detail) {
    std::mt19937_64 rng(31415926ULL);
    const auto pool = group_pool();
    for (int iter = 0; iter < 200; ++iter) {
        const GroupPtr& g = pool[static_cast<size_t>(rand_int(rng, 0, static_cast<int>(pool.size()) - 1))];
        const int r = rand_int(rng, 1, 2);
        RawOrbit raw = random_raw_orbit(rng, g, r, 2);
        RawOrbit moved = transported(rng, raw, rand_int(rng, 0, g->order() - 1));
        if (!(realize(raw, r) == realize(moved, r))) {
            detail = "an equivariant bijection changed the canonical form at iteration " +
                     std::to_string(iter);
            return false;
        }
    }
    detail = "200 transported presentations canonicalize identically";
    return true;
}

bool check_canonical_non_iso_pairs(std::string& detail) {
    std::mt19937_64 rng(2718281828ULL);
    const auto pool = group_pool();
    int done = 0;
    while (done < 200) {
        const GroupPtr& g = pool[static_cast<size_t>(rand_int(rng, 0, static_cast<int>(pool.size()) - 1))];
        const int r = rand_int(rng, 1, 2);
        RawOrbit a = random_raw_orbit(rng, g, r, 2);
        RawOrbit b = random_raw_orbit(rng, g, r, 2);
        if (brute_force_isomorphic(a, b, r))
            continue;
        if (realize(a, r) == realize(b, r)) {
            detail = "non-isomorphic presentations share a canonical form (pair " +
                     std::to_string(done) + ")";
            return false;
        }
        ++done;
    }
    detail = "200 brute-force non-isomorphic pairs canonicalize differently";
    return true;
}

std::vector<Check> build_checks(const std::vector<ResolutionSpec>& specs) {
    std::vector<Check> checks;
    checks.push_back({"z2-relations", 1, [](std::string& d) { return check_z2_relations(d); }});
    checks.push_back({"z2-a15-identity", 2, [](std::string& d) { return check_a15(d); }});
    checks.push_back({"trivial-ring-isomorphism", 3,
                      [](std::string& d) { return check_trivial_ring_isomorphism(d); }});

    const std::vector<std::pair<std::string, std::vector<int>>> semigroups = {
        {"smooth-branch", {1}}, {"cusp", {2, 3}}};
    for (const char* name : {"trivial-multiplicity", "z2-antipodal", "z2-swap"}) {
        checks.push_back({std::string("pi-consistency/") + name, 4,
                          [&specs, name](std::string& d) {
                              return check_pi_consistency(specs, name,
                                                          oracle::jet_dimension_series(8), d);
                          }});
    }
    for (const auto& [name, gens] : semigroups) {
        checks.push_back({"pi-consistency/" + name, 4,
                          [&specs, name = name, gens = gens](std::string& d) {
                              return check_pi_consistency(specs, name,
                                                          oracle::semigroup_series(gens, 8), d);
                          }});
    }

    checks.push_back({"pi-prime-consistency/z2-antipodal", 5, [&specs](std::string& d) {
                          return check_pi_prime_consistency(specs, "z2-antipodal",
                                                            oracle::MonomialAction::antipodal(), d);
                      }});
    checks.push_back({"pi-prime-consistency/z2-swap", 5, [&specs](std::string& d) {
                          return check_pi_prime_consistency(specs, "z2-swap",
                                                            oracle::MonomialAction::swap_xy(), d);
                      }});

    checks.push_back({"strata-invariance/permutation", 6, [&specs](std::string& d) {
                          return check_strata_permutation(specs, d);
                      }});
    checks.push_back({"strata-invariance/euler-zero", 6, [&specs](std::string& d) {
                          return check_strata_euler_zero(specs, d);
                      }});

    checks.push_back({"ring-axioms", 7, [](std::string& d) { return check_ring_axioms(d); }});
    checks.push_back(
        {"geometric-inverse", 7, [](std::string& d) { return check_geometric_inverse(d); }});

    checks.push_back({"canonical-form/isomorphic-pairs", 8,
                      [](std::string& d) { return check_canonical_iso_pairs(d); }});
    checks.push_back({"canonical-form/non-isomorphic-pairs", 8,
                      [](std::string& d) { return check_canonical_non_iso_pairs(d); }});
    return checks;
}

} // namespace

RawOrbit random_raw_orbit(std::mt19937_64& rng, const GroupPtr& group, int r, int max_weight) {
    std::vector<Elem> gens;
    const int gen_count = rand_int(rng, 0, 2);
    for (int i = 0; i < gen_count; ++i)
        gens.push_back(rand_int(rng, 0, group->order() - 1));
    Subgroup stab = Subgroup::closure(group, gens);

    std::vector<Character> chars = one_dim_characters(stab);
    Character chi = chars[static_cast<size_t>(rand_int(rng, 0, static_cast<int>(chars.size()) - 1))];

    Cosets c = cosets_of(stab);
    std::vector<std::pair<Elem, Weight>> pts;
    for (Elem rep : c.reps) {
        Weight w(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j)
            w[static_cast<size_t>(j)] = rand_int(rng, 0, max_weight);
        pts.emplace_back(rep, std::move(w));
    }
    return RawOrbit{std::move(stab), std::move(chi), std::move(pts)};
}

RawOrbit transported(std::mt19937_64& rng, const RawOrbit& raw, Elem g) {
    const GroupPtr& group = raw.stabilizer.group();
    const Group& grp = *group;

    Cosets old_c = cosets_of(raw.stabilizer);
    std::vector<Weight> by_coset(old_c.reps.size());
    for (const auto& [rep, w] : raw.points)
        by_coset[static_cast<size_t>(old_c.index_of[static_cast<size_t>(rep)])] = w;

    Subgroup new_stab = conjugate_subgroup(g, raw.stabilizer);
    Character new_chi = conjugate_character(g, raw.character);

    // Point x(gHg^-1) corresponds to (x g)H; weights carry over.
    Cosets new_c = cosets_of(new_stab);
    std::vector<std::pair<Elem, Weight>> pts;
    for (Elem rep : new_c.reps) {
        // Present the coset by a random member.
        Elem member = rep;
        int hops = rand_int(rng, 0, new_stab.order() - 1);
        for (int i = 0; i < hops; ++i)
            member = grp.mul(member, new_stab.elements()[static_cast<size_t>(
                                          rand_int(rng, 0, new_stab.order() - 1))]);
        Elem back = grp.mul(rep, g);
        pts.emplace_back(member,
                         by_coset[static_cast<size_t>(old_c.index_of[static_cast<size_t>(back)])]);
    }
    std::shuffle(pts.begin(), pts.end(), rng);
    return RawOrbit{std::move(new_stab), std::move(new_chi), std::move(pts)};
}

Orbit realize(const RawOrbit& raw, int r) {
    return Orbit::make(raw.stabilizer.group(), raw.stabilizer, raw.character, raw.points, r);
}

bool brute_force_isomorphic(const RawOrbit& a, const RawOrbit& b, int r) {
    const GroupPtr& group = a.stabilizer.group();
    if (!(*group == *b.stabilizer.group()))
        return false;
    const Group& grp = *group;

    struct Side {
        Cosets cosets;
        std::vector<Weight> weights;
        std::vector<Character> chars;
    };
    auto build = [&](const RawOrbit& raw) {
        Side s{cosets_of(raw.stabilizer), {}, {}};
        s.weights.resize(s.cosets.reps.size());
        for (const auto& [rep, w] : raw.points)
            s.weights[static_cast<size_t>(s.cosets.index_of[static_cast<size_t>(rep)])] = w;
        for (Elem rep : s.cosets.reps)
            s.chars.push_back(conjugate_character(rep, raw.character));
        return s;
    };
    Side sa = build(a), sb = build(b);

    const size_t m = sa.cosets.reps.size();
    if (m != sb.cosets.reps.size())
        return false;
    (void)r;

    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (size_t i = 0; i < m && ok; ++i)
            ok = sa.weights[i] == sb.weights[static_cast<size_t>(perm[i])] &&
                 sa.chars[i] == sb.chars[static_cast<size_t>(perm[i])];
        for (Elem e = 0; e < grp.order() && ok; ++e) {
            for (size_t i = 0; i < m && ok; ++i) {
                const int ai = sa.cosets.index_of[static_cast<size_t>(
                    grp.mul(e, sa.cosets.reps[i]))];
                const int bi = sb.cosets.index_of[static_cast<size_t>(
                    grp.mul(e, sb.cosets.reps[static_cast<size_t>(perm[i])]))];
                ok = perm[static_cast<size_t>(ai)] == bi;
            }
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<CheckResult> run_checks(const std::vector<ResolutionSpec>& specs,
                                    std::string_view filter) {
    std::vector<CheckResult> results;
    for (const Check& check : build_checks(specs)) {
        if (!filter.empty() && check.name.find(filter) == std::string::npos)
            continue;
        CheckResult res;
        res.name = check.name;
        res.criterion = check.criterion;
        try {
            res.passed = check.run(res.detail);
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(res));
    }
    return results;
}

std::vector<CheckResult> run_checks(std::string_view filter) {
    return run_checks(builtin_specs(), filter);
}

} // namespace grsets::selftest
