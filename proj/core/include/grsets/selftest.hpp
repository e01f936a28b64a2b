#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "grsets/oracle.hpp"
#include "grsets/resolution.hpp"
#include "grsets/series.hpp"

namespace grsets::selftest {

/**
 * Built-in verification suite. Each check implements one acceptance
 * criterion (or a named slice of one) against independent oracles;
 * the CLI selftest command and the acceptance test binary both run
 * these. Randomized checks use fixed seeds.
 */
struct CheckResult {
    std::string name;
    int criterion = 0;
    bool passed = false;
    std::string detail;
};

/// Runs every check whose name contains `filter` (all when empty)
/// against the given spec library.
std::vector<CheckResult> run_checks(const std::vector<ResolutionSpec>& specs,
                                    std::string_view filter = {});

/// Same, against the built-in specs.
std::vector<CheckResult> run_checks(std::string_view filter = {});

/// Non-canonical orbit presentation, as a constructor would receive it.
struct RawOrbit {
    Subgroup stabilizer;
    Character character;
    std::vector<std::pair<Elem, Weight>> points;
};

/// Random presentation over a random subgroup, character and weights.
RawOrbit random_raw_orbit(std::mt19937_64& rng, const GroupPtr& group, int r, int max_weight);

/// The same abstract orbit presented through the equivariant bijection
/// xH -> x g^-1 (gHg^-1), with shuffled point order and representatives.
RawOrbit transported(std::mt19937_64& rng, const RawOrbit& raw, Elem g);

Orbit realize(const RawOrbit& raw, int r);

/// Exhaustive search for an equivariant bijection preserving weights
/// and characters. Independent of the canonicalization code path.
bool brute_force_isomorphic(const RawOrbit& a, const RawOrbit& b, int r);

} // namespace grsets::selftest
