#pragma once

#include <string>
#include <vector>

#include "grsets/ring.hpp"

namespace grsets {

/**
 * One stratum of the quotiented smooth part of an exceptional divisor:
 * its Euler characteristic and the curvette orbit it contributes. The
 * orbit carries the stabilizer conjugacy class, the character of the
 * equivariant curvette function and the valuation vectors of its
 * translates.
 */
struct Stratum {
    std::string name;
    long long euler = 0;
    Orbit curvette;
};

enum class FiltrationKind { divisorial, curve };

/**
 * User-supplied description of an equivariant resolution: the group,
 * the number of valuations, the truncation bound, and the strata.
 * The two kinds differ only in how the data was derived; evaluation
 * is identical.
 */
struct ResolutionSpec {
    std::string name;
    GroupPtr group;
    int r = 0;
    Bound bound;
    FiltrationKind kind = FiltrationKind::divisorial;
    std::vector<Stratum> strata;

    Context context() const { return Context{group, r, bound}; }
};

/// Checks the cross-stratum invariants: unique names, matching group
/// and arity, and positively weighted curvettes wherever euler > 0.
/// Throws zero_weight_with_positive_euler or spec_error.
void validate_spec(const ResolutionSpec& spec);

/// The product over strata of (1 - T)^(-euler), truncated at the
/// spec's bound. Strata with euler = 0 contribute the factor one.
RingElement poincare_series(const ResolutionSpec& spec);

/// Same evaluation at an overriding bound.
RingElement poincare_series(const ResolutionSpec& spec, const Bound& bound);

/// Built-in example specs, addressable by name:
///   trivial-multiplicity  multiplicity filtration on the plane
///   smooth-branch         order of vanishing on a smooth branch
///   cusp                  order of vanishing on the cusp y^2 = x^3
///   z2-antipodal          multiplicity under (x,y) -> (-x,-y)
///   z2-swap               multiplicity under (x,y) -> (y,x)
const std::vector<ResolutionSpec>& builtin_specs();
const ResolutionSpec& builtin_spec(const std::string& name);

} // namespace grsets
