#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grsets/orbit.hpp"

namespace grsets {

/// Exact arbitrary-precision integer used for all coefficients.
using Int = boost::multiprecision::cpp_int;

/// Multi-degree truncation bound, componentwise >= 0.
using Bound = std::vector<int>;

/**
 * Evaluation context of the truncated Grothendieck ring: the group,
 * the number r of weight indices, and the truncation bound V.
 * Every arithmetic operation requires equal contexts.
 */
struct Context {
    GroupPtr group;
    int r = 0;
    Bound bound;

    bool operator==(const Context& other) const {
        return r == other.r && bound == other.bound &&
               (group == other.group || *group == *other.group);
    }
};

/**
 * An element of the Grothendieck ring of weighted orbit sets with
 * stabilizer characters, truncated at the bound: a finite integer
 * combination of canonical orbits. An orbit is stored only while some
 * point of it stays within the bound; orbits are indivisible, so a
 * retained orbit may carry points above the bound.
 *
 * Immutable value type; all operations are pure.
 */
class RingElement {
public:
    static RingElement zero(Context ctx);
    /// The one-point orbit with zero weight and trivial character.
    static RingElement one(Context ctx);
    static RingElement from_orbit(const Orbit& orbit, Context ctx);

    const Context& context() const { return ctx_; }
    const std::map<Orbit, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RingElement add(const RingElement& other) const;
    RingElement neg() const;
    RingElement sub(const RingElement& other) const { return add(other.neg()); }
    RingElement mul(const RingElement& other) const;
    RingElement pow(int k) const;
    RingElement scaled(const Int& factor) const;

    bool equals(const RingElement& other) const;
    bool operator==(const RingElement& other) const { return equals(other); }

private:
    explicit RingElement(Context ctx) : ctx_(std::move(ctx)) {}
    void insert_term(const Orbit& orbit, const Int& coeff);

    Context ctx_;
    std::map<Orbit, Int> terms_;
};

/// Exact binomial coefficient C(n, k) for n >= 0.
Int binomial(long long n, long long k);

/**
 * The factor (1 - T)^(-chi) of the stratum product formula, expanded
 * within the truncation:
 *   chi > 0: sum over k of C(chi+k-1, k) T^k, which terminates because
 *            every orbit of T must be positively weighted;
 *   chi = 0: one;
 *   chi < 0: the finite binomial expansion of (1 - T)^|chi|.
 */
RingElement geometric_inverse_power(const RingElement& t, long long chi);

} // namespace grsets
