#include "grsets/ring.hpp"

#include <algorithm>

namespace grsets {

namespace {

void require_same(const Context& a, const Context& b) {
    if (!(a == b))
        throw context_mismatch("ring elements from different contexts");
}

void require_valid(const Context& ctx) {
    if (!ctx.group)
        throw context_mismatch("context requires a group");
    if (ctx.r < 0 || static_cast<int>(ctx.bound.size()) != ctx.r)
        throw context_mismatch("bound arity differs from the index count");
    for (int v : ctx.bound)
        if (v < 0)
            throw context_mismatch("bound entries must be nonnegative");
}

} // namespace

RingElement RingElement::zero(Context ctx) {
    require_valid(ctx);
    return RingElement(std::move(ctx));
}

RingElement RingElement::one(Context ctx) {
    require_valid(ctx);
    Subgroup whole = Subgroup::whole(ctx.group);
    Character triv = Character::trivial(whole);
    Orbit unit = Orbit::make(ctx.group, whole, triv,
                             {{ctx.group->identity(), Weight(static_cast<size_t>(ctx.r), 0)}},
                             ctx.r);
    RingElement e(std::move(ctx));
    e.terms_.emplace(std::move(unit), 1);
    return e;
}

RingElement RingElement::from_orbit(const Orbit& orbit, Context ctx) {
    require_valid(ctx);
    if (!(*orbit.group() == *ctx.group))
        throw context_mismatch("orbit group differs from the context group");
    if (orbit.r() != ctx.r)
        throw context_mismatch("orbit index count differs from the context");
    RingElement e(std::move(ctx));
    if (!orbit.exceeds_bound(e.ctx_.bound))
        e.terms_.emplace(orbit, 1);
    return e;
}

void RingElement::insert_term(const Orbit& orbit, const Int& coeff) {
    auto it = terms_.find(orbit);
    if (it == terms_.end()) {
        if (coeff != 0)
            terms_.emplace(orbit, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        terms_.erase(it);
}

RingElement RingElement::add(const RingElement& other) const {
    require_same(ctx_, other.ctx_);
    RingElement out(*this);
    for (const auto& [orbit, coeff] : other.terms_)
        out.insert_term(orbit, coeff);
    return out;
}

RingElement RingElement::neg() const {
    RingElement out(ctx_);
    for (const auto& [orbit, coeff] : terms_)
        out.terms_.emplace(orbit, -coeff);
    return out;
}

RingElement RingElement::mul(const RingElement& other) const {
    require_same(ctx_, other.ctx_);
    RingElement out(ctx_);
    for (const auto& [oa, ca] : terms_) {
        for (const auto& [ob, cb] : other.terms_) {
            Int c = ca * cb;
            for (const Orbit& p : orbit_product(oa, ob)) {
                if (!p.exceeds_bound(ctx_.bound))
                    out.insert_term(p, c);
            }
        }
    }
    return out;
}

RingElement RingElement::pow(int k) const {
    if (k < 0)
        throw context_mismatch("negative power of a ring element");
    RingElement acc = one(ctx_);
    for (int i = 0; i < k; ++i)
        acc = acc.mul(*this);
    return acc;
}

RingElement RingElement::scaled(const Int& factor) const {
    RingElement out(ctx_);
    if (factor == 0)
        return out;
    for (const auto& [orbit, coeff] : terms_)
        out.terms_.emplace(orbit, coeff * factor);
    return out;
}

bool RingElement::equals(const RingElement& other) const {
    require_same(ctx_, other.ctx_);
    return terms_ == other.terms_;
}

Int binomial(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

RingElement geometric_inverse_power(const RingElement& t, long long chi) {
    const Context& ctx = t.context();
    if (chi == 0)
        return RingElement::one(ctx);

    if (chi < 0) {
        const long long m = -chi;
        RingElement acc = RingElement::one(ctx);
        RingElement power = RingElement::one(ctx);
        for (long long k = 1; k <= m; ++k) {
            power = power.mul(t);
            Int c = binomial(m, k);
            if (k % 2 != 0)
                c = -c;
            acc = acc.add(power.scaled(c));
        }
        return acc;
    }

    for (const auto& [orbit, coeff] : t.terms()) {
        if (!orbit.positively_weighted())
            throw non_positive_weights(
                "geometric series with positive exponent needs positively weighted orbits");
    }
    // Each factor of T adds at least one to every point's coordinate
    // sum, so T^k truncates to zero for large enough k.
    RingElement acc = RingElement::zero(ctx);
    RingElement power = RingElement::one(ctx);
    long long k = 0;
    while (!(k > 0 && power.is_zero())) {
        acc = acc.add(power.scaled(binomial(chi + k - 1, k)));
        power = power.mul(t);
        ++k;
    }
    return acc;
}

} // namespace grsets
