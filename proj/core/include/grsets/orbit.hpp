#pragma once

#include <span>
#include <utility>
#include <vector>

#include "grsets/group.hpp"

namespace grsets {

/// Weight vector in Z^r, componentwise >= 0.
using Weight = std::vector<int>;

/**
 * One transitive orbit of a weighted G-set with stabilizer characters:
 * a coset space G/H, a weight vector per coset, and a one-dimensional
 * character of H at the base coset eH. Characters at the other points
 * are determined by conjugation and never stored.
 *
 * Instances are always in canonical form: the stabilizer is the
 * lexicographically minimal conjugate, and the (weights, character)
 * encoding is minimal under the right action of the normalizer on the
 * coset space. Two orbits are isomorphic (equivariant bijection
 * preserving weights and characters) exactly when they compare equal.
 */
class Orbit {
public:
    /// Validates the point data (full transversal, finite nonnegative
    /// weights of arity r, character living on H) and canonicalizes.
    static Orbit make(const GroupPtr& group, const Subgroup& stabilizer,
                      const Character& character,
                      const std::vector<std::pair<Elem, Weight>>& points, int r);

    const GroupPtr& group() const { return group_; }
    int r() const { return r_; }
    /// Number of points, |G| / |H|.
    int size() const { return static_cast<int>(transversal_.size()); }
    const Subgroup& stabilizer() const { return stab_; }
    const Character& base_character() const { return chi_; }
    /// Coset representatives; transversal()[0] is the identity.
    const std::vector<Elem>& transversal() const { return transversal_; }
    const std::vector<Weight>& weights() const { return weights_; }
    const Weight& weight(int point) const { return weights_[static_cast<size_t>(point)]; }

    /// Index of the point (coset) containing the element x.
    int point_of(Elem x) const { return coset_of_[static_cast<size_t>(x)]; }
    /// Left action of a on the point index.
    int act(Elem a, int point) const;
    /// Character at an arbitrary point, by conjugation from the base.
    Character character_at(int point) const;
    /// Points as (representative, weight) pairs, in transversal order.
    std::vector<std::pair<Elem, Weight>> points() const;

    /// True iff no point has the all-zero weight vector.
    bool positively_weighted() const;
    /// True iff every point has some coordinate above the bound.
    bool exceeds_bound(std::span<const int> bound) const;
    /// The one-point orbit with zero weight and trivial character.
    bool is_unit() const;

    /// Canonical encoding; total order key among orbits of one group.
    const std::vector<int>& key() const { return key_; }

    bool operator==(const Orbit& other) const;
    bool operator<(const Orbit& other) const { return key_ < other.key_; }

private:
    Orbit(GroupPtr group, int r, Subgroup stab, Character chi,
          std::vector<Elem> transversal, std::vector<Weight> weights,
          std::vector<int> coset_of);

    GroupPtr group_;
    int r_;
    Subgroup stab_;
    Character chi_;
    std::vector<Elem> transversal_;
    std::vector<Weight> weights_;
    std::vector<int> coset_of_;
    std::vector<int> key_;
};

/// Re-runs canonicalization on the stored data. Idempotent.
Orbit canonicalize(const Orbit& o);

/// Decomposition of the Cartesian product into canonical orbits, one
/// per double coset of the stabilizers. Point weights add, characters
/// multiply after restriction to the intersection stabilizer.
std::vector<Orbit> orbit_product(const Orbit& a, const Orbit& b);

} // namespace grsets
