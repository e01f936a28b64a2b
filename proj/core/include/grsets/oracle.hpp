#pragma once

#include <array>
#include <vector>

#include "grsets/series.hpp"

namespace grsets::oracle {

/**
 * Independent brute-force series used only to validate the main
 * pipeline. Everything here enumerates monomials directly and shares
 * no code with the orbit or ring arithmetic.
 */

/// Coefficient at t^k is the count of degree-k monomials in two
/// variables, obtained by enumeration.
MultiIndexSeries jet_dimension_series(int k_max);

/**
 * A linear action of a finite abelian group on the variables x, y.
 * matrices[g] is a 2x2 signed permutation or diagonal +-1 matrix, row
 * major; a function transforms by substituting the inverse matrix.
 * Construction checks that g -> matrix is a homomorphism and that the
 * group is abelian.
 */
class MonomialAction {
public:
    MonomialAction(GroupPtr group, std::vector<std::array<int, 4>> matrices);

    const GroupPtr& group() const { return group_; }
    const std::array<int, 4>& matrix(Elem g) const { return matrices_[static_cast<size_t>(g)]; }

    /// Antipodal action of the cyclic group of order 2: (x,y) -> (-x,-y).
    static MonomialAction antipodal();
    /// Coordinate swap action of the cyclic group of order 2.
    static MonomialAction swap_xy();

private:
    GroupPtr group_;
    std::vector<std::array<int, 4>> matrices_;
};

/// Decomposes the degree-k forms in x, y into character eigenspaces of
/// the action, for k = 0..k_max; the coefficient at t^k maps each
/// character of the whole group to the dimension of its eigenspace.
EquivariantSeries equivariant_jet_series(const MonomialAction& action, int k_max);

/// Coefficient at t^s is 1 when s is a nonnegative integer combination
/// of the generators, else 0.
MultiIndexSeries semigroup_series(const std::vector<int>& gens, int k_max);

} // namespace grsets::oracle
