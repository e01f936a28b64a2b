#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "grsets/ring.hpp"

namespace grsets {

/// Multi-indices ordered by total degree, then lexicographically.
struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        const int sa = std::accumulate(a.begin(), a.end(), 0);
        const int sb = std::accumulate(b.begin(), b.end(), 0);
        if (sa != sb)
            return sa < sb;
        return a < b;
    }
};

/**
 * A truncated integer power series in t_1..t_r: nonzero coefficients
 * on multi-indices that are componentwise <= the bound.
 */
class MultiIndexSeries {
public:
    MultiIndexSeries(int r, Bound bound);

    int r() const { return r_; }
    const Bound& bound() const { return bound_; }
    const std::map<std::vector<int>, Int, GradedLex>& coefficients() const { return coeffs_; }

    /// Adds c at the index; indices above the bound are dropped.
    void add_term(const std::vector<int>& index, const Int& c);
    Int coefficient(const std::vector<int>& index) const;

    MultiIndexSeries add(const MultiIndexSeries& other) const;
    MultiIndexSeries mul(const MultiIndexSeries& other) const;
    bool equals(const MultiIndexSeries& other) const;
    bool operator==(const MultiIndexSeries& other) const { return equals(other); }

    /// Sorted monomial rendering, e.g. "1 + 2*t1 + 3*t1^2".
    std::string to_string() const;

private:
    int r_;
    Bound bound_;
    std::map<std::vector<int>, Int, GradedLex> coeffs_;
};

/**
 * A truncated power series whose coefficients are integer combinations
 * of one-dimensional characters of the whole group.
 */
class EquivariantSeries {
public:
    EquivariantSeries(GroupPtr group, int r, Bound bound);

    const GroupPtr& group() const { return group_; }
    int r() const { return r_; }
    const Bound& bound() const { return bound_; }
    const std::map<std::vector<int>, std::map<Character, Int>, GradedLex>& coefficients() const {
        return coeffs_;
    }

    void add_term(const std::vector<int>& index, const Character& chi, const Int& c);

    EquivariantSeries add(const EquivariantSeries& other) const;
    /// Convolution; coefficient products multiply the characters.
    EquivariantSeries mul(const EquivariantSeries& other) const;
    bool equals(const EquivariantSeries& other) const;
    bool operator==(const EquivariantSeries& other) const { return equals(other); }

    /// Characters render as exponent maps, e.g. "chi{0:0,1:1}/2" for
    /// the map g -> e^{2*pi*i*k/N} with k the listed value and N = 2.
    std::string to_string() const;

private:
    GroupPtr group_;
    int r_;
    Bound bound_;
    std::map<std::vector<int>, std::map<Character, Int>, GradedLex> coeffs_;
};

/**
 * Action-forgetting projection: each point of each orbit contributes
 * its coefficient at the point's weight. Points above the bound are
 * dropped; the result is an honest truncated series.
 */
MultiIndexSeries project_pi(const RingElement& a);

/**
 * Fixed-orbit projection: one-point orbits contribute their character
 * at their weight; orbits with a proper stabilizer map to zero.
 */
EquivariantSeries project_pi_prime(const RingElement& a);

} // namespace grsets
