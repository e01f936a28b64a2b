#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "grsets/errors.hpp"

namespace grsets {

/// Group element, as an index into the Cayley table.
using Elem = int;

/**
 * A finite group given by an explicit Cayley table.
 *
 * Construction validates the full set of group axioms (Latin square,
 * associativity over all triples, identity, inverses) and precomputes
 * the identity, the inverse map and the exponent N = lcm of element
 * orders. Index 0 need not be the identity; it is detected.
 *
 * Immutable after construction; safe to share between threads.
 */
class Group {
public:
    /// Validates `table` and builds the group. Throws not_a_group.
    static Group from_cayley(std::vector<std::vector<Elem>> table);

    enum class Kind { cyclic, dihedral };

    /// Standard Cayley table for a named family, m >= 1.
    /// cyclic(m) has order m; dihedral(m) has order 2m.
    static Group named(Kind kind, int m);

    int order() const { return n_; }
    Elem identity() const { return identity_; }
    Elem mul(Elem a, Elem b) const { return cayley_[a][b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    /// Least N with g^N = e for every g.
    int exponent() const { return exponent_; }
    int element_order(Elem a) const;
    bool is_abelian() const;
    Elem conjugate(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }

    const std::vector<std::vector<Elem>>& cayley() const { return cayley_; }

    /// Table equality (same order, identical entries).
    bool operator==(const Group& other) const { return cayley_ == other.cayley_; }

private:
    Group() = default;

    int n_ = 0;
    std::vector<std::vector<Elem>> cayley_;
    Elem identity_ = 0;
    std::vector<Elem> inverse_;
    int exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Convenience: validate and wrap in a shared pointer.
GroupPtr make_group(std::vector<std::vector<Elem>> table);
GroupPtr make_named_group(Group::Kind kind, int m);

/**
 * A subgroup of a fixed parent group, stored as a strictly sorted list
 * of element indices. Construction checks closure and the identity.
 */
class Subgroup {
public:
    Subgroup(GroupPtr group, std::vector<Elem> elements);

    /// Smallest subgroup containing `gens`.
    static Subgroup closure(GroupPtr group, std::span<const Elem> gens);
    static Subgroup trivial(GroupPtr group);
    static Subgroup whole(GroupPtr group);

    const GroupPtr& group() const { return group_; }
    const std::vector<Elem>& elements() const { return elements_; }
    int order() const { return static_cast<int>(elements_.size()); }
    bool contains(Elem g) const;
    bool is_whole_group() const { return order() == group_->order(); }

    bool operator==(const Subgroup& other) const;

private:
    GroupPtr group_;
    std::vector<Elem> elements_;
};

/// gHg^-1.
Subgroup conjugate_subgroup(Elem g, const Subgroup& h);

/// { g : gHg^-1 = H }.
Subgroup normalizer(const Subgroup& h);

/// One representative per double coset HgK, ascending by element index.
/// The union of the HgK over the representatives partitions G.
std::vector<Elem> double_cosets(const Subgroup& h, const Subgroup& k);

/// The conjugate of H whose sorted element list is lexicographically
/// minimal, together with a conjugating element c (c H c^-1 = result).
std::pair<Subgroup, Elem> canonical_conjugate(const Subgroup& h);

/**
 * A one-dimensional character of a subgroup H, written additively: the
 * value of g is the exponent k of e^{2*pi*i*k/N}, where N is the
 * exponent of the parent group. Values are stored aligned with the
 * sorted element list of the domain.
 */
class Character {
public:
    /// `values[i]` is the value on `domain.elements()[i]`, reduced mod N.
    /// Throws invalid_character unless the map is a homomorphism.
    Character(Subgroup domain, std::vector<int> values);

    static Character trivial(Subgroup domain);

    const Subgroup& domain() const { return domain_; }
    /// Exponent N of the parent group (the common modulus).
    int modulus() const;
    int value(Elem g) const;
    const std::vector<int>& values() const { return values_; }
    bool is_trivial() const;

    bool operator==(const Character& other) const;
    std::strong_ordering operator<=>(const Character& other) const;

private:
    Subgroup domain_;
    std::vector<int> values_;
};

/// All homomorphisms H -> Z/N; their count is the order of the
/// abelianization of H. Deterministic order.
std::vector<Character> one_dim_characters(const Subgroup& h);

/// Character on aHa^-1 with values g -> chi(a^-1 g a).
Character conjugate_character(Elem a, const Character& chi);

/// Restriction to a subgroup S of the domain.
Character restrict_character(const Character& chi, const Subgroup& s);

/// Pointwise sum of values mod N; domains must coincide.
Character multiply_characters(const Character& a, const Character& b);

} // namespace grsets
