#pragma once

#include <stdexcept>
#include <string>

namespace grsets {

/// Base class of every error reported by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed Cayley table: not a Latin square, non-associative, or
/// missing identity/inverses. Also used for invalid subgroup data.
struct not_a_group : error { using error::error; };

/// Unknown named-group family, or an out-of-range size parameter.
struct unsupported_kind : error { using error::error; };

/// Character operation on mismatched domains.
struct domain_mismatch : error { using error::error; };

/// Value map that is not a homomorphism into Z/N.
struct invalid_character : error { using error::error; };

/// Orbit point list does not describe a full transversal of G/H.
struct bad_transversal : error { using error::error; };

/// Orbit weight entry below zero (infinite orders are represented by
/// omitting the orbit upstream, never by a sentinel weight).
struct negative_weight : error { using error::error; };

/// Character handed to an orbit does not live on its stabilizer.
struct character_domain_mismatch : error { using error::error; };

/// Operation mixing elements of two different groups.
struct group_mismatch : error { using error::error; };

/// Ring/series operation mixing different (group, r, bound) contexts.
struct context_mismatch : error { using error::error; };

/// Geometric series with positive exponent over an orbit that has a
/// zero-weight point; the series would not terminate.
struct non_positive_weights : error { using error::error; };

/// Stratum with positive Euler characteristic whose curvette orbit has
/// a zero-weight point.
struct zero_weight_with_positive_euler : error { using error::error; };

/// Jet oracle asked to handle a non-abelian monomial action.
struct non_abelian_action : error { using error::error; };

/// Structurally invalid resolution spec (duplicate names, bad arity).
struct spec_error : error { using error::error; };

/// Structurally malformed input file (missing keys, wrong JSON types).
struct parse_error : error { using error::error; };

} // namespace grsets
