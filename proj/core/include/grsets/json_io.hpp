#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "grsets/resolution.hpp"
#include "grsets/series.hpp"

namespace grsets::io {

using nlohmann::json;

/// Group descriptor: {"cayley": [[...]]} or
/// {"named": {"kind": "cyclic"|"dihedral", "m": int}}.
/// Element indices are 0-based; the identity is detected.
GroupPtr parse_group(const json& j);
json group_to_json(const Group& g);

/// Orbit descriptor: {"stabilizer": [indices],
///                    "character": {"element": residue, ...},
///                    "points": [{"rep": index, "weight": [ints]}, ...]}.
/// The points must cover a full transversal.
Orbit parse_orbit(const json& j, const GroupPtr& group, int r);
json orbit_to_json(const Orbit& o);

/// Ring element: {"group": ..., "r": int, "bound": [ints],
///                "terms": [{"coeff": int, "orbit": ...}, ...]}.
/// Terms are emitted sorted by the orbit canonical encoding.
RingElement parse_ring_element(const json& j);
json ring_element_to_json(const RingElement& e);

json series_to_json(const MultiIndexSeries& s);
json series_to_json(const EquivariantSeries& s);

/// Resolution spec: {"group": ..., "r": int, "bound": [ints],
///                   "kind": "divisorial"|"curve",
///                   "strata": [{"name": str, "euler": int, "orbit": ...}]}.
ResolutionSpec parse_spec(const json& j);
json spec_to_json(const ResolutionSpec& s);

/// Expression file: {"group": ..., "r": int, "bound": [ints],
///                   "expr": node} where a node is one of
///   {"op":"orbit","orbit":...}   {"op":"int","value":n}
///   {"op":"one"}                 {"op":"zero"}
///   {"op":"add","args":[...]}    {"op":"mul","args":[...]}
///   {"op":"sub","args":[a,b]}    {"op":"neg","arg":a}
///   {"op":"pow","base":a,"exp":k}
///   {"op":"geom","euler":chi,"arg":a}
RingElement eval_expression(const json& j);

/// Canonical orbit-expansion rendering of a ring element; the unit
/// orbit prints as a bare integer.
std::string render_orbit(const Orbit& o);
std::string render_ring_element(const RingElement& e);

} // namespace grsets::io
