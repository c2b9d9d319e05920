#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "smirnov/a_integral.hpp"
#include "smirnov/factorization.hpp"
#include "smirnov/products.hpp"

// vendored single-header nlohmann/json lives at vendor/json.hpp
#include <json.hpp>

namespace smirnov {

using Json = nlohmann::json;

// Function descriptors ("kind": inner | outer | cayley | expr | named-example)
// and their payloads.  Named examples: "javad" (3iz/(2 - 2z^2)),
// "koebe-singular" (K(phi), phi = exp((z+1)/(z-1))), "halfplane"
// (i(1+z)/(1-z)).
Expr load_function(const Json& j, int grid_n = kDefaultGridSize);

InnerFunction load_inner(const Json& j);
OuterFunction load_outer(const Json& j, int grid_n = kDefaultGridSize);
ArcSet load_arcset(const Json& arcs);

// Inner/outer pair (plus exact expression for the named examples) for the
// factorization commands.  Accepts named examples and
// {"kind": "real-smirnov", "inner": {...}, "outer": {...}}.
RealSmirnovFn load_real_smirnov(const Json& j, int grid_n = kDefaultGridSize);

// Rational data for helson_decompose; accepts {"kind": "rational", "num":
// [[re,im],...], "den": [...]} and the rational named examples.
RationalFn load_rational(const Json& j);

// Product generator specs: {"family": "geometric-arcs", "ratio": 0.5,
// "count": 64}, harmonic-arcs, blaschke-radial (c, q), monomial-powers,
// rotations (c, p), atom-masses (c, p); or {"terms": [inner...]}.
InnerSequence load_sequence(const Json& j);

// Boundary data for the A-integral commands: {"kind": "staircase", "steps":
// [{"arcs": [[b,a],...], "level": k}, ...]} or {"kind": "named", "name":
// "cot"}.
BoundaryGrid load_boundary_data(const Json& j, int grid_n = kDefaultGridSize);

// {"k_lo": 0, "k_hi": 14} or {"levels": [...]}.
TruncationLadder load_ladder(const Json& j);

Json inner_to_json(const InnerFunction& f);
Json outer_to_json(const OuterFunction& f);

}  // namespace smirnov
