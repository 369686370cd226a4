#pragma once

#include <vector>

#include "pp/poset.hpp"
#include "pp/types.hpp"

namespace pp {

enum class PolytopeKind { Order, Chain, EOrder, EChain, EOrderDualForm };

bool is_centered_kind(PolytopeKind k);
const char* kind_name(PolytopeKind k);

using Point = std::vector<int>;

// Lattice points of the polytope at dilation 1, sorted lexicographically,
// deduplicated.  Order: filter indicator vectors.  Chain: antichain indicators.
// EOrder: all ±1 sign choices on the minimal elements of each filter, +1 on the
// rest of the filter.  EChain: ±1 sign choices on each antichain.
// EOrderDualForm: built from ideals (±1 on max(I), +1 on comax(I)); equals the
// EOrder points of the dual poset.
std::vector<Point> lattice_points(const Poset& p, PolytopeKind kind);

// Point set equals its own negation.
bool central_symmetry_check(const std::vector<Point>& points);

// Integer row span of the points is all of Z^n (Hermite-style elimination).
bool integer_span_check(const std::vector<Point>& points, int n);

}  // namespace pp
