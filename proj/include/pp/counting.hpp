#pragma once

#include <string>
#include <vector>

#include "pp/facets.hpp"
#include "pp/points.hpp"
#include "pp/polynomial.hpp"
#include "pp/poset.hpp"

namespace pp {

// Integer points of the m-th dilation, counted/listed through the facet
// halfspace system over the box [0,m]^n (order, chain) or [-m,m]^n (enriched).
Int count_dilation(const Poset& p, PolytopeKind kind, Int m);
std::vector<Point> list_dilation_points(const Poset& p, PolytopeKind kind, Int m);

// Points with every halfspace strict (the topological interior), m >= 1.
Int interior_count(const Poset& p, PolytopeKind kind, Int m);

// Interpolates counts at m = 0..n and checks: degree exactly n, constant term
// 1, and the value at the extra node m = n+1 matches a fresh count.  Throws
// std::logic_error when any of those internal consistency checks fails.
RationalPolynomial ehrhart(const Poset& p, PolytopeKind kind);

struct FacetSystemReport {
  bool points_satisfy_halfspaces = false;  // every lattice point satisfies every halfspace
  bool halfspaces_facet_defining = false;  // each halfspace tight on an affine-rank n-1 subset
  bool box_points_match = false;           // integer solutions in [-1,1]^n equal the point list
  bool full_dimensional = false;           // the point list affinely spans R^n
  std::string detail;

  bool pass() const {
    return points_satisfy_halfspaces && halfspaces_facet_defining && box_points_match &&
           full_dimensional;
  }
};

FacetSystemReport verify_facet_system(const Poset& p, PolytopeKind kind);

// Origin is the unique interior lattice point and every facet has integral
// normal with right-hand side 1.  Rejects the uncentered kinds.
bool reflexivity_check(const Poset& p, PolytopeKind kind);

}  // namespace pp
