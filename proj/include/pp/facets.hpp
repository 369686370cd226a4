#pragma once

#include <vector>

#include "pp/points.hpp"
#include "pp/poset.hpp"
#include "pp/subsets.hpp"
#include "pp/types.hpp"

namespace pp {

// Halfspace <normal, x> <= rhs with integral data.
struct Halfspace {
  std::vector<Int> normal;
  Int rhs = 0;
  bool operator==(const Halfspace& o) const { return normal == o.normal && rhs == o.rhs; }
  bool operator<(const Halfspace& o) const {
    return normal != o.normal ? normal < o.normal : rhs < o.rhs;
  }
};

// The irredundant facet systems, sorted and deduplicated.
//   order : x_i >= 0 (i minimal), x_i <= 1 (i maximal), x_i <= x_j (covers)
//   chain : x_i >= 0 (all i), sum over each maximal chain <= 1
//   eorder: per saturated chain i_1 < ... < i_r ending at a maximal element,
//           2^{r-1} x_{i_1} - sum_{j>=2} 2^{r-j} x_{i_j} <= 1; and per maximal
//           chain, -sum_j 2^{r-j} x_{i_j} <= 1
//   echain: per maximal chain and per sign vector, sum_j eps_j x_{i_j} <= 1
//   eorder-dual-form: the eorder system of the dual poset
std::vector<Halfspace> facets(const Poset& p, PolytopeKind kind);

struct FacetFormulas {
  Int f_order = 0;   // #minimal + #maximal + #covers
  Int f_chain = 0;   // n + #maximal chains
  Int f_eorder = 0;  // sc + mc
  Int f_echain = 0;  // sum over lengths of 2^{len+1} * mc_by_length[len]
  Int sc = 0;        // saturated chains ending at a maximal element
  Int mc = 0;        // maximal chains
  std::vector<Int> mc_by_length;
};

FacetFormulas facet_count_formulas(const Poset& p);

struct FacetBounds {
  Int mu = 0;             // max cliques of a graph on n vertices (3^k / 4*3^{k-1} / 2*3^k)
  Int eorder_bound = 0;   // 2n for n <= 3, piecewise otherwise
  Int echain_bound = 0;   // 2^n
};

FacetBounds max_facet_bounds(int n);

}  // namespace pp
