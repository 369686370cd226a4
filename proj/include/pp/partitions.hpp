#pragma once

#include <vector>

#include "pp/polynomial.hpp"
#include "pp/poset.hpp"
#include "pp/types.hpp"

namespace pp {

// Maps f : {0,...,n-1} -> Z as coordinate vectors.  The poset must be
// naturally labeled (every cover rises in the labels); callers with other
// labelings relabel along a linear extension first.

// f is left enriched iff for every x < y in the poset: |f(x)| <= |f(y)|, and
// |f(x)| = |f(y)| forces f(y) >= 0.  Checks all comparable pairs and the
// cover-only variant and insists they agree (they do: the conditions compose
// along saturated chains).
bool is_left_enriched(const Poset& p, const std::vector<int>& f);

// Number of left enriched maps with every |f(i)| <= m.
Int count_left_enriched(const Poset& p, Int m);
std::vector<std::vector<int>> list_left_enriched(const Poset& p, Int m);

// Number of order-preserving maps into {0,...,m}.
Int count_order_preserving(const Poset& p, Int m);

// Degree-n polynomials through the counts at m = 0..n, with the extra-node
// consistency check (throws std::logic_error on mismatch).
RationalPolynomial left_enriched_polynomial(const Poset& p);
RationalPolynomial order_polynomial(const Poset& p);

struct SetDifferenceReport {
  Int partition_count = 0;  // left enriched maps, |f| <= m
  Int dilation_count = 0;   // integer points of the m-th enriched order dilation
  std::vector<std::vector<int>> only_partitions;  // maps that are not dilation points
  std::vector<std::vector<int>> only_dilation;    // dilation points that are not maps
};

// The two sets have equal size for every m, but differ as sets in general.
SetDifferenceReport set_difference_demo(const Poset& p, Int m);

}  // namespace pp
