#pragma once

#include <utility>
#include <vector>

#include "pp/types.hpp"

namespace pp {

// Finite poset on elements {0,...,n-1}.  `above[i]` is the set of elements
// strictly greater than i, `below[i]` strictly smaller; `covers` is the
// transitive reduction, each pair (i,j) meaning i is covered by j.
struct Poset {
  int n = 0;
  std::vector<std::pair<int, int>> covers;
  std::vector<Subset> above;
  std::vector<Subset> below;

  bool less(int i, int j) const { return subset_contains(above[i], j); }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  Subset ground() const { return full_set(n); }
  Subset minimal_elements() const;
  Subset maximal_elements() const;

  bool operator==(const Poset& o) const { return n == o.n && above == o.above; }
};

// Builds a poset from cover/relation pairs with 1-based labels, as they appear
// in the JSON input format.  The pairs need not be reduced; the transitive
// reduction is recomputed.  Throws std::invalid_argument on labels outside
// 1..n or when the closure has a cycle ("not a partial order").
Poset validate(int n, const std::vector<std::pair<int, int>>& relations);

// Internal builder from 0-based strict relations (already checked label-range).
Poset poset_from_relations(int n, const std::vector<std::pair<int, int>>& relations);

Poset dual(const Poset& p);

// Blocks listed bottom-up; every element of one block lies below every element
// of the next.  Labels increase along the sum, so the result is naturally
// labeled.  Throws on an empty block list or a nonpositive block size.
Poset ordinal_sum(const std::vector<int>& block_sizes);

Poset chain_poset(int n);
Poset antichain_poset(int n);

// All labeled posets on {0,...,n-1}; n <= 5 (counts 1, 3, 19, 219, 4231).
std::vector<Poset> enumerate_posets(int n);

// Every cover (i,j) has i < j as integers.
bool is_naturally_labeled(const Poset& p);

// True iff some element has an incomparable pair strictly below it and an
// incomparable pair strictly above it (an induced a,b < c < d,e on five
// distinct elements).
bool contains_x_poset(const Poset& p);

// Smallest-label-first topological order of the elements.
std::vector<int> linear_extension(const Poset& p);

struct Relabeling {
  Poset poset;                  // naturally labeled copy
  std::vector<int> old_to_new;  // element i of the input maps to old_to_new[i]
  bool changed = false;
};

Relabeling naturally_relabel(const Poset& p);

}  // namespace pp
