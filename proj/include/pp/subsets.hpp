#pragma once

#include <array>
#include <vector>

#include "pp/poset.hpp"
#include "pp/types.hpp"

namespace pp {

enum class FamilyKind { Filter, Ideal, Antichain };

// Members in canonical order: cardinality first, then element-list lex.
struct SubsetFamily {
  FamilyKind kind;
  std::vector<Subset> members;
};

bool is_filter(const Poset& p, Subset s);
bool is_ideal(const Poset& p, Subset s);
bool is_antichain(const Poset& p, Subset s);

SubsetFamily filters(const Poset& p);
SubsetFamily poset_ideals(const Poset& p);
SubsetFamily antichains(const Poset& p);

// Maximal/minimal elements of s within the induced order; empty set for s = {}.
Subset max_of(const Poset& p, Subset s);
Subset min_of(const Poset& p, Subset s);

// comax(I) = I \ max(I) for an ideal I; comin(F) = F \ min(F) for a filter F.
// Throw std::invalid_argument when the argument is not an ideal / filter.
Subset comax(const Poset& p, Subset ideal);
Subset comin(const Poset& p, Subset filter);

// Down-closure of s (the ideal it generates).
Subset ideal_generated_by(const Poset& p, Subset s);

struct IdealOps {
  Subset union_ = 0;         // I ∪ J
  Subset intersection = 0;   // I ∩ J
  Subset star = 0;           // ideal generated by max(I∩J) ∩ (max(I) ∪ max(J))
};

// Throws when I or J is not an ideal.  Union and intersection of ideals are
// ideals; star is the auxiliary ideal used by the chain-side binomials.
IdealOps ideal_ops(const Poset& p, Subset i, Subset j);

// For p ∈ max(I) \ max(J) (precondition, else throws), the four equivalent
// statements: p ∈ J, p ∈ max(I∩J), p ∈ max(I*J), p ∉ max(I∪J).
std::array<bool, 4> four_conditions(const Poset& p, int elem, Subset i, Subset j);

struct ChainData {
  // Chains as element lists in increasing poset order.
  std::vector<std::vector<int>> saturated_to_max;  // nonempty saturated chains ending at a maximal element
  std::vector<std::vector<int>> maximal;           // saturated, from a minimal to a maximal element
  std::vector<Int> mc_by_length;                   // index = chain length (#elements - 1), trailing zeros trimmed
};

ChainData chains(const Poset& p);

}  // namespace pp
