#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pp {

// Exact arithmetic everywhere; no floating point in any computation.
using Rational = boost::multiprecision::cpp_rational;
using Int = long long;

// Subsets of {0,...,n-1} as bitmasks.  Element i <-> bit i.  External labels
// (JSON, printing) are 1-based; everything in the library is 0-based.
using Subset = std::uint32_t;

constexpr Subset subset_bit(int i) { return Subset{1} << i; }
constexpr bool subset_contains(Subset s, int i) { return (s >> i) & 1u; }
inline int subset_card(Subset s) { return __builtin_popcount(s); }
constexpr Subset full_set(int n) { return (Subset{1} << n) - 1; }

std::vector<int> subset_elements(Subset s);

// Element-list lexicographic order: {1} < {1,3} < {2}.
bool subset_lex_less(Subset a, Subset b);

// Canonical family order: cardinality, then element-list lex.
bool subset_family_less(Subset a, Subset b);

// "{1,3}" with 1-based labels; "{}" for the empty set.
std::string subset_to_string(Subset s);

std::string rational_to_string(const Rational& q);

}  // namespace pp
