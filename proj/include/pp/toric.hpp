#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pp/poset.hpp"
#include "pp/subsets.hpp"
#include "pp/types.hpp"

namespace pp {

// Four toric rings attached to a poset, one variable per marked ideal:
//   O : x_I, exponent vector = indicator of I
//   C : x_{max I}, indicator of max(I)
//   Oe: x_I^eps, eps = ±1 on max(I) and +1 on the rest of I
//   Ce: x_{max I}^eps, eps = ±1 on max(I), zero elsewhere
// A variable maps to t^{eps} s under the monomial map; a monomial of degree d
// maps to the coordinate sum with s-exponent d.
enum class RingKind { O, C, Oe, Ce };

const char* ring_kind_name(RingKind k);
bool is_enriched_kind(RingKind k);

struct ToricVariable {
  Subset ideal = 0;
  Subset neg = 0;  // positions carrying -1; subset of max(ideal)
};

struct ToricRing {
  RingKind kind = RingKind::O;
  Poset poset;
  std::vector<ToricVariable> vars;          // canonical order: |I|, ideal lex, sign lex
  std::vector<std::vector<int>> texp;       // per variable, length n, entries in {-1,0,1}
  std::unordered_map<std::uint64_t, int> index;

  int var_index(Subset ideal, Subset neg) const;
  Subset support(int v) const;              // ideal (O, Oe) or max(ideal) (C, Ce)
  int origin_variable() const { return var_index(0, 0); }
  std::string var_name(int v) const;
};

ToricRing build_ring(const Poset& p, RingKind kind);

// Monomial = sorted list of variable ids (with repetition).
using Monomial = std::vector<int>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& d, const Monomial& m);
Monomial mono_quotient(const Monomial& m, const Monomial& d);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
std::string mono_to_string(const ToricRing& ring, const Monomial& m);

struct ToricImage {
  std::vector<int> t;  // coordinate exponents
  Int s = 0;           // homogenizing degree
  bool operator==(const ToricImage& o) const { return t == o.t && s == o.s; }
};

ToricImage toric_map(const ToricRing& ring, const Monomial& m);

// lead is the binomial's first monomial as in the structure theorems; the
// monomial orders below confirm it is the larger one.
struct Binomial {
  Monomial lead, tail;
};

// The quadratic generator families.  O and C: one binomial per unordered
// incomparable ideal pair.  Oe and Ce: the sign-collision binomials (one per
// shared maximal element with opposite signs, I = J allowed) plus the
// incomparable-pair binomials whose lead signs agree on max(I) ∩ max(J); tail
// signs are the unique choice balancing the toric map.  Every returned
// binomial is checked to balance; violations throw std::logic_error.
std::vector<Binomial> generators(const ToricRing& ring);

// Monomial comparison: optional weight cascade, then degree-compatible reverse
// lexicographic over a total variable order extending ideal inclusion.
struct MonomialOrder {
  const ToricRing* ring = nullptr;
  std::vector<int> rank;  // rank[var] = position, 0 = smallest variable
  bool use_weights = false;
  std::vector<Rational> weight_sharp;   // antichain size
  std::vector<Rational> weight_second;  // lifted chain-ring weight

  int compare(const Monomial& a, const Monomial& b) const;  // -1, 0, +1
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

MonomialOrder revlex_order(const ToricRing& ring);
MonomialOrder revlex_order(const ToricRing& ring, std::vector<int> rank);

// A uniformly random total variable order refining strict ideal inclusion.
std::vector<int> random_inclusion_extension(const ToricRing& ring, std::uint32_t seed);

// Nonnegative rational weights over the C-ring variables giving every reduced
// chain-family binomial a strictly larger lead than tail (margin >= 1).
// Candidate seed, then iterative repair, then exact Fourier-Motzkin; the
// selection property is asserted before returning.
std::vector<Rational> realize_chain_weights(const Poset& p);

// Weight cascade for the Ce ring: antichain size, then the chain weights
// lifted through the sign-forgetting map, tie-broken by revlex.
MonomialOrder weighted_ce_order(const ToricRing& ce_ring, const ToricRing& c_ring,
                                const std::vector<Rational>& chain_weights);

// The order each family's structure theorem uses.  For Ce this builds the
// C-ring and realizes the weights internally.
MonomialOrder order_for(const ToricRing& ring);

struct GroebnerReport {
  std::size_t generator_count = 0;
  std::size_t pair_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> failures;  // S-pairs with nonzero remainder
  bool pass() const { return failures.empty(); }
};

// Reduces every S-polynomial by multivariate division against the whole
// family; a Groebner basis leaves no nonzero remainders.
GroebnerReport buchberger_verify(const std::vector<Binomial>& gens, const MonomialOrder& order);

struct InitialIdeal {
  std::vector<Monomial> min_generators;  // distinct lead monomials, minimalized
  bool squarefree = true;
  bool quadratic = true;
  bool origin_free = true;  // no minimal generator involves the empty-ideal variable
};

InitialIdeal initial_ideal(const ToricRing& ring, const std::vector<Binomial>& gens,
                           const MonomialOrder& order);

// The (ideal, sign)-preserving variable bijection between the two rings sends
// one initial ideal onto the other.  Valid pairs: (O, C) and (Oe, Ce).
bool initial_isomorphism_check(const Poset& p, RingKind from, RingKind to);

// Monomials of the given degree divisible by no minimal generator.
Int standard_monomial_count(const ToricRing& ring, const InitialIdeal& init, int degree);

}  // namespace pp
