#include "pp/subsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace pp {

bool is_filter(const Poset& p, Subset s) {
  for (int i : subset_elements(s))
    if ((p.above[i] & ~s) != 0) return false;
  return true;
}

bool is_ideal(const Poset& p, Subset s) {
  for (int i : subset_elements(s))
    if ((p.below[i] & ~s) != 0) return false;
  return true;
}

bool is_antichain(const Poset& p, Subset s) {
  for (int i : subset_elements(s))
    if ((p.above[i] & s) != 0) return false;
  return true;
}

namespace {

template <class Pred>
SubsetFamily collect(const Poset& p, FamilyKind kind, Pred pred) {
  SubsetFamily fam{kind, {}};
  for (Subset s = 0; s <= full_set(p.n); ++s)
    if (pred(p, s)) fam.members.push_back(s);
  std::sort(fam.members.begin(), fam.members.end(), subset_family_less);
  return fam;
}

}  // namespace

SubsetFamily filters(const Poset& p) { return collect(p, FamilyKind::Filter, is_filter); }
SubsetFamily poset_ideals(const Poset& p) { return collect(p, FamilyKind::Ideal, is_ideal); }
SubsetFamily antichains(const Poset& p) { return collect(p, FamilyKind::Antichain, is_antichain); }

Subset max_of(const Poset& p, Subset s) {
  Subset out = 0;
  for (int i : subset_elements(s))
    if ((p.above[i] & s) == 0) out |= subset_bit(i);
  return out;
}

Subset min_of(const Poset& p, Subset s) {
  Subset out = 0;
  for (int i : subset_elements(s))
    if ((p.below[i] & s) == 0) out |= subset_bit(i);
  return out;
}

Subset comax(const Poset& p, Subset ideal) {
  if (!is_ideal(p, ideal))
    throw std::invalid_argument("comax requires a poset ideal, got " + subset_to_string(ideal));
  return ideal & ~max_of(p, ideal);
}

Subset comin(const Poset& p, Subset filter) {
  if (!is_filter(p, filter))
    throw std::invalid_argument("comin requires a filter, got " + subset_to_string(filter));
  return filter & ~min_of(p, filter);
}

Subset ideal_generated_by(const Poset& p, Subset s) {
  Subset out = s;
  for (int i : subset_elements(s)) out |= p.below[i];
  return out;
}

IdealOps ideal_ops(const Poset& p, Subset i, Subset j) {
  if (!is_ideal(p, i) || !is_ideal(p, j))
    throw std::invalid_argument("ideal_ops requires poset ideals");
  IdealOps ops;
  ops.union_ = i | j;
  ops.intersection = i & j;
  Subset gens = max_of(p, ops.intersection) & (max_of(p, i) | max_of(p, j));
  ops.star = ideal_generated_by(p, gens);
  return ops;
}

std::array<bool, 4> four_conditions(const Poset& p, int elem, Subset i, Subset j) {
  if (!is_ideal(p, i) || !is_ideal(p, j))
    throw std::invalid_argument("four_conditions requires poset ideals");
  Subset mi = max_of(p, i), mj = max_of(p, j);
  if (!subset_contains(mi, elem) || subset_contains(mj, elem))
    throw std::invalid_argument("four_conditions requires an element of max(I) \\ max(J)");
  IdealOps ops = ideal_ops(p, i, j);
  return {subset_contains(j, elem),
          subset_contains(max_of(p, ops.intersection), elem),
          subset_contains(max_of(p, ops.star), elem),
          !subset_contains(max_of(p, ops.union_), elem)};
}

ChainData chains(const Poset& p) {
  ChainData data;
  Subset maxset = p.maximal_elements();
  Subset minset = p.minimal_elements();

  // Cover successors per element.
  std::vector<std::vector<int>> succ(p.n);
  for (auto [i, j] : p.covers) succ[i].push_back(j);

  std::vector<int> current;
  auto extend = [&](auto&& self, int last) -> void {
    if (subset_contains(maxset, last)) {
      data.saturated_to_max.push_back(current);
      if (subset_contains(minset, current.front())) data.maximal.push_back(current);
    }
    for (int nxt : succ[last]) {
      current.push_back(nxt);
      self(self, nxt);
      current.pop_back();
    }
  };
  for (int start = 0; start < p.n; ++start) {
    current = {start};
    extend(extend, start);
  }

  auto chain_less = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::sort(data.saturated_to_max.begin(), data.saturated_to_max.end(), chain_less);
  std::sort(data.maximal.begin(), data.maximal.end(), chain_less);

  for (const auto& c : data.maximal) {
    std::size_t len = c.size() - 1;
    if (data.mc_by_length.size() <= len) data.mc_by_length.resize(len + 1, 0);
    ++data.mc_by_length[len];
  }
  return data;
}

}  // namespace pp
