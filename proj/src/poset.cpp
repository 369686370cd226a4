#include "pp/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pp {

Subset Poset::minimal_elements() const {
  Subset out = 0;
  for (int i = 0; i < n; ++i)
    if (below[i] == 0) out |= subset_bit(i);
  return out;
}

Subset Poset::maximal_elements() const {
  Subset out = 0;
  for (int i = 0; i < n; ++i)
    if (above[i] == 0) out |= subset_bit(i);
  return out;
}

namespace {

// Transitive closure of the given strict relations; throws on cycles.
std::vector<Subset> close_relations(int n, const std::vector<std::pair<int, int>>& rels) {
  std::vector<Subset> above(n, 0);
  for (auto [i, j] : rels) above[i] |= subset_bit(j);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (subset_contains(above[i], k)) above[i] |= above[k];
  for (int i = 0; i < n; ++i)
    if (subset_contains(above[i], i))
      throw std::invalid_argument("not a partial order: relation cycle through element " +
                                  std::to_string(i + 1));
  return above;
}

std::vector<std::pair<int, int>> reduce_covers(int n, const std::vector<Subset>& above) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    for (int j : subset_elements(above[i])) {
      bool direct = true;
      for (int k : subset_elements(above[i]))
        if (k != j && subset_contains(above[k], j)) {
          direct = false;
          break;
        }
      if (direct) covers.emplace_back(i, j);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace

Poset poset_from_relations(int n, const std::vector<std::pair<int, int>>& relations) {
  if (n < 1 || n > 31) throw std::invalid_argument("poset size must be between 1 and 31");
  Poset p;
  p.n = n;
  p.above = close_relations(n, relations);
  p.below.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j : subset_elements(p.above[i])) p.below[j] |= subset_bit(i);
  p.covers = reduce_covers(n, p.above);
  return p;
}

Poset validate(int n, const std::vector<std::pair<int, int>>& relations) {
  if (n < 1 || n > 31) throw std::invalid_argument("poset size must be between 1 and 31");
  std::vector<std::pair<int, int>> zero_based;
  zero_based.reserve(relations.size());
  for (auto [a, b] : relations) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("cover label out of range 1..n: (" + std::to_string(a) +
                                  "," + std::to_string(b) + ")");
    if (a == b)
      throw std::invalid_argument("not a partial order: reflexive pair (" +
                                  std::to_string(a) + "," + std::to_string(b) + ")");
    zero_based.emplace_back(a - 1, b - 1);
  }
  return poset_from_relations(n, zero_based);
}

Poset dual(const Poset& p) {
  Poset d;
  d.n = p.n;
  d.above = p.below;
  d.below = p.above;
  d.covers.reserve(p.covers.size());
  for (auto [i, j] : p.covers) d.covers.emplace_back(j, i);
  std::sort(d.covers.begin(), d.covers.end());
  return d;
}

Poset ordinal_sum(const std::vector<int>& block_sizes) {
  if (block_sizes.empty()) throw std::invalid_argument("ordinal sum needs at least one block");
  int n = 0;
  for (int b : block_sizes) {
    if (b < 1) throw std::invalid_argument("ordinal sum blocks must have positive size");
    n += b;
  }
  std::vector<std::pair<int, int>> rels;
  int start = 0;
  for (std::size_t k = 0; k + 1 < block_sizes.size(); ++k) {
    int mid = start + block_sizes[k];
    int end = mid + block_sizes[k + 1];
    for (int i = start; i < mid; ++i)
      for (int j = mid; j < end; ++j) rels.emplace_back(i, j);
    start = mid;
  }
  return poset_from_relations(n, rels);
}

Poset chain_poset(int n) { return ordinal_sum(std::vector<int>(n, 1)); }

Poset antichain_poset(int n) { return ordinal_sum({n}); }

std::vector<Poset> enumerate_posets(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("poset enumeration supports 1 <= n <= 5");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Poset> out;
  std::vector<int> state(pairs.size(), 0);  // 0 incomparable, 1 i<j, 2 j<i
  while (true) {
    std::vector<Subset> above(n, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (state[k] == 1) above[pairs[k].first] |= subset_bit(pairs[k].second);
      if (state[k] == 2) above[pairs[k].second] |= subset_bit(pairs[k].first);
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int k : subset_elements(above[i]))
        if ((above[k] & ~above[i]) != 0) {
          transitive = false;
          break;
        }
    if (transitive) {
      Poset p;
      p.n = n;
      p.above = above;
      p.below.assign(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j : subset_elements(above[i])) p.below[j] |= subset_bit(i);
      p.covers = reduce_covers(n, above);
      out.push_back(std::move(p));
    }
    std::size_t k = 0;
    while (k < state.size() && state[k] == 2) state[k++] = 0;
    if (k == state.size()) break;
    ++state[k];
  }
  return out;
}

bool is_naturally_labeled(const Poset& p) {
  for (auto [i, j] : p.covers)
    if (i > j) return false;
  return true;
}

namespace {

// Some two elements of s are incomparable.
bool has_incomparable_pair(const Poset& p, Subset s) {
  for (int i = 0; i < p.n; ++i) {
    if (!subset_contains(s, i)) continue;
    for (int j = i + 1; j < p.n; ++j)
      if (subset_contains(s, j) && !p.comparable(i, j)) return true;
  }
  return false;
}

}  // namespace

bool contains_x_poset(const Poset& p) {
  // a,b < c < d,e induced: an incomparable pair strictly below c and another
  // strictly above.  (A chain through c does not count: the five elements must
  // carry exactly the a,b < c < d,e relations.)
  for (int c = 0; c < p.n; ++c)
    if (has_incomparable_pair(p, p.below[c]) && has_incomparable_pair(p, p.above[c])) return true;
  return false;
}

std::vector<int> linear_extension(const Poset& p) {
  std::vector<int> order;
  Subset placed = 0;
  while ((int)order.size() < p.n) {
    int pick = -1;
    for (int i = 0; i < p.n; ++i) {
      if (subset_contains(placed, i)) continue;
      if ((p.below[i] & ~placed) == 0) {
        pick = i;
        break;
      }
    }
    order.push_back(pick);
    placed |= subset_bit(pick);
  }
  return order;
}

Relabeling naturally_relabel(const Poset& p) {
  Relabeling r;
  std::vector<int> ext = linear_extension(p);
  r.old_to_new.assign(p.n, 0);
  for (int pos = 0; pos < p.n; ++pos) r.old_to_new[ext[pos]] = pos;
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < p.n; ++i)
    for (int j : subset_elements(p.above[i]))
      rels.emplace_back(r.old_to_new[i], r.old_to_new[j]);
  r.poset = poset_from_relations(p.n, rels);
  r.changed = !(r.poset == p);
  return r;
}

}  // namespace pp
