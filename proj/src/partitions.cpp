#include "pp/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "pp/counting.hpp"

namespace pp {

namespace {

void require_natural(const Poset& p) {
  if (!is_naturally_labeled(p))
    throw std::invalid_argument(
        "poset is not naturally labeled; relabel along a linear extension first");
}

bool pair_ok(int fx, int fy) {
  int ax = std::abs(fx), ay = std::abs(fy);
  if (ax > ay) return false;
  if (ax == ay && fy < 0) return false;
  return true;
}

// Enumerates maps depth-first; covers (i,j) have i < j under natural labeling,
// so each cover is checked the moment its upper endpoint gets a value.
template <class Visit>
void scan_left_enriched(const Poset& p, Int m, Visit&& visit) {
  std::vector<std::vector<int>> covers_into(p.n);
  for (auto [i, j] : p.covers) covers_into[j].push_back(i);
  std::vector<int> f(p.n, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == p.n) {
      visit(f);
      return;
    }
    for (int v = (int)-m; v <= (int)m; ++v) {
      bool ok = true;
      for (int i : covers_into[depth])
        if (!pair_ok(f[i], v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      f[depth] = v;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

bool is_left_enriched(const Poset& p, const std::vector<int>& f) {
  require_natural(p);
  if ((int)f.size() != p.n) throw std::invalid_argument("map has wrong arity");
  bool all_pairs = true;
  for (int x = 0; x < p.n && all_pairs; ++x)
    for (int y : subset_elements(p.above[x]))
      if (!pair_ok(f[x], f[y])) {
        all_pairs = false;
        break;
      }
  bool cover_only = true;
  for (auto [x, y] : p.covers)
    if (!pair_ok(f[x], f[y])) {
      cover_only = false;
      break;
    }
  if (all_pairs != cover_only)
    throw std::logic_error("cover-only left-enriched check diverged from the all-pairs check");
  return all_pairs;
}

Int count_left_enriched(const Poset& p, Int m) {
  require_natural(p);
  if (m < 0) throw std::invalid_argument("bound must be nonnegative");
  Int count = 0;
  scan_left_enriched(p, m, [&](const std::vector<int>&) { ++count; });
  return count;
}

std::vector<std::vector<int>> list_left_enriched(const Poset& p, Int m) {
  require_natural(p);
  if (m < 0) throw std::invalid_argument("bound must be nonnegative");
  std::vector<std::vector<int>> out;
  scan_left_enriched(p, m, [&](const std::vector<int>& f) { out.push_back(f); });
  std::sort(out.begin(), out.end());
  return out;
}

Int count_order_preserving(const Poset& p, Int m) {
  require_natural(p);
  if (m < 0) throw std::invalid_argument("bound must be nonnegative");
  std::vector<std::vector<int>> covers_into(p.n);
  for (auto [i, j] : p.covers) covers_into[j].push_back(i);
  std::vector<int> f(p.n, 0);
  Int count = 0;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == p.n) {
      ++count;
      return;
    }
    for (int v = 0; v <= (int)m; ++v) {
      bool ok = true;
      for (int i : covers_into[depth])
        if (f[i] > v) {
          ok = false;
          break;
        }
      if (!ok) continue;
      f[depth] = v;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return count;
}

namespace {

RationalPolynomial interpolated_with_guard(const Poset& p, Int (*counter)(const Poset&, Int),
                                           const char* what) {
  std::vector<Int> values;
  for (Int m = 0; m <= p.n; ++m) values.push_back(counter(p, m));
  RationalPolynomial poly = interpolate_at_naturals(values);
  if (poly.eval(p.n + 1) != counter(p, p.n + 1))
    throw std::logic_error(std::string(what) + " fails the extra-node consistency check");
  return poly;
}

}  // namespace

RationalPolynomial left_enriched_polynomial(const Poset& p) {
  return interpolated_with_guard(p, count_left_enriched, "left enriched count polynomial");
}

RationalPolynomial order_polynomial(const Poset& p) {
  return interpolated_with_guard(p, count_order_preserving, "order polynomial");
}

SetDifferenceReport set_difference_demo(const Poset& p, Int m) {
  SetDifferenceReport rep;
  std::vector<std::vector<int>> maps = list_left_enriched(p, m);
  std::vector<Point> pts = list_dilation_points(p, PolytopeKind::EOrder, m);
  rep.partition_count = (Int)maps.size();
  rep.dilation_count = (Int)pts.size();
  std::set_difference(maps.begin(), maps.end(), pts.begin(), pts.end(),
                      std::back_inserter(rep.only_partitions));
  std::set_difference(pts.begin(), pts.end(), maps.begin(), maps.end(),
                      std::back_inserter(rep.only_dilation));
  return rep;
}

}  // namespace pp
