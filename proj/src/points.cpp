#include "pp/points.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "pp/subsets.hpp"

namespace pp {

bool is_centered_kind(PolytopeKind k) {
  return k == PolytopeKind::EOrder || k == PolytopeKind::EChain ||
         k == PolytopeKind::EOrderDualForm;
}

const char* kind_name(PolytopeKind k) {
  switch (k) {
    case PolytopeKind::Order: return "order";
    case PolytopeKind::Chain: return "chain";
    case PolytopeKind::EOrder: return "eorder";
    case PolytopeKind::EChain: return "echain";
    case PolytopeKind::EOrderDualForm: return "eorder-dual-form";
  }
  return "?";
}

namespace {

Point indicator(int n, Subset s) {
  Point x(n, 0);
  for (int i : subset_elements(s)) x[i] = 1;
  return x;
}

// All sign choices: -1 on a subset of `signed_part`, +1 on the rest of it,
// +1 on `fixed_part`.
void signed_points(int n, Subset signed_part, Subset fixed_part, std::vector<Point>& out) {
  std::vector<int> pos = subset_elements(signed_part);
  for (Subset neg = 0;; ++neg) {
    neg &= full_set((int)pos.size());
    Point x(n, 0);
    for (int i : subset_elements(fixed_part)) x[i] = 1;
    for (std::size_t k = 0; k < pos.size(); ++k) x[pos[k]] = subset_contains(neg, (int)k) ? -1 : 1;
    out.push_back(std::move(x));
    if (neg == full_set((int)pos.size())) break;
  }
}

}  // namespace

std::vector<Point> lattice_points(const Poset& p, PolytopeKind kind) {
  std::vector<Point> out;
  switch (kind) {
    case PolytopeKind::Order:
      for (Subset f : filters(p).members) out.push_back(indicator(p.n, f));
      break;
    case PolytopeKind::Chain:
      for (Subset a : antichains(p).members) out.push_back(indicator(p.n, a));
      break;
    case PolytopeKind::EOrder:
      for (Subset f : filters(p).members) {
        Subset fmin = min_of(p, f);
        signed_points(p.n, fmin, f & ~fmin, out);
      }
      break;
    case PolytopeKind::EOrderDualForm:
      for (Subset i : poset_ideals(p).members) {
        Subset imax = max_of(p, i);
        signed_points(p.n, imax, i & ~imax, out);
      }
      break;
    case PolytopeKind::EChain:
      for (Subset a : antichains(p).members) signed_points(p.n, a, 0, out);
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool central_symmetry_check(const std::vector<Point>& points) {
  std::vector<Point> neg;
  neg.reserve(points.size());
  for (const auto& x : points) {
    Point y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = -x[i];
    neg.push_back(std::move(y));
  }
  std::sort(neg.begin(), neg.end());
  return neg == points;  // points arrive sorted from lattice_points
}

bool integer_span_check(const std::vector<Point>& points, int n) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(points.size());
  for (const auto& x : points) {
    if ((int)x.size() != n) throw std::invalid_argument("point dimension mismatch");
    rows.emplace_back(x.begin(), x.end());
  }
  Int index = 1;  // product of pivot magnitudes = index of the row lattice in Z^n
  int r = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = r; i < (int)rows.size(); ++i)
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;  // rank deficit
    std::swap(rows[r], rows[pivot]);
    for (int i = r + 1; i < (int)rows.size(); ++i) {
      while (rows[i][col] != 0) {  // gcd elimination keeps everything integral
        Int q = rows[r][col] / rows[i][col];
        for (int c = col; c < n; ++c) rows[r][c] -= q * rows[i][c];
        std::swap(rows[r], rows[i]);
      }
    }
    index *= std::llabs(rows[r][col]);
    ++r;
  }
  return index == 1;
}

}  // namespace pp
