#include "pp/counting.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pp {

namespace {

// Depth-first scan over the integer box [lo,hi]^n keeping partial inner
// products, pruning a branch as soon as some halfspace can no longer be
// satisfied by any completion.
struct BoxScanner {
  int n;
  Int lo, hi;
  std::vector<Halfspace> hs;          // right-hand sides already scaled
  std::vector<std::vector<Int>> best; // best[f][j]: minimal achievable contribution of coords j..n-1

  BoxScanner(const Poset& p, PolytopeKind kind, Int m, bool strict) {
    n = p.n;
    lo = is_centered_kind(kind) ? -m : 0;
    hi = m;
    hs = facets(p, kind);
    for (auto& h : hs) {
      h.rhs *= m;
      if (strict) h.rhs -= 1;  // integral points: strict <=> rhs - 1
    }
    best.assign(hs.size(), std::vector<Int>(n + 1, 0));
    for (std::size_t f = 0; f < hs.size(); ++f)
      for (int j = n - 1; j >= 0; --j)
        best[f][j] = best[f][j + 1] + std::min(hs[f].normal[j] * lo, hs[f].normal[j] * hi);
  }

  template <class Visit>
  void run(Visit&& visit) {
    std::vector<Int> partial(hs.size(), 0);
    std::vector<int> x(n, 0);
    scan(0, partial, x, visit);
  }

 private:
  template <class Visit>
  void scan(int depth, std::vector<Int>& partial, std::vector<int>& x, Visit& visit) {
    if (depth == n) {
      for (std::size_t f = 0; f < hs.size(); ++f)
        if (partial[f] > hs[f].rhs) return;
      visit(x);
      return;
    }
    for (Int v = lo; v <= hi; ++v) {
      bool ok = true;
      for (std::size_t f = 0; f < hs.size(); ++f)
        if (partial[f] + hs[f].normal[depth] * v + best[f][depth + 1] > hs[f].rhs) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (std::size_t f = 0; f < hs.size(); ++f) partial[f] += hs[f].normal[depth] * v;
      x[depth] = (int)v;
      scan(depth + 1, partial, x, visit);
      for (std::size_t f = 0; f < hs.size(); ++f) partial[f] -= hs[f].normal[depth] * v;
    }
  }
};

int affine_rank(const std::vector<Point>& pts, int n) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> r(n);
    for (int c = 0; c < n; ++c) r[c] = pts[i][c] - pts[0][c];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < (int)rows.size(); ++col) {
    int pivot = -1;
    for (int i = rank; i < (int)rows.size(); ++i)
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = rank + 1; i < (int)rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational factor = rows[i][col] / rows[rank][col];
      for (int c = col; c < n; ++c) rows[i][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Int count_dilation(const Poset& p, PolytopeKind kind, Int m) {
  if (m < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  Int count = 0;
  BoxScanner(p, kind, m, false).run([&](const std::vector<int>&) { ++count; });
  return count;
}

std::vector<Point> list_dilation_points(const Poset& p, PolytopeKind kind, Int m) {
  if (m < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  std::vector<Point> out;
  BoxScanner(p, kind, m, false).run([&](const std::vector<int>& x) { out.push_back(x); });
  std::sort(out.begin(), out.end());
  return out;
}

Int interior_count(const Poset& p, PolytopeKind kind, Int m) {
  if (m < 1) throw std::invalid_argument("interior counting needs m >= 1");
  Int count = 0;
  BoxScanner(p, kind, m, true).run([&](const std::vector<int>&) { ++count; });
  return count;
}

RationalPolynomial ehrhart(const Poset& p, PolytopeKind kind) {
  std::vector<Int> values;
  for (Int m = 0; m <= p.n; ++m) values.push_back(count_dilation(p, kind, m));
  RationalPolynomial poly = interpolate_at_naturals(values);
  if (poly.degree() != p.n)
    throw std::logic_error("dilation counts interpolate to degree " +
                           std::to_string(poly.degree()) + ", expected " + std::to_string(p.n));
  if (poly.coeffs.front() != 1)
    throw std::logic_error("dilation polynomial has constant term != 1");
  Int guard = count_dilation(p, kind, p.n + 1);
  if (poly.eval(p.n + 1) != guard)
    throw std::logic_error("dilation polynomial fails the extra-node consistency check");
  return poly;
}

FacetSystemReport verify_facet_system(const Poset& p, PolytopeKind kind) {
  FacetSystemReport rep;
  std::vector<Point> pts = lattice_points(p, kind);
  std::vector<Halfspace> hs = facets(p, kind);

  rep.points_satisfy_halfspaces = true;
  for (const auto& h : hs)
    for (const auto& x : pts) {
      Int dot = 0;
      for (int i = 0; i < p.n; ++i) dot += h.normal[i] * x[i];
      if (dot > h.rhs) {
        rep.points_satisfy_halfspaces = false;
        rep.detail += "point violates halfspace; ";
      }
    }

  rep.halfspaces_facet_defining = true;
  for (const auto& h : hs) {
    std::vector<Point> tight;
    for (const auto& x : pts) {
      Int dot = 0;
      for (int i = 0; i < p.n; ++i) dot += h.normal[i] * x[i];
      if (dot == h.rhs) tight.push_back(x);
    }
    if (affine_rank(tight, p.n) != p.n - 1) {
      rep.halfspaces_facet_defining = false;
      rep.detail += "halfspace not facet-defining; ";
    }
  }

  // Integer solutions of the halfspace system inside [-1,1]^n must be exactly
  // the vertex list; for the 0/1 kinds the wider box is a strictly stronger
  // check (no negative solutions may appear).
  std::vector<Point> box;
  {
    std::vector<int> x(p.n, -1);
    while (true) {
      bool ok = true;
      for (const auto& h : hs) {
        Int dot = 0;
        for (int i = 0; i < p.n; ++i) dot += h.normal[i] * x[i];
        if (dot > h.rhs) {
          ok = false;
          break;
        }
      }
      if (ok) box.push_back(x);
      int k = 0;
      while (k < p.n && x[k] == 1) x[k++] = -1;
      if (k == p.n) break;
      ++x[k];
    }
  }
  std::sort(box.begin(), box.end());
  rep.box_points_match = (box == pts);
  if (!rep.box_points_match) rep.detail += "box scan disagrees with point list; ";

  rep.full_dimensional = (affine_rank(pts, p.n) == p.n);
  if (!rep.full_dimensional) rep.detail += "points not full-dimensional; ";
  return rep;
}

bool reflexivity_check(const Poset& p, PolytopeKind kind) {
  if (!is_centered_kind(kind))
    throw std::invalid_argument(std::string("reflexivity check applies to the centered kinds, not ") +
                                kind_name(kind));
  std::vector<Halfspace> hs = facets(p, kind);
  // Normals are integral by construction; all right-hand sides must be 1, and
  // then no facet is tight at the origin (its value there is 0), so the origin
  // is interior.  Uniqueness: dilation count minus boundary count equals 1.
  for (const auto& h : hs)
    if (h.rhs != 1) return false;
  Int total = count_dilation(p, kind, 1);
  Int boundary = total - interior_count(p, kind, 1);
  return total - boundary == 1;
}

}  // namespace pp
