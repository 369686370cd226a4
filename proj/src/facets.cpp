#include "pp/facets.hpp"

#include <algorithm>
#include <stdexcept>

namespace pp {

std::vector<Halfspace> facets(const Poset& p, PolytopeKind kind) {
  std::vector<Halfspace> out;
  auto blank = [&] { return Halfspace{std::vector<Int>(p.n, 0), 1}; };
  switch (kind) {
    case PolytopeKind::Order: {
      for (int i : subset_elements(p.minimal_elements())) {
        Halfspace h = blank();
        h.normal[i] = -1;
        h.rhs = 0;
        out.push_back(std::move(h));
      }
      for (int i : subset_elements(p.maximal_elements())) {
        Halfspace h = blank();
        h.normal[i] = 1;
        out.push_back(std::move(h));
      }
      for (auto [i, j] : p.covers) {
        Halfspace h = blank();
        h.normal[i] = 1;
        h.normal[j] = -1;
        h.rhs = 0;
        out.push_back(std::move(h));
      }
      break;
    }
    case PolytopeKind::Chain: {
      for (int i = 0; i < p.n; ++i) {
        Halfspace h = blank();
        h.normal[i] = -1;
        h.rhs = 0;
        out.push_back(std::move(h));
      }
      for (const auto& c : chains(p).maximal) {
        Halfspace h = blank();
        for (int i : c) h.normal[i] = 1;
        out.push_back(std::move(h));
      }
      break;
    }
    case PolytopeKind::EOrder: {
      ChainData cd = chains(p);
      for (const auto& c : cd.saturated_to_max) {
        Halfspace h = blank();
        int r = (int)c.size();
        h.normal[c[0]] = Int{1} << (r - 1);
        for (int j = 1; j < r; ++j) h.normal[c[j]] = -(Int{1} << (r - 1 - j));
        out.push_back(std::move(h));
      }
      for (const auto& c : cd.maximal) {
        Halfspace h = blank();
        int r = (int)c.size();
        for (int j = 0; j < r; ++j) h.normal[c[j]] = -(Int{1} << (r - 1 - j));
        out.push_back(std::move(h));
      }
      break;
    }
    case PolytopeKind::EChain: {
      for (const auto& c : chains(p).maximal) {
        int r = (int)c.size();
        for (Subset eps = 0; eps < (Subset{1} << r); ++eps) {
          Halfspace h = blank();
          for (int j = 0; j < r; ++j) h.normal[c[j]] = subset_contains(eps, j) ? -1 : 1;
          out.push_back(std::move(h));
        }
      }
      break;
    }
    case PolytopeKind::EOrderDualForm:
      return facets(dual(p), PolytopeKind::EOrder);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FacetFormulas facet_count_formulas(const Poset& p) {
  FacetFormulas f;
  ChainData cd = chains(p);
  f.sc = (Int)cd.saturated_to_max.size();
  f.mc = (Int)cd.maximal.size();
  f.mc_by_length = cd.mc_by_length;
  f.f_order = subset_card(p.minimal_elements()) + subset_card(p.maximal_elements()) +
              (Int)p.covers.size();
  f.f_chain = p.n + f.mc;
  f.f_eorder = f.sc + f.mc;
  for (std::size_t len = 0; len < f.mc_by_length.size(); ++len)
    f.f_echain += (Int{1} << (len + 1)) * f.mc_by_length[len];
  return f;
}

FacetBounds max_facet_bounds(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("facet bounds support 1 <= n <= 30");
  auto pow3 = [](int k) {
    Int v = 1;
    while (k-- > 0) v *= 3;
    return v;
  };
  FacetBounds b;
  if (n == 1) {
    b.mu = 1;
  } else if (n % 3 == 0) {
    b.mu = pow3(n / 3);
  } else if (n % 3 == 1) {
    b.mu = 4 * pow3(n / 3 - 1);
  } else {
    b.mu = 2 * pow3(n / 3);
  }
  if (n <= 3) {
    b.eorder_bound = 2 * n;
  } else if (n % 3 == 0) {
    b.eorder_bound = (47 * pow3(n / 3 - 2) - 3) / 2;
  } else if (n % 3 == 1) {
    b.eorder_bound = (23 * pow3(n / 3 - 1) - 3) / 2;
  } else {
    b.eorder_bound = (11 * pow3(n / 3) - 3) / 2;
  }
  b.echain_bound = Int{1} << n;
  return b;
}

}  // namespace pp
