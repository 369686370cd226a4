#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "pp/counting.hpp"
#include "pp/facets.hpp"
#include "pp/points.hpp"
#include "pp/poset.hpp"

using namespace pp;

namespace {

const Poset kTwoChain = chain_poset(2);
// Two incomparable elements below a common top.
const Poset kWedge = validate(3, {{1, 3}, {2, 3}});

std::vector<Point> pts(const Poset& p, PolytopeKind k) { return lattice_points(p, k); }

}  // namespace

TEST_CASE("two-chain lattice points, all kinds") {
  // Filters of 1<2: {}, {2}, {1,2}.
  std::vector<Point> order = {{0, 0}, {0, 1}, {1, 1}};
  CHECK(pts(kTwoChain, PolytopeKind::Order) == order);
  // Antichains: {}, {1}, {2}.
  std::vector<Point> chain = {{0, 0}, {0, 1}, {1, 0}};
  CHECK(pts(kTwoChain, PolytopeKind::Chain) == chain);
  // Signs on the minimal element of each filter.
  std::vector<Point> eorder = {{-1, 1}, {0, -1}, {0, 0}, {0, 1}, {1, 1}};
  CHECK(pts(kTwoChain, PolytopeKind::EOrder) == eorder);
  // Signs on each antichain: the cross polytope.
  std::vector<Point> echain = {{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}};
  CHECK(pts(kTwoChain, PolytopeKind::EChain) == echain);
  // From ideals {}, {1}, {1,2}: signs on max, +1 on the rest.
  std::vector<Point> dualform = {{-1, 0}, {0, 0}, {1, -1}, {1, 0}, {1, 1}};
  CHECK(pts(kTwoChain, PolytopeKind::EOrderDualForm) == dualform);
}

TEST_CASE("three-element example point counts") {
  // Filters: {}, {3}, {1,3}, {2,3}, {1,2,3} -> 1+2+2+2+4 signed points.
  std::vector<Point> expect = {{-1, -1, 1}, {-1, 0, 1}, {-1, 1, 1}, {0, -1, 1},
                               {0, 0, -1},  {0, 0, 0},  {0, 0, 1},  {0, 1, 1},
                               {1, -1, 1},  {1, 0, 1},  {1, 1, 1}};
  CHECK(pts(kWedge, PolytopeKind::EOrder) == expect);
  CHECK(pts(kWedge, PolytopeKind::EOrderDualForm).size() == 11);
  CHECK(pts(dual(kWedge), PolytopeKind::EOrder) == pts(kWedge, PolytopeKind::EOrderDualForm));
  CHECK(pts(kWedge, PolytopeKind::EChain).size() == 11);  // 1 + 2*3 + 4
}

TEST_CASE("two-chain facet systems, exact halfspaces") {
  // Order: x1 >= 0 (minimal), x2 <= 1 (maximal), x1 <= x2 (cover).
  std::vector<Halfspace> order = {{{-1, 0}, 0}, {{0, 1}, 1}, {{1, -1}, 0}};
  CHECK(facets(kTwoChain, PolytopeKind::Order) == order);
  // Chain: x_i >= 0, x1 + x2 <= 1.
  std::vector<Halfspace> chain = {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 1}};
  CHECK(facets(kTwoChain, PolytopeKind::Chain) == chain);
  // Saturated chains to the top: (2) gives x2 <= 1, (1,2) gives 2x1 - x2 <= 1;
  // the maximal chain gives -2x1 - x2 <= 1.
  std::vector<Halfspace> eorder = {{{-2, -1}, 1}, {{0, 1}, 1}, {{2, -1}, 1}};
  CHECK(facets(kTwoChain, PolytopeKind::EOrder) == eorder);
  // One maximal chain, four sign vectors.
  std::vector<Halfspace> echain = {{{-1, -1}, 1}, {{-1, 1}, 1}, {{1, -1}, 1}, {{1, 1}, 1}};
  CHECK(facets(kTwoChain, PolytopeKind::EChain) == echain);
}

TEST_CASE("three-element example facet counts and halfspaces") {
  std::vector<Halfspace> eorder = {
      {{-2, 0, -1}, 1}, {{0, -2, -1}, 1}, {{0, 0, 1}, 1}, {{0, 2, -1}, 1}, {{2, 0, -1}, 1}};
  CHECK(facets(kWedge, PolytopeKind::EOrder) == eorder);

  // Dual poset: two maximal elements, so 4 saturated chains + 2 maximal chains.
  std::vector<Halfspace> dual_eorder = {{{-1, 0, -2}, 1}, {{-1, 0, 2}, 1}, {{0, -1, -2}, 1},
                                        {{0, -1, 2}, 1},  {{0, 1, 0}, 1},  {{1, 0, 0}, 1}};
  CHECK(facets(dual(kWedge), PolytopeKind::EOrder) == dual_eorder);
  CHECK(facets(kWedge, PolytopeKind::EOrderDualForm) == dual_eorder);

  FacetFormulas f = facet_count_formulas(kWedge);
  CHECK(f.sc == 3);
  CHECK(f.mc == 2);
  CHECK(f.f_eorder == 5);
  CHECK(f.f_order == 2 + 1 + 2);
  CHECK(f.f_chain == 3 + 2);
  CHECK(f.f_echain == 8);  // two maximal chains of length 1: 2 * 2^2
  CHECK(facet_count_formulas(dual(kWedge)).f_eorder == 6);
}

TEST_CASE("facet formulas match enumerated systems") {
  for (int n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      FacetFormulas f = facet_count_formulas(p);
      CHECK((Int)facets(p, PolytopeKind::Order).size() == f.f_order);
      CHECK((Int)facets(p, PolytopeKind::Chain).size() == f.f_chain);
      CHECK((Int)facets(p, PolytopeKind::EOrder).size() == f.f_eorder);
      CHECK((Int)facets(p, PolytopeKind::EChain).size() == f.f_echain);
      CHECK((Int)facets(p, PolytopeKind::EOrderDualForm).size() ==
            facet_count_formulas(dual(p)).f_eorder);
    }
}

TEST_CASE("facet systems verified against their point sets") {
  for (int n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n))
      for (PolytopeKind k : {PolytopeKind::Order, PolytopeKind::Chain, PolytopeKind::EOrder,
                             PolytopeKind::EChain, PolytopeKind::EOrderDualForm}) {
        FacetSystemReport rep = verify_facet_system(p, k);
        INFO("n=", n, " kind=", kind_name(k), " detail=", rep.detail);
        CHECK(rep.pass());
      }
}

TEST_CASE("dilation counts and the 13-point list") {
  CHECK(count_dilation(kTwoChain, PolytopeKind::EOrder, 0) == 1);
  CHECK(count_dilation(kTwoChain, PolytopeKind::EOrder, 1) == 5);
  CHECK(count_dilation(kTwoChain, PolytopeKind::EOrder, 2) == 13);
  // Solutions of x2 <= 2, 2x1 - x2 <= 2, -2x1 - x2 <= 2 in the box [-2,2]^2.
  std::vector<Point> expect = {{-2, 2}, {-1, 0}, {-1, 1}, {-1, 2}, {0, -2}, {0, -1}, {0, 0},
                               {0, 1},  {0, 2},  {1, 0},  {1, 1},  {1, 2},  {2, 2}};
  CHECK(list_dilation_points(kTwoChain, PolytopeKind::EOrder, 2) == expect);
  CHECK(list_dilation_points(kTwoChain, PolytopeKind::EOrder, 1) ==
        pts(kTwoChain, PolytopeKind::EOrder));
}

TEST_CASE("ehrhart polynomials, exact coefficients") {
  // Order and chain polytopes of the two-chain are unimodular simplices.
  std::vector<Rational> tri = {1, Rational(3, 2), Rational(1, 2)};
  CHECK(ehrhart(kTwoChain, PolytopeKind::Order).coeffs == tri);
  CHECK(ehrhart(kTwoChain, PolytopeKind::Chain).coeffs == tri);

  std::vector<Rational> quad = {1, 2, 2};  // counts 1, 5, 13, 25, ...
  CHECK(ehrhart(kTwoChain, PolytopeKind::EOrder).coeffs == quad);
  CHECK(ehrhart(kTwoChain, PolytopeKind::EChain).coeffs == quad);

  std::vector<Rational> wedge = {1, Rational(10, 3), 4, Rational(8, 3)};
  CHECK(ehrhart(kWedge, PolytopeKind::EOrder).coeffs == wedge);
  CHECK(ehrhart(kWedge, PolytopeKind::EOrderDualForm).coeffs == wedge);
  CHECK(ehrhart(dual(kWedge), PolytopeKind::EOrder).coeffs == wedge);
  // Values 1, 11, 45, 119 at m = 0..3.
  CHECK(ehrhart(kWedge, PolytopeKind::EOrder).eval(2) == 45);
  CHECK(ehrhart(kWedge, PolytopeKind::EOrder).eval(3) == 119);
}

TEST_CASE("order and chain polytopes are Ehrhart-equivalent") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n))
      CHECK(ehrhart(p, PolytopeKind::Order) == ehrhart(p, PolytopeKind::Chain));
}

TEST_CASE("reciprocity: interior counts against negated arguments") {
  for (int n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n))
      for (PolytopeKind k : {PolytopeKind::Order, PolytopeKind::Chain, PolytopeKind::EOrder,
                             PolytopeKind::EChain, PolytopeKind::EOrderDualForm}) {
        RationalPolynomial L = ehrhart(p, k);
        for (Int m = 1; m <= 3; ++m) {
          Rational sign = (n % 2 == 0) ? 1 : -1;
          CHECK(sign * L.eval(-m) == interior_count(p, k, m));
        }
      }
}

TEST_CASE("reflexivity of the centered kinds") {
  for (int n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      CHECK(reflexivity_check(p, PolytopeKind::EOrder));
      CHECK(reflexivity_check(p, PolytopeKind::EChain));
      CHECK(reflexivity_check(p, PolytopeKind::EOrderDualForm));
    }
  CHECK_THROWS_AS(reflexivity_check(kTwoChain, PolytopeKind::Order), std::invalid_argument);
  // Interior point at the origin only: counts 5 at m = 1, so 5 interior at m = 2.
  CHECK(interior_count(kTwoChain, PolytopeKind::EOrder, 1) == 1);
  CHECK(interior_count(kTwoChain, PolytopeKind::EOrder, 2) == 5);
}

TEST_CASE("central symmetry and lattice span") {
  for (int n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      CHECK(central_symmetry_check(pts(p, PolytopeKind::EChain)));
      CHECK(central_symmetry_check(pts(p, PolytopeKind::EOrder)) == p.covers.empty());
      CHECK(integer_span_check(pts(p, PolytopeKind::EOrder), n));
      CHECK(integer_span_check(pts(p, PolytopeKind::EChain), n));
    }
  CHECK(!central_symmetry_check(pts(kTwoChain, PolytopeKind::EOrder)));
  CHECK(central_symmetry_check(pts(antichain_poset(2), PolytopeKind::EOrder)));
  CHECK(!integer_span_check({{1, 0}, {0, 2}}, 2));
  CHECK(!integer_span_check({{1, 0}}, 2));
  CHECK(integer_span_check({{1, 0}, {0, 1}}, 2));
}

TEST_CASE("facet count bounds for small n") {
  std::vector<Int> mu = {1, 2, 3, 4, 6, 9};
  std::vector<Int> eorder = {2, 4, 6, 10, 15, 22};
  for (int n = 1; n <= 6; ++n) {
    FacetBounds b = max_facet_bounds(n);
    CHECK(b.mu == mu[n - 1]);
    CHECK(b.eorder_bound == eorder[n - 1]);
    CHECK(b.echain_bound == (Int{1} << n));
  }
  CHECK_THROWS_AS(max_facet_bounds(0), std::invalid_argument);

  // The stacked-antichain posets attain the bound at n = 4 and 5.
  CHECK(facet_count_formulas(ordinal_sum({2, 2})).f_eorder == 10);
  CHECK(facet_count_formulas(ordinal_sum({2, 3})).f_eorder == 15);
  // The chain attains the sign-vector bound.
  CHECK(facet_count_formulas(chain_poset(5)).f_echain == 32);
}
