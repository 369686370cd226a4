#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "pp/counting.hpp"
#include "pp/partitions.hpp"
#include "pp/poset.hpp"

using namespace pp;

namespace {

const Poset kTwoChain = chain_poset(2);
const Poset kWedge = validate(3, {{1, 3}, {2, 3}});

}  // namespace

TEST_CASE("membership: absolute values rise, ties forced nonnegative") {
  CHECK(is_left_enriched(kTwoChain, {-2, 2}));
  CHECK(!is_left_enriched(kTwoChain, {2, -2}));  // tie in |f|, f(2) negative
  CHECK(is_left_enriched(kTwoChain, {1, 1}));
  CHECK(!is_left_enriched(kTwoChain, {1, -1}));
  CHECK(!is_left_enriched(kTwoChain, {-1, -1}));
  CHECK(is_left_enriched(kTwoChain, {0, 0}));
  CHECK(is_left_enriched(kTwoChain, {-1, -2}));
  CHECK(is_left_enriched(kTwoChain, {0, -1}));
  CHECK_THROWS_AS(is_left_enriched(kTwoChain, {1}), std::invalid_argument);
}

TEST_CASE("labeling guard") {
  Poset rev = validate(2, {{2, 1}});
  CHECK_THROWS_AS(count_left_enriched(rev, 1), std::invalid_argument);
  CHECK_THROWS_AS(left_enriched_polynomial(rev), std::invalid_argument);
  // Relabeled copy works and counts like the chain.
  Relabeling r = naturally_relabel(rev);
  CHECK(count_left_enriched(r.poset, 2) == 13);
}

TEST_CASE("two-chain counts follow 2m^2 + 2m + 1") {
  CHECK(count_left_enriched(kTwoChain, 0) == 1);
  CHECK(count_left_enriched(kTwoChain, 1) == 5);
  CHECK(count_left_enriched(kTwoChain, 2) == 13);
  CHECK(count_left_enriched(kTwoChain, 3) == 25);
  std::vector<Rational> quad = {1, 2, 2};
  CHECK(left_enriched_polynomial(kTwoChain).coeffs == quad);
}

TEST_CASE("two-chain map list at bound 2") {
  std::vector<std::vector<int>> expect = {{-2, 2}, {-1, -2}, {-1, 1}, {-1, 2}, {0, -2},
                                          {0, -1}, {0, 0},   {0, 1},  {0, 2},  {1, -2},
                                          {1, 1},  {1, 2},   {2, 2}};
  CHECK(list_left_enriched(kTwoChain, 2) == expect);
}

TEST_CASE("map set differs from the dilation point set, same size") {
  SetDifferenceReport r1 = set_difference_demo(kTwoChain, 1);
  CHECK(r1.partition_count == 5);
  CHECK(r1.dilation_count == 5);
  CHECK(r1.only_partitions.empty());
  CHECK(r1.only_dilation.empty());

  SetDifferenceReport r2 = set_difference_demo(kTwoChain, 2);
  CHECK(r2.partition_count == 13);
  CHECK(r2.dilation_count == 13);
  std::vector<std::vector<int>> maps_only = {{-1, -2}, {1, -2}};
  std::vector<std::vector<int>> points_only = {{-1, 0}, {1, 0}};
  CHECK(r2.only_partitions == maps_only);
  CHECK(r2.only_dilation == points_only);
}

TEST_CASE("order-preserving map counts") {
  CHECK(count_order_preserving(kTwoChain, 1) == 3);
  CHECK(count_order_preserving(kTwoChain, 2) == 6);
  CHECK(count_order_preserving(kWedge, 1) == 5);
  std::vector<Rational> tri = {1, Rational(3, 2), Rational(1, 2)};
  CHECK(order_polynomial(kTwoChain).coeffs == tri);
}

TEST_CASE("order-preserving maps count both unsigned dilations") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      if (!is_naturally_labeled(p)) continue;
      for (Int m = 0; m <= n + 1; ++m) {
        Int maps = count_order_preserving(p, m);
        CHECK(maps == count_dilation(p, PolytopeKind::Order, m));
        CHECK(maps == count_dilation(p, PolytopeKind::Chain, m));
      }
    }
}

TEST_CASE("counting polynomials match the dilation polynomials") {
  for (int n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      if (!is_naturally_labeled(p)) continue;
      CHECK(order_polynomial(p) == ehrhart(p, PolytopeKind::Order));
      RationalPolynomial e = left_enriched_polynomial(p);
      CHECK(e == ehrhart(p, PolytopeKind::EOrder));
      CHECK(e == ehrhart(p, PolytopeKind::EChain));
      CHECK(e == ehrhart(dual(p), PolytopeKind::EOrder));
      for (Int m = 0; m <= 3; ++m)
        CHECK(set_difference_demo(p, m).partition_count ==
              count_dilation(p, PolytopeKind::EOrder, m));
    }
}
