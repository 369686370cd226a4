#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "pp/poset.hpp"
#include "pp/poset_json.hpp"
#include "pp/subsets.hpp"

using namespace pp;

TEST_CASE("validate reduces and closes cover input") {
  // 1<2<3 listed with the redundant pair (1,3): reduction drops it.
  Poset p = validate(3, {{1, 2}, {2, 3}, {1, 3}});
  std::vector<std::pair<int, int>> covers = {{0, 1}, {1, 2}};
  CHECK(p.covers == covers);
  CHECK(p.less(0, 2));
  CHECK(!p.less(2, 0));
  CHECK(p.comparable(0, 2));
}

TEST_CASE("validate rejects bad input") {
  CHECK_THROWS_AS(validate(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(validate(32, {}), std::invalid_argument);
  CHECK_THROWS_AS(validate(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(3, {{1, 2}, {2, 3}, {3, 1}}), std::invalid_argument);
}

TEST_CASE("chain, antichain, ordinal sum") {
  Poset c3 = chain_poset(3);
  std::vector<std::pair<int, int>> covers = {{0, 1}, {1, 2}};
  CHECK(c3.covers == covers);
  CHECK(antichain_poset(3).covers.empty());
  CHECK(ordinal_sum({1, 1, 1}) == c3);

  // Two stacked two-element antichains: every lower element covered by both uppers.
  Poset p = ordinal_sum({2, 2});
  std::vector<std::pair<int, int>> expect = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  CHECK(p.covers == expect);
  CHECK(p.minimal_elements() == (subset_bit(0) | subset_bit(1)));
  CHECK(p.maximal_elements() == (subset_bit(2) | subset_bit(3)));

  CHECK_THROWS_AS(ordinal_sum({}), std::invalid_argument);
  CHECK_THROWS_AS(ordinal_sum({2, 0}), std::invalid_argument);
}

TEST_CASE("dual swaps the order") {
  Poset p = validate(3, {{1, 3}, {2, 3}});
  CHECK(dual(p) == validate(3, {{3, 1}, {3, 2}}));
  CHECK(dual(dual(p)) == p);
  CHECK(dual(p).minimal_elements() == subset_bit(2));
}

TEST_CASE("labeled poset enumeration counts") {
  CHECK(enumerate_posets(1).size() == 1);
  CHECK(enumerate_posets(2).size() == 3);
  CHECK(enumerate_posets(3).size() == 19);
  CHECK(enumerate_posets(4).size() == 219);
  CHECK(enumerate_posets(5).size() == 4231);
  CHECK_THROWS_AS(enumerate_posets(6), std::invalid_argument);

  // Distinct posets, and closure consistency above/below.
  std::set<std::vector<Subset>> seen;
  for (const Poset& p : enumerate_posets(3)) {
    CHECK(seen.insert(p.above).second);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(p.less(i, j) == subset_contains(p.below[j], i));
        if (p.less(i, j)) CHECK(!p.less(j, i));
      }
  }
  // The two-element list is exactly: antichain, 1<2, 2<1.
  std::vector<Poset> two = enumerate_posets(2);
  CHECK(std::count(two.begin(), two.end(), antichain_poset(2)) == 1);
  CHECK(std::count(two.begin(), two.end(), chain_poset(2)) == 1);
  CHECK(std::count(two.begin(), two.end(), validate(2, {{2, 1}})) == 1);
}

TEST_CASE("natural labeling and relabeling") {
  CHECK(is_naturally_labeled(chain_poset(4)));
  CHECK(is_naturally_labeled(validate(3, {{1, 3}, {2, 3}})));
  Poset rev = validate(2, {{2, 1}});
  CHECK(!is_naturally_labeled(rev));

  Relabeling r = naturally_relabel(rev);
  CHECK(r.changed);
  CHECK(r.poset == chain_poset(2));
  std::vector<int> expect = {1, 0};
  CHECK(r.old_to_new == expect);

  Relabeling id = naturally_relabel(chain_poset(3));
  CHECK(!id.changed);
  CHECK(id.poset == chain_poset(3));
}

TEST_CASE("linear extension picks smallest available label") {
  std::vector<int> e1 = {0, 1, 2};
  CHECK(linear_extension(validate(3, {{1, 3}, {2, 3}})) == e1);
  std::vector<int> e2 = {2, 0, 1};
  CHECK(linear_extension(validate(3, {{3, 1}, {3, 2}})) == e2);
}

TEST_CASE("relation pattern with two below and two above") {
  CHECK(contains_x_poset(validate(5, {{1, 3}, {2, 3}, {3, 4}, {3, 5}})));
  CHECK(!contains_x_poset(validate(3, {{1, 3}, {2, 3}})));
  // Diamond: no single element has two strictly below and two strictly above.
  CHECK(!contains_x_poset(validate(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}})));
  CHECK(!contains_x_poset(chain_poset(5)));
  // Incomparable pair below but only a chain above: not the induced pattern.
  CHECK(!contains_x_poset(validate(5, {{1, 3}, {2, 3}, {3, 4}, {4, 5}})));
}

TEST_CASE("poset json round trip") {
  Poset p = poset_from_json_text("{\"n\":3,\"covers\":[[1,3],[2,3]]}");
  CHECK(p == validate(3, {{1, 3}, {2, 3}}));
  nlohmann::ordered_json j = poset_to_json(p);
  CHECK(j["n"] == 3);
  CHECK(j["covers"].size() == 2);
  CHECK(poset_from_json(j) == p);

  CHECK_THROWS_AS(poset_from_json_text("not json"), std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json_text("{\"covers\":[]}"), std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json_text("{\"n\":2,\"covers\":[[1]]}"), std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json_text("{\"n\":2,\"covers\":[[1,2],[2,1]]}"),
                  std::invalid_argument);
}

TEST_CASE("subset families and ideal operations") {
  Poset p = validate(3, {{1, 3}, {2, 3}});  // 1,2 < 3
  CHECK(filters(p).members.size() == 5);
  CHECK(poset_ideals(p).members.size() == 5);
  CHECK(antichains(p).members.size() == 5);
  CHECK(min_of(p, full_set(3)) == (subset_bit(0) | subset_bit(1)));
  CHECK(max_of(p, full_set(3)) == subset_bit(2));

  // I = {1,3}... not an ideal here; the ideals are {}, {1}, {2}, {1,2}, {1,2,3}.
  Subset i = subset_bit(0), j = subset_bit(1);
  IdealOps ops = ideal_ops(p, i, j);
  CHECK(ops.union_ == (subset_bit(0) | subset_bit(1)));
  CHECK(ops.intersection == 0);
  CHECK(ops.star == 0);
  CHECK_THROWS_AS(ideal_ops(p, subset_bit(2), i), std::invalid_argument);

  CHECK(comax(p, full_set(3)) == (subset_bit(0) | subset_bit(1)));
  CHECK(ideal_generated_by(p, subset_bit(2)) == full_set(3));
}

TEST_CASE("structural sweeps over all small posets") {
  // Duality is an involution and the three subset families are equinumerous;
  // filters are exactly the complements of ideals.
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      CHECK(dual(dual(p)) == p);
      std::vector<Subset> fs = filters(p).members;
      std::vector<Subset> is = poset_ideals(p).members;
      CHECK(fs.size() == is.size());
      CHECK(is.size() == antichains(p).members.size());
      std::set<Subset> complements;
      for (Subset i : is) complements.insert(full_set(n) & ~i);
      CHECK(complements == std::set<Subset>(fs.begin(), fs.end()));
    }

  // For incomparable ideal pairs: I*J within I∩J within I within I∪J, and the
  // four membership conditions agree for every admissible element.
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      std::vector<Subset> ideals = poset_ideals(p).members;
      for (Subset i : ideals)
        for (Subset j : ideals) {
          if (i == j || (i & j) == i || (i & j) == j) continue;
          IdealOps ops = ideal_ops(p, i, j);
          CHECK((ops.star & ops.intersection) == ops.star);
          CHECK((ops.intersection & i) == ops.intersection);
          CHECK((i & ops.union_) == i);
        }
      for (Subset i : ideals)
        for (Subset j : ideals) {
          Subset candidates = max_of(p, i) & ~max_of(p, j);
          for (int e : subset_elements(candidates)) {
            std::array<bool, 4> c = four_conditions(p, e, i, j);
            CHECK(c[0] == c[1]);
            CHECK(c[1] == c[2]);
            CHECK(c[2] == c[3]);
          }
        }
    }
}

TEST_CASE("chain data of the three-element example") {
  Poset p = validate(3, {{1, 3}, {2, 3}});
  ChainData cd = chains(p);
  // Saturated chains ending at the unique maximal element 3: (3), (1,3), (2,3).
  CHECK(cd.saturated_to_max.size() == 3);
  // Maximal chains: (1,3), (2,3).
  CHECK(cd.maximal.size() == 2);
  std::vector<Int> by_len = {0, 2};
  CHECK(cd.mc_by_length == by_len);

  ChainData cc = chains(chain_poset(3));
  CHECK(cc.saturated_to_max.size() == 3);  // (3), (2,3), (1,2,3)
  CHECK(cc.maximal.size() == 1);
}
