#include "pp/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "pp/counting.hpp"
#include "pp/facets.hpp"
#include "pp/partitions.hpp"
#include "pp/points.hpp"
#include "pp/polynomial.hpp"
#include "pp/subsets.hpp"
#include "pp/toric.hpp"

namespace pp {
namespace {

struct Checker {
  bool ok = true;
  int failures = 0;
  std::ostringstream detail;

  void fail(const std::string& what) {
    ++failures;
    if (failures <= 5) {
      if (failures > 1) detail << "; ";
      detail << what;
    } else if (failures == 6) {
      detail << "; ...";
    }
    ok = false;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

CheckResult run_check(int id, const std::string& name, double budget,
                      const std::function<void(Checker&)>& body) {
  CheckResult r;
  r.id = id;
  r.name = name;
  r.budget_seconds = budget;
  Checker c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget > 0 && r.seconds > budget) {
    std::ostringstream t;
    t << "over time budget (" << r.seconds << "s > " << budget << "s)";
    c.fail(t.str());
  }
  r.pass = c.ok;
  r.details = c.detail.str();
  return r;
}

std::string tag(const Poset& p, int index) {
  std::ostringstream s;
  s << "poset n=" << p.n << " #" << index;
  return s.str();
}

RationalPolynomial quadratic_13_polynomial() {
  RationalPolynomial q;
  q.coeffs = {Rational(1), Rational(2), Rational(2)};  // 2m^2 + 2m + 1
  return q;
}

}  // namespace

Poset two_chain() { return chain_poset(2); }

Poset wedge_poset() { return validate(3, {{1, 3}, {2, 3}}); }

std::vector<CheckResult> run_acceptance() {
  std::vector<CheckResult> out;

  out.push_back(run_check(1, "two-chain enriched counts match", 1.0, [](Checker& c) {
    Poset p = two_chain();
    RationalPolynomial expected = quadratic_13_polynomial();
    c.expect(left_enriched_polynomial(p) == expected,
             "left enriched polynomial is not 2m^2+2m+1");
    c.expect(ehrhart(p, PolytopeKind::EOrder) == expected,
             "enriched order Ehrhart polynomial is not 2m^2+2m+1");
    c.expect(count_left_enriched(p, 2) == 13, "left enriched count at m=2 is not 13");
    c.expect(count_dilation(p, PolytopeKind::EOrder, 2) == 13,
             "dilation count at m=2 is not 13");
    SetDifferenceReport d = set_difference_demo(p, 2);
    std::vector<std::vector<int>> maps_only = {{-1, -2}, {1, -2}};
    std::vector<std::vector<int>> points_only = {{-1, 0}, {1, 0}};
    c.expect(d.only_partitions == maps_only, "maps-minus-points difference is wrong");
    c.expect(d.only_dilation == points_only, "points-minus-maps difference is wrong");
  }));

  out.push_back(run_check(2, "three-element example Ehrhart and facet counts", 1.0,
                          [](Checker& c) {
    Poset p = wedge_poset();
    RationalPolynomial expected = binomial_basis(3, 3) +
                                  Rational(7) * binomial_basis(2, 3) +
                                  Rational(7) * binomial_basis(1, 3) + binomial_basis(0, 3);
    c.expect(ehrhart(p, PolytopeKind::EOrder) == expected,
             "enriched order Ehrhart mismatch");
    c.expect(ehrhart(dual(p), PolytopeKind::EOrder) == expected,
             "dual enriched order Ehrhart mismatch");
    c.expect(ehrhart(p, PolytopeKind::EOrderDualForm) == expected,
             "dual-form Ehrhart mismatch");
    c.expect(facets(p, PolytopeKind::EOrder).size() == 5, "facet count of P is not 5");
    c.expect(facets(dual(p), PolytopeKind::EOrder).size() == 6,
             "facet count of the dual is not 6");
    c.expect(facets(p, PolytopeKind::EOrderDualForm).size() == 6,
             "dual-form facet count is not 6");
  }));

  out.push_back(run_check(3, "enriched polynomial four-way agreement (n <= 4)", 120.0,
                          [](Checker& c) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<Poset> all = enumerate_posets(n);
      for (std::size_t i = 0; i < all.size(); ++i) {
        Poset q = naturally_relabel(all[i]).poset;
        RationalPolynomial a = ehrhart(q, PolytopeKind::EOrder);
        if (!(a == ehrhart(dual(q), PolytopeKind::EOrder)))
          c.fail("dual Ehrhart differs: " + tag(q, (int)i));
        if (!(a == ehrhart(q, PolytopeKind::EChain)))
          c.fail("enriched chain Ehrhart differs: " + tag(q, (int)i));
        if (!(a == left_enriched_polynomial(q)))
          c.fail("left enriched polynomial differs: " + tag(q, (int)i));
      }
    }
  }));

  out.push_back(run_check(4, "S-pair reduction for all generator families", 300.0,
                          [](Checker& c) {
    auto verify_families = [&](const Poset& p, int index,
                               const std::vector<RingKind>& kinds) {
      for (RingKind kind : kinds) {
        ToricRing ring = build_ring(p, kind);
        std::vector<Binomial> gens = generators(ring);
        MonomialOrder ord = order_for(ring);
        GroebnerReport rep = buchberger_verify(gens, ord);
        if (!rep.pass())
          c.fail(std::string(ring_kind_name(kind)) + " S-pair failure: " + tag(p, index));
        InitialIdeal init = initial_ideal(ring, gens, ord);
        if (!(init.squarefree && init.quadratic && init.origin_free))
          c.fail(std::string(ring_kind_name(kind)) + " initial-ideal flags: " + tag(p, index));
      }
    };
    std::vector<Poset> all3 = enumerate_posets(3);
    for (std::size_t i = 0; i < all3.size(); ++i)
      verify_families(all3[i], (int)i,
                      {RingKind::O, RingKind::C, RingKind::Oe, RingKind::Ce});
    std::vector<Poset> all4 = enumerate_posets(4);
    for (std::size_t i = 0; i < all4.size(); ++i)
      verify_families(all4[i], (int)i, {RingKind::O, RingKind::C});

    // One flipped tail sign must break at least one S-pair reduction.
    ToricRing ring = build_ring(wedge_poset(), RingKind::Oe);
    std::vector<Binomial> gens = generators(ring);
    MonomialOrder ord = order_for(ring);
    bool found = false;
    for (std::size_t g = 0; g < gens.size() && !found; ++g)
      for (std::size_t t = 0; t < gens[g].tail.size() && !found; ++t) {
        const ToricVariable& tv = ring.vars[gens[g].tail[t]];
        Subset mx = max_of(ring.poset, tv.ideal);
        if (mx == 0) continue;
        std::vector<Binomial> mutated = gens;
        mutated[g].tail[t] = ring.var_index(tv.ideal, tv.neg ^ (mx & -mx));
        std::sort(mutated[g].tail.begin(), mutated[g].tail.end());
        if (!buchberger_verify(mutated, ord).pass()) found = true;
      }
    c.expect(found, "no single sign flip produced a failing S-pair");
  }));

  out.push_back(run_check(5, "initial ideal bijection between ring pairs", 0.0,
                          [](Checker& c) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<Poset> all = enumerate_posets(n);
      for (std::size_t i = 0; i < all.size(); ++i)
        if (!initial_isomorphism_check(all[i], RingKind::O, RingKind::C))
          c.fail("order/chain bijection fails: " + tag(all[i], (int)i));
    }
    for (int n = 1; n <= 3; ++n) {
      std::vector<Poset> all = enumerate_posets(n);
      for (std::size_t i = 0; i < all.size(); ++i)
        if (!initial_isomorphism_check(all[i], RingKind::Oe, RingKind::Ce))
          c.fail("enriched bijection fails: " + tag(all[i], (int)i));
    }
  }));

  out.push_back(run_check(6, "standard monomial counts equal dilation counts", 0.0,
                          [](Checker& c) {
    for (int n = 1; n <= 3; ++n) {
      std::vector<Poset> all = enumerate_posets(n);
      for (std::size_t i = 0; i < all.size(); ++i) {
        ToricRing ring = build_ring(all[i], RingKind::Oe);
        InitialIdeal init = initial_ideal(ring, generators(ring), order_for(ring));
        for (int d = 0; d <= 2; ++d)
          if (standard_monomial_count(ring, init, d) !=
              count_dilation(all[i], PolytopeKind::EOrderDualForm, d))
            c.fail("degree " + std::to_string(d) + " mismatch: " + tag(all[i], (int)i));
      }
    }
    Poset v = dual(wedge_poset());
    ToricRing ring = build_ring(v, RingKind::Oe);
    InitialIdeal init = initial_ideal(ring, generators(ring), order_for(ring));
    Int want[3] = {1, 11, 45};
    for (int d = 0; d <= 2; ++d)
      c.expect(standard_monomial_count(ring, init, d) == want[d],
               "three-element example standard count at degree " + std::to_string(d));
  }));

  out.push_back(run_check(7, "facet systems verified and counted (n <= 4, formulas n <= 5)",
                          0.0, [](Checker& c) {
    const PolytopeKind kinds[] = {PolytopeKind::Order, PolytopeKind::Chain,
                                  PolytopeKind::EOrder, PolytopeKind::EChain,
                                  PolytopeKind::EOrderDualForm};
    for (int n = 1; n <= 4; ++n) {
      std::vector<Poset> all = enumerate_posets(n);
      for (std::size_t i = 0; i < all.size(); ++i) {
        const Poset& p = all[i];
        for (PolytopeKind kind : kinds) {
          FacetSystemReport rep = verify_facet_system(p, kind);
          if (!rep.pass())
            c.fail(std::string(kind_name(kind)) + " system fails: " + tag(p, (int)i) +
                   " (" + rep.detail + ")");
        }
        FacetFormulas f = facet_count_formulas(p);
        if ((Int)facets(p, PolytopeKind::Order).size() != f.f_order ||
            (Int)facets(p, PolytopeKind::Chain).size() != f.f_chain ||
            (Int)facets(p, PolytopeKind::EOrder).size() != f.f_eorder ||
            (Int)facets(p, PolytopeKind::EChain).size() != f.f_echain ||
            (Int)facets(p, PolytopeKind::EOrderDualForm).size() !=
                facet_count_formulas(dual(p)).f_eorder)
          c.fail("formula/enumeration mismatch: " + tag(p, (int)i));
      }
    }
    for (int n = 1; n <= 5; ++n) {
      std::vector<Poset> all = enumerate_posets(n);
      for (std::size_t i = 0; i < all.size(); ++i) {
        FacetFormulas f = facet_count_formulas(all[i]);
        if (f.f_eorder > f.f_echain)
          c.fail("enriched order exceeds enriched chain: " + tag(all[i], (int)i));
      }
    }
  }));

  out.push_back(run_check(8, "reflexivity and lattice-span pipeline", 0.0, [](Checker& c) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<Poset> all = enumerate_posets(n);
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (PolytopeKind kind : {PolytopeKind::EOrder, PolytopeKind::EChain}) {
          if (!reflexivity_check(all[i], kind))
            c.fail(std::string(kind_name(kind)) + " not reflexive: " + tag(all[i], (int)i));
          if (!integer_span_check(lattice_points(all[i], kind), n))
            c.fail(std::string(kind_name(kind)) + " span defect: " + tag(all[i], (int)i));
        }
      }
    }
    for (int n = 1; n <= 4; ++n) {
      std::vector<Poset> all = enumerate_posets(n);
      for (std::size_t i = 0; i < all.size(); ++i)
        for (RingKind kind : {RingKind::Oe, RingKind::Ce}) {
          ToricRing ring = build_ring(all[i], kind);
          InitialIdeal init = initial_ideal(ring, generators(ring), order_for(ring));
          if (!(init.squarefree && init.quadratic && init.origin_free))
            c.fail(std::string(ring_kind_name(kind)) + " flag defect: " + tag(all[i], (int)i));
        }
    }
  }));

  out.push_back(run_check(9, "antichain and pattern characterizations", 0.0, [](Checker& c) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<Poset> all = enumerate_posets(n);
      for (std::size_t i = 0; i < all.size(); ++i) {
        bool is_antichain = all[i].covers.empty();
        bool symmetric = central_symmetry_check(lattice_points(all[i], PolytopeKind::EOrder));
        FacetFormulas f = facet_count_formulas(all[i]);
        bool equal_counts = f.f_eorder == f.f_echain;
        if (is_antichain != symmetric || symmetric != equal_counts)
          c.fail("antichain characterization breaks: " + tag(all[i], (int)i));
      }
    }
    for (int n = 1; n <= 5; ++n) {
      std::vector<Poset> all = enumerate_posets(n);
      for (std::size_t i = 0; i < all.size(); ++i) {
        FacetFormulas f = facet_count_formulas(all[i]);
        if (contains_x_poset(all[i]) != (f.f_order != f.f_chain))
          c.fail("pattern characterization breaks: " + tag(all[i], (int)i));
      }
    }
  }));

  out.push_back(run_check(10, "facet count maxima and bounds (n <= 5)", 600.0,
                          [](Checker& c) {
    const Int expected_eorder[] = {2, 4, 6, 10, 15};
    for (int n = 1; n <= 5; ++n) {
      Int best_eorder = 0, best_echain = 0;
      for (const Poset& p : enumerate_posets(n)) {
        FacetFormulas f = facet_count_formulas(p);
        best_eorder = std::max(best_eorder, f.f_eorder);
        best_echain = std::max(best_echain, f.f_echain);
      }
      FacetBounds b = max_facet_bounds(n);
      if (best_eorder != expected_eorder[n - 1])
        c.fail("enriched order maximum at n=" + std::to_string(n));
      if (best_eorder != b.eorder_bound)
        c.fail("enriched order bound not tight at n=" + std::to_string(n));
      if (best_echain != (Int(1) << n) || best_echain != b.echain_bound)
        c.fail("enriched chain maximum at n=" + std::to_string(n));
      if (facet_count_formulas(chain_poset(n)).f_echain != best_echain)
        c.fail("chain does not attain the enriched chain maximum at n=" + std::to_string(n));
    }
    c.expect(facet_count_formulas(ordinal_sum({2, 2})).f_eorder == 10,
             "stacked antichains miss the n=4 maximum");
    c.expect(facet_count_formulas(ordinal_sum({2, 3})).f_eorder == 15,
             "stacked antichains miss the n=5 maximum");
  }));

  return out;
}

std::vector<CheckResult> run_paper_examples() {
  std::vector<CheckResult> out;
  auto example = [&](const std::string& name, const std::function<void(Checker&)>& body) {
    out.push_back(run_check(0, name, 0.0, body));
  };

  example("dual of the three-element example", [](Checker& c) {
    c.expect(dual(wedge_poset()) == validate(3, {{3, 1}, {3, 2}}), "dual covers wrong");
  });

  example("minimal elements of the three-element example", [](Checker& c) {
    c.expect(min_of(wedge_poset(), full_set(3)) == (subset_bit(0) | subset_bit(1)),
             "minimal set is not {1,2}");
  });

  example("induced-pattern detection", [](Checker& c) {
    Poset x = validate(5, {{1, 3}, {2, 3}, {3, 4}, {3, 5}});
    c.expect(contains_x_poset(x), "five-element pattern not detected");
    c.expect(!contains_x_poset(wedge_poset()), "false positive on three elements");
    c.expect(!contains_x_poset(chain_poset(5)), "false positive on the five-chain");
  });

  example("natural labeling of the three-element example", [](Checker& c) {
    c.expect(is_naturally_labeled(wedge_poset()), "should be naturally labeled");
  });

  example("four equivalent ideal conditions (n <= 3)", [](Checker& c) {
    for (int n = 1; n <= 3; ++n)
      for (const Poset& p : enumerate_posets(n)) {
        std::vector<Subset> ideals = poset_ideals(p).members;
        for (Subset i : ideals)
          for (Subset j : ideals) {
            Subset candidates = max_of(p, i) & ~max_of(p, j);
            for (int e : subset_elements(candidates)) {
              auto f = four_conditions(p, e, i, j);
              if (!(f[0] == f[1] && f[1] == f[2] && f[2] == f[3]))
                c.fail("conditions diverge at n=" + std::to_string(n));
            }
          }
      }
  });

  example("two-chain dilation point lists", [](Checker& c) {
    Poset p = two_chain();
    std::vector<Point> expected = {{-2, 2}, {-1, 0}, {-1, 1}, {-1, 2}, {0, -2},
                                   {0, -1}, {0, 0},  {0, 1},  {0, 2},  {1, 0},
                                   {1, 1},  {1, 2},  {2, 2}};
    c.expect(list_dilation_points(p, PolytopeKind::EOrder, 2) == expected,
             "13-point dilation list differs");
    std::vector<std::vector<int>> maps = list_left_enriched(p, 1);
    std::vector<Point> points = list_dilation_points(p, PolytopeKind::EOrder, 1);
    c.expect(maps == points, "maps and points differ at m=1");
  });

  example("two-chain polynomial", [](Checker& c) {
    Poset p = two_chain();
    c.expect(left_enriched_polynomial(p) == quadratic_13_polynomial(),
             "left enriched polynomial differs");
    c.expect(count_left_enriched(p, 2) == 13, "count at m=2 is not 13");
    c.expect(is_left_enriched(p, {-2, 2}), "(-2,2) should be accepted");
    c.expect(!is_left_enriched(p, {2, -2}), "(2,-2) should be rejected");
  });

  example("three-element Ehrhart values", [](Checker& c) {
    Poset p = wedge_poset();
    RationalPolynomial e = ehrhart(p, PolytopeKind::EOrder);
    c.expect(e.eval(1) == 11, "value 11 at m=1");
    c.expect(e.eval(2) == 45, "value 45 at m=2");
    c.expect(e == ehrhart(dual(p), PolytopeKind::EOrder), "dual polynomial differs");
  });

  example("three-element facet counts", [](Checker& c) {
    Poset p = wedge_poset();
    FacetFormulas f = facet_count_formulas(p);
    c.expect(f.sc == 3 && f.mc == 2 && f.f_eorder == 5, "sc+mc should give 5");
    c.expect(facets(p, PolytopeKind::EOrder).size() == 5, "5 halfspaces");
    c.expect(facets(dual(p), PolytopeKind::EOrder).size() == 6, "dual has 6 halfspaces");
  });

  example("antichain facet counts", [](Checker& c) {
    for (int n = 1; n <= 4; ++n) {
      FacetFormulas f = facet_count_formulas(antichain_poset(n));
      c.expect(f.f_eorder == 2 * n && f.f_echain == 2 * n,
               "antichain counts at n=" + std::to_string(n));
    }
  });

  example("chain enriched-chain facet counts", [](Checker& c) {
    for (int n = 1; n <= 5; ++n)
      c.expect(facet_count_formulas(chain_poset(n)).f_echain == (Int(1) << n),
               "2^n halfspaces at n=" + std::to_string(n));
    c.expect(facets(chain_poset(4), PolytopeKind::EChain).size() == 16,
             "enumerated 2^4 halfspaces");
  });

  example("central symmetry", [](Checker& c) {
    for (int n = 1; n <= 3; ++n)
      for (const Poset& p : enumerate_posets(n))
        if (!central_symmetry_check(lattice_points(p, PolytopeKind::EChain)))
          c.fail("enriched chain points must be symmetric");
    c.expect(central_symmetry_check(lattice_points(antichain_poset(2), PolytopeKind::EOrder)),
             "antichain points symmetric");
    c.expect(!central_symmetry_check(lattice_points(two_chain(), PolytopeKind::EOrder)),
             "two-chain points are not symmetric");
  });

  example("facet bound values", [](Checker& c) {
    c.expect(max_facet_bounds(3).mu == 3, "clique bound at n=3");
    c.expect(max_facet_bounds(4).eorder_bound == 10, "bound 10 at n=4");
    c.expect(max_facet_bounds(5).eorder_bound == 15, "bound 15 at n=5");
    c.expect(facet_count_formulas(ordinal_sum({2, 2})).f_eorder == 10,
             "stacked antichains attain 10");
  });

  example("eleven-variable ring and standard counts", [](Checker& c) {
    Poset v = dual(wedge_poset());
    ToricRing ring = build_ring(v, RingKind::Oe);
    c.expect(ring.vars.size() == 11, "ring should have 11 variables");
    InitialIdeal init = initial_ideal(ring, generators(ring), order_for(ring));
    c.expect(standard_monomial_count(ring, init, 1) == 11, "11 standard monomials at degree 1");
    c.expect(standard_monomial_count(ring, init, 2) == 45, "45 standard monomials at degree 2");
  });

  example("lead monomials beat tails", [](Checker& c) {
    for (RingKind kind : {RingKind::O, RingKind::C, RingKind::Oe, RingKind::Ce}) {
      ToricRing ring = build_ring(wedge_poset(), kind);
      MonomialOrder ord = order_for(ring);
      for (const Binomial& g : generators(ring))
        if (ord.compare(g.lead, g.tail) <= 0)
          c.fail(std::string(ring_kind_name(kind)) + " lead not larger");
    }
  });

  return out;
}

}  // namespace pp
