#include "pp/toric.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace pp {

const char* ring_kind_name(RingKind k) {
  switch (k) {
    case RingKind::O: return "O";
    case RingKind::C: return "C";
    case RingKind::Oe: return "Oe";
    case RingKind::Ce: return "Ce";
  }
  return "?";
}

bool is_enriched_kind(RingKind k) { return k == RingKind::Oe || k == RingKind::Ce; }

namespace {

std::uint64_t var_key(Subset ideal, Subset neg) {
  return (std::uint64_t(ideal) << 32) | std::uint64_t(neg);
}

// Sign-vector lex with -1 < 0 < +1: at the lowest position where two sign
// masks differ, the one carrying the -1 comes first.
bool neg_lex_less(Subset a, Subset b) {
  Subset d = a ^ b;
  if (d == 0) return false;
  return subset_contains(a, __builtin_ctz(d));
}

}  // namespace

int ToricRing::var_index(Subset ideal, Subset neg) const {
  auto it = index.find(var_key(ideal, neg));
  if (it == index.end()) throw std::logic_error("unknown ring variable requested");
  return it->second;
}

Subset ToricRing::support(int v) const {
  const ToricVariable& tv = vars[v];
  if (kind == RingKind::O || kind == RingKind::Oe) return tv.ideal;
  return max_of(poset, tv.ideal);
}

std::string ToricRing::var_name(int v) const {
  const ToricVariable& tv = vars[v];
  std::string out = "x" + subset_to_string(support(v));
  Subset signed_part = max_of(poset, tv.ideal);
  if (is_enriched_kind(kind) && signed_part != 0) {
    out += "^(";
    bool first = true;
    for (int i : subset_elements(signed_part)) {
      if (!first) out += ",";
      out += subset_contains(tv.neg, i) ? "-" : "+";
      first = false;
    }
    out += ")";
  }
  return out;
}

ToricRing build_ring(const Poset& p, RingKind kind) {
  ToricRing ring;
  ring.kind = kind;
  ring.poset = p;
  for (Subset ideal : poset_ideals(p).members) {
    Subset mx = max_of(p, ideal);
    std::vector<Subset> negs;
    if (is_enriched_kind(kind)) {
      for (Subset neg = mx;; neg = (neg - 1) & mx) {
        negs.push_back(neg);
        if (neg == 0) break;
      }
      std::sort(negs.begin(), negs.end(), neg_lex_less);
    } else {
      negs.push_back(0);
    }
    for (Subset neg : negs) {
      ToricVariable tv{ideal, neg};
      std::vector<int> t(p.n, 0);
      Subset supp = (kind == RingKind::O || kind == RingKind::Oe) ? ideal : mx;
      for (int i : subset_elements(supp)) t[i] = subset_contains(neg, i) ? -1 : 1;
      ring.index[var_key(ideal, neg)] = (int)ring.vars.size();
      ring.vars.push_back(tv);
      ring.texp.push_back(std::move(t));
    }
  }
  return ring;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
  std::size_t i = 0;
  for (int v : d) {
    while (i < m.size() && m[i] < v) ++i;
    if (i == m.size() || m[i] != v) return false;
    ++i;
  }
  return true;
}

Monomial mono_quotient(const Monomial& m, const Monomial& d) {
  Monomial q;
  q.reserve(m.size() - d.size());
  std::size_t i = 0;
  for (int v : m) {
    if (i < d.size() && d[i] == v) {
      ++i;
      continue;
    }
    q.push_back(v);
  }
  return q;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      m.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      m.push_back(b[j++]);
    } else {
      m.push_back(a[i++]);
      ++j;
    }
  }
  return m;
}

std::string mono_to_string(const ToricRing& ring, const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += "*";
    out += ring.var_name(m[i]);
  }
  return out;
}

ToricImage toric_map(const ToricRing& ring, const Monomial& m) {
  ToricImage img;
  img.t.assign(ring.poset.n, 0);
  img.s = (Int)m.size();
  for (int v : m)
    for (int i = 0; i < ring.poset.n; ++i) img.t[i] += ring.texp[v][i];
  return img;
}

namespace {

enum class Slot { Zero, One, Free };

Slot slot_of(const ToricRing& ring, Subset ideal, Subset mx, int q) {
  if (subset_contains(mx, q)) return Slot::Free;
  bool in_support = (ring.kind == RingKind::Oe) ? subset_contains(ideal, q) : false;
  return in_support ? Slot::One : Slot::Zero;
}

// Unique sign masks making var(U)*var(S) balance against the lead image sigma.
std::pair<Subset, Subset> balanced_tail_signs(const ToricRing& ring, Subset u_ideal,
                                              Subset s_ideal, const std::vector<int>& sigma) {
  const Poset& p = ring.poset;
  Subset u_max = max_of(p, u_ideal), s_max = max_of(p, s_ideal);
  Subset neg_u = 0, neg_s = 0;
  for (int q = 0; q < p.n; ++q) {
    Slot su = slot_of(ring, u_ideal, u_max, q);
    Slot ss = slot_of(ring, s_ideal, s_max, q);
    int fixed = (su == Slot::One ? 1 : 0) + (ss == Slot::One ? 1 : 0);
    int frees = (su == Slot::Free ? 1 : 0) + (ss == Slot::Free ? 1 : 0);
    int r = sigma[q] - fixed;
    if (frees == 0) {
      if (r != 0) throw std::logic_error("tail signs: unbalanced fixed position");
    } else if (frees == 1) {
      if (r != 1 && r != -1) throw std::logic_error("tail signs: single free slot needs ±1");
      if (r == -1) (su == Slot::Free ? neg_u : neg_s) |= subset_bit(q);
    } else {
      if (r != 2 && r != -2) throw std::logic_error("tail signs: double free slot needs ±2");
      if (r == -2) {
        neg_u |= subset_bit(q);
        neg_s |= subset_bit(q);
      }
    }
  }
  return {neg_u, neg_s};
}

void check_balance(const ToricRing& ring, const Binomial& b) {
  if (!(toric_map(ring, b.lead) == toric_map(ring, b.tail)))
    throw std::logic_error("generator is not balanced under the toric map: " +
                           mono_to_string(ring, b.lead) + " vs " + mono_to_string(ring, b.tail));
}

Monomial sorted_pair(int a, int b) {
  return a <= b ? Monomial{a, b} : Monomial{b, a};
}

// Variable obtained by removing one shared maximal element from a variable's
// antichain/ideal, keeping the remaining signs.
int drop_element(const ToricRing& ring, int v, int p_elem) {
  const ToricVariable& tv = ring.vars[v];
  Subset neg = tv.neg & ~subset_bit(p_elem);
  if (ring.kind == RingKind::Oe) return ring.var_index(tv.ideal & ~subset_bit(p_elem), neg);
  Subset antichain = max_of(ring.poset, tv.ideal) & ~subset_bit(p_elem);
  return ring.var_index(ideal_generated_by(ring.poset, antichain), neg);
}

}  // namespace

std::vector<Binomial> generators(const ToricRing& ring) {
  const Poset& p = ring.poset;
  std::vector<Binomial> out;
  std::vector<Subset> ideals = poset_ideals(p).members;

  auto incomparable = [](Subset a, Subset b) {
    return (a & ~b) != 0 && (b & ~a) != 0;
  };

  if (!is_enriched_kind(ring.kind)) {
    for (std::size_t i = 0; i < ideals.size(); ++i)
      for (std::size_t j = i + 1; j < ideals.size(); ++j) {
        if (!incomparable(ideals[i], ideals[j])) continue;
        IdealOps ops = ideal_ops(p, ideals[i], ideals[j]);
        Subset small = (ring.kind == RingKind::O) ? ops.intersection : ops.star;
        Binomial b{sorted_pair(ring.var_index(ideals[i], 0), ring.var_index(ideals[j], 0)),
                   sorted_pair(ring.var_index(ops.union_, 0), ring.var_index(small, 0))};
        check_balance(ring, b);
        out.push_back(std::move(b));
      }
    return out;
  }

  // Sign collisions: two variables sharing a maximal element with opposite
  // signs there; the shared element is removed on the tail.  I = J allowed.
  int nv = (int)ring.vars.size();
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      Subset common = max_of(p, ring.vars[a].ideal) & max_of(p, ring.vars[b].ideal);
      for (int q : subset_elements(common)) {
        if (subset_contains(ring.vars[a].neg, q) == subset_contains(ring.vars[b].neg, q))
          continue;
        Binomial bin{sorted_pair(a, b),
                     sorted_pair(drop_element(ring, a, q), drop_element(ring, b, q))};
        check_balance(ring, bin);
        out.push_back(std::move(bin));
      }
    }

  // Incomparable pairs with lead signs agreeing on the shared maximal
  // elements; tail signs are forced by balance.
  std::map<Subset, std::vector<int>> vars_of;
  for (int v = 0; v < nv; ++v) vars_of[ring.vars[v].ideal].push_back(v);
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      if (!incomparable(ideals[i], ideals[j])) continue;
      Subset common = max_of(p, ideals[i]) & max_of(p, ideals[j]);
      IdealOps ops = ideal_ops(p, ideals[i], ideals[j]);
      Subset small = (ring.kind == RingKind::Oe) ? ops.intersection : ops.star;
      for (int u : vars_of[ideals[i]])
        for (int v : vars_of[ideals[j]]) {
          if (((ring.vars[u].neg ^ ring.vars[v].neg) & common) != 0) continue;
          std::vector<int> sigma(p.n);
          for (int q = 0; q < p.n; ++q) sigma[q] = ring.texp[u][q] + ring.texp[v][q];
          auto [neg_u, neg_s] = balanced_tail_signs(ring, ops.union_, small, sigma);
          Binomial bin{sorted_pair(u, v),
                       sorted_pair(ring.var_index(ops.union_, neg_u),
                                   ring.var_index(small, neg_s))};
          check_balance(ring, bin);
          out.push_back(std::move(bin));
        }
    }
  return out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (use_weights) {
    Rational wa = 0, wb = 0;
    for (int v : a) wa += weight_sharp[v];
    for (int v : b) wb += weight_sharp[v];
    if (wa != wb) return wa < wb ? -1 : 1;
    wa = 0;
    wb = 0;
    for (int v : a) wa += weight_second[v];
    for (int v : b) wb += weight_second[v];
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  // Reverse lex: at the smallest variable with differing exponent, the
  // monomial with the smaller exponent is the greater one.
  auto ranked = [&](const Monomial& m) {
    std::vector<std::pair<int, int>> r;  // (rank, exponent)
    for (int v : m) {
      int rk = rank[v];
      if (!r.empty() && r.back().first == rk) {
        ++r.back().second;
      } else {
        r.emplace_back(rk, 1);
      }
    }
    std::sort(r.begin(), r.end());
    return r;
  };
  std::vector<std::pair<int, int>> ra = ranked(a), rb = ranked(b);
  std::size_t i = 0, j = 0;
  constexpr int kNoVar = INT32_MAX;
  while (i < ra.size() || j < rb.size()) {
    int rka = i < ra.size() ? ra[i].first : kNoVar;
    int rkb = j < rb.size() ? rb[j].first : kNoVar;
    int ea = rka <= rkb ? ra[i].second : 0;
    int eb = rkb <= rka ? rb[j].second : 0;
    if (ea != eb) return ea < eb ? 1 : -1;
    if (rka <= rkb) ++i;
    if (rkb <= rka) ++j;
  }
  return 0;
}

MonomialOrder revlex_order(const ToricRing& ring) {
  std::vector<int> rank(ring.vars.size());
  for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = (int)i;
  return revlex_order(ring, std::move(rank));
}

MonomialOrder revlex_order(const ToricRing& ring, std::vector<int> rank) {
  MonomialOrder ord;
  ord.ring = &ring;
  ord.rank = std::move(rank);
  return ord;
}

std::vector<int> random_inclusion_extension(const ToricRing& ring, std::uint32_t seed) {
  std::mt19937 rng(seed);
  int nv = (int)ring.vars.size();
  std::vector<Subset> distinct_ideals;
  for (const auto& tv : ring.vars)
    if (distinct_ideals.empty() || distinct_ideals.back() != tv.ideal)
      if (std::find(distinct_ideals.begin(), distinct_ideals.end(), tv.ideal) ==
          distinct_ideals.end())
        distinct_ideals.push_back(tv.ideal);
  auto ideal_pos = [&](Subset ideal) {
    return (int)(std::find(distinct_ideals.begin(), distinct_ideals.end(), ideal) -
                 distinct_ideals.begin());
  };
  int ni = (int)distinct_ideals.size();
  std::vector<int> remaining(ni, 0);
  for (const auto& tv : ring.vars) ++remaining[ideal_pos(tv.ideal)];

  std::vector<int> rank(nv, -1);
  std::vector<bool> placed(nv, false);
  for (int pos = 0; pos < nv; ++pos) {
    std::vector<int> avail;
    for (int v = 0; v < nv; ++v) {
      if (placed[v]) continue;
      bool ready = true;
      for (int k = 0; k < ni; ++k) {
        Subset other = distinct_ideals[k];
        if (other != ring.vars[v].ideal && (other & ~ring.vars[v].ideal) == 0 &&
            remaining[k] > 0) {
          ready = false;
          break;
        }
      }
      if (ready) avail.push_back(v);
    }
    int v = avail[std::uniform_int_distribution<int>(0, (int)avail.size() - 1)(rng)];
    rank[v] = pos;
    placed[v] = true;
    --remaining[ideal_pos(ring.vars[v].ideal)];
  }
  return rank;
}

namespace {

// Reduce a single monomial to normal form against monic binomials; a monomial
// rewrites to a monomial at every step, so the result is one term.
Monomial reduce_monomial(Monomial m, const std::vector<Binomial>& gens) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : gens)
      if (mono_divides(g.lead, m)) {
        m = mono_mul(mono_quotient(m, g.lead), g.tail);
        changed = true;
        break;
      }
  }
  return m;
}

std::vector<Binomial> reduced_basis(std::vector<Binomial> gens) {
  // Deduplicate, keep one binomial per distinct lead, normalize tails against
  // the rest.  For the chain family the input is already reduced; this keeps
  // the computation honest rather than assuming it.
  std::sort(gens.begin(), gens.end(), [](const Binomial& a, const Binomial& b) {
    return a.lead != b.lead ? a.lead < b.lead : a.tail < b.tail;
  });
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const Binomial& a, const Binomial& b) {
                           return a.lead == b.lead && a.tail == b.tail;
                         }),
             gens.end());
  std::vector<Binomial> minimal;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.lead != g.lead ? mono_divides(h.lead, g.lead) : true) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  for (auto& g : minimal) {
    std::vector<Binomial> others;
    for (const auto& h : minimal)
      if (!(h.lead == g.lead)) others.push_back(h);
    g.tail = reduce_monomial(g.tail, others);
  }
  return minimal;
}

}  // namespace

std::vector<Rational> realize_chain_weights(const Poset& p) {
  ToricRing ring = build_ring(p, RingKind::C);
  std::vector<Binomial> basis = reduced_basis(generators(ring));
  int nv = (int)ring.vars.size();

  std::vector<std::vector<Rational>> constraints;  // w . d >= 1 per reduced binomial
  for (const auto& g : basis) {
    std::vector<Rational> d(nv, 0);
    for (int v : g.lead) d[v] += 1;
    for (int v : g.tail) d[v] -= 1;
    constraints.push_back(std::move(d));
  }

  auto satisfied = [&](const std::vector<Rational>& w) {
    for (const auto& d : constraints) {
      Rational dot = 0;
      for (int v = 0; v < nv; ++v) dot += w[v] * d[v];
      if (dot < 1) return false;
    }
    return true;
  };

  // Concave-in-ideal-size seed: w = |I| (2(n+1) - |I|).  Feasible for the
  // chain family since |I|+|J| >= |I∪J|+|I*J| with the outer pair spread.
  std::vector<Rational> w(nv);
  for (int v = 0; v < nv; ++v) {
    Int k = subset_card(ring.vars[v].ideal);
    w[v] = Rational(k * (2 * (p.n + 1) - k));
  }

  for (int iter = 0; iter < 20000 && !satisfied(w); ++iter) {
    for (const auto& d : constraints) {
      Rational dot = 0;
      for (int v = 0; v < nv; ++v) dot += w[v] * d[v];
      if (dot < 1)
        for (int v = 0; v < nv; ++v) {
          w[v] += d[v];
          if (w[v] < 0) w[v] = 0;
        }
    }
  }

  if (!satisfied(w)) {
    // Exact Fourier-Motzkin feasibility on {w >= 0, Cw >= 1}.
    std::vector<std::vector<Rational>> rows;  // coeffs..., rhs: sum coeff*w >= rhs
    for (const auto& d : constraints) {
      std::vector<Rational> r = d;
      r.push_back(1);
      rows.push_back(std::move(r));
    }
    for (int v = 0; v < nv; ++v) {
      std::vector<Rational> r(nv + 1, 0);
      r[v] = 1;
      rows.push_back(std::move(r));
    }
    std::vector<std::vector<std::vector<Rational>>> stages;
    for (int v = nv - 1; v >= 0; --v) {
      stages.push_back(rows);
      std::vector<std::vector<Rational>> lower, upper, rest;
      for (const auto& r : rows) {
        if (r[v] > 0) lower.push_back(r);       // w_v >= (rhs - rest)/coef
        else if (r[v] < 0) upper.push_back(r);  // w_v <= ...
        else rest.push_back(r);
      }
      for (const auto& lo : lower)
        for (const auto& up : upper) {
          std::vector<Rational> comb(nv + 1, 0);
          for (int c = 0; c <= nv; ++c) comb[c] = lo[c] * (-up[v]) + up[c] * lo[v];
          rest.push_back(std::move(comb));
        }
      rows = std::move(rest);
    }
    for (const auto& r : rows)
      if (r[nv] > 0) throw std::logic_error("chain weight system is infeasible");
    // Back-substitute from the recorded stages.
    std::fill(w.begin(), w.end(), Rational(0));
    for (int v = 0; v < nv; ++v) {
      const auto& stage = stages[nv - 1 - v];
      bool has_low = false;
      Rational low = 0;
      for (const auto& r : stage) {
        if (r[v] == 0) continue;
        Rational rest = r[nv];
        for (int c = v + 1; c <= nv - 1; ++c) rest -= r[c] * w[c];
        for (int c = 0; c < v; ++c) rest -= r[c] * w[c];
        Rational bound = rest / r[v];
        if (r[v] > 0) {
          if (!has_low || bound > low) {
            low = bound;
            has_low = true;
          }
        }
      }
      w[v] = has_low ? (low > 0 ? low : Rational(0)) : Rational(0);
    }
  }

  if (!satisfied(w))
    throw std::logic_error("chain weight realization failed the selection property");
  return w;
}

MonomialOrder weighted_ce_order(const ToricRing& ce_ring, const ToricRing& c_ring,
                                const std::vector<Rational>& chain_weights) {
  MonomialOrder ord = revlex_order(ce_ring);
  ord.use_weights = true;
  int nv = (int)ce_ring.vars.size();
  ord.weight_sharp.resize(nv);
  ord.weight_second.resize(nv);
  for (int v = 0; v < nv; ++v) {
    ord.weight_sharp[v] = Rational(subset_card(ce_ring.support(v)));
    ord.weight_second[v] = chain_weights[c_ring.var_index(ce_ring.vars[v].ideal, 0)];
  }
  return ord;
}

MonomialOrder order_for(const ToricRing& ring) {
  if (ring.kind != RingKind::Ce) return revlex_order(ring);
  static thread_local std::map<std::vector<Subset>, std::pair<ToricRing, std::vector<Rational>>>
      cache;
  auto key = ring.poset.above;
  auto it = cache.find(key);
  if (it == cache.end()) {
    ToricRing c_ring = build_ring(ring.poset, RingKind::C);
    std::vector<Rational> wc = realize_chain_weights(ring.poset);
    it = cache.emplace(key, std::make_pair(std::move(c_ring), std::move(wc))).first;
  }
  return weighted_ce_order(ring, it->second.first, it->second.second);
}

namespace {

struct MonoGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->compare(a, b) > 0;
  }
};

using Poly = std::map<Monomial, Rational, MonoGreater>;

void poly_add(Poly& p, const Monomial& m, const Rational& c) {
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  } else if (it->second == 0) {
    p.erase(it);
  }
}

}  // namespace

GroebnerReport buchberger_verify(const std::vector<Binomial>& gens, const MonomialOrder& order) {
  GroebnerReport rep;
  rep.generator_count = gens.size();
  if (gens.empty()) return rep;

  // Divisor lookup: leads are products of two variables; any monomial keeps
  // at most a handful of candidate pairs.
  std::unordered_map<std::uint64_t, int> lead_index;
  auto pair_key = [](int a, int b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint64_t(std::uint32_t(b));
  };
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].lead.size() != 2)
      throw std::invalid_argument("generator families are quadratic");
    lead_index.emplace(pair_key(gens[g].lead[0], gens[g].lead[1]), (int)g);
  }

  auto find_divisor = [&](const Monomial& m) -> int {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        auto it = lead_index.find(pair_key(m[i], m[j]));
        if (it != lead_index.end()) return it->second;
      }
    return -1;
  };

  // Remainder is nonzero as soon as the current lead term has no divisor.
  auto reduces_to_zero = [&](Poly h) {
    while (!h.empty()) {
      auto it = h.begin();
      Monomial m = it->first;
      Rational c = it->second;
      int g = find_divisor(m);
      if (g < 0) return false;
      h.erase(it);
      poly_add(h, mono_mul(mono_quotient(m, gens[g].lead), gens[g].tail), c);
    }
    return true;
  };

  MonoGreater cmp{&order};
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ++rep.pair_count;
      Monomial l = mono_lcm(gens[i].lead, gens[j].lead);
      Poly s(cmp);
      poly_add(s, mono_mul(mono_quotient(l, gens[j].lead), gens[j].tail), Rational(1));
      poly_add(s, mono_mul(mono_quotient(l, gens[i].lead), gens[i].tail), Rational(-1));
      if (!reduces_to_zero(std::move(s))) rep.failures.emplace_back(i, j);
    }
  return rep;
}

InitialIdeal initial_ideal(const ToricRing& ring, const std::vector<Binomial>& gens,
                           const MonomialOrder& order) {
  InitialIdeal init;
  std::set<Monomial> leads;
  for (const auto& g : gens) {
    if (order.compare(g.lead, g.tail) <= 0)
      throw std::logic_error("stated lead is not the larger monomial: " +
                             mono_to_string(ring, g.lead));
    leads.insert(g.lead);
  }
  std::vector<Monomial> sorted(leads.begin(), leads.end());
  std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& m : sorted) {
    bool redundant = false;
    for (const auto& kept : init.min_generators)
      if (mono_divides(kept, m)) {
        redundant = true;
        break;
      }
    if (redundant) continue;
    init.min_generators.push_back(m);
  }
  int origin = ring.origin_variable();
  for (const auto& m : init.min_generators) {
    if (m.size() != 2) init.quadratic = false;
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
      if (m[i] == m[i + 1]) init.squarefree = false;
    for (int v : m)
      if (v == origin) init.origin_free = false;
  }
  return init;
}

bool initial_isomorphism_check(const Poset& p, RingKind from, RingKind to) {
  bool classical = (from == RingKind::O && to == RingKind::C);
  bool enriched = (from == RingKind::Oe && to == RingKind::Ce);
  if (!classical && !enriched)
    throw std::invalid_argument("initial isomorphism applies to (O,C) and (Oe,Ce)");
  ToricRing r1 = build_ring(p, from);
  ToricRing r2 = build_ring(p, to);
  if (r1.vars.size() != r2.vars.size()) return false;
  MonomialOrder o1 = order_for(r1);
  MonomialOrder o2 = order_for(r2);
  InitialIdeal i1 = initial_ideal(r1, generators(r1), o1);
  InitialIdeal i2 = initial_ideal(r2, generators(r2), o2);
  std::set<Monomial> mapped;
  for (const auto& m : i1.min_generators) {
    Monomial img;
    for (int v : m) img.push_back(r2.var_index(r1.vars[v].ideal, r1.vars[v].neg));
    std::sort(img.begin(), img.end());
    mapped.insert(img);
  }
  std::set<Monomial> target(i2.min_generators.begin(), i2.min_generators.end());
  return mapped == target;
}

Int standard_monomial_count(const ToricRing& ring, const InitialIdeal& init, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  std::set<std::pair<int, int>> quad;
  std::vector<Monomial> general;
  for (const auto& m : init.min_generators) {
    if (m.size() == 2) quad.insert({m[0], m[1]});
    else general.push_back(m);
  }
  int nv = (int)ring.vars.size();
  Int count = 0;
  Monomial current;
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      for (const auto& g : general)
        if (mono_divides(g, current)) return;
      ++count;
      return;
    }
    for (int v = start; v < nv; ++v) {
      bool blocked = false;
      for (int u : current)
        if (quad.count({u, v})) {
          blocked = true;
          break;
        }
      if (blocked) continue;
      current.push_back(v);
      self(self, v, left - 1);
      current.pop_back();
    }
  };
  rec(rec, 0, degree);
  return count;
}

}  // namespace pp
