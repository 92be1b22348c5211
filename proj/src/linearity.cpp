#include "veronese/linearity.hpp"

#include <algorithm>
#include <unordered_set>

namespace veronese {

namespace {

int lex_sign(const Exps& a, const Exps& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int d = a[i] - b[i];
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

// revlex over a relabeled position order; +1 when a is greater.
int revlex_sign_perm(const Exps& a, const Exps& b, const std::vector<int>& order) {
  for (size_t i = order.size(); i-- > 0;) {
    int d = a[static_cast<size_t>(order[i])] - b[static_cast<size_t>(order[i])];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a);
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> complement_of(int nvars, const std::vector<int>& s) {
  std::vector<int> out;
  size_t k = 0;
  for (int v = 0; v < nvars; ++v) {
    while (k < s.size() && s[k] < v) ++k;
    if (k == s.size() || s[k] != v) out.push_back(v);
  }
  return out;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, OrderDirection dir) {
  if (a.nvars() != b.nvars()) throw SpecError("monomials live in different rings");
  if (dir == OrderDirection::descending_lex) return -lex_sign(a.exps(), b.exps());
  if (a.degree() != b.degree()) throw SpecError("revlex comparison needs equal total degrees");
  int s = revlex_sign(a.exps(), b.exps());
  return dir == OrderDirection::descending_revlex ? -s : s;
}

void sort_monomials(std::vector<Monomial>& mons, OrderDirection dir) {
  std::sort(mons.begin(), mons.end(), [dir](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return compare(a, b, dir) < 0;
  });
}

QuotientCertificate linear_quotients_in_order(const Ring& ring, const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.nvars() != ring.nvars()) throw SpecError("generator does not match ring");
  for (size_t i = 1; i < gens.size(); ++i)
    if (gens[i].degree() < gens[i - 1].degree())
      throw SpecError("linear quotient orders need nondecreasing degrees");

  QuotientCertificate cert;
  cert.ordered_gens = gens;
  cert.verdict = true;
  int n = ring.nvars();
  for (size_t i = 1; i < gens.size(); ++i) {
    std::vector<Monomial> quotients;
    quotients.reserve(i);
    for (size_t j = 0; j < i; ++j) quotients.push_back(colon_quotient(gens[j], gens[i]));
    // the colon has linear generators iff every quotient is divisible by a
    // variable that is itself a quotient
    std::vector<char> var_in_colon(static_cast<size_t>(n), 0);
    bool unit_colon = false;
    for (const auto& q : quotients) {
      if (q.is_one()) unit_colon = true;
      if (q.is_variable())
        for (int v = 0; v < n; ++v)
          if (q.exp(v) == 1) var_in_colon[static_cast<size_t>(v)] = 1;
    }
    bool ok = !unit_colon;
    if (ok) {
      for (const auto& q : quotients) {
        if (q.degree() <= 1) continue;
        bool covered = false;
        for (int v = 0; v < n && !covered; ++v)
          if (q.exp(v) > 0 && var_in_colon[static_cast<size_t>(v)]) covered = true;
        if (!covered) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::vector<Monomial> step;
      for (int v = 0; v < n; ++v)
        if (var_in_colon[static_cast<size_t>(v)]) step.push_back(Monomial::variable(n, v));
      cert.colon_steps.push_back(std::move(step));
    } else {
      cert.colon_steps.push_back(minimalize(std::move(quotients)));
      cert.verdict = false;
      cert.failing_index = static_cast<int>(i);
      return cert;
    }
  }
  return cert;
}

namespace {

std::vector<Monomial> sorted_copy(std::vector<Monomial> gens, OrderDirection dir) {
  sort_monomials(gens, dir);
  return gens;
}

}  // namespace

LinearQuotientsSearch search_linear_quotients(const MonomialIdeal& ideal, int exhaustive_cap) {
  if (ideal.is_zero()) throw SpecError("zero ideal has no generator order");
  const Ring& ring = ideal.ring();
  for (OrderDirection dir : {OrderDirection::descending_revlex, OrderDirection::ascending_revlex,
                             OrderDirection::descending_lex}) {
    auto cert = linear_quotients_in_order(ring, sorted_copy(ideal.gens(), dir));
    if (cert.verdict) return {std::move(cert), true};
  }
  if (ideal.ngens() > exhaustive_cap) return {std::nullopt, false};

  // all degree-respecting orders: permute within each degree class
  std::vector<std::vector<Monomial>> classes;
  for (const auto& g : ideal.gens()) {
    if (classes.empty() || classes.back().front().degree() != g.degree()) classes.push_back({});
    classes.back().push_back(g);
  }
  for (auto& c : classes) std::sort(c.begin(), c.end(), canonical_less);
  std::vector<std::vector<Monomial>> perm = classes;
  while (true) {
    std::vector<Monomial> order;
    for (const auto& c : perm) order.insert(order.end(), c.begin(), c.end());
    auto cert = linear_quotients_in_order(ring, order);
    if (cert.verdict) return {std::move(cert), true};
    // odometer: advance the last class, carrying resets leftward
    size_t k = perm.size();
    while (k > 0) {
      auto& c = perm[k - 1];
      if (std::next_permutation(c.begin(), c.end(), canonical_less)) break;
      --k;
    }
    if (k == 0) break;
  }
  return {std::nullopt, true};
}

PolymatroidalResult is_polymatroidal(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return {true, std::nullopt, std::nullopt};
  if (!ideal.is_equigenerated())
    return {false, std::nullopt, "generators span several degrees"};
  std::unordered_set<Exps, ExpsHash> members;
  for (const auto& g : ideal.gens()) members.insert(g.exps());
  int n = ideal.ring().nvars();
  const auto& gens = ideal.gens();
  Exps cand;
  for (size_t ui = 0; ui < gens.size(); ++ui) {
    for (size_t vi = 0; vi < gens.size(); ++vi) {
      if (ui == vi) continue;
      const Exps& u = gens[ui].exps();
      const Exps& v = gens[vi].exps();
      for (int i = 0; i < n; ++i) {
        if (u[static_cast<size_t>(i)] <= v[static_cast<size_t>(i)]) continue;
        bool found = false;
        std::vector<std::pair<int, Monomial>> tried;
        for (int j = 0; j < n && !found; ++j) {
          if (u[static_cast<size_t>(j)] >= v[static_cast<size_t>(j)]) continue;
          cand = u;
          --cand[static_cast<size_t>(i)];
          ++cand[static_cast<size_t>(j)];
          if (members.count(cand))
            found = true;
          else
            tried.emplace_back(j, Monomial(cand));
        }
        if (!found) {
          ExchangeWitness w{gens[ui], gens[vi], i, std::move(tried)};
          return {false, std::move(w), std::nullopt};
        }
      }
    }
  }
  return {true, std::nullopt, std::nullopt};
}

bool exchange_step_holds(const MonomialIdeal& ideal, const Monomial& u, const Monomial& v, int var_i) {
  if (u.exp(var_i) <= v.exp(var_i)) throw SpecError("exchange step needs exp_u(i) > exp_v(i)");
  for (int j = 0; j < u.nvars(); ++j) {
    if (u.exp(j) >= v.exp(j)) continue;
    Exps e = u.exps();
    --e[static_cast<size_t>(var_i)];
    ++e[static_cast<size_t>(j)];
    if (ideal.contains(Monomial(std::move(e)))) return true;
  }
  return false;
}

std::vector<Monomial> quotient_order_two_veronese(const Ring& ring, const std::vector<int>& J,
                                                  const std::vector<int>& K, int a, int b, int d) {
  if (d < 0) throw SpecError("component offset must be nonnegative");
  VeroneseSpec spec{{VeronesePiece{J, a}, VeronesePiece{K, b}}};
  spec.validate(ring);
  MonomialIdeal inter = veronese_ideal(ring, spec);
  int target = inter.min_gen_degree() + d;
  std::vector<int> inside = sorted_union(J, K);
  std::vector<int> outside = complement_of(ring.nvars(), inside);
  std::vector<int> order(inside);
  order.insert(order.end(), outside.begin(), outside.end());

  std::vector<Monomial> out;
  for (int i = 0; i <= d; ++i) {
    MonomialIdeal comp = degree_component_on(inter, target - i, inside);
    if (comp.is_zero()) continue;
    std::vector<Monomial> stratum;
    for (const auto& g : comp.gens())
      for (const auto& h : monomials_of_degree_on(ring.nvars(), i, outside)) stratum.push_back(g * h);
    std::sort(stratum.begin(), stratum.end(), [&order](const Monomial& x, const Monomial& y) {
      return revlex_sign_perm(x.exps(), y.exps(), order) < 0;  // ascending
    });
    out.insert(out.end(), stratum.begin(), stratum.end());
  }
  return out;
}

std::vector<Monomial> quotient_order_three_veronese(const Ring& ring, const std::vector<int>& J,
                                                    const std::vector<int>& K, const std::vector<int>& L,
                                                    int a, int b, int c, int d) {
  if (d < 0) throw SpecError("component offset must be nonnegative");
  VeroneseSpec spec{{VeronesePiece{J, a}, VeronesePiece{K, b}, VeronesePiece{L, c}}};
  spec.validate(ring);
  // equal supports collapse to a higher power of one piece
  if (J == K) return quotient_order_two_veronese(ring, J, L, std::max(a, b), c, d);
  if (J == L) return quotient_order_two_veronese(ring, J, K, std::max(a, c), b, d);
  if (K == L) return quotient_order_two_veronese(ring, J, K, a, std::max(b, c), d);

  MonomialIdeal ideal = veronese_ideal(ring, spec);
  int target = ideal.min_gen_degree() + d;
  std::vector<Monomial> mons = degree_component(ideal, target).gens();

  std::vector<int> inside = sorted_union(sorted_union(J, K), L);
  std::vector<int> unused = complement_of(ring.nvars(), inside);

  // prefer a pair whose union misses part of the third support
  const std::vector<int>*p1 = nullptr, *p2 = nullptr, *third = nullptr;
  if (sorted_union(J, K) != inside) {
    p1 = &J, p2 = &K, third = &L;
  } else if (sorted_union(J, L) != inside) {
    p1 = &J, p2 = &L, third = &K;
  } else if (sorted_union(K, L) != inside) {
    p1 = &K, p2 = &L, third = &J;
  }

  std::vector<int> order;
  std::vector<int> tail;  // the part of the third support outside the pair
  if (p1 != nullptr) {
    std::vector<int> pair_union = sorted_union(*p1, *p2);
    std::vector<int> head = sorted_difference(pair_union, *third);
    std::vector<int> mid = sorted_intersection(*third, pair_union);
    tail = sorted_difference(*third, pair_union);
    order = head;
    order.insert(order.end(), mid.begin(), mid.end());
    order.insert(order.end(), tail.begin(), tail.end());
  } else {
    // pairwise unions all cover the supports: components are exchange-closed
    // and plain ascending revlex works inside
    order = inside;
  }
  order.insert(order.end(), unused.begin(), unused.end());

  std::sort(mons.begin(), mons.end(), [&](const Monomial& x, const Monomial& y) {
    int zx = x.degree_on(unused), zy = y.degree_on(unused);
    if (zx != zy) return zx < zy;
    if (zx == 0) {
      if (p1 != nullptr) {
        int hx = x.degree_on(tail), hy = y.degree_on(tail);
        if (hx != hy) return hx < hy;
      }
      return revlex_sign_perm(x.exps(), y.exps(), order) < 0;  // ascending
    }
    return revlex_sign_perm(x.exps(), y.exps(), order) > 0;  // descending
  });
  return mons;
}

}  // namespace veronese
