#include "veronese/formulas.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_set>

#include "veronese/linearity.hpp"

namespace veronese {

BigInt binom(long long n, long long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < k) return 0;
  BigInt out = 1;
  for (long long t = 1; t <= k; ++t) {
    out *= n - k + t;
    out /= t;
  }
  return out;
}

namespace {

long long to_table_value(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max())
    throw CapacityError("formula value exceeds table range");
  return v.convert_to<long long>();
}

// one graded strand of a single power: the two-binomial product at index i
BigInt power_strand(int size, int a, long long i) {
  return binom(a + size - 1, a + i) * binom(a + i - 1, i);
}

std::vector<BigInt> strand_vector(int size, int a) {
  std::vector<BigInt> out;
  for (long long i = 0;; ++i) {
    BigInt v = power_strand(size, a, i);
    if (v == 0 && i >= size) break;
    out.push_back(v);
    if (i > size + a + 2) break;  // strands are finite; guard the degenerate powers
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<BigInt> convolve(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
  if (f.empty() || g.empty()) return {};
  std::vector<BigInt> out(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  return out;
}

std::vector<int> sorted_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> set_difference_of(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersection_of(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

BettiTable betti_power_formula(int j_size, int a) {
  if (j_size < 1 || a < 1) throw SpecError("power formula needs a nonempty support and power >= 1");
  BettiTable out;
  out.grading = Grading::total;
  for (int i = 0; i < j_size; ++i)
    out.add(i, {i + a}, to_table_value(power_strand(j_size, a, i)));
  return out;
}

BettiTable betti_disjoint_product_formula(const std::vector<std::pair<int, int>>& size_power) {
  if (size_power.empty()) throw SpecError("product formula needs at least one factor");
  int row = 0;
  std::vector<BigInt> acc{1};
  for (const auto& [size, a] : size_power) {
    if (size < 1 || a < 1) throw SpecError("product formula needs sizes and powers >= 1");
    acc = convolve(acc, strand_vector(size, a));
    row += a;
  }
  BettiTable out;
  out.grading = Grading::total;
  for (size_t i = 0; i < acc.size(); ++i)
    out.add(static_cast<int>(i), {static_cast<int>(i) + row}, to_table_value(acc[i]));
  return out;
}

BettiTable betti_U_formula(int a_size, int c_size, int a, int b) {
  if (a_size < 1 || c_size < 1) throw SpecError("U formula needs nonempty side and core supports");
  if (b < 1 || a < b) throw SpecError("U formula needs powers a >= b >= 1");
  BettiTable out;
  out.grading = Grading::total;
  for (long long i = 0; i <= a_size + c_size; ++i) {
    BigInt v = power_strand(c_size, a, i);
    for (long long j = 1; j <= a - b; ++j)
      for (long long k = 0; k < a_size; ++k)
        v += binom(k + j - 1, j - 1) * binom(c_size + a - j - 1, a - j) * binom(c_size + k, i);
    out.add(static_cast<int>(i), {static_cast<int>(i) + a}, to_table_value(v));
  }
  return out;
}

BettiTable betti_V_formula(int a_size, int b_size, int c_size, int a, int b) {
  if (a_size < 1 || b_size < 1 || c_size < 1)
    throw SpecError("V formula needs nonempty supports");
  if (b < 1 || a < b) throw SpecError("V formula needs powers a >= b >= 1");
  BettiTable out;
  out.grading = Grading::total;
  if (b == 1) {
    // the single row is the product of the two visible blocks, built directly
    BettiTable first = betti_disjoint_product_formula({{b_size, 1}, {a_size, a}});
    for (const auto& [key, v] : first.entries) out.add(key.first, key.second, v);
    return out;
  }
  // first row: convolution of the one-power strand on B, the (a-b+1)-power
  // strand on A, and the (b-1)-power strand on C
  for (long long i = 0;; ++i) {
    BigInt v = 0;
    for (long long i1 = 0; i1 <= i; ++i1)
      for (long long i2 = 0; i1 + i2 <= i; ++i2) {
        long long i3 = i - i1 - i2;
        v += binom(b_size, 1 + i1) * binom(a_size + a - b, a - b + 1 + i2) *
             binom(a - b + i2, i2) * binom(c_size + b - 2, b - 1 + i3) * binom(b + i3 - 2, i3);
      }
    if (v == 0 && i > a_size + b_size + c_size) break;
    out.add(static_cast<int>(i), {static_cast<int>(i) + a + 1}, to_table_value(v));
  }
  for (long long j = 2; j <= b; ++j)
    for (long long i = 0; i <= c_size + a_size + b_size; ++i) {
      BigInt v = 0;
      for (long long k1 = 0; k1 < a_size; ++k1)
        for (long long k2 = 0; k2 < b_size; ++k2)
          v += binom(c_size + b - j - 1, b - j) * binom(k1 + a - b + j - 1, a - b + j - 1) *
               binom(k2 + j - 1, j - 1) * binom(c_size + k1 + k2, i);
      out.add(static_cast<int>(i), {static_cast<int>(i + a + j)}, to_table_value(v));
    }
  return out;
}

TwoVeroneseCase classify_two_veronese(std::vector<int> J, std::vector<int> K, int a, int b) {
  J = sorted_set(std::move(J));
  K = sorted_set(std::move(K));
  if (J.empty() || K.empty()) throw SpecError("supports must be nonempty");
  if (a < 1 || b < 1) throw SpecError("powers must be >= 1");
  if (a < b) {
    std::swap(J, K);
    std::swap(a, b);
  }
  TwoVeroneseCase out;
  out.a = a;
  out.b = b;
  out.set_a = set_difference_of(J, K);
  out.set_b = set_difference_of(K, J);
  out.set_c = set_intersection_of(J, K);
  if (out.set_c.empty())
    out.tag = TwoVeroneseTag::disjoint;
  else if (out.set_a.empty())
    out.tag = TwoVeroneseTag::j_inside_k;
  else if (out.set_b.empty())
    out.tag = TwoVeroneseTag::k_inside_j;
  else
    out.tag = TwoVeroneseTag::general;
  return out;
}

BettiTable betti_two_veronese(const std::vector<int>& J, const std::vector<int>& K, int a, int b) {
  TwoVeroneseCase c = classify_two_veronese(J, K, a, b);
  int na = static_cast<int>(c.set_a.size());
  int nb = static_cast<int>(c.set_b.size());
  int nc = static_cast<int>(c.set_c.size());
  switch (c.tag) {
    case TwoVeroneseTag::disjoint:
      return betti_disjoint_product_formula({{na + nc, c.a}, {nb + nc, c.b}});
    case TwoVeroneseTag::j_inside_k:
      return betti_power_formula(nc, c.a);  // the larger power swallows the intersection
    case TwoVeroneseTag::k_inside_j:
      return betti_U_formula(na, nc, c.a, c.b);
    case TwoVeroneseTag::general:
      break;
  }
  BettiTable out = betti_U_formula(na, nc, c.a, c.b);
  out.grading = Grading::total;
  BettiTable vtab = betti_V_formula(na, nb, nc, c.a, c.b);
  for (const auto& [key, v] : vtab.entries) out.add(key.first, key.second, v);
  BettiTable inter =
      betti_disjoint_product_formula({{nb, 1}, {na, c.a - c.b + 1}, {nc, c.b}});
  // homological shift by one; the total degree key is untouched
  for (const auto& [key, v] : inter.entries) out.add(key.first + 1, key.second, v);
  return out;
}

BettiTable betti_two_fat_points(const std::vector<int>& blocks, int a, int b) {
  if (blocks.empty()) throw SpecError("need at least one factor");
  for (int n : blocks)
    if (n < 1) throw SpecError("factor dimensions must be >= 1");
  if (a < 1 || b < 1) throw SpecError("multiplicities must be >= 1");
  if (a < b) std::swap(a, b);  // the two points play symmetric roles
  long long r = static_cast<long long>(blocks.size());
  long long N = 0;
  for (int n : blocks) N += n;
  BettiTable out;
  out.grading = Grading::total;
  long long bound = N + r;  // number of variables
  for (long long i = 0; i <= bound; ++i) {
    BigInt v = binom(N - r + a - 1, a + i) * binom(a + i - 1, i);
    for (long long j = 1; j <= a - b; ++j)
      for (long long k = 0; k < r; ++k)
        v += binom(k + j - 1, j - 1) * binom(N - r + a - j - 1, a - j) * binom(N - r + k, i);
    out.add(static_cast<int>(i), {static_cast<int>(i + a)}, to_table_value(v));
  }
  for (long long i = 0; i <= bound; ++i) {
    BigInt v = 0;
    for (long long i1 = 0; i1 <= i; ++i1)
      for (long long i2 = 0; i1 + i2 <= i; ++i2) {
        long long i3 = i - i1 - i2;
        v += binom(r, 1 + i1) * binom(r + a - b, a - b + 1 + i2) * binom(a - b + i2, i2) *
             binom(N - r + b - 2, b - 1 + i3) * binom(b + i3 - 2, i3);
      }
    for (long long i1 = 0; i1 <= i - 1; ++i1)
      for (long long i2 = 0; i1 + i2 <= i - 1; ++i2) {
        long long i3 = i - 1 - i1 - i2;
        v += binom(r, 1 + i1) * binom(r + a - b, a - b + 1 + i2) * binom(a - b + i2, i2) *
             binom(N - r + b - 1, b + i3) * binom(b + i3 - 1, i3);
      }
    out.add(static_cast<int>(i), {static_cast<int>(i + a + 1)}, to_table_value(v));
  }
  for (long long j = 2; j <= b; ++j)
    for (long long i = 0; i <= bound; ++i) {
      BigInt v = 0;
      for (long long k1 = 0; k1 < r; ++k1)
        for (long long k2 = 0; k2 < r; ++k2)
          v += binom(N - r + b - j - 1, b - j) * binom(k1 + a - b + j - 1, a - b + j - 1) *
               binom(k2 + j - 1, j - 1) * binom(N - r + k1 + k2, i);
      out.add(static_cast<int>(i), {static_cast<int>(i + a + j)}, to_table_value(v));
    }
  return out;
}

namespace {

MonomialIdeal power_or_unit(const MonomialIdeal& ideal, int k) {
  return k == 0 ? MonomialIdeal::unit(ideal.ring()) : power(ideal, k);
}

MonomialIdeal sum_of(const Ring& ring, const std::vector<MonomialIdeal>& parts) {
  std::vector<Monomial> gens;
  for (const auto& part : parts)
    gens.insert(gens.end(), part.gens().begin(), part.gens().end());
  return MonomialIdeal(ring, std::move(gens));
}

int max_support_in(const Monomial& m, const std::vector<int>& vars) {
  int best = -1;
  for (int v : vars)
    if (m.exp(v) > 0) best = std::max(best, v);
  return best;
}

}  // namespace

SplitPair build_UV_split(const Ring& ring, const std::vector<int>& J, const std::vector<int>& K,
                         int a, int b) {
  VeroneseSpec spec{{VeronesePiece{sorted_set(J), a}, VeronesePiece{sorted_set(K), b}}};
  spec.validate(ring);
  if (a < b) throw SpecError("split construction needs a >= b");
  TwoVeroneseCase c = classify_two_veronese(J, K, a, b);
  if (c.tag != TwoVeroneseTag::general)
    throw SpecError("split construction needs all three support regions nonempty");

  MonomialIdeal mA = veronese_power(ring, c.set_a, 1);
  MonomialIdeal mB = veronese_power(ring, c.set_b, 1);
  MonomialIdeal mC = veronese_power(ring, c.set_c, 1);

  std::vector<MonomialIdeal> u_parts, v_parts;
  for (int t = 0; t <= a - b; ++t)
    u_parts.push_back(multiply(power_or_unit(mA, t), power_or_unit(mC, a - t)));
  for (int t = 1; t <= b; ++t)
    v_parts.push_back(
        multiply(multiply(power_or_unit(mB, t), power_or_unit(mA, a - b + t)),
                 power_or_unit(mC, b - t)));

  MonomialIdeal u_half = sum_of(ring, u_parts);
  MonomialIdeal v_half = sum_of(ring, v_parts);
  MonomialIdeal inter = intersect(u_half, v_half);

  MonomialIdeal expected =
      multiply(multiply(mB, power_or_unit(mA, a - b + 1)), power_or_unit(mC, b));
  if (!(inter == expected))
    throw std::logic_error("split intersection differs from its closed form");
  if (!(sum_of(ring, {u_half, v_half}) == veronese_ideal(ring, spec)))
    throw std::logic_error("split halves do not add up to the intersection ideal");

  SplitPair pair{std::move(u_half), std::move(v_half), std::move(inter), {}};

  for (const Monomial& w : pair.intersection.gens()) {
    int y = -1;
    int bdeg = 0;
    for (int v : c.set_b)
      if (w.exp(v) > 0) {
        bdeg += w.exp(v);
        y = v;
      }
    if (bdeg != 1) throw std::logic_error("split generator has unexpected shape");
    int xmax = max_support_in(w, c.set_a);
    int zmax = max_support_in(w, c.set_c);
    if (xmax < 0 || zmax < 0) throw std::logic_error("split generator has unexpected shape");
    Exps phi = w.exps();
    --phi[static_cast<size_t>(y)];
    --phi[static_cast<size_t>(xmax)];
    Exps psi = w.exps();
    --psi[static_cast<size_t>(zmax)];
    SplitImage img{w, Monomial(std::move(phi)), Monomial(std::move(psi))};
    if (!pair.U.contains(img.phi) || !pair.V.contains(img.psi))
      throw std::logic_error("split images fall outside their halves");
    if (!(lcm(img.phi, img.psi) == w))
      throw std::logic_error("split images do not rebuild their generator");
    pair.images.push_back(std::move(img));
  }
  return pair;
}

SplitCheck verify_splitting(const MonomialIdeal& ideal, const SplitPair& pair, int split_cap) {
  SplitCheck check;
  // (i) the generators split into the two halves with no overlap
  {
    std::unordered_set<Exps, ExpsHash> seen;
    std::vector<Monomial> merged;
    for (const auto& g : pair.U.gens()) {
      if (!seen.insert(g.exps()).second) {
        check.failure = "generator partition";
        return check;
      }
      merged.push_back(g);
    }
    for (const auto& g : pair.V.gens()) {
      if (!seen.insert(g.exps()).second) {
        check.failure = "generator partition";
        return check;
      }
      merged.push_back(g);
    }
    std::sort(merged.begin(), merged.end(), canonical_less);
    if (merged != ideal.gens()) {
      check.failure = "generator partition";
      return check;
    }
  }
  // (ii) each intersection generator is the join of its two images
  if (pair.images.size() != pair.intersection.gens().size()) {
    check.failure = "image coverage";
    return check;
  }
  for (size_t k = 0; k < pair.images.size(); ++k) {
    if (!(pair.images[k].w == pair.intersection.gens()[k]) ||
        !(lcm(pair.images[k].phi, pair.images[k].psi) == pair.images[k].w)) {
      check.failure = "lcm images";
      return check;
    }
  }
  // (iii) on every subset the joined images stay strictly below the join
  size_t g = pair.images.size();
  auto strict_below = [](const Exps& part, const Exps& whole) {
    bool less = false;
    for (size_t j = 0; j < whole.size(); ++j) {
      if (part[j] > whole[j]) return false;
      if (part[j] < whole[j]) less = true;
    }
    return less;
  };
  auto join_into = [](Exps& target, const Exps& src) {
    for (size_t j = 0; j < src.size(); ++j) target[j] = std::max(target[j], src[j]);
  };
  auto subset_ok = [&](const std::vector<size_t>& members) {
    Exps whole(static_cast<size_t>(ideal.ring().nvars()), 0);
    Exps fromPhi = whole, fromPsi = whole;
    for (size_t k : members) {
      join_into(whole, pair.images[k].w.exps());
      join_into(fromPhi, pair.images[k].phi.exps());
      join_into(fromPsi, pair.images[k].psi.exps());
    }
    return strict_below(fromPhi, whole) && strict_below(fromPsi, whole);
  };
  if (static_cast<int>(g) <= split_cap) {
    check.exhaustive = true;
    size_t total = size_t(1) << g;
    std::vector<size_t> members;
    for (size_t s = 1; s < total; ++s) {
      members.clear();
      for (size_t k = 0; k < g; ++k)
        if (s & (size_t(1) << k)) members.push_back(k);
      ++check.subsets_checked;
      if (!subset_ok(members)) {
        check.failure = "subset condition";
        return check;
      }
    }
  } else {
    check.exhaustive = false;
    std::vector<std::vector<size_t>> picks;
    for (size_t k = 0; k < g; ++k) picks.push_back({k});
    for (size_t k = 0; k < g; ++k)
      for (size_t l = k + 1; l < g; ++l) picks.push_back({k, l});
    std::vector<size_t> all(g);
    for (size_t k = 0; k < g; ++k) all[k] = k;
    picks.push_back(all);
    std::mt19937_64 rng(0x5eed5eedULL);
    for (int trial = 0; trial < 65536; ++trial) {
      std::vector<size_t> members;
      for (size_t k = 0; k < g; ++k)
        if (rng() & 1) members.push_back(k);
      if (!members.empty()) picks.push_back(std::move(members));
    }
    for (const auto& members : picks) {
      ++check.subsets_checked;
      if (!subset_ok(members)) {
        check.failure = "subset condition";
        return check;
      }
    }
  }
  check.ok = true;
  return check;
}

namespace {

bool additive_identity(const BettiTable& whole, const BettiTable& u, const BettiTable& v,
                       const BettiTable& inter) {
  BettiTable expected;
  expected.grading = whole.grading;
  for (const auto& [key, val] : u.entries) expected.add(key.first, key.second, val);
  for (const auto& [key, val] : v.entries) expected.add(key.first, key.second, val);
  for (const auto& [key, val] : inter.entries) expected.add(key.first + 1, key.second, val);
  return expected.entries == whole.entries;
}

}  // namespace

bool splitting_betti_identity(const MonomialIdeal& ideal, const SplitPair& pair,
                              const Field& field) {
  if (pair.U.is_zero() || pair.V.is_zero())
    throw SpecError("not a splitting: both halves must be nonzero");
  return additive_identity(betti_fine(ideal, field), betti_fine(pair.U, field),
                           betti_fine(pair.V, field), betti_fine(pair.intersection, field));
}

}  // namespace veronese
