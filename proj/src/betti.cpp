#include "veronese/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "veronese/linearity.hpp"

namespace veronese {

long long BettiTable::entry(int i, const std::vector<int>& deg) const {
  auto it = entries.find({i, deg});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, const std::vector<int>& deg, long long value) {
  if (value == 0) return;
  entries[{i, deg}] += value;
  if (entries[{i, deg}] == 0) entries.erase({i, deg});
}

int BettiTable::pdim() const {
  if (entries.empty()) throw SpecError("empty Betti table");
  int best = 0;
  for (const auto& [key, v] : entries) best = std::max(best, key.first);
  return best;
}

int BettiTable::regularity() const {
  if (entries.empty()) throw SpecError("empty Betti table");
  int best = std::numeric_limits<int>::min();
  for (const auto& [key, v] : entries) {
    int total = std::accumulate(key.second.begin(), key.second.end(), 0);
    best = std::max(best, total - key.first);
  }
  return best;
}

long long BettiTable::total(int i, int j) const {
  long long out = 0;
  for (const auto& [key, v] : entries) {
    if (key.first != i) continue;
    if (std::accumulate(key.second.begin(), key.second.end(), 0) == j) out += v;
  }
  return out;
}

BettiTable coarsen(const BettiTable& table, Grading target, const Ring& ring) {
  if (target == table.grading) return table;
  bool allowed = table.grading == Grading::fine ||
                 (table.grading == Grading::block && target == Grading::total);
  if (!allowed) throw SpecError("a coarsened Betti table cannot be refined");
  BettiTable out;
  out.grading = target;
  for (const auto& [key, v] : table.entries) {
    std::vector<int> deg;
    if (target == Grading::total) {
      deg = {std::accumulate(key.second.begin(), key.second.end(), 0)};
    } else {
      deg.assign(static_cast<size_t>(ring.nblocks()), 0);
      for (int j = 0; j < ring.nvars(); ++j)
        deg[static_cast<size_t>(ring.block_of(j))] += key.second[static_cast<size_t>(j)];
    }
    out.add(key.first, deg, v);
  }
  return out;
}

namespace {

long long normalize_mod(long long v, long long p) { return ((v % p) + p) % p; }

long long mod_inverse(long long a, long long p) {
  long long old_r = normalize_mod(a, p), r = p;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw SpecError("field characteristic must be prime");
  return normalize_mod(old_s, p);
}

long long rank_mod_p(std::vector<std::vector<long long>>& m, long long p) {
  if (p < 2) throw SpecError("field characteristic must be prime or zero");
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (normalize_mod(m[i][c], p) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    long long inv = mod_inverse(m[r][c], p);
    for (size_t j = c; j < cols; ++j) m[r][j] = normalize_mod(m[r][j], p) * inv % p;
    for (size_t i = r + 1; i < rows; ++i) {
      long long f = normalize_mod(m[i][c], p);
      if (f == 0) continue;
      for (size_t j = c; j < cols; ++j)
        m[i][j] = normalize_mod(m[i][j] - f * m[r][j] % p, p);
    }
    ++r;
  }
  return static_cast<long long>(r);
}

long long rank_exact(std::vector<std::vector<BigInt>>& m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t r = 0;
  BigInt prev = 1;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<long long>(r);
}

}  // namespace

long long matrix_rank(const std::vector<std::vector<long long>>& m, const Field& field) {
  if (field.characteristic == 0) {
    std::vector<std::vector<BigInt>> big(m.size());
    for (size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
    return rank_exact(big);
  }
  auto copy = m;
  return rank_mod_p(copy, field.characteristic);
}

namespace {

// ranks of the boundary maps of a complex whose level-s basis is the given
// masks with s set bits; a column contributes to a child only when `keeps`
// accepts it (the child is then required to sit in the level below)
std::vector<long long> boundary_ranks(const std::vector<std::vector<uint32_t>>& levels,
                                      const std::function<bool(uint32_t)>& keeps,
                                      const Field& field) {
  std::vector<long long> ranks(levels.size() + 1, 0);
  for (size_t s = 1; s < levels.size(); ++s) {
    if (levels[s].empty() || levels[s - 1].empty()) continue;
    std::unordered_map<uint32_t, size_t> row_of;
    row_of.reserve(levels[s - 1].size() * 2);
    for (size_t i = 0; i < levels[s - 1].size(); ++i) row_of[levels[s - 1][i]] = i;
    std::vector<std::vector<long long>> mat(levels[s - 1].size(),
                                            std::vector<long long>(levels[s].size(), 0));
    for (size_t col = 0; col < levels[s].size(); ++col) {
      uint32_t mask = levels[s][col];
      int k = 0;
      for (uint32_t rest = mask; rest != 0; rest &= rest - 1, ++k) {
        uint32_t bit = rest & (~rest + 1);
        uint32_t child = mask ^ bit;
        if (!keeps(child)) continue;
        auto it = row_of.find(child);
        if (it == row_of.end()) throw std::logic_error("boundary child missing from level");
        mat[it->second][col] += (k % 2 == 0) ? 1 : -1;
      }
    }
    ranks[s] = matrix_rank(mat, field);
  }
  return ranks;
}

struct TaylorData {
  std::vector<Exps> lcms;                     // lcm id -> exponent vector
  std::vector<int32_t> lcm_id;                // subset -> lcm id
  std::vector<std::vector<uint32_t>> by_id;   // lcm id -> nonempty subsets
  size_t max_level = 0;                       // largest basis block in any strand
};

TaylorData taylor_enumerate(const MonomialIdeal& ideal) {
  int m = ideal.ngens();
  int n = ideal.ring().nvars();
  const auto& gens = ideal.gens();
  TaylorData data;
  size_t total = size_t(1) << m;
  data.lcm_id.assign(total, 0);
  std::unordered_map<Exps, int32_t, ExpsHash> id_of;
  Exps zero(static_cast<size_t>(n), 0);
  data.lcms.push_back(zero);
  id_of.emplace(zero, 0);
  for (size_t s = 1; s < total; ++s) {
    int k = std::countr_zero(s);
    Exps e = data.lcms[static_cast<size_t>(data.lcm_id[s & (s - 1)])];
    const Exps& g = gens[static_cast<size_t>(k)].exps();
    for (int j = 0; j < n; ++j)
      e[static_cast<size_t>(j)] = std::max(e[static_cast<size_t>(j)], g[static_cast<size_t>(j)]);
    auto [it, inserted] = id_of.try_emplace(std::move(e), static_cast<int32_t>(data.lcms.size()));
    if (inserted) data.lcms.push_back(it->first);
    data.lcm_id[s] = it->second;
  }
  data.by_id.assign(data.lcms.size(), {});
  for (size_t s = 1; s < total; ++s)
    data.by_id[static_cast<size_t>(data.lcm_id[s])].push_back(static_cast<uint32_t>(s));
  for (const auto& group : data.by_id) {
    std::vector<size_t> counts;
    for (uint32_t s : group) {
      size_t pc = static_cast<size_t>(std::popcount(s));
      if (counts.size() <= pc) counts.resize(pc + 1, 0);
      ++counts[pc];
    }
    for (size_t c : counts) data.max_level = std::max(data.max_level, c);
  }
  return data;
}

BettiTable taylor_ranks(const TaylorData& data, const MonomialIdeal& ideal, const Field& field) {
  BettiTable out;
  out.grading = Grading::fine;
  int m = ideal.ngens();
  for (size_t id = 0; id < data.by_id.size(); ++id) {
    const auto& group = data.by_id[id];
    if (group.empty()) continue;
    std::vector<std::vector<uint32_t>> levels(static_cast<size_t>(m) + 1);
    for (uint32_t s : group) levels[static_cast<size_t>(std::popcount(s))].push_back(s);
    for (auto& level : levels) std::sort(level.begin(), level.end());
    // level 0 stays empty: the subsets resolve the ideal itself, so the
    // boundary out of singletons is zero
    auto keeps = [&](uint32_t child) {
      return child != 0 && data.lcm_id[child] == static_cast<int32_t>(id);
    };
    auto ranks = boundary_ranks(levels, keeps, field);
    for (size_t lvl = 1; lvl < levels.size(); ++lvl) {
      if (levels[lvl].empty()) continue;
      long long next = lvl + 1 < ranks.size() ? ranks[lvl + 1] : 0;
      long long beta = static_cast<long long>(levels[lvl].size()) - ranks[lvl] - next;
      if (beta < 0) throw std::logic_error("negative strand homology");
      out.add(static_cast<int>(lvl) - 1, data.lcms[id], beta);
    }
  }
  return out;
}

constexpr size_t kTaylorHardLevelCap = 4000;

}  // namespace

BettiTable taylor_betti(const MonomialIdeal& ideal, const Field& field, int subset_cap) {
  BettiTable empty;
  empty.grading = Grading::fine;
  if (ideal.is_zero()) return empty;
  if (ideal.ngens() > subset_cap)
    throw CapacityError("subset engine limit: " + std::to_string(ideal.ngens()) + " generators exceed cap " +
                        std::to_string(subset_cap));
  TaylorData data = taylor_enumerate(ideal);
  if (data.max_level > kTaylorHardLevelCap)
    throw CapacityError("subset engine strand of size " + std::to_string(data.max_level) +
                        " is too large to eliminate");
  return taylor_ranks(data, ideal, field);
}

namespace {

constexpr size_t kKoszulFaceCap = size_t(1) << 20;

// homology of the complex whose facets are the given variable masks,
// reported as beta contributions at multidegree mu
void koszul_homology_at(const std::vector<uint32_t>& facets_in, const std::vector<int>& mu,
                        const Field& field, BettiTable& out) {
  std::vector<uint32_t> facets = facets_in;
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // drop masks below another mask
  std::vector<uint32_t> maximal;
  for (uint32_t a : facets) {
    bool covered = false;
    for (uint32_t b : facets)
      if (a != b && (a & b) == a) {
        covered = true;
        break;
      }
    if (!covered) maximal.push_back(a);
  }
  uint32_t common = maximal.front();
  for (uint32_t f : maximal) common &= f;
  if (common != 0) return;  // a shared vertex cones the complex off
  if (maximal.size() > 1) {
    size_t bound = 0;
    for (uint32_t f : maximal) bound += size_t(1) << std::popcount(f);
    if (bound > kKoszulFaceCap)
      throw CapacityError("multidegree complex with too many faces");
  }
  std::unordered_set<uint32_t> faces;
  for (uint32_t f : maximal)
    for (uint32_t s = f;; s = (s - 1) & f) {
      faces.insert(s);
      if (s == 0) break;
    }
  int width = 0;
  for (uint32_t f : maximal) width = std::max(width, 32 - std::countl_zero(f));
  std::vector<std::vector<uint32_t>> levels(static_cast<size_t>(width) + 1);
  for (uint32_t f : faces) levels[static_cast<size_t>(std::popcount(f))].push_back(f);
  for (auto& level : levels) std::sort(level.begin(), level.end());
  auto keeps = [](uint32_t) { return true; };
  auto ranks = boundary_ranks(levels, keeps, field);
  for (size_t lvl = 0; lvl < levels.size(); ++lvl) {
    if (levels[lvl].empty()) continue;
    long long cur = lvl < ranks.size() ? ranks[lvl] : 0;
    long long next = lvl + 1 < ranks.size() ? ranks[lvl + 1] : 0;
    long long beta = static_cast<long long>(levels[lvl].size()) - cur - next;
    if (beta < 0) throw std::logic_error("negative complex homology");
    out.add(static_cast<int>(lvl), mu, beta);
  }
}

}  // namespace

BettiTable koszul_betti(const MonomialIdeal& ideal, const Field& field) {
  BettiTable out;
  out.grading = Grading::fine;
  if (ideal.is_zero()) return out;
  int n = ideal.ring().nvars();
  if (n > 30) throw CapacityError("multidegree engine limited to 30 variables");
  const auto& gens = ideal.gens();
  std::vector<int> mu(static_cast<size_t>(n), 0);
  std::vector<int> all(gens.size());
  std::iota(all.begin(), all.end(), 0);

  std::function<void(int, const std::vector<int>&)> walk = [&](int depth,
                                                               const std::vector<int>& live) {
    if (depth == n) {
      // keep only join-lattice points: the divisors must reach mu coordinatewise
      for (int j = 0; j < n; ++j) {
        int best = 0;
        for (int g : live)
          best = std::max(best, gens[static_cast<size_t>(g)].exp(j));
        if (best != mu[static_cast<size_t>(j)]) return;
      }
      std::vector<uint32_t> facets;
      facets.reserve(live.size());
      for (int g : live) {
        uint32_t mask = 0;
        for (int j = 0; j < n; ++j)
          if (mu[static_cast<size_t>(j)] > gens[static_cast<size_t>(g)].exp(j))
            mask |= uint32_t(1) << j;
        facets.push_back(mask);
      }
      koszul_homology_at(facets, mu, field, out);
      return;
    }
    std::vector<int> values;
    for (int g : live) values.push_back(gens[static_cast<size_t>(g)].exp(depth));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int v : values) {
      mu[static_cast<size_t>(depth)] = v;
      std::vector<int> next;
      for (int g : live)
        if (gens[static_cast<size_t>(g)].exp(depth) <= v) next.push_back(g);
      walk(depth + 1, next);
    }
  };
  walk(0, all);
  return out;
}

BettiTable betti_fine(const MonomialIdeal& ideal, const Field& field) {
  BettiTable empty;
  empty.grading = Grading::fine;
  if (ideal.is_zero()) return empty;
  if (ideal.ngens() <= 22) {
    TaylorData data = taylor_enumerate(ideal);
    if (data.max_level <= 800) return taylor_ranks(data, ideal, field);
  }
  return koszul_betti(ideal, field);
}

bool has_linear_resolution(const MonomialIdeal& ideal, const Field& field) {
  if (ideal.is_zero()) throw SpecError("the zero ideal has no resolution");
  if (!ideal.is_equigenerated()) return false;
  // a linear-quotient order in one of the standard directions already
  // certifies linearity, which keeps large equigenerated components cheap
  for (OrderDirection dir : {OrderDirection::descending_revlex, OrderDirection::ascending_revlex,
                             OrderDirection::descending_lex}) {
    auto gens = ideal.gens();
    sort_monomials(gens, dir);
    if (linear_quotients_in_order(ideal.ring(), gens).verdict) return true;
  }
  return betti_fine(ideal, field).regularity() == ideal.min_gen_degree();
}

CwlReport is_componentwise_linear(const MonomialIdeal& ideal, const Field& field) {
  if (ideal.is_zero()) throw SpecError("the zero ideal has no components");
  CwlReport report;
  report.min_degree = ideal.min_gen_degree();
  report.regularity = betti_fine(ideal, field).regularity();
  report.verdict = true;
  for (int d = report.min_degree; d <= report.regularity; ++d) {
    bool linear = has_linear_resolution(degree_component(ideal, d), field);
    report.components.emplace_back(d, linear);
    if (!linear) report.verdict = false;
  }
  return report;
}

namespace {

Poly poly_product(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) {
      out[da + db] += ca * cb;
      if (out[da + db] == 0) out.erase(da + db);
    }
  return out;
}

void poly_accumulate(Poly& target, const Poly& src, int shift, int sign) {
  for (const auto& [d, c] : src) {
    target[d + shift] += sign * c;
    if (target[d + shift] == 0) target.erase(d + shift);
  }
}

std::string gens_key(const MonomialIdeal& ideal) {
  std::ostringstream os;
  for (const auto& g : ideal.gens()) {
    for (int e : g.exps()) os << e << ',';
    os << ';';
  }
  return os.str();
}

bool all_pure_powers(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.gens())
    if (static_cast<int>(g.support().size()) > 1) return false;
  return true;
}

int pick_pivot_variable(const MonomialIdeal& ideal) {
  int n = ideal.ring().nvars();
  std::vector<int> score(static_cast<size_t>(n), 0);
  for (const auto& g : ideal.gens()) {
    if (static_cast<int>(g.support().size()) <= 1) continue;
    for (int v : g.support()) ++score[static_cast<size_t>(v)];
  }
  int best = -1;
  for (int v = 0; v < n; ++v)
    if (best < 0 || score[static_cast<size_t>(v)] > score[static_cast<size_t>(best)]) best = v;
  return best;
}

Poly pivot_rec(const MonomialIdeal& ideal, std::unordered_map<std::string, Poly>& memo) {
  if (ideal.is_zero()) return {{0, 1}};
  if (ideal.ngens() == 1) {
    Poly out{{0, 1}};
    int d = ideal.gens().front().degree();
    out[d] -= 1;
    if (out[d] == 0) out.erase(d);
    return out;
  }
  if (all_pure_powers(ideal)) {
    Poly out{{0, 1}};
    for (const auto& g : ideal.gens()) {
      Poly factor{{0, 1}};
      factor[g.degree()] -= 1;
      out = poly_product(out, factor);
    }
    return out;
  }
  std::string key = gens_key(ideal);
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;
  int v = pick_pivot_variable(ideal);
  Monomial xv = Monomial::variable(ideal.ring().nvars(), v);
  std::vector<Monomial> plus = ideal.gens();
  plus.push_back(xv);
  Poly out = pivot_rec(MonomialIdeal(ideal.ring(), std::move(plus)), memo);
  poly_accumulate(out, pivot_rec(colon_by_monomial(ideal, xv), memo), 1, 1);
  memo.emplace(std::move(key), out);
  return out;
}

}  // namespace

Poly hilbert_numerator_ie(const MonomialIdeal& ideal, int subset_cap) {
  if (ideal.is_zero()) return {{0, 1}};
  int m = ideal.ngens();
  if (m > subset_cap)
    throw CapacityError("subset expansion limit: " + std::to_string(m) + " generators exceed cap " +
                        std::to_string(subset_cap));
  TaylorData data = taylor_enumerate(ideal);
  std::vector<int> deg_of(data.lcms.size());
  for (size_t id = 0; id < data.lcms.size(); ++id)
    deg_of[id] = std::accumulate(data.lcms[id].begin(), data.lcms[id].end(), 0);
  Poly out{{0, 1}};
  size_t total = size_t(1) << m;
  for (size_t s = 1; s < total; ++s) {
    int d = deg_of[static_cast<size_t>(data.lcm_id[s])];
    int sign = (std::popcount(s) % 2 == 0) ? 1 : -1;
    out[d] += sign;
    if (out[d] == 0) out.erase(d);
  }
  return out;
}

Poly hilbert_numerator_pivot(const MonomialIdeal& ideal) {
  std::unordered_map<std::string, Poly> memo;
  return pivot_rec(ideal, memo);
}

Poly hilbert_numerator(const MonomialIdeal& ideal) {
  Poly out = hilbert_numerator_pivot(ideal);
  if (ideal.ngens() <= 22 && hilbert_numerator_ie(ideal) != out)
    throw std::logic_error("series numerator routes disagree");
  return out;
}

namespace {

Poly divide_by_one_minus_t(const Poly& p) {
  BigInt rem = 0;
  for (const auto& [d, c] : p) rem += c;
  if (rem != 0) throw std::logic_error("numerator not divisible by 1 - t");
  if (p.empty()) return {};
  int top = p.rbegin()->first;
  BigInt running = 0;
  Poly out;
  for (int d = 0; d < top; ++d) {
    auto it = p.find(d);
    if (it != p.end()) running += it->second;
    if (running != 0) out[d] = running;
  }
  return out;
}

BigInt poly_at_one(const Poly& p) {
  BigInt out = 0;
  for (const auto& [d, c] : p) out += c;
  return out;
}

}  // namespace

HilbertSummary hilbert_summary(const MonomialIdeal& ideal) {
  HilbertSummary s;
  s.numerator = hilbert_numerator(ideal);
  s.codim = support_codim(ideal);
  Poly q = s.numerator;
  for (int k = 0; k < s.codim; ++k) q = divide_by_one_minus_t(q);
  s.mult = poly_at_one(q);
  return s;
}

BigInt multiplicity(const MonomialIdeal& ideal) { return hilbert_summary(ideal).mult; }

MultBoundReport multiplicity_upper_bound_check(const MonomialIdeal& ideal, const Field& field) {
  if (ideal.is_zero() || ideal.is_unit())
    throw SpecError("the bound needs a proper nonzero ideal");
  MultBoundReport report;
  HilbertSummary hs = hilbert_summary(ideal);
  report.mult = hs.mult;
  report.codim = hs.codim;
  BettiTable table = betti_fine(ideal, field);
  for (int i = 1; i <= report.codim; ++i) {
    int best = -1;
    for (const auto& [key, v] : table.entries) {
      if (key.first != i - 1) continue;
      best = std::max(best, std::accumulate(key.second.begin(), key.second.end(), 0));
    }
    if (best < 0) throw std::logic_error("resolution shorter than the codimension");
    report.max_shifts.push_back(best);
  }
  report.lhs = report.mult;
  for (int i = 2; i <= report.codim; ++i) report.lhs *= i;
  report.rhs = 1;
  for (int m : report.max_shifts) report.rhs *= m;
  report.holds = report.lhs <= report.rhs;
  return report;
}

}  // namespace veronese
