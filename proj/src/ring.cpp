#include "veronese/ring.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace veronese {

Monomial::Monomial(Exps exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw SpecError("monomial exponents must be nonnegative");
    degree_ += e;
  }
}

Monomial Monomial::one(int nvars) { return Monomial(Exps(static_cast<size_t>(nvars), 0)); }

Monomial Monomial::variable(int nvars, int v) {
  Exps e(static_cast<size_t>(nvars), 0);
  e.at(static_cast<size_t>(v)) = 1;
  return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const {
  for (int e : exps_)
    if (e > 1) return false;
  return true;
}

bool Monomial::is_variable() const { return degree_ == 1; }

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int v = 0; v < nvars(); ++v)
    if (exps_[static_cast<size_t>(v)] > 0) s.push_back(v);
  return s;
}

uint32_t Monomial::support_mask() const {
  uint32_t m = 0;
  for (int v = 0; v < nvars(); ++v)
    if (exps_[static_cast<size_t>(v)] > 0) m |= (1u << v);
  return m;
}

int Monomial::degree_on(const std::vector<int>& vars) const {
  int d = 0;
  for (int v : vars) d += exps_[static_cast<size_t>(v)];
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw SpecError("monomials live in different rings");
  if (a.degree() > b.degree()) return false;
  for (int v = 0; v < a.nvars(); ++v)
    if (a.exp(v) > b.exp(v)) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw SpecError("monomials live in different rings");
  Exps e(a.exps());
  for (int v = 0; v < a.nvars(); ++v) e[static_cast<size_t>(v)] = std::max(a.exp(v), b.exp(v));
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw SpecError("monomials live in different rings");
  Exps e(a.exps());
  for (int v = 0; v < a.nvars(); ++v) e[static_cast<size_t>(v)] = std::min(a.exp(v), b.exp(v));
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw SpecError("monomials live in different rings");
  Exps e(a.exps());
  for (int v = 0; v < a.nvars(); ++v) e[static_cast<size_t>(v)] += b.exp(v);
  return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& u, const Monomial& m) {
  if (u.nvars() != m.nvars()) throw SpecError("monomials live in different rings");
  Exps e(u.exps());
  for (int v = 0; v < u.nvars(); ++v) e[static_cast<size_t>(v)] = std::max(0, u.exp(v) - m.exp(v));
  return Monomial(std::move(e));
}

Monomial divide_exact(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw SpecError("inexact monomial division");
  Exps e(b.exps());
  for (int v = 0; v < b.nvars(); ++v) e[static_cast<size_t>(v)] -= a.exp(v);
  return Monomial(std::move(e));
}

size_t hash_value(const Exps& e) {
  size_t h = 1469598103934665603ull;
  for (int x : e) {
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

Ring::Ring(std::vector<int> blocks, std::vector<std::string> names)
    : blocks_(std::move(blocks)), names_(std::move(names)) {
  if (blocks_.empty()) throw SpecError("ring needs at least one block");
  for (int b : blocks_)
    if (b < 1) throw SpecError("ring block sizes must be positive");
  nvars_ = std::accumulate(blocks_.begin(), blocks_.end(), 0);
  if (static_cast<int>(names_.size()) != nvars_)
    throw SpecError("ring variable name count does not match block sizes");
  block_of_.reserve(static_cast<size_t>(nvars_));
  for (int b = 0; b < nblocks(); ++b)
    for (int k = 0; k < blocks_[static_cast<size_t>(b)]; ++k) block_of_.push_back(b);
}

Ring Ring::standard(int nvars) {
  if (nvars < 1) throw SpecError("ring needs at least one variable");
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(nvars));
  for (int v = 1; v <= nvars; ++v) names.push_back("x" + std::to_string(v));
  return Ring({nvars}, std::move(names));
}

Ring Ring::blocked(std::vector<int> blocks) {
  static const char* letters[] = {"x", "y", "z", "w", "u", "v"};
  std::vector<std::string> names;
  for (size_t b = 0; b < blocks.size(); ++b) {
    std::string base = b < 6 ? letters[b] : ("x" + std::to_string(b + 1) + "_");
    for (int k = 0; k < blocks[b]; ++k) names.push_back(base + std::to_string(k));
  }
  return Ring(std::move(blocks), std::move(names));
}

std::vector<int> Ring::block_degree(const Monomial& m) const {
  if (m.nvars() != nvars_) throw SpecError("monomial does not match ring");
  std::vector<int> d(static_cast<size_t>(nblocks()), 0);
  for (int v = 0; v < nvars_; ++v) d[static_cast<size_t>(block_of_[static_cast<size_t>(v)])] += m.exp(v);
  return d;
}

std::string Ring::format(const Monomial& m) const {
  if (m.nvars() != nvars_) throw SpecError("monomial does not match ring");
  if (m.is_one()) return "1";
  std::string out;
  for (int v = 0; v < nvars_; ++v) {
    int e = m.exp(v);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names_[static_cast<size_t>(v)];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

void VeroneseSpec::validate(const Ring& ring) const {
  if (pieces.empty()) throw SpecError("intersection spec needs at least one piece");
  for (const auto& p : pieces) {
    if (p.power < 1) throw SpecError("piece powers must be positive");
    if (p.support.empty()) throw SpecError("piece supports must be nonempty");
    int prev = -1;
    for (int v : p.support) {
      if (v < 0 || v >= ring.nvars()) throw SpecError("piece support index out of range");
      if (v <= prev) throw SpecError("piece supports must be strictly increasing");
      prev = v;
    }
  }
}

int revlex_sign(const Exps& a, const Exps& b) {
  for (size_t i = a.size(); i-- > 0;) {
    int d = a[i] - b[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return revlex_sign(a.exps(), b.exps()) > 0;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  // sorted by degree: a divisor always precedes its multiples
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (k.degree() >= g.degree()) break;
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  for (const auto& g : gens)
    if (g.nvars() != ring_.nvars()) throw SpecError("generator does not match ring");
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(Ring ring) { return MonomialIdeal(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::unit(Ring ring) {
  int n = ring.nvars();
  return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    if (!g.is_squarefree()) return false;
  return true;
}

bool MonomialIdeal::is_equigenerated() const {
  if (gens_.empty()) return false;
  return gens_.front().degree() == gens_.back().degree();
}

int MonomialIdeal::min_gen_degree() const {
  if (gens_.empty()) throw SpecError("zero ideal has no generator degrees");
  return gens_.front().degree();
}

int MonomialIdeal::max_gen_degree() const {
  if (gens_.empty()) throw SpecError("zero ideal has no generator degrees");
  return gens_.back().degree();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_) {
    if (g.degree() > m.degree()) return false;
    if (divides(g, m)) return true;
  }
  return false;
}

namespace {

void compositions(int d, int slots, Exps& acc, std::vector<Exps>& out) {
  if (slots == 1) {
    acc.push_back(d);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int e = 0; e <= d; ++e) {
    acc.push_back(e);
    compositions(d - e, slots - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree_on(int nvars, int d, const std::vector<int>& vars) {
  if (d < 0) return {};
  if (vars.empty()) {
    if (d == 0) return {Monomial::one(nvars)};
    return {};
  }
  std::vector<Exps> packed;
  Exps acc;
  compositions(d, static_cast<int>(vars.size()), acc, packed);
  std::vector<Monomial> out;
  out.reserve(packed.size());
  for (const auto& p : packed) {
    Exps e(static_cast<size_t>(nvars), 0);
    for (size_t i = 0; i < vars.size(); ++i) e[static_cast<size_t>(vars[i])] = p[i];
    out.emplace_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<int> vars(static_cast<size_t>(nvars));
  for (int v = 0; v < nvars; ++v) vars[static_cast<size_t>(v)] = v;
  return monomials_of_degree_on(nvars, d, vars);
}

MonomialIdeal veronese_power(const Ring& ring, const std::vector<int>& support, int a) {
  VeroneseSpec spec{{VeronesePiece{support, a}}};
  spec.validate(ring);
  return MonomialIdeal(ring, monomials_of_degree_on(ring.nvars(), a, support));
}

MonomialIdeal veronese_ideal(const Ring& ring, const VeroneseSpec& spec) {
  spec.validate(ring);
  MonomialIdeal out = veronese_power(ring, spec.pieces.front().support, spec.pieces.front().power);
  for (size_t i = 1; i < spec.pieces.size(); ++i)
    out = intersect(out, veronese_power(ring, spec.pieces[i].support, spec.pieces[i].power));
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring() != b.ring()) throw SpecError("ideal rings differ");
  std::unordered_set<Exps, ExpsHash> seen;
  std::vector<Monomial> gens;
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) {
      Monomial w = lcm(u, v);
      if (seen.insert(w.exps()).second) gens.push_back(std::move(w));
    }
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring() != b.ring()) throw SpecError("ideal rings differ");
  std::unordered_set<Exps, ExpsHash> seen;
  std::vector<Monomial> gens;
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) {
      Monomial w = u * v;
      if (seen.insert(w.exps()).second) gens.push_back(std::move(w));
    }
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 1) throw SpecError("ideal powers must be positive");
  MonomialIdeal out = a;
  for (int i = 1; i < k; ++i) out = multiply(out, a);
  return out;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& m) {
  if (m.nvars() != a.ring().nvars()) throw SpecError("monomial does not match ring");
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size());
  for (const auto& u : a.gens()) gens.push_back(colon_quotient(u, m));
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal degree_component_on(const MonomialIdeal& ideal, int d, const std::vector<int>& vars) {
  if (d < 0) return MonomialIdeal::zero(ideal.ring());
  if (ideal.is_zero() || d < ideal.min_gen_degree()) return MonomialIdeal::zero(ideal.ring());
  std::unordered_set<Exps, ExpsHash> seen;
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    if (g.degree() > d) break;
    for (const auto& h : monomials_of_degree_on(ideal.ring().nvars(), d - g.degree(), vars)) {
      Monomial w = g * h;
      if (seen.insert(w.exps()).second) gens.push_back(std::move(w));
    }
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal degree_component(const MonomialIdeal& ideal, int d) {
  std::vector<int> vars(static_cast<size_t>(ideal.ring().nvars()));
  for (int v = 0; v < ideal.ring().nvars(); ++v) vars[static_cast<size_t>(v)] = v;
  return degree_component_on(ideal, d, vars);
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw SpecError("alexander dual needs a squarefree ideal");
  // duality swaps the zero and unit ideals
  if (ideal.is_unit()) return MonomialIdeal::zero(ideal.ring());
  MonomialIdeal out = MonomialIdeal::unit(ideal.ring());
  for (const auto& g : ideal.gens())
    out = intersect(out, veronese_power(ideal.ring(), g.support(), 1));
  return out;
}

int support_codim(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return 0;
  if (ideal.is_unit()) throw SpecError("unit ideal has no support cover");
  if (ideal.ring().nvars() > 31) throw SpecError("support_codim limited to 31 variables");
  std::vector<uint32_t> supports;
  uint32_t all = 0;
  for (const auto& g : ideal.gens()) {
    supports.push_back(g.support_mask());
    all |= supports.back();
  }
  // iterate subsets of the support union grouped by size
  std::vector<int> bits;
  for (int v = 0; v < ideal.ring().nvars(); ++v)
    if (all & (1u << v)) bits.push_back(v);
  int nb = static_cast<int>(bits.size());
  for (int size = 1; size <= nb; ++size) {
    // enumerate size-subsets of bits via combination walking
    std::vector<int> idx(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      uint32_t cover = 0;
      for (int i : idx) cover |= (1u << bits[static_cast<size_t>(i)]);
      bool hits_all = true;
      for (uint32_t s : supports)
        if ((s & cover) == 0) {
          hits_all = false;
          break;
        }
      if (hits_all) return size;
      int k = size - 1;
      while (k >= 0 && idx[static_cast<size_t>(k)] == nb - size + k) --k;
      if (k < 0) break;
      ++idx[static_cast<size_t>(k)];
      for (int j = k + 1; j < size; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  throw SpecError("unreachable: support union covers itself");
}

MonomialIdeal extend_ring(const MonomialIdeal& ideal, int extra) {
  if (extra < 1) throw SpecError("extend_ring needs a positive variable count");
  const Ring& r = ideal.ring();
  std::vector<int> blocks = r.blocks();
  blocks.push_back(extra);
  std::vector<std::string> names = r.names();
  for (int k = 1; k <= extra; ++k) names.push_back("t" + std::to_string(k));
  Ring ext(std::move(blocks), std::move(names));
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) {
    Exps e = g.exps();
    e.resize(static_cast<size_t>(ext.nvars()), 0);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(ext), std::move(gens));
}

}  // namespace veronese
