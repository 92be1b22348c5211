#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace veronese {

// Caller-facing input errors (bad supports, ring mismatches, non-squarefree
// input to duality, ...).
class SpecError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exact computation would exceed a hard enumeration cap.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Exps = std::vector<int>;

// A monomial is an exponent vector over a fixed number of variables.
// Variable indices are 0-based throughout the C++ API; the JSON document
// layer and the python bindings speak 1-based.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(Exps exps);
  static Monomial one(int nvars);
  static Monomial variable(int nvars, int v);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int exp(int v) const { return exps_[static_cast<size_t>(v)]; }
  const Exps& exps() const { return exps_; }

  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const;
  bool is_variable() const;
  std::vector<int> support() const;
  uint32_t support_mask() const;  // nvars <= 32 only
  int degree_on(const std::vector<int>& vars) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
  Exps exps_;
  int degree_ = 0;
};

bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
// u / gcd(u, m): the generator image in a colon computation.
Monomial colon_quotient(const Monomial& u, const Monomial& m);
// b / a; requires a | b.
Monomial divide_exact(const Monomial& b, const Monomial& a);

size_t hash_value(const Exps& e);

struct ExpsHash {
  size_t operator()(const Exps& e) const { return hash_value(e); }
};

// Polynomial ring context: variable names plus a block partition of the
// variables (block sizes sum to nvars). A single block means the usual
// standard grading; several blocks give the multigraded setting used for
// products of projective spaces, where block i holds n_i + 1 coordinates.
class Ring {
public:
  Ring() = default;
  Ring(std::vector<int> blocks, std::vector<std::string> names);
  static Ring standard(int nvars);            // x1..xn, one block
  static Ring blocked(std::vector<int> blocks);  // x0..,y0..,z0.. per block

  int nvars() const { return nvars_; }
  int nblocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& blocks() const { return blocks_; }
  const std::vector<std::string>& names() const { return names_; }
  int block_of(int v) const { return block_of_[static_cast<size_t>(v)]; }

  std::vector<int> block_degree(const Monomial& m) const;
  std::string format(const Monomial& m) const;  // "x1^2*x3", "1" for the unit

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.blocks_ == b.blocks_ && a.names_ == b.names_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
  std::vector<int> blocks_;
  std::vector<std::string> names_;
  std::vector<int> block_of_;
  int nvars_ = 0;
};

// One piece m_J^a of an intersection spec: J a nonempty variable subset
// (0-based, strictly increasing), a >= 1.
struct VeronesePiece {
  std::vector<int> support;
  int power = 1;
};

struct VeroneseSpec {
  std::vector<VeronesePiece> pieces;
  void validate(const Ring& ring) const;
};

// Monomial ideal with a fixed minimal generating set held in canonical order:
// total degree ascending, then descending reverse-lexicographic within a
// degree (m1 before m2 iff the last nonzero entry of exp(m1)-exp(m2) is
// negative). Generators are minimal: none divides another.
class MonomialIdeal {
public:
  MonomialIdeal(Ring ring, std::vector<Monomial> gens);
  static MonomialIdeal zero(Ring ring);
  static MonomialIdeal unit(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int ngens() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_.front().is_one(); }
  bool is_squarefree() const;
  bool is_equigenerated() const;  // all generators in one degree (false if zero)
  int min_gen_degree() const;     // SpecError on the zero ideal
  int max_gen_degree() const;

  bool contains(const Monomial& m) const;  // divisibility against the generators

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

// last nonzero entry of a-b: negative -> +1 (a revlex-greater), positive -> -1,
// all zero -> 0. Degrees are assumed equal by the caller.
int revlex_sign(const Exps& a, const Exps& b);

// Canonical generator order: degree ascending, descending revlex within.
bool canonical_less(const Monomial& a, const Monomial& b);

std::vector<Monomial> minimalize(std::vector<Monomial> gens);

// All monomials of total degree d in the given variables (others zero),
// in descending revlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);
std::vector<Monomial> monomials_of_degree_on(int nvars, int d, const std::vector<int>& vars);

// m_J^a: all degree-a monomials supported on J.
MonomialIdeal veronese_power(const Ring& ring, const std::vector<int>& support, int a);

// Intersection of the pieces m_{J_i}^{a_i}.
MonomialIdeal veronese_ideal(const Ring& ring, const VeroneseSpec& spec);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int k);  // k >= 1
MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& m);

// (I_d): the ideal generated by the degree-d part of I.
MonomialIdeal degree_component(const MonomialIdeal& ideal, int d);
// Same, but multiples are drawn from the listed variables only; used for
// component decompositions inside a subring.
MonomialIdeal degree_component_on(const MonomialIdeal& ideal, int d, const std::vector<int>& vars);

// Squarefree Alexander dual: intersection of the prime ideals on the
// generator supports. SpecError on non-squarefree input.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

// Minimum size of a variable subset meeting every generator's support
// (the height of a squarefree-supported cover; exhaustive by subset size).
// Zero ideal -> 0; unit ideal -> SpecError (the empty support has no cover).
int support_codim(const MonomialIdeal& ideal);

// Re-embed into a ring with `extra` fresh trailing variables (appended as one
// new block). Generators keep their exponents on the old variables.
MonomialIdeal extend_ring(const MonomialIdeal& ideal, int extra);

}  // namespace veronese
