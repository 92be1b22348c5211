#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>
#include <vector>

#include "veronese/ring.hpp"

namespace veronese {

using BigInt = boost::multiprecision::cpp_int;

enum class Grading { fine, block, total };

// coefficient field for rank computations; characteristic 0 switches to exact
// rational arithmetic
struct Field {
  long long characteristic = 32003;
};

// rank of an integer matrix over the field: fraction-free elimination when
// exact, Gaussian elimination mod p otherwise (SpecError on a composite p
// once an inversion is needed)
long long matrix_rank(const std::vector<std::vector<long long>>& m, const Field& field);

// graded Betti numbers of an ideal viewed as a module, beta_{i,deg}(I)
struct BettiTable {
  Grading grading = Grading::fine;
  // key: homological index i, then the degree vector (one entry per variable
  // for fine grading, per block for block grading, a single entry for total)
  std::map<std::pair<int, std::vector<int>>, long long> entries;

  long long entry(int i, const std::vector<int>& deg) const;
  void add(int i, const std::vector<int>& deg, long long value);
  int pdim() const;        // largest i carrying a nonzero entry
  int regularity() const;  // max over entries of |deg| - i
  long long total(int i, int j) const;  // sum of entries with index i, |deg| = j
  bool operator==(const BettiTable& other) const = default;
};

BettiTable coarsen(const BettiTable& table, Grading target, const Ring& ring);

// strand-by-strand homology of the generator-subset complex; refuses ideals
// with more generators than subset_cap
BettiTable taylor_betti(const MonomialIdeal& ideal, const Field& field = {}, int subset_cap = 22);

// homology of the upper simplicial complexes attached to the join lattice of
// the generators; scales past the subset engine
BettiTable koszul_betti(const MonomialIdeal& ideal, const Field& field = {});

// picks whichever engine fits the ideal
BettiTable betti_fine(const MonomialIdeal& ideal, const Field& field = {});

bool has_linear_resolution(const MonomialIdeal& ideal, const Field& field = {});

struct CwlReport {
  bool verdict = false;
  int min_degree = 0;
  int regularity = 0;
  // one verdict per degree in [min_degree, regularity]
  std::vector<std::pair<int, bool>> components;
};

CwlReport is_componentwise_linear(const MonomialIdeal& ideal, const Field& field = {});

// sparse polynomial in one variable, degree -> coefficient
using Poly = std::map<int, BigInt>;

// numerator of the Hilbert series of the quotient by the ideal, over the
// full (1-t)^n denominator
Poly hilbert_numerator_ie(const MonomialIdeal& ideal, int subset_cap = 22);
Poly hilbert_numerator_pivot(const MonomialIdeal& ideal);
// pivot recursion, cross-checked against the subset expansion when small
Poly hilbert_numerator(const MonomialIdeal& ideal);

BigInt multiplicity(const MonomialIdeal& ideal);

struct HilbertSummary {
  Poly numerator;
  int codim = 0;
  BigInt mult;
};

HilbertSummary hilbert_summary(const MonomialIdeal& ideal);

struct MultBoundReport {
  BigInt mult;
  int codim = 0;
  std::vector<int> max_shifts;  // largest shift in each homological degree 1..codim of the quotient
  BigInt lhs;                   // mult * codim!
  BigInt rhs;                   // product of the max shifts
  bool holds = false;
};

MultBoundReport multiplicity_upper_bound_check(const MonomialIdeal& ideal, const Field& field = {});

}  // namespace veronese
