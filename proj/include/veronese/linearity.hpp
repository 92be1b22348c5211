#pragma once

#include <optional>
#include <utility>

#include "veronese/ring.hpp"

namespace veronese {

enum class OrderDirection { descending_revlex, ascending_revlex, descending_lex };

// Three-way comparison in listing order: negative means a comes before b.
// Revlex directions require equal total degree (SpecError otherwise);
// descending_revlex lists a before b iff the last nonzero entry of
// exp(a)-exp(b) is negative, ascending reverses the listing only.
int compare(const Monomial& a, const Monomial& b, OrderDirection dir);

// Degree-major sort: total degree ascending, then the direction within each
// degree class.
void sort_monomials(std::vector<Monomial>& mons, OrderDirection dir);

// Step-by-step record of a linear-quotient check along a fixed generator
// order. colon_steps[k] holds the minimal generators of
// (u_1,...,u_{k+1}) : u_{k+2}; on a pass every recorded generator is a
// variable. failing_index is the 0-based position of the first bad step.
struct QuotientCertificate {
  std::vector<Monomial> ordered_gens;
  std::vector<std::vector<Monomial>> colon_steps;
  bool verdict = false;
  std::optional<int> failing_index;
};

// Degrees must be nondecreasing along the order (SpecError otherwise).
QuotientCertificate linear_quotients_in_order(const Ring& ring, const std::vector<Monomial>& gens);

struct LinearQuotientsSearch {
  std::optional<QuotientCertificate> certificate;
  // true when the answer is definitive: either a certificate was found, or
  // every degree-respecting order was tried. A miss with determined=false
  // is reported as "undetermined", never as a refutation.
  bool determined = false;
};

// Tries the three directions degree-major, then (when the generator count is
// within the cap) every degree-respecting permutation.
LinearQuotientsSearch search_linear_quotients(const MonomialIdeal& ideal, int exhaustive_cap = 8);

// A failed exchange: exp_u(var_i) > exp_v(var_i), and for every j with
// exp_u(j) < exp_v(j) the swap candidate x_j * u / x_i stays outside the
// ideal. `tried` records each such (j, candidate).
struct ExchangeWitness {
  Monomial u, v;
  int var_i = -1;
  std::vector<std::pair<int, Monomial>> tried;
};

struct PolymatroidalResult {
  bool verdict = false;
  std::optional<ExchangeWitness> witness;
  std::optional<std::string> reason;  // set when the verdict is decided without a witness
};

// Exhaustive exchange check over ordered generator pairs in canonical order.
// Mixed generator degrees give verdict false with a reason (no exception);
// the zero and unit ideals are vacuously true.
PolymatroidalResult is_polymatroidal(const MonomialIdeal& ideal);

// Replays one exchange step: true iff some admissible swap lands in the ideal.
bool exchange_step_holds(const MonomialIdeal& ideal, const Monomial& u, const Monomial& v, int var_i);

// Generator order for ((m_J^a cap m_K^b)_{alpha+d}) designed to have linear
// quotients: strata by total degree in the variables outside J u K
// (ascending), ascending revlex within each stratum after relabeling so the
// J u K variables come first. alpha is the least generator degree of the
// intersection; d >= 0.
std::vector<Monomial> quotient_order_two_veronese(const Ring& ring, const std::vector<int>& J,
                                                  const std::vector<int>& K, int a, int b, int d);

// Same for ((m_J^a cap m_K^b cap m_L^c)_{alpha+d}). Duplicate supports reduce
// to the two-piece order; otherwise the generators are grouped by degree in
// the variables outside J u K u L (ascending; descending revlex within the
// positive groups) and the inside group carries a second stratification by
// the relabeled tail block, ascending revlex within.
std::vector<Monomial> quotient_order_three_veronese(const Ring& ring, const std::vector<int>& J,
                                                    const std::vector<int>& K, const std::vector<int>& L,
                                                    int a, int b, int c, int d);

}  // namespace veronese
