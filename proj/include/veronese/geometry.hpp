#pragma once

#include <vector>

#include "veronese/betti.hpp"
#include "veronese/ring.hpp"

namespace veronese {

// A finite set of fat points in a product of projective spaces
// P^{n_1} x ... x P^{n_r}, supported at coordinate points.  Block i of the
// ring carries the n_i + 1 coordinates of the i-th factor, and point j is the
// j-th coordinate vertex of every factor simultaneously.  That normal form is
// what keeps the defining ideal monomial; it also caps the number of points
// at 1 + min_i(n_i).
struct FatPointScheme {
  Ring ring;
  std::vector<int> mults;  // multiplicity of each point, all >= 1

  FatPointScheme(Ring r, std::vector<int> m);

  int npoints() const { return static_cast<int>(mults.size()); }
};

// Defining ideal of the scheme: the j-th point contributes the power a_j of
// the ideal generated by every variable that vanishes at the point (all
// coordinates except the j-th one in each block), and the scheme ideal is the
// intersection over the points, returned with a minimal generating set.
MonomialIdeal fat_points_ideal(const FatPointScheme& scheme);

// Two points on P^1 x P^1 in *non-generic* position: both points share a
// coordinate hyperplane, so the defining ideal (x0*x1, y0*y1) falls outside
// the coordinate-vertex normal form above.  Kept as a fixture because it is
// the standard witness that genericity matters: this ideal is not
// componentwise linear.
MonomialIdeal non_general_fixture();

// A simplicial complex on vertices 1..n, described by its minimal nonfaces.
struct SimplicialComplexSpec {
  int vertices = 0;
  std::vector<std::vector<int>> nonfaces;  // 1-based vertex sets

  SimplicialComplexSpec(int n, std::vector<std::vector<int>> nf);
};

// Stanley-Reisner ideal of the complex: one squarefree generator per minimal
// nonface, in the polynomial ring with one variable per vertex.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplexSpec& spec);

// Sequential Cohen-Macaulayness of the complex, decided through duality:
// the complex is sequentially CM exactly when the Alexander dual of its
// Stanley-Reisner ideal is componentwise linear.
bool is_sequentially_cm(const SimplicialComplexSpec& spec, const Field& field = {});

}  // namespace veronese
