#include "veronese/geometry.hpp"

#include <algorithm>
#include <string>

namespace veronese {

FatPointScheme::FatPointScheme(Ring r, std::vector<int> m)
    : ring(std::move(r)), mults(std::move(m)) {
  if (ring.nblocks() == 0) throw SpecError("fat point scheme needs at least one projective factor");
  int min_dim = -1;
  for (int b = 0; b < ring.nblocks(); ++b) {
    const int dim = ring.blocks()[static_cast<size_t>(b)] - 1;  // n_i of the factor P^{n_i}
    if (dim < 1) throw SpecError("every projective factor must have dimension at least 1");
    if (min_dim < 0 || dim < min_dim) min_dim = dim;
  }
  if (mults.empty()) throw SpecError("fat point scheme needs at least one point");
  for (int a : mults)
    if (a < 1) throw SpecError("point multiplicities must be positive");
  if (npoints() > 1 + min_dim)
    throw SpecError("too many points: coordinate vertices allow at most 1 + min block dimension");
}

MonomialIdeal fat_points_ideal(const FatPointScheme& scheme) {
  const Ring& ring = scheme.ring;
  std::vector<VeronesePiece> pieces;
  pieces.reserve(scheme.mults.size());
  for (int j = 0; j < scheme.npoints(); ++j) {
    // Point j is the j-th coordinate vertex of every factor; its vanishing
    // ideal is generated by all coordinates except offset j in each block.
    std::vector<int> support;
    int offset = 0;
    for (int b = 0; b < ring.nblocks(); ++b) {
      const int size = ring.blocks()[static_cast<size_t>(b)];
      for (int k = 0; k < size; ++k)
        if (k != j) support.push_back(offset + k);
      offset += size;
    }
    pieces.push_back(VeronesePiece{std::move(support), scheme.mults[static_cast<size_t>(j)]});
  }
  return veronese_ideal(ring, VeroneseSpec{std::move(pieces)});
}

MonomialIdeal non_general_fixture() {
  Ring ring = Ring::blocked({2, 2});
  Monomial x01({1, 1, 0, 0});
  Monomial y01({0, 0, 1, 1});
  return MonomialIdeal(ring, {x01, y01});
}

SimplicialComplexSpec::SimplicialComplexSpec(int n, std::vector<std::vector<int>> nf)
    : vertices(n), nonfaces(std::move(nf)) {
  if (vertices < 1) throw SpecError("a simplicial complex needs at least one vertex");
  for (auto& face : nonfaces) {
    if (face.empty()) throw SpecError("a minimal nonface cannot be empty");
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    for (int v : face)
      if (v < 1 || v > vertices)
        throw SpecError("nonface vertex " + std::to_string(v) + " is out of range");
  }
  for (size_t i = 0; i < nonfaces.size(); ++i)
    for (size_t j = 0; j < nonfaces.size(); ++j) {
      if (i == j) continue;
      if (std::includes(nonfaces[j].begin(), nonfaces[j].end(),
                        nonfaces[i].begin(), nonfaces[i].end()))
        throw SpecError("minimal nonfaces must be pairwise incomparable");
    }
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplexSpec& spec) {
  Ring ring = Ring::standard(spec.vertices);
  std::vector<Monomial> gens;
  gens.reserve(spec.nonfaces.size());
  for (const auto& face : spec.nonfaces) {
    std::vector<int> exps(static_cast<size_t>(spec.vertices), 0);
    for (int v : face) exps[static_cast<size_t>(v - 1)] = 1;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(ring, std::move(gens));
}

bool is_sequentially_cm(const SimplicialComplexSpec& spec, const Field& field) {
  MonomialIdeal sr = stanley_reisner_ideal(spec);
  MonomialIdeal dual = alexander_dual(sr);
  return is_componentwise_linear(dual, field).verdict;
}

}  // namespace veronese
