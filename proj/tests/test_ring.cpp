#include <algorithm>
#include <vector>

#include "doctest.h"
#include "veronese/ring.hpp"

using namespace veronese;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

std::vector<std::string> fmt(const MonomialIdeal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.gens()) out.push_back(I.ring().format(g));
  return out;
}

}  // namespace

TEST_CASE("monomial basics") {
  Monomial m({2, 0, 1});
  CHECK(m.degree() == 3);
  CHECK(m.exp(0) == 2);
  CHECK(m.support() == std::vector<int>{0, 2});
  CHECK(m.degree_on({0, 1}) == 2);
  CHECK_FALSE(m.is_one());
  CHECK(mono({0, 0, 0}).is_one());
}

TEST_CASE("canonical order is degree-major, descending revlex inside a degree") {
  // within degree 2 on three variables: x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2
  auto degree2 = monomials_of_degree(3, 2);
  REQUIRE(degree2.size() == 6);
  CHECK(degree2.front() == mono({2, 0, 0}));
  CHECK(degree2[1] == mono({1, 1, 0}));
  CHECK(degree2.back() == mono({0, 0, 2}));
  CHECK(std::is_sorted(degree2.begin(), degree2.end(), canonical_less));

  CHECK(revlex_sign({1, 1, 0}, {0, 2, 0}) == 1);   // last nonzero diff is -1
  CHECK(revlex_sign({0, 2, 0}, {1, 1, 0}) == -1);
  CHECK(revlex_sign({1, 1, 0}, {1, 1, 0}) == 0);
}

TEST_CASE("monomials_of_degree counts") {
  CHECK(monomials_of_degree(4, 3).size() == 20);  // C(6,3)
  CHECK(monomials_of_degree_on(5, 2, {1, 3}).size() == 3);
  for (const auto& m : monomials_of_degree_on(5, 2, {1, 3})) {
    CHECK(m.exp(0) == 0);
    CHECK(m.degree() == 2);
  }
}

TEST_CASE("minimalize drops divisible generators and sorts canonically") {
  auto gens = minimalize({mono({1, 1, 0}), mono({2, 1, 0}), mono({0, 0, 1})});
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == mono({0, 0, 1}));
  CHECK(gens[1] == mono({1, 1, 0}));
}

TEST_CASE("veronese_power lists the full degree-a slice on the support") {
  Ring R = Ring::standard(3);
  MonomialIdeal I = veronese_power(R, {0, 1}, 2);
  CHECK(fmt(I) == std::vector<std::string>{"x1^2", "x1*x2", "x2^2"});
  CHECK(I.is_equigenerated());
  CHECK(I.min_gen_degree() == 2);
}

TEST_CASE("three squarefree pieces in five variables") {
  Ring R = Ring::standard(5);
  VeroneseSpec spec{{{{0, 1, 2}, 1}, {{0, 3, 4}, 1}, {{1, 2, 4}, 1}}};
  MonomialIdeal I = veronese_ideal(R, spec);
  CHECK(I.ngens() == 7);
  auto gens = fmt(I);
  std::sort(gens.begin(), gens.end());
  std::vector<std::string> expected = {"x1*x2", "x1*x3", "x1*x5", "x2*x4",
                                       "x2*x5", "x3*x4", "x3*x5"};
  std::sort(expected.begin(), expected.end());
  CHECK(gens == expected);
}

TEST_CASE("deep two-piece intersection in five variables") {
  Ring R = Ring::standard(5);
  VeroneseSpec spec{{{{0, 1}, 3}, {{1, 2, 3, 4}, 2}}};
  MonomialIdeal I = veronese_ideal(R, spec);
  CHECK(I.ngens() == 11);
  auto gens = fmt(I);
  std::sort(gens.begin(), gens.end());
  std::vector<std::string> expected = {
      "x1*x2^2",    "x2^3",       "x1^2*x2*x3", "x1^2*x2*x4", "x1^2*x2*x5", "x1^3*x3^2",
      "x1^3*x3*x4", "x1^3*x3*x5", "x1^3*x4^2",  "x1^3*x4*x5", "x1^3*x5^2"};
  std::sort(expected.begin(), expected.end());
  CHECK(gens == expected);
}

TEST_CASE("four cycle edge primes intersect to the diagonal pair") {
  Ring R = Ring::standard(4);
  VeroneseSpec spec{{{{0, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}, {{0, 3}, 1}}};
  MonomialIdeal I = veronese_ideal(R, spec);
  CHECK(fmt(I) == std::vector<std::string>{"x1*x3", "x2*x4"});
}

TEST_CASE("ideal arithmetic") {
  Ring R = Ring::standard(4);
  MonomialIdeal x1(R, {mono({1, 0, 0, 0})});
  MonomialIdeal x23(R, {mono({0, 1, 0, 0}), mono({0, 0, 1, 0})});
  CHECK(fmt(multiply(x1, x23)) == std::vector<std::string>{"x1*x2", "x1*x3"});

  MonomialIdeal ci(R, {mono({1, 0, 1, 0}), mono({0, 1, 0, 1})});
  SUBCASE("colon by a coprime monomial is the identity") {
    CHECK(colon_by_monomial(MonomialIdeal(R, {mono({1, 0, 1, 0})}), mono({0, 1, 0, 1})) ==
          MonomialIdeal(R, {mono({1, 0, 1, 0})}));
  }
  SUBCASE("colon by a member is the unit ideal") {
    MonomialIdeal I(R, {mono({1, 1, 0, 0}), mono({1, 0, 1, 0})});
    CHECK(colon_by_monomial(I, mono({1, 1, 0, 0})).is_unit());
  }
  SUBCASE("power") {
    MonomialIdeal sq = power(ci, 2);
    CHECK(sq.ngens() == 3);
    CHECK(sq.contains(mono({2, 0, 2, 0})));
    CHECK_THROWS_AS(power(ci, 0), SpecError);
  }
  SUBCASE("degree components") {
    CHECK(degree_component(ci, 2) == ci);
    CHECK(degree_component(ci, 1).is_zero());
    CHECK(degree_component(ci, 3).ngens() == 8);
  }
}

TEST_CASE("alexander dual") {
  Ring R = Ring::standard(4);
  MonomialIdeal ci(R, {mono({1, 0, 1, 0}), mono({0, 1, 0, 1})});
  MonomialIdeal dual = alexander_dual(ci);
  // (x1,x3) cap (x2,x4) = pairwise products
  CHECK(dual.ngens() == 4);
  CHECK(alexander_dual(dual) == ci);

  SUBCASE("non-squarefree input is rejected") {
    MonomialIdeal bad(R, {mono({2, 0, 0, 0})});
    CHECK_THROWS_AS(alexander_dual(bad), SpecError);
  }
  SUBCASE("unit ideal dualizes to zero") {
    MonomialIdeal unit(R, {mono({0, 0, 0, 0})});
    CHECK(alexander_dual(unit).is_zero());
  }
}

TEST_CASE("support codim") {
  Ring R = Ring::standard(6);
  MonomialIdeal ci(Ring::standard(4), {mono({1, 0, 1, 0}), mono({0, 1, 0, 1})});
  CHECK(support_codim(ci) == 2);
  MonomialIdeal cx(R, {mono({1, 0, 0, 1, 1, 0}), mono({1, 1, 0, 0, 0, 1}),
                       mono({1, 0, 1, 0, 1, 0})});
  CHECK(support_codim(cx) == 1);  // x1 meets every generator
}

TEST_CASE("extend_ring keeps exponents and appends fresh variables") {
  Ring R = Ring::standard(2);
  MonomialIdeal I(R, {mono({1, 1})});
  MonomialIdeal J = extend_ring(I, 2);
  CHECK(J.ring().nvars() == 4);
  CHECK(J.ring().nblocks() == 2);
  CHECK(J.gens()[0].exps() == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("blocked rings name and grade variables per factor") {
  Ring R = Ring::blocked({2, 2});
  CHECK(R.names() == std::vector<std::string>{"x0", "x1", "y0", "y1"});
  CHECK(R.block_of(0) == 0);
  CHECK(R.block_of(3) == 1);
  CHECK(R.block_degree(mono({1, 0, 0, 1})) == std::vector<int>{1, 1});
  CHECK(R.format(mono({1, 1, 0, 0})) == "x0*x1");
}

TEST_CASE("spec validation") {
  Ring R = Ring::standard(3);
  SUBCASE("empty support") {
    VeroneseSpec spec{{{{}, 1}}};
    CHECK_THROWS_AS(spec.validate(R), SpecError);
  }
  SUBCASE("support out of range") {
    VeroneseSpec spec{{{{3}, 1}}};
    CHECK_THROWS_AS(spec.validate(R), SpecError);
  }
  SUBCASE("nonpositive power") {
    VeroneseSpec spec{{{{0}, 0}}};
    CHECK_THROWS_AS(spec.validate(R), SpecError);
  }
}
