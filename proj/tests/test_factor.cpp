#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zfactor.hpp"

using namespace polyfib;

static UPoly reassemble(const UPoly& f, const std::vector<std::pair<UPoly, int>>& fs) {
  UPoly p = UPoly::constant(f.lc());
  for (const auto& [g, m] : fs)
    for (int i = 0; i < m; ++i) p = p * g;
  return p;
}

TEST_CASE("linear and quadratic factors") {
  // 6(x-1/2)(x+3)
  UPoly f = UPoly::linear(FElem(2), FElem(-1)) * UPoly::linear(FElem(3), FElem(9));
  auto fs = factor_rational(f);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == UPoly::linear(FElem(1), FElem(Rat(-1, 2))));
  CHECK(fs[1].first == UPoly::linear(FElem(1), FElem(3)));
  CHECK(reassemble(f, fs) == f);

  CHECK(is_irreducible_rational(upoly_from_ints({-2, 0, 1})));
  CHECK(is_irreducible_rational(upoly_from_ints({1, 1, 1})));
  CHECK(!is_irreducible_rational(upoly_from_ints({-1, 0, 1})));
}

TEST_CASE("multiplicity structure") {
  // (x-1)^2 (x^2+1)^3
  UPoly a = upoly_from_ints({-1, 1});
  UPoly b = upoly_from_ints({1, 0, 1});
  UPoly f = a * a * b * b * b;
  auto fs = factor_rational(f);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == a);
  CHECK(fs[0].second == 2);
  CHECK(fs[1].first == b);
  CHECK(fs[1].second == 3);
}

TEST_CASE("cyclotomic-style splittings") {
  // x^4 - 1 = (x-1)(x+1)(x^2+1)
  auto fs = factor_rational(upoly_from_ints({-1, 0, 0, 0, 1}));
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].first == upoly_from_ints({-1, 1}));
  CHECK(fs[1].first == upoly_from_ints({1, 1}));
  CHECK(fs[2].first == upoly_from_ints({1, 0, 1}));

  // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
  auto f6 = factor_rational(upoly_from_ints({-1, 0, 0, 0, 0, 0, 1}));
  CHECK(f6.size() == 4);

  // x^12 - 1 has phi-degrees 1,1,2,2,2,4
  auto f12 = factor_rational(upoly_from_ints({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(f12.size() == 6);
  CHECK(f12.back().first.deg() == 4);
}

TEST_CASE("irreducible of moderate degree") {
  // x^8 + x + 1 = (x^2+x+1)(x^6 - x^5 + x^3 - x^2 + 1)
  std::vector<long> c = {1, 1, 0, 0, 0, 0, 0, 0, 1};
  auto fs = factor_rational(upoly_from_ints(c));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == upoly_from_ints({1, 1, 1}));
  CHECK(fs[1].first.deg() == 6);

  // Swinnerton-Dyer style: minpoly of sqrt2+sqrt3, x^4-10x^2+1 irreducible
  CHECK(is_irreducible_rational(upoly_from_ints({1, 0, -10, 0, 1})));
}

TEST_CASE("non-monic with rational coefficients") {
  // (2x - 1/3)(x^2 + 5)(3x + 7)
  UPoly f = UPoly::linear(FElem(2), FElem(Rat(-1, 3))) * upoly_from_ints({5, 0, 1}) *
            UPoly::linear(FElem(3), FElem(7));
  auto fs = factor_rational(f);
  REQUIRE(fs.size() == 3);
  CHECK(reassemble(f, fs) == f);
  for (const auto& [g, m] : fs) {
    CHECK(g.lc().is_one());
    CHECK(m == 1);
  }
}

TEST_CASE("degree stress") {
  // Product of cyclotomics up to a degree ~24 polynomial: x^24 - 1
  std::vector<long> c(25, 0);
  c[0] = -1;
  c[24] = 1;
  auto fs = factor_rational(upoly_from_ints(c));
  // divisors of 24: phi sums; factors count = number of divisors = 8
  CHECK(fs.size() == 8);
  int degsum = 0;
  for (const auto& [g, m] : fs) degsum += g.deg() * m;
  CHECK(degsum == 24);
}
