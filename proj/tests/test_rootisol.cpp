#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <doctest.h>

#include "rootisol.hpp"

using namespace polyfib;

static bool box_contains(const Box& b, const Rat& re, const Rat& im) {
  return b.re.contains(re) && b.im.contains(im);
}

TEST_CASE("winding counts") {
  UPoly p = upoly_from_ints({-2, 0, 1});  // x^2 - 2
  CBox around_sqrt2(RatIv(Rat(1), Rat(2)), RatIv(Rat(-1), Rat(1)));
  CHECK(winding_count(p, around_sqrt2) == 1);
  CBox both(RatIv(Rat(-3), Rat(3)), RatIv(Rat(-1), Rat(1)));
  CHECK(winding_count(p, both) == 2);
  CBox none(RatIv(Rat(3), Rat(4)), RatIv(Rat(-1), Rat(1)));
  CHECK(winding_count(p, none) == 0);

  // Multiplicity is counted: (x-1)^3
  UPoly c = upoly_from_ints({-1, 3, -3, 1});
  CBox b1(RatIv(Rat(1, 2), Rat(3, 2)), RatIv(Rat(-1, 2), Rat(1, 2)));
  CHECK(winding_count(c, b1) == 3);

  // Pure imaginary pair x^2 + 1
  UPoly q = upoly_from_ints({1, 0, 1});
  CBox upper(RatIv(Rat(-1, 2), Rat(1, 2)), RatIv(Rat(1, 2), Rat(3, 2)));
  CHECK(winding_count(q, upper) == 1);
}

TEST_CASE("isolate rational roots") {
  // (x-1)(x+2)(x-1/3)
  UPoly p = UPoly::linear(FElem(1), FElem(-1)) * UPoly::linear(FElem(1), FElem(2)) *
            UPoly::linear(FElem(1), FElem(Rat(-1, 3)));
  auto boxes = isolate_roots(p);
  REQUIRE(boxes.size() == 3);
  CHECK(box_contains(boxes[0], Rat(-2), Rat(0)));
  CHECK(box_contains(boxes[1], Rat(1, 3), Rat(0)));
  CHECK(box_contains(boxes[2], Rat(1), Rat(0)));
  for (const auto& b : boxes) CHECK(winding_count(p, b) == 1);
}

TEST_CASE("isolate complex roots") {
  // x^4 - 1: roots 1, -1, i, -i (symmetric, stresses the cut jitter)
  UPoly p = upoly_from_ints({-1, 0, 0, 0, 1});
  auto boxes = isolate_roots(p);
  REQUIRE(boxes.size() == 4);
  for (size_t i = 0; i < boxes.size(); ++i)
    for (size_t j = i + 1; j < boxes.size(); ++j)
      CHECK(boxes[i].disjoint(boxes[j]));
  // Each root has exactly one box.
  auto box_for = [&](Rat re, Rat im) -> const Box* {
    for (const auto& b : boxes)
      if (box_contains(b, re, im)) return &b;
    return nullptr;
  };
  const Box* b1 = box_for(Rat(1), Rat(0));
  REQUIRE(b1 != nullptr);
  REQUIRE(box_for(Rat(-1), Rat(0)) != nullptr);
  REQUIRE(box_for(Rat(0), Rat(1)) != nullptr);
  REQUIRE(box_for(Rat(0), Rat(-1)) != nullptr);

  Box b = refine_root_box_to(p, *b1, Rat(1, 1000));
  CHECK(box_contains(b, Rat(1), Rat(0)));
  CHECK(b.width() < Rat(1, 1000));
}

TEST_CASE("tower generator refinement") {
  std::vector<FElem> m = {FElem(-2), FElem(0), FElem(1)};
  auto F = Tower::make(nullptr, m, Box(RatIv(Rat(1), Rat(2)), RatIv(Rat(0), Rat(0))), "s");
  // Degenerate starting box: widen to a proper isolating rectangle first.
  auto F2 = Tower::make(nullptr, m,
                        Box(RatIv(Rat(1), Rat(2)), RatIv(Rat(-1, 2), Rat(1, 2))), "s");
  for (int i = 0; i < 20; ++i) F2->refine_gen();
  Box b = F2->gen_box();
  CHECK(b.width() < Rat(1, 100));
  CHECK(b.re.lo < Rat(1415, 1000));
  CHECK(b.re.hi > Rat(1414, 1000));
  (void)F;
}

TEST_CASE("roots over an extension field") {
  // Over Q(s), s^2 = 2: isolate roots of x^2 - s (fourth roots of 2).
  std::vector<FElem> m = {FElem(-2), FElem(0), FElem(1)};
  auto F = Tower::make(nullptr, m,
                       Box(RatIv(Rat(1), Rat(2)), RatIv(Rat(-1, 2), Rat(1, 2))), "s");
  UPoly p({-FElem::gen(F), FElem(0), FElem(1)});
  auto boxes = isolate_roots(p);
  REQUIRE(boxes.size() == 2);
  // 2^(1/4) ~ 1.1892
  CHECK(boxes[1].re.contains(Rat(11892, 10000)) );
  CHECK(boxes[0].re.contains(Rat(-11892, 10000)));
}

TEST_CASE("sturm counting") {
  UPoly p = upoly_from_ints({-2, 0, 1});
  CHECK(sturm_count(p, Rat(0), Rat(2)) == 1);
  CHECK(sturm_count(p, Rat(-2), Rat(2)) == 2);
  CHECK(sturm_count(p, Rat(2), Rat(3)) == 0);
  CHECK(sturm_count(upoly_from_ints({1, 0, 1}), Rat(-10), Rat(10)) == 0);
}

TEST_CASE("algebraic numbers") {
  AlgNum half(Rat(1, 2));
  CHECK(half.is_rational());
  CHECK(half.rat() == Rat(1, 2));
  CHECK(half.is_real());

  UPoly p = upoly_from_ints({-2, 0, 1});
  auto boxes = isolate_roots(p);
  AlgNum neg(p, boxes[0]), pos(p, boxes[1]);
  CHECK(neg != pos);
  CHECK(neg == neg);
  CHECK(pos.is_real());
  CHECK(AlgNum::compare(neg, pos) == -1);
  CHECK(AlgNum::compare(pos, neg) == 1);
  CHECK(AlgNum::compare(pos, pos) == 0);
  CHECK(pos.conj() == pos);

  // Conjugate pair: x^2 + x + 1, roots -1/2 +- i sqrt(3)/2.
  UPoly q = upoly_from_ints({1, 1, 1});
  auto qb = isolate_roots(q);
  AlgNum w1(q, qb[0]), w2(q, qb[1]);
  CHECK(!w1.is_real());
  CHECK(w1.conj() == w2);
  CHECK(w1 != w2);
  int c = AlgNum::compare(w1, w2);
  CHECK(c == -AlgNum::compare(w2, w1));
  CHECK(c != 0);

  // Different degree sorts first by degree.
  CHECK(AlgNum::compare(half, pos) == -1);
}

TEST_CASE("equal real part, non-conjugate roots order consistently") {
  // x^4 + 4: roots 1+i, 1-i, -1+i, -1-i
  UPoly p = upoly_from_ints({4, 0, 0, 0, 1});
  auto bs = isolate_roots(p);
  REQUIRE(bs.size() == 4);
  std::vector<AlgNum> roots;
  for (const auto& b : bs) roots.emplace_back(p, b);
  std::sort(roots.begin(), roots.end());
  // Sorted by re then im: -1-i, -1+i, 1-i, 1+i
  Rat q(1, 4);
  CHECK(box_contains(roots[0].box_refined_to(q), Rat(-1), Rat(-1)));
  CHECK(box_contains(roots[1].box_refined_to(q), Rat(-1), Rat(1)));
  CHECK(box_contains(roots[2].box_refined_to(q), Rat(1), Rat(-1)));
  CHECK(box_contains(roots[3].box_refined_to(q), Rat(1), Rat(1)));
  CHECK(roots[1] == roots[0].conj());
}
