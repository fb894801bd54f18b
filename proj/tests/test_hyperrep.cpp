#include "doctest.h"
#include "ktrunc/hyperrep.hpp"

using namespace ktrunc;

TEST_CASE("dimension sequences") {
  CHECK(dims(HyperRep::slope(1, 2), Prime(3), 2) == 5);  // ceil(9/2)
  HyperRep l2 = HyperRep::coeffs(0, {0, 1});
  CHECK(dims(l2, Prime(2), 1) == 0);
  CHECK(dims(l2, Prime(2), 2) == 1);
  for (i64 s = 0; s <= 10; ++s)
    CHECK(dims(HyperRep::slope(1, 1), Prime(2), s) == pow_i64(2, s));
  // slope dims are nondecreasing
  for (i64 num = 1; num <= 6; ++num)
    for (i64 den = 1; den <= 6; ++den)
      for (i64 s = 0; s < 8; ++s)
        CHECK(dims(HyperRep::slope(num, den), Prime(3), s) <=
              dims(HyperRep::slope(num, den), Prime(3), s + 1));
}

TEST_CASE("irreducible decomposition") {
  Decomposition d = irreducible_decomposition({1, 1, 1});
  CHECK(d.d0 == 1);
  for (i64 k : d.k) CHECK(k == 0);

  d = irreducible_decomposition({0, 1, 1});
  CHECK(d.d0 == 0);
  CHECK(d.k == std::vector<i64>{1, 0});

  d = irreducible_decomposition({1, 3, 5});
  CHECK(d.d0 == 1);
  CHECK(d.k == std::vector<i64>{2, 2});

  CHECK_THROWS_AS(irreducible_decomposition({2, 1}), std::invalid_argument);

  // round-trip through dims
  std::vector<i64> ks{2, 0, 1, 3};
  HyperRep h = HyperRep::coeffs(2, ks);
  std::vector<i64> prefix;
  for (i64 s = 0; s <= 4; ++s) prefix.push_back(dims(h, Prime(5), s));
  Decomposition rt = irreducible_decomposition(prefix);
  CHECK(rt.d0 == 2);
  CHECK(rt.k == ks);
}

TEST_CASE("TR lengths by the case analysis") {
  HyperRep l1 = HyperRep::coeffs(0, {1});
  TrLength t = tr_length_general(l1, Prime(3), 0);
  CHECK(!t.infinite);
  CHECK(t.value == 1);  // d~_0 = 0 <= 0 < d~_1 = 1
  CHECK(tr_length_general(l1, Prime(3), 1).infinite);  // d~_s = 1 for s >> 0
  t = tr_length_general(l1, Prime(3), 2);
  CHECK(!t.infinite);
  CHECK(t.value == 0);  // above every dimension

  t = tr_length_general(HyperRep::slope(1, 1), Prime(2), 3);
  CHECK(!t.infinite);
  CHECK(t.value == 2);  // d~_1 = 2 <= 3 < d~_2 = 4

  CHECK(tr_length_general(HyperRep::slope(2, 1), Prime(2), 1).value == 0);
}

TEST_CASE("slope TR lengths") {
  CHECK(tr_length_slope(Prime(2), 1, 1, 1) == 1);
  CHECK(tr_length_slope(Prime(3), 4, 1, 1) == 0);
  // general and slope forms agree
  for (i64 num = 1; num <= 5; ++num)
    for (i64 den = 1; den <= 5; ++den)
      for (i64 i = 1; i <= 30; ++i) {
        TrLength g = tr_length_general(HyperRep::slope(num, den), Prime(2), i);
        CHECK(!g.infinite);
        CHECK(g.value == tr_length_slope(Prime(2), num, den, i));
      }
}

TEST_CASE("slope sum recovers the Witt length") {
  // sum over bands of len TR_{2i-[j/e]} = len W_{ei}
  for (i64 e = 1; e <= 5; ++e)
    for (i64 i = 1; i <= 8; ++i) {
      i64 sum = 0;
      for (i64 j = 1; j <= e * i; ++j)
        if (j % 2 != 0) sum += tr_length_slope(Prime(2), j, e, i);
      CHECK(sum == e * i);
    }
}

TEST_CASE("TC length bookkeeping") {
  CHECK(tc_length_check(Prime(2), 2, 5));
  CHECK(tc_length_check(Prime(3), 4, 7));
  CHECK(tc_length_check(Prime(5), 1, 3));
}
