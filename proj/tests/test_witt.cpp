#include "doctest.h"
#include "ktrunc/witt.hpp"

using namespace ktrunc;

TEST_CASE("truncation sets are divisor-closed") {
  CHECK(TruncationSet::full(1).elements() == std::vector<i64>{1});
  CHECK(TruncationSet::full(4).elements() == std::vector<i64>{1, 2, 3, 4});
  CHECK(TruncationSet::full(12).elements().size() == 12);
  CHECK_NOTHROW(TruncationSet({1, 2, 3, 9}));
  CHECK_THROWS_AS(TruncationSet({1, 2, 9}), std::invalid_argument);
  CHECK_THROWS_AS(TruncationSet({2, 4}), std::invalid_argument);
  // J/n
  TruncationSet j12 = TruncationSet::full(12);
  CHECK(j12.quotient(3).elements() == std::vector<i64>{1, 2, 3, 4});
  CHECK(j12.quotient(5).elements() == std::vector<i64>{1, 2});
}

TEST_CASE("p-typical counts") {
  TruncationSet j12 = TruncationSet::full(12);
  CHECK(p_typical_count(j12, Prime(2), 3) == 3);   // {3,6,12}
  CHECK(p_typical_count(j12, Prime(2), 1) == 4);   // {1,2,4,8}
  CHECK(p_typical_count(j12, Prime(2), 13) == 0);
  CHECK_THROWS_AS(p_typical_count(j12, Prime(2), 6), std::invalid_argument);
}

TEST_CASE("big Witt lengths split p-typically") {
  LengthModule w = big_witt_lengths(12, Prime(2));
  CHECK(w.bands.at(1) == 4);
  CHECK(w.bands.at(3) == 3);
  CHECK(w.bands.at(5) == 2);
  CHECK(w.bands.at(7) == 1);
  CHECK(w.bands.at(9) == 1);
  CHECK(w.bands.at(11) == 1);
  CHECK(w.total() == 12);

  CHECK(big_witt_lengths(1, Prime(3)).bands.at(1) == 1);
  LengthModule w6 = big_witt_lengths(6, Prime(2));
  CHECK(w6.bands.at(1) == 3);
  CHECK(w6.bands.at(3) == 2);
  CHECK(w6.bands.at(5) == 1);
  CHECK(w6.total() == 6);

  for (i64 m = 1; m <= 200; ++m) CHECK(big_witt_lengths(m, Prime(3)).total() == m);
}

TEST_CASE("verschiebung quotient lengths") {
  LengthModule q = verschiebung_quotient(2, 1, Prime(2));
  CHECK(q.bands.at(1) == 1);
  CHECK(q.total() == 1);

  q = verschiebung_quotient(3, 2, Prime(2));
  CHECK(q.bands.at(1) == 3);
  CHECK(q.bands.at(3) == 0);
  CHECK(q.bands.at(5) == 1);
  CHECK(q.total() == 4);

  CHECK(verschiebung_quotient(1, 7, Prime(3)).total() == 0);

  for (i64 e = 1; e <= 8; ++e)
    for (i64 i = 1; i <= 12; ++i)
      CHECK(verschiebung_quotient(e, i, Prime(5)).total() == i * (e - 1));
}

TEST_CASE("ghost components") {
  TruncationSet j3 = TruncationSet::full(3);
  WittVector tx = teichmuller(j3, 7);
  auto g = ghost(tx);
  CHECK(g.at(1) == 7);
  CHECK(g.at(2) == 49);
  CHECK(g.at(3) == 343);

  TruncationSet j2 = TruncationSet::full(2);
  WittVector ones(j2, {{1, 1}, {2, 1}});
  auto g2 = ghost(ones);
  CHECK(g2.at(1) == 1);
  CHECK(g2.at(2) == 3);  // 1 + 2*1

  WittVector zero(j2, {{1, 0}, {2, 0}});
  for (const auto& [n, w] : ghost(zero)) CHECK(w == 0);
}

TEST_CASE("ghost round-trip and ring laws") {
  TruncationSet j6 = TruncationSet::full(6);
  WittVector a(j6, {{1, 2}, {2, -1}, {3, 0}, {4, 5}, {5, 1}, {6, -3}});
  WittVector b(j6, {{1, 1}, {2, 3}, {3, -2}, {4, 0}, {5, 4}, {6, 2}});
  WittVector s = witt_add(a, b);
  WittVector m = witt_mul(a, b);
  CHECK(s.is_integral());
  CHECK(m.is_integral());
  auto ga = ghost(a), gb = ghost(b), gs = ghost(s), gm = ghost(m);
  for (i64 n : j6.elements()) {
    CHECK(gs.at(n) == ga.at(n) + gb.at(n));
    CHECK(gm.at(n) == ga.at(n) * gb.at(n));
  }
  WittVector rt = from_ghost(j6, ga);
  for (i64 n : j6.elements()) CHECK(rt.coords.at(n) == a.coords.at(n));
}

TEST_CASE("verschiebung and frobenius") {
  TruncationSet j1({1});
  TruncationSet j2 = TruncationSet::full(2);
  // F_2 V_2 = 2 on W_{1}
  WittVector x(j1, {{1, 5}});
  WittVector fv = witt_F(2, witt_V(2, x, j2));
  CHECK(ghost(fv).at(1) == 10);
  // V_2 is additive
  WittVector v1 = witt_V(2, x, j2);
  WittVector lhs = witt_add(v1, v1);
  WittVector rhs = witt_V(2, WittVector(j1, {{1, 10}}), j2);
  CHECK(ghost(lhs).at(2) == ghost(rhs).at(2));
  // Teichmuller multiplicativity
  TruncationSet j4 = TruncationSet::full(4);
  WittVector t6 = witt_mul(teichmuller(j4, 2), teichmuller(j4, 3));
  auto g6 = ghost(teichmuller(j4, 6));
  for (i64 n : j4.elements()) CHECK(ghost(t6).at(n) == g6.at(n));
}
