#include "doctest.h"
#include "ktrunc/kgroups.hpp"

using namespace ktrunc;

TEST_CASE("closed form on known groups") {
  KGroupResult r = k_closed_form(Prime(2), 2, 1);  // relative K_1 of F_2[x]/x^2
  CHECK(r.bands.bands.at(1) == 1);
  CHECK(r.total == 1);
  CHECK(r.form == "closed");

  r = k_closed_form(Prime(2), 3, 2);
  CHECK(r.bands.bands.at(1) == 3);
  CHECK(r.bands.bands.at(3) == 0);
  CHECK(r.bands.bands.at(5) == 1);
  CHECK(r.total == 4);

  CHECK(k_closed_form(Prime(5), 1, 9).total == 0);
}

TEST_CASE("witt form on known groups") {
  CHECK(k_witt_form(Prime(2), 2, 1).bands.bands.at(1) == 1);
  CHECK(k_witt_form(Prime(3), 2, 3).total == 3);
  CHECK(k_witt_form(Prime(2), 1, 5).total == 0);
}

TEST_CASE("the two forms agree") {
  CHECK(check_equivalence(Prime(2), 2, 1).equal);
  CHECK(check_equivalence(Prime(3), 6, 7).equal);
  CHECK(check_equivalence(Prime(2), 1, 1).equal);
  for (i64 e = 1; e <= 8; ++e)
    for (i64 i = 1; i <= 12; ++i) {
      EquivalenceReport rep = check_equivalence(Prime(7), e, i);
      CHECK(rep.equal);
      CHECK(rep.differing_bands.empty());
    }
}

TEST_CASE("band support and total length") {
  for (i64 e = 1; e <= 6; ++e)
    for (i64 i = 1; i <= 10; ++i) {
      KGroupResult r = k_closed_form(Prime(3), e, i);
      CHECK(r.total == i * (e - 1));
      for (const auto& [j, len] : r.bands.bands) {
        CHECK(j % 3 != 0);
        if (len > 0) CHECK(j <= e * i);
      }
    }
}

TEST_CASE("band lengths nondecreasing in the weight") {
  for (i64 j : {1, 5, 7})
    for (i64 i = 1; i < 20; ++i) {
      auto len = [&](i64 w) {
        auto b = k_closed_form(Prime(2), 4, w).bands.bands;
        auto it = b.find(j);
        return it == b.end() ? 0 : it->second;
      };
      CHECK(len(i) <= len(i + 1));
    }
}

TEST_CASE("F-crystal lengths") {
  auto [int1, mod1] = fcrystal_lengths(Prime(2), 2, 1, 1);
  CHECK(int1 == 0);
  CHECK(mod1 == 2);
  // terms <3-1>, <3-2>, <3-5> = 2 + 1 + 0
  auto [int2, mod2] = fcrystal_lengths(Prime(3), 2, 3, 1);
  CHECK(int2 == 3);
  CHECK(mod2 == 2);
  auto [int3, mod3] = fcrystal_lengths(Prime(2), 2, 1, 5);
  CHECK(int3 == 0);
  CHECK(mod3 == 0);
}
