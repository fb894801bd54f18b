#include "doctest.h"
#include "ktrunc/mult.hpp"

using namespace ktrunc;

TEST_CASE("support windows") {
  Window w = windows(Parity::a, Prime(3), 2, 2, 1);
  CHECK(w.s_finite);
  CHECK(w.s == 1);
  CHECK(w.t == 2);

  w = windows(Parity::b, Prime(3), 2, 3, 1);
  CHECK(w.s == 1);  // floor(log_3 4)
  CHECK(w.t == 2);  // floor(log_3 6) + 1

  w = windows(Parity::a, Prime(3), 2, 1, 2);
  CHECK(w.s == -1);  // clamps to support start 0
  CHECK(w.t == 1);

  // e(i-1) = 0 leaves s_b unbounded below
  w = windows(Parity::b, Prime(2), 3, 1, 1);
  CHECK(!w.s_finite);
  CHECK(w.t == floor_log(Prime(2), 3, 1) + 1);
}

TEST_CASE("generator existence") {
  CHECK(generator_exists(Parity::a, Prime(2), 2, 1, 1));
  CHECK(!generator_exists(Parity::a, Prime(2), 2, 1, 3));  // beyond ei
  CHECK(!generator_exists(Parity::a, Prime(2), 1, 4, 1));  // e = 1
  CHECK(!generator_exists(Parity::b, Prime(3), 1, 4, 1));
  CHECK(!generator_exists(Parity::a, Prime(3), 2, 2, 3));  // 3 | j
  // boundary band j = ei is inhabited even when its integral length is 0
  CHECK(generator_exists(Parity::a, Prime(3), 2, 1, 2));
}

TEST_CASE("target indices") {
  TargetIndices t = target_indices(1, 2, 1, 2, Prime(3));
  CHECK(t.i3 == 2);
  CHECK(t.j3 == 4);
  CHECK(t.v == 0);

  t = target_indices(2, 1, 3, 1, Prime(3));
  CHECK(t.i3 == 5);
  CHECK(t.j3 == 2);
  CHECK(t.v == 0);  // v_3(1+1)

  t = target_indices(1, 1, 1, 1, Prime(2));
  CHECK(t.i3 == 2);
  CHECK(t.j3 == 1);
  CHECK(t.v == 1);
}

TEST_CASE("worked products in F_3[x]/x^2") {
  Prime p3(3);
  CHECK(product_aa(1, 2, 1, 2, p3, 2) == Verdict::nonzero);  // a_1^2 a_1^2
  CHECK(product_ab(2, 1, 3, 1, p3, 2) == Verdict::nonzero);  // a_2^1 b_3^1
  CHECK(product_aa(1, 2, 2, 4, p3, 2) == Verdict::zero);     // a_1^2 a_2^4
  CHECK(bb_product() == Verdict::zero);
}

TEST_CASE("condition trace of the vanishing product") {
  // a_1^2 a_2^4: the windows line up but the factorial valuations do not
  TheoremTrace tr = theorem_trace(Parity::a, 1, 2, 2, 4, Prime(3), 2);
  CHECK(tr.cond_s);
  CHECK(tr.cond_t);
  REQUIRE(tr.common_t.has_value());
  CHECK(*tr.common_t == 1);
  CHECK(!tr.cond_val);  // v(3!) + v(6!) = 3 != 4 = v(9!)
}

TEST_CASE("mismatched windows kill products") {
  // t-windows differ by construction: a_1^1 vs a_4^1 at p=2, e=2
  TheoremTrace tr = theorem_trace(Parity::a, 1, 1, 4, 1, Prime(2), 2);
  CHECK(!tr.cond_t);
  CHECK(product_aa(1, 1, 4, 1, Prime(2), 2) == Verdict::zero);
}

TEST_CASE("aa verdicts are symmetric") {
  Prime p(2);
  for (i64 i1 = 1; i1 <= 5; ++i1)
    for (i64 i2 = 1; i2 <= 5; ++i2)
      for (i64 j1 = 1; j1 <= 7; j1 += 2)
        for (i64 j2 = 1; j2 <= 7; j2 += 2) {
          if (!generator_exists(Parity::a, p, 3, i1, j1) ||
              !generator_exists(Parity::a, p, 3, i2, j2))
            continue;
          CHECK(product_aa(i1, j1, i2, j2, p, 3) ==
                product_aa(i2, j2, i1, j1, p, 3));
        }
}

TEST_CASE("operands must exist") {
  CHECK_THROWS_AS(product_aa(1, 3, 1, 1, Prime(2), 2), std::invalid_argument);
  CHECK_THROWS_AS(describe_generator(Parity::a, Prime(2), 2, 1, 3),
                  std::invalid_argument);
}

TEST_CASE("descriptor units stay reduced") {
  GeneratorDescriptor g = describe_generator(Parity::a, Prime(5), 3, 4, 2);
  CHECK(g.units.size() == g.coeff_vals.size());
  for (i64 u : g.units) {
    CHECK(u >= 1);
    CHECK(u <= 4);
  }
}
