#pragma once

#include <gmpxx.h>

#include <vector>

#include "ktrunc/padic.hpp"

namespace ktrunc {

// A p-typical hyper-representation, described either by a positive slope mu
// (dimension sequence ceil(p^s mu)) or by an irreducible decomposition
// d0 * L0 + sum_{i>=1} k[i-1] * Li  (Li "starts at C_{p^i}").
struct HyperRep {
  static HyperRep slope(i64 num, i64 den);
  static HyperRep coeffs(i64 d0, std::vector<i64> k);

  bool is_slope = false;
  mpq_class mu;
  i64 d0 = 0;
  std::vector<i64> k;
};

// Dimension of the rep at C_{p^s}.
i64 dims(const HyperRep& h, Prime p, i64 s);

struct Decomposition {
  i64 d0 = 0;
  std::vector<i64> k;
};

// Inverse of dims on a nondecreasing prefix (d~_0, ..., d~_n).
Decomposition irreducible_decomposition(const std::vector<i64>& prefix);

struct TrLength {
  bool infinite = false;
  i64 value = 0;  // meaningful when !infinite
};

// Length of TR_{2i - alpha}(k) per the case analysis of prop:tr-hyper.
// Trivial summands (the L0 part) shift i before the fixed-point-free cases apply.
TrLength tr_length_general(const HyperRep& alpha, Prime p, i64 i);

// <floor_log(p, i/mu) + 1> for the slope rep; 0 when i < mu.
i64 tr_length_slope(Prime p, i64 mu_num, i64 mu_den, i64 i);

// sum_j len TR_{2i-[j/e]} - sum_j len TR_{2i-[j]} == i(e-1) == closed-form total.
bool tc_length_check(Prime p, i64 e, i64 i);

}  // namespace ktrunc
