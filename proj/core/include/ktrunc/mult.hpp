#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktrunc/padic.hpp"

namespace ktrunc {

enum class Parity { a, b };  // |a_i^j| = 2i, |b_i^j| = 2i-1

// Support window endpoints before clamping.  s is -infinity for b-parity
// generators with i = 1 (e(i-1) = 0); such an s imposes no window equation.
struct Window {
  bool s_finite = true;
  i64 s = 0;  // pre-clamp; support starts at <s>
  i64 t = 0;
};

Window windows(Parity parity, Prime p, i64 e, i64 i, i64 j);

// Mod-p K-theory has a (formal) generator a_i^j / b_i^j exactly here.
bool generator_exists(Parity parity, Prime p, i64 e, i64 i, i64 j);

// (i3, j3, v) with i3 = i1+i2, v = vp(j1+j2), j3 = (j1+j2)/p^v.
struct TargetIndices {
  i64 i3 = 0, j3 = 0, v = 0;
};
TargetIndices target_indices(i64 i1, i64 j1, i64 i2, i64 j2, Prime p);

// The canonical representative vector of a generator: component at level r
// (support start..end) is unit_r * p^{coeff_val_r} x^{d_r} / F(d_r), where
// F(d) = floor(d/e)! for parity a and Gamma(ceil(d/e)) for parity b, and the
// units are chained so that (phi/p^i - can) kills the vector where both are
// isomorphisms.
struct GeneratorDescriptor {
  Parity parity;
  i64 p = 0, e = 0, i = 0, j = 0;
  Window window;
  i64 start = 0, end = 0;
  std::vector<i64> coeff_vals;  // indexed by level r - start
  std::vector<i64> units;       // in [1, p-1]
};

GeneratorDescriptor describe_generator(Parity parity, Prime p, i64 e, i64 i, i64 j);

enum class Verdict { zero, nonzero };

// Theorem criteria; evaluates the three window/valuation conditions.
Verdict product_aa(i64 i1, i64 j1, i64 i2, i64 j2, Prime p, i64 e);
Verdict product_ab(i64 i1, i64 j1, i64 i2, i64 j2, Prime p, i64 e);
Verdict bb_product();  // always zero: the b's are square-zero

// The individual conditions, exposed for experimentation.
struct TheoremTrace {
  bool cond_s = false, cond_t = false, cond_val = false;
  std::optional<i64> common_t;
};
TheoremTrace theorem_trace(Parity second, i64 i1, i64 j1, i64 i2, i64 j2, Prime p,
                           i64 e);

i64 inv_mod_p(i64 u, Prime p);

}  // namespace ktrunc
