#include "ktrunc/mult.hpp"

#include <numeric>

namespace ktrunc {

Window windows(Parity parity, Prime p, i64 e, i64 i, i64 j) {
  if (e < 1 || i < 1 || j < 1 || j % p.p == 0)
    throw std::invalid_argument("windows: need e,i,j >= 1 and gcd(j,p)=1");
  Window w;
  if (parity == Parity::a) {
    w.s = ceil_log(p, e * i, j) - 1;
    w.t = ceil_log(p, e * (i + 1), j);
  } else {
    if (i == 1) {
      w.s_finite = false;  // e(i-1) = 0
    } else {
      w.s = floor_log(p, e * (i - 1), j);
    }
    w.t = floor_log(p, e * i, j) + 1;
  }
  return w;
}

bool generator_exists(Parity, Prime p, i64 e, i64 i, i64 j) {
  if (e < 1 || i < 1 || j < 1)
    throw std::invalid_argument("generator_exists: e,i,j must be >= 1");
  return j % p.p != 0 && e >= 2 && j <= e * i;
}

TargetIndices target_indices(i64 i1, i64 j1, i64 i2, i64 j2, Prime p) {
  TargetIndices t;
  t.i3 = i1 + i2;
  t.v = vp(j1 + j2, p);
  t.j3 = (j1 + j2) / pow_i64(p.p, t.v);
  return t;
}

i64 inv_mod_p(i64 u, Prime p) {
  u %= p.p;
  if (u < 0) u += p.p;
  if (u == 0) throw std::invalid_argument("inv_mod_p: zero has no inverse");
  i64 r = 1;
  for (i64 k = 0; k < p.p - 2; ++k) r = r * u % p.p;  // u^{p-2}
  return r;
}

GeneratorDescriptor describe_generator(Parity parity, Prime p, i64 e, i64 i, i64 j) {
  if (!generator_exists(parity, p, e, i, j))
    throw std::invalid_argument("describe_generator: generator does not exist");
  GeneratorDescriptor g;
  g.parity = parity;
  g.p = p.p;
  g.e = e;
  g.i = i;
  g.j = j;
  g.window = windows(parity, p, e, i, j);
  g.start = g.window.s_finite ? pos(g.window.s) : 0;
  g.end = g.window.t;
  i64 d = pow_i64(p.p, g.start) * j;
  i64 unit = 1, prev_arg = 0;
  for (i64 r = g.start; r <= g.end; ++r, d *= p.p) {
    const i64 arg = parity == Parity::a ? d / e : (d - 1) / e;  // F(d) = arg!
    const i64 q = parity == Parity::a ? pos(i - d / e) : pos(i - ceil_div(d, e));
    if (r > g.start)
      unit = unit * unit_factorial_mod_p(arg, p) % p.p *
             inv_mod_p(unit_factorial_mod_p(prev_arg, p), p) % p.p;
    g.coeff_vals.push_back(q);
    g.units.push_back(unit);
    prev_arg = arg;
  }
  return g;
}

namespace {

// Window equality chain where a -infinity member is vacuous.
bool chain_eq(const Window& w1, const Window& w2, const Window& w3, i64 v,
              bool use_t) {
  if (use_t) return w1.t == w2.t && w2.t == w3.t - v;
  std::vector<i64> vals;
  if (w1.s_finite) vals.push_back(w1.s);
  if (w2.s_finite) vals.push_back(w2.s);
  if (w3.s_finite) vals.push_back(w3.s - v);
  return std::adjacent_find(vals.begin(), vals.end(),
                            std::not_equal_to<>()) == vals.end();
}

}  // namespace

TheoremTrace theorem_trace(Parity second, i64 i1, i64 j1, i64 i2, i64 j2, Prime p,
                           i64 e) {
  if (!generator_exists(Parity::a, p, e, i1, j1) ||
      !generator_exists(second, p, e, i2, j2))
    throw std::invalid_argument("theorem_trace: operand generator does not exist");
  const TargetIndices tgt = target_indices(i1, j1, i2, j2, p);
  const Window w1 = windows(Parity::a, p, e, i1, j1);
  const Window w2 = windows(second, p, e, i2, j2);
  const Window w3 = windows(second, p, e, tgt.i3, tgt.j3);

  TheoremTrace tr;
  tr.cond_s = chain_eq(w1, w2, w3, tgt.v, false);
  tr.cond_t = chain_eq(w1, w2, w3, tgt.v, true);
  if (!tr.cond_t) return tr;
  const i64 t = w1.t;
  tr.common_t = t;
  const i64 pt = pow_i64(p.p, t);
  if (second == Parity::a) {
    tr.cond_val = vp_factorial(pt * j1 / e, p) + vp_factorial(pt * j2 / e, p) ==
                  vp_factorial(pt * (j1 + j2) / e, p);
  } else {
    tr.cond_val = vp_factorial(pt * j1 / e, p) + vp_gamma_ceil(pt * j2, e, p) ==
                  vp_gamma_ceil(pt * (j1 + j2), e, p);
  }
  return tr;
}

Verdict product_aa(i64 i1, i64 j1, i64 i2, i64 j2, Prime p, i64 e) {
  TheoremTrace tr = theorem_trace(Parity::a, i1, j1, i2, j2, p, e);
  return tr.cond_s && tr.cond_t && tr.cond_val ? Verdict::nonzero : Verdict::zero;
}

Verdict product_ab(i64 i1, i64 j1, i64 i2, i64 j2, Prime p, i64 e) {
  TheoremTrace tr = theorem_trace(Parity::b, i1, j1, i2, j2, p, e);
  return tr.cond_s && tr.cond_t && tr.cond_val ? Verdict::nonzero : Verdict::zero;
}

Verdict bb_product() { return Verdict::zero; }

}  // namespace ktrunc
