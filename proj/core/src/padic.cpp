#include "ktrunc/padic.hpp"

#include <limits>

namespace ktrunc {

Prime::Prime(i64 v) : p(v) {
  if (v < 2) throw std::invalid_argument("Prime: p must be >= 2");
  for (i64 q = 2; q * q <= v; ++q)
    if (v % q == 0) throw std::invalid_argument("Prime: composite p");
}

i64 pow_i64(i64 base, i64 exp) {
  if (exp < 0) throw std::invalid_argument("pow_i64: negative exponent");
  i64 r = 1;
  constexpr i64 lim = std::numeric_limits<i64>::max();
  for (i64 k = 0; k < exp; ++k) {
    if (r > lim / base) throw std::overflow_error("pow_i64: overflow");
    r *= base;
  }
  return r;
}

mpz_class pow_mpz(i64 base, i64 exp) {
  if (exp < 0) throw std::invalid_argument("pow_mpz: negative exponent");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

mpz_class factorial(i64 n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

i64 vp(i64 n, Prime p) {
  if (n == 0) throw std::invalid_argument("vp: valuation of 0 is infinite");
  if (n < 0) n = -n;
  i64 v = 0;
  while (n % p.p == 0) { n /= p.p; ++v; }
  return v;
}

i64 vp(const mpz_class& n, Prime p) {
  if (n == 0) throw std::invalid_argument("vp: valuation of 0 is infinite");
  mpz_class q;
  return static_cast<i64>(
      mpz_remove(q.get_mpz_t(), n.get_mpz_t(), mpz_class(p.p).get_mpz_t()));
}

i64 vp_factorial(i64 n, Prime p) {
  if (n < 0) throw std::invalid_argument("vp_factorial: negative argument");
  i64 v = 0;
  while (n > 0) { n /= p.p; v += n; }
  return v;
}

i64 vp_gamma_ceil(i64 d, i64 e, Prime p) {
  if (d < 1 || e < 1) throw std::invalid_argument("vp_gamma_ceil: d,e must be >= 1");
  return vp_factorial((d - 1) / e, p);
}

i64 brace(i64 d, i64 e) {
  if (d < 1 || e < 1) throw std::invalid_argument("brace: d,e must be >= 1");
  return d % e == 0 ? e : d;
}

i64 floor_log(Prime pr, i64 num, i64 den) {
  if (num < 1 || den < 1) throw std::invalid_argument("floor_log: args must be >= 1");
  const i64 p = pr.p;
  if (num >= den) {
    i64 r = 0;
    __int128 x = den;
    while (x * p <= num) { x *= p; ++r; }
    return r;
  }
  i64 k = 0;
  __int128 x = num;
  while (x < den) { x *= p; ++k; }
  return -k;
}

i64 floor_log(Prime pr, const mpz_class& num, const mpz_class& den) {
  if (num < 1 || den < 1) throw std::invalid_argument("floor_log: args must be >= 1");
  const i64 p = pr.p;
  if (num >= den) {
    i64 r = 0;
    mpz_class x = den;
    while (x * p <= num) { x *= p; ++r; }
    return r;
  }
  i64 k = 0;
  mpz_class x = num;
  while (x < den) { x *= p; ++k; }
  return -k;
}

i64 ceil_log(Prime p, i64 num, i64 den) { return -floor_log(p, den, num); }

int epsilon(i64 i, i64 d, i64 e) {
  if (i < 0 || d < 1 || e < 1) throw std::invalid_argument("epsilon: bad arguments");
  const i64 lo = d / e, hi = ceil_div(d, e);
  const i64 val = pos(i - lo) - pos(i - hi);
  if (val != 0 && val != 1) throw property_violation("epsilon outside {0,1}");
  return static_cast<int>(val);
}

i64 vp_gamma_ratio(i64 d, i64 e, Prime p) {
  const i64 r = vp_gamma_ceil(p.p * d, e, p) - vp_gamma_ceil(d, e, p);
  if (r != ceil_div(d, e) - 1)
    throw property_violation("vp_gamma_ratio != ceil(d/e) - 1");
  return r;
}

i64 unit_factorial_mod_p(i64 n, Prime pr) {
  if (n < 0) throw std::invalid_argument("unit_factorial_mod_p: negative argument");
  const i64 p = pr.p;
  // n! = p^v * u with u = prod of p-free parts; by Wilson (p-1)! = -1 mod p,
  // so u = (-1)^{floor(n/p)} * (n mod p)! * (unit part of floor(n/p)!) mod p.
  i64 u = 1;
  while (n > 0) {
    if ((n / p) % 2 == 1 && p != 2) u = p - u;  // * (-1); -1 = 1 when p = 2
    for (i64 m = 2; m <= n % p; ++m) u = (u * m) % p;
    n /= p;
  }
  return u;
}

i64 unit_part_mod_p(const mpz_class& a, Prime pr) {
  if (a == 0) throw std::invalid_argument("unit_part_mod_p: zero argument");
  mpz_class q;
  mpz_remove(q.get_mpz_t(), a.get_mpz_t(), mpz_class(pr.p).get_mpz_t());
  mpz_class r = q % pr.p;
  if (r < 0) r += pr.p;
  return r.get_si();
}

}  // namespace ktrunc
