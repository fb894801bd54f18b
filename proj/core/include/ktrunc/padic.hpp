#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace ktrunc {

using i64 = long;  // gmpxx has exact operator overloads for long

// Thrown when a computation contradicts an identity the library is built on.
// Callers should treat this as "the math is wrong", not as bad input.
struct property_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Prime {
  i64 p;
  explicit Prime(i64 v);
  friend bool operator==(Prime a, Prime b) { return a.p == b.p; }
};

// <x> := max(x, 0)
constexpr i64 pos(i64 x) { return x > 0 ? x : 0; }

constexpr i64 floor_div(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
constexpr i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

i64 pow_i64(i64 base, i64 exp);  // throws on overflow
mpz_class pow_mpz(i64 base, i64 exp);
mpz_class factorial(i64 n);

inline i64 pow_i64(Prime p, i64 exp) { return pow_i64(p.p, exp); }
inline mpz_class pow_mpz(Prime p, i64 exp) { return pow_mpz(p.p, exp); }

i64 vp(i64 n, Prime p);
i64 vp(const mpz_class& n, Prime p);

// v_p(n!) by Legendre's formula.
i64 vp_factorial(i64 n, Prime p);

// v_p(Gamma(ceil(d/e))) = v_p(floor((d-1)/e)!)
i64 vp_gamma_ceil(i64 d, i64 e, Prime p);

// {d,e} = d if e does not divide d, else e.
i64 brace(i64 d, i64 e);

// Largest r (possibly negative) with p^r <= num/den.
i64 floor_log(Prime p, i64 num, i64 den);
i64 floor_log(Prime p, const mpz_class& num, const mpz_class& den);

// Smallest r (possibly negative) with num/den <= p^r.
i64 ceil_log(Prime p, i64 num, i64 den);

// epsilon(i) = <i - floor(d/e)> - <i - ceil(d/e)>, always 0 or 1.
int epsilon(i64 i, i64 d, i64 e);

// v_p(Gamma(ceil(pd/e)) / Gamma(ceil(d/e))); checked against ceil(d/e) - 1.
i64 vp_gamma_ratio(i64 d, i64 e, Prime p);

// Multiplicative unit part of n! mod p: n! = p^{vp_factorial(n,p)} * u, u in F_p*.
i64 unit_factorial_mod_p(i64 n, Prime p);

// Unit part of p^-v * a mod p where v = vp(a).
i64 unit_part_mod_p(const mpz_class& a, Prime p);

}  // namespace ktrunc
