#include "ktrunc/functorial.hpp"

#include <stdexcept>

namespace ktrunc {

void validate_query(const TowerMapQuery& q) {
  Prime p(q.p);
  if (q.n < 1 || q.m <= q.n) throw std::invalid_argument("query: need m > n >= 1");
  if (q.i < 1 || q.j < 1) throw std::invalid_argument("query: i, j must be >= 1");
  if (q.j % q.p == 0) throw std::invalid_argument("query: j must be coprime to p");
}

i64 query_s(const TowerMapQuery& q) { return floor_log(Prime(q.p), q.m * q.i, q.j); }
i64 query_t(const TowerMapQuery& q) { return floor_log(Prime(q.p), q.n * q.i, q.j); }

i64 ell(const TowerMapQuery& q) {
  validate_query(q);
  Prime p(q.p);
  i64 sum = 0;
  for (i64 h = 1; h < q.i; ++h)
    sum += pos(floor_log(p, q.m * h, q.j) + 1) - pos(floor_log(p, q.n * h, q.j) + 1);
  return sum;
}

i64 ell_raw(const TowerMapQuery& q) {
  validate_query(q);
  Prime p(q.p);
  i64 sum = 0;
  for (i64 h = 1; h < q.i; ++h)
    sum += floor_log(p, q.m * h, q.j) - floor_log(p, q.n * h, q.j);
  return sum;
}

i64 crossing_count(const TowerMapQuery& q) {
  validate_query(q);
  i64 count = 0;
  for (i64 h = 1; h < q.i; ++h) {
    // p^r j <= mh bounds r; start from the first power above nh.
    for (i64 pw = q.j; pw <= q.m * h; pw *= q.p)
      if (pw > q.n * h) ++count;
  }
  return count;
}

std::optional<i64> ell_prime(const TowerMapQuery& q) {
  validate_query(q);
  if (q.j > q.n * q.i) return std::nullopt;
  Prime p(q.p);
  const i64 s = query_s(q);
  const i64 t = query_t(q);
  i64 sum = 0;
  for (i64 r = 0; r <= s; ++r) sum += q.i - ceil_div(pow_i64(p, r) * q.j, q.m);
  for (i64 r = 0; r <= t; ++r) sum -= q.i - ceil_div(pow_i64(p, r) * q.j, q.n);
  return sum + vp_gamma_ceil(q.j, q.n, p) - vp_gamma_ceil(q.j, q.m, p);
}

bool reconcile(const TowerMapQuery& q) {
  auto lp = ell_prime(q);
  if (!lp) return true;  // target zero: nothing to reconcile
  Prime p(q.p);
  i64 l = ell(q);
  i64 corr = vp_gamma_ceil(q.j, q.n, p) - vp_gamma_ceil(q.j, q.m, p);
  i64 t = query_t(q);
  return *lp == l + corr && std::min(l, t + 1) == std::min(*lp, t + 1);
}

bool lemma_predicate(const TowerMapQuery& q) {
  validate_query(q);
  Prime p(q.p);
  return vp_gamma_ceil(q.j, q.n, p) > vp_gamma_ceil(q.j, q.m, p);
}

bool pi_star_nonzero(const TowerMapQuery& q) {
  auto lp = ell_prime(q);
  return lp && *lp <= query_t(q);
}

std::pair<i64, i64> iota_pullback(i64 d, i64 e, i64 f) {
  if (d < 1 || e < 1 || f < 1) throw std::invalid_argument("iota_pullback: d, e, f must be >= 1");
  return {d * f, f};
}

std::vector<IotaBandImage> iota_on_witt(i64 e, i64 i, i64 f, Prime p,
                                        IotaDirection dir) {
  if (e < 1 || i < 1 || f < 1) throw std::invalid_argument("iota_on_witt: e, i, f must be >= 1");
  i64 a = vp(f, p);
  i64 fprime = f / pow_i64(p, a);
  std::vector<IotaBandImage> out;
  // Source column: e for pullback (V_f into the ef-column), ef for pushforward.
  i64 source_top = (dir == IotaDirection::pullback ? e : e * f) * i;
  for (i64 j = 1; j <= source_top; ++j) {
    if (j % p.p == 0) continue;
    IotaBandImage im;
    im.source_band = j;
    if (dir == IotaDirection::pullback) {
      im.present = true;
      im.target_band = j * fprime;
      im.shift = a;
    } else if (j % fprime == 0) {
      im.present = true;
      im.target_band = j / fprime;
      im.shift = -a;
    }
    out.push_back(im);
  }
  return out;
}

namespace {

bool matrices_equal(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (size_t k = 0; k < x.a.size(); ++k)
    if (x.a[k] != y.a[k]) return false;
  return true;
}

// b!/a! as an explicit product, a <= b.
mpz_class rising(i64 a, i64 b) {
  mpz_class r = 1;
  for (i64 m = a + 1; m <= b; ++m) r *= m;
  return r;
}

}  // namespace

PiStarImage pi_star_oracle(const TowerMapQuery& q, i64 r_max) {
  validate_query(q);
  Prime p(q.p);
  PiStarImage out;
  if (q.j > q.n * q.i) {
    out.target_zero = true;
    out.zero_map = true;
    return out;
  }

  BandComplex bm = build_band(p, q.m, q.i, q.j, r_max);
  BandComplex bn = build_band(p, q.n, q.i, q.j, r_max);
  H1Data hn = h1_data(bn);
  out.cap = hn.plen;
  if (out.cap == 0) {
    out.target_zero = true;
    out.zero_map = true;
    return out;
  }
  if (hn.p_divisor_count != 1)
    throw property_violation("pi_star_oracle: target band p-part not cyclic");

  H1Data hm = h1_data(bm);
  if (hm.plen == 0) {
    out.source_zero = true;
    out.zero_map = true;
    out.exponent = out.cap;
    return out;
  }
  if (hm.p_divisor_count != 1)
    throw property_violation("pi_star_oracle: source band p-part not cyclic");

  // Divided-power chain map T: levelwise multiplication by integer constants.
  const i64 R = r_max;
  IntMatrix T0(R + 1, R + 1), T1(2 * (R + 1), 2 * (R + 1)), T2(R + 1, R + 1);
  for (i64 r = 0; r <= R; ++r) {
    const i64 d = bm.d[static_cast<size_t>(r)];
    i64 eg = pos(q.i - floor_div(d, q.m)) - pos(q.i - floor_div(d, q.n));
    i64 eh = pos(q.i - ceil_div(d, q.m)) - pos(q.i - ceil_div(d, q.n));
    if (eg < 0 || eh < 0)
      throw property_violation("pi_star_oracle: non-integral renormalization");
    T0.at(r, r) = pow_mpz(p, eg) * rising(floor_div(d, q.m), floor_div(d, q.n));
    T1.at(r, r) = pow_mpz(p, eh) * rising(floor_div(d - 1, q.m), floor_div(d - 1, q.n));
    T1.at(R + 1 + r, R + 1 + r) = rising(floor_div(d, q.m), floor_div(d, q.n));
    T2.at(r, r) = rising(floor_div(d - 1, q.m), floor_div(d - 1, q.n));
  }
  if (!matrices_equal(T1 * bm.A, bn.A * T0) || !matrices_equal(T2 * bm.B, bn.B * T1))
    throw property_violation("pi_star_oracle: chain map does not commute");

  // Cocycle representing the generator of the p-part of the source band.
  std::vector<mpz_class> y(static_cast<size_t>(hm.k));
  for (i64 r = 0; r < hm.k; ++r)
    y[static_cast<size_t>(r)] = hm.ysnf.Uinv.at(r, hm.p_divisor_index);
  std::vector<mpz_class> w(static_cast<size_t>(2 * (R + 1)));
  for (i64 c = 0; c < hm.k; ++c)
    for (i64 r = 0; r < 2 * (R + 1); ++r)
      w[static_cast<size_t>(r)] +=
          y[static_cast<size_t>(c)] * hm.kernel[static_cast<size_t>(c)][static_cast<size_t>(r)];

  std::vector<mpz_class> tw = T1.apply(w);
  std::vector<mpz_class> coords = class_coordinates(hn, tw);

  mpz_class pl = pow_mpz(p, out.cap);
  mpz_class c = coords[static_cast<size_t>(hn.p_divisor_index)] % pl;
  if (c < 0) c += pl;
  out.exponent = (c == 0) ? out.cap : vp(c, p);
  out.zero_map = out.exponent == out.cap;
  return out;
}

}  // namespace ktrunc
