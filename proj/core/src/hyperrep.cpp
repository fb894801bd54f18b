#include "ktrunc/hyperrep.hpp"

#include <numeric>

#include "ktrunc/kgroups.hpp"

namespace ktrunc {

HyperRep HyperRep::slope(i64 num, i64 den) {
  if (num < 1 || den < 1) throw std::invalid_argument("HyperRep::slope: mu must be > 0");
  HyperRep h;
  h.is_slope = true;
  h.mu = mpq_class(num, den);
  h.mu.canonicalize();
  return h;
}

HyperRep HyperRep::coeffs(i64 d0, std::vector<i64> k) {
  if (d0 < 0) throw std::invalid_argument("HyperRep::coeffs: d0 must be >= 0");
  for (i64 m : k)
    if (m < 0) throw std::invalid_argument("HyperRep::coeffs: multiplicities >= 0");
  HyperRep h;
  h.d0 = d0;
  h.k = std::move(k);
  return h;
}

i64 dims(const HyperRep& h, Prime p, i64 s) {
  if (s < 0) throw std::invalid_argument("dims: s must be >= 0");
  if (h.is_slope) {
    mpz_class num = h.mu.get_num() * pow_mpz(p.p, s);
    mpz_class d = (num + h.mu.get_den() - 1) / h.mu.get_den();
    if (!d.fits_slong_p()) throw std::overflow_error("dims: dimension overflows");
    return d.get_si();
  }
  i64 d = h.d0;
  for (i64 t = 0; t < std::min<i64>(s, static_cast<i64>(h.k.size())); ++t)
    d += h.k[static_cast<size_t>(t)];
  return d;
}

Decomposition irreducible_decomposition(const std::vector<i64>& prefix) {
  if (prefix.empty())
    throw std::invalid_argument("irreducible_decomposition: empty prefix");
  Decomposition dec;
  dec.d0 = prefix[0];
  for (size_t t = 1; t < prefix.size(); ++t) {
    if (prefix[t] < prefix[t - 1])
      throw std::invalid_argument(
          "irreducible_decomposition: decreasing sequence is not actual");
    dec.k.push_back(prefix[t] - prefix[t - 1]);
  }
  return dec;
}

TrLength tr_length_general(const HyperRep& alpha, Prime p, i64 i) {
  // Strip the trivial part: TR_{2i - (alpha' + d0*L0)} = TR_{2(i-d0) - alpha'}.
  const i64 d0 = dims(alpha, p, 0);
  const i64 ii = i - d0;
  if (ii < 0) return {false, 0};
  if (!alpha.is_slope) {
    const i64 top = std::accumulate(alpha.k.begin(), alpha.k.end(), i64{0});
    if (ii == top) return {true, 0};  // d~_s = i for s >> 0: a full W(k)
    if (ii > top) return {false, 0};  // d~_s < i for all s
  }
  for (i64 s = 1;; ++s) {
    if (dims(alpha, p, s) - d0 > ii) return {false, s};
    // slope dims are unbounded, coeff dims hit `top` first; both terminate
  }
}

i64 tr_length_slope(Prime p, i64 mu_num, i64 mu_den, i64 i) {
  if (mu_num < 1 || mu_den < 1 || i < 0)
    throw std::invalid_argument("tr_length_slope: bad arguments");
  if (i * mu_den < mu_num) return 0;  // i < mu, covers i = 0
  return pos(floor_log(p, i * mu_den, mu_num) + 1);
}

bool tc_length_check(Prime p, i64 e, i64 i) {
  if (e < 1 || i < 1) throw std::invalid_argument("tc_length_check: e,i >= 1");
  i64 lhs = 0;
  for (i64 j = 1; j <= e * i; ++j)
    if (j % p.p != 0) lhs += tr_length_slope(p, j, e, i);
  for (i64 j = 1; j <= i; ++j)
    if (j % p.p != 0) lhs -= tr_length_slope(p, j, 1, i);
  return lhs == k_closed_form(p, e, i).total && lhs == i * (e - 1);
}

}  // namespace ktrunc
