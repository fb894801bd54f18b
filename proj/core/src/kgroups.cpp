#include "ktrunc/kgroups.hpp"

namespace ktrunc {

KGroupResult k_closed_form(Prime p, i64 e, i64 i) {
  if (e < 1 || i < 1) throw std::invalid_argument("k_closed_form: e,i must be >= 1");
  KGroupResult r;
  r.p = p.p;
  r.e = e;
  r.i = i;
  r.form = "closed";
  r.bands.p = p.p;
  for (i64 j = 1; j <= e * i; ++j) {
    if (j % p.p == 0) continue;
    const i64 s = floor_log(p, e * i, j);  // >= 0 since j <= ei
    r.bands.bands[j] = vp(brace(pow_i64(p.p, pos(s + 1)) * j, e), p);
    r.total += r.bands.bands[j];
  }
  return r;
}

KGroupResult k_witt_form(Prime p, i64 e, i64 i) {
  if (e < 1 || i < 1) throw std::invalid_argument("k_witt_form: e,i must be >= 1");
  KGroupResult r;
  r.p = p.p;
  r.e = e;
  r.i = i;
  r.form = "witt";
  r.bands = verschiebung_quotient(e, i, p);
  r.total = r.bands.total();
  return r;
}

EquivalenceReport check_equivalence(Prime p, i64 e, i64 i) {
  KGroupResult a = k_closed_form(p, e, i), b = k_witt_form(p, e, i);
  EquivalenceReport rep;
  for (auto& [j, len] : a.bands.bands) {
    auto it = b.bands.bands.find(j);
    if ((it == b.bands.bands.end() && len != 0) ||
        (it != b.bands.bands.end() && it->second != len)) {
      rep.equal = false;
      rep.differing_bands.push_back(j);
    }
  }
  for (auto& [j, len] : b.bands.bands)
    if (len != 0 && !a.bands.bands.count(j)) {
      rep.equal = false;
      rep.differing_bands.push_back(j);
    }
  return rep;
}

std::pair<i64, i64> fcrystal_lengths(Prime p, i64 e, i64 i, i64 j) {
  if (e < 1 || i < 1 || j < 1 || j % p.p == 0)
    throw std::invalid_argument("fcrystal_lengths: need e,i,j >= 1 and gcd(j,p)=1");
  i64 integral = 0;
  for (mpz_class d = j;; d *= p.p) {
    mpz_class c = (d + e - 1) / e;  // ceil(d/e)
    if (c >= i) break;
    integral += i - c.get_si();
  }
  const i64 modp = pos(floor_log(p, e * i, j) + 1);
  return {integral, modp};
}

}  // namespace ktrunc
