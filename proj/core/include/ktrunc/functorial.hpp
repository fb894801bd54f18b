#pragma once

#include <optional>
#include <vector>

#include "ktrunc/band_complex.hpp"
#include "ktrunc/padic.hpp"

namespace ktrunc {

// A band of the projection pi: k[x]/x^m -> k[x]/x^n.
struct TowerMapQuery {
  i64 p = 0, m = 0, n = 0, i = 0, j = 0;
};

void validate_query(const TowerMapQuery& q);

// s and t of the query: floor log_p of mi/j and ni/j (negative when j large).
i64 query_s(const TowerMapQuery& q);
i64 query_t(const TowerMapQuery& q);

// Hesselholt's ell, each term clamped at >= 0.
i64 ell(const TowerMapQuery& q);

// The same sum with unclamped terms, exposed for debugging the orientation.
i64 ell_raw(const TowerMapQuery& q);

// #{(h, r) : 1 <= h < i, r >= 0, nh < p^r j <= mh}; oracle for ell.
i64 crossing_count(const TowerMapQuery& q);

// Window form of ell: exponent of pi^* on band generators.  Empty when j > ni
// (the target band is zero and ell' is undefined).
std::optional<i64> ell_prime(const TowerMapQuery& q);

// ell' = ell + Gamma-correction, and the two agree after capping at t+1.
bool reconcile(const TowerMapQuery& q);

// The green region: vp Gamma(ceil(j/n)) > vp Gamma(ceil(j/m)).
bool lemma_predicate(const TowerMapQuery& q);

// The red region: target band nonzero and ell' <= t.
bool pi_star_nonzero(const TowerMapQuery& q);

// iota_f^*(x^d/Gamma(ceil(d/e)) dlog x) = f * x^{df}/Gamma(ceil(df/ef)) dlog x.
std::pair<i64, i64> iota_pullback(i64 d, i64 e, i64 f);

enum class IotaDirection { pullback, pushforward };

// Per-band behavior of V_f (pullback) / F_f (pushforward) with f = p^a f',
// f' coprime to p.  Pullback: band j -> band j f', p-exponent shift +a.
// Pushforward: present iff f' | j, band j -> j/f', shift -a (levels dropped).
struct IotaBandImage {
  i64 source_band = 0;
  bool present = false;
  i64 target_band = 0;
  i64 shift = 0;
};

std::vector<IotaBandImage> iota_on_witt(i64 e, i64 i, i64 f, Prime p,
                                        IotaDirection dir);

// Exponent of pi^* on the p-primary band generator, measured inside the
// target band via the divided-power chain map and SNF class coordinates.
struct PiStarImage {
  bool target_zero = false;  // j > ni, or the n-band group vanishes
  bool source_zero = false;  // the m-band group vanishes
  bool zero_map = false;
  i64 cap = 0;       // p-length of the target band
  i64 exponent = 0;  // observed valuation, in [0, cap]; == cap means zero
};

PiStarImage pi_star_oracle(const TowerMapQuery& q, i64 r_max);

}  // namespace ktrunc
