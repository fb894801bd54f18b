#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "ktrunc/padic.hpp"

namespace ktrunc {

// Divisor-closed finite set of positive integers.
struct TruncationSet {
  explicit TruncationSet(std::vector<i64> elems);
  static TruncationSet full(i64 m);  // {1, ..., m}

  const std::vector<i64>& elements() const { return elems_; }
  bool contains(i64 n) const;
  TruncationSet quotient(i64 n) const;  // J/n = {m : nm in J}

 private:
  std::vector<i64> elems_;  // ascending
};

// A finite-length module over W(k), k perfect: multiset of cyclic lengths,
// one length per p-band.  Zero lengths are kept so band keys line up.
struct LengthModule {
  i64 p = 0;
  std::map<i64, i64> bands;  // band index j (coprime to p) -> length
  i64 total() const;
};

i64 p_typical_count(const TruncationSet& J, Prime p, i64 j);
LengthModule big_witt_lengths(i64 m, Prime p);

// Per-band lengths of W_{ei}(k) / V_e W_i(k).
LengthModule verschiebung_quotient(i64 e, i64 i, Prime p);

// Big Witt vectors over Q with exact rational coordinates (ghost oracle).
struct WittVector {
  TruncationSet J;
  std::map<i64, mpq_class> coords;  // indexed exactly by J

  WittVector(TruncationSet J_, std::map<i64, mpq_class> c);
  bool is_integral() const;
};

std::map<i64, mpq_class> ghost(const WittVector& a);
WittVector from_ghost(const TruncationSet& J, const std::map<i64, mpq_class>& w);
WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_mul(const WittVector& a, const WittVector& b);
WittVector teichmuller(const TruncationSet& J, const mpq_class& x);

// V_n: W_{J/n} -> W_J; coordinate-wise spread, ghost w_m = n * w_{m/n} (else 0).
WittVector witt_V(i64 n, const WittVector& x, const TruncationSet& target);
// F_n: W_J -> W_{J/n}; ghost-wise w_m -> w_{nm}.
WittVector witt_F(i64 n, const WittVector& x);

}  // namespace ktrunc
