#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ktrunc/padic.hpp"
#include "ktrunc/witt.hpp"

namespace ktrunc {

// K~_{2i-1}(k[x]/x^e; Z_p) as per-band cyclic lengths over W(k).
struct KGroupResult {
  i64 p = 0, e = 0, i = 0;
  LengthModule bands;
  i64 total = 0;
  std::string form;  // "closed" or "witt"
};

// Band j <= ei gets vp({p^{<s+1>} j, e}) with s = floor_log(p, ei, j).
KGroupResult k_closed_form(Prime p, i64 e, i64 i);

// Same group as W_{ei}(k) / V_e W_i(k).
KGroupResult k_witt_form(Prime p, i64 e, i64 i);

struct EquivalenceReport {
  bool equal = true;
  std::vector<i64> differing_bands;
};
EquivalenceReport check_equivalence(Prime p, i64 e, i64 i);

// (integral length sum_r <i - ceil(p^r j / e)>, mod-p length <floor_log(p,ei,j)+1>).
std::pair<i64, i64> fcrystal_lengths(Prime p, i64 e, i64 i, i64 j);

}  // namespace ktrunc
