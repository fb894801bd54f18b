#pragma once

#include <string>

#include "ktrunc/padic.hpp"

namespace ktrunc {

// A rendered figure: <basename>.svg / <basename>.csv contents, both ASCII
// with LF endings, byte-deterministic for identical parameters.
struct Figure {
  std::string basename;
  std::string svg;
  std::string csv;
};

// Slope rays d = i*e over the (e,d) lattice.  CSV lists ray crossings e,i,d.
Figure emit_slopes(i64 e_max, i64 d_max, i64 i_max);

// Action of can and phi/p^i on the p-bands of column e (dlog-side modules).
// CSV: j,r,d,can_solid,phi_solid.  i = 0 is allowed (all can-edges solid).
Figure emit_bands(Prime p, i64 e, i64 i, i64 j_max, i64 r_max);

// Nonzero components of pi^*: cell (j,i) red iff pi_star_nonzero, column
// green iff lemma_predicate, guide lines i = p^r j / m.  CSV: j,i,red,green
// with rows only where the target band is nonzero (j <= n*i).
Figure emit_interlock(Prime p, i64 m, i64 n, i64 i_max, i64 j_max);

enum class MultMode { aa, ab };

// Product table: black cell iff the Theorem verdict is nonzero.  vary_i:
// axes i1,i2 with fixed j1=f1, j2=f2; otherwise axes j1,j2 with fixed i1=f1,
// i2=f2.  Cells without both generators count as background.  CSV: x,y,nonzero.
Figure emit_multtable(MultMode mode, Prime p, i64 e, bool vary_i, i64 f1,
                      i64 f2, i64 hi);

}  // namespace ktrunc
