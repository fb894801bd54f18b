#pragma once

#include <optional>

#include "ktrunc/mult.hpp"
#include "ktrunc/snf.hpp"

namespace ktrunc {

// The band-j piece of fib(N^{>=i} LWOmega --(phi/p^i - can)--> LWOmega),
// truncated at level r_max, with exact integer matrices.
//
//   C0 = Z<g_r>  --A-->  C1 = Z<h_r> + Z<G_r>  --B-->  C2 = Z<H_r>
//
// g_r, h_r carry the Nygaard normalizations p^{<i-floor(d/e)>} x^d/floor(d/e)!
// and p^{<i-ceil(d/e)>} x^d/Gamma(ceil(d/e)) dlog x at d = p^r j; G_r, H_r are
// the unnormalized counterparts.  The phi arrow out of level r_max is dropped.
struct BandComplex {
  i64 p = 0, e = 0, i = 0, j = 0, r_max = 0;
  std::vector<i64> d;  // d[r] = p^r j
  IntMatrix A, B;      // B*A = 0, checked at construction
};

BandComplex build_band(Prime p, i64 e, i64 i, i64 j, i64 r_max);

// Truncation level at which h1_fiber_lengths has provably stabilized.
i64 auto_r_max(Prime p, i64 e, i64 i, i64 j);

// H1 of the band as Z^k / im(Y) together with the data needed to map classes.
struct H1Data {
  i64 plen = 0;             // length of the p-primary part
  i64 k = 0;                // rank of ker(B)
  std::vector<std::vector<mpz_class>> kernel;  // k basis vectors in C1 coords
  SNFResult ksnf;           // SNF of the kernel-basis matrix (C1 coords x k)
  SNFResult ysnf;           // SNF of the presentation matrix Y
  i64 p_divisor_index = -1; // index of the unique divisor with vp > 0
  i64 p_divisor_count = 0;
};

H1Data h1_data(const BandComplex& bc);

// Length of the p-primary part of H1 of the truncated band total complex.
i64 h1_fiber_lengths(Prime p, i64 e, i64 i, i64 j, i64 r_max);

// Coordinates of a cocycle's class in the SNF presentation: entry t is taken
// mod ysnf.divisors[t].  Throws if the vector is not in ker(B).
std::vector<mpz_class> class_coordinates(const H1Data& h,
                                         const std::vector<mpz_class>& cocycle);

// Divided-power structure constants (exact; non-integrality is a hard error).
mpz_class dp_product_00(i64 d1, i64 d2, i64 e);  // floor * floor -> floor
mpz_class dp_product_01(i64 d1, i64 d2, i64 e);  // floor * gamma -> gamma

// Formal mod-p band cohomology: dimensions follow generator_exists, bases are
// the canonical window vectors.
struct ModpCohomology {
  int dim_h0 = 0, dim_h1 = 0;
  std::optional<GeneratorDescriptor> basis_h0, basis_h1;
};
ModpCohomology modp_cohomology(Prime p, i64 e, i64 i, i64 j, i64 r_max);

// Componentwise product of canonical representatives, reduced against the
// canonical vector of the target generator.
struct ProductResult {
  Verdict verdict = Verdict::zero;
  i64 lambda = 0;  // in [1, p-1] when nonzero
  GeneratorDescriptor target;
};
ProductResult product_oracle(const GeneratorDescriptor& g1,
                             const GeneratorDescriptor& g2);

}  // namespace ktrunc
