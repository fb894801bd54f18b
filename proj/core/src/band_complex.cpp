#include "ktrunc/band_complex.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace ktrunc {

namespace {

void validate_band_args(Prime p, i64 e, i64 i, i64 j, i64 r_max) {
  if (e < 1 || i < 1 || j < 1) throw std::invalid_argument("band: e, i, j must be >= 1");
  if (j % p.p == 0) throw std::invalid_argument("band: j must be coprime to p");
  if (r_max < 1) throw std::invalid_argument("band: r_max must be >= 1");
}

// b! / a! for 0 <= a <= b, as an explicit product.
mpz_class rising(i64 a, i64 b) {
  mpz_class r = 1;
  for (i64 m = a + 1; m <= b; ++m) r *= m;
  return r;
}

// x * p^exp, dividing exactly when exp < 0.
mpz_class scale_pow(const mpz_class& x, Prime p, i64 exp) {
  if (exp >= 0) return x * pow_mpz(p, exp);
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), pow_mpz(p, -exp).get_mpz_t());
  if (r != 0) throw property_violation("band: non-integral factorial ratio in phi");
  return q;
}

}  // namespace

BandComplex build_band(Prime p, i64 e, i64 i, i64 j, i64 r_max) {
  validate_band_args(p, e, i, j, r_max);
  BandComplex bc;
  bc.p = p.p;
  bc.e = e;
  bc.i = i;
  bc.j = j;
  bc.r_max = r_max;
  const i64 R = r_max;
  bc.d.resize(static_cast<size_t>(R) + 1);
  for (i64 r = 0; r <= R; ++r) bc.d[static_cast<size_t>(r)] = pow_i64(p, r) * j;

  bc.A = IntMatrix(2 * (R + 1), R + 1);
  bc.B = IntMatrix(R + 1, 2 * (R + 1));
  for (i64 r = 0; r <= R; ++r) {
    const i64 dr = bc.d[static_cast<size_t>(r)];
    const i64 q0 = pos(i - floor_div(dr, e));
    const i64 q1 = pos(i - ceil_div(dr, e));

    // d0(g_r) = dN g_r + (phi - can) g_r
    bc.A.at(r, r) = pow_mpz(p, epsilon(i, dr, e)) * brace(dr, e);
    bc.A.at(R + 1 + r, r) -= pow_mpz(p, q0);
    if (r < R) {
      const i64 dn = bc.d[static_cast<size_t>(r) + 1];
      mpz_class ratio = rising(floor_div(dr, e), floor_div(dn, e));
      bc.A.at(R + 1 + r + 1, r) += scale_pow(ratio, p, q0 - i);
    }

    // d1(h_r) = (phi - can) h_r; d1(G_r) = -dW G_r
    bc.B.at(r, r) -= pow_mpz(p, q1);
    if (r < R) {
      const i64 dn = bc.d[static_cast<size_t>(r) + 1];
      mpz_class ratio = rising(floor_div(dr - 1, e), floor_div(dn - 1, e));
      bc.B.at(r + 1, r) += scale_pow(ratio, p, q1 - i + 1);
    }
    bc.B.at(r, R + 1 + r) = -brace(dr, e);
  }

  if (!(bc.B * bc.A).is_zero())
    throw property_violation("band: B*A != 0");
  return bc;
}

i64 auto_r_max(Prime p, i64 e, i64 i, i64 j) {
  validate_band_args(p, e, i, j, 1);
  return pos(floor_log(p, e * i, j)) + 2;
}

H1Data h1_data(const BandComplex& bc) {
  H1Data out;
  auto basis = kernel_basis(bc.B);
  out.k = static_cast<i64>(basis.size());
  out.kernel = basis;

  IntMatrix K(bc.A.rows, out.k);
  for (i64 c = 0; c < out.k; ++c)
    for (i64 r = 0; r < bc.A.rows; ++r)
      K.at(r, c) = basis[static_cast<size_t>(c)][static_cast<size_t>(r)];
  out.ksnf = smith_normal_form(K);
  if (out.ksnf.rank() != out.k)
    throw property_violation("band: kernel basis not independent");

  // Y = coordinates of the columns of A in the kernel basis.
  IntMatrix Y(out.k, bc.A.cols);
  for (i64 c = 0; c < bc.A.cols; ++c) {
    std::vector<mpz_class> a(static_cast<size_t>(bc.A.rows));
    for (i64 r = 0; r < bc.A.rows; ++r) a[static_cast<size_t>(r)] = bc.A.at(r, c);
    std::vector<mpz_class> u = out.ksnf.U.apply(a);
    std::vector<mpz_class> z(static_cast<size_t>(out.k));
    for (i64 t = 0; t < static_cast<i64>(u.size()); ++t) {
      if (t < out.k) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), u[static_cast<size_t>(t)].get_mpz_t(),
                    out.ksnf.divisors[static_cast<size_t>(t)].get_mpz_t());
        if (rem != 0) throw property_violation("band: d0 image not in ker(d1)");
        z[static_cast<size_t>(t)] = q;
      } else if (u[static_cast<size_t>(t)] != 0) {
        throw property_violation("band: d0 image not in ker(d1)");
      }
    }
    std::vector<mpz_class> y = out.ksnf.V.apply(z);
    for (i64 r = 0; r < out.k; ++r) Y.at(r, c) = y[static_cast<size_t>(r)];
  }

  out.ysnf = smith_normal_form(Y);
  if (out.ysnf.rank() != out.k)
    throw property_violation("band: H1 has unexpected free rank");

  Prime p(bc.p);
  for (i64 t = 0; t < out.k; ++t) {
    i64 v = vp(out.ysnf.divisors[static_cast<size_t>(t)], p);
    out.plen += v;
    if (v > 0) {
      ++out.p_divisor_count;
      out.p_divisor_index = t;
    }
  }
  return out;
}

i64 h1_fiber_lengths(Prime p, i64 e, i64 i, i64 j, i64 r_max) {
  return h1_data(build_band(p, e, i, j, r_max)).plen;
}

std::vector<mpz_class> class_coordinates(const H1Data& h,
                                         const std::vector<mpz_class>& cocycle) {
  std::vector<mpz_class> u = h.ksnf.U.apply(cocycle);
  std::vector<mpz_class> z(static_cast<size_t>(h.k));
  for (i64 t = 0; t < static_cast<i64>(u.size()); ++t) {
    if (t < h.k) {
      mpz_class q, rem;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), u[static_cast<size_t>(t)].get_mpz_t(),
                  h.ksnf.divisors[static_cast<size_t>(t)].get_mpz_t());
      if (rem != 0) throw property_violation("class_coordinates: vector not in ker(d1)");
      z[static_cast<size_t>(t)] = q;
    } else if (u[static_cast<size_t>(t)] != 0) {
      throw property_violation("class_coordinates: vector not in ker(d1)");
    }
  }
  std::vector<mpz_class> y = h.ksnf.V.apply(z);
  return h.ysnf.U.apply(y);
}

mpz_class dp_product_00(i64 d1, i64 d2, i64 e) {
  if (d1 < 1 || d2 < 1 || e < 1) throw std::invalid_argument("dp_product: d1, d2, e must be >= 1");
  mpz_class num = factorial(floor_div(d1 + d2, e));
  mpz_class den = factorial(floor_div(d1, e)) * factorial(floor_div(d2, e));
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw property_violation("dp_product: non-integral structure constant");
  return q;
}

mpz_class dp_product_01(i64 d1, i64 d2, i64 e) {
  if (d1 < 1 || d2 < 1 || e < 1) throw std::invalid_argument("dp_product: d1, d2, e must be >= 1");
  mpz_class num = factorial(floor_div(d1 + d2 - 1, e));  // Gamma(ceil((d1+d2)/e))
  mpz_class den = factorial(floor_div(d1, e)) * factorial(floor_div(d2 - 1, e));
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw property_violation("dp_product: non-integral structure constant");
  return q;
}

ModpCohomology modp_cohomology(Prime p, i64 e, i64 i, i64 j, i64 r_max) {
  validate_band_args(p, e, i, j, r_max);
  ModpCohomology out;
  if (generator_exists(Parity::a, p, e, i, j)) {
    GeneratorDescriptor g = describe_generator(Parity::a, p, e, i, j);
    if (g.end > r_max)
      throw std::invalid_argument("modp_cohomology: r_max below the band window");
    out.dim_h0 = 1;
    out.basis_h0 = g;
  }
  if (generator_exists(Parity::b, p, e, i, j)) {
    GeneratorDescriptor g = describe_generator(Parity::b, p, e, i, j);
    if (g.end > r_max)
      throw std::invalid_argument("modp_cohomology: r_max below the band window");
    out.dim_h1 = 1;
    out.basis_h1 = g;
  }
  return out;
}

namespace {

// Nygaard exponent of the basis vector at level r of the target band.
i64 nygaard_exp(Parity parity, i64 i, i64 e, i64 d) {
  return parity == Parity::a ? pos(i - floor_div(d, e)) : pos(i - ceil_div(d, e));
}

}  // namespace

ProductResult product_oracle(const GeneratorDescriptor& g1,
                             const GeneratorDescriptor& g2) {
  if (g1.p != g2.p || g1.e != g2.e)
    throw std::invalid_argument("product_oracle: mismatched p or e");
  Prime p(g1.p);
  const i64 e = g1.e;

  const GeneratorDescriptor* x = &g1;
  const GeneratorDescriptor* y = &g2;
  if (x->parity == Parity::b && y->parity == Parity::a) std::swap(x, y);

  TargetIndices ti = target_indices(x->i, x->j, y->i, y->j, p);
  Parity tparity = (x->parity == y->parity) ? Parity::a : Parity::b;

  ProductResult res;
  res.target = describe_generator(tparity, p, e, ti.i3, ti.j3);

  // Contribution at level rho = r + v: u1 u2 * C(d1,d2) * p^{q1+q2} times the
  // unnormalized target monomial.  Basis coordinate divides out p^{nygaard}.
  std::map<i64, std::pair<i64, i64>> contrib;  // rho -> (vp, unit mod p)
  if (!(x->parity == Parity::b && y->parity == Parity::b)) {
    i64 lo = std::max(x->start, y->start);
    i64 hi = std::min(x->end, y->end);
    for (i64 r = lo; r <= hi; ++r) {
      const i64 d1 = pow_i64(p, r) * x->j;
      const i64 d2 = pow_i64(p, r) * y->j;
      mpz_class c = (tparity == Parity::a) ? dp_product_00(d1, d2, e)
                                           : dp_product_01(d1, d2, e);
      i64 cv = vp(c, p);
      i64 cu = unit_part_mod_p(c, p);
      i64 q1 = x->coeff_vals[static_cast<size_t>(r - x->start)];
      i64 q2 = y->coeff_vals[static_cast<size_t>(r - y->start)];
      i64 u12 = x->units[static_cast<size_t>(r - x->start)] *
                y->units[static_cast<size_t>(r - y->start)] % p.p;
      const i64 rho = r + ti.v;
      const i64 d3 = pow_i64(p, rho) * ti.j3;
      const i64 q3 = nygaard_exp(tparity, ti.i3, e, d3);
      i64 delta = q1 + q2 + cv - q3;
      if (delta < 0)
        throw property_violation("product_oracle: contribution below Nygaard level");
      contrib[rho] = {delta, u12 * cu % p.p};
    }
  }

  // One lambda per resulting coefficient inside the target window; levels
  // outside the window have no canonical component to compare against, so a
  // p-divisible coefficient there is fine and a unit one is a violation.
  std::map<i64, i64> lambda;
  std::ostringstream data;
  for (const auto& [rho, vu] : contrib) {
    bool in_window = rho >= res.target.start && rho <= res.target.end;
    if (!in_window) {
      if (vu.first == 0) {
        data << " level " << rho << " outside target window [" << res.target.start
             << "," << res.target.end << "] with unit coefficient";
        throw property_violation("product_oracle: inconsistent components:" + data.str());
      }
      continue;
    }
    i64 l = 0;
    if (vu.first == 0) {
      i64 u3 = res.target.units[static_cast<size_t>(rho - res.target.start)];
      l = vu.second * inv_mod_p(u3, p) % p.p;
    }
    lambda[rho] = l;
  }

  i64 common = 0;
  bool consistent = true;
  bool first = true;
  for (const auto& [rho, l] : lambda) {
    if (first) { common = l; first = false; }
    else if (l != common) consistent = false;
  }
  if (!consistent) {
    for (const auto& [rho, l] : lambda) data << " lambda[" << rho << "]=" << l;
    throw property_violation("product_oracle: inconsistent components:" + data.str());
  }
  if (common == 0) {
    res.verdict = Verdict::zero;
    res.lambda = 0;
  } else {
    res.verdict = Verdict::nonzero;
    res.lambda = common;
  }
  return res;
}

}  // namespace ktrunc
