#include "ktrunc/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ktrunc/band_complex.hpp"
#include "ktrunc/figures.hpp"
#include "ktrunc/functorial.hpp"
#include "ktrunc/hyperrep.hpp"
#include "ktrunc/kgroups.hpp"
#include "ktrunc/mult.hpp"
#include "ktrunc/padic.hpp"
#include "ktrunc/snf.hpp"
#include "ktrunc/witt.hpp"

namespace ktrunc {

namespace {

struct Check {
  long long n = 0;
  bool ok = true;
  std::string ce;

  template <class F>
  void that(bool cond, F&& msg) {
    ++n;
    if (ok && !cond) {
      ok = false;
      ce = msg();
    }
  }
};

using SuiteFn = std::function<void(Check&, bool)>;

struct Suite {
  const char* name;
  SuiteFn fn;
};

std::vector<std::vector<i64>> csv_rows(const std::string& csv) {
  std::vector<std::vector<i64>> rows;
  std::istringstream in(csv);
  std::string ln;
  bool header = true;
  while (std::getline(in, ln)) {
    if (header) {
      header = false;
      continue;
    }
    if (ln.empty()) continue;
    std::vector<i64> row;
    std::istringstream ls(ln);
    std::string tok;
    while (std::getline(ls, tok, ',')) row.push_back(std::stoll(tok));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------- padic ---

void s_padic_legendre(Check& c, bool quick) {
  i64 nmax = quick ? 300 : 2000;
  for (i64 pp : {2, 3, 5, 7}) {
    Prime p(pp);
    mpz_class f = 1;
    for (i64 n = 1; n <= nmax; ++n) {
      f *= n;
      i64 lhs = vp_factorial(n, p);
      i64 rhs = vp(f, p);
      c.that(lhs == rhs, [&] {
        std::ostringstream o;
        o << "vp_factorial(" << n << "," << pp << ")=" << lhs << " but vp(n!)=" << rhs;
        return o.str();
      });
    }
  }
}

void s_padic_nested_floor(Check& c, bool quick) {
  i64 xmax = quick ? 1000 : 10000, mmax = quick ? 12 : 50;
  for (i64 x = 0; x <= xmax; x += (x < 100 ? 1 : 7))
    for (i64 m = 1; m <= mmax; ++m)
      for (i64 n = 1; n <= mmax; ++n)
        c.that(floor_div(floor_div(x, m), n) == floor_div(x, m * n), [&] {
          std::ostringstream o;
          o << "nested floor fails at x=" << x << " m=" << m << " n=" << n;
          return o.str();
        });
}

void s_padic_brace_identity(Check& c, bool quick) {
  i64 dmax = quick ? 100 : 500;
  for (i64 e = 1; e <= (quick ? 20 : 50); ++e)
    for (i64 d = 1; d <= dmax; ++d) {
      mpz_class lhs = mpz_class(brace(d, e)) * factorial(floor_div(d, e));
      mpz_class rhs = mpz_class(d) * factorial(floor_div(d - 1, e));
      c.that(lhs == rhs, [&] {
        std::ostringstream o;
        o << "brace identity fails at d=" << d << " e=" << e;
        return o.str();
      });
    }
}

void s_padic_log_adjoint(Check& c, bool quick) {
  i64 amax = quick ? 80 : 400;
  for (i64 pp : {2, 3, 5}) {
    Prime p(pp);
    for (i64 a = 1; a <= amax; ++a)
      for (i64 b = 1; b <= amax; ++b) {
        i64 fl = floor_log(p, a, b);
        c.that(fl == -ceil_log(p, b, a), [&] {
          std::ostringstream o;
          o << "adjointness fails at p=" << pp << " a=" << a << " b=" << b;
          return o.str();
        });
        // bracketing: p^fl * b <= a < p^{fl+1} * b (scaled to avoid negatives)
        mpz_class lo = fl >= 0 ? mpz_class(b) * pow_mpz(pp, fl) : mpz_class(b);
        mpz_class av = fl >= 0 ? mpz_class(a) : mpz_class(a) * pow_mpz(pp, -fl);
        c.that(lo <= av && av < lo * pp, [&] {
          std::ostringstream o;
          o << "floor_log bracket fails at p=" << pp << " a=" << a << " b=" << b
            << " fl=" << fl;
          return o.str();
        });
      }
  }
}

void s_padic_vp_gamma_ratio(Check& c, bool quick) {
  i64 dmax = quick ? 60 : 200;
  for (i64 pp : {2, 3, 5}) {
    Prime p(pp);
    for (i64 e = 1; e <= (quick ? 10 : 200); ++e)
      for (i64 d = 1; d <= dmax; ++d)
        c.that(vp_gamma_ratio(d, e, p) == ceil_div(d, e) - 1, [&] {
          std::ostringstream o;
          o << "vp_gamma_ratio != ceil(d/e)-1 at p=" << pp << " d=" << d << " e=" << e;
          return o.str();
        });
  }
}

void s_padic_epsilon(Check& c, bool quick) {
  i64 imax = quick ? 10 : 30, dmax = quick ? 50 : 150, emax = quick ? 6 : 10;
  for (i64 i = 0; i <= imax; ++i)
    for (i64 e = 1; e <= emax; ++e)
      for (i64 d = 1; d <= dmax; ++d) {
        int ep = epsilon(i, d, e);
        i64 want = pos(i - floor_div(d, e)) - pos(i - ceil_div(d, e));
        c.that((ep == 0 || ep == 1) && ep == want, [&] {
          std::ostringstream o;
          o << "epsilon wrong at i=" << i << " d=" << d << " e=" << e;
          return o.str();
        });
      }
}

// ----------------------------------------------------------------- witt ---

void s_witt_big_total(Check& c, bool quick) {
  i64 mmax = quick ? 100 : 500;
  for (i64 pp : {2, 3, 5, 7}) {
    Prime p(pp);
    for (i64 m = 1; m <= mmax; ++m)
      c.that(big_witt_lengths(m, p).total() == m, [&] {
        std::ostringstream o;
        o << "big_witt_lengths total != m at p=" << pp << " m=" << m;
        return o.str();
      });
  }
}

void s_witt_vq_total(Check& c, bool quick) {
  i64 emax = quick ? 8 : 12, imax = quick ? 15 : 40;
  for (i64 pp : {2, 3, 5, 7}) {
    Prime p(pp);
    for (i64 e = 1; e <= emax; ++e)
      for (i64 i = 1; i <= imax; ++i)
        c.that(verschiebung_quotient(e, i, p).total() == i * (e - 1), [&] {
          std::ostringstream o;
          o << "verschiebung_quotient total != i(e-1) at p=" << pp << " e=" << e
            << " i=" << i;
          return o.str();
        });
  }
}

void s_witt_truncation_closed(Check& c, bool) {
  auto rejects = [](std::vector<i64> v) {
    try {
      TruncationSet t(std::move(v));
    } catch (const std::invalid_argument&) {
      return true;
    }
    return false;
  };
  c.that(rejects({2}), [] { return std::string("{2} accepted"); });
  c.that(rejects({1, 4}), [] { return std::string("{1,4} accepted"); });
  c.that(rejects({1, 2, 9}), [] { return std::string("{1,2,9} accepted"); });
  c.that(!rejects({1, 2, 4}), [] { return std::string("{1,2,4} rejected"); });
  c.that(!rejects({1, 2, 3, 9}), [] { return std::string("{1,2,3,9} rejected"); });
  for (i64 m = 1; m <= 30; ++m) {
    TruncationSet J = TruncationSet::full(m);
    c.that(static_cast<i64>(J.elements().size()) == m,
           [&] { return "full(" + std::to_string(m) + ") wrong size"; });
    for (i64 n = 1; n <= 6; ++n) {
      TruncationSet q = J.quotient(n);
      bool ok = true;
      for (i64 x : q.elements())
        if (!J.contains(n * x)) ok = false;
      c.that(ok, [&] {
        return "quotient(" + std::to_string(n) + ") of full(" + std::to_string(m) +
               ") not consistent";
      });
    }
  }
}

void s_witt_ghost_oracle(Check& c, bool quick) {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<i64> coin(-9, 9);
  TruncationSet J = TruncationSet::full(12);
  auto random_vec = [&](const TruncationSet& S) {
    std::map<i64, mpq_class> coords;
    for (i64 m : S.elements()) coords[m] = mpq_class(coin(rng));
    return WittVector(S, std::move(coords));
  };
  int trials = quick ? 8 : 40;
  for (int t = 0; t < trials; ++t) {
    WittVector x = random_vec(J), y = random_vec(J);
    WittVector s = witt_add(x, y), m = witt_mul(x, y);
    c.that(s.is_integral(), [&] { return "witt_add not integral at trial " + std::to_string(t); });
    c.that(m.is_integral(), [&] { return "witt_mul not integral at trial " + std::to_string(t); });
    WittVector rt = from_ghost(J, ghost(x));
    c.that(rt.coords == x.coords,
           [&] { return "ghost roundtrip failed at trial " + std::to_string(t); });
  }
  for (i64 n : {2, 3, 4, 6}) {
    WittVector x = random_vec(J.quotient(n));
    WittVector v = witt_V(n, x, J);
    auto gx = ghost(x), gv = ghost(v);
    bool vok = true;
    for (i64 m : J.elements()) {
      mpq_class want = (m % n == 0) ? mpq_class(n) * gx[m / n] : mpq_class(0);
      if (gv[m] != want) vok = false;
    }
    c.that(vok, [&] { return "V_" + std::to_string(n) + " ghost formula failed"; });
    auto gfv = ghost(witt_F(n, v));
    bool fok = true;
    for (i64 m : J.quotient(n).elements())
      if (gfv[m] != mpq_class(n) * gx[m]) fok = false;
    c.that(fok, [&] { return "F_" + std::to_string(n) + " V_" + std::to_string(n) + " != n"; });
  }
  for (i64 a = -3; a <= 3; ++a)
    for (i64 b = -3; b <= 3; ++b) {
      WittVector ta = teichmuller(J, a), tb = teichmuller(J, b);
      WittVector tab = teichmuller(J, a * b);
      c.that(witt_mul(ta, tb).coords == tab.coords, [&] {
        return "teichmuller not multiplicative at a=" + std::to_string(a) +
               " b=" + std::to_string(b);
      });
    }
  for (i64 n : {2, 3}) {
    for (i64 a = -3; a <= 3; ++a) {
      mpq_class an = 1;
      for (i64 t = 0; t < n; ++t) an *= a;
      c.that(witt_F(n, teichmuller(J, a)).coords ==
                 teichmuller(J.quotient(n), an).coords,
             [&] {
               return "F_" + std::to_string(n) + " teichmuller(" + std::to_string(a) +
                      ") wrong";
             });
    }
  }
}

void s_witt_ptypical_count(Check& c, bool quick) {
  i64 mmax = quick ? 60 : 200;
  for (i64 pp : {2, 3, 5}) {
    Prime p(pp);
    for (i64 m = 1; m <= mmax; ++m) {
      TruncationSet J = TruncationSet::full(m);
      for (i64 j = 1; j <= m; ++j) {
        if (j % pp == 0) continue;
        c.that(p_typical_count(J, p, j) == floor_log(p, m, j) + 1, [&] {
          std::ostringstream o;
          o << "p_typical_count wrong at p=" << pp << " m=" << m << " j=" << j;
          return o.str();
        });
      }
    }
  }
}

// -------------------------------------------------------------- kgroups ---

void s_kgroups_equivalence(Check& c, bool quick) {
  i64 emax = quick ? 6 : 12, imax = quick ? 12 : 40;
  for (i64 pp : {2, 3, 5, 7}) {
    Prime p(pp);
    for (i64 e = 1; e <= emax; ++e)
      for (i64 i = 1; i <= imax; ++i) {
        EquivalenceReport r = check_equivalence(p, e, i);
        c.that(r.equal, [&] {
          std::ostringstream o;
          o << "closed != witt at p=" << pp << " e=" << e << " i=" << i << ", bands:";
          for (i64 j : r.differing_bands) o << " " << j;
          return o.str();
        });
      }
  }
}

void s_kgroups_total(Check& c, bool quick) {
  i64 emax = quick ? 6 : 12, imax = quick ? 12 : 40;
  for (i64 pp : {2, 3, 5, 7}) {
    Prime p(pp);
    for (i64 e = 1; e <= emax; ++e)
      for (i64 i = 1; i <= imax; ++i)
        c.that(k_closed_form(p, e, i).total == i * (e - 1), [&] {
          std::ostringstream o;
          o << "total != i(e-1) at p=" << pp << " e=" << e << " i=" << i;
          return o.str();
        });
  }
}

void s_kgroups_support(Check& c, bool quick) {
  i64 emax = quick ? 6 : 12, imax = quick ? 12 : 40;
  for (i64 pp : {2, 3, 5, 7}) {
    Prime p(pp);
    for (i64 e = 1; e <= emax; ++e)
      for (i64 i = 1; i <= imax; ++i)
        for (const auto& [j, len] : k_closed_form(p, e, i).bands.bands)
          c.that(len == 0 || (j <= e * i && j % pp != 0), [&] {
            std::ostringstream o;
            o << "bad band support at p=" << pp << " e=" << e << " i=" << i << " j=" << j;
            return o.str();
          });
  }
}

void s_kgroups_monotone(Check& c, bool quick) {
  i64 emax = quick ? 6 : 12, imax = quick ? 12 : 40;
  for (i64 pp : {2, 3, 5, 7}) {
    Prime p(pp);
    for (i64 e = 1; e <= emax; ++e) {
      KGroupResult prev = k_closed_form(p, e, 1);
      for (i64 i = 2; i <= imax; ++i) {
        KGroupResult cur = k_closed_form(p, e, i);
        for (const auto& [j, len] : prev.bands.bands) {
          i64 now = cur.bands.bands.count(j) ? cur.bands.bands.at(j) : 0;
          c.that(now >= len, [&] {
            std::ostringstream o;
            o << "band length drops at p=" << pp << " e=" << e << " i=" << i
              << " j=" << j << ": " << len << " -> " << now;
            return o.str();
          });
        }
        prev = cur;
      }
    }
  }
}

// ------------------------------------------------------------- hyperrep ---

void s_hyperrep_dims_monotone(Check& c, bool) {
  for (i64 pp : {2, 3, 5}) {
    Prime p(pp);
    for (i64 a = 1; a <= 10; ++a)
      for (i64 b = 1; b <= 10; ++b) {
        HyperRep h = HyperRep::slope(a, b);
        for (i64 s = 0; s < 12; ++s)
          c.that(dims(h, p, s + 1) >= dims(h, p, s), [&] {
            std::ostringstream o;
            o << "slope dims not monotone at p=" << pp << " mu=" << a << "/" << b
              << " s=" << s;
            return o.str();
          });
      }
  }
}

void s_hyperrep_tr_agreement(Check& c, bool quick) {
  i64 imax = quick ? 15 : 50;
  for (i64 pp : {2, 3}) {
    Prime p(pp);
    for (i64 a = 1; a <= 10; ++a)
      for (i64 b = 1; b <= 10; ++b) {
        HyperRep h = HyperRep::slope(a, b);
        for (i64 i = 0; i <= imax; ++i) {
          TrLength g = tr_length_general(h, p, i);
          i64 s = tr_length_slope(p, a, b, i);
          c.that(!g.infinite && g.value == s, [&] {
            std::ostringstream o;
            o << "tr lengths disagree at p=" << pp << " mu=" << a << "/" << b
              << " i=" << i << ": general="
              << (g.infinite ? std::string("inf") : std::to_string(g.value))
              << " slope=" << s;
            return o.str();
          });
        }
      }
  }
}

void s_hyperrep_tc_length(Check& c, bool quick) {
  i64 emax = quick ? 6 : 10, imax = quick ? 10 : 30;
  for (i64 pp : {2, 3, 5}) {
    Prime p(pp);
    for (i64 e = 1; e <= emax; ++e)
      for (i64 i = 1; i <= imax; ++i)
        c.that(tc_length_check(p, e, i), [&] {
          std::ostringstream o;
          o << "tc_length_check fails at p=" << pp << " e=" << e << " i=" << i;
          return o.str();
        });
  }
}

void s_hyperrep_decomp_roundtrip(Check& c, bool quick) {
  Prime p(3);
  std::mt19937_64 rng(0xd1ce);
  std::uniform_int_distribution<i64> small(0, 4);
  auto roundtrip = [&](i64 d0, const std::vector<i64>& k) {
    HyperRep h = HyperRep::coeffs(d0, k);
    std::vector<i64> prefix;
    for (i64 s = 0; s <= static_cast<i64>(k.size()); ++s)
      prefix.push_back(dims(h, p, s));
    Decomposition d = irreducible_decomposition(prefix);
    std::vector<i64> kk = d.k;
    while (kk.size() < k.size()) kk.push_back(0);
    std::vector<i64> korig = k;
    while (korig.size() < kk.size()) korig.push_back(0);
    return d.d0 == d0 && kk == korig;
  };
  for (i64 d0 = 0; d0 <= 2; ++d0)
    for (i64 k1 = 0; k1 <= 2; ++k1)
      for (i64 k2 = 0; k2 <= 2; ++k2)
        for (i64 k3 = 0; k3 <= 2; ++k3)
          c.that(roundtrip(d0, {k1, k2, k3}), [&] {
            std::ostringstream o;
            o << "decomposition roundtrip fails at d0=" << d0 << " k=(" << k1 << ","
              << k2 << "," << k3 << ")";
            return o.str();
          });
  int trials = quick ? 10 : 40;
  for (int t = 0; t < trials; ++t) {
    i64 d0 = small(rng);
    std::vector<i64> k(static_cast<size_t>(1 + small(rng) % 8u), 0);
    for (auto& v : k) v = small(rng);
    c.that(roundtrip(d0, k), [&] {
      std::ostringstream o;
      o << "decomposition roundtrip fails at random trial " << t;
      return o.str();
    });
  }
}

// ------------------------------------------------------------- syntomic ---

void s_syntomic_stabilization(Check& c, bool quick) {
  i64 emax = quick ? 4 : 6, imax = quick ? 4 : 8, jmax = quick ? 9 : 25;
  for (i64 pp : {2, 3}) {
    Prime p(pp);
    for (i64 e = 1; e <= emax; ++e)
      for (i64 i = 1; i <= imax; ++i)
        for (i64 j = 1; j <= jmax; ++j) {
          if (j % pp == 0) continue;
          i64 r = auto_r_max(p, e, i, j);
          c.that(h1_fiber_lengths(p, e, i, j, r) == h1_fiber_lengths(p, e, i, j, r + 1),
                 [&] {
                   std::ostringstream o;
                   o << "h1 not stable at p=" << pp << " e=" << e << " i=" << i
                     << " j=" << j << " r_max=" << r;
                   return o.str();
                 });
        }
  }
}

void s_syntomic_closed_agreement(Check& c, bool quick) {
  i64 emax = quick ? 4 : 6, imax = quick ? 4 : 8, jmax = quick ? 9 : 25;
  for (i64 pp : {2, 3}) {
    Prime p(pp);
    for (i64 e = 1; e <= emax; ++e)
      for (i64 i = 1; i <= imax; ++i) {
        KGroupResult closed = k_closed_form(p, e, i);
        for (i64 j = 1; j <= jmax; ++j) {
          if (j % pp == 0) continue;
          i64 want = closed.bands.bands.count(j) ? closed.bands.bands.at(j) : 0;
          i64 got = h1_fiber_lengths(p, e, i, j, auto_r_max(p, e, i, j));
          c.that(got == want, [&] {
            std::ostringstream o;
            o << "oracle " << got << " != closed " << want << " at p=" << pp
              << " e=" << e << " i=" << i << " j=" << j;
            return o.str();
          });
        }
      }
  }
}

void s_syntomic_concentration(Check& c, bool quick) {
  i64 emax = quick ? 3 : 4, imax = quick ? 3 : 5, jmax = quick ? 5 : 10;
  for (i64 pp : {2, 3}) {
    Prime p(pp);
    for (i64 e = 1; e <= emax; ++e)
      for (i64 i = 1; i <= imax; ++i)
        for (i64 j = 1; j <= jmax; ++j) {
          if (j % pp == 0) continue;
          BandComplex bc = build_band(p, e, i, j, auto_r_max(p, e, i, j));
          c.that(smith_normal_form(bc.A).rank() == bc.A.cols, [&] {
            std::ostringstream o;
            o << "H0 != 0 at p=" << pp << " e=" << e << " i=" << i << " j=" << j;
            return o.str();
          });
        }
  }
}

void s_syntomic_dp_integrality(Check& c, bool quick) {
  i64 dmax = quick ? 60 : 300, emax = quick ? 6 : 12;
  for (i64 e = 1; e <= emax; ++e)
    for (i64 d1 = 1; d1 <= dmax; ++d1)
      for (i64 d2 = d1; d2 <= dmax; ++d2) {
        bool ok = true;
        try {
          dp_product_00(d1, d2, e);
          dp_product_01(d1, d2, e);
          dp_product_01(d2, d1, e);
        } catch (const property_violation&) {
          ok = false;
        }
        c.that(ok, [&] {
          std::ostringstream o;
          o << "dp_product not integral at d1=" << d1 << " d2=" << d2 << " e=" << e;
          return o.str();
        });
      }
}

void s_syntomic_modp_dims(Check& c, bool quick) {
  i64 emax = quick ? 3 : 4, imax = quick ? 4 : 6, jmax = quick ? 9 : 15;
  for (i64 pp : {2, 3}) {
    Prime p(pp);
    for (i64 e = 1; e <= emax; ++e)
      for (i64 i = 1; i <= imax; ++i)
        for (i64 j = 1; j <= jmax; ++j) {
          if (j % pp == 0) continue;
          ModpCohomology m = modp_cohomology(p, e, i, j, auto_r_max(p, e, i, j));
          int want_a = generator_exists(Parity::a, p, e, i, j) ? 1 : 0;
          int want_b = generator_exists(Parity::b, p, e, i, j) ? 1 : 0;
          c.that(m.dim_h0 == want_a && m.dim_h1 == want_b, [&] {
            std::ostringstream o;
            o << "modp dims != predicate at p=" << pp << " e=" << e << " i=" << i
              << " j=" << j;
            return o.str();
          });
        }
  }
}

void s_syntomic_lambda_consistency(Check& c, bool quick) {
  i64 emax = quick ? 3 : 4, imax = quick ? 5 : 8, jmax = quick ? 9 : 15;
  for (i64 pp : {2, 3}) {
    Prime p(pp);
    for (i64 e = 2; e <= emax; ++e)
      for (i64 i1 = 1; i1 <= imax; ++i1)
        for (i64 j1 = 1; j1 <= jmax; ++j1) {
          if (!generator_exists(Parity::a, p, e, i1, j1)) continue;
          GeneratorDescriptor g1 = describe_generator(Parity::a, p, e, i1, j1);
          for (i64 i2 = 1; i2 <= imax; ++i2)
            for (i64 j2 = 1; j2 <= jmax; ++j2) {
              for (Parity q : {Parity::a, Parity::b}) {
                if (!generator_exists(q, p, e, i2, j2)) continue;
                GeneratorDescriptor g2 = describe_generator(q, p, e, i2, j2);
                bool ok = true;
                std::string why;
                try {
                  product_oracle(g1, g2);
                } catch (const property_violation& ex) {
                  ok = false;
                  why = ex.what();
                }
                c.that(ok, [&] {
                  std::ostringstream o;
                  o << "inconsistency at p=" << pp << " e=" << e << " (a," << i1 << ","
                    << j1 << ")x(" << (q == Parity::a ? "a" : "b") << "," << i2 << ","
                    << j2 << "): " << why;
                  return o.str();
                });
              }
            }
        }
  }
}

// ----------------------------------------------------------- functorial ---

void s_functorial_ell_crossing(Check& c, bool quick) {
  i64 mmax = quick ? 6 : 12, imax = quick ? 20 : 60, jmax = quick ? 20 : 60;
  for (i64 pp : {2, 3})
    for (i64 m = 2; m <= mmax; ++m)
      for (i64 n = 1; n < m; ++n)
        for (i64 j = 1; j <= jmax; ++j) {
          if (j % pp == 0) continue;
          for (i64 i = 1; i <= imax; ++i) {
            TowerMapQuery q{pp, m, n, i, j};
            c.that(ell(q) == crossing_count(q), [&] {
              std::ostringstream o;
              o << "ell != crossing_count at p=" << pp << " m=" << m << " n=" << n
                << " i=" << i << " j=" << j;
              return o.str();
            });
          }
        }
}

void s_functorial_reconcile(Check& c, bool quick) {
  i64 mmax = quick ? 6 : 12, imax = quick ? 20 : 60, jmax = quick ? 20 : 60;
  for (i64 pp : {2, 3})
    for (i64 m = 2; m <= mmax; ++m)
      for (i64 n = 1; n < m; ++n)
        for (i64 j = 1; j <= jmax; ++j) {
          if (j % pp == 0) continue;
          for (i64 i = 1; i <= imax; ++i) {
            TowerMapQuery q{pp, m, n, i, j};
            c.that(reconcile(q), [&] {
              std::ostringstream o;
              o << "reconcile fails at p=" << pp << " m=" << m << " n=" << n
                << " i=" << i << " j=" << j;
              return o.str();
            });
          }
        }
}

void s_functorial_lemma(Check& c, bool quick) {
  i64 mmax = quick ? 6 : 12, jmax = quick ? 20 : 60, imax = 100;
  for (i64 pp : {2, 3}) {
    Prime p(pp);
    for (i64 m = 2; m <= mmax; ++m)
      for (i64 n = 1; n < m; ++n)
        for (i64 j = 1; j <= jmax; ++j) {
          if (j % pp == 0) continue;
          TowerMapQuery probe{pp, m, n, 1, j};
          if (!lemma_predicate(probe)) continue;
          i64 running = 0;  // ell at current i
          for (i64 i = 1; i <= imax; ++i) {
            i64 t = floor_log(p, n * i, j);
            c.that(running > t, [&] {
              std::ostringstream o;
              o << "lemma violated: ell=" << running << " <= t=" << t << " at p=" << pp
                << " m=" << m << " n=" << n << " i=" << i << " j=" << j;
              return o.str();
            });
            running += pos(floor_log(p, m * i, j) + 1) - pos(floor_log(p, n * i, j) + 1);
          }
        }
  }
}

void s_functorial_pi_star(Check& c, bool quick) {
  i64 mmax = quick ? 4 : 6, imax = quick ? 4 : 6, jmax = quick ? 9 : 15;
  for (i64 pp : {2, 3}) {
    Prime p(pp);
    for (i64 m = 2; m <= mmax; ++m)
      for (i64 n = 1; n < m; ++n)
        for (i64 i = 1; i <= imax; ++i)
          for (i64 j = 1; j <= jmax; ++j) {
            if (j % pp == 0) continue;
            TowerMapQuery q{pp, m, n, i, j};
            PiStarImage img = pi_star_oracle(q, auto_r_max(p, m, i, j));
            if (j > n * i || img.cap == 0) {
              c.that(img.zero_map, [&] {
                std::ostringstream o;
                o << "zero target but not zero_map at p=" << pp << " m=" << m
                  << " n=" << n << " i=" << i << " j=" << j;
                return o.str();
              });
              continue;
            }
            i64 want = std::min(*ell_prime(q), img.cap);
            c.that(img.exponent == want, [&] {
              std::ostringstream o;
              o << "pi_star exponent " << img.exponent << " != min(ell',cap)=" << want
                << " at p=" << pp << " m=" << m << " n=" << n << " i=" << i
                << " j=" << j << " (ell'=" << *ell_prime(q) << " cap=" << img.cap << ")";
              return o.str();
            });
          }
  }
}

void s_functorial_ell_prime_nonneg(Check& c, bool quick) {
  i64 mmax = quick ? 6 : 12, imax = quick ? 20 : 60, jmax = quick ? 20 : 60;
  for (i64 pp : {2, 3})
    for (i64 m = 2; m <= mmax; ++m)
      for (i64 n = 1; n < m; ++n)
        for (i64 j = 1; j <= jmax; ++j) {
          if (j % pp == 0) continue;
          for (i64 i = 1; i <= imax; ++i) {
            TowerMapQuery q{pp, m, n, i, j};
            auto lp = ell_prime(q);
            c.that(!lp || *lp >= 0, [&] {
              std::ostringstream o;
              o << "ell_prime < 0 at p=" << pp << " m=" << m << " n=" << n
                << " i=" << i << " j=" << j << ": " << *lp;
              return o.str();
            });
          }
        }
}

// ----------------------------------------------------------------- mult ---

// The componentwise oracle cannot see the correction terms that kill some
// products in K-theory, so it may report nonzero where the Theorem says zero
// (e.g. (a,1,1)x(b,2,1) at p=2,e=2, where the operand windows differ but the
// matched components still cover the target window).  The sound comparison is
// containment: every Theorem-nonzero product must come out nonzero in the
// oracle, i.e. the oracle never misses a real product.
void s_mult_theorem_oracle(Check& c, bool quick) {
  i64 emax = quick ? 3 : 4, imax = quick ? 5 : 8, jmax = quick ? 9 : 15;
  for (i64 pp : {2, 3}) {
    Prime p(pp);
    for (i64 e = 2; e <= emax; ++e)
      for (i64 i1 = 1; i1 <= imax; ++i1)
        for (i64 j1 = 1; j1 <= jmax; ++j1) {
          if (!generator_exists(Parity::a, p, e, i1, j1)) continue;
          GeneratorDescriptor g1 = describe_generator(Parity::a, p, e, i1, j1);
          for (i64 i2 = 1; i2 <= imax; ++i2)
            for (i64 j2 = 1; j2 <= jmax; ++j2)
              for (Parity q : {Parity::a, Parity::b}) {
                if (!generator_exists(q, p, e, i2, j2)) continue;
                GeneratorDescriptor g2 = describe_generator(q, p, e, i2, j2);
                Verdict thm = q == Parity::a ? product_aa(i1, j1, i2, j2, p, e)
                                             : product_ab(i1, j1, i2, j2, p, e);
                Verdict orc = product_oracle(g1, g2).verdict;
                c.that(thm == Verdict::zero || orc == Verdict::nonzero, [&] {
                  std::ostringstream o;
                  o << "theorem nonzero but oracle zero at p=" << pp << " e=" << e
                    << " (a," << i1 << "," << j1 << ")x("
                    << (q == Parity::a ? "a" : "b") << "," << i2 << "," << j2 << ")";
                  return o.str();
                });
              }
        }
  }
  // The worked products agree exactly in both directions.
  Prime p3(3);
  GeneratorDescriptor a12 = describe_generator(Parity::a, p3, 2, 1, 2);
  GeneratorDescriptor a21 = describe_generator(Parity::a, p3, 2, 2, 1);
  GeneratorDescriptor a24 = describe_generator(Parity::a, p3, 2, 2, 4);
  GeneratorDescriptor b31 = describe_generator(Parity::b, p3, 2, 3, 1);
  ProductResult sq = product_oracle(a12, a12);
  c.that(sq.verdict == Verdict::nonzero && sq.lambda == 2 &&
             product_aa(1, 2, 1, 2, p3, 2) == Verdict::nonzero,
         [] { return std::string("a_1^2 a_1^2 != 2 a_2^4"); });
  ProductResult ab = product_oracle(a21, b31);
  c.that(ab.verdict == Verdict::nonzero &&
             product_ab(2, 1, 3, 1, p3, 2) == Verdict::nonzero,
         [] { return std::string("a_2^1 b_3^1 not a nonzero multiple of b_5^2"); });
  ProductResult pz = product_oracle(a12, a24);
  c.that(pz.verdict == Verdict::zero && product_aa(1, 2, 2, 4, p3, 2) == Verdict::zero,
         [] { return std::string("a_1^2 a_2^4 != 0"); });
}

void s_mult_window_agreement(Check& c, bool quick) {
  i64 emax = quick ? 3 : 4, imax = quick ? 5 : 8, jmax = quick ? 9 : 15;
  for (i64 pp : {2, 3}) {
    Prime p(pp);
    for (i64 e = 2; e <= emax; ++e)
      for (i64 i = 1; i <= imax; ++i)
        for (i64 j = 1; j <= jmax; ++j)
          for (Parity q : {Parity::a, Parity::b}) {
            if (!generator_exists(q, p, e, i, j)) continue;
            GeneratorDescriptor g = describe_generator(q, p, e, i, j);
            // independent window recomputation
            i64 start, end;
            if (q == Parity::a) {
              start = pos(ceil_log(p, e * i, j) - 1);
              end = ceil_log(p, e * (i + 1), j);
            } else {
              start = i == 1 ? 0 : pos(floor_log(p, e * (i - 1), j));
              end = floor_log(p, e * i, j) + 1;
            }
            bool okw = g.start == start && g.end == end &&
                       static_cast<i64>(g.coeff_vals.size()) == end - start + 1;
            for (i64 r = start; okw && r <= end; ++r) {
              i64 d = pow_i64(p, r) * j;
              i64 want = q == Parity::a ? pos(i - floor_div(d, e)) : pos(i - ceil_div(d, e));
              if (g.coeff_vals[static_cast<size_t>(r - start)] != want) okw = false;
            }
            c.that(okw, [&] {
              std::ostringstream o;
              o << "descriptor window/values off at p=" << pp << " e=" << e
                << " parity=" << (q == Parity::a ? "a" : "b") << " i=" << i << " j=" << j;
              return o.str();
            });
          }
  }
  // frozen worked quintet at p=3, e=2
  struct Frozen {
    Parity q;
    i64 i, j, start, end;
    std::vector<i64> vals;
  };
  const std::vector<Frozen> quintet = {
      {Parity::a, 1, 2, 0, 1, {0, 0}}, {Parity::a, 2, 1, 1, 2, {1, 0}},
      {Parity::a, 2, 4, 0, 1, {0, 0}}, {Parity::b, 3, 1, 1, 2, {1, 0}},
      {Parity::b, 5, 2, 1, 2, {2, 0}},
  };
  Prime p3(3);
  for (const auto& f : quintet) {
    GeneratorDescriptor g = describe_generator(f.q, p3, 2, f.i, f.j);
    c.that(g.start == f.start && g.end == f.end && g.coeff_vals == f.vals, [&] {
      std::ostringstream o;
      o << "frozen vector mismatch at (p=3,e=2," << (f.q == Parity::a ? "a" : "b")
        << "," << f.i << "," << f.j << ")";
      return o.str();
    });
  }
}

void s_mult_graded_comm(Check& c, bool quick) {
  i64 emax = quick ? 3 : 4, imax = quick ? 4 : 6, jmax = quick ? 7 : 11;
  for (i64 pp : {2, 3}) {
    Prime p(pp);
    for (i64 e = 2; e <= emax; ++e)
      for (i64 i1 = 1; i1 <= imax; ++i1)
        for (i64 j1 = 1; j1 <= jmax; ++j1) {
          if (!generator_exists(Parity::a, p, e, i1, j1)) continue;
          for (i64 i2 = 1; i2 <= imax; ++i2)
            for (i64 j2 = 1; j2 <= jmax; ++j2) {
              if (generator_exists(Parity::a, p, e, i2, j2)) {
                c.that(product_aa(i1, j1, i2, j2, p, e) == product_aa(i2, j2, i1, j1, p, e),
                       [&] {
                         std::ostringstream o;
                         o << "aa verdict order-dependent at p=" << pp << " e=" << e
                           << " (" << i1 << "," << j1 << ")x(" << i2 << "," << j2 << ")";
                         return o.str();
                       });
                GeneratorDescriptor g1 = describe_generator(Parity::a, p, e, i1, j1);
                GeneratorDescriptor g2 = describe_generator(Parity::a, p, e, i2, j2);
                ProductResult r12 = product_oracle(g1, g2), r21 = product_oracle(g2, g1);
                c.that(r12.verdict == r21.verdict && r12.lambda == r21.lambda, [&] {
                  std::ostringstream o;
                  o << "oracle order-dependent at p=" << pp << " e=" << e << " (" << i1
                    << "," << j1 << ")x(" << i2 << "," << j2 << ")";
                  return o.str();
                });
              }
              if (generator_exists(Parity::b, p, e, i2, j2)) {
                GeneratorDescriptor g1 = describe_generator(Parity::a, p, e, i1, j1);
                GeneratorDescriptor g2 = describe_generator(Parity::b, p, e, i2, j2);
                ProductResult r12 = product_oracle(g1, g2), r21 = product_oracle(g2, g1);
                c.that(r12.verdict == r21.verdict && r12.lambda == r21.lambda, [&] {
                  std::ostringstream o;
                  o << "ab oracle order-dependent at p=" << pp << " e=" << e << " ("
                    << i1 << "," << j1 << ")x(" << i2 << "," << j2 << ")";
                  return o.str();
                });
              }
            }
        }
  }
}

void s_mult_associativity(Check& c, bool quick) {
  i64 emax = 3, imax = quick ? 3 : 4, jmax = quick ? 6 : 9;
  for (i64 pp : {2, 3}) {
    Prime p(pp);
    for (i64 e = 2; e <= emax; ++e)
      for (i64 i1 = 1; i1 <= imax; ++i1)
        for (i64 j1 = 1; j1 <= jmax; ++j1)
          for (i64 i2 = 1; i2 <= imax; ++i2)
            for (i64 j2 = 1; j2 <= jmax; ++j2)
              for (i64 i3 = 1; i3 <= imax; ++i3)
                for (i64 j3 = 1; j3 <= jmax; ++j3) {
                  if (!generator_exists(Parity::a, p, e, i1, j1) ||
                      !generator_exists(Parity::a, p, e, i2, j2) ||
                      !generator_exists(Parity::a, p, e, i3, j3))
                    continue;
                  TargetIndices t12 = target_indices(i1, j1, i2, j2, p);
                  TargetIndices t23 = target_indices(i2, j2, i3, j3, p);
                  if (!generator_exists(Parity::a, p, e, t12.i3, t12.j3) ||
                      !generator_exists(Parity::a, p, e, t23.i3, t23.j3))
                    continue;
                  // Verdicts compose only through honestly nonzero intermediates:
                  // a generator on a dead integral band is itself zero, so a
                  // "nonzero multiple" of it says nothing about the triple product.
                  auto dead = [&](i64 bi, i64 bj) {
                    i64 s = floor_log(p, e * bi, bj);
                    return vp(brace(pow_i64(p, s + 1) * bj, e), p) == 0;
                  };
                  if (dead(t12.i3, t12.j3) || dead(t23.i3, t23.j3)) continue;
                  Verdict left = product_aa(i1, j1, i2, j2, p, e) == Verdict::zero
                                     ? Verdict::zero
                                     : product_aa(t12.i3, t12.j3, i3, j3, p, e);
                  Verdict right = product_aa(i2, j2, i3, j3, p, e) == Verdict::zero
                                      ? Verdict::zero
                                      : product_aa(i1, j1, t23.i3, t23.j3, p, e);
                  c.that(left == right, [&] {
                    std::ostringstream o;
                    o << "associativity verdict mismatch at p=" << pp << " e=" << e
                      << " (" << i1 << "," << j1 << ")(" << i2 << "," << j2 << ")("
                      << i3 << "," << j3 << ")";
                    return o.str();
                  });
                }
  }
}

// -------------------------------------------------------------- figures ---

void s_figures_determinism(Check& c, bool) {
  auto same = [&](const Figure& a, const Figure& b) {
    return a.basename == b.basename && a.svg == b.svg && a.csv == b.csv;
  };
  c.that(same(emit_slopes(4, 12, 3), emit_slopes(4, 12, 3)),
         [] { return std::string("slopes not deterministic"); });
  c.that(same(emit_bands(Prime(2), 2, 2, 7, 3), emit_bands(Prime(2), 2, 2, 7, 3)),
         [] { return std::string("bands not deterministic"); });
  c.that(same(emit_interlock(Prime(2), 5, 4, 40, 30), emit_interlock(Prime(2), 5, 4, 40, 30)),
         [] { return std::string("interlock not deterministic"); });
  c.that(same(emit_multtable(MultMode::aa, Prime(3), 2, true, 1, 2, 12),
              emit_multtable(MultMode::aa, Prime(3), 2, true, 1, 2, 12)),
         [] { return std::string("multtable not deterministic"); });
}

void s_figures_interlock_green_not_red(Check& c, bool quick) {
  std::vector<Figure> figs;
  if (quick) {
    figs.push_back(emit_interlock(Prime(2), 6, 5, 30, 20));
  } else {
    figs.push_back(emit_interlock(Prime(2), 12, 11, 80, 60));
    figs.push_back(emit_interlock(Prime(3), 12, 11, 60, 40));
  }
  for (const Figure& f : figs)
    for (const auto& row : csv_rows(f.csv))
      c.that(!(row[3] == 1 && row[2] == 1), [&] {
        std::ostringstream o;
        o << f.basename << ": green cell is red at j=" << row[0] << " i=" << row[1];
        return o.str();
      });
}

void s_figures_interlock_red_support(Check& c, bool quick) {
  std::vector<Figure> figs;
  std::vector<i64> ns;
  if (quick) {
    figs.push_back(emit_interlock(Prime(2), 6, 5, 30, 20));
    ns.push_back(5);
  } else {
    figs.push_back(emit_interlock(Prime(2), 12, 11, 80, 60));
    ns.push_back(11);
    figs.push_back(emit_interlock(Prime(3), 12, 11, 60, 40));
    ns.push_back(11);
  }
  for (size_t k = 0; k < figs.size(); ++k)
    for (const auto& row : csv_rows(figs[k].csv))
      c.that(row[0] <= ns[k] * row[1], [&] {
        std::ostringstream o;
        o << figs[k].basename << ": row with j > n*i at j=" << row[0] << " i=" << row[1];
        return o.str();
      });
}

void s_figures_mult_symmetry(Check& c, bool quick) {
  std::vector<Figure> figs = {emit_multtable(MultMode::aa, Prime(3), 2, true, 2, 2, quick ? 8 : 15),
                              emit_multtable(MultMode::aa, Prime(2), 3, true, 1, 1, quick ? 8 : 12)};
  for (const Figure& f : figs) {
    std::map<std::pair<i64, i64>, i64> grid;
    for (const auto& row : csv_rows(f.csv)) grid[{row[0], row[1]}] = row[2];
    for (const auto& [xy, v] : grid)
      c.that(grid.at({xy.second, xy.first}) == v, [&] {
        std::ostringstream o;
        o << f.basename << ": asymmetric at (" << xy.first << "," << xy.second << ")";
        return o.str();
      });
  }
}

// ------------------------------------------------------------- registry ---

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      {"padic-legendre", s_padic_legendre},
      {"padic-nested-floor", s_padic_nested_floor},
      {"padic-brace-identity", s_padic_brace_identity},
      {"padic-log-adjoint", s_padic_log_adjoint},
      {"padic-vp-gamma-ratio", s_padic_vp_gamma_ratio},
      {"padic-epsilon", s_padic_epsilon},
      {"witt-big-total", s_witt_big_total},
      {"witt-vq-total", s_witt_vq_total},
      {"witt-truncation-closed", s_witt_truncation_closed},
      {"witt-ghost-oracle", s_witt_ghost_oracle},
      {"witt-ptypical-count", s_witt_ptypical_count},
      {"kgroups-equivalence", s_kgroups_equivalence},
      {"kgroups-total", s_kgroups_total},
      {"kgroups-support", s_kgroups_support},
      {"kgroups-monotone", s_kgroups_monotone},
      {"hyperrep-dims-monotone", s_hyperrep_dims_monotone},
      {"hyperrep-tr-agreement", s_hyperrep_tr_agreement},
      {"hyperrep-tc-length", s_hyperrep_tc_length},
      {"hyperrep-decomp-roundtrip", s_hyperrep_decomp_roundtrip},
      {"syntomic-stabilization", s_syntomic_stabilization},
      {"syntomic-closed-agreement", s_syntomic_closed_agreement},
      {"syntomic-concentration", s_syntomic_concentration},
      {"syntomic-dp-integrality", s_syntomic_dp_integrality},
      {"syntomic-modp-dims", s_syntomic_modp_dims},
      {"syntomic-lambda-consistency", s_syntomic_lambda_consistency},
      {"functorial-ell-crossing", s_functorial_ell_crossing},
      {"functorial-reconcile", s_functorial_reconcile},
      {"functorial-lemma", s_functorial_lemma},
      {"functorial-pi-star", s_functorial_pi_star},
      {"functorial-ell-prime-nonneg", s_functorial_ell_prime_nonneg},
      {"mult-theorem-oracle", s_mult_theorem_oracle},
      {"mult-window-agreement", s_mult_window_agreement},
      {"mult-graded-comm", s_mult_graded_comm},
      {"mult-associativity", s_mult_associativity},
      {"figures-determinism", s_figures_determinism},
      {"figures-interlock-green-not-red", s_figures_interlock_green_not_red},
      {"figures-interlock-red-support", s_figures_interlock_red_support},
      {"figures-mult-symmetry", s_figures_mult_symmetry},
  };
  return suites;
}

}  // namespace

std::vector<std::string> expected_suite_names() {
  return {
      "padic-legendre", "padic-nested-floor", "padic-brace-identity",
      "padic-log-adjoint", "padic-vp-gamma-ratio", "padic-epsilon",
      "witt-big-total", "witt-vq-total", "witt-truncation-closed",
      "witt-ghost-oracle", "witt-ptypical-count",
      "kgroups-equivalence", "kgroups-total", "kgroups-support", "kgroups-monotone",
      "hyperrep-dims-monotone", "hyperrep-tr-agreement", "hyperrep-tc-length",
      "hyperrep-decomp-roundtrip",
      "syntomic-stabilization", "syntomic-closed-agreement", "syntomic-concentration",
      "syntomic-dp-integrality", "syntomic-modp-dims", "syntomic-lambda-consistency",
      "functorial-ell-crossing", "functorial-reconcile", "functorial-lemma",
      "functorial-pi-star", "functorial-ell-prime-nonneg",
      "mult-theorem-oracle", "mult-window-agreement", "mult-graded-comm",
      "mult-associativity",
      "figures-determinism", "figures-interlock-green-not-red",
      "figures-interlock-red-support", "figures-mult-symmetry",
  };
}

std::vector<std::string> registered_suite_names() {
  std::vector<std::string> names;
  for (const Suite& s : registry()) names.emplace_back(s.name);
  return names;
}

SuiteResult run_suite(const std::string& name, bool quick) {
  for (const Suite& s : registry()) {
    if (name == s.name) {
      Check c;
      s.fn(c, quick);
      SuiteResult r;
      r.name = name;
      r.passed = c.ok;
      r.checks = c.n;
      r.counterexample = c.ce;
      return r;
    }
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(bool quick) {
  std::vector<SuiteResult> out;
  for (const Suite& s : registry()) out.push_back(run_suite(s.name, quick));
  return out;
}

}  // namespace ktrunc
