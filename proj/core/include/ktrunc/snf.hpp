#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "ktrunc/padic.hpp"

namespace ktrunc {

struct IntMatrix {
  i64 rows = 0, cols = 0;
  std::vector<mpz_class> a;  // row-major

  IntMatrix() = default;
  IntMatrix(i64 r, i64 c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}

  mpz_class& at(i64 r, i64 c) { return a[static_cast<size_t>(r * cols + c)]; }
  const mpz_class& at(i64 r, i64 c) const { return a[static_cast<size_t>(r * cols + c)]; }

  static IntMatrix identity(i64 n);
  IntMatrix operator*(const IntMatrix& o) const;
  bool is_zero() const;
  std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;  // M*v
};

// U * M * V = diag(divisors), U and V unimodular, d_1 | d_2 | ..., all >= 0.
struct SNFResult {
  std::vector<mpz_class> divisors;  // length min(rows, cols)
  IntMatrix U, V, Uinv, Vinv;
  i64 rank() const;
};

SNFResult smith_normal_form(const IntMatrix& M);

// Basis of ker(M) as columns; spans a direct summand of Z^cols.
std::vector<std::vector<mpz_class>> kernel_basis(const IntMatrix& M);

// Exact solution of M x = b over Z, if one exists.
std::optional<std::vector<mpz_class>> solve(const IntMatrix& M,
                                            const std::vector<mpz_class>& b);

}  // namespace ktrunc
