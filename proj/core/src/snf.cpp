#include "ktrunc/snf.hpp"

#include <algorithm>

namespace ktrunc {

IntMatrix IntMatrix::identity(i64 n) {
  IntMatrix m(n, n);
  for (i64 k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix r(rows, o.cols);
  for (i64 i = 0; i < rows; ++i)
    for (i64 k = 0; k < cols; ++k) {
      const mpz_class& x = at(i, k);
      if (x == 0) continue;
      for (i64 j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const mpz_class& x) { return x == 0; });
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
  if (static_cast<i64>(v.size()) != cols)
    throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
  std::vector<mpz_class> r(static_cast<size_t>(rows));
  for (i64 i = 0; i < rows; ++i)
    for (i64 j = 0; j < cols; ++j)
      if (at(i, j) != 0) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
  return r;
}

i64 SNFResult::rank() const {
  i64 r = 0;
  for (const auto& d : divisors)
    if (d != 0) ++r;
  return r;
}

namespace {

// Maintains A = U*M*V together with Uinv, Vinv while applying elementary ops.
struct Reducer {
  IntMatrix A, U, Uinv, V, Vinv;

  explicit Reducer(const IntMatrix& M)
      : A(M),
        U(IntMatrix::identity(M.rows)),
        Uinv(IntMatrix::identity(M.rows)),
        V(IntMatrix::identity(M.cols)),
        Vinv(IntMatrix::identity(M.cols)) {}

  void row_swap(i64 i, i64 j) {
    if (i == j) return;
    for (i64 c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
    for (i64 c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    for (i64 r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
  }
  void col_swap(i64 i, i64 j) {
    if (i == j) return;
    for (i64 r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
    for (i64 r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    for (i64 c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
  }
  // row_i += q * row_j
  void row_addmul(i64 i, i64 j, const mpz_class& q) {
    if (q == 0) return;
    for (i64 c = 0; c < A.cols; ++c) A.at(i, c) += q * A.at(j, c);
    for (i64 c = 0; c < U.cols; ++c) U.at(i, c) += q * U.at(j, c);
    for (i64 r = 0; r < Uinv.rows; ++r) Uinv.at(r, j) -= q * Uinv.at(r, i);
  }
  // col_i += q * col_j
  void col_addmul(i64 i, i64 j, const mpz_class& q) {
    if (q == 0) return;
    for (i64 r = 0; r < A.rows; ++r) A.at(r, i) += q * A.at(r, j);
    for (i64 r = 0; r < V.rows; ++r) V.at(r, i) += q * V.at(r, j);
    for (i64 c = 0; c < Vinv.cols; ++c) Vinv.at(j, c) -= q * Vinv.at(i, c);
  }
  void row_negate(i64 i) {
    for (i64 c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
    for (i64 c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    for (i64 r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
  }
  // rows (i,j) <- (s*row_i + t*row_j, u*row_i + v*row_j), with s*v - t*u = 1
  void rows2(i64 i, i64 j, const mpz_class& s, const mpz_class& t,
             const mpz_class& u, const mpz_class& v) {
    auto blend = [&](IntMatrix& M, bool by_rows) {
      if (by_rows) {
        for (i64 c = 0; c < M.cols; ++c) {
          mpz_class x = M.at(i, c), y = M.at(j, c);
          M.at(i, c) = s * x + t * y;
          M.at(j, c) = u * x + v * y;
        }
      } else {  // inverse acts on columns: E^{-1} = [v, -t; -u, s]
        for (i64 r = 0; r < M.rows; ++r) {
          mpz_class x = M.at(r, i), y = M.at(r, j);
          M.at(r, i) = x * v - y * u;
          M.at(r, j) = -x * t + y * s;
        }
      }
    };
    blend(A, true);
    blend(U, true);
    blend(Uinv, false);
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& M) {
  Reducer rd(M);
  IntMatrix& A = rd.A;
  const i64 nmin = std::min(M.rows, M.cols);

  bool exhausted = false;
  for (i64 t = 0; t < nmin && !exhausted; ++t) {
    // Re-pick the absolutely smallest nonzero entry of the trailing submatrix
    // as pivot on every pass; a stale pivot lets quotients (and with them the
    // trailing block) blow up on dense inputs.
    for (;;) {
      i64 pi = -1, pj = -1;
      for (i64 i = t; i < A.rows; ++i)
        for (i64 j = t; j < A.cols; ++j)
          if (A.at(i, j) != 0 &&
              (pi < 0 || mpz_cmpabs(A.at(i, j).get_mpz_t(), A.at(pi, pj).get_mpz_t()) < 0))
            pi = i, pj = j;
      if (pi < 0) { exhausted = true; break; }
      rd.row_swap(t, pi);
      rd.col_swap(t, pj);

      bool clean = true;
      for (i64 i = t + 1; i < A.rows; ++i) {
        if (A.at(i, t) == 0) continue;
        mpz_class q = A.at(i, t) / A.at(t, t);
        rd.row_addmul(i, t, -q);
        if (A.at(i, t) != 0) clean = false;
      }
      for (i64 j = t + 1; j < A.cols; ++j) {
        if (A.at(t, j) == 0) continue;
        mpz_class q = A.at(t, j) / A.at(t, t);
        rd.col_addmul(j, t, -q);
        if (A.at(t, j) != 0) clean = false;
      }
      if (clean) break;
    }
  }

  for (i64 t = 0; t < nmin; ++t)
    if (A.at(t, t) < 0) rd.row_negate(t);

  // sort zero diagonal entries to the end, then enforce d_i | d_j for i < j
  for (bool moved = true; moved;) {
    moved = false;
    for (i64 t = 0; t + 1 < nmin; ++t)
      if (A.at(t, t) == 0 && A.at(t + 1, t + 1) != 0) {
        rd.row_swap(t, t + 1);
        rd.col_swap(t, t + 1);
        moved = true;
      }
  }
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (i64 i = 0; i < nmin; ++i) {
      if (A.at(i, i) == 0) break;
      for (i64 j = i + 1; j < nmin; ++j) {
        if (A.at(j, j) == 0 || A.at(j, j) % A.at(i, i) == 0) continue;
        dirty = true;
        rd.col_addmul(i, j, 1);
        mpz_class a = A.at(i, i), b = A.at(j, i), g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        rd.rows2(i, j, s, t, -b / g, a / g);
        rd.col_addmul(j, i, -(A.at(i, j) / A.at(i, i)));
      }
    }
  }

  SNFResult res;
  res.divisors.resize(static_cast<size_t>(nmin));
  for (i64 t = 0; t < nmin; ++t) res.divisors[static_cast<size_t>(t)] = A.at(t, t);
  res.U = std::move(rd.U);
  res.Uinv = std::move(rd.Uinv);
  res.V = std::move(rd.V);
  res.Vinv = std::move(rd.Vinv);
  return res;
}

std::vector<std::vector<mpz_class>> kernel_basis(const IntMatrix& M) {
  SNFResult s = smith_normal_form(M);
  const i64 r = s.rank();
  std::vector<std::vector<mpz_class>> basis;
  for (i64 k = r; k < M.cols; ++k) {
    std::vector<mpz_class> v(static_cast<size_t>(M.cols));
    for (i64 i = 0; i < M.cols; ++i) v[static_cast<size_t>(i)] = s.V.at(i, k);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<mpz_class>> solve(const IntMatrix& M,
                                            const std::vector<mpz_class>& b) {
  if (static_cast<i64>(b.size()) != M.rows)
    throw std::invalid_argument("solve: dimension mismatch");
  SNFResult s = smith_normal_form(M);
  std::vector<mpz_class> c = s.U.apply(b);
  const i64 nmin = static_cast<i64>(s.divisors.size());
  std::vector<mpz_class> z(static_cast<size_t>(M.cols));
  for (i64 k = 0; k < M.rows; ++k) {
    const mpz_class& ck = c[static_cast<size_t>(k)];
    if (k < nmin && s.divisors[static_cast<size_t>(k)] != 0) {
      const mpz_class& d = s.divisors[static_cast<size_t>(k)];
      if (ck % d != 0) return std::nullopt;
      z[static_cast<size_t>(k)] = ck / d;
    } else if (ck != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(z);
}

}  // namespace ktrunc
