#include "ktrunc/witt.hpp"

#include <algorithm>
#include <numeric>

namespace ktrunc {

TruncationSet::TruncationSet(std::vector<i64> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  for (i64 n : elems_) {
    if (n < 1) throw std::invalid_argument("TruncationSet: elements must be positive");
    for (i64 d = 1; d * d <= n; ++d)
      if (n % d == 0 && !(std::binary_search(elems_.begin(), elems_.end(), d) &&
                          std::binary_search(elems_.begin(), elems_.end(), n / d)))
        throw std::invalid_argument("TruncationSet: not divisor-closed");
  }
}

TruncationSet TruncationSet::full(i64 m) {
  if (m < 1) throw std::invalid_argument("TruncationSet::full: m must be >= 1");
  std::vector<i64> v(static_cast<size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return TruncationSet(std::move(v));
}

bool TruncationSet::contains(i64 n) const {
  return std::binary_search(elems_.begin(), elems_.end(), n);
}

TruncationSet TruncationSet::quotient(i64 n) const {
  if (n < 1) throw std::invalid_argument("TruncationSet::quotient: n must be >= 1");
  std::vector<i64> v;
  for (i64 m : elems_)
    if (m % n == 0) v.push_back(m / n);
  return TruncationSet(std::move(v));
}

i64 LengthModule::total() const {
  i64 t = 0;
  for (auto& [j, len] : bands) t += len;
  return t;
}

i64 p_typical_count(const TruncationSet& J, Prime p, i64 j) {
  if (j < 1 || j % p.p == 0)
    throw std::invalid_argument("p_typical_count: j must be positive and coprime to p");
  if (J.elements().empty()) return 0;
  i64 n = 0;
  for (i64 d = j; d <= J.elements().back(); d *= p.p) {
    if (J.contains(d)) ++n;
    if (d > J.elements().back() / p.p) break;
  }
  return n;
}

LengthModule big_witt_lengths(i64 m, Prime p) {
  if (m < 1) throw std::invalid_argument("big_witt_lengths: m must be >= 1");
  LengthModule L;
  L.p = p.p;
  for (i64 j = 1; j <= m; ++j)
    if (j % p.p != 0) L.bands[j] = floor_log(p, m, j) + 1;
  return L;
}

LengthModule verschiebung_quotient(i64 e, i64 i, Prime p) {
  if (e < 1 || i < 1)
    throw std::invalid_argument("verschiebung_quotient: e,i must be >= 1");
  i64 eprime = e;
  while (eprime % p.p == 0) eprime /= p.p;
  LengthModule L;
  L.p = p.p;
  for (i64 j = 1; j <= e * i; ++j) {
    if (j % p.p == 0) continue;
    i64 len = floor_log(p, e * i, j) + 1;
    if (j % eprime == 0 && j / eprime <= i) len -= floor_log(p, i * eprime, j) + 1;
    L.bands[j] = pos(len);
  }
  return L;
}

WittVector::WittVector(TruncationSet J_, std::map<i64, mpq_class> c)
    : J(std::move(J_)), coords(std::move(c)) {
  for (i64 n : J.elements())
    if (!coords.count(n)) coords[n] = 0;
  if (static_cast<i64>(coords.size()) != static_cast<i64>(J.elements().size()))
    throw std::invalid_argument("WittVector: coordinate index set must equal J");
}

bool WittVector::is_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const auto& kv) {
    return kv.second.get_den() == 1;
  });
}

namespace {
mpq_class qpow(const mpq_class& x, i64 k) {
  mpq_class r = 1;
  for (i64 t = 0; t < k; ++t) r *= x;
  return r;
}
}  // namespace

std::map<i64, mpq_class> ghost(const WittVector& a) {
  std::map<i64, mpq_class> w;
  for (i64 n : a.J.elements()) {
    mpq_class s = 0;
    for (i64 d = 1; d <= n; ++d)
      if (n % d == 0) s += d * qpow(a.coords.at(d), n / d);
    w[n] = s;
  }
  return w;
}

WittVector from_ghost(const TruncationSet& J, const std::map<i64, mpq_class>& w) {
  std::map<i64, mpq_class> a;
  for (i64 n : J.elements()) {
    mpq_class s = w.at(n);
    for (i64 d = 1; d < n; ++d)
      if (n % d == 0) s -= d * qpow(a.at(d), n / d);
    a[n] = s / n;
  }
  return WittVector(J, std::move(a));
}

WittVector witt_add(const WittVector& a, const WittVector& b) {
  auto wa = ghost(a), wb = ghost(b);
  for (auto& [n, v] : wa) v += wb.at(n);
  return from_ghost(a.J, wa);
}

WittVector witt_mul(const WittVector& a, const WittVector& b) {
  auto wa = ghost(a), wb = ghost(b);
  for (auto& [n, v] : wa) v *= wb.at(n);
  return from_ghost(a.J, wa);
}

WittVector teichmuller(const TruncationSet& J, const mpq_class& x) {
  std::map<i64, mpq_class> a;
  a[1] = x;
  return WittVector(J, std::move(a));
}

WittVector witt_V(i64 n, const WittVector& x, const TruncationSet& target) {
  if (n < 1) throw std::invalid_argument("witt_V: n must be >= 1");
  std::map<i64, mpq_class> a;
  for (i64 m : target.elements()) {
    if (m % n != 0) continue;
    if (!x.J.contains(m / n))
      throw std::invalid_argument("witt_V: source truncation set too small");
    a[m] = x.coords.at(m / n);
  }
  return WittVector(target, std::move(a));
}

WittVector witt_F(i64 n, const WittVector& x) {
  if (n < 1) throw std::invalid_argument("witt_F: n must be >= 1");
  TruncationSet Jq = x.J.quotient(n);
  auto wx = ghost(x);
  std::map<i64, mpq_class> w;
  for (i64 m : Jq.elements()) w[m] = wx.at(n * m);
  return from_ghost(Jq, w);
}

}  // namespace ktrunc
