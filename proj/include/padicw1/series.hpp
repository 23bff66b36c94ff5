#pragma once

#include <stdexcept>
#include <vector>

#include "padicw1/padic.hpp"

namespace padicw1 {

/// c_0 + c_1 X + ... + c_{Mx-1} X^{Mx-1} + O(X^Mx) over a ring R.
///
/// R is mpq_class, Padic, or another TruncatedSeries. Every element carries
/// exactly Mx coefficients and products are truncated at X^Mx.
template <class R>
class TruncatedSeries {
 public:
  TruncatedSeries() = default;

  /// The zero series of length mx; `proto` supplies the coefficient ring.
  TruncatedSeries(const R& proto, int mx) {
    if (mx < 1) throw std::invalid_argument("truncation must be positive");
    c_.assign(static_cast<size_t>(mx), zero_like(proto));
  }

  /// Coefficients padded with zeros or truncated to length mx.
  TruncatedSeries(std::vector<R> coeffs, int mx) : c_(std::move(coeffs)) {
    if (mx < 1) throw std::invalid_argument("truncation must be positive");
    if (c_.empty()) throw std::invalid_argument("empty coefficient list");
    R z = zero_like(c_.front());
    c_.resize(static_cast<size_t>(mx), z);
  }

  static TruncatedSeries constant(const R& c, int mx) {
    TruncatedSeries s(c, mx);
    s.c_[0] = c;
    return s;
  }

  /// The variable X itself (requires mx >= 1; X vanishes when mx == 1).
  static TruncatedSeries variable(const R& proto, int mx) {
    TruncatedSeries s(proto, mx);
    if (mx > 1) s.c_[1] = one_like(proto);
    return s;
  }

  int mx() const { return static_cast<int>(c_.size()); }
  const R& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
  R& operator[](int k) { return c_.at(static_cast<size_t>(k)); }
  const std::vector<R>& coefficients() const { return c_; }

  TruncatedSeries truncated(int mx) const {
    return TruncatedSeries(c_, mx);
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_length(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_length(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) {
    check_length(o);
    const size_t n = c_.size();
    std::vector<R> r(n, zero_like(c_[0]));
    for (size_t i = 0; i < n; ++i) {
      if (is_zero(c_[i]) && is_exact_zero_like(c_[i])) continue;
      for (size_t j = 0; i + j < n; ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    return *this;
  }
  TruncatedSeries& operator*=(const R& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) {
    return a *= b;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const R& s) {
    return a *= s;
  }
  friend TruncatedSeries operator*(const R& s, TruncatedSeries a) {
    return a *= s;
  }

 private:
  void check_length(const TruncatedSeries& o) const {
    if (o.c_.size() != c_.size()) {
      throw std::invalid_argument("series truncations differ");
    }
  }
  static bool is_exact_zero_like(const Padic& x) { return x.is_exact_zero(); }
  static bool is_exact_zero_like(const mpq_class&) { return true; }
  template <class S>
  static bool is_exact_zero_like(const TruncatedSeries<S>&) {
    return false;
  }

  std::vector<R> c_;
};

template <class R>
TruncatedSeries<R> zero_like(const TruncatedSeries<R>& s) {
  return TruncatedSeries<R>(s[0], s.mx());
}
template <class R>
TruncatedSeries<R> one_like(const TruncatedSeries<R>& s) {
  return TruncatedSeries<R>::constant(one_like(s[0]), s.mx());
}
template <class R>
TruncatedSeries<R> integer_like(const TruncatedSeries<R>& s, long n) {
  return TruncatedSeries<R>::constant(integer_like(s[0], n), s.mx());
}
template <class R>
bool is_zero(const TruncatedSeries<R>& s) {
  for (int k = 0; k < s.mx(); ++k) {
    if (!is_zero(s[k])) return false;
  }
  return true;
}

/// d/dX; the result has truncation Mx - 1 (at least 1).
template <class R>
TruncatedSeries<R> derivative(const TruncatedSeries<R>& f) {
  const int n = f.mx();
  if (n == 1) return TruncatedSeries<R>(f[0], 1);
  std::vector<R> c;
  c.reserve(static_cast<size_t>(n - 1));
  for (int k = 1; k < n; ++k) c.push_back(f[k] * integer_like(f[k], k));
  return TruncatedSeries<R>(std::move(c), n - 1);
}

/// f(h) mod X^Mx. Requires h(0) = 0.
template <class R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& f,
                           const TruncatedSeries<R>& h) {
  if (!is_zero(h[0])) {
    throw std::invalid_argument("compose: inner series has nonzero constant term");
  }
  const int n = h.mx();
  TruncatedSeries<R> result(h[0], n);
  for (int k = std::min(f.mx(), n) - 1; k >= 0; --k) {
    result *= h;
    result[0] += f[k];
  }
  return result;
}

/// f(x) for a ring element x, by Horner's rule over all stored terms.
template <class R>
R evaluate(const TruncatedSeries<R>& f, const R& x) {
  R acc = f[f.mx() - 1];
  for (int k = f.mx() - 2; k >= 0; --k) acc = acc * x + f[k];
  return acc;
}

/// 1/f for f with invertible constant term.
template <class R>
TruncatedSeries<R> inverse(const TruncatedSeries<R>& f) {
  const int n = f.mx();
  TruncatedSeries<R> g(f[0], n);
  R inv0 = one_like(f[0]) / f[0];
  g[0] = inv0;
  for (int k = 1; k < n; ++k) {
    R acc = zero_like(f[0]);
    for (int i = 1; i <= k; ++i) acc += f[i] * g[k - i];
    g[k] = -(acc * inv0);
  }
  return g;
}

/// exp(f) for f(0) = 0, via g' = f' g.
template <class R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& f) {
  if (!is_zero(f[0])) {
    throw std::invalid_argument("series_exp: nonzero constant term");
  }
  const int n = f.mx();
  TruncatedSeries<R> g(f[0], n);
  g[0] = one_like(f[0]);
  for (int k = 1; k < n; ++k) {
    R acc = zero_like(f[0]);
    for (int i = 1; i <= k; ++i) acc += integer_like(f[0], i) * f[i] * g[k - i];
    g[k] = acc / integer_like(f[0], k);
  }
  return g;
}

/// log(1 + f) for f(0) = 0.
template <class R>
TruncatedSeries<R> series_log1p(const TruncatedSeries<R>& f) {
  if (!is_zero(f[0])) {
    throw std::invalid_argument("series_log1p: nonzero constant term");
  }
  const int n = f.mx();
  TruncatedSeries<R> result(f[0], n);
  TruncatedSeries<R> power = f;
  for (int k = 1; k < n; ++k) {
    R scale = one_like(f[0]) / integer_like(f[0], k % 2 == 1 ? k : -k);
    result += power * scale;
    power *= f;
  }
  return result;
}

/// (1 + X)^alpha = sum_k C(alpha, k) X^k mod X^Mx.
template <class R>
TruncatedSeries<R> binomial_power(const R& alpha, int mx) {
  TruncatedSeries<R> s(alpha, mx);
  s[0] = one_like(alpha);
  for (int k = 1; k < mx; ++k) {
    s[k] = s[k - 1] * (alpha - integer_like(alpha, k - 1)) /
           integer_like(alpha, k);
  }
  return s;
}

}  // namespace padicw1
