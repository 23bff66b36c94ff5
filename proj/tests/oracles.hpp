#pragma once

// Slow, direct reference computations used as test oracles. None of them
// calls into the library except for Padic conversions.

#include <gmpxx.h>

#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "padicw1/padic.hpp"

namespace oracle {

using padicw1::Padic;

// Bernoulli numbers by the Akiyama-Tanigawa algorithm (B_1 = +1/2 there, so
// the sign of B_1 is flipped on the way out).
inline std::vector<mpq_class> bernoulli_table(int n_max) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> a(static_cast<size_t>(n_max) + 1);
  for (int m = 0; m <= n_max; ++m) {
    a[static_cast<size_t>(m)] = mpq_class(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[static_cast<size_t>(j - 1)] = j * (a[static_cast<size_t>(j - 1)] - a[static_cast<size_t>(j)]);
      a[static_cast<size_t>(j - 1)].canonicalize();
    }
    out.push_back(a[0]);
  }
  if (n_max >= 1) out[1] = -out[1];
  return out;
}

inline mpq_class binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return mpq_class(b);
}

// B_{k,chi} = f^(k-1) sum_{a=1}^{f} chi(a) B_k(a/f) for a primitive chi of
// conductor f, given as a table of values on 1..f.
inline mpq_class generalized_bernoulli(const std::vector<int>& chi, int k) {
  const int f = static_cast<int>(chi.size());
  auto b = bernoulli_table(k);
  mpq_class sum = 0;
  for (int a = 1; a <= f; ++a) {
    if (chi[static_cast<size_t>(a - 1)] == 0) continue;
    mpq_class x(a, f);
    mpq_class poly = 0;
    mpq_class xp = 1;
    for (int j = 0; j <= k; ++j) {
      // B_k(x) = sum_j C(k, j) B_(k-j) x^j
      poly += binomial(k, j) * b[static_cast<size_t>(k - j)] * xp;
      xp *= x;
    }
    sum += chi[static_cast<size_t>(a - 1)] * poly;
  }
  mpz_class fk;
  mpz_ui_pow_ui(fk.get_mpz_t(), static_cast<unsigned long>(f), static_cast<unsigned long>(k - 1));
  mpq_class r = sum * fk;
  r.canonicalize();
  return r;
}

// Kronecker character of a fundamental discriminant on 1..|d| by brute force:
// Euler's criterion for odd primes and the usual rule at 2.
inline int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  mpz_class r;
  mpz_class base = a;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2),
              mpz_class(p).get_mpz_t());
  return r == 1 ? 1 : -1;
}

inline int kronecker(long d, long n) {
  if (std::gcd(d, n) != 1) return 0;
  int s = 1;
  long m = n;
  while (m % 2 == 0) {
    m /= 2;
    const long r = ((d % 8) + 8) % 8;
    s *= (r == 1 || r == 7) ? 1 : -1;
  }
  for (long q = 3; q * q <= m; q += 2) {
    while (m % q == 0) {
      m /= q;
      s *= legendre(d, q);
    }
  }
  if (m > 1) s *= legendre(d, m);
  return s;
}

inline std::vector<int> kronecker_table(long d) {
  std::vector<int> t;
  const long f = d < 0 ? -d : d;
  for (long a = 1; a <= f; ++a) t.push_back(kronecker(d, a));
  return t;
}

// Reduced primitive forms (a, b, c), |b| <= a <= c, b >= 0 if |b| = a or a = c.
inline long class_number(long d) {
  long h = 0;
  for (long a = 1; 3 * a * a <= -d; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      const long num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

// sum over d | n with p not dividing d of w(d, n / d).
template <class F>
auto divisor_sum(long n, long p, F w) -> decltype(w(1L, 1L)) {
  decltype(w(1L, 1L)) s = w(1L, n) - w(1L, n);
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0 && d % p != 0) s += w(d, n / d);
  }
  return s;
}

// Inverse of a unit modulo p^n via the extended Euclidean algorithm.
inline mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (g != 1) throw std::invalid_argument("not a unit");
  mpz_class r = s % m;
  if (r < 0) r += m;
  return r;
}

inline mpz_class power(long p, long n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  return r;
}

// omega(a) mod p^n as the limit a^(p^n).
inline mpz_class teichmuller(long a, long p, int n) {
  mpz_class m = power(p, n), e = power(p, n), r;
  mpz_class base = a;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Iwasawa log of a positive integer u prime to p, from the exact partial sum
// of log(1 + z), z = u^(p-1) - 1, divided by p - 1.
inline Padic iwasawa_log(long u, long p, int n) {
  mpz_class z = power(u, p - 1) - 1;
  mpq_class sum = 0;
  mpz_class zk = 1;
  for (int k = 1; k <= n + 8 + 2 * static_cast<int>(std::log2(n + 8)); ++k) {
    zk *= z;
    mpq_class term(zk, k);
    term.canonicalize();
    sum += (k % 2 == 1) ? term : mpq_class(-term);
  }
  sum /= (p - 1);
  sum.canonicalize();
  return Padic::from_rational_abs(sum, p, n, n + 5);
}

// A square root of a modulo p^n (p odd, a a nonzero square mod p), Hensel
// lifted from the brute-force root r0 mod p.
inline mpz_class sqrt_mod(long a, long p, int n, long r0) {
  mpz_class r = r0;
  const mpz_class mod = power(p, n);
  for (int i = 0; i < n + 2; ++i) {
    mpz_class f = r * r - a;
    mpz_class inv = inverse_mod(mpz_class(2 * r % mod), mod);
    r = (r - f * inv) % mod;
    if (r < 0) r += mod;
  }
  return r;
}

}  // namespace oracle
