#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "padicw1/characters.hpp"
#include "padicw1/linvariant.hpp"
#include "padicw1/series.hpp"

namespace padicw1 {

/// a_0, a_1, ..., a_nmax of a q-expansion at the cusp infinity.
///
/// Coefficients past n_max are unknown, not zero: reading one throws.
template <class R>
class QExpansion {
 public:
  QExpansion() = default;
  QExpansion(std::vector<R> coeffs, std::string label)
      : c_(std::move(coeffs)), label_(std::move(label)) {
    if (c_.empty()) throw std::invalid_argument("q-expansion needs a_0");
  }

  long n_max() const { return static_cast<long>(c_.size()) - 1; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const R& operator[](long n) const { return c_[index(n)]; }
  R& operator[](long n) { return c_[index(n)]; }
  const std::vector<R>& coefficients() const { return c_; }

 private:
  size_t index(long n) const {
    if (n < 0 || n > n_max()) {
      throw std::out_of_range("coefficient a_" + std::to_string(n) +
                              " is beyond n_max = " + std::to_string(n_max()));
    }
    return static_cast<size_t>(n);
  }

  std::vector<R> c_;
  std::string label_;
};

/// g(z) - alpha g(pz): b_n = a_n - alpha a_{n/p}, b_0 = a_0 (1 - alpha).
template <class R>
QExpansion<R> p_stabilize(const QExpansion<R>& g, long p, const R& alpha) {
  std::vector<R> b = g.coefficients();
  b[0] = g[0] * (one_like(alpha) - alpha);
  for (long n = p; n <= g.n_max(); n += p) b[static_cast<size_t>(n)] -= alpha * g[n / p];
  return QExpansion<R>(std::move(b), g.label() + "|stab");
}

/// T_ell with determinant character value chi_ell; the result is known for
/// n <= n_max / ell.
template <class R>
QExpansion<R> hecke_T(const QExpansion<R>& g, long ell, const R& chi_ell) {
  const long out = g.n_max() / ell;
  if (out < 1) throw std::invalid_argument("n_max too small for T_" + std::to_string(ell));
  std::vector<R> b;
  b.reserve(static_cast<size_t>(out) + 1);
  b.push_back(g[0] * (one_like(chi_ell) + chi_ell));
  for (long n = 1; n <= out; ++n) {
    R v = g[n * ell];
    if (n % ell == 0) v += chi_ell * g[n / ell];
    b.push_back(std::move(v));
  }
  return QExpansion<R>(std::move(b), "T" + std::to_string(ell) + "(" + g.label() + ")");
}

/// U_q: a_n -> a_{nq}; the constant term is kept.
template <class R>
QExpansion<R> hecke_U(const QExpansion<R>& g, long q) {
  const long out = g.n_max() / q;
  if (out < 1) throw std::invalid_argument("n_max too small for U_" + std::to_string(q));
  std::vector<R> b;
  b.reserve(static_cast<size_t>(out) + 1);
  b.push_back(g[0]);
  for (long n = 1; n <= out; ++n) b.push_back(g[n * q]);
  return QExpansion<R>(std::move(b), "U" + std::to_string(q) + "(" + g.label() + ")");
}

/// Coefficientwise linear combination on the common range.
template <class R>
QExpansion<R> combine(const R& a, const QExpansion<R>& f, const R& b,
                      const QExpansion<R>& g) {
  const long n = std::min(f.n_max(), g.n_max());
  std::vector<R> c;
  c.reserve(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) c.push_back(a * f[k] + b * g[k]);
  return QExpansion<R>(std::move(c), "combination");
}

/// Builds a_1..a_nmax of a normalised eigenform from its prime coefficients:
/// a_{l^r} = a_l a_{l^(r-1)} - det(l) a_{l^(r-2)} for l not dividing `level`,
/// a_{l^r} = a_l^r otherwise, extended multiplicatively.
template <class R>
std::vector<R> multiplicative_table(long n_max, long level, const R& a0,
                                    const std::function<R(long)>& prime_coeff,
                                    const std::function<R(long)>& det) {
  std::vector<long> spf(static_cast<size_t>(n_max) + 1, 0);
  for (long i = 2; i <= n_max; ++i) {
    if (spf[static_cast<size_t>(i)] != 0) continue;
    for (long j = i; j <= n_max; j += i) {
      if (spf[static_cast<size_t>(j)] == 0) spf[static_cast<size_t>(j)] = i;
    }
  }
  std::vector<R> a(static_cast<size_t>(n_max) + 1, zero_like(a0));
  a[0] = a0;
  if (n_max >= 1) a[1] = one_like(a0);
  for (long n = 2; n <= n_max; ++n) {
    const long ell = spf[static_cast<size_t>(n)];
    long m = n, pw = 1;
    while (m % ell == 0) {
      m /= ell;
      pw *= ell;
    }
    if (m > 1) {
      a[static_cast<size_t>(n)] = a[static_cast<size_t>(pw)] * a[static_cast<size_t>(m)];
    } else if (n == ell) {
      a[static_cast<size_t>(n)] = prime_coeff(ell);
    } else if (level % ell == 0) {
      a[static_cast<size_t>(n)] = a[static_cast<size_t>(n / ell)] * a[static_cast<size_t>(ell)];
    } else {
      const long prev = n / ell;
      a[static_cast<size_t>(n)] = a[static_cast<size_t>(ell)] * a[static_cast<size_t>(prev)] -
                                  det(ell) * a[static_cast<size_t>(prev / ell)];
    }
  }
  return a;
}

enum class EisensteinKind { kOnePhi, kPhiOne };

/// "1,phi" or "phi,1".
EisensteinKind parse_eisenstein_kind(const std::string& s);
std::string to_string(EisensteinKind kind);

/// E_k(1, phi) or E_k(phi, 1) with exact rational coefficients (order <= 2).
QExpansion<mpq_class> eisenstein_qexp_exact(const DirichletCharacter& phi, int k,
                                            EisensteinKind kind, long n_max);

/// The same with embedded character values.
QExpansion<Padic> eisenstein_qexp(const CharacterEmbedding& phi, int k,
                                  EisensteinKind kind, long n_max);

/// f: the p-stabilisation of E_1(1, phi) with U_p-eigenvalue 1.
QExpansion<Padic> stabilized_eisenstein(const CharacterEmbedding& phi, long n_max);

/// (1 + X)^(log_p n / log_p(1+p)) mod X^Mx for p not dividing n.
TruncatedSeries<Padic> cyclotomic_character(long n, long p, int mx, int prec);

using FamilyExpansion = QExpansion<TruncatedSeries<Padic>>;

/// The ordinary Eisenstein family through f of the given kind, mod X^Mx.
FamilyExpansion lambda_eisenstein(const CharacterEmbedding& phi,
                                  EisensteinKind kind, long n_max, int mx);

/// The cuspidal family through f, mod X^2.
FamilyExpansion cuspidal_family(const CharacterEmbedding& phi, long n_max,
                                const LInvariantPair& l);

struct RelationRow {
  long ell = 0;
  /// Digits to which (L + L')a_l(F)'(0) = L' a_l(E_1phi)'(0) + L a_l(E_phi1)'(0).
  int linear = 0;
  /// Digits to which the three families agree at X = 0.
  int constant = 0;
  /// Quadratic phi only: digits of 2 a_l(F) = a_l(E_1phi) + a_l(E_phi1) mod X^2.
  int quadratic = -1;
};

struct RelationReport {
  std::vector<RelationRow> rows;
  int min_digits = Padic::kExact;
};

/// Checks the linear relation for every prime l <= lmax not dividing Np.
RelationReport verify_linear_relation(const CharacterEmbedding& phi,
                                      const LInvariantPair& l, long lmax);

}  // namespace padicw1
