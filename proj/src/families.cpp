#include "padicw1/families.hpp"

#include <map>

#include "padicw1/lfunction.hpp"

namespace padicw1 {

namespace {

using Series = TruncatedSeries<Padic>;

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int digits_equal(const Padic& a, const Padic& b) { return agreement(a, b); }

}  // namespace

EisensteinKind parse_eisenstein_kind(const std::string& s) {
  if (s == "1,phi") return EisensteinKind::kOnePhi;
  if (s == "phi,1") return EisensteinKind::kPhiOne;
  throw PreconditionError("unknown Eisenstein kind '" + s + "' (use 1,phi or phi,1)");
}

std::string to_string(EisensteinKind kind) {
  return kind == EisensteinKind::kOnePhi ? "1,phi" : "phi,1";
}

QExpansion<mpq_class> eisenstein_qexp_exact(const DirichletCharacter& phi, int k,
                                            EisensteinKind kind, long n_max) {
  if (k < 1) throw PreconditionError("weight must be >= 1");
  if (!phi.is_odd()) throw PreconditionError("character " + phi.label() + " is not odd");
  std::vector<mpq_class> a(static_cast<size_t>(n_max) + 1, 0);
  if (kind == EisensteinKind::kOnePhi) a[0] = classical_L_nonpositive_exact(phi, k) / 2;
  for (long d = 1; d <= n_max; ++d) {
    mpz_class dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(k - 1));
    for (long n = d; n <= n_max; n += d) {
      int s = kind == EisensteinKind::kOnePhi ? phi.sign(d) : phi.sign(n / d);
      if (s != 0) a[static_cast<size_t>(n)] += s * dk;
    }
  }
  return QExpansion<mpq_class>(std::move(a), "E_" + std::to_string(k) + "(" +
                                                 to_string(kind) + ")");
}

QExpansion<Padic> eisenstein_qexp(const CharacterEmbedding& phi, int k,
                                  EisensteinKind kind, long n_max) {
  if (k < 1) throw PreconditionError("weight must be >= 1");
  if (!phi.character().is_odd()) {
    throw PreconditionError("character " + phi.character().label() + " is not odd");
  }
  const long p = phi.prime();
  const int cap = phi.cap();
  std::vector<Padic> a(static_cast<size_t>(n_max) + 1, Padic::zero(p, cap));
  if (kind == EisensteinKind::kOnePhi) {
    a[0] = classical_L_nonpositive(phi, k) / Padic::from_integer(2, p, cap);
  }
  for (long d = 1; d <= n_max; ++d) {
    Padic dk = Padic::from_integer(d, p, cap).pow(k - 1);
    for (long n = d; n <= n_max; n += d) {
      Padic chi = kind == EisensteinKind::kOnePhi ? phi(d) : phi(n / d);
      if (!chi.is_exact_zero()) a[static_cast<size_t>(n)] += chi * dk;
    }
  }
  return QExpansion<Padic>(std::move(a), "E_" + std::to_string(k) + "(" +
                                             to_string(kind) + ")");
}

QExpansion<Padic> stabilized_eisenstein(const CharacterEmbedding& phi, long n_max) {
  QExpansion<Padic> e = eisenstein_qexp(phi, 1, EisensteinKind::kOnePhi, n_max);
  QExpansion<Padic> f =
      p_stabilize(e, phi.prime(), Padic::one(phi.prime(), phi.cap()));
  f.set_label("f");
  return f;
}

Series cyclotomic_character(long n, long p, int mx, int prec) {
  if (n % p == 0) {
    throw PreconditionError("cyclotomic character needs p not dividing n");
  }
  const int work = prec + 2;
  Padic alpha = iwasawa_log(n < 0 ? -n : n, p, work) / iwasawa_log(1 + p, p, work);
  return binomial_power(alpha, mx);
}

FamilyExpansion lambda_eisenstein(const CharacterEmbedding& phi,
                                  EisensteinKind kind, long n_max, int mx) {
  const DirichletCharacter& chi = phi.character();
  require_lp_setting(chi, phi.prime());
  const long p = phi.prime();
  const int cap = phi.cap();
  const long level = chi.modulus() * p;
  const Padic zero = Padic::zero(p, cap);
  const Series one = Series::constant(zero.one_like(), mx);

  std::map<long, Series> cyc;
  auto cyc_of = [&](long ell) -> const Series& {
    auto it = cyc.find(ell);
    if (it == cyc.end()) it = cyc.emplace(ell, cyclotomic_character(ell, p, mx, cap)).first;
    return it->second;
  };

  Series a0(zero, mx);
  if (kind == EisensteinKind::kOnePhi) {
    ZetaSeries z = zeta_series(chi, p, mx, cap, phi.index());
    a0 = z.series * Padic::from_rational(mpz_class(1), mpz_class(2), p, cap);
  }
  std::function<Series(long)> prime_coeff = [&](long ell) -> Series {
    if (ell == p) return one;
    if (chi.modulus() % ell == 0) {
      return kind == EisensteinKind::kOnePhi ? one : cyc_of(ell);
    }
    if (kind == EisensteinKind::kOnePhi) return one + cyc_of(ell) * phi(ell);
    return Series::constant(phi(ell), mx) + cyc_of(ell);
  };
  std::function<Series(long)> det = [&](long ell) -> Series {
    return cyc_of(ell) * phi(ell);
  };
  auto a = multiplicative_table<Series>(n_max, level, a0, prime_coeff, det);
  return FamilyExpansion(std::move(a), "E(" + to_string(kind) + ")");
}

FamilyExpansion cuspidal_family(const CharacterEmbedding& phi, long n_max,
                                const LInvariantPair& l) {
  const DirichletCharacter& chi = phi.character();
  require_lp_setting(chi, phi.prime());
  const long p = phi.prime();
  const int cap = phi.cap();
  const int mx = 2;
  const long level = chi.modulus() * p;
  const Padic zero = Padic::zero(p, cap);
  const Padic one = zero.one_like();
  const LInvariantPair g = nonvanishing_guard(l.l_phi, l.l_phi_inv);
  const Padic log_gamma = iwasawa_log(1 + p, p, cap + 2);
  const Padic scale = one / (g.sum * log_gamma);

  std::function<Series(long)> prime_coeff = [&](long ell) -> Series {
    Series s(zero, mx);
    if (ell == p) {
      s[0] = one;
      s[1] = -(g.l_phi * g.l_phi_inv * scale);
      return s;
    }
    const Padic chi_ell = phi(ell);
    s[0] = one + chi_ell;
    s[1] = (chi_ell * g.l_phi_inv + g.l_phi) * iwasawa_log(ell, p, cap + 2) * scale;
    return s;
  };
  std::function<Series(long)> det = [&](long ell) -> Series {
    return cyclotomic_character(ell, p, mx, cap) * phi(ell);
  };
  auto a = multiplicative_table<Series>(n_max, level, Series(zero, mx), prime_coeff, det);
  return FamilyExpansion(std::move(a), "F");
}

RelationReport verify_linear_relation(const CharacterEmbedding& phi,
                                      const LInvariantPair& l, long lmax) {
  const long p = phi.prime();
  const long level = phi.character().modulus() * p;
  FamilyExpansion e1 = lambda_eisenstein(phi, EisensteinKind::kOnePhi, lmax, 2);
  FamilyExpansion e2 = lambda_eisenstein(phi, EisensteinKind::kPhiOne, lmax, 2);
  FamilyExpansion f = cuspidal_family(phi, lmax, l);
  const bool quadratic = phi.character().order() <= 2;
  const Padic two = Padic::from_integer(2, p, phi.cap());

  RelationReport report;
  for (long ell = 2; ell <= lmax; ++ell) {
    if (!is_prime(ell) || level % ell == 0) continue;
    RelationRow row;
    row.ell = ell;
    Padic lhs = l.sum * f[ell][1];
    Padic rhs = l.l_phi_inv * e1[ell][1] + l.l_phi * e2[ell][1];
    row.linear = digits_equal(lhs, rhs);
    row.constant = std::min(digits_equal(f[ell][0], e1[ell][0]),
                            digits_equal(f[ell][0], e2[ell][0]));
    int worst = std::min(row.linear, row.constant);
    if (quadratic) {
      row.quadratic = std::min(digits_equal(two * f[ell][0], e1[ell][0] + e2[ell][0]),
                               digits_equal(two * f[ell][1], e1[ell][1] + e2[ell][1]));
      worst = std::min(worst, row.quadratic);
    }
    report.min_digits = std::min(report.min_digits, worst);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace padicw1
