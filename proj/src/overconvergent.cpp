#include "padicw1/overconvergent.hpp"

#include <numeric>

#include "padicw1/lfunction.hpp"
#include "padicw1/linalg.hpp"

namespace padicw1 {

namespace {

using Coeffs = std::vector<Padic>;

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// log_p(n) for 0 <= n <= n_max (entry 0 unused), built from logs of primes.
Coeffs log_table(long p, int cap, long n_max) {
  Coeffs logs(static_cast<size_t>(n_max) + 1, Padic::zero(p, cap));
  std::vector<long> spf(static_cast<size_t>(n_max) + 1, 0);
  for (long n = 2; n <= n_max; ++n) {
    if (spf[static_cast<size_t>(n)] == 0) {
      for (long m = n; m <= n_max; m += n) {
        if (spf[static_cast<size_t>(m)] == 0) spf[static_cast<size_t>(m)] = n;
      }
      if (n != p) logs[static_cast<size_t>(n)] = iwasawa_log(n, p, cap);
    } else {
      long q = spf[static_cast<size_t>(n)];
      logs[static_cast<size_t>(n)] =
          logs[static_cast<size_t>(q)] + logs[static_cast<size_t>(n / q)];
    }
  }
  return logs;
}

// S0(n) = sum phi(d), S1(n) = sum phi(d) log_p(d), over d | n with p not
// dividing d.
struct DivisorSums {
  Coeffs s0;
  Coeffs s1;
  Coeffs logs;
};

DivisorSums divisor_sums(const CharacterEmbedding& phi, long n_max) {
  const long p = phi.prime();
  const int cap = phi.cap();
  DivisorSums s;
  s.logs = log_table(p, cap, n_max);
  s.s0.assign(static_cast<size_t>(n_max) + 1, Padic::zero(p, cap));
  s.s1.assign(static_cast<size_t>(n_max) + 1, Padic::zero(p, cap));
  for (long d = 1; d <= n_max; ++d) {
    if (d % p == 0) continue;
    const Padic chi = phi(d);
    if (chi.is_exact_zero()) continue;
    const Padic weighted = chi * s.logs[static_cast<size_t>(d)];
    for (long n = d; n <= n_max; n += d) {
      s.s0[static_cast<size_t>(n)] += chi;
      s.s1[static_cast<size_t>(n)] += weighted;
    }
  }
  return s;
}

QExpansion<Padic> dagger_from_sums(const DivisorSums& s, EisensteinKind kind,
                                   long p, const LInvariantPair& l,
                                   const Padic& l0) {
  const long n_max = static_cast<long>(s.s0.size()) - 1;
  const Padic two = Padic::from_integer(2, p, l.sum.cap());
  Coeffs a(static_cast<size_t>(n_max) + 1, Padic::zero(p, l.sum.cap()));
  const bool phi_one = kind == EisensteinKind::kPhiOne;
  if (!phi_one) a[0] = l.sum * l0 / two;
  for (long n = 1; n <= n_max; ++n) {
    const size_t i = static_cast<size_t>(n);
    const Padic ordn = Padic::from_integer(ord_p(n, p), p, l.sum.cap());
    // sum phi(d) (ord(n) L -/+ (2 log d - log n))
    if (phi_one) {
      a[i] = (ordn * l.l_phi + s.logs[i]) * s.s0[i] - two * s.s1[i];
    } else {
      a[i] = (ordn * l.l_phi_inv - s.logs[i]) * s.s0[i] + two * s.s1[i];
    }
  }
  return QExpansion<Padic>(std::move(a), phi_one ? "f_dagger(phi,1)" : "f_dagger(1,phi)");
}

int zero_digits(const Padic& x) { return x.valuation_bound(); }

// (U_p - 1) g on 0..range.
Coeffs up_minus_one(const Coeffs& g, long p, long range) {
  Coeffs out;
  for (long n = 0; n <= range; ++n) {
    out.push_back(g.at(static_cast<size_t>(n * p)) - g.at(static_cast<size_t>(n)));
  }
  return out;
}

}  // namespace

int agreement_range(const QExpansion<Padic>& a, const QExpansion<Padic>& b,
                    long from, long to) {
  int worst = Padic::kExact;
  for (long n = from; n <= to; ++n) worst = std::min(worst, agreement(a[n], b[n]));
  return worst;
}

QExpansion<Padic> f_dagger(const CharacterEmbedding& phi, EisensteinKind kind,
                           long n_max, const LInvariantPair& l, const Padic& l0) {
  require_lp_setting(phi.character(), phi.prime());
  LInvariantPair g = nonvanishing_guard(l.l_phi, l.l_phi_inv);
  return dagger_from_sums(divisor_sums(phi, n_max), kind, phi.prime(), g, l0);
}

EigenspaceBasis eigenspace_basis(const CharacterEmbedding& phi, long n_max,
                                 const LInvariantPair& l) {
  require_lp_setting(phi.character(), phi.prime());
  require_irregular(phi.character(), phi.prime());
  EigenspaceBasis b;
  b.l = nonvanishing_guard(l.l_phi, l.l_phi_inv);
  b.l0 = classical_L_nonpositive(phi, 1);
  DivisorSums s = divisor_sums(phi, n_max);
  Coeffs fc = s.s0;
  fc[0] = Padic::zero(phi.prime(), phi.cap());
  b.f = QExpansion<Padic>(std::move(fc), "f");
  b.dagger_phi_one = dagger_from_sums(s, EisensteinKind::kPhiOne, phi.prime(), b.l, b.l0);
  b.dagger_one_phi = dagger_from_sums(s, EisensteinKind::kOnePhi, phi.prime(), b.l, b.l0);
  return b;
}

QExpansion<Padic> f_dagger_from_families(const CharacterEmbedding& phi,
                                         EisensteinKind kind, long n_max,
                                         const LInvariantPair& l) {
  const long p = phi.prime();
  LInvariantPair g = nonvanishing_guard(l.l_phi, l.l_phi_inv);
  FamilyExpansion e = lambda_eisenstein(phi, kind, n_max, 2);
  FamilyExpansion cusp = cuspidal_family(phi, n_max, g);
  const Padic log_gamma = iwasawa_log(1 + p, p, phi.cap() + 2);
  const Padic& denom = kind == EisensteinKind::kOnePhi ? g.l_phi : g.l_phi_inv;
  const Padic scale = g.sum * log_gamma / denom;
  Coeffs a;
  for (long n = 0; n <= n_max; ++n) a.push_back(scale * (e[n][1] - cusp[n][1]));
  return QExpansion<Padic>(std::move(a), kind == EisensteinKind::kOnePhi
                                             ? "f_dagger(1,phi) via families"
                                             : "f_dagger(phi,1) via families");
}

std::vector<HeckeScalar> hecke_scalars(const QExpansion<Padic>& dagger,
                                       const EigenspaceBasis& b,
                                       const CharacterEmbedding& phi, long lmax) {
  const long p = phi.prime();
  const long level = phi.character().modulus() * p;
  std::vector<HeckeScalar> out;
  for (long ell = 2; ell <= lmax; ++ell) {
    if (!is_prime(ell) || level % ell == 0) continue;
    QExpansion<Padic> t = hecke_T(dagger, ell, phi(ell));
    const Padic a_ell = b.f[ell];
    HeckeScalar h;
    h.ell = ell;
    h.scalar = t[1] - a_ell * dagger[1];
    h.proportional_digits = Padic::kExact;
    for (long n = 0; n <= t.n_max(); ++n) {
      Padic lhs = t[n] - a_ell * dagger[n];
      h.proportional_digits = std::min(h.proportional_digits,
                                       agreement(lhs, h.scalar * b.f[n]));
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<IdentityCheck> eigenspace_checks(const EigenspaceBasis& b,
                                             const CharacterEmbedding& phi,
                                             long up_range, long lmax) {
  const long p = phi.prime();
  const long n_max = b.f.n_max();
  if (up_range * p * p > n_max) {
    throw PreconditionError("U_p checks up to " + std::to_string(up_range) +
                            " need n_max >= " + std::to_string(up_range * p * p));
  }
  std::vector<IdentityCheck> checks;
  struct Dagger {
    const QExpansion<Padic>* g;
    const Padic* eigen;
    std::string name;
    std::string eigen_name;
  };
  const Dagger daggers[] = {
      {&b.dagger_phi_one, &b.l.l_phi, "f_dagger(phi,1)", "L(phi)"},
      {&b.dagger_one_phi, &b.l.l_phi_inv, "f_dagger(1,phi)", "L(phi^-1)"}};
  for (const auto& d : daggers) {
    const Coeffs& g = d.g->coefficients();
    Coeffs once = up_minus_one(g, p, up_range * p);
    IdentityCheck a{"(U_p - 1) " + d.name + " = " + d.eigen_name + " f", Padic::kExact,
                    "n <= " + std::to_string(up_range)};
    for (long n = 0; n <= up_range; ++n) {
      a.digits = std::min(a.digits, agreement(once[static_cast<size_t>(n)],
                                              *d.eigen * b.f[n]));
    }
    checks.push_back(a);

    Coeffs twice = up_minus_one(once, p, up_range);
    IdentityCheck sq{"(U_p - 1)^2 " + d.name + " = 0", Padic::kExact,
                     "n <= " + std::to_string(up_range)};
    for (const auto& x : twice) sq.digits = std::min(sq.digits, zero_digits(x));
    checks.push_back(sq);

    IdentityCheck tl{"(T_l - a_l(f)) " + d.name + " = a_l(" + d.name + ") f",
                     Padic::kExact, "primes l <= " + std::to_string(lmax)};
    for (const auto& h : hecke_scalars(*d.g, b, phi, lmax)) {
      tl.digits = std::min({tl.digits, h.proportional_digits,
                            agreement(h.scalar, (*d.g)[h.ell])});
    }
    checks.push_back(tl);

    // derivation identity on coprime pairs, and prime powers
    const long range = std::min<long>(n_max, 1000);
    IdentityCheck der{"a_mn(" + d.name + ") = a_m(f)a_n + a_n(f)a_m, (m,n)=1",
                      Padic::kExact, "mn <= " + std::to_string(range)};
    for (long m = 2; m * m <= range; ++m) {
      for (long n = m + 1; m * n <= range; ++n) {
        if (std::gcd(m, n) != 1) continue;
        Padic rhs = b.f[m] * g[static_cast<size_t>(n)] + b.f[n] * g[static_cast<size_t>(m)];
        der.digits = std::min(der.digits, agreement(g[static_cast<size_t>(m * n)], rhs));
      }
    }
    checks.push_back(der);

    const long level = phi.character().modulus() * p;
    IdentityCheck pp{"prime-power recursion for " + d.name, Padic::kExact,
                     "l^r <= " + std::to_string(range)};
    for (long ell = 2; ell <= range; ++ell) {
      if (!is_prime(ell)) continue;
      long prev2 = 1, prev = ell;
      for (long r = 2; prev * ell <= range; ++r) {
        long cur = prev * ell;
        Padic rhs;
        if (level % ell == 0) {
          rhs = Padic::from_integer(r, p, phi.cap()) * g[static_cast<size_t>(ell)];
        } else {
          rhs = b.f[ell] * g[static_cast<size_t>(prev)] +
                b.f[prev] * g[static_cast<size_t>(ell)] -
                phi(ell) * g[static_cast<size_t>(prev2)];
        }
        pp.digits = std::min(pp.digits, agreement(g[static_cast<size_t>(cur)], rhs));
        prev2 = prev;
        prev = cur;
      }
    }
    checks.push_back(pp);
  }
  return checks;
}

IdentityCheck classical_decomposition(const EigenspaceBasis& b,
                                      const CharacterEmbedding& phi) {
  const long n_max = b.f.n_max();
  QExpansion<Padic> e = eisenstein_qexp(phi, 1, EisensteinKind::kOnePhi, n_max);
  const Padic inv = b.l.sum.one_like() / b.l.sum;
  IdentityCheck c{"E_1(1,phi) = f + (f_dagger(1,phi) + f_dagger(phi,1))/(L + L')",
                  Padic::kExact, "0 <= n <= " + std::to_string(n_max)};
  for (long n = 0; n <= n_max; ++n) {
    Padic rhs = b.f[n] + (b.dagger_one_phi[n] + b.dagger_phi_one[n]) * inv;
    c.digits = std::min(c.digits, agreement(e[n], rhs));
  }
  return c;
}

GrossReport gross_check(const DirichletCharacter& phi, long p, int prec,
                        const std::optional<PUnitData>& unit,
                        long embedding_index) {
  require_lp_setting(phi, p);
  require_irregular(phi, p);
  GrossReport r;
  r.lhs = lp_jet(phi, p, 2, prec, 0, embedding_index).series[1];
  Padic l = l_invariant(phi, p, prec, unit).value;
  Padic l0 = classical_L_nonpositive(CharacterEmbedding(phi, p, prec + 3, embedding_index), 1);
  r.rhs = -(l * l0);
  r.digits = agreement(r.lhs, r.rhs);
  return r;
}

CuspidalKernel cuspidal_kernel(const EigenspaceBasis& b, long p, long rows) {
  const QExpansion<Padic>* basis[] = {&b.f, &b.dagger_phi_one, &b.dagger_one_phi};
  const long range = b.f.n_max() / p;
  if (rows > range) throw PreconditionError("not enough coefficients for the kernel");
  PadicMatrix m;
  PadicVector constant;
  for (const auto* g : basis) constant.push_back((*g)[0]);
  m.push_back(constant);
  for (long n = 1; n <= rows; ++n) {
    PadicVector row;
    for (const auto* g : basis) row.push_back((*g)[n * p] - (*g)[n]);
    m.push_back(row);
  }
  PadicMatrix ker = nullspace(m, 3);
  CuspidalKernel k;
  k.dimension = static_cast<int>(ker.size());
  k.multiple_of_f_digits = Padic::kExact;
  for (const auto& x : ker) {
    std::vector<Padic> v;
    for (long n = 0; n <= b.f.n_max(); ++n) {
      v.push_back(x[0] * b.f[n] + x[1] * b.dagger_phi_one[n] + x[2] * b.dagger_one_phi[n]);
    }
    for (long n = 0; n <= range; ++n) {
      const size_t i = static_cast<size_t>(n);
      k.multiple_of_f_digits = std::min(
          {k.multiple_of_f_digits, zero_digits(v[i * static_cast<size_t>(p)] - v[i]),
           agreement(v[i], v[1] * b.f[n])});
    }
  }
  return k;
}

}  // namespace padicw1
