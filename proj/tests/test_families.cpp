#include <doctest.h>

#include "oracles.hpp"
#include "padicw1/families.hpp"
#include "padicw1/lfunction.hpp"

using namespace padicw1;

namespace {

constexpr int kThreshold = 20;

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// a_n of (1 + X)^(log n / log(1 + p)) at X = (1+p)^(k-1) - 1 is n^(k-1) for
// n = 1 mod p; for general n it is <n>^(k-1), <n> = n / omega(n).
Padic diamond_power(long n, long p, int k, int prec) {
  Padic x = Padic::from_integer(n, p, prec);
  return (x / teichmuller(x)).pow(k - 1);
}

}  // namespace

TEST_CASE("classical Eisenstein series are divisor sums") {
  DirichletCharacter chi = DirichletCharacter::kronecker(-4);
  auto table = oracle::kronecker_table(-4);
  auto chi_of = [&](long a) { return table[static_cast<size_t>((a - 1) % 4)]; };
  for (int k : {1, 3}) {
    auto e = eisenstein_qexp_exact(chi, k, EisensteinKind::kOnePhi, 200);
    auto g = eisenstein_qexp_exact(chi, k, EisensteinKind::kPhiOne, 200);
    for (long n = 1; n <= 200; ++n) {
      mpq_class a = 0, b = 0;
      for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        a += chi_of(d) * mpq_class(oracle::power(d, k - 1));
        b += chi_of(n / d) * mpq_class(oracle::power(d, k - 1));
      }
      CHECK(e[n] == a);
      CHECK(g[n] == b);
    }
    CHECK(g[0] == 0);
  }
  auto e1 = eisenstein_qexp_exact(chi, 1, EisensteinKind::kOnePhi, 10);
  CHECK(e1[0] == mpq_class(1, 4));
  CHECK(e1[1] == 1);
  CHECK(e1[6] == 0);
  CHECK(e1.n_max() == 10);
  CHECK_THROWS_AS(e1[11], std::out_of_range);
  CHECK_THROWS_AS(eisenstein_qexp_exact(DirichletCharacter::kronecker(5), 1,
                                        EisensteinKind::kOnePhi, 10),
                  PreconditionError);
  CHECK(parse_eisenstein_kind("phi,1") == EisensteinKind::kPhiOne);
  CHECK_THROWS_AS(parse_eisenstein_kind("1,1"), PreconditionError);
}

TEST_CASE("p-stabilisation and Hecke operators") {
  const long p = 5;
  CharacterEmbedding emb(DirichletCharacter::kronecker(-4), p, 30);
  QExpansion<Padic> f = stabilized_eisenstein(emb, 500);
  CHECK(f[0].is_zero());
  for (long n = 1; n <= 500; ++n) {
    Padic expect = oracle::divisor_sum(n, p, [&](long d, long) { return emb(d); });
    CHECK(agreement(f[n], expect) >= 30);
  }
  QExpansion<Padic> up = hecke_U(f, p);
  for (long n = 0; n <= up.n_max(); ++n) CHECK(agreement(up[n], f[n]) >= 30);
  for (long ell : {2L, 3L, 7L, 11L}) {
    if (ell == 2) continue;  // 2 divides the level: U_2
    QExpansion<Padic> t = hecke_T(f, ell, emb(ell));
    for (long n = 1; n <= t.n_max(); ++n) CHECK(agreement(t[n], f[ell] * f[n]) >= 30);
  }
  QExpansion<Padic> u2 = hecke_U(f, 2);
  for (long n = 1; n <= u2.n_max(); ++n) CHECK(agreement(u2[n], f[2] * f[n]) >= 30);
}

TEST_CASE("Hecke operators commute on arbitrary q-expansions") {
  const long p = 7;
  std::vector<Padic> c;
  for (long n = 0; n <= 600; ++n) c.push_back(Padic::from_integer(n * n * n % 97 - 40, p, 30));
  QExpansion<Padic> g(c, "g");
  CharacterEmbedding emb(DirichletCharacter::kronecker(-3), p, 30);
  auto ab = hecke_T(hecke_T(g, 2, emb(2)), 5, emb(5));
  auto ba = hecke_T(hecke_T(g, 5, emb(5)), 2, emb(2));
  REQUIRE(ab.n_max() == ba.n_max());
  int worst = Padic::kExact;
  for (long n = 0; n <= ab.n_max(); ++n) worst = std::min(worst, agreement(ab[n], ba[n]));
  CHECK(worst >= kThreshold);
  auto tu = hecke_U(hecke_T(g, 2, emb(2)), p);
  auto ut = hecke_T(hecke_U(g, p), 2, emb(2));
  for (long n = 1; n <= std::min(tu.n_max(), ut.n_max()); ++n) {
    CHECK(agreement(tu[n], ut[n]) >= kThreshold);
  }
}

TEST_CASE("cyclotomic character") {
  const long p = 7;
  for (long a : {2L, 3L, 10L}) {
    for (long b : {5L, 6L, 15L}) {
      auto lhs = cyclotomic_character(a * b, p, 6, 30);
      auto rhs = cyclotomic_character(a, p, 6, 30) * cyclotomic_character(b, p, 6, 30);
      for (int k = 0; k < 6; ++k) CHECK(agreement(lhs[k], rhs[k]) >= kThreshold);
    }
  }
  auto c = cyclotomic_character(8, p, 4, 30);
  CHECK(agreement(c[0], Padic::one(p, 30)) >= 30);
  // (1 + p) goes to 1 + X
  auto g = cyclotomic_character(1 + p, p, 4, 30);
  CHECK(agreement(g[1], Padic::one(p, 30)) >= 28);
  CHECK(g[2].valuation_bound() >= 28);
  CHECK_THROWS_AS(cyclotomic_character(14, p, 4, 30), PreconditionError);
}

TEST_CASE("Eisenstein families: coefficients, eigen-property, specialisation") {
  for (auto [d, p] : {std::pair{-4L, 5L}, {-3L, 7L}}) {
    CharacterEmbedding emb(DirichletCharacter::kronecker(d), p, 35);
    const int mx = 6;
    FamilyExpansion e1 = lambda_eisenstein(emb, EisensteinKind::kOnePhi, 300, mx);
    FamilyExpansion e2 = lambda_eisenstein(emb, EisensteinKind::kPhiOne, 300, mx);
    for (long n = 1; n <= 300; ++n) {
      auto a = oracle::divisor_sum(n, p, [&](long dd, long) {
        return cyclotomic_character(dd, p, mx, 35) * emb(dd);
      });
      auto b = oracle::divisor_sum(n, p, [&](long dd, long e) {
        return cyclotomic_character(dd, p, mx, 35) * emb(e);
      });
      for (int k = 0; k < mx; ++k) {
        CHECK(agreement(e1[n][k], a[k]) >= kThreshold);
        CHECK(agreement(e2[n][k], b[k]) >= kThreshold);
      }
    }
    CHECK(is_zero(e2[0]));
    for (int k = 1; k < mx; ++k) CHECK(e1[p][k].is_zero());
    // first order term of a_l
    for (long ell : {3L, 11L, 13L}) {
      if (ell == p) continue;
      Padic expect = emb(ell) * iwasawa_log(ell, p, 35) / iwasawa_log(1 + p, p, 35);
      CHECK(agreement(e1[ell][1], expect) >= kThreshold);
    }
    // T_l with determinant phi chi_cyc on the family
    for (long ell = 3; ell <= 50; ++ell) {
      if (!is_prime(ell) || (d * p) % ell == 0) continue;
      auto det = cyclotomic_character(ell, p, mx, 35) * emb(ell);
      auto t = hecke_T(e1, ell, det);
      for (long n = 1; n <= t.n_max(); ++n) {
        auto rhs = e1[ell] * e1[n];
        for (int k = 0; k < mx; ++k) CHECK(agreement(t[n][k], rhs[k]) >= kThreshold);
      }
    }
  }
}

TEST_CASE("the Eisenstein family specialises to E_k at X = (1+p)^(k-1) - 1") {
  const long p = 5;
  const int k = 5;
  CharacterEmbedding emb(DirichletCharacter::kronecker(-4), p, 40);
  FamilyExpansion e = lambda_eisenstein(emb, EisensteinKind::kOnePhi, 60, 24);
  Padic x = Padic::from_integer(1 + p, p, 40).pow(k - 1) - Padic::one(p, 40);
  for (long n = 1; n <= 60; ++n) {
    // E_k(1, phi omega^(1-k)) stabilised: for k = 1 mod p-1 omega^(1-k) = 1
    Padic expect = oracle::divisor_sum(n, p, [&](long d, long) {
      return emb(d) * diamond_power(d, p, k, 40);
    });
    CHECK(agreement(evaluate(e[n], x), expect) >= kThreshold);
  }
  // constant term: zeta(x)/2 = L_p(phi omega, 1-k)/2
  Padic c = evaluate(e[0], x) * Padic::from_integer(2, p, 40);
  CHECK(agreement(c, lp_value(emb.character(), p, 1 - k, 30)) >= kThreshold);
}

TEST_CASE("the cuspidal family mod X^2") {
  const long p = 5;
  CharacterEmbedding emb(DirichletCharacter::kronecker(-4), p, 35);
  LInvariantPair l = l_invariants(emb.character(), p, 35);
  FamilyExpansion f = cuspidal_family(emb, 400, l);
  QExpansion<Padic> g = stabilized_eisenstein(emb, 400);
  for (long n = 0; n <= 400; ++n) CHECK(agreement(f[n][0], g[n]) >= 30);
  const Padic log_gamma = iwasawa_log(1 + p, p, 37);
  CHECK(agreement(f[p][1], -(l.l_phi / (Padic::from_integer(2, p, 35) * log_gamma))) >= 28);
  Padic two_l = l.l_phi + l.l_phi_inv;
  CHECK(agreement(f[2][1], l.l_phi * iwasawa_log(2, p, 35) / (two_l * log_gamma)) >= 28);
  // multiplicative and eigen for T_l mod X^2
  for (long m = 2; m <= 20; ++m) {
    for (long n = m + 1; m * n <= 400; ++n) {
      if (std::gcd(m, n) != 1) continue;
      auto prod = f[m] * f[n];
      CHECK(agreement(f[m * n][1], prod[1]) >= kThreshold);
    }
  }
  for (long ell : {3L, 7L, 13L}) {
    auto det = cyclotomic_character(ell, p, 2, 35) * emb(ell);
    auto t = hecke_T(f, ell, det);
    for (long n = 1; n <= t.n_max(); ++n) {
      CHECK(agreement(t[n][1], (f[ell] * f[n])[1]) >= kThreshold);
    }
  }
}

TEST_CASE("linear relation for the test points and the sextic character") {
  for (auto [d, p] : {std::pair{-4L, 5L}, {-3L, 7L}, {-3L, 13L}}) {
    CharacterEmbedding emb(DirichletCharacter::kronecker(d), p, 35);
    LInvariantPair l = l_invariants(emb.character(), p, 35);
    RelationReport r = verify_linear_relation(emb, l, 200);
    CHECK(r.min_digits >= kThreshold);
    for (const auto& row : r.rows) CHECK(row.quadratic >= kThreshold);
  }
  // synthetic p-units: the relation holds for any values of L and L'
  DirichletCharacter phi = DirichletCharacter::parse("mod:21:8=3,10=2,order=6");
  CharacterEmbedding emb(phi, 13, 35);
  PUnitData u{{13, -3, 1}, 1, "synthetic"}, v{{13, -5, 1}, 1, "synthetic"};
  LInvariantPair l = l_invariants(phi, 13, 35, u, v);
  CHECK(agreement(l.l_phi, l.l_phi_inv) < 5);
  RelationReport r = verify_linear_relation(emb, l, 200);
  CHECK(r.min_digits >= kThreshold);
  for (const auto& row : r.rows) CHECK(row.quadratic == -1);
}
