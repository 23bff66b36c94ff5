#pragma once

#include <string>

#include "padicw1/characters.hpp"
#include "padicw1/series.hpp"

namespace padicw1 {

/// Taylor jet of s -> L_p(phi * omega, s) around an integer center, in the
/// variable t = s - center.
struct LpJet {
  long p = 0;
  std::string character;
  long center = 0;
  TruncatedSeries<Padic> series;
};

/// Checks that phi is odd, p is an odd prime not dividing the modulus, and
/// that the values of phi embed in Z_p.
void require_lp_setting(const DirichletCharacter& phi, long p);

/// Throws PreconditionError unless phi(p) = 1.
void require_irregular(const DirichletCharacter& phi, long p);

/// Jet of order `order` computed from the convergent series for L_p with
/// F = N p. Coefficients are correct to roughly `prec` absolute digits; the
/// exact precision of each one is tracked.
LpJet lp_jet(const DirichletCharacter& phi, long p, int order, int prec,
             long center = 0, long embedding_index = 1);

/// L_p(phi * omega, s) at an integer s != 1.
Padic lp_value(const DirichletCharacter& phi, long p, long s, int prec,
               long embedding_index = 1);

/// zeta_phi(X) mod X^Mx, with zeta_phi((1+p)^(k-1) - 1) = L_p(phi omega, 1-k).
struct ZetaSeries {
  long p = 0;
  std::string character;
  TruncatedSeries<Padic> series;
};

ZetaSeries zeta_series(const DirichletCharacter& phi, long p, int mx, int prec,
                       long embedding_index = 1);

/// zeta_phi(x) for ord_p(x) >= 1. The coefficients are p-integral, so the
/// truncation error is O(p^(Mx * ord_p(x))) and is added to the result.
Padic evaluate_zeta(const ZetaSeries& zeta, const Padic& x);

struct FerreroGreenbergReport {
  int ord_x = 0;
  Padic zeta0;
  Padic leading;
  int threshold = 0;
};

/// Certifies zeta_phi(0) = 0 to `threshold` digits and zeta'_phi(0) != 0 with
/// valuation below the threshold, giving ord_x = 1. ord_x = 0 means zeta_phi(0)
/// was seen to be nonzero. Throws PrecisionError when the derivative cannot be
/// separated from zero.
FerreroGreenbergReport ferrero_greenberg_check(const ZetaSeries& zeta,
                                               int threshold);

}  // namespace padicw1
