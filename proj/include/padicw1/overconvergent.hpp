#pragma once

#include <string>
#include <vector>

#include "padicw1/families.hpp"

namespace padicw1 {

/// One numerical identity: the number of p-adic digits on which both sides
/// agree (the minimum over all coefficients tested).
struct IdentityCheck {
  std::string name;
  int digits = Padic::kExact;
  std::string detail;
};

/// Least agreement of a and b over a_from..a_to.
int agreement_range(const QExpansion<Padic>& a, const QExpansion<Padic>& b,
                    long from, long to);

/// f, f_dagger(phi, 1), f_dagger(1, phi) and the constants they depend on.
struct EigenspaceBasis {
  QExpansion<Padic> f;
  QExpansion<Padic> dagger_phi_one;
  QExpansion<Padic> dagger_one_phi;
  LInvariantPair l;
  /// L(phi, 0).
  Padic l0;
};

/// Closed-form q-expansion of f_dagger of the given kind.
QExpansion<Padic> f_dagger(const CharacterEmbedding& phi, EisensteinKind kind,
                           long n_max, const LInvariantPair& l, const Padic& l0);

EigenspaceBasis eigenspace_basis(const CharacterEmbedding& phi, long n_max,
                                 const LInvariantPair& l);

/// f_dagger rebuilt from d/dX of (Eisenstein family - cuspidal family) at 0.
QExpansion<Padic> f_dagger_from_families(const CharacterEmbedding& phi,
                                         EisensteinKind kind, long n_max,
                                         const LInvariantPair& l);

/// U_p and T_l identities for both f_dagger. U_p identities are tested on
/// n <= up_range (the basis must reach up_range * p^2); T_l for primes
/// l <= lmax not dividing Np.
std::vector<IdentityCheck> eigenspace_checks(const EigenspaceBasis& b,
                                             const CharacterEmbedding& phi,
                                             long up_range, long lmax);

/// Scalars c with (T_l - a_l(f)) f_dagger = c f, for each prime l <= lmax
/// not dividing Np, together with the digits to which the quotient is a
/// multiple of f.
struct HeckeScalar {
  long ell = 0;
  Padic scalar;
  int proportional_digits = 0;
};
std::vector<HeckeScalar> hecke_scalars(const QExpansion<Padic>& dagger,
                                       const EigenspaceBasis& b,
                                       const CharacterEmbedding& phi, long lmax);

/// E_1(1, phi) = f + (f_dagger(1, phi) + f_dagger(phi, 1)) / (L + L') on
/// 0 <= n <= n_max.
IdentityCheck classical_decomposition(const EigenspaceBasis& b,
                                      const CharacterEmbedding& phi);

struct GrossReport {
  Padic lhs;
  Padic rhs;
  int digits = 0;
};

/// L_p'(phi omega, 0) against -L(phi) L(phi, 0), from independent pipelines.
GrossReport gross_check(const DirichletCharacter& phi, long p, int prec,
                        const std::optional<PUnitData>& unit = std::nullopt,
                        long embedding_index = 1);

/// Combinations of f, f_dagger(phi,1), f_dagger(1,phi) killed by U_p - 1 with
/// a_0 = 0, found from the first `rows` coefficients.
struct CuspidalKernel {
  int dimension = 0;
  /// Digits to which the kernel vector is a multiple of f on the full range.
  int multiple_of_f_digits = 0;
};
CuspidalKernel cuspidal_kernel(const EigenspaceBasis& b, long p, long rows);

}  // namespace padicw1
