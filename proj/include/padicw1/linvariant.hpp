#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padicw1/characters.hpp"

namespace padicw1 {

/// Two roots of the unit polynomial share the requested valuation, so the
/// place v0 is not determined by the data.
class EmbeddingAmbiguityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Number of reduced primitive forms of discriminant d < 0.
long class_number(long d);

/// pi = (x + y sqrt(d))/2 with x^2 + |d| y^2 = 4 p^h generating a prime above
/// p to the power h = class_number(d).
struct QuadraticOrderData {
  long d = 0;
  long p = 0;
  long h = 0;
  mpz_class x;
  mpz_class y;
};

/// Smallest y >= 1, then smallest x >= 0, with p not dividing x.
QuadraticOrderData split_prime_power_generator(long d, long p);

/// A p-unit given by its minimal polynomial c_0 + c_1 T + ... and the
/// valuation e of the root that is used.
struct PUnitData {
  std::vector<mpq_class> coefficients;
  int valuation = 0;
  std::string label;
};

/// Minimal polynomial of u = pi / conj(pi):
/// p^h T^2 - (x^2 - 2 p^h) T + p^h, root of valuation h.
PUnitData quadratic_unit_data(const QuadraticOrderData& q);

/// Root valuations of a polynomial with their multiplicities, read off the
/// Newton polygon; slopes are exact rationals.
std::vector<std::pair<mpq_class, int>> newton_polygon(
    const std::vector<mpq_class>& coefficients, long p);

struct LInvariantResult {
  Padic value;
  /// The root r of valuation e.
  Padic root;
  PUnitData unit;
};

/// log_p(r)/e for the unique root r of valuation e.
///
/// With L_p normalised by its interpolation property, this is the sign for
/// which L_p'(phi omega, 0) = -L(phi) L(phi, 0). The opposite sign,
/// -log_p(r)/e, satisfies the same identity with +.
LInvariantResult l_invariant_from_unit(const PUnitData& unit, long p, int prec);

/// L(phi). Automatic for Kronecker characters; other characters need `unit`.
LInvariantResult l_invariant(const DirichletCharacter& phi, long p, int prec,
                             const std::optional<PUnitData>& unit = std::nullopt);

/// L(phi), L(phi^-1) and their sum, each certified nonzero.
struct LInvariantPair {
  Padic l_phi;
  Padic l_phi_inv;
  Padic sum;
};

/// Throws PrecisionError if any of the three values is indistinguishable
/// from zero.
LInvariantPair nonvanishing_guard(const Padic& l_phi, const Padic& l_phi_inv);

/// Both L-invariants for phi; for quadratic phi they coincide.
LInvariantPair l_invariants(const DirichletCharacter& phi, long p, int prec,
                            const std::optional<PUnitData>& unit = std::nullopt,
                            const std::optional<PUnitData>& unit_inv = std::nullopt);

}  // namespace padicw1
