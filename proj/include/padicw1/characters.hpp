#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padicw1/padic.hpp"

namespace padicw1 {

/// A Dirichlet character mod N with values in the m-th roots of unity,
/// stored as an exponent table: chi(a) = zeta_m^e(a).
class DirichletCharacter {
 public:
  /// The Kronecker symbol (d/.) of a fundamental discriminant d.
  static DirichletCharacter kronecker(long d);

  /// chi(g_i) = zeta_m^(e_i) on generators g_i of (Z/N)^x. Throws if the
  /// assignment is inconsistent or the g_i do not generate.
  static DirichletCharacter tabulated(
      long modulus, const std::vector<std::pair<long, long>>& generators,
      long order);

  /// "kronecker:-4" or "mod:N:g1=e1,g2=e2,order=m".
  static DirichletCharacter parse(const std::string& spec);

  long modulus() const { return modulus_; }
  /// Exact order (the declared order reduced by the gcd of all exponents).
  long order() const { return order_; }
  long conductor() const { return conductor_; }
  bool is_odd() const;
  bool is_trivial() const { return order_ == 1; }
  bool is_quadratic() const { return order_ == 2; }
  /// The discriminant for a character built with kronecker().
  std::optional<long> discriminant() const { return discriminant_; }
  const std::string& label() const { return label_; }

  /// e with chi(a) = zeta_m^e, or nullopt when gcd(a, N) > 1.
  std::optional<long> exponent(long a) const;

  /// chi(a) in {-1, 0, 1}; only for order <= 2.
  int sign(long a) const;

  DirichletCharacter inverse() const;

  /// The primitive character of modulus conductor() inducing this one.
  DirichletCharacter primitive() const;

 private:
  DirichletCharacter() = default;
  void finish();

  long modulus_ = 1;
  long order_ = 1;
  long conductor_ = 1;
  std::vector<long> table_;  // -1 marks non-units
  std::optional<long> discriminant_;
  std::string label_;
};

/// True when d is a fundamental discriminant.
bool is_fundamental_discriminant(long d);

/// Kronecker symbol (d/n).
int kronecker_symbol(long d, long n);

/// Smallest primitive root modulo the odd prime p.
long primitive_root(long p);

/// Values of chi in Z_p: zeta_m maps to omega(g)^((p-1)/m * index) for the
/// least primitive root g mod p. The index must be a unit mod m.
class CharacterEmbedding {
 public:
  CharacterEmbedding(DirichletCharacter chi, long p, int cap, long index = 1);

  const DirichletCharacter& character() const { return chi_; }
  long prime() const { return p_; }
  int cap() const { return cap_; }
  long index() const { return index_; }

  /// chi(a) as a p-adic number; exact zero when gcd(a, N) > 1.
  Padic operator()(long a) const;

  /// Embedding of the conjugate character with the same root-of-unity choice.
  CharacterEmbedding inverse() const;

 private:
  DirichletCharacter chi_;
  long p_;
  int cap_;
  long index_;
  std::vector<Padic> powers_;
};

/// B_n with B_1 = -1/2, exact and cached.
mpq_class bernoulli(int n);

/// B_n(x).
mpq_class bernoulli_polynomial(int n, const mpq_class& x);

/// B_{k,chi} from the primitive character of chi. Exact; order <= 2 only.
mpq_class generalized_bernoulli_exact(const DirichletCharacter& chi, int k);

/// B_{k,chi} with embedded character values.
Padic generalized_bernoulli(const CharacterEmbedding& chi, int k);

/// L(chi, 1 - k) = -B_{k,chi}/k for nontrivial chi.
mpq_class classical_L_nonpositive_exact(const DirichletCharacter& chi, int k);
Padic classical_L_nonpositive(const CharacterEmbedding& chi, int k);

}  // namespace padicw1
