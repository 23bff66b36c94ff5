#pragma once

#include <string>
#include <vector>

#include "padicw1/lfunction.hpp"
#include "padicw1/linalg.hpp"
#include "padicw1/linvariant.hpp"

namespace padicw1 {

/// An element (a_1, ..., a_r) of (Lambda / X^Mx)^r, stored as r*Mx
/// coordinates: component i occupies [i*Mx, (i+1)*Mx).
struct ProductElement {
  int r = 0;
  int mx = 0;
  PadicVector coords;

  const Padic& at(int component, int k) const {
    return coords[static_cast<size_t>(component * mx + k)];
  }
  Padic& at(int component, int k) { return coords[static_cast<size_t>(component * mx + k)]; }
};

ProductElement product_zero(int r, int mx, long p, int cap);
/// The diagonal element (c X^k, ..., c X^k).
ProductElement diagonal_monomial(int r, int mx, const Padic& c, int k);
ProductElement operator+(const ProductElement& a, const ProductElement& b);
ProductElement operator-(const ProductElement& a, const ProductElement& b);
ProductElement operator*(const Padic& c, const ProductElement& a);
/// Componentwise product, truncated at X^Mx.
ProductElement operator*(const ProductElement& a, const ProductElement& b);

/// A subalgebra of (Lambda / X^Mx)^r given by a basis.
class SubalgebraModel {
 public:
  SubalgebraModel(std::string name, int r, int mx, std::vector<ProductElement> basis);

  const std::string& name() const { return name_; }
  int r() const { return r_; }
  int mx() const { return mx_; }
  int dimension() const { return static_cast<int>(echelon_.pivots.size()); }
  const std::vector<ProductElement>& basis() const { return basis_; }
  const RowEchelon& echelon() const { return echelon_; }

  /// Valuation of the residual of x against the span (kExact if x lies in it
  /// exactly).
  int membership_digits(const ProductElement& x) const;

  /// Least membership digits over all products of two basis elements.
  int closure_digits() const;

 private:
  std::string name_;
  int r_;
  int mx_;
  std::vector<ProductElement> basis_;
  RowEchelon echelon_;
};

/// {(a, b, c) : a(0) = b(0) = c(0)}, dimension 3Mx - 2.
SubalgebraModel build_T(long p, int cap, int mx);

/// The part of T cut out by (L + L')a'(0) = L' b'(0) + L c'(0), with
/// L = L(phi), L' = L(phi^-1); dimension 3Mx - 3.
SubalgebraModel build_Tprime(const LInvariantPair& l, int mx);

/// {(a, b) : a(0) = b(0)}, dimension 2Mx - 1. The first factor is the
/// cuspidal one, the second the Eisenstein one.
SubalgebraModel build_Tord(long p, int cap, int mx);

/// Y = (0, -L X, L' X).
ProductElement y_element(const LInvariantPair& l, int mx);

/// Dimension of the subalgebra generated by `gens` (and 1).
int generated_dimension(const SubalgebraModel& a, const std::vector<ProductElement>& gens);

struct FiberReport {
  int mx = 0;
  int dimension = 0;
  /// X kills only elements supported in degree Mx - 1, i.e. nothing beyond
  /// what the truncation forces.
  bool x_regular = false;
  int fiber_dim = 0;
  int socle_dim = 0;
  /// Lifts to the model of a basis of the socle.
  std::vector<ProductElement> socle;
  bool gorenstein = false;
};

/// The Artinian fiber A/XA, its maximal ideal and socle.
FiberReport fiber_and_socle(const SubalgebraModel& a);

/// Least valuation over the coordinates of Y (Y + L X)(Y - L' X).
int y_cubic_digits(const LInvariantPair& l, int mx);

struct UpReport {
  /// U_p = (a_p(F), 1, 1) at Mx = 2.
  ProductElement up;
  /// Digits to which (U_p - 1)^2 vanishes in the fiber of T.
  int square_digits = 0;
  /// dim of T' + (U_p - 1) T' inside T (expected: dim T).
  int span_dim = 0;
  int t_dim = 0;
};

UpReport up_structure(const LInvariantPair& l, long p);

struct CongruenceReport {
  int mx = 0;
  /// dim of J_eis = pi_cusp(ker pi_eis) inside Lambda / X^Mx.
  int j_eis_dim = 0;
  /// True when J_eis is (X) / (X^Mx).
  bool j_eis_is_x = false;
  /// length of Lambda / J_eis.
  int length = 0;
  /// ord_X of zeta.
  int zeta_ord = 0;
  /// zeta = u X: u(0) = zeta'(0).
  Padic u0;
  /// L(phi) L(phi, 0) / log_p(1 + p).
  Padic u0_expected;
  int u0_digits = 0;
  /// Ann(ker pi_eis) = ker pi_cusp, using untruncated products of the
  /// polynomial representatives.
  bool annihilator_is_kernel = false;
  /// pi_eis(Ann(ker pi_eis)) = (X).
  bool annihilator_maps_onto_x = false;
};

CongruenceReport congruence_module(const ZetaSeries& zeta, const Padic& l_phi,
                                   const Padic& l0, int threshold);

}  // namespace padicw1
