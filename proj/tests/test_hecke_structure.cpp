#include <doctest.h>

#include "padicw1/hecke_structure.hpp"

using namespace padicw1;

namespace {

constexpr int kThreshold = 20;

LInvariantPair pair_for(long d, long p) {
  return l_invariants(DirichletCharacter::kronecker(d), p, 35);
}

ProductElement unit_vector(int r, int mx, int component, int k, long p) {
  ProductElement x = product_zero(r, mx, p, 35);
  x.at(component, k) = Padic::one(p, 35);
  return x;
}

}  // namespace

TEST_CASE("T: dimension and membership") {
  SubalgebraModel t = build_T(5, 35, 3);
  CHECK(t.dimension() == 7);
  CHECK(t.membership_digits(unit_vector(3, 3, 0, 1, 5)) >= 35);
  CHECK(t.membership_digits(unit_vector(3, 3, 1, 1, 5)) >= 35);
  CHECK(t.membership_digits(unit_vector(3, 3, 0, 0, 5)) == 0);
  CHECK(t.closure_digits() >= kThreshold);
}

TEST_CASE("T', Y and its cubic") {
  LInvariantPair l = pair_for(-4, 5);
  for (int mx = 3; mx <= 8; ++mx) {
    SubalgebraModel tp = build_Tprime(l, mx);
    CHECK(tp.dimension() == 3 * mx - 3);
    CHECK(tp.membership_digits(y_element(l, mx)) >= 30);
    CHECK(tp.closure_digits() >= kThreshold);
    CHECK(y_cubic_digits(l, mx) >= 30);
    const int gen = generated_dimension(
        tp, {diagonal_monomial(3, mx, Padic::one(5, 35), 1), y_element(l, mx)});
    CHECK(gen == tp.dimension());
  }
  // (X, 0, 0) violates the linear relation
  SubalgebraModel tp = build_Tprime(l, 3);
  CHECK(tp.membership_digits(unit_vector(3, 3, 0, 1, 5)) < 5);
}

TEST_CASE("Tord") {
  SubalgebraModel t = build_Tord(7, 35, 2);
  CHECK(t.dimension() == 3);
  CHECK(build_Tord(7, 35, 5).dimension() == 9);
}

TEST_CASE("fibers and socles are stable in Mx") {
  for (auto [d, p] : {std::pair{-4L, 5L}, {-3L, 13L}}) {
    LInvariantPair l = pair_for(d, p);
    for (int mx = 3; mx <= 8; ++mx) {
      FiberReport a = fiber_and_socle(build_T(p, 35, mx));
      FiberReport b = fiber_and_socle(build_Tprime(l, mx));
      FiberReport c = fiber_and_socle(build_Tord(p, 35, mx));
      CHECK(a.fiber_dim == 3);
      CHECK(a.socle_dim == 2);
      CHECK_FALSE(a.gorenstein);
      CHECK(b.fiber_dim == 3);
      CHECK(b.socle_dim == 1);
      CHECK(b.gorenstein);
      CHECK(c.fiber_dim == 2);
      CHECK(c.socle_dim == 1);
      CHECK(c.gorenstein);
      CHECK(a.x_regular);
      CHECK(static_cast<int>(a.socle.size()) == a.socle_dim);
    }
  }
}

TEST_CASE("an unglued product is not local") {
  // (Lambda/X^3)^2: the fiber is k x k and nothing in it is nilpotent
  std::vector<ProductElement> basis;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 3; ++k) basis.push_back(unit_vector(2, 3, i, k, 5));
  }
  FiberReport r = fiber_and_socle(SubalgebraModel("full", 2, 3, basis));
  CHECK(r.fiber_dim == 2);
  CHECK(r.socle_dim == 2);
}

TEST_CASE("U_p in the fiber of T") {
  UpReport up = up_structure(pair_for(-3, 7), 7);
  CHECK(up.square_digits >= kThreshold);
  CHECK(up.span_dim == up.t_dim);
  CHECK(up.t_dim == 4);
}

TEST_CASE("congruence module") {
  for (auto [d, p] : {std::pair{-4L, 5L}, {-3L, 7L}, {-3L, 13L}}) {
    DirichletCharacter chi = DirichletCharacter::kronecker(d);
    LInvariantPair l = pair_for(d, p);
    ZetaSeries z = zeta_series(chi, p, 6, 30);
    CongruenceReport c = congruence_module(z, l.l_phi,
                                           classical_L_nonpositive(CharacterEmbedding(chi, p, 35), 1), 25);
    CHECK(c.j_eis_is_x);
    CHECK(c.length == 1);
    CHECK(c.zeta_ord == 1);
    CHECK(c.u0_digits >= kThreshold);
    CHECK(c.annihilator_is_kernel);
    CHECK(c.annihilator_maps_onto_x);
  }
}
