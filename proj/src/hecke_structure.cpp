#include "padicw1/hecke_structure.hpp"

#include <stdexcept>

namespace padicw1 {

namespace {

void require_same_shape(const ProductElement& a, const ProductElement& b) {
  if (a.r != b.r || a.mx != b.mx) throw std::invalid_argument("product elements differ in shape");
}

const Padic& proto_of(const std::vector<ProductElement>& v) {
  if (v.empty() || v.front().coords.empty()) throw std::invalid_argument("empty basis");
  return v.front().coords.front();
}

PadicMatrix coordinate_rows(const std::vector<ProductElement>& v) {
  PadicMatrix m;
  for (const auto& x : v) m.push_back(x.coords);
  return m;
}

int columns_of(const ProductElement& x) { return x.r * x.mx; }

// Element with coefficients c over `basis`.
ProductElement combination(const std::vector<ProductElement>& basis, const PadicVector& c) {
  ProductElement out = product_zero(basis.front().r, basis.front().mx,
                                    proto_of(basis).prime(), proto_of(basis).cap());
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!c[i].is_exact_zero()) out = out + c[i] * basis[i];
  }
  return out;
}

// Basis of the elements sum c_i basis_i whose coordinates in `cols` vanish.
std::vector<ProductElement> subspace_vanishing_on(const std::vector<ProductElement>& basis,
                                                  const std::vector<int>& cols) {
  PadicMatrix a;
  for (int col : cols) {
    PadicVector row;
    for (const auto& b : basis) row.push_back(b.coords[static_cast<size_t>(col)]);
    a.push_back(row);
  }
  std::vector<ProductElement> out;
  for (const auto& c : nullspace(a, static_cast<int>(basis.size()))) {
    out.push_back(combination(basis, c));
  }
  return out;
}

// Coordinates of vectors relative to a list of independent generators.
class Coordinates {
 public:
  explicit Coordinates(const std::vector<ProductElement>& gens) : n_(static_cast<int>(gens.size())) {
    width_ = columns_of(gens.front());
    const Padic& proto = proto_of(gens);
    PadicMatrix rows;
    for (int k = 0; k < n_; ++k) {
      PadicVector row = gens[static_cast<size_t>(k)].coords;
      for (int j = 0; j < n_; ++j) row.push_back(j == k ? proto.one_like() : proto.zero_like());
      rows.push_back(std::move(row));
    }
    echelon_ = row_echelon(std::move(rows), width_ + n_);
    proto_ = proto.zero_like();
  }

  // Coefficients of x in the generators, and the valuation of what is left.
  PadicVector operator()(const ProductElement& x, int* residual_digits = nullptr) const {
    PadicVector v = x.coords;
    v.resize(static_cast<size_t>(width_ + n_), proto_);
    SpanFit fit = fit_in_span(echelon_, v);
    PadicVector c;
    int worst = Padic::kExact;
    for (int k = 0; k < width_; ++k) {
      worst = std::min(worst, fit.residual[static_cast<size_t>(k)].valuation_bound());
    }
    for (int j = 0; j < n_; ++j) c.push_back(-fit.residual[static_cast<size_t>(width_ + j)]);
    if (residual_digits != nullptr) *residual_digits = worst;
    return c;
  }

 private:
  int n_;
  int width_;
  RowEchelon echelon_;
  Padic proto_;
};

PadicVector poly_product(const PadicVector& a, const PadicVector& b) {
  PadicVector out(a.size() + b.size() - 1, a.front().zero_like());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_exact_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PadicVector component(const ProductElement& x, int i) {
  auto begin = x.coords.begin() + i * x.mx;
  return PadicVector(begin, begin + x.mx);
}

}  // namespace

ProductElement product_zero(int r, int mx, long p, int cap) {
  if (r < 1 || mx < 1) throw std::invalid_argument("bad product shape");
  return ProductElement{r, mx, PadicVector(static_cast<size_t>(r * mx), Padic::zero(p, cap))};
}

ProductElement diagonal_monomial(int r, int mx, const Padic& c, int k) {
  ProductElement x = product_zero(r, mx, c.prime(), c.cap());
  if (k < mx) {
    for (int i = 0; i < r; ++i) x.at(i, k) = c;
  }
  return x;
}

ProductElement operator+(const ProductElement& a, const ProductElement& b) {
  require_same_shape(a, b);
  ProductElement out = a;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

ProductElement operator-(const ProductElement& a, const ProductElement& b) {
  require_same_shape(a, b);
  ProductElement out = a;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

ProductElement operator*(const Padic& c, const ProductElement& a) {
  ProductElement out = a;
  for (auto& x : out.coords) x = c * x;
  return out;
}

ProductElement operator*(const ProductElement& a, const ProductElement& b) {
  require_same_shape(a, b);
  ProductElement out = product_zero(a.r, a.mx, a.coords.front().prime(), a.coords.front().cap());
  for (int i = 0; i < a.r; ++i) {
    for (int j = 0; j < a.mx; ++j) {
      if (a.at(i, j).is_exact_zero()) continue;
      for (int k = 0; j + k < a.mx; ++k) out.at(i, j + k) += a.at(i, j) * b.at(i, k);
    }
  }
  return out;
}

SubalgebraModel::SubalgebraModel(std::string name, int r, int mx,
                                 std::vector<ProductElement> basis)
    : name_(std::move(name)), r_(r), mx_(mx), basis_(std::move(basis)) {
  for (const auto& b : basis_) {
    if (b.r != r || b.mx != mx) throw std::invalid_argument("basis element of the wrong shape");
  }
  echelon_ = row_echelon(coordinate_rows(basis_), r * mx);
  if (dimension() != static_cast<int>(basis_.size())) {
    throw PrecisionError("basis of " + name_ + " is not independent at this precision");
  }
}

int SubalgebraModel::membership_digits(const ProductElement& x) const {
  return fit_in_span(echelon_, x.coords).residual_valuation;
}

int SubalgebraModel::closure_digits() const {
  int worst = Padic::kExact;
  for (size_t i = 0; i < basis_.size(); ++i) {
    for (size_t j = i; j < basis_.size(); ++j) {
      worst = std::min(worst, membership_digits(basis_[i] * basis_[j]));
    }
  }
  return worst;
}

namespace {

// 1 and X^k e_i for k >= kmin.
std::vector<ProductElement> fiber_product_basis(int r, int mx, long p, int cap, int kmin) {
  std::vector<ProductElement> basis;
  basis.push_back(diagonal_monomial(r, mx, Padic::one(p, cap), 0));
  for (int i = 0; i < r; ++i) {
    for (int k = kmin; k < mx; ++k) {
      ProductElement x = product_zero(r, mx, p, cap);
      x.at(i, k) = Padic::one(p, cap);
      basis.push_back(std::move(x));
    }
  }
  return basis;
}

}  // namespace

SubalgebraModel build_T(long p, int cap, int mx) {
  if (mx < 1) throw PreconditionError("Mx must be positive");
  return SubalgebraModel("T", 3, mx, fiber_product_basis(3, mx, p, cap, 1));
}

ProductElement y_element(const LInvariantPair& l, int mx) {
  if (mx < 2) throw PreconditionError("Y needs Mx >= 2");
  ProductElement y = product_zero(3, mx, l.l_phi.prime(), l.l_phi.cap());
  y.at(1, 1) = -l.l_phi;
  y.at(2, 1) = l.l_phi_inv;
  return y;
}

SubalgebraModel build_Tprime(const LInvariantPair& l, int mx) {
  if (mx < 2) throw PreconditionError("T' needs Mx >= 2");
  const LInvariantPair g = nonvanishing_guard(l.l_phi, l.l_phi_inv);
  const long p = g.l_phi.prime();
  const int cap = g.l_phi.cap();
  std::vector<ProductElement> basis = fiber_product_basis(3, mx, p, cap, 2);
  basis.push_back(diagonal_monomial(3, mx, Padic::one(p, cap), 1));
  basis.push_back(y_element(g, mx));
  return SubalgebraModel("T'", 3, mx, std::move(basis));
}

SubalgebraModel build_Tord(long p, int cap, int mx) {
  if (mx < 1) throw PreconditionError("Mx must be positive");
  return SubalgebraModel("Tord", 2, mx, fiber_product_basis(2, mx, p, cap, 1));
}

int generated_dimension(const SubalgebraModel& a, const std::vector<ProductElement>& gens) {
  const Padic& proto = proto_of(a.basis());
  std::vector<ProductElement> span{diagonal_monomial(a.r(), a.mx(), proto.one_like(), 0)};
  int dim = 1;
  const int columns = a.r() * a.mx();
  while (true) {
    std::vector<ProductElement> next = span;
    for (const auto& s : span) {
      for (const auto& g : gens) next.push_back(s * g);
    }
    RowEchelon e = row_echelon(coordinate_rows(next), columns);
    const int d = static_cast<int>(e.pivots.size());
    span.clear();
    for (auto& row : e.rows) span.push_back(ProductElement{a.r(), a.mx(), std::move(row)});
    if (d == dim) return d;
    dim = d;
  }
}

FiberReport fiber_and_socle(const SubalgebraModel& a) {
  FiberReport rep;
  rep.mx = a.mx();
  rep.dimension = a.dimension();
  const auto& basis = a.basis();
  const Padic& proto = proto_of(basis);
  const ProductElement x = diagonal_monomial(a.r(), a.mx(), proto.one_like(), 1);

  std::vector<ProductElement> images;
  for (const auto& b : basis) images.push_back(x * b);
  const int columns = a.r() * a.mx();
  RowEchelon w = row_echelon(coordinate_rows(images), columns);
  const int x_rank = static_cast<int>(w.pivots.size());

  // ker(X) must consist of elements living in degree Mx - 1 only
  std::vector<int> low_cols;
  for (int i = 0; i < a.r(); ++i) {
    for (int k = 0; k + 1 < a.mx(); ++k) low_cols.push_back(i * a.mx() + k);
  }
  const int top_dim = static_cast<int>(subspace_vanishing_on(basis, low_cols).size());
  rep.x_regular = top_dim == rep.dimension - x_rank;
  if (!rep.x_regular) throw PrecisionError("X is not regular on the model of " + a.name());

  // generators: a basis of XA followed by lifts of a basis of A/XA
  std::vector<ProductElement> gens;
  for (auto row : w.rows) gens.push_back(ProductElement{a.r(), a.mx(), std::move(row)});
  const size_t w_dim = gens.size();
  for (const auto& b : basis) {
    gens.push_back(b);
    if (rank(coordinate_rows(gens), columns) != static_cast<int>(gens.size())) gens.pop_back();
  }
  rep.fiber_dim = static_cast<int>(gens.size() - w_dim);
  const std::vector<ProductElement> lifts(gens.begin() + static_cast<long>(w_dim), gens.end());
  Coordinates coords(gens);
  auto fiber_coords = [&](const ProductElement& y) {
    PadicVector c = coords(y);
    return PadicVector(c.begin() + static_cast<long>(w_dim), c.end());
  };

  // maximal ideal: constant terms vanish
  std::vector<int> constant_cols;
  for (int i = 0; i < a.r(); ++i) constant_cols.push_back(i * a.mx());
  std::vector<ProductElement> m = subspace_vanishing_on(basis, constant_cols);

  PadicMatrix conditions;
  for (const auto& mj : m) {
    std::vector<PadicVector> cols;
    for (const auto& q : lifts) cols.push_back(fiber_coords(q * mj));
    for (int k = 0; k < rep.fiber_dim; ++k) {
      PadicVector row;
      for (const auto& col : cols) row.push_back(col[static_cast<size_t>(k)]);
      conditions.push_back(std::move(row));
    }
  }
  if (conditions.empty()) {
    rep.socle = lifts;
  } else {
    for (const auto& c : nullspace(conditions, rep.fiber_dim)) {
      rep.socle.push_back(combination(lifts, c));
    }
  }
  rep.socle_dim = static_cast<int>(rep.socle.size());
  rep.gorenstein = rep.socle_dim == 1;
  return rep;
}

int y_cubic_digits(const LInvariantPair& l, int mx) {
  const ProductElement y = y_element(l, mx);
  const ProductElement x = diagonal_monomial(3, mx, l.l_phi.one_like(), 1);
  const ProductElement cubic = y * (y + l.l_phi * x) * (y - l.l_phi_inv * x);
  int worst = Padic::kExact;
  for (const auto& c : cubic.coords) worst = std::min(worst, c.valuation_bound());
  return worst;
}

UpReport up_structure(const LInvariantPair& l, long p) {
  const int mx = 2;
  const LInvariantPair g = nonvanishing_guard(l.l_phi, l.l_phi_inv);
  const int cap = g.l_phi.cap();
  const Padic one = Padic::one(p, cap);
  const Padic log_gamma = iwasawa_log(1 + p, p, cap + 2);
  UpReport rep;
  rep.up = diagonal_monomial(3, mx, one, 0);
  rep.up.at(0, 1) = -(g.l_phi * g.l_phi_inv / (g.sum * log_gamma));

  SubalgebraModel t = build_T(p, cap, mx);
  SubalgebraModel tp = build_Tprime(g, mx);
  rep.t_dim = t.dimension();
  const ProductElement u = rep.up - diagonal_monomial(3, mx, one, 0);

  const ProductElement x = diagonal_monomial(3, mx, one, 1);
  std::vector<ProductElement> xt;
  for (const auto& b : t.basis()) xt.push_back(x * b);
  RowEchelon w = row_echelon(coordinate_rows(xt), 3 * mx);
  rep.square_digits = std::min(t.membership_digits(rep.up),
                               fit_in_span(w, (u * u).coords).residual_valuation);

  std::vector<ProductElement> span = tp.basis();
  for (const auto& b : tp.basis()) span.push_back(u * b);
  rep.span_dim = rank(coordinate_rows(span), 3 * mx);
  return rep;
}

CongruenceReport congruence_module(const ZetaSeries& zeta, const Padic& l_phi,
                                   const Padic& l0, int threshold) {
  CongruenceReport rep;
  const int mx = zeta.series.mx();
  if (mx < 2) throw PreconditionError("congruence module needs Mx >= 2");
  rep.mx = mx;
  const long p = zeta.p;
  const Padic& z1 = zeta.series[1];
  const int cap = z1.cap();
  SubalgebraModel tord = build_Tord(p, cap, mx);

  std::vector<int> eis_cols, cusp_cols;
  for (int k = 0; k < mx; ++k) {
    cusp_cols.push_back(k);
    eis_cols.push_back(mx + k);
  }
  const std::vector<ProductElement> ker_eis = subspace_vanishing_on(tord.basis(), eis_cols);
  const std::vector<ProductElement> ker_cusp = subspace_vanishing_on(tord.basis(), cusp_cols);

  PadicMatrix j_rows;
  for (const auto& k : ker_eis) j_rows.push_back(component(k, 0));
  RowEchelon j = row_echelon(j_rows, mx);
  rep.j_eis_dim = static_cast<int>(j.pivots.size());
  rep.j_eis_is_x = rep.j_eis_dim == mx - 1 && (j.pivots.empty() || j.pivots.front() == 1);
  rep.length = mx - rep.j_eis_dim;

  rep.zeta_ord = ferrero_greenberg_check(zeta, threshold).ord_x;
  rep.u0 = z1;
  rep.u0_expected = l_phi * l0 / iwasawa_log(1 + p, p, cap + 2);
  rep.u0_digits = agreement(rep.u0, rep.u0_expected);

  // t * k = 0 as polynomials, for k in ker pi_eis
  PadicMatrix conditions;
  for (const auto& k : ker_eis) {
    std::vector<PadicVector> cols;
    for (const auto& b : tord.basis()) {
      PadicVector prod = poly_product(component(b, 0), component(k, 0));
      PadicVector e = poly_product(component(b, 1), component(k, 1));
      prod.insert(prod.end(), e.begin(), e.end());
      cols.push_back(std::move(prod));
    }
    for (size_t c = 0; c < cols.front().size(); ++c) {
      PadicVector row;
      for (const auto& col : cols) row.push_back(col[c]);
      conditions.push_back(std::move(row));
    }
  }
  std::vector<ProductElement> ann;
  for (const auto& c : nullspace(conditions, tord.dimension())) {
    ann.push_back(combination(tord.basis(), c));
  }
  const int ann_dim = rank(coordinate_rows(ann), 2 * mx);
  std::vector<ProductElement> both = ann;
  both.insert(both.end(), ker_cusp.begin(), ker_cusp.end());
  rep.annihilator_is_kernel = ann_dim == static_cast<int>(ker_cusp.size()) &&
                              rank(coordinate_rows(both), 2 * mx) == ann_dim;

  PadicMatrix image;
  for (const auto& t : ann) image.push_back(component(t, 1));
  RowEchelon im = row_echelon(image, mx);
  rep.annihilator_maps_onto_x = static_cast<int>(im.pivots.size()) == mx - 1 &&
                                (im.pivots.empty() || im.pivots.front() == 1);
  return rep;
}

}  // namespace padicw1
