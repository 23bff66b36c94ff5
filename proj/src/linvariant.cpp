#include "padicw1/linvariant.hpp"

#include <numeric>

#include "padicw1/lfunction.hpp"

namespace padicw1 {

long class_number(long d) {
  if (d >= 0 || !is_fundamental_discriminant(d)) {
    throw PreconditionError(std::to_string(d) +
                            " is not a negative fundamental discriminant");
  }
  const long n = -d;
  long count = 0;
  for (long a = 1; 3 * a * a <= n; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      if (((b - d) % 2 + 2) % 2 != 0) continue;
      long num = b * b - d;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

QuadraticOrderData split_prime_power_generator(long d, long p) {
  require_odd_prime(p);
  if (d % p == 0 || kronecker_symbol(d, p) != 1) {
    throw PreconditionError(std::to_string(p) + " does not split in Q(sqrt(" +
                            std::to_string(d) + "))");
  }
  QuadraticOrderData q;
  q.d = d;
  q.p = p;
  q.h = class_number(d);
  mpz_class target = 4 * prime_power(p, static_cast<int>(q.h));
  for (mpz_class y = 1; -d * y * y <= target; ++y) {
    mpz_class x2 = target + d * y * y;
    if (mpz_perfect_square_p(x2.get_mpz_t()) == 0) continue;
    mpz_class x = sqrt(x2);
    if (x % p == 0) continue;
    q.x = x;
    q.y = y;
    return q;
  }
  throw std::logic_error("no generator found for a split prime");
}

PUnitData quadratic_unit_data(const QuadraticOrderData& q) {
  const mpz_class& ph = prime_power(q.p, static_cast<int>(q.h));
  PUnitData u;
  u.coefficients = {mpq_class(ph), mpq_class(-(q.x * q.x - 2 * ph)), mpq_class(ph)};
  u.valuation = static_cast<int>(q.h);
  u.label = "pi/conj(pi), pi = (" + q.x.get_str() + " + " + q.y.get_str() +
            "*sqrt(" + std::to_string(q.d) + "))/2";
  return u;
}

namespace {

// v_p of a nonzero rational.
int ord_q(const mpq_class& c, long p) {
  return ord_p(c.get_num(), p) - ord_p(c.get_den(), p);
}

std::vector<mpz_class> integral_coefficients(const std::vector<mpq_class>& c) {
  mpz_class l = 1;
  for (const auto& x : c) l = lcm(l, x.get_den());
  std::vector<mpz_class> out;
  for (const auto& x : c) out.push_back(mpz_class(x * l));
  return out;
}

}  // namespace

std::vector<std::pair<mpq_class, int>> newton_polygon(
    const std::vector<mpq_class>& coefficients, long p) {
  std::vector<std::pair<long, int>> pts;
  for (size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] != 0) {
      pts.emplace_back(static_cast<long>(i), ord_q(coefficients[i], p));
    }
  }
  // lower convex hull, left to right
  std::vector<std::pair<long, int>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      long cross = (b.first - a.first) * static_cast<long>(pt.second - a.second) -
                   static_cast<long>(b.second - a.second) * (pt.first - a.first);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  std::vector<std::pair<mpq_class, int>> out;
  for (size_t i = 1; i < hull.size(); ++i) {
    long len = hull[i].first - hull[i - 1].first;
    mpq_class root_val(hull[i - 1].second - hull[i].second, len);
    root_val.canonicalize();
    out.emplace_back(root_val, static_cast<int>(len));
  }
  return out;
}

LInvariantResult l_invariant_from_unit(const PUnitData& unit, long p, int prec) {
  require_odd_prime(p);
  const int e = unit.valuation;
  if (unit.coefficients.size() < 2 || unit.coefficients.back() == 0) {
    throw PreconditionError("unit polynomial must have degree >= 1");
  }
  if (e == 0) throw PreconditionError("the p-unit must have nonzero valuation");
  int multiplicity = 0;
  for (const auto& [v, m] : newton_polygon(unit.coefficients, p)) {
    if (v == e) multiplicity = m;
  }
  if (multiplicity == 0) {
    throw PreconditionError("unit polynomial has no root of valuation " +
                            std::to_string(e));
  }
  if (multiplicity > 1) {
    throw EmbeddingAmbiguityError(
        std::to_string(multiplicity) + " roots of valuation " +
        std::to_string(e) + "; the place v0 must be fixed by the caller");
  }

  // Q(U) = P(p^e U) / p^k has a unique unit root, simple mod p.
  const int work = prec + 3;
  std::vector<mpq_class> scaled;
  for (size_t i = 0; i < unit.coefficients.size(); ++i) {
    mpq_class shift = e >= 0 ? mpq_class(prime_power(p, e * static_cast<int>(i)))
                             : mpq_class(1, prime_power(p, -e * static_cast<int>(i)));
    scaled.push_back(unit.coefficients[i] * shift);
  }
  int low = Padic::kExact;
  for (const auto& c : scaled) {
    if (c != 0) low = std::min(low, ord_q(c, p));
  }
  for (auto& c : scaled) {
    if (low >= 0) {
      c /= mpq_class(prime_power(p, low));
    } else {
      c *= mpq_class(prime_power(p, -low));
    }
    c.canonicalize();
  }
  std::vector<mpz_class> q = integral_coefficients(scaled);
  // Dividing by a unit common denominator keeps the roots; make content a unit.
  const mpz_class& m = prime_power(p, work);
  auto eval = [&](const mpz_class& u, const mpz_class& mod) {
    mpz_class acc = 0;
    for (size_t i = q.size(); i-- > 0;) acc = (acc * u + q[i]) % mod;
    return acc;
  };
  auto eval_deriv = [&](const mpz_class& u, const mpz_class& mod) {
    mpz_class acc = 0;
    for (size_t i = q.size(); i-- > 1;) acc = (acc * u + q[i] * static_cast<long>(i)) % mod;
    return acc;
  };
  mpz_class u = 0;
  int found = 0;
  for (long r = 1; r < p; ++r) {
    if (eval(mpz_class(r), mpz_class(p)) == 0) {
      u = r;
      ++found;
    }
  }
  if (found != 1 || eval_deriv(u, mpz_class(p)) == 0) {
    throw PreconditionError("unit root is not simple modulo p");
  }
  for (int step = 1; step < 2 * work; step *= 2) {
    mpz_class d = eval_deriv(u, m), inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    u = u - eval(u, m) * inv;
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
  }
  if (eval(u, m) != 0) throw std::logic_error("Hensel lifting did not converge");

  LInvariantResult res;
  res.unit = unit;
  Padic unit_part = Padic::from_residue(u, p, work, work);
  res.root = unit_part * Padic::from_integer(p, p, work).pow(e);
  // Sign convention: +log_p(r)/e, see the header.
  res.value = iwasawa_log(unit_part) / Padic::from_integer(e, p, work);
  return res;
}

LInvariantResult l_invariant(const DirichletCharacter& phi, long p, int prec,
                             const std::optional<PUnitData>& unit) {
  require_lp_setting(phi, p);
  require_irregular(phi, p);
  if (unit) return l_invariant_from_unit(*unit, p, prec);
  if (!phi.discriminant()) {
    throw PreconditionError("character " + phi.label() +
                            " is not a Kronecker symbol; supply p-unit data");
  }
  QuadraticOrderData q = split_prime_power_generator(*phi.discriminant(), p);
  return l_invariant_from_unit(quadratic_unit_data(q), p, prec);
}

LInvariantPair nonvanishing_guard(const Padic& l_phi, const Padic& l_phi_inv) {
  LInvariantPair r{l_phi, l_phi_inv, l_phi + l_phi_inv};
  auto check = [](const Padic& x, const char* what) {
    if (x.is_zero()) {
      throw PrecisionError(std::string(what) +
                           " is indistinguishable from 0; increase the precision");
    }
  };
  check(r.l_phi, "L(phi)");
  check(r.l_phi_inv, "L(phi^-1)");
  check(r.sum, "L(phi) + L(phi^-1)");
  return r;
}

LInvariantPair l_invariants(const DirichletCharacter& phi, long p, int prec,
                            const std::optional<PUnitData>& unit,
                            const std::optional<PUnitData>& unit_inv) {
  Padic l = l_invariant(phi, p, prec, unit).value;
  if (phi.order() <= 2) return nonvanishing_guard(l, l);
  if (!unit_inv) {
    throw PreconditionError("character " + phi.label() +
                            " is not quadratic; supply p-unit data for phi^-1");
  }
  Padic linv = l_invariant_from_unit(*unit_inv, p, prec).value;
  return nonvanishing_guard(l, linv);
}

}  // namespace padicw1
