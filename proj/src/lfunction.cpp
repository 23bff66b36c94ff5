#include "padicw1/lfunction.hpp"

#include <atomic>
#include <exception>
#include <optional>
#include <thread>

namespace padicw1 {

namespace {

using Jet = TruncatedSeries<Padic>;
using ExactPoly = std::vector<mpq_class>;

// C(c - t, j) mod t^n for j < count, as exact polynomials in t.
std::vector<ExactPoly> binomial_jets(long c, int count, int n) {
  std::vector<ExactPoly> out;
  ExactPoly cur(static_cast<size_t>(n), 0);
  cur[0] = 1;
  for (int j = 0; j < count; ++j) {
    out.push_back(cur);
    // multiply by (c - j - t) / (j + 1)
    ExactPoly next(static_cast<size_t>(n), 0);
    const mpq_class lead(c - j);
    for (int i = n - 1; i >= 0; --i) {
      next[static_cast<size_t>(i)] = lead * cur[static_cast<size_t>(i)];
      if (i > 0) next[static_cast<size_t>(i)] -= cur[static_cast<size_t>(i - 1)];
      next[static_cast<size_t>(i)] /= (j + 1);
    }
    cur = std::move(next);
  }
  return out;
}

template <class Fn>
void parallel_for(long count, Fn&& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  long workers = std::max(1L, std::min<long>(hw == 0 ? 1 : hw, 8));
  workers = std::min(workers, count);
  std::atomic<long> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto body = [&]() {
    try {
      for (long i = next++; i < count && !failed; i = next++) fn(i);
    } catch (...) {
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (long w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

void require_lp_setting(const DirichletCharacter& phi, long p) {
  require_odd_prime(p);
  if (!phi.is_odd()) {
    throw PreconditionError("character " + phi.label() + " is not odd");
  }
  if (phi.modulus() % p == 0) {
    throw PreconditionError("p = " + std::to_string(p) +
                            " divides the modulus of " + phi.label());
  }
  if ((p - 1) % phi.order() != 0) {
    throw PreconditionError("values of " + phi.label() + " do not lie in Z_" +
                            std::to_string(p) + " (order " +
                            std::to_string(phi.order()) + " does not divide p-1)");
  }
}

void require_irregular(const DirichletCharacter& phi, long p) {
  auto e = phi.exponent(p);
  if (!e || *e != 0) {
    throw PreconditionError("phi(" + std::to_string(p) + ") != 1 for " +
                            phi.label() +
                            ": this weight-1 Eisenstein point is regular, but "
                            "the computation needs phi(p) = 1");
  }
}

LpJet lp_jet(const DirichletCharacter& phi, long p, int order, int prec,
             long center, long embedding_index) {
  require_lp_setting(phi, p);
  if (order < 1) throw PreconditionError("jet order must be positive");
  if (prec < 1) throw PreconditionError("precision must be positive");
  if (center == 1) throw PreconditionError("L_p has a pole at s = 1");

  const int work = prec + 3;
  const CharacterEmbedding emb(phi, p, work, embedding_index);
  const long F = phi.modulus() * p;

  // j-th term has valuation >= j - 1 - (j-1)/(p-1).
  int terms = 1;
  while ((terms - 1) - (terms - 1) / (p - 1) < work) ++terms;
  const std::vector<ExactPoly> binom = binomial_jets(1 - center, terms, order);
  std::vector<mpq_class> bern;
  for (int j = 0; j < terms; ++j) bern.push_back(bernoulli(j));

  const Padic zero = Padic::zero(p, work);
  std::vector<std::optional<Jet>> parts(static_cast<size_t>(F));
  parallel_for(F, [&](long a) {
    if (a == 0 || a % p == 0) return;
    const Padic chi = emb(a);
    if (chi.is_exact_zero()) return;
    const Padic omega = teichmuller_of_residue(a, p, work);
    const Padic angle = Padic::from_integer(a, p, work) / omega;
    const Padic log_angle = iwasawa_log(angle);

    // <a>^(1 - center - t) = exp((1 - center) log<a>) exp(-t log<a>)
    const Padic head = padic_exp(log_angle * Padic::from_integer(1 - center, p, work));
    Jet lin(zero, order);
    if (order > 1) lin[1] = -log_angle;
    Jet power = series_exp(lin) * (chi * omega * head);

    ExactPoly inner(static_cast<size_t>(order), 0);
    const mpq_class ratio(F, a);
    mpq_class scale = 1;
    for (int j = 0; j < terms; ++j) {
      if (bern[static_cast<size_t>(j)] != 0) {
        mpq_class c = bern[static_cast<size_t>(j)] * scale;
        for (int i = 0; i < order; ++i) {
          inner[static_cast<size_t>(i)] += c * binom[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
      }
      scale *= ratio;
    }
    Jet in(zero, order);
    for (int i = 0; i < order; ++i) {
      in[i] = Padic::from_rational_abs(inner[static_cast<size_t>(i)], p, work, work);
    }
    parts[static_cast<size_t>(a)] = power * in;
  });

  Jet total(zero, order);
  for (const auto& part : parts) {
    if (part) total += *part;
  }

  // 1/(s - 1) = 1/((center - 1) + t)
  Jet pole(zero, order);
  const mpq_class c0(center - 1);
  mpq_class coeff = 1 / c0;
  for (int i = 0; i < order; ++i) {
    pole[i] = Padic::from_rational(coeff, p, work);
    coeff /= -c0;
  }
  total = total * pole * Padic::from_rational(mpz_class(1), mpz_class(F), p, work);

  return LpJet{p, phi.label(), center, std::move(total)};
}

Padic lp_value(const DirichletCharacter& phi, long p, long s, int prec,
               long embedding_index) {
  return lp_jet(phi, p, 1, prec, s, embedding_index).series[0];
}

ZetaSeries zeta_series(const DirichletCharacter& phi, long p, int mx, int prec,
                       long embedding_index) {
  if (mx < 1) throw PreconditionError("Mx must be positive");
  // Composition with log(1+X)/log(1+p) costs about one digit per degree.
  const int work = prec + mx + mx / static_cast<int>(p - 1) + 4;
  LpJet jet = lp_jet(phi, p, mx, work, 0, embedding_index);

  // zeta(X) = L_p(phi omega, -sigma(X)), sigma = log(1+X)/log(1+p)
  Jet h = jet.series;
  for (int i = 1; i < mx; i += 2) h[i] = -h[i];
  const Padic zero = Padic::zero(p, work);
  Jet sigma = series_log1p(Jet::variable(zero, mx));
  sigma *= zero.one_like() / iwasawa_log(1 + p, p, work);
  return ZetaSeries{p, phi.label(), compose(h, sigma)};
}

Padic evaluate_zeta(const ZetaSeries& zeta, const Padic& x) {
  if (x.valuation_bound() < 1) {
    throw PreconditionError("evaluate_zeta needs ord_p(x) >= 1");
  }
  long bound = static_cast<long>(zeta.series.mx()) * x.valuation_bound();
  if (bound > Padic::kExact) bound = Padic::kExact;
  return evaluate(zeta.series, x).add_bigoh(static_cast<int>(bound));
}

FerreroGreenbergReport ferrero_greenberg_check(const ZetaSeries& zeta,
                                               int threshold) {
  if (zeta.series.mx() < 2) {
    throw PreconditionError("the simple-zero check needs Mx >= 2");
  }
  FerreroGreenbergReport r;
  r.zeta0 = zeta.series[0];
  r.leading = zeta.series[1];
  r.threshold = threshold;
  if (r.zeta0.valuation_bound() < threshold) return r;  // ord_x = 0
  if (r.leading.is_zero() || *r.leading.valuation() >= threshold) {
    throw PrecisionError(
        "zeta_phi'(0) cannot be separated from 0 at this precision; "
        "increase the precision");
  }
  r.ord_x = 1;
  return r;
}

}  // namespace padicw1
