#include "padicw1/characters.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace padicw1 {

namespace {

long mod_pos(long a, long n) { return ((a % n) + n) % n; }

bool squarefree(long n) {
  if (n < 0) n = -n;
  for (long q = 2; q * q <= n; ++q) {
    if (n % (q * q) == 0) return false;
  }
  return true;
}

}  // namespace

bool is_fundamental_discriminant(long d) {
  if (d == 0 || d == 1) return false;
  long r = mod_pos(d, 4);
  if (r == 1) return squarefree(d);
  if (r != 0) return false;
  long m = d / 4;
  long rm = mod_pos(m, 4);
  return (rm == 2 || rm == 3) && squarefree(m);
}

int kronecker_symbol(long d, long n) {
  return mpz_si_kronecker(d, mpz_class(n).get_mpz_t());
}

long primitive_root(long p) {
  std::vector<long> factors;
  long m = p - 1;
  for (long q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long q : factors) {
      mpz_class r;
      mpz_class base = g;
      mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(),
                  static_cast<unsigned long>((p - 1) / q),
                  mpz_class(p).get_mpz_t());
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw PreconditionError("no primitive root modulo " + std::to_string(p));
}

DirichletCharacter DirichletCharacter::kronecker(long d) {
  if (!is_fundamental_discriminant(d)) {
    throw PreconditionError(std::to_string(d) +
                            " is not a fundamental discriminant");
  }
  DirichletCharacter chi;
  chi.modulus_ = d < 0 ? -d : d;
  chi.order_ = 2;
  chi.table_.assign(static_cast<size_t>(chi.modulus_), -1);
  for (long a = 0; a < chi.modulus_; ++a) {
    int k = kronecker_symbol(d, a);
    if (k != 0) chi.table_[static_cast<size_t>(a)] = k == 1 ? 0 : 1;
  }
  chi.discriminant_ = d;
  chi.label_ = "kronecker:" + std::to_string(d);
  chi.finish();
  return chi;
}

DirichletCharacter DirichletCharacter::tabulated(
    long modulus, const std::vector<std::pair<long, long>>& generators,
    long order) {
  if (modulus < 1 || order < 1) {
    throw PreconditionError("modulus and order must be positive");
  }
  DirichletCharacter chi;
  chi.modulus_ = modulus;
  chi.order_ = order;
  chi.table_.assign(static_cast<size_t>(modulus), -1);
  chi.table_[static_cast<size_t>(1 % modulus)] = 0;
  std::vector<long> frontier{1 % modulus};
  while (!frontier.empty()) {
    std::vector<long> next;
    for (long a : frontier) {
      for (const auto& [g, e] : generators) {
        if (std::gcd(g, modulus) != 1) {
          throw PreconditionError("generator " + std::to_string(g) +
                                  " is not a unit mod " +
                                  std::to_string(modulus));
        }
        long b = mod_pos(a * g, modulus);
        long eb = mod_pos(chi.table_[static_cast<size_t>(a)] + e, order);
        long& slot = chi.table_[static_cast<size_t>(b)];
        if (slot == -1) {
          slot = eb;
          next.push_back(b);
        } else if (slot != eb) {
          throw PreconditionError("inconsistent character values on generators");
        }
      }
    }
    frontier = std::move(next);
  }
  for (long a = 0; a < modulus; ++a) {
    if (std::gcd(a, modulus) == 1 && chi.table_[static_cast<size_t>(a)] == -1) {
      throw PreconditionError("generators do not generate (Z/" +
                              std::to_string(modulus) + ")^x");
    }
  }
  std::ostringstream label;
  label << "mod:" << modulus << ':';
  for (const auto& [g, e] : generators) label << g << '=' << e << ',';
  label << "order=" << order;
  chi.label_ = label.str();
  chi.finish();
  return chi;
}

DirichletCharacter DirichletCharacter::parse(const std::string& spec) {
  const std::string kron = "kronecker:";
  const std::string mod = "mod:";
  try {
    if (spec.rfind(kron, 0) == 0) {
      return kronecker(std::stol(spec.substr(kron.size())));
    }
    if (spec.rfind(mod, 0) == 0) {
      std::string rest = spec.substr(mod.size());
      size_t colon = rest.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
      long n = std::stol(rest.substr(0, colon));
      std::vector<std::pair<long, long>> gens;
      long order = 0;
      std::stringstream ss(rest.substr(colon + 1));
      std::string item;
      while (std::getline(ss, item, ',')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("missing '='");
        std::string key = item.substr(0, eq);
        long value = std::stol(item.substr(eq + 1));
        if (key == "order") {
          order = value;
        } else {
          gens.emplace_back(std::stol(key), value);
        }
      }
      if (order == 0) throw std::invalid_argument("missing order=");
      return tabulated(n, gens, order);
    }
  } catch (const PreconditionError&) {
    throw;
  } catch (const std::exception& e) {
    throw PreconditionError("cannot parse character '" + spec + "': " + e.what());
  }
  throw PreconditionError("cannot parse character '" + spec +
                          "': expected kronecker:d or mod:N:g=e,...,order=m");
}

void DirichletCharacter::finish() {
  long g = order_;
  for (long e : table_) {
    if (e >= 0) g = std::gcd(g, e);
  }
  if (g > 1) {
    order_ /= g;
    for (long& e : table_) {
      if (e >= 0) e /= g;
    }
  }
  conductor_ = modulus_;
  for (long f = 1; f <= modulus_; ++f) {
    if (modulus_ % f != 0) continue;
    bool trivial = true;
    for (long a = 1; a < modulus_ && trivial; a += f) {
      long e = table_[static_cast<size_t>(a)];
      if (e > 0) trivial = false;
    }
    if (trivial) {
      conductor_ = f;
      break;
    }
  }
}

bool DirichletCharacter::is_odd() const {
  auto e = exponent(-1);
  return e && order_ % 2 == 0 && *e == order_ / 2;
}

std::optional<long> DirichletCharacter::exponent(long a) const {
  long e = table_[static_cast<size_t>(mod_pos(a, modulus_))];
  if (e < 0) return std::nullopt;
  return e;
}

int DirichletCharacter::sign(long a) const {
  if (order_ > 2) {
    throw PreconditionError("character " + label_ + " is not quadratic");
  }
  auto e = exponent(a);
  if (!e) return 0;
  return *e == 0 ? 1 : -1;
}

DirichletCharacter DirichletCharacter::inverse() const {
  DirichletCharacter chi = *this;
  for (long& e : chi.table_) {
    if (e > 0) e = order_ - e;
  }
  if (order_ > 2) chi.label_ = "inverse(" + label_ + ")";
  return chi;
}

DirichletCharacter DirichletCharacter::primitive() const {
  if (conductor_ == modulus_) return *this;
  DirichletCharacter chi = *this;
  chi.modulus_ = conductor_;
  chi.table_.assign(static_cast<size_t>(conductor_), -1);
  for (long b = 0; b < conductor_; ++b) {
    if (std::gcd(b, conductor_) != 1) continue;
    for (long a = b; a < modulus_ + conductor_; a += conductor_) {
      if (std::gcd(a, modulus_) == 1) {
        chi.table_[static_cast<size_t>(b)] =
            table_[static_cast<size_t>(a % modulus_)];
        break;
      }
    }
  }
  chi.label_ = "primitive(" + label_ + ")";
  chi.finish();
  return chi;
}

CharacterEmbedding::CharacterEmbedding(DirichletCharacter chi, long p, int cap,
                                       long index)
    : chi_(std::move(chi)), p_(p), cap_(cap), index_(index) {
  const long m = chi_.order();
  if ((p - 1) % m != 0) {
    throw PreconditionError("character " + chi_.label() + " of order " +
                            std::to_string(m) + " has no embedding into Z_" +
                            std::to_string(p) + " (order must divide p-1)");
  }
  if (std::gcd(mod_pos(index, m), m) != 1 && m > 1) {
    throw PreconditionError("embedding index must be a unit modulo the order");
  }
  Padic zeta = teichmuller_of_residue(primitive_root(p), p, cap)
                   .pow((p - 1) / m * mod_pos(index, m == 1 ? 1 : m));
  powers_.push_back(Padic::one(p, cap));
  for (long e = 1; e < m; ++e) powers_.push_back(powers_.back() * zeta);
}

Padic CharacterEmbedding::operator()(long a) const {
  auto e = chi_.exponent(a);
  if (!e) return Padic::zero(p_, cap_);
  return powers_[static_cast<size_t>(*e)];
}

CharacterEmbedding CharacterEmbedding::inverse() const {
  return CharacterEmbedding(chi_.inverse(), p_, cap_, index_);
}

mpq_class bernoulli(int n) {
  static std::mutex mu;
  static std::vector<mpq_class> cache{mpq_class(1)};
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    mpq_class acc = 0;
    mpz_class binom = 1;
    for (int k = 0; k < m; ++k) {
      acc += mpq_class(binom) * cache[static_cast<size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    mpq_class b = -acc / (m + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[static_cast<size_t>(n)];
}

mpq_class bernoulli_polynomial(int n, const mpq_class& x) {
  mpq_class acc = 0;
  mpz_class binom = 1;
  std::vector<mpq_class> powers(static_cast<size_t>(n) + 1);
  powers[0] = 1;
  for (size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * x;
  for (int j = 0; j <= n; ++j) {
    acc += mpq_class(binom) * bernoulli(j) * powers[static_cast<size_t>(n - j)];
    binom = binom * (n - j) / (j + 1);
  }
  acc.canonicalize();
  return acc;
}

mpq_class generalized_bernoulli_exact(const DirichletCharacter& chi, int k) {
  if (k < 1) throw PreconditionError("generalized Bernoulli index must be >= 1");
  DirichletCharacter prim = chi.primitive();
  const long f = prim.modulus();
  mpq_class sum = 0;
  for (long a = 1; a <= f; ++a) {
    int s = prim.sign(a);
    if (s == 0) continue;
    mpq_class b = bernoulli_polynomial(k, mpq_class(a, f));
    if (s > 0) {
      sum += b;
    } else {
      sum -= b;
    }
  }
  mpz_class fk;
  mpz_ui_pow_ui(fk.get_mpz_t(), static_cast<unsigned long>(f),
                static_cast<unsigned long>(k - 1));
  sum *= fk;
  sum.canonicalize();
  return sum;
}

Padic generalized_bernoulli(const CharacterEmbedding& chi, int k) {
  if (k < 1) throw PreconditionError("generalized Bernoulli index must be >= 1");
  CharacterEmbedding prim(chi.character().primitive(), chi.prime(), chi.cap(),
                          chi.index());
  const long f = prim.character().modulus();
  const long p = chi.prime();
  Padic sum = Padic::zero(p, chi.cap());
  for (long a = 1; a <= f; ++a) {
    Padic v = prim(a);
    if (v.is_exact_zero()) continue;
    sum += v * Padic::from_rational(bernoulli_polynomial(k, mpq_class(a, f)), p,
                                    chi.cap());
  }
  return sum * Padic::from_integer(mpz_class(f), p, chi.cap()).pow(k - 1);
}

mpq_class classical_L_nonpositive_exact(const DirichletCharacter& chi, int k) {
  if (chi.is_trivial()) throw PreconditionError("L(chi, 1-k) needs nontrivial chi");
  mpq_class r = -generalized_bernoulli_exact(chi, k) / k;
  r.canonicalize();
  return r;
}

Padic classical_L_nonpositive(const CharacterEmbedding& chi, int k) {
  if (chi.character().is_trivial()) {
    throw PreconditionError("L(chi, 1-k) needs nontrivial chi");
  }
  return -generalized_bernoulli(chi, k) /
         Padic::from_integer(k, chi.prime(), chi.cap());
}

}  // namespace padicw1
