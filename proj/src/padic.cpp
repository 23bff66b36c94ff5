#include "padicw1/padic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace padicw1 {

void require_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) {
    throw PreconditionError("p must be an odd prime, got " + std::to_string(p));
  }
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) {
      throw PreconditionError(std::to_string(p) + " is not prime");
    }
  }
}

namespace {

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("element is not invertible");
  }
  return r;
}

int saturating_add(int a, int b) {
  if (a >= Padic::kExact || b >= Padic::kExact) return Padic::kExact;
  long s = static_cast<long>(a) + b;
  if (s >= Padic::kExact) return Padic::kExact;
  return static_cast<int>(s);
}

// Strip the p-part of a nonzero integer in place; return its valuation.
int strip(mpz_class& n, long p) {
  int k = 0;
  mpz_class q, r;
  while (true) {
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(),
                   static_cast<unsigned long>(p));
    if (r != 0) break;
    n = q;
    ++k;
  }
  return k;
}

int floor_log(long k, long p) {
  int e = 0;
  while (k >= p) {
    k /= p;
    ++e;
  }
  return e;
}

}  // namespace

const mpz_class& prime_power(long p, int n) {
  thread_local std::map<std::pair<long, int>, mpz_class> cache;
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(std::max(n, 0)));
  return cache.emplace(key, std::move(v)).first->second;
}

int ord_p(const mpz_class& n, long p) {
  if (n == 0) throw std::domain_error("ord_p(0)");
  mpz_class m = n;
  return strip(m, p);
}

int ord_p(long n, long p) { return ord_p(mpz_class(n), p); }

Padic Padic::normalized(long p, int cap, int val, int rel, mpz_class n) {
  if (rel <= 0) return Padic(p, cap, saturating_add(val, rel), 0, 0);
  n = mod(n, prime_power(p, rel));
  if (n == 0) return Padic(p, cap, saturating_add(val, rel), 0, 0);
  int k = strip(n, p);
  return Padic(p, cap, val + k, rel - k, std::move(n));
}

Padic Padic::zero(long p, int cap, int absolute_precision) {
  return Padic(p, cap, absolute_precision, 0, 0);
}

Padic Padic::one(long p, int cap) { return Padic(p, cap, 0, cap, 1); }

Padic Padic::from_integer(const mpz_class& n, long p, int cap) {
  return from_rational(n, 1, p, cap);
}

Padic Padic::from_rational(const mpz_class& a, const mpz_class& b, long p,
                           int cap) {
  require_odd_prime(p);
  if (b == 0) throw std::domain_error("from_rational: zero denominator");
  if (cap < 1) throw PreconditionError("precision must be positive");
  if (a == 0) return zero(p, cap);
  mpz_class num = a, den = b;
  int v = strip(num, p) - strip(den, p);
  const mpz_class& m = prime_power(p, cap);
  mpz_class u = mod(mod(num, m) * inverse_mod(mod(den, m), m), m);
  return Padic(p, cap, v, cap, std::move(u));
}

Padic Padic::from_rational(const mpq_class& q, long p, int cap) {
  return from_rational(q.get_num(), q.get_den(), p, cap);
}

Padic Padic::from_rational_abs(const mpq_class& q, long p,
                               int absolute_precision, int cap) {
  if (q == 0) return zero(p, cap, absolute_precision);
  mpz_class num = q.get_num(), den = q.get_den();
  int v = strip(num, p) - strip(den, p);
  int rel = absolute_precision - v;
  if (rel <= 0) return zero(p, cap, absolute_precision);
  const mpz_class& m = prime_power(p, rel);
  mpz_class u = mod(mod(num, m) * inverse_mod(mod(den, m), m), m);
  return Padic(p, cap, v, rel, std::move(u));
}

Padic Padic::from_residue(const mpz_class& residue, long p,
                          int absolute_precision, int cap) {
  return normalized(p, cap, 0, absolute_precision, residue);
}

std::vector<int> Padic::unit_digits() const {
  std::vector<int> digits;
  digits.reserve(static_cast<size_t>(rel_));
  mpz_class n = unit_, r;
  for (int i = 0; i < rel_; ++i) {
    mpz_fdiv_qr_ui(n.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(),
                   static_cast<unsigned long>(p_));
    digits.push_back(static_cast<int>(r.get_si()));
  }
  return digits;
}

mpz_class Padic::residue(int n) const {
  if (n > absolute_precision()) {
    throw PrecisionError("residue requested beyond known precision");
  }
  if (is_zero() || n <= 0) return 0;
  if (val_ < 0) throw std::domain_error("residue of a non-integral value");
  return mod(unit_ * prime_power(p_, val_), prime_power(p_, n));
}

Padic Padic::add_bigoh(int a) const {
  if (a >= absolute_precision()) return *this;
  if (is_zero() || a <= val_) return Padic(p_, cap_, a, 0, 0);
  int rel = a - val_;
  return Padic(p_, cap_, val_, rel, mod(unit_, prime_power(p_, rel)));
}

void Padic::check_same_prime(const Padic& o) const {
  if (p_ != o.p_) {
    throw std::invalid_argument("p-adic operands over different primes");
  }
}

Padic Padic::operator-() const {
  if (is_zero()) return *this;
  return Padic(p_, cap_, val_, rel_, prime_power(p_, rel_) - unit_);
}

Padic& Padic::operator+=(const Padic& o) {
  check_same_prime(o);
  int cap = std::max(cap_, o.cap_);
  if (o.is_zero()) {
    *this = add_bigoh(o.val_);
    cap_ = cap;
    return *this;
  }
  if (is_zero()) {
    int a = val_;
    *this = o.add_bigoh(a);
    cap_ = cap;
    return *this;
  }
  int abs = std::min(absolute_precision(), o.absolute_precision());
  int v = std::min(val_, o.val_);
  mpz_class a = unit_ * prime_power(p_, val_ - v);
  mpz_class b = o.unit_ * prime_power(p_, o.val_ - v);
  *this = normalized(p_, cap, v, abs - v, a + b);
  return *this;
}

Padic& Padic::operator-=(const Padic& o) { return *this += -o; }

Padic& Padic::operator*=(const Padic& o) {
  check_same_prime(o);
  int cap = std::max(cap_, o.cap_);
  if (is_zero() || o.is_zero()) {
    *this = Padic(p_, cap, saturating_add(val_, o.val_), 0, 0);
    return *this;
  }
  int rel = std::min(rel_, o.rel_);
  mpz_class u = mod(unit_ * o.unit_, prime_power(p_, rel));
  *this = Padic(p_, cap, val_ + o.val_, rel, std::move(u));
  return *this;
}

Padic& Padic::operator/=(const Padic& o) {
  check_same_prime(o);
  int cap = std::max(cap_, o.cap_);
  if (o.is_exact_zero()) throw std::domain_error("division by exact zero");
  if (o.is_zero()) {
    throw PrecisionError("division by a value indistinguishable from zero");
  }
  if (is_zero()) {
    int a = is_exact_zero() ? kExact : val_ - o.val_;
    *this = Padic(p_, cap, a, 0, 0);
    return *this;
  }
  int rel = std::min(rel_, o.rel_);
  const mpz_class& m = prime_power(p_, rel);
  mpz_class u = mod(unit_ * inverse_mod(o.unit_, m), m);
  *this = Padic(p_, cap, val_ - o.val_, rel, std::move(u));
  return *this;
}

Padic Padic::pow(long e) const {
  if (e == 0) return one_like();
  if (e < 0) return one_like() / pow(-e);
  if (is_zero()) {
    if (is_exact_zero()) return *this;
    return Padic(p_, cap_, static_cast<int>(std::min<long>(e * val_, kExact)),
                 0, 0);
  }
  mpz_class u;
  mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(e),
              prime_power(p_, rel_).get_mpz_t());
  return Padic(p_, cap_, static_cast<int>(e * val_), rel_, std::move(u));
}

std::optional<long> Padic::as_small_integer() const {
  if (is_zero()) return 0L;
  if (val_ < 0) return std::nullopt;
  int abs = absolute_precision();
  const mpz_class& m = prime_power(p_, abs);
  mpz_class n = mod(unit_ * prime_power(p_, val_), m);
  if (n * n < m && n.fits_slong_p()) return n.get_si();
  mpz_class neg = m - n;
  if (neg * neg < m && neg.fits_slong_p()) return -neg.get_si();
  return std::nullopt;
}

std::string Padic::to_string(int terms) const {
  std::ostringstream os;
  auto power = [&](int e) {
    std::ostringstream t;
    if (e == 0) return std::string();
    t << p_;
    if (e != 1) t << '^' << e;
    return t.str();
  };
  if (is_exact_zero()) return "0";
  if (is_zero()) {
    os << "O(" << p_ << '^' << val_ << ')';
    return os.str();
  }
  std::vector<int> digits = unit_digits();
  int shown = 0;
  bool truncated = false;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 0) continue;
    if (shown == terms) {
      truncated = true;
      break;
    }
    if (shown > 0) os << " + ";
    int e = val_ + static_cast<int>(i);
    std::string pw = power(e);
    if (pw.empty()) {
      os << digits[i];
    } else if (digits[i] == 1) {
      os << pw;
    } else {
      os << digits[i] << '*' << pw;
    }
    ++shown;
  }
  if (truncated) os << " + ...";
  os << " + O(" << p_ << '^' << absolute_precision() << ')';
  return os.str();
}

int agreement(const Padic& a, const Padic& b) {
  return (a - b).valuation_bound();
}

Padic teichmuller_of_residue(long a, long p, int cap) {
  require_odd_prime(p);
  long r = ((a % p) + p) % p;
  if (r == 0) throw PreconditionError("teichmuller: residue divisible by p");
  const mpz_class& m = prime_power(p, cap);
  // a^(p^(cap-1)) is the Teichmuller lift modulo p^cap.
  mpz_class w = r;
  for (int i = 1; i < cap; ++i) {
    mpz_powm_ui(w.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(p),
                m.get_mpz_t());
  }
  return Padic::from_residue(w, p, cap, cap);
}

Padic teichmuller(const Padic& u) {
  if (u.is_zero() || *u.valuation() != 0) {
    throw PreconditionError("teichmuller: argument must have valuation 0");
  }
  mpz_class r = u.unit() % u.prime();
  return teichmuller_of_residue(r.get_si(), u.prime(), u.cap());
}

Padic iwasawa_log(const Padic& x) {
  if (x.is_zero()) throw PreconditionError("iwasawa_log: zero input");
  const long p = x.prime();
  const int r = x.relative_precision();
  const mpz_class& mr = prime_power(p, r);
  mpz_class w = teichmuller_of_residue(mpz_class(x.unit() % p).get_si(), p, r)
                    .residue(r);
  mpz_class z = mod(x.unit() * inverse_mod(w, mr) - 1, mr);
  if (z == 0) return Padic::zero(p, x.cap(), r);
  mpz_class zz = z;
  const int vz = strip(zz, p);

  // Terms z^k/k have valuation >= k*vz - floor(log_p k), non-decreasing in k.
  long last = 1;
  while (last * vz - floor_log(last, p) < r) ++last;
  const int extra = floor_log(last, p);
  const mpz_class& mw = prime_power(p, r + extra);

  mpz_class sum = 0, zk = 1;
  for (long k = 1; k < last; ++k) {
    zk = mod(zk * z, mw);
    mpz_class kk = k;
    int e = strip(kk, p);
    mpz_class term = zk / prime_power(p, e);
    term = mod(term * inverse_mod(kk, mr), mr);
    if (k % 2 == 0) term = -term;
    sum += term;
  }
  return Padic::from_residue(sum, p, r, x.cap());
}

Padic iwasawa_log(long n, long p, int prec) {
  return iwasawa_log(Padic::from_integer(n, p, prec));
}

Padic padic_exp(const Padic& x) {
  const long p = x.prime();
  if (x.is_exact_zero()) return x.one_like();
  if (x.valuation_bound() < 1) {
    throw PreconditionError("padic_exp: argument must have valuation >= 1");
  }
  const int target = x.absolute_precision();
  if (x.is_zero()) return x.one_like().add_bigoh(target);
  const int v = *x.valuation();

  // x^k/k! has valuation >= k*v - (k-1)/(p-1), increasing in k.
  long last = 1;
  while (last * v - (last - 1) / (p - 1) < target) ++last;
  const int extra = static_cast<int>((last - 1) / (p - 1)) + 1;
  const mpz_class& mt = prime_power(p, target);
  const mpz_class& mw = prime_power(p, target + extra);

  mpz_class xv = x.unit() * prime_power(p, v);
  mpz_class sum = 1, xk = 1, fact_unit = 1;
  int fact_val = 0;
  for (long k = 1; k < last; ++k) {
    xk = mod(xk * xv, mw);
    mpz_class kk = k;
    fact_val += strip(kk, p);
    fact_unit = mod(fact_unit * kk, mt);
    mpz_class term = xk / prime_power(p, fact_val);
    sum += mod(term * inverse_mod(fact_unit, mt), mt);
  }
  return Padic::from_residue(sum, p, target, x.cap());
}

}  // namespace padicw1
