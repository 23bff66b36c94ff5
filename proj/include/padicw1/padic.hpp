#pragma once

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace padicw1 {

/// Raised when an input violates a documented precondition (odd prime,
/// irregularity, splitting, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a quantity that must be nonzero cannot be distinguished from
/// zero at the working precision. Never means "the value is zero".
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws PreconditionError unless p is an odd prime.
void require_odd_prime(long p);

/// p^n for a small prime, cached per thread.
const mpz_class& prime_power(long p, int n);

/// ord_p of a nonzero integer.
int ord_p(const mpz_class& n, long p);
int ord_p(long n, long p);

/// An element of Q_p known to finite precision.
///
/// The value is p^v * u + O(p^(v + r)) with u a unit in [0, p^r) and r the
/// relative precision. A value indistinguishable from zero is stored with
/// r = 0 and its absolute precision in place of v; an exact zero has
/// absolute precision kExact. Arithmetic propagates worst-case precision:
/// sums keep the minimum absolute precision, products and quotients the
/// minimum relative precision.
///
/// The cap is the working precision of the context that created the value.
/// It is only consulted when a fresh constant (0, 1, an integer) has to be
/// manufactured next to this value.
class Padic {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  Padic() = default;

  static Padic zero(long p, int cap, int absolute_precision = kExact);
  static Padic one(long p, int cap);
  static Padic from_integer(const mpz_class& n, long p, int cap);
  static Padic from_integer(long n, long p, int cap) {
    return from_integer(mpz_class(n), p, cap);
  }
  /// a/b with `cap` significant digits. Throws on b = 0.
  static Padic from_rational(const mpz_class& a, const mpz_class& b, long p,
                             int cap);
  static Padic from_rational(const mpq_class& q, long p, int cap);
  /// An exactly known rational, kept only up to O(p^absolute_precision).
  static Padic from_rational_abs(const mpq_class& q, long p,
                                 int absolute_precision, int cap);
  /// The integer `residue` read modulo p^absolute_precision.
  static Padic from_residue(const mpz_class& residue, long p,
                            int absolute_precision, int cap);

  long prime() const { return p_; }
  int cap() const { return cap_; }

  /// True when the value cannot be told apart from 0 at its precision.
  bool is_zero() const { return rel_ == 0; }
  bool is_exact_zero() const { return rel_ == 0 && val_ >= kExact; }
  bool is_exact() const { return is_exact_zero(); }

  /// Valuation of a nonzero value; nullopt for (approximate) zero.
  std::optional<int> valuation() const {
    if (is_zero()) return std::nullopt;
    return val_;
  }
  /// A lower bound on the valuation: the valuation itself, or the absolute
  /// precision of a zero.
  int valuation_bound() const { return val_; }
  int absolute_precision() const { return is_zero() ? val_ : val_ + rel_; }
  int relative_precision() const { return rel_; }
  const mpz_class& unit() const { return unit_; }

  /// Base-p digits of the unit, least significant first.
  std::vector<int> unit_digits() const;

  /// Integer representative modulo p^n of a value with nonnegative
  /// valuation. Requires n <= absolute_precision().
  mpz_class residue(int n) const;

  /// Forget digits at and beyond p^absolute_precision.
  Padic add_bigoh(int absolute_precision) const;

  /// Manufactured constants sharing this value's prime and cap.
  Padic zero_like() const { return zero(p_, cap_); }
  Padic one_like() const { return one(p_, cap_); }
  Padic integer_like(long n) const { return from_integer(n, p_, cap_); }

  Padic operator-() const;
  Padic& operator+=(const Padic& o);
  Padic& operator-=(const Padic& o);
  Padic& operator*=(const Padic& o);
  Padic& operator/=(const Padic& o);

  friend Padic operator+(Padic a, const Padic& b) { return a += b; }
  friend Padic operator-(Padic a, const Padic& b) { return a -= b; }
  friend Padic operator*(Padic a, const Padic& b) { return a *= b; }
  friend Padic operator/(Padic a, const Padic& b) { return a /= b; }

  Padic pow(long e) const;

  /// If the value is congruent to a small integer |n| < p^(r/2), return it.
  std::optional<long> as_small_integer() const;

  /// "u0 + u1*p + ... + O(p^k)" with at most `terms` digits spelled out.
  std::string to_string(int terms = 8) const;

 private:
  Padic(long p, int cap, int val, int rel, mpz_class unit)
      : p_(p), cap_(cap), val_(val), rel_(rel), unit_(std::move(unit)) {}
  void check_same_prime(const Padic& o) const;
  static Padic normalized(long p, int cap, int val, int rel, mpz_class n);

  long p_ = 0;
  int cap_ = 0;
  int val_ = kExact;
  int rel_ = 0;
  mpz_class unit_ = 0;
};

/// Number of leading p-adic digits on which a and b agree: ord_p(a - b),
/// capped by what the operands' precision can certify.
int agreement(const Padic& a, const Padic& b);

/// True when a and b agree modulo p^t.
inline bool agree_mod(const Padic& a, const Padic& b, int t) {
  return agreement(a, b) >= t;
}

/// The (p-1)-st root of unity congruent to u modulo p. Only u mod p matters,
/// so the result carries the full cap of u.
Padic teichmuller(const Padic& u);
Padic teichmuller_of_residue(long a, long p, int cap);

/// log_p on the Iwasawa branch: log_p(p) = 0 and log_p kills roots of unity.
Padic iwasawa_log(const Padic& x);
Padic iwasawa_log(long n, long p, int prec);

/// exp(x) for ord_p(x) >= 1.
Padic padic_exp(const Padic& x);

// Ring-element adaptors used by the templated series and q-expansion code.
inline Padic zero_like(const Padic& x) { return x.zero_like(); }
inline Padic one_like(const Padic& x) { return x.one_like(); }
inline Padic integer_like(const Padic& x, long n) { return x.integer_like(n); }
inline bool is_zero(const Padic& x) { return x.is_zero(); }

inline mpq_class zero_like(const mpq_class&) { return 0; }
inline mpq_class one_like(const mpq_class&) { return 1; }
inline mpq_class integer_like(const mpq_class&, long n) { return n; }
inline bool is_zero(const mpq_class& x) { return x == 0; }

}  // namespace padicw1
