#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace symm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact codimension value.
///
/// Codimensions in the shipped instances are either set cardinalities
/// (rational) or base-2 logarithms of subgroup indices/orders, which are
/// irrational in general. A Codim is a polynomial with rational coefficients
/// in the numbers log2(p), p an odd prime; log2(2) = 1 folds into the
/// coefficients. That class is closed under +, * and f(x) = x(x+1).
///
/// Equality is polynomial identity. Order is decided by evaluating the
/// difference on certified rational enclosures of each log2(p), refining the
/// precision until the enclosure excludes zero. No floating-point value ever
/// decides a comparison.
class Codim {
 public:
  /// Sorted (prime, exponent) pairs; the empty monomial is the constant term.
  using Monomial = std::vector<std::pair<std::uint64_t, unsigned>>;

  Codim() = default;
  Codim(long v);  // NOLINT(google-explicit-constructor)
  Codim(const Rational& v);  // NOLINT(google-explicit-constructor)

  /// log2(n) for n > 0.
  static Codim log2(const Integer& n);
  static Codim log2(const Rational& q);

  bool is_rational() const;
  /// Throws std::logic_error when the value is irrational.
  Rational as_rational() const;
  int sign() const;
  /// Nearest double; reporting only.
  double approx() const;
  /// e.g. "2 + log2(3)", "log2(3)^2 + log2(3)".
  std::string to_string() const;

  Codim operator+(const Codim& o) const;
  Codim operator-(const Codim& o) const;
  Codim operator*(const Codim& o) const;
  Codim operator-() const;

  friend bool operator==(const Codim&, const Codim&) = default;
  friend std::strong_ordering operator<=>(const Codim& a, const Codim& b);

 private:
  void normalize();

  std::map<Monomial, Rational> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Codim& c) { return os << c.to_string(); }

/// f(x) = x(x+1).
Codim bound_step(const Codim& x);
/// f^k(x), exact.
Codim iterate_f(const Codim& x, std::size_t k);
Rational iterate_f(const Rational& x, std::size_t k);

}  // namespace symm
