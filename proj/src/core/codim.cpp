#include "symm/core/codim.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "symm/core/errors.hpp"

namespace symm {

namespace {

using Monomial = Codim::Monomial;

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

/// Factor n into (prime, multiplicity). n is expected to be small (group
/// orders), so trial division is enough.
std::vector<std::pair<std::uint64_t, unsigned>> factor(Integer n) {
  if (n <= 0) throw std::invalid_argument("log2 of a non-positive number");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; Integer(p) * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) {
    if (!n.fits_ulong_p()) throw std::invalid_argument("log2 argument has a prime factor beyond 64 bits");
    out.emplace_back(n.get_ui(), 1);
  }
  return out;
}

struct Interval {
  Rational lo, hi;
};

/// Certified enclosure of log2(p) with `bits` bits of working precision.
Interval log2_enclosure(std::uint64_t p, mpfr_prec_t bits) {
  mpfr_t x, r;
  mpfr_init2(x, 64);
  mpfr_init2(r, bits);
  mpfr_set_ui(x, static_cast<unsigned long>(p), MPFR_RNDN);
  Interval out;
  mpq_t q;
  mpq_init(q);
  mpfr_log2(r, x, MPFR_RNDD);
  mpfr_get_q(q, r);
  out.lo = Rational(q);
  mpfr_log2(r, x, MPFR_RNDU);
  mpfr_get_q(q, r);
  out.hi = Rational(q);
  mpq_clear(q);
  mpfr_clear(r);
  mpfr_clear(x);
  return out;
}

Rational pow(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Codim::Codim(long v) {
  if (v != 0) terms_[{}] = v;
}

Codim::Codim(const Rational& v) {
  if (v != 0) terms_[{}] = v;
}

Codim Codim::log2(const Integer& n) {
  Codim c;
  for (auto [p, e] : factor(n)) {
    if (p == 2) {
      c.terms_[{}] += e;
    } else {
      c.terms_[{{p, 1}}] += e;
    }
  }
  c.normalize();
  return c;
}

Codim Codim::log2(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("log2 of a non-positive number");
  return log2(Integer(q.get_num())) - log2(Integer(q.get_den()));
}

void Codim::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second.canonicalize();
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

bool Codim::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Codim::as_rational() const {
  if (!is_rational()) throw std::logic_error("codimension " + to_string() + " is irrational");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Codim Codim::operator+(const Codim& o) const {
  Codim r = *this;
  for (const auto& [m, c] : o.terms_) r.terms_[m] += c;
  r.normalize();
  return r;
}

Codim Codim::operator-() const {
  Codim r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Codim Codim::operator-(const Codim& o) const { return *this + (-o); }

Codim Codim::operator*(const Codim& o) const {
  Codim r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.terms_[multiply(ma, mb)] += ca * cb;
  r.normalize();
  return r;
}

int Codim::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_.begin()->second);

  std::vector<std::uint64_t> primes;
  for (const auto& [m, c] : terms_)
    for (auto [p, e] : m) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  // Every log2(p) is positive, so each monomial is increasing in every
  // variable and its range over the box is [value at lo, value at hi].
  for (mpfr_prec_t bits = 128; bits <= (mpfr_prec_t{1} << 15); bits *= 2) {
    std::map<std::uint64_t, Interval> box;
    for (auto p : primes) box[p] = log2_enclosure(p, bits);
    Rational lo = 0, hi = 0;
    for (const auto& [m, c] : terms_) {
      Rational mlo = 1, mhi = 1;
      for (auto [p, e] : m) {
        mlo *= pow(box[p].lo, e);
        mhi *= pow(box[p].hi, e);
      }
      if (c > 0) {
        lo += c * mlo;
        hi += c * mhi;
      } else {
        lo += c * mhi;
        hi += c * mlo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw InvariantViolation("cannot certify the sign of codimension " + to_string());
}

std::strong_ordering operator<=>(const Codim& a, const Codim& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Codim::approx() const {
  double v = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (auto [p, e] : m) {
      double l = std::log2(static_cast<double>(p));
      for (unsigned i = 0; i < e; ++i) t *= l;
    }
    v += t;
  }
  return v;
}

std::string Codim::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest-degree terms first; the constant goes last.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational coeff = c;
    if (!first) {
      os << (coeff < 0 ? " - " : " + ");
      coeff = abs(coeff);
    } else if (coeff < 0 && !m.empty()) {
      os << "-";
      coeff = -coeff;
    }
    first = false;
    if (m.empty()) {
      os << coeff.get_str();
      continue;
    }
    if (coeff != 1) os << coeff.get_str() << "*";
    bool first_factor = true;
    for (auto [p, e] : m) {
      if (!first_factor) os << "*";
      os << "log2(" << p << ")";
      if (e > 1) os << "^" << e;
      first_factor = false;
    }
  }
  return os.str();
}

Codim bound_step(const Codim& x) { return x * (x + Codim(1)); }

Codim iterate_f(const Codim& x, std::size_t k) {
  Codim r = x;
  for (std::size_t i = 0; i < k; ++i) r = bound_step(r);
  return r;
}

Rational iterate_f(const Rational& x, std::size_t k) {
  Rational r = x;
  for (std::size_t i = 0; i < k; ++i) r = r * (r + 1);
  return r;
}

}  // namespace symm
