#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "tilegroup/error.hpp"

namespace tilegroup {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact element p + q*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// Rationals are kept in lowest terms (gmp canonicalizes), so two values are
/// equal exactly when their rational and surd parts agree. A discriminant of
/// 0 marks a plain rational: it mixes freely with any field. Two values
/// carrying different non-zero discriminants never mix.
class QuadraticRational {
 public:
  QuadraticRational() = default;
  QuadraticRational(long value);  // NOLINT: integers convert implicitly
  explicit QuadraticRational(Rational value);
  QuadraticRational(Rational rat, Rational surd, unsigned long discriminant);

  /// sqrt(d) itself.
  static QuadraticRational sqrt_of(unsigned long discriminant);
  /// The golden ratio (1 + sqrt(5)) / 2.
  static QuadraticRational golden();

  const Rational& rat_part() const { return rat_; }
  const Rational& surd_part() const { return surd_; }
  unsigned long discriminant() const { return disc_; }
  bool is_rational() const { return surd_ == 0; }
  bool is_zero() const { return rat_ == 0 && surd_ == 0; }
  bool is_integer() const;

  /// Exact sign in {-1, 0, +1}.
  int sign() const;
  /// Report-only approximation; never feed this back into a decision.
  double to_double() const;
  /// Largest integer not exceeding the value.
  Integer floor() const;
  /// Galois conjugate p - q*sqrt(d).
  QuadraticRational conjugate() const;

  QuadraticRational operator-() const;
  QuadraticRational& operator+=(const QuadraticRational& other);
  QuadraticRational& operator-=(const QuadraticRational& other);
  QuadraticRational& operator*=(const QuadraticRational& other);
  QuadraticRational& operator/=(const QuadraticRational& other);

  friend QuadraticRational operator+(QuadraticRational a, const QuadraticRational& b) { return a += b; }
  friend QuadraticRational operator-(QuadraticRational a, const QuadraticRational& b) { return a -= b; }
  friend QuadraticRational operator*(QuadraticRational a, const QuadraticRational& b) { return a *= b; }
  friend QuadraticRational operator/(QuadraticRational a, const QuadraticRational& b) { return a /= b; }

  friend bool operator==(const QuadraticRational& a, const QuadraticRational& b);
  friend std::strong_ordering operator<=>(const QuadraticRational& a, const QuadraticRational& b);

  /// Text form "p/q + r/s*sqrt(d)"; zero parts are omitted.
  std::string to_string() const;
  /// Inverse of to_string; accepts omitted parts, "sqrt(d)" without a
  /// coefficient and either sign between the parts.
  static QuadraticRational parse(std::string_view text);

  std::size_t hash() const;

 private:
  unsigned long common_discriminant(const QuadraticRational& other) const;

  Rational rat_{0};
  Rational surd_{0};
  unsigned long disc_ = 0;
};

using QR = QuadraticRational;

int sign(const QuadraticRational& x);
QuadraticRational abs(const QuadraticRational& x);
QuadraticRational min(const QuadraticRational& a, const QuadraticRational& b);
QuadraticRational max(const QuadraticRational& a, const QuadraticRational& b);
std::ostream& operator<<(std::ostream& os, const QuadraticRational& x);

bool is_square_free(unsigned long n);

}  // namespace tilegroup

template <>
struct std::hash<tilegroup::QuadraticRational> {
  std::size_t operator()(const tilegroup::QuadraticRational& x) const noexcept { return x.hash(); }
};
