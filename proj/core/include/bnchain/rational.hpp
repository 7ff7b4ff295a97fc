#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bnchain {

/// Exact rational number over 64-bit integers.
///
/// Always stored in lowest terms with a positive denominator. Every
/// operation is computed in 128-bit intermediates and throws
/// std::overflow_error if the reduced result does not fit back into
/// 64 bits, so results are either exact or rejected.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  /// Largest integer not exceeding the value.
  std::int64_t floor() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q" with q printed even when it is 1 (the wire format).
  std::string str() const;

  /// Accepts "p/q", "p", surrounding whitespace is not allowed.
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Representative of `a` modulo `m` in [0, m). Requires m > 0.
Rational mod(const Rational& a, const Rational& m);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
/// Least common multiple; throws std::overflow_error past 64 bits.
std::int64_t lcm64(std::int64_t a, std::int64_t b);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace bnchain
