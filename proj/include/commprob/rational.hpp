#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace commprob {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction of arbitrary-precision integers, always kept in lowest
/// terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  /// Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double value);
  /// Parses "n/d" or "n".
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  double to_double() const;
  /// Always "num/den", also for integers.
  std::string str() const;
  /// "num/den" followed by a 6-place decimal, for human-facing output.
  std::string pretty() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

Rational abs(const Rational& r);
/// r^e for integer e >= 0.
Rational pow(const Rational& r, unsigned e);
BigInt floor(const Rational& r);
BigInt factorial(unsigned n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace commprob
