#include "commprob/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace commprob {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("Rational: non-finite double");
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // Scale the mantissa to an exact 53-bit integer.
  auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt num = scaled;
  BigInt den = 1;
  if (exponent >= 0) {
    num <<= exponent;
  } else {
    den <<= -exponent;
  }
  return Rational(std::move(num), std::move(den));
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    return Rational(BigInt(std::string(text.substr(0, slash))),
                    BigInt(std::string(text.substr(slash + 1))));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
}

double Rational::to_double() const {
  using boost::multiprecision::cpp_bin_float_double;
  return static_cast<double>(cpp_bin_float_double(num_) / cpp_bin_float_double(den_));
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

std::string Rational::pretty() const {
  std::ostringstream os;
  os << str() << " (" << std::fixed << std::setprecision(6) << to_double() << ")";
  return os.str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned e) {
  Rational out(1);
  for (unsigned i = 0; i < e; ++i) out *= r;
  return out;
}

BigInt floor(const Rational& r) {
  BigInt q = r.num() / r.den();
  if (r.num() < 0 && q * r.den() != r.num()) q -= 1;
  return q;
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace commprob
