#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace farey {

using Int = boost::multiprecision::cpp_int;

// Exact rational number. Always stored reduced with a positive denominator;
// every operation preserves that invariant. No floating point is involved
// anywhere except the explicit to_double() conversion used for reporting.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : num_(n), den_(1) {}       // NOLINT(google-explicit-constructor)

  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r(*this);
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational reciprocal() const {
    if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den_, num_);
  }

  // Text form is always "p/q", including a unit denominator ("3/1").
  std::string str() const {
    return num_.str() + "/" + den_.str();
  }

  // Accepts "p/q" or a bare integer "n".
  static Rational parse(std::string_view text) {
    const auto parse_int = [text](std::string_view part) {
      std::string_view digits = part;
      if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
      if (digits.empty() ||
          digits.find_first_not_of("0123456789") != std::string_view::npos) {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
      }
      return Int(std::string(part));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_int(text));
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  // Fixed-point decimal rendering with round-half-even on the final digit.
  std::string decimal(unsigned digits) const {
    Int n = num_;
    std::string sign;
    if (n < 0) {
      sign = "-";
      n = -n;
    }
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int whole = n / den_;
    Int rem = n % den_;
    Int frac = rem * scale / den_;
    const Int frac_rem = rem * scale % den_;
    const Int twice = frac_rem * 2;
    if (twice > den_ || (twice == den_ && frac % 2 != 0)) frac += 1;
    if (frac == scale) {
      whole += 1;
      frac = 0;
    }
    if (digits == 0) return sign + whole.str();
    std::string f = frac.str();
    f.insert(f.begin(), digits - f.size(), '0');
    return sign + whole.str() + "." + f;
  }

  double to_double() const { return std::stod(decimal(18)); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

inline Rational mediant(const Rational& a, const Rational& b) {
  return Rational(a.num() + b.num(), a.den() + b.den());
}

}  // namespace farey
