#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace rlw {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator.  Text form "p/q", or "p"
// when q = 1.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  std::string to_string() const;
  static ExactRational parse(std::string_view text);

  ExactRational& operator+=(const ExactRational& o) { v_ += o.v_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { v_ -= o.v_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { v_ *= o.v_; return *this; }
  ExactRational& operator/=(const ExactRational& o);
  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.v_ == b.v_; }
  friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.v_ < b.v_; }
  friend bool operator>(const ExactRational& a, const ExactRational& b) { return b < a; }
  friend bool operator<=(const ExactRational& a, const ExactRational& b) { return !(b < a); }
  friend bool operator>=(const ExactRational& a, const ExactRational& b) { return !(a < b); }

 private:
  boost::multiprecision::cpp_rational v_;
};

BigInt binomial(int n, int k);  // 0 outside 0 <= k <= n

}  // namespace rlw
