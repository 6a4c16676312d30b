#include "rlw/rational.hpp"

#include "rlw/error.hpp"

namespace rlw {

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::Range, "zero denominator");
  v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.v_ == 0) fail(ErrorKind::Range, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::string ExactRational::to_string() const {
  const BigInt d = denominator();
  if (d == 1) return numerator().str();
  return numerator().str() + "/" + d.str();
}

ExactRational ExactRational::parse(std::string_view text) {
  auto integer = [&](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) fail(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') fail(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
    return BigInt(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(integer(text), 1);
  return ExactRational(integer(text.substr(0, slash)), integer(text.substr(slash + 1)));
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace rlw
