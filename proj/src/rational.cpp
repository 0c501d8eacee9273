#include "soltes/rational.hpp"

#include "soltes/error.hpp"

namespace soltes {

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw Error(ErrorCode::kParamOutOfRange, "zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw Error(ErrorCode::kParse, "not a rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class d(std::string{den});
  if (d == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(mpz_class(std::string{num}), d);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw Error(ErrorCode::kParamOutOfRange, "division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace soltes
