#include "winlose/rational.hpp"

#include <ostream>

namespace winlose {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::of(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  Rational r;
  r.v_ = mpq_class(num) / mpq_class(den);
  return r;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class num(text);
      Rational r;
      r.v_ = mpq_class(num);
      return r;
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    return of(num, den);
  } catch (const std::invalid_argument&) {
    throw std::domain_error("Rational: cannot parse '" + text + "'");
  }
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace winlose
