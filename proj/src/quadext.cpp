#include "winlose/quadext.hpp"

#include <ostream>
#include <stdexcept>

namespace winlose {

int QuadExt::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the sign is decided by comparing a^2 with 5 b^2.
  // a^2 = 5 b^2 is impossible for nonzero rationals (sqrt 5 is irrational).
  const Rational lhs = a_ * a_;
  const Rational rhs = Rational(5) * b_ * b_;
  if (lhs == rhs) throw std::logic_error("QuadExt: a^2 == 5 b^2 with nonzero parts");
  const bool rational_part_dominates = lhs > rhs;
  return rational_part_dominates ? sa : sb;
}

std::string QuadExt::str() const {
  if (is_rational()) return a_.str();
  return a_.str() + " + " + b_.str() + "*sqrt(5)";
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  // (a + b r)(c + d r) = (ac + 5bd) + (ad + bc) r, r = sqrt(5)
  Rational na = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) throw std::domain_error("QuadExt: division by zero");
  // 1/(c + d r) = (c - d r) / (c^2 - 5 d^2)
  const Rational norm = o.a_ * o.a_ - Rational(5) * o.b_ * o.b_;
  if (norm.is_zero()) throw std::logic_error("QuadExt: zero norm with nonzero element");
  *this *= QuadExt(o.a_ / norm, -o.b_ / norm);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

}  // namespace winlose
