#pragma once

#include <iosfwd>
#include <string>

#include "winlose/rational.hpp"

namespace winlose {

// Element of the quadratic extension Q(sqrt 5), stored as a + b*sqrt(5) with
// canonical rational components. Supports +, -, *, / and exact sign; nothing
// more is needed, since the only irrational equilibrium in this toolkit has
// golden-ratio coordinates.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT: rationals embed implicitly
  QuadExt(long n) : a_(n) {}                 // NOLINT
  QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  // Exact sign of a + b*sqrt(5), by comparing a^2 against 5 b^2 with the
  // appropriate case split. Never approximates.
  int sign() const;

  std::string str() const;

  QuadExt operator-() const { return {-a_, -b_}; }
  QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

 private:
  Rational a_;
  Rational b_;
};

// Uniform accessors so templated game code works over both scalar fields.
inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const QuadExt& x) { return x.sign(); }

}  // namespace winlose
