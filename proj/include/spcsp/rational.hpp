#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace spcsp {

// Exact rational, always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational parse(const std::string& text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  mpz_class floor() const;
  mpz_class ceil() const;
  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_{0};
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace spcsp
