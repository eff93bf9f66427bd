#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tlog {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a + b*sqrt(d). When b == 0 the radicand is dropped (d == 0), so a pure
// rational mixes with any quadratic field.
class Scalar {
public:
  Scalar() = default;
  Scalar(long n) : a_(n) {}
  Scalar(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }
  Scalar(mpq_class a, mpq_class b, long d);

  static Scalar frac(long p, long q);
  static Scalar sqrt_of(long d);  // 0 + 1*sqrt(d)

  const mpq_class& rat() const { return a_; }
  const mpq_class& irr() const { return b_; }
  long radicand() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return d_ == 0; }
  int sign() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y);
  Scalar& operator-=(const Scalar& y);
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend int compare(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0 && y.d_ == 0) {
      int c = cmp(x.a_, y.a_);
      return (c > 0) - (c < 0);
    }
    return (x - y).sign();
  }
  friend bool operator<(const Scalar& x, const Scalar& y) { return compare(x, y) < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return compare(x, y) > 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return compare(x, y) >= 0; }

  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  // greatest integer <= value, exact
  mpz_class floor() const;

  std::string str() const;

private:
  mpq_class a_, b_;
  long d_ = 0;
  void normalize();
};

// true when d is a positive integer that is not a perfect square
bool valid_radicand(long d);

// some rational strictly between x < y
mpq_class rational_between(const Scalar& x, const Scalar& y);

// text form p/q or p/q+r/s*sqrt(d); also accepts sqrtD and sqrt(D)
Scalar parse_scalar(std::string_view text);

}  // namespace tlog
