#include "tlog/scalar.hpp"

#include <cctype>
#include <sstream>

namespace tlog {

bool valid_radicand(long d) {
  if (d < 2) return false;
  mpz_class z(d), r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r * r != z;
}

Scalar::Scalar(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) != 0 && !valid_radicand(d_))
    throw DomainError("radicand must be a positive nonsquare integer");
  normalize();
}

void Scalar::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

Scalar Scalar::frac(long p, long q) {
  if (q == 0) throw DomainError("division by zero");
  return Scalar(mpq_class(p, q));
}

Scalar Scalar::sqrt_of(long d) { return Scalar(0, 1, d); }

static long common_radicand(const Scalar& x, const Scalar& y) {
  long dx = x.radicand(), dy = y.radicand();
  if (dx && dy && dx != dy) throw DomainError("radicand mismatch");
  return dx ? dx : dy;
}

int Scalar::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  mpq_class lhs = a_ * a_, rhs = b_ * b_ * d_;
  return lhs > rhs ? sa : sb;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& y) {
  if (y.d_ == 0) {
    a_ += y.a_;
    return *this;
  }
  d_ = common_radicand(*this, y);
  a_ += y.a_;
  b_ += y.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
  if (y.d_ == 0) {
    a_ -= y.a_;
    return *this;
  }
  d_ = common_radicand(*this, y);
  a_ -= y.a_;
  b_ -= y.b_;
  normalize();
  return *this;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  Scalar r = x;
  return r += y;
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  Scalar r = x;
  return r -= y;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  long d = common_radicand(x, y);
  Scalar r;
  r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * d;
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  r.d_ = d;
  r.normalize();
  return r;
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) throw DomainError("division by zero");
  long d = common_radicand(x, y);
  // 1/(a+b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d)
  mpq_class n = y.a_ * y.a_ - y.b_ * y.b_ * d;
  Scalar inv;
  inv.a_ = y.a_ / n;
  inv.b_ = -y.b_ / n;
  inv.d_ = d;
  inv.normalize();
  return x * inv;
}

mpz_class Scalar::floor() const {
  // start from a floating estimate of sqrt, then fix up with exact signs
  mpz_class guess;
  if (sgn(b_) == 0) {
    mpz_fdiv_q(guess.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
    return guess;
  }
  mpq_class t = b_ * b_ * d_;  // (b sqrt d)^2
  mpz_class num = t.get_num() * t.get_den(), root;
  mpz_sqrt(root.get_mpz_t(), num.get_mpz_t());
  mpq_class approx(root, t.get_den());
  if (sgn(b_) < 0) approx = -approx;
  approx += a_;
  mpz_fdiv_q(guess.get_mpz_t(), approx.get_num_mpz_t(), approx.get_den_mpz_t());
  while ((*this - Scalar(mpq_class(guess))).sign() < 0) guess -= 1;
  while ((Scalar(mpq_class(guess + 1)) - *this).sign() <= 0) guess += 1;
  return guess;
}

mpq_class rational_between(const Scalar& x, const Scalar& y) {
  if (!(x < y)) throw DomainError("rational_between needs x < y");
  if (x.is_rational() && y.is_rational()) return (x.rat() + y.rat()) / 2;
  for (mpz_class scale = 2;; scale *= 2) {
    Scalar sx = x * Scalar(mpq_class(scale));
    mpq_class cand(sx.floor() + 1, scale);
    cand.canonicalize();
    if (Scalar(cand) > x && Scalar(cand) < y) return cand;
  }
}

std::string Scalar::str() const {
  std::ostringstream os;
  if (sgn(b_) == 0) {
    os << a_.get_str();
    return os.str();
  }
  if (sgn(a_) != 0) os << a_.get_str() << (sgn(b_) > 0 ? "+" : "-");
  else if (sgn(b_) < 0) os << "-";
  mpq_class mb = ::abs(b_);
  if (mb != 1) os << mb.get_str() << "*";
  os << "sqrt(" << d_ << ")";
  return os.str();
}

namespace {

struct ScalarLexer {
  std::string_view s;
  size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool at_digit() {
    ws();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  mpz_class integer() {
    ws();
    size_t j = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (j == i) throw DomainError("expected digits in scalar '" + std::string(s) + "'");
    return mpz_class(std::string(s.substr(j, i - j)));
  }
  bool sqrt_word() {
    ws();
    if (s.substr(i, 4) == "sqrt") {
      i += 4;
      return true;
    }
    return false;
  }
  long radicand() {
    bool paren = eat('(');
    mpz_class d = integer();
    if (paren && !eat(')')) throw DomainError("expected ')' after radicand");
    if (!d.fits_slong_p()) throw DomainError("radicand too large");
    return d.get_si();
  }
  // one signed term: [num[/den]] [*] [sqrt d]
  Scalar term() {
    bool neg = false;
    while (true) {
      if (eat('-')) neg = !neg;
      else if (eat('+')) {
      } else break;
    }
    mpq_class coef = 1;
    bool have_num = false;
    if (at_digit()) {
      mpz_class p = integer(), q = 1;
      if (eat('/')) q = integer();
      if (q == 0) throw DomainError("division by zero");
      coef = mpq_class(p, q);
      coef.canonicalize();
      have_num = true;
    }
    size_t save = i;
    bool star = eat('*');
    if (sqrt_word()) {
      long d = radicand();
      if (!valid_radicand(d)) throw DomainError("radicand must be a positive nonsquare integer");
      return Scalar(0, neg ? mpq_class(-coef) : coef, d);
    }
    i = save;
    (void)star;
    if (!have_num) throw DomainError("expected scalar in '" + std::string(s) + "'");
    return Scalar(neg ? mpq_class(-coef) : coef);
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
  ScalarLexer lx{text};
  Scalar acc = lx.term();
  while (true) {
    lx.ws();
    if (lx.i >= text.size()) break;
    if (text[lx.i] != '+' && text[lx.i] != '-') throw DomainError("trailing input in scalar '" + std::string(text) + "'");
    acc += lx.term();
  }
  return acc;
}

}  // namespace tlog
