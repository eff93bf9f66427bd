#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <mpfr.h>

#include "tlog/scalar.hpp"

#include <random>
#include <vector>

using namespace tlog;

namespace {

Scalar q(long p, long r = 1) { return Scalar::frac(p, r); }
Scalar quad(mpq_class a, mpq_class b, long d) { return Scalar(std::move(a), std::move(b), d); }

// sign of a + b sqrt(d) by interval evaluation at high precision
int interval_sign(const mpq_class& a, const mpq_class& b, long d) {
  const mpfr_prec_t prec = 4096;
  mpfr_t lo, hi, s_lo, s_hi, t;
  for (mpfr_t* v : {&lo, &hi, &s_lo, &s_hi, &t}) mpfr_init2(*v, prec);
  mpfr_set_ui(s_lo, static_cast<unsigned long>(d), MPFR_RNDD);
  mpfr_sqrt(s_lo, s_lo, MPFR_RNDD);
  mpfr_set_ui(s_hi, static_cast<unsigned long>(d), MPFR_RNDU);
  mpfr_sqrt(s_hi, s_hi, MPFR_RNDU);
  // b * sqrt(d): the bound pairing depends on the sign of b
  bool bneg = sgn(b) < 0;
  mpfr_set_q(t, b.get_mpq_t(), MPFR_RNDD);
  mpfr_mul(lo, t, bneg ? s_hi : s_lo, MPFR_RNDD);
  mpfr_set_q(t, b.get_mpq_t(), MPFR_RNDU);
  mpfr_mul(hi, t, bneg ? s_lo : s_hi, MPFR_RNDU);
  mpfr_set_q(t, a.get_mpq_t(), MPFR_RNDD);
  mpfr_add(lo, lo, t, MPFR_RNDD);
  mpfr_set_q(t, a.get_mpq_t(), MPFR_RNDU);
  mpfr_add(hi, hi, t, MPFR_RNDU);
  int r = 2;  // undecided
  if (mpfr_sgn(lo) > 0) r = 1;
  else if (mpfr_sgn(hi) < 0) r = -1;
  else if (sgn(a) == 0 && sgn(b) == 0) r = 0;
  for (mpfr_t* v : {&lo, &hi, &s_lo, &s_hi, &t}) mpfr_clear(*v);
  return r;
}

}  // namespace

TEST_CASE("sign examples") {
  CHECK(quad(1, -1, 2).sign() == -1);
  CHECK(Scalar::sqrt_of(2) * Scalar::sqrt_of(2) == q(2));
  CHECK((Scalar::sqrt_of(2) * Scalar::sqrt_of(2)).is_rational());
  CHECK(Scalar().sign() == 0);
  CHECK(quad(-3, 2, 2).sign() == -1);  // 2 sqrt2 < 3
  CHECK(quad(3, -2, 2).sign() == 1);
  CHECK(quad(mpq_class(-7, 5), 1, 2).sign() == 1);
}

TEST_CASE("canonical form") {
  Scalar x = Scalar(mpq_class(6, -4));
  CHECK(x.rat() == mpq_class(-3, 2));
  CHECK(x.rat().get_den() > 0);
  Scalar y = quad(1, 0, 2);
  CHECK(y.is_rational());
  CHECK(y.radicand() == 0);
  CHECK(y == q(1));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(q(1) / Scalar(), DomainError);
  CHECK_THROWS_AS(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), DomainError);
  CHECK_THROWS_AS(Scalar::sqrt_of(4), DomainError);
  CHECK_THROWS_AS(parse_scalar("1/0"), DomainError);
  CHECK_NOTHROW(Scalar::sqrt_of(2) + q(1, 3));  // rationals mix with any field
}

TEST_CASE("field axioms on a grid") {
  std::vector<Scalar> grid;
  for (long a : {-2, 0, 1, 3})
    for (long b : {-1, 0, 2}) grid.push_back(quad(mpq_class(a, 2), mpq_class(b, 3), b ? 5 : 0));
  for (const auto& x : grid)
    for (const auto& y : grid) {
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x - y) + y == x);
      CHECK((x * y).sign() == x.sign() * y.sign());
      if (!y.is_zero()) CHECK((x / y) * y == x);
      for (const auto& z : grid) {
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
}

TEST_CASE("randomized field laws and multiplicative sign") {
  std::mt19937_64 gen(17);
  auto draw = [&] {
    std::uniform_int_distribution<long> n(-50, 50), den(1, 30);
    return quad(mpq_class(n(gen), den(gen)), mpq_class(n(gen), den(gen)), 7);
  };
  for (int i = 0; i < 2000; ++i) {
    Scalar x = draw(), y = draw();
    CHECK((x * y).sign() == x.sign() * y.sign());
    CHECK(compare(x, y) == -compare(y, x));
    if (!x.is_zero()) CHECK(x * (q(1) / x) == q(1));
  }
}

TEST_CASE("sign agrees with interval evaluation") {
  std::mt19937_64 gen(20240611);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  const long radicands[] = {2, 3, 5, 6, 7, 10, 11, 13};
  int undecided = 0;
  for (int i = 0; i < 10000; ++i) {
    long d = radicands[i % 8];
    mpq_class a(num(gen), den(gen)), b(num(gen), den(gen));
    a.canonicalize();
    b.canonicalize();
    if (i % 10 == 0) b = 0;
    int want = interval_sign(a, b, d);
    if (want == 2) {
      ++undecided;
      continue;
    }
    CHECK(quad(a, b, sgn(b) ? d : 0).sign() == want);
  }
  CHECK(undecided == 0);
}

TEST_CASE("sign near cancellation: continued fraction convergents") {
  // h/k from the expansion of sqrt(d) puts h - k sqrt(d) within 1/k of zero
  for (long d : {2L, 3L, 5L, 7L, 13L}) {
    mpz_class a0 = sqrt(mpz_class(d)), m = 0, den = 1, an = a0;
    mpz_class h_prev = 1, h = a0, k_prev = 0, k = 1;
    for (int it = 0; it < 60; ++it) {
      for (int side : {-1, 1}) {
        mpq_class a(mpz_class(-side) * h), b(mpz_class(side) * k);
        int want = interval_sign(a, b, d);
        REQUIRE(want != 2);
        CHECK(quad(a, b, d).sign() == want);
      }
      m = den * an - m;
      den = (d - m * m) / den;
      an = (a0 + m) / den;
      mpz_class h2 = an * h + h_prev, k2 = an * k + k_prev;
      h_prev = h;
      k_prev = k;
      h = h2;
      k = k2;
    }
  }
}

TEST_CASE("text round trip") {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<long> n(-99, 99), den(1, 40);
  for (int i = 0; i < 1000; ++i) {
    Scalar x = quad(mpq_class(n(gen), den(gen)), mpq_class(i % 3 ? n(gen) : 0, den(gen)), 3);
    CHECK(parse_scalar(x.str()) == x);
  }
  CHECK(parse_scalar("sqrt2") == Scalar::sqrt_of(2));
  CHECK(parse_scalar("sqrt(2)") == Scalar::sqrt_of(2));
  CHECK(parse_scalar("3/4+1/2*sqrt(5)") == quad(mpq_class(3, 4), mpq_class(1, 2), 5));
}

TEST_CASE("floor and rational_between") {
  CHECK(Scalar::sqrt_of(2).floor() == 1);
  CHECK((-Scalar::sqrt_of(2)).floor() == -2);
  CHECK(q(7, 2).floor() == 3);
  std::mt19937_64 gen(9);
  std::uniform_int_distribution<long> n(-60, 60), den(1, 20);
  for (int i = 0; i < 500; ++i) {
    Scalar x = quad(mpq_class(n(gen), den(gen)), mpq_class(n(gen), den(gen)), 2);
    Scalar y = x + quad(mpq_class(1, 1000 + i), 0, 0);
    Scalar r(rational_between(x, y));
    CHECK(x < r);
    CHECK(r < y);
  }
}
