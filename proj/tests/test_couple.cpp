#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlog/axioms.hpp"
#include "tlog/couple.hpp"
#include "tlog/sampling.hpp"

using namespace tlog;

namespace {

Element w(long n, Scalar c = 1) { return Element::unit(PsiPosition::omega(n), c); }
Element b(int copy, long k, Scalar c = 1) { return Element::unit(PsiPosition::in_copy(copy, k), c); }
Element e(long n) { return Element::basis_e(n); }
Element vec(std::vector<Scalar> v) { return from_vector(v); }

// sign from the e-basis coefficients, computed here without the library's conversion
int lex_oracle(const Element& x) {
  long top = -1;
  for (const auto& [p, c] : x.terms()) top = std::max(top, p.k);
  for (long i = 0; i <= top; ++i) {
    Scalar r;
    for (const auto& [p, c] : x.terms())
      if (p.k >= i) r += c;
    if (!r.is_zero()) return r.sign();
  }
  return 0;
}

}  // namespace

TEST_CASE("group operations") {
  CHECK(e(0).div(2) == w(0, Scalar::frac(1, 2)));
  CHECK(e(1) == w(1) - w(0));
  Element x = w(3, 5) - b(0, 2);
  CHECK((x + (-x)).is_zero());
  CHECK((Scalar(3) * x).div(3) == x);
}

TEST_CASE("sign examples") {
  Model m = Model::with_copies(1);
  CHECK(m.sign(vec({0, 1})) == 1);
  CHECK(m.sign(vec({1, -3, 0, 9})) == 1);
  Element x = w(2) - b(0, 1, Scalar::frac(1, 3));
  CHECK(m.sign(x - x) == 0);
  CHECK(m.sign(b(0, 0) - w(4)) == 1);
  CHECK(m.sign(Scalar::frac(8, 7) * e(0) - b(0, 0)) == 1);
  CHECK_THROWS_AS(m.sign(Element::inf()), DomainError);
}

TEST_CASE("sign agrees with the lexicographic rule") {
  Sampler rng(8);
  Model m = Model::prime();
  for (int i = 0; i < 10000; ++i) {
    Element x = rng.omega_element(8);
    int want = lex_oracle(x);
    CHECK(m.sign(x) == want);
    CHECK(lex_sign(to_vector(x)) == want);
  }
}

TEST_CASE("copy units are squeezed between s^n 0 and (1+q) e0") {
  Model m = Model::with_copies(3);
  for (int c = 0; c < 3; ++c)
    for (long k = -6; k <= 6; ++k) {
      Element beta = b(c, k);
      for (long n = 0; n <= 60; ++n) CHECK(m.sign(beta - w(n)) > 0);
      for (long den : {7L, 100L, 1000000L}) CHECK(m.sign((Scalar(1) + Scalar::frac(1, den)) * e(0) - beta) > 0);
      CHECK(m.less(beta, b(c, k + 1)));
      if (c + 1 < 3) CHECK(m.less(b(c, 50), b(c + 1, -50)));
    }
}

TEST_CASE("order is translation invariant") {
  Sampler rng(2);
  Model m = Model::with_copies(2, 5);
  for (int i = 0; i < 3000; ++i) {
    Element x = rng.element(m), y = rng.element(m), z = rng.element(m);
    CHECK(m.compare(x, y) == m.compare(x + z, y + z));
    CHECK(m.compare(x, y) == -m.compare(y, x));
    if (m.less(x, y) && m.less(y, z)) CHECK(m.less(x, z));
  }
}

TEST_CASE("psi examples") {
  Model m = Model::with_copies(1, 2);
  CHECK(m.psi(Scalar::sqrt_of(2) * e(2)) == vec({1, 1, 1}));
  CHECK(m.psi(Element()).is_inf());
  CHECK(m.psi(Element::inf()).is_inf());
  CHECK(m.psi(b(0, 3) - b(0, 0)) == b(0, 1));
}

TEST_CASE("successor examples") {
  Model m = Model::with_copies(1);
  CHECK(m.succ(Element()) == vec({1}));
  CHECK(m.succ(vec({1, 1, Scalar::frac(1, 2)})) == vec({1, 1, 1}));
  CHECK(m.succ(b(0, 0)) == b(0, 1));
  CHECK_THROWS_AS(m.succ(Element::inf()), DomainError);
  Sampler rng(4);
  for (int i = 0; i < 2000; ++i) {
    Element x = rng.element(m);
    Element s = m.succ(x);
    CHECK(m.psi(x - s) == s);
  }
}

TEST_CASE("pred examples") {
  Model m = Model::prime();
  CHECK(m.pred(vec({1, 1})) == vec({1}));
  CHECK(m.pred(e(0)).is_inf());
  CHECK(m.pred(e(1)).is_inf());
  CHECK(m.pred(Element()).is_inf());
  CHECK(m.pred(Element::inf()).is_inf());
}

TEST_CASE("integral, contraction, dagger and prime") {
  Model m = Model::prime();
  CHECK(m.integral(Element()) == vec({-1}));
  CHECK(m.contraction(vec({-1})) == vec({0, -1}));
  CHECK(m.contraction(vec({1})).is_inf());
  Element x = e(2) - Scalar(3) * e(5);
  CHECK(m.prime_of(m.integral(x)) == x);
  CHECK(m.dagger(x) == m.psi(x));
}

TEST_CASE("archimedean classes") {
  Model m = Model::with_copies(1);
  CHECK(m.class_compare(e(1), e(0)) < 0);
  Element x = w(3) - b(0, 1);
  CHECK(m.class_compare(x, Scalar(2) * x) == 0);
  CHECK(m.class_compare(Element(), x) < 0);
  for (long n = 1; n <= 6; ++n) CHECK_FALSE(m.in_positive_integrals(w(n - 1)));
  CHECK(m.in_positive_integrals(Scalar(2) * e(0)));
}

TEST_CASE("s = psi far from zero") {
  Sampler rng(12);
  Model m = Model::with_copies(2);
  Element s0 = m.s0();
  for (Scalar q : {Scalar::frac(1, 2), Scalar(1), Scalar(7)}) {
    Element bound = (Scalar(1) + q) * s0;
    for (int i = 0; i < 1000; ++i) {
      Element x = rng.element(m);
      if (x.is_zero() || !m.less(bound, m.abs(x))) continue;
      CHECK(m.succ(x) == m.psi(x));
    }
  }
  CHECK(m.succ(s0) != m.psi(s0));
}

TEST_CASE("successor through a new top copy") {
  Sampler rng(21);
  for (int copies = 0; copies <= 3; ++copies) {
    Model m = Model::with_copies(copies);
    InsertResult ins = insert_copies(m.order, {SCut{copies}});
    Model big{ins.order, 0};
    for (int i = 0; i < 1000; ++i) {
      Element a = rng.element(m);
      Element gamma = Element::unit(PsiPosition::in_copy(ins.new_ids[0], rng.uniform(-5, 5)));
      CHECK(m.succ(a) == big.psi(a - gamma));
    }
  }
}

TEST_CASE("axiom suite across models") {
  Report r = axiom_check_models(2000, 99);
  INFO(r.plain());
  CHECK(r.ok());
  Report q = axiom_check_models(1000, 5, 2);
  INFO(q.plain());
  CHECK(q.ok());
}

TEST_CASE("single-point mutations are detected") {
  Sampler rng(77);
  const long samples = 400;
  for (int copies = 0; copies <= 2; ++copies) {
    Model m = Model::with_copies(copies);
    BaseCouple base(m);
    std::vector<Element> pool = axiom_pool(m, samples, 5);
    for (int trial = 0; trial < 12; ++trial) {
      const Element& at = pool[rng.uniform(0, samples - 1)];
      for (auto target : {MutatedCouple::Target::psi, MutatedCouple::Target::succ}) {
        bool psi = target == MutatedCouple::Target::psi;
        if (!psi && at.is_inf()) continue;
        Element good = psi ? base.psi(at) : base.succ(at);
        Element bad;
        switch (trial % 4) {
          case 0: bad = good.is_inf() ? m.s0() : good + m.s0(); break;
          case 1: bad = good.is_inf() ? Element() : Element::unit(m.order.succ(good.terms().begin()->first)); break;
          case 2: bad = good.is_inf() || good == m.s0() ? w(3) : m.s0(); break;
          default: bad = good.is_inf() ? w(0, 2) : Scalar(2) * good; break;
        }
        MutatedCouple mutant(base, target, at, bad);
        Report r = axiom_check(mutant, samples, 5);
        INFO(std::string(psi ? "psi" : "s"), " at ", format_element(at), " -> ", format_element(bad));
        CHECK_FALSE(r.ok());
      }
    }
  }
}

TEST_CASE("basis conversion") {
  CHECK(vec({1, 1}) == w(1));
  std::vector<Scalar> v{0, -5, Scalar::frac(1, 3)};
  CHECK(to_vector(vec(v)) == v);
  CHECK_THROWS_AS(to_vector(b(0, 0)), DomainError);
  Sampler rng(6);
  for (int i = 0; i < 1000; ++i) {
    Element x = rng.omega_element(7);
    CHECK(from_vector(to_vector(x)) == x);
  }
}
