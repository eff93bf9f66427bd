#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlog/axioms.hpp"
#include "tlog/shifts.hpp"

using namespace tlog;

namespace {

Element w(long n, Scalar c = 1) { return Element::unit(PsiPosition::omega(n), c); }
Element b(int copy, long k, Scalar c = 1) { return Element::unit(PsiPosition::in_copy(copy, k), c); }

bool has_failure(const Report& r, const std::string& needle) {
  return r.plain().find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("last-copy tail shift passes every check") {
  Model m = Model::with_copies(2);
  ShiftedCouple c(m, SCut{1}, b(1, 0) - b(1, 5));
  CHECK(c.in_shift_set(b(1, -7)));
  CHECK_FALSE(c.in_shift_set(b(0, 40)));
  CHECK_FALSE(c.in_shift_set(w(3)));
  Report r = shift_check(c, 1000, 1);
  INFO(r.plain());
  CHECK(r.ok());
}

TEST_CASE("shifted psi case split") {
  Model m = Model::with_copies(2);
  Element eps = b(1, 0) - b(1, 5);
  ShiftedCouple c(m, SCut{1}, eps);
  Sampler rng(4);
  for (int i = 0; i < 2000; ++i) {
    Element x = rng.element(m);
    if (x.is_zero()) {
      CHECK(c.psi(x).is_inf());
      continue;
    }
    Element v = m.psi(x);
    if (c.in_shift_set(v)) {
      CHECK(c.psi(x) == v + eps);
      CHECK(c.succ(c.psi(x)) == m.succ(v) + eps);
    } else {
      CHECK(c.psi(x) == v);
    }
    auto sols = c.succ_solutions(x);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == c.succ(x));
    CHECK(c.psi(x - c.succ(x)) == c.succ(x));
    if (m.sign(x) < 0) CHECK(c.psi(x) - c.succ(c.psi(x)) == v - m.succ(v));
  }
}

TEST_CASE("whole-psi shift is a plain shift") {
  Model m = Model::with_copies(1);
  Element eps = b(0, 2) - w(0);
  ShiftedCouple c(m, std::nullopt, eps);
  CHECK(c.whole_psi());
  Sampler rng(6);
  for (int i = 0; i < 1000; ++i) {
    Element x = rng.element(m);
    if (!x.is_zero()) CHECK(c.psi(x) == m.psi(x) + eps);
  }
}

TEST_CASE("the minus s0 shift has least psi-value 0") {
  Model m = Model::prime();
  ShiftedCouple c(m, std::nullopt, -m.succ(Element()));
  CHECK(c.psi(Element::basis_e(0)).is_zero());
  Report r = shift_check(c, 500, 2);
  CHECK_FALSE(r.ok());
  CHECK(has_failure(r, "least element is 0"));
}

TEST_CASE("shift hypothesis errors") {
  Model m = Model::with_copies(2);
  CHECK_THROWS_AS(ShiftedCouple(m, SCut{1}, b(0, 0) - b(0, 5)), DomainError);
  CHECK_THROWS_AS(ShiftedCouple(m, SCut{1}, Element()), DomainError);
  CHECK_THROWS_AS(ShiftedCouple(m, SCut{3}, b(1, 0) - b(1, 5)), DomainError);
}

TEST_CASE("random shifts") {
  Sampler rng(17);
  for (int i = 0; i < 6; ++i) {
    Model m = Model::with_copies(static_cast<int>(rng.uniform(1, 3)), rng.coin(0.5) ? 2 : 0);
    ShiftedCouple c = random_shift(m, rng);
    CHECK_FALSE(c.whole_psi());
    CHECK(c.in_shift_set(m.psi(c.eps())));
    Report r = shift_check(c, 300, 100 + i);
    INFO(c.describe());
    INFO(r.plain());
    CHECK(r.ok());
  }
}

TEST_CASE("precontraction map") {
  BaseCouple c(Model::prime());
  Element e0 = Element::basis_e(0), e1 = Element::basis_e(1);
  CHECK(precontraction_chi(c, -e0) == -e1);
  CHECK(precontraction_chi(c, e0) == e1);
  CHECK(precontraction_chi(c, Element()).is_zero());
  for (int copies = 0; copies <= 2; ++copies) {
    BaseCouple cc(Model::with_copies(copies));
    Report r = precontraction_check(cc, 1000, copies);
    INFO(r.plain());
    CHECK(r.ok());
  }
  ShiftedCouple sc(Model::with_copies(2), SCut{1}, b(1, 0) - b(1, 5));
  CHECK(precontraction_check(sc, 1000, 9).ok());
}

TEST_CASE("single-point mutation of the precontraction map is detected") {
  Sampler rng(23);
  const long samples = 400;
  for (int copies = 0; copies <= 2; ++copies) {
    Model m = Model::with_copies(copies);
    BaseCouple c(m);
    std::vector<Element> pool = axiom_pool(m, samples, 8);
    for (int trial = 0; trial < 12; ++trial) {
      Element at = pool[rng.uniform(0, samples - 1)];
      if (at.is_inf()) continue;
      Element good = precontraction_chi(c, at);
      Element bad;
      switch (trial % 3) {
        case 0: bad = good + m.s0(); break;
        case 1: bad = Scalar(2) * good + w(0); break;
        default: bad = copies ? -good + b(0, 0) : -good - w(2); break;
      }
      if (bad == good) continue;
      ChiMap mutated = [&](const Element& x) { return x == at ? bad : precontraction_chi(c, x); };
      Report r = precontraction_check(m, mutated, samples, 8);
      INFO("chi at ", format_element(at), " -> ", format_element(bad));
      CHECK_FALSE(r.ok());
    }
  }
}

TEST_CASE("chi collision between psi and a shift") {
  Report r = chi_collision_demo(2000, 3);
  INFO(r.plain());
  CHECK(r.ok());
}
