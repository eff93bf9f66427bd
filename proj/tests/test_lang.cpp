#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlog/lang.hpp"

using namespace tlog;

namespace {

Element w(long n) { return Element::unit(PsiPosition::omega(n)); }

Element ev(const std::string& text, const Couple& c, std::map<std::string, Element> vars = {}) {
  return eval_term(*parse_term(text), Environment{&c, std::move(vars)});
}

bool holds(const std::string& text, const Couple& c, std::map<std::string, Element> vars = {}) {
  return eval_formula(*parse_formula(text), Environment{&c, std::move(vars)});
}

}  // namespace

TEST_CASE("parse shapes") {
  TermPtr t = parse_term("psi(e0 + e1)");
  CHECK(t->kind == Term::Kind::psi);
  REQUIRE(t->args.size() == 1);
  CHECK(t->args[0]->kind == Term::Kind::add);
  TermPtr d = parse_term("d2(e0)");
  CHECK(d->kind == Term::Kind::delta);
  CHECK(d->n == 2);
  FormulaPtr f = parse_formula("s(0) < e0 + e0");
  CHECK(f->kind == Formula::Kind::lt);
  CHECK(parse_term("int(x)")->kind == Term::Kind::integral);
  CHECK_FALSE(parse_term("int(x)")->primitive());
  CHECK_FALSE(parse_term("chi(x)")->primitive());
  CHECK(parse_term("p(x)")->primitive());
  FormulaPtr g = parse_formula("not (x < y) and (x = y or y < x)");
  CHECK(g->kind == Formula::Kind::and_);
  CHECK(g->args[0]->kind == Formula::Kind::not_);
}

TEST_CASE("scalar and basis literals") {
  CHECK(parse_element("sqrt2*e2") == Scalar::sqrt_of(2) * Element::basis_e(2));
  CHECK(parse_element("(1/2 + sqrt(2))*w3") == (Scalar::frac(1, 2) + Scalar::sqrt_of(2)) * w(3));
  CHECK(parse_element("b[c1,-2]") == Element::unit(PsiPosition::in_copy(1, -2)));
  CHECK(parse_element("b[1,-2]") == parse_element("b[c1,-2]"));
  CHECK(parse_element("-3/4*e0 - e1") == Scalar::frac(-3, 4) * Element::basis_e(0) - Element::basis_e(1));
  CHECK(parse_element("0").is_zero());
}

TEST_CASE("evaluation examples") {
  BaseCouple c(Model::prime());
  CHECK(ev("psi(e0 + e1)", c) == Element::basis_e(0));
  CHECK(ev("p(0)", c).is_inf());
  CHECK(holds("s(0) < e0 + e0", c));
  CHECK(ev("s(0)", c) == w(0));
  CHECK(ev("p(w3)", c) == w(2));
  CHECK(ev("p(w0)", c).is_inf());
  CHECK(ev("d3(e1 + e1 + e1)", c) == Element::basis_e(1));
  CHECK(ev("x - psi(x)", c, {{"x", w(4)}}) == w(4) - w(0));
  CHECK(ev("chi(e0)", c).is_inf());
  CHECK(ev("chi(-e0)", c) == -Element::basis_e(1));
  CHECK(ev("int(e0)", c) == -Element::basis_e(1));
}

TEST_CASE("infinity conventions") {
  BaseCouple c(Model::prime());
  CHECK(ev("psi(0)", c).is_inf());
  CHECK(ev("psi(0) + e0", c).is_inf());
  CHECK(ev("-psi(0)", c).is_inf());
  CHECK(ev("s(inf)", c).is_inf());
  CHECK(ev("p(inf)", c).is_inf());
  CHECK(ev("d2(inf)", c).is_inf());
  CHECK(holds("e7 < inf", c));
  CHECK_FALSE(holds("inf < inf", c));
  CHECK(holds("inf = psi(0)", c));
  CHECK_FALSE(holds("inf < e0", c));
}

TEST_CASE("errors") {
  BaseCouple c(Model::prime());
  CHECK_THROWS_AS(parse_term("d0(e1)"), SyntaxError);
  CHECK_THROWS_AS(parse_term("psi(e0"), SyntaxError);
  CHECK_THROWS_AS(parse_term("e0 +"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("e0 + e1"), SyntaxError);
  CHECK_THROWS_AS(parse_term("psi"), SyntaxError);
  CHECK_THROWS_AS(ev("x + e0", c), DomainError);
  CHECK_THROWS_AS(ev("b[c0,0]", c), DomainError);
  try {
    parse_term("e0 + # e1");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.column == 6);
  }
}

TEST_CASE("format is canonical") {
  for (const char* text : {"psi(e0 + e1)", "s(0) < e0 + e0", "d2(x) - -y", "not x = y or x < y and y < x"}) {
    bool formula = std::string(text).find_first_of("<=") != std::string::npos;
    std::string once = formula ? format_formula(*parse_formula(text)) : format_term(*parse_term(text));
    std::string twice = formula ? format_formula(*parse_formula(once)) : format_term(*parse_term(once));
    CHECK(once == twice);
  }
}

TEST_CASE("language suite") {
  Report r = lang_check(300, 11);
  INFO(r.plain());
  CHECK(r.ok());
}
