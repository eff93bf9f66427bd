#pragma once

#include "tlog/couple.hpp"
#include "tlog/report.hpp"
#include "tlog/sampling.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace tlog {

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at column " + std::to_string(pos + 1)), column(pos + 1) {}
  size_t column;
};

// coefficient times one basis reference, as written
struct Literal {
  enum class Basis { e, w, b };
  Scalar coeff = 1;
  Basis basis = Basis::w;
  long index = 0;  // n for e/w, k for b
  int copy = 0;    // copy id for b

  Element value() const;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { zero, inf, var, lit, add, sub, neg, psi, s, p, delta, integral, chi };
  Kind kind = Kind::zero;
  std::string name;  // var
  Literal lit;
  long n = 1;  // delta index
  std::vector<TermPtr> args;

  // int and chi are sugar over s and psi
  bool primitive() const { return kind != Kind::integral && kind != Kind::chi; }
};

bool operator==(const Term& a, const Term& b);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { lt, eq, not_, and_, or_ };
  Kind kind = Kind::eq;
  TermPtr lhs, rhs;               // lt, eq
  std::vector<FormulaPtr> args;  // not, and, or
};

bool operator==(const Formula& a, const Formula& b);

// constructors
TermPtr make_term(Term::Kind k, std::vector<TermPtr> args = {});
TermPtr make_var(std::string name);
TermPtr make_lit(Literal l);
TermPtr make_delta(long n, TermPtr t);
FormulaPtr make_cmp(Formula::Kind k, TermPtr a, TermPtr b);
FormulaPtr make_conn(Formula::Kind k, std::vector<FormulaPtr> args);

TermPtr parse_term(const std::string& text);
FormulaPtr parse_formula(const std::string& text);
// a term without variables or function symbols, evaluated in the group
Element parse_element(const std::string& text);

std::string format_term(const Term& t);
std::string format_formula(const Formula& f);

struct Environment {
  const Couple* couple = nullptr;
  std::map<std::string, Element> vars;
};

Element eval_term(const Term& t, const Environment& env);
bool eval_formula(const Formula& f, const Environment& env);

// random term over the model's basis and the given variables
TermPtr random_term(Sampler& rng, const Model& m, const std::vector<std::string>& vars, int depth);
Literal random_literal(Sampler& rng, const Model& m);

// round trip, definitional identities of the sugar and delta, infinity table
Report lang_check(long samples, std::uint64_t seed);

}  // namespace tlog
