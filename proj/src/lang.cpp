#include "tlog/lang.hpp"

#include <cctype>

namespace tlog {

Element Literal::value() const {
  switch (basis) {
    case Basis::e: return coeff * Element::basis_e(index);
    case Basis::w: return Element::unit(PsiPosition::omega(index), coeff);
    case Basis::b: return Element::unit(PsiPosition::in_copy(copy, index), coeff);
  }
  return Element();
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name || a.n != b.n || a.args.size() != b.args.size()) return false;
  if (a.kind == Term::Kind::lit && !(a.lit == b.lit)) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  if (a.lhs && !(*a.lhs == *b.lhs)) return false;
  if (a.rhs && !(*a.rhs == *b.rhs)) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

TermPtr make_term(Term::Kind k, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->args = std::move(args);
  return t;
}

TermPtr make_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::var;
  t->name = std::move(name);
  return t;
}

TermPtr make_lit(Literal l) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::lit;
  t->lit = std::move(l);
  return t;
}

TermPtr make_delta(long n, TermPtr arg) {
  if (n < 1) throw DomainError("delta index must be at least 1");
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::delta;
  t->n = n;
  t->args = {std::move(arg)};
  return t;
}

FormulaPtr make_cmp(Formula::Kind k, TermPtr a, TermPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

FormulaPtr make_conn(Formula::Kind k, std::vector<FormulaPtr> args) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->args = std::move(args);
  return f;
}

namespace {

bool all_digits(const std::string& s, size_t from) {
  if (s.size() <= from) return false;
  for (size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool is_reserved(const std::string& w) {
  static const char* kw[] = {"inf", "psi", "s", "p", "int", "chi", "and", "or", "not", "sqrt", "b"};
  for (const char* k : kw)
    if (w == k) return true;
  if (w.rfind("sqrt", 0) == 0 && all_digits(w, 4)) return true;
  return (w[0] == 'e' || w[0] == 'w' || w[0] == 'd') && all_digits(w, 1);
}

class Parser {
public:
  explicit Parser(const std::string& text) : s_(text) {}

  TermPtr whole_term() {
    TermPtr t = term();
    end();
    return t;
  }
  FormulaPtr whole_formula() {
    FormulaPtr f = disj();
    end();
    return f;
  }

private:
  const std::string& s_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, i_); }
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  void end() {
    if (peek() != '\0') fail("unexpected '" + std::string(1, s_[i_]) + "'");
  }
  std::string peek_word() {
    ws();
    size_t j = i_;
    if (j < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
    return s_.substr(i_, j - i_);
  }
  bool eat_word(const std::string& w) {
    if (peek_word() != w) return false;
    i_ += w.size();
    return true;
  }
  long natural() {
    ws();
    size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == i_) fail("expected a number");
    long v = std::stol(s_.substr(i_, j - i_));
    i_ = j;
    return v;
  }

  // formulas

  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (eat_word("or")) f = make_conn(Formula::Kind::or_, {f, conj()});
    return f;
  }
  FormulaPtr conj() {
    FormulaPtr f = negation();
    while (eat_word("and")) f = make_conn(Formula::Kind::and_, {f, negation()});
    return f;
  }
  FormulaPtr negation() {
    if (eat_word("not")) return make_conn(Formula::Kind::not_, {negation()});
    if (peek() == '(') {
      size_t save = i_;
      try {
        ++i_;
        FormulaPtr f = disj();
        expect(')');
        char c = peek();
        if (c != '<' && c != '=' && c != '+' && c != '-') return f;
      } catch (const SyntaxError&) {
      }
      i_ = save;
    }
    TermPtr a = term();
    if (eat('<')) return make_cmp(Formula::Kind::lt, a, term());
    if (eat('=')) return make_cmp(Formula::Kind::eq, a, term());
    fail("expected '<' or '='");
  }

  // terms

  TermPtr term() {
    TermPtr t = unary();
    for (;;) {
      if (eat('+')) t = make_term(Term::Kind::add, {t, unary()});
      else if (eat('-')) t = make_term(Term::Kind::sub, {t, unary()});
      else return t;
    }
  }
  TermPtr unary() {
    if (eat('-')) return make_term(Term::Kind::neg, {unary()});
    return atom();
  }
  TermPtr call(Term::Kind k) {
    expect('(');
    TermPtr a = term();
    expect(')');
    return make_term(k, {a});
  }

  bool scalar_start() {
    char c = peek();
    std::string w = peek_word();
    return std::isdigit(static_cast<unsigned char>(c)) || w == "sqrt" || (w.size() > 4 && w.rfind("sqrt", 0) == 0 && all_digits(w, 4));
  }
  Scalar scalar_factor() {
    std::string w = peek_word();
    if (w.rfind("sqrt", 0) == 0) {
      long d = 0;
      if (w.size() > 4) {
        i_ += w.size();
        d = std::stol(w.substr(4));
      } else {
        i_ += 4;
        bool paren = eat('(');
        d = natural();
        if (paren) expect(')');
      }
      if (!valid_radicand(d)) fail("radicand must be a positive non-square");
      return Scalar::sqrt_of(d);
    }
    long num = natural();
    if (eat('/')) {
      long den = natural();
      if (den == 0) fail("zero denominator");
      return Scalar::frac(num, den);
    }
    return Scalar(num);
  }
  // parenthesized scalar directly followed by '*'
  bool paren_scalar(Scalar& out) {
    size_t save = i_;
    ++i_;
    int depth = 1;
    size_t j = i_;
    while (j < s_.size() && depth > 0) {
      if (s_[j] == '(') ++depth;
      if (s_[j] == ')') --depth;
      ++j;
    }
    if (depth != 0) {
      i_ = save;
      return false;
    }
    size_t after = j;
    while (after < s_.size() && std::isspace(static_cast<unsigned char>(s_[after]))) ++after;
    if (after >= s_.size() || s_[after] != '*') {
      i_ = save;
      return false;
    }
    try {
      out = parse_scalar(s_.substr(i_, j - 1 - i_));
    } catch (const DomainError& e) {
      fail(e.what());
    }
    i_ = after + 1;
    return true;
  }

  Literal basisref(Scalar coeff) {
    Literal l;
    l.coeff = std::move(coeff);
    size_t at = i_;
    std::string w = peek_word();
    if (w == "b") {
      i_ += 1;
      expect('[');
      ws();
      eat('c');
      l.copy = static_cast<int>(natural());
      expect(',');
      bool neg = eat('-');
      l.index = natural() * (neg ? -1 : 1);
      expect(']');
      l.basis = Literal::Basis::b;
      return l;
    }
    if ((w.size() > 1 && (w[0] == 'e' || w[0] == 'w')) && all_digits(w, 1)) {
      l.basis = w[0] == 'e' ? Literal::Basis::e : Literal::Basis::w;
      l.index = std::stol(w.substr(1));
      i_ += w.size();
      return l;
    }
    i_ = at;
    fail("expected a basis reference e<n>, w<n> or b[id,k]");
  }

  TermPtr atom() {
    char c = peek();
    if (c == '(') {
      Scalar coeff;
      if (paren_scalar(coeff)) return make_lit(basisref(coeff));
      ++i_;
      TermPtr t = term();
      expect(')');
      return t;
    }
    if (scalar_start()) {
      size_t at = i_;
      Scalar coeff = scalar_factor();
      bool starred = false;
      while (eat('*')) {
        starred = true;
        if (!scalar_start()) break;
        coeff *= scalar_factor();
      }
      if (!starred) {
        if (coeff.is_zero() && s_.substr(at, i_ - at).find_first_of("/s") == std::string::npos)
          return make_term(Term::Kind::zero);
        fail("a scalar must multiply a basis reference");
      }
      return make_lit(basisref(coeff));
    }
    std::string w = peek_word();
    if (w.empty()) fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    if (w == "inf") {
      i_ += w.size();
      return make_term(Term::Kind::inf);
    }
    static const std::pair<const char*, Term::Kind> fns[] = {{"psi", Term::Kind::psi}, {"s", Term::Kind::s},
                                                             {"p", Term::Kind::p},     {"int", Term::Kind::integral},
                                                             {"chi", Term::Kind::chi}};
    for (const auto& [name, k] : fns)
      if (w == name) {
        i_ += w.size();
        return call(k);
      }
    if (w[0] == 'd' && all_digits(w, 1)) {
      size_t at = i_;
      i_ += w.size();
      long n = std::stol(w.substr(1));
      if (n < 1) {
        i_ = at;
        fail("delta index must be at least 1");
      }
      expect('(');
      TermPtr a = term();
      expect(')');
      return make_delta(n, a);
    }
    if (w == "b" || ((w[0] == 'e' || w[0] == 'w') && all_digits(w, 1))) return make_lit(basisref(Scalar(1)));
    if (is_reserved(w)) fail("reserved word '" + w + "'");
    i_ += w.size();
    return make_var(w);
  }
};

std::string format_scalar_factor(const Scalar& c) {
  bool plain = c.sign() > 0 && (c.is_rational() || c.rat() == 0);
  return plain ? c.str() : "(" + c.str() + ")";
}

std::string format_literal(const Literal& l) {
  std::string ref;
  switch (l.basis) {
    case Literal::Basis::e: ref = "e" + std::to_string(l.index); break;
    case Literal::Basis::w: ref = "w" + std::to_string(l.index); break;
    case Literal::Basis::b: ref = "b[" + copy_name(l.copy) + "," + std::to_string(l.index) + "]"; break;
  }
  if (l.coeff == Scalar(1)) return ref;
  return format_scalar_factor(l.coeff) + "*" + ref;
}

// level 1: sums, 2: unary minus, 3: atoms
std::string fmt(const Term& t, int level) {
  using K = Term::Kind;
  auto wrap = [&](std::string s, int own) { return own < level ? "(" + s + ")" : s; };
  switch (t.kind) {
    case K::zero: return "0";
    case K::inf: return "inf";
    case K::var: return t.name;
    case K::lit: return format_literal(t.lit);
    case K::add: return wrap(fmt(*t.args[0], 1) + " + " + fmt(*t.args[1], 2), 1);
    case K::sub: return wrap(fmt(*t.args[0], 1) + " - " + fmt(*t.args[1], 2), 1);
    case K::neg: return wrap("-" + fmt(*t.args[0], 2), 2);
    case K::psi: return "psi(" + fmt(*t.args[0], 1) + ")";
    case K::s: return "s(" + fmt(*t.args[0], 1) + ")";
    case K::p: return "p(" + fmt(*t.args[0], 1) + ")";
    case K::integral: return "int(" + fmt(*t.args[0], 1) + ")";
    case K::chi: return "chi(" + fmt(*t.args[0], 1) + ")";
    case K::delta: return "d" + std::to_string(t.n) + "(" + fmt(*t.args[0], 1) + ")";
  }
  return "?";
}

// level 1: or, 2: and, 3: not and comparisons
std::string fmt(const Formula& f, int level) {
  using K = Formula::Kind;
  auto wrap = [&](std::string s, int own) { return own < level ? "(" + s + ")" : s; };
  switch (f.kind) {
    case K::lt: return format_term(*f.lhs) + " < " + format_term(*f.rhs);
    case K::eq: return format_term(*f.lhs) + " = " + format_term(*f.rhs);
    case K::not_: return "not " + fmt(*f.args[0], 3);
    case K::and_: return wrap(fmt(*f.args[0], 2) + " and " + fmt(*f.args[1], 3), 2);
    case K::or_: return wrap(fmt(*f.args[0], 1) + " or " + fmt(*f.args[1], 2), 1);
  }
  return "?";
}

Element eval(const Term& t, const Environment* env) {
  using K = Term::Kind;
  auto arg = [&](size_t i) { return eval(*t.args[i], env); };
  auto couple = [&]() -> const Couple& {
    if (!env || !env->couple) throw DomainError("function symbols need a couple to evaluate against");
    return *env->couple;
  };
  switch (t.kind) {
    case K::zero: return Element();
    case K::inf: return Element::inf();
    case K::var: {
      if (!env) throw DomainError("unbound variable " + t.name);
      auto it = env->vars.find(t.name);
      if (it == env->vars.end()) throw DomainError("unbound variable " + t.name);
      return it->second;
    }
    case K::lit: {
      Element v = t.lit.value();
      if (env && env->couple) env->couple->model().check(v);
      return v;
    }
    case K::add:
    case K::sub: {
      Element a = arg(0), b = arg(1);
      if (a.is_inf() || b.is_inf()) return Element::inf();
      return t.kind == K::add ? a + b : a - b;
    }
    case K::neg: {
      Element a = arg(0);
      return a.is_inf() ? a : -a;
    }
    case K::delta: {
      Element a = arg(0);
      return a.is_inf() ? a : a.div(t.n);
    }
    case K::psi: {
      Element a = arg(0);
      return a.is_inf() || a.is_zero() ? Element::inf() : couple().psi(a);
    }
    case K::s: {
      Element a = arg(0);
      return a.is_inf() ? a : couple().succ(a);
    }
    case K::p: {
      Element a = arg(0);
      return a.is_inf() ? a : couple().pred(a);
    }
    case K::integral: {
      Element a = arg(0);
      return a.is_inf() ? a : couple().integral(a);
    }
    case K::chi: {
      Element a = arg(0);
      return a.is_inf() ? a : couple().contraction(a);
    }
  }
  return Element();
}

}  // namespace

TermPtr parse_term(const std::string& text) { return Parser(text).whole_term(); }
FormulaPtr parse_formula(const std::string& text) { return Parser(text).whole_formula(); }

Element parse_element(const std::string& text) { return eval(*parse_term(text), nullptr); }

std::string format_term(const Term& t) { return fmt(t, 1); }
std::string format_formula(const Formula& f) { return fmt(f, 1); }

Element eval_term(const Term& t, const Environment& env) { return eval(t, &env); }

bool eval_formula(const Formula& f, const Environment& env) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::lt:
    case K::eq: {
      Element a = eval_term(*f.lhs, env), b = eval_term(*f.rhs, env);
      if (a.is_inf() || b.is_inf()) return f.kind == K::eq ? a.is_inf() && b.is_inf() : b.is_inf() && !a.is_inf();
      if (f.kind == K::eq) return a == b;
      if (!env.couple) throw DomainError("comparison needs a couple to evaluate against");
      return env.couple->less(a, b);
    }
    case K::not_: return !eval_formula(*f.args[0], env);
    case K::and_: return eval_formula(*f.args[0], env) && eval_formula(*f.args[1], env);
    case K::or_: return eval_formula(*f.args[0], env) || eval_formula(*f.args[1], env);
  }
  return false;
}

}  // namespace tlog

namespace tlog {

Literal random_literal(Sampler& rng, const Model& m) {
  Literal l;
  l.coeff = rng.coin(0.4) ? Scalar(1) : rng.scalar(m, true);
  long r = rng.uniform(0, m.order.size() ? 2 : 1);
  if (r == 0) {
    l.basis = Literal::Basis::e;
    l.index = rng.uniform(0, 6);
  } else if (r == 1) {
    l.basis = Literal::Basis::w;
    l.index = rng.uniform(0, 6);
  } else {
    l.basis = Literal::Basis::b;
    l.copy = m.order.copies()[rng.uniform(0, m.order.size() - 1)];
    l.index = rng.uniform(-3, 3);
  }
  return l;
}

TermPtr random_term(Sampler& rng, const Model& m, const std::vector<std::string>& vars, int depth) {
  using K = Term::Kind;
  if (depth <= 0 || rng.coin(0.25)) {
    long r = rng.uniform(0, 9);
    if (r == 0) return make_term(K::zero);
    if (r == 1) return make_term(K::inf);
    if (r < 5 && !vars.empty()) return make_var(vars[rng.uniform(0, static_cast<long>(vars.size()) - 1)]);
    return make_lit(random_literal(rng, m));
  }
  static const K ops[] = {K::add, K::sub, K::neg, K::psi, K::s, K::p, K::delta, K::integral, K::chi};
  K k = ops[rng.uniform(0, 8)];
  if (k == K::add || k == K::sub)
    return make_term(k, {random_term(rng, m, vars, depth - 1), random_term(rng, m, vars, depth - 1)});
  if (k == K::delta) return make_delta(rng.uniform(1, 5), random_term(rng, m, vars, depth - 1));
  return make_term(k, {random_term(rng, m, vars, depth - 1)});
}

Report lang_check(long samples, std::uint64_t seed) {
  using K = Term::Kind;
  Report r;
  r.title = "language";
  r.seed = seed;
  r.samples = samples;
  Sampler rng(seed);
  Model m = Model::with_copies(2, 2);
  BaseCouple c(m);
  std::vector<std::string> vars{"x", "y", "z"};

  auto& rt = r.add("term round trip");
  auto& ft = r.add("formula round trip");
  auto& et = r.add("element round trip");
  for (long i = 0; i < samples; ++i) {
    TermPtr t = random_term(rng, m, vars, 4);
    std::string text = format_term(*t);
    rt.expect(*parse_term(text) == *t && format_term(*parse_term(text)) == text, text);
    TermPtr u = random_term(rng, m, vars, 2);
    FormulaPtr f = make_cmp(rng.coin(0.5) ? Formula::Kind::lt : Formula::Kind::eq, t, u);
    if (rng.coin(0.5)) f = make_conn(Formula::Kind::not_, {f});
    if (rng.coin(0.5)) f = make_conn(rng.coin(0.5) ? Formula::Kind::and_ : Formula::Kind::or_, {f, make_cmp(Formula::Kind::eq, u, t)});
    ft.expect(*parse_formula(format_formula(*f)) == *f, format_formula(*f));
    Element x = rng.element(m);
    et.expect(parse_element(format_element(x)) == x, format_element(x));
  }

  auto& in = r.add("int t = t - s(t)");
  auto& ch = r.add("chi t = psi(t) - s(psi(t)) below zero");
  auto& d1 = r.add("d1 is the identity");
  auto& dn = r.add("dn(n t) = t");
  auto& ps = r.add("p inverts s");
  for (long i = 0; i < samples; ++i) {
    Environment env{&c, {}};
    for (const auto& v : vars) env.vars[v] = rng.element(m);
    TermPtr t = random_term(rng, m, vars, 3);
    std::string why = "t=" + format_term(*t);
    auto holds = [&](TermPtr a, TermPtr b) { return eval_formula(*make_cmp(Formula::Kind::eq, a, b), env); };
    in.expect(holds(make_term(K::integral, {t}), make_term(K::sub, {t, make_term(K::s, {t})})), why);
    Element tv = eval_term(*t, env);
    TermPtr pt = make_term(K::psi, {t});
    TermPtr rhs = !tv.is_inf() && c.sign(tv) < 0 ? make_term(K::sub, {pt, make_term(K::s, {pt})}) : make_term(K::inf);
    ch.expect(holds(make_term(K::chi, {t}), rhs), why);
    d1.expect(holds(make_delta(1, t), t), why);
    long n = rng.uniform(2, 6);
    TermPtr sum = t;
    for (long j = 1; j < n; ++j) sum = make_term(K::add, {sum, t});
    dn.expect(holds(make_delta(n, sum), t), why + " n=" + std::to_string(n));
    if (!tv.is_inf() && c.in_psi_set(tv)) ps.expect(holds(make_term(K::p, {make_term(K::s, {t})}), t), why);
  }

  // the default-value display, and comparisons against infinity
  auto& tab = r.add("infinity table");
  Environment env{&c, {{"g", rng.element(m)}}};
  if (env.vars["g"].is_zero()) env.vars["g"] = m.s0();
  for (const char* eq : {"-inf = inf", "g + inf = inf", "inf + g = inf", "inf + inf = inf", "psi(0) = inf",
                         "psi(inf) = inf", "g - inf = inf", "inf - g = inf", "s(inf) = inf", "p(inf) = inf",
                         "d3(inf) = inf", "int(inf) = inf", "chi(inf) = inf", "p(0) = inf", "g < inf",
                         "s(g) < inf", "not inf < inf", "not inf < g", "not g = inf"})
    tab.expect(eval_formula(*parse_formula(eq), env), eq);
  return r;
}

}  // namespace tlog
