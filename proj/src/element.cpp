#include "tlog/element.hpp"

#include <algorithm>
#include <sstream>

namespace tlog {

Element Element::inf() {
  Element e;
  e.inf_ = true;
  return e;
}

Element Element::unit(const PsiPosition& p, Scalar c) {
  Element e;
  e.add_term(p, c);
  return e;
}

Element Element::basis_e(long n) {
  if (n < 0) throw DomainError("basis index must be nonnegative");
  Element e = unit(PsiPosition::omega(n));
  if (n > 0) e.add_term(PsiPosition::omega(n - 1), -1);
  return e;
}

Scalar Element::coeff(const PsiPosition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar Element::coeff_sum() const {
  if (inf_) throw DomainError("coefficient sum of infinity");
  Scalar s;
  for (const auto& [p, c] : terms_) s += c;
  return s;
}

bool Element::is_unit() const { return !inf_ && terms_.size() == 1 && terms_.begin()->second == Scalar(1); }

void Element::add_term(const PsiPosition& p, const Scalar& c) {
  if (inf_ || c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  if (inf_) return *this;
  Element r = *this;
  for (auto& [p, c] : r.terms_) c = -c;
  return r;
}

Element operator+(const Element& x, const Element& y) {
  if (x.inf_ || y.inf_) return Element::inf();
  Element r = x;
  for (const auto& [p, c] : y.terms_) r.add_term(p, c);
  return r;
}

Element operator-(const Element& x, const Element& y) {
  if (x.is_inf() || y.is_inf()) return Element::inf();
  Element r = x;
  for (const auto& [p, c] : y.terms()) r.add_term(p, -c);
  return r;
}

Element operator*(const Scalar& c, const Element& x) {
  if (x.inf_) return x;
  Element r;
  if (c.is_zero()) return r;
  for (const auto& [p, v] : x.terms_) r.terms_.emplace(p, c * v);
  return r;
}

Element Element::div(long n) const {
  if (n < 1) throw DomainError("delta index must be at least 1");
  return Scalar::frac(1, n) * *this;
}

void Model::check(const Element& x) const {
  if (x.is_inf()) return;
  for (const auto& [p, c] : x.terms()) {
    order.validate(p);
    if (c.radicand() != 0 && c.radicand() != radicand) throw DomainError("radicand mismatch");
  }
}

PsiPosition Model::min_support(const Element& x) const {
  if (x.is_inf() || x.is_zero()) throw DomainError("min support of zero or infinity");
  const PsiPosition* best = nullptr;
  for (const auto& kv : x.terms())
    if (!best || order.less(kv.first, *best)) best = &kv.first;
  return *best;
}

std::vector<std::pair<PsiPosition, Scalar>> Model::sorted_terms(const Element& x) const {
  std::vector<std::pair<PsiPosition, Scalar>> v(x.terms().begin(), x.terms().end());
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return order.less(a.first, b.first); });
  return v;
}

int Model::sign(const Element& x) const {
  if (x.is_inf()) throw DomainError("sign of infinity");
  if (x.is_zero()) return 0;
  Scalar q = x.coeff_sum();
  if (!q.is_zero()) return q.sign();
  return -x.coeff(min_support(x)).sign();
}

int Model::compare(const Element& x, const Element& y) const {
  if (x.is_inf() || y.is_inf()) return x.is_inf() == y.is_inf() ? 0 : (x.is_inf() ? 1 : -1);
  return sign(x - y);
}

Element Model::psi(const Element& x) const {
  if (x.is_inf() || x.is_zero()) return Element::inf();
  if (!x.coeff_sum().is_zero()) return s0();
  return Element::unit(order.succ(min_support(x)));
}

Element Model::succ(const Element& x) const {
  if (x.is_inf()) throw DomainError("s of infinity");
  if (x.is_zero() || x.coeff_sum() != Scalar(1)) return s0();
  return Element::unit(order.succ(min_support(x)));
}

Element Model::pred(const Element& x) const {
  if (!x.is_unit()) return Element::inf();
  auto prev = order.step(x.terms().begin()->first, StepDir::pred);
  if (!prev) return Element::inf();
  return Element::unit(*prev);
}

Element Model::integral(const Element& x) const {
  if (x.is_inf()) return x;
  return x - succ(x);
}

Element Model::contraction(const Element& x) const {
  if (x.is_inf() || sign(x) >= 0) return Element::inf();
  Element v = psi(x);
  return v - succ(v);
}

Element Model::prime_of(const Element& x) const {
  if (x.is_inf() || x.is_zero()) return Element::inf();
  return x + psi(x);
}

int Model::class_compare(const Element& x, const Element& y) const {
  if (x.is_inf() || y.is_inf()) throw DomainError("class of infinity");
  if (x.is_zero() || y.is_zero()) return x.is_zero() == y.is_zero() ? 0 : (x.is_zero() ? -1 : 1);
  // larger class <-> smaller psi value
  return -compare(psi(x), psi(y));
}

bool Model::in_positive_integrals(const Element& x) const { return sign(integral(x)) > 0; }

bool Model::in_psi(const Element& x) const { return x.is_unit(); }

std::vector<Scalar> to_vector(const Element& x) {
  if (x.is_inf()) throw DomainError("infinity has no vector form");
  long top = -1;
  for (const auto& [p, c] : x.terms()) {
    if (!p.is_omega()) throw DomainError("copy-supported element has no omega-vector form");
    top = std::max(top, p.k);
  }
  // w_n = e_0 + ... + e_n, so coefficient of e_i is the tail sum over n >= i
  std::vector<Scalar> v(top + 1);
  Scalar run;
  for (long i = top; i >= 0; --i) {
    run += x.coeff(PsiPosition::omega(i));
    v[i] = run;
  }
  return v;
}

Element from_vector(const std::vector<Scalar>& v) {
  Element x;
  for (size_t i = 0; i < v.size(); ++i) {
    // sum r_i e_i = sum_i (r_i - r_{i+1}) w_i
    Scalar next = i + 1 < v.size() ? v[i + 1] : Scalar();
    x.add_term(PsiPosition::omega(static_cast<long>(i)), v[i] - next);
  }
  return x;
}

int lex_sign(const std::vector<Scalar>& v) {
  for (const auto& r : v)
    if (!r.is_zero()) return r.sign();
  return 0;
}

std::string psi_label(const PsiPosition& p) {
  if (!p.is_omega()) return to_string(p);
  if (p.k == 0) return "s0";
  return "s^" + std::to_string(p.k + 1) + " 0";
}

namespace {

std::string format_terms(const std::vector<std::pair<std::string, Scalar>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [pos, coef] : terms) {
    bool neg = coef.sign() < 0 && (coef.is_rational() || coef.rat() == 0);
    Scalar mag = neg ? -coef : coef;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (mag == Scalar(1)) os << pos;
    else if (mag.is_rational() || mag.rat() == 0) os << mag.str() << "*" << pos;
    else os << "(" << mag.str() << ")*" << pos;
  }
  return os.str();
}

}  // namespace

std::string format_element(const Element& x) {
  if (x.is_inf()) return "inf";
  std::vector<std::pair<std::string, Scalar>> terms;
  for (const auto& [p, c] : x.terms()) terms.emplace_back(to_string(p), c);
  return format_terms(terms);
}

std::string format_element_e(const Element& x) {
  if (x.is_inf()) return "inf";
  Element omega, rest;
  for (const auto& [p, c] : x.terms()) (p.is_omega() ? omega : rest).add_term(p, c);
  std::vector<std::pair<std::string, Scalar>> terms;
  std::vector<Scalar> v = to_vector(omega);
  for (size_t n = 0; n < v.size(); ++n)
    if (v[n].sign() != 0) terms.emplace_back("e" + std::to_string(n), v[n]);
  for (const auto& [p, c] : rest.terms()) terms.emplace_back(to_string(p), c);
  return format_terms(terms);
}

}  // namespace tlog
