#include "tlog/couple.hpp"

#include <algorithm>
#include <set>

namespace tlog {

std::vector<PsiPosition> neighbourhood(const Model& m, const Element& x) {
  std::set<PsiPosition> out{PsiPosition::omega(0), PsiPosition::omega(1)};
  if (!x.is_inf())
    for (const auto& kv : x.terms()) {
      const PsiPosition& p = kv.first;
      out.insert(p);
      out.insert(m.order.succ(p));
      out.insert(m.order.succ(m.order.succ(p)));
      if (auto q = m.order.step(p, StepDir::pred)) {
        out.insert(*q);
        if (auto r = m.order.step(*q, StepDir::pred)) out.insert(*r);
      }
    }
  return {out.begin(), out.end()};
}

std::vector<Element> Couple::psi_witnesses(const Element& x) const {
  std::vector<Element> out{model_.s0()};
  for (const auto& p : neighbourhood(model_, x)) {
    auto q = model_.order.step(p, StepDir::pred);
    if (q) out.push_back(Element::unit(p) - Element::unit(*q));
  }
  return out;
}

std::optional<Element> Couple::psi_preimage(const Element& v) const {
  if (v.is_inf()) return std::nullopt;
  for (const auto& w : psi_witnesses(v))
    if (psi(w) == v) return w;
  return std::nullopt;
}

Element Couple::pred(const Element& x) const {
  if (x.is_inf() || !in_psi_set(x) || !model_.less(s0(), x)) return Element::inf();
  for (const auto& w : psi_witnesses(x)) {
    Element a = psi(w);
    if (!a.is_inf() && succ(a) == x) return a;
  }
  return Element::inf();
}

Element Couple::integral(const Element& x) const {
  if (x.is_inf()) return x;
  return x - succ(x);
}

Element Couple::contraction(const Element& x) const {
  if (x.is_inf() || sign(x) >= 0) return Element::inf();
  Element v = psi(x);
  return v - succ(v);
}

Element Couple::prime_of(const Element& x) const {
  if (x.is_inf() || x.is_zero()) return Element::inf();
  return x + psi(x);
}

}  // namespace tlog
