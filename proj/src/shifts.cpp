#include "tlog/shifts.hpp"

#include "tlog/axioms.hpp"

#include <set>
#include <stdexcept>

namespace tlog {

ShiftedCouple::ShiftedCouple(Model base, std::optional<SCut> cut, Element eps)
    : Couple(base), base_(std::move(base)), cut_(cut), eps_(std::move(eps)) {
  model_.check(eps_);
  if (cut_ && (cut_->j < 0 || cut_->j > model_.order.size())) throw DomainError("invalid s-cut index");
  if (eps_.is_zero()) throw DomainError("hypothesis fails: psi(eps) is infinite, not in B");
  if (!in_shift_set(model_.psi(eps_)))
    throw DomainError("hypothesis fails: psi(eps) = " + format_element(model_.psi(eps_)) + " is not in B");
}

bool ShiftedCouple::in_shift_set(const Element& v) const {
  if (v.is_inf()) return false;
  if (!cut_) return true;
  return model_.order.in_cut(v.terms().begin()->first, *cut_);
}

Element ShiftedCouple::psi(const Element& x) const {
  Element v = model_.psi(x);
  if (v.is_inf()) return v;
  return in_shift_set(v) ? v + eps_ : v;
}

std::vector<Element> ShiftedCouple::candidates(const Element& x) const {
  std::set<PsiPosition> pos;
  for (const auto& p : neighbourhood(model_, x)) pos.insert(p);
  for (const auto& p : neighbourhood(model_, eps_)) pos.insert(p);
  // psi~ takes the value unit(p) only off B and unit(p) + eps only on B
  std::set<Element> out;
  for (const auto& p : pos) {
    Element u = Element::unit(p);
    out.insert(in_shift_set(u) ? u + eps_ : u);
  }
  return {out.begin(), out.end()};
}

std::vector<Element> ShiftedCouple::succ_solutions(const Element& x) const {
  std::vector<Element> sols;
  for (const auto& b : candidates(x))
    if (psi(x - b) == b) sols.push_back(b);
  return sols;
}

Element ShiftedCouple::succ(const Element& x) const {
  if (x.is_inf()) throw DomainError("s of infinity");
  if (auto it = succ_cache_->find(x); it != succ_cache_->end()) return it->second;
  std::vector<Element> sols = succ_solutions(x);
  if (sols.size() != 1) {
    std::string msg = "shifted successor of " + format_element(x) + " has " + std::to_string(sols.size()) +
                      " candidate solutions";
    for (const auto& b : sols) msg += " [" + format_element(b) + "]";
    throw std::logic_error(msg);
  }
  if (succ_cache_->size() > 200000) succ_cache_->clear();
  succ_cache_->emplace(x, sols.front());
  return sols.front();
}

std::vector<Element> ShiftedCouple::psi_witnesses(const Element& x) const {
  std::vector<Element> out = base_.psi_witnesses(x);
  if (!x.is_inf())
    for (const auto& w : base_.psi_witnesses(x - eps_)) out.push_back(w);
  return out;
}

std::string ShiftedCouple::describe() const {
  std::string b = cut_ ? "B" + std::to_string(cut_->j) : "Psi";
  return "(" + b + ", " + format_element(eps_) + ")-shift";
}

ShiftedCouple random_shift(const Model& m, Sampler& rng) {
  if (m.order.size() == 0) throw DomainError("a proper s-cut with nonempty fibre needs at least one copy");
  int j = static_cast<int>(rng.uniform(0, m.order.size() - 1));
  // a combination whose psi-value sits in one of the copies of the tail
  int copy = m.order.copies()[rng.uniform(j, m.order.size() - 1)];
  long k = rng.uniform(-3, 3);
  Element eps = rng.rational(true) * (Element::unit(PsiPosition::in_copy(copy, k)) -
                                      Element::unit(PsiPosition::in_copy(copy, k + rng.uniform(1, 5))));
  if (rng.coin(0.5)) {
    // a second difference inside the tail keeps psi(eps) in B
    int other = m.order.copies()[rng.uniform(j, m.order.size() - 1)];
    long l = rng.uniform(-3, 3);
    eps += rng.rational(true) * (Element::unit(PsiPosition::in_copy(other, l)) -
                                 Element::unit(PsiPosition::in_copy(other, l + 1)));
    if (eps.is_zero()) eps = Element::unit(PsiPosition::in_copy(copy, 0)) - Element::unit(PsiPosition::in_copy(copy, 1));
  }
  return ShiftedCouple(m, SCut{j}, eps);
}

Report shift_check(const ShiftedCouple& c, long samples, std::uint64_t seed) {
  AxiomOptions opts;
  opts.core_formulas = false;
  Report r = axiom_check(c, samples, seed, opts);
  r.title = "shift " + c.describe();
  const Model& m = c.model();
  const BaseCouple& b = c.base();
  std::vector<Element> pool = axiom_pool(m, samples, seed);
  auto& inv = r.add("contraction invariance");
  auto& claim = r.add("shifted successor on psi-values");
  auto& uniq = r.add("shifted successor unique");
  for (const auto& x : pool) {
    uniq.expect(c.succ_solutions(x).size() == 1, [&] { return "x=" + format_element(x); });
    if (x.is_zero()) continue;
    if (m.sign(x) < 0) inv.expect(c.contraction(x) == b.contraction(x), [&] { return "x=" + format_element(x); });
    Element v = b.psi(x);
    if (c.in_shift_set(v)) claim.expect(c.succ(c.psi(x)) == b.succ(v) + c.eps(), [&] { return "x=" + format_element(x); });
  }
  return r;
}

Element precontraction_chi(const Couple& c, const Element& x) {
  if (x.is_inf()) return x;
  int sg = c.sign(x);
  if (sg == 0) return Element();
  if (sg < 0) return c.contraction(x);
  return -c.contraction(-x);
}

Report precontraction_check(const Model& m, const ChiMap& chi, long samples, std::uint64_t seed) {
  Report r;
  r.title = "precontraction group";
  r.seed = seed;
  r.samples = samples;
  std::vector<Element> pool = axiom_pool(m, samples, seed);
  long n = static_cast<long>(pool.size());
  auto F = [](const Element& x) { return format_element(x); };
  for (long i = 0; i < n; ++i) {
    const Element& x = pool[i];
    const Element& y = pool[(i * 7919 + 13) % n];
    Element cx = chi(x), cy = chi(y);
    r.add("zero exactly at zero").expect(cx.is_zero() == x.is_zero(), [&] { return "x=" + F(x); });
    r.add("odd").expect(chi(-x) == -cx, [&] { return "x=" + F(x); });
    if (m.less(x, y)) r.add("monotone").expect(!m.less(cy, cx), [&] { return "x=" + F(x) + " y=" + F(y); });
    if (m.less(y, x)) r.add("monotone").expect(!m.less(cx, cy), [&] { return "x=" + F(x) + " y=" + F(y); });
    if (!x.is_zero()) {
      auto& cls = r.add("constant on signed classes");
      for (Scalar q : {Scalar(2), Scalar::frac(1, 3), Scalar(7)}) cls.expect(chi(q * x) == cx, [&] { return "x=" + F(x); });
      // a perturbation from a smaller class keeps class and sign
      if (!y.is_zero() && m.class_compare(y, x) < 0) cls.expect(chi(x + y) == cx, [&] { return "x=" + F(x) + " y=" + F(y); });
      r.add("centripetal").expect(m.less(m.abs(cx), m.abs(x)), [&] { return "x=" + F(x); });
    }
    r.add("divisible").expect((Scalar(3) * x).div(3) == x, [&] { return "x=" + F(x); });
  }
  return r;
}

Report chi_collision_demo(long samples, std::uint64_t seed) {
  Model m = Model::with_copies(2);
  BaseCouple plain(m);
  Element eps = Element::unit(PsiPosition::in_copy(1, 0)) - Element::unit(PsiPosition::in_copy(1, 5));
  ShiftedCouple shifted(m, SCut{1}, eps);
  Report r;
  r.title = "chi collision " + shifted.describe();
  r.seed = seed;
  r.samples = samples;
  auto& same = r.add("identical chi_PG");
  for (const auto& x : axiom_pool(m, samples, seed))
    same.expect(precontraction_chi(plain, x) == precontraction_chi(shifted, x), [&] { return "x=" + format_element(x); });
  Element w = Element::unit(PsiPosition::in_copy(1, 1)) - Element::unit(PsiPosition::in_copy(1, 0));
  Element pw = plain.psi(w), tw = shifted.psi(w);
  r.add("psi disagreement witness").expect(pw != tw && shifted.in_shift_set(pw), [&] { return "w=" + format_element(w); });
  r.notes.push_back("witness w = " + format_element(w) + ": psi(w) = " + format_element(pw) + ", shifted psi(w) = " +
                    format_element(tw));
  return r;
}

}  // namespace tlog
