#include "tlog/extensions.hpp"

#include <algorithm>
#include <set>

namespace tlog {

namespace {

// a position of copy c (or of omega when c is kOmega) beyond every position x mentions
PsiPosition far_in(const Element& x, int copy, bool upward) {
  long k = 0;
  for (const auto& kv : x.terms())
    if (kv.first.copy == copy) k = std::max(k, std::abs(kv.first.k));
  if (copy == PsiPosition::kOmega) return PsiPosition::omega(k + 4);
  return PsiPosition::in_copy(copy, upward ? k + 4 : -(k + 4));
}

}  // namespace

ClassCutExtension::ClassCutExtension(Model base, CutDescriptor cut, Element psi_value)
    : base_(std::move(base)), cut_(cut), beta_(std::move(psi_value)) {
  base_.check(beta_);
  if (beta_.is_zero()) throw DomainError("psi-value must be nonzero");
  const PsiOrder& ord = base_.order;
  using K = CutDescriptor::Kind;
  if (cut_.kind == K::at_position) ord.validate(cut_.pos);
  if (cut_.kind == K::between_copies) {
    int a = ord.rank(cut_.lower_copy), b = ord.rank(cut_.upper_copy);
    if (a < 0 || b < 0 || b != a + 1) throw DomainError("between-copies cut needs adjacent copies");
  }
  if (cut_.kind == K::between_omega_and_copies && ord.size() == 0)
    throw DomainError("no copies above omega in this model");
  if (base_.sign(base_.integral(beta_)) > 0)
    throw DomainError("hypothesis fails: psi-value " + format_element(beta_) + " is not below (Gamma^>)'");

  // the largest psi-value of the larger classes and the least of the smaller ones
  std::optional<PsiPosition> lmax, rmin;
  switch (cut_.kind) {
    case K::at_position:
      if (cut_.side == CutDescriptor::Side::right) {
        lmax = cut_.pos;
        rmin = ord.succ(cut_.pos);
      } else {
        lmax = ord.step(cut_.pos, StepDir::pred);
        rmin = cut_.pos;
      }
      break;
    case K::between_omega_and_copies:
      lmax = far_in(beta_, PsiPosition::kOmega, true);
      rmin = far_in(beta_, ord.copies().front(), false);
      break;
    case K::between_copies:
      lmax = far_in(beta_, cut_.lower_copy, true);
      rmin = far_in(beta_, cut_.upper_copy, false);
      break;
    case K::above_all:
      lmax = ord.size() ? far_in(beta_, ord.copies().back(), true) : far_in(beta_, PsiPosition::kOmega, true);
      break;
  }
  if (lmax && base_.less(beta_, Element::unit(*lmax)))
    throw DomainError("hypothesis fails: psi-value " + format_element(beta_) + " is below the larger-class value " +
                      psi_label(*lmax));
  if (rmin && base_.less(Element::unit(*rmin), beta_))
    throw DomainError("hypothesis fails: psi-value " + format_element(beta_) + " is above the smaller-class value " +
                      psi_label(*rmin));
}

bool ClassCutExtension::in_larger_classes(const PsiPosition& v) const {
  const PsiOrder& ord = base_.order;
  using K = CutDescriptor::Kind;
  switch (cut_.kind) {
    case K::at_position: {
      int c = ord.compare(v, cut_.pos);
      return cut_.side == CutDescriptor::Side::right ? c <= 0 : c < 0;
    }
    case K::between_omega_and_copies: return v.is_omega();
    case K::between_copies: return ord.rank(v) <= ord.rank(cut_.lower_copy);
    case K::above_all: return true;
  }
  return false;
}

int ClassCutExtension::sign(const ExtendedElement& z) const {
  if (z.q.is_zero()) return base_.sign(z.y);
  if (z.y.is_zero()) return z.q.sign();
  PsiPosition v = base_.psi(z.y).terms().begin()->first;
  return in_larger_classes(v) ? base_.sign(z.y) : z.q.sign();
}

Element ClassCutExtension::psi(const ExtendedElement& z) const {
  if (z.q.is_zero()) return base_.psi(z.y);
  if (z.y.is_zero()) return beta_;
  Element py = base_.psi(z.y);
  return in_larger_classes(py.terms().begin()->first) ? py : beta_;
}

std::string ClassCutExtension::cut_key() const {
  const PsiOrder& ord = base_.order;
  using K = CutDescriptor::Kind;
  switch (cut_.kind) {
    case K::at_position:
      if (cut_.side == CutDescriptor::Side::right) return "upto " + to_string(cut_.pos);
      if (auto p = ord.step(cut_.pos, StepDir::pred)) return "upto " + to_string(*p);
      return "empty";
    case K::between_omega_and_copies: return "below 0";
    case K::between_copies: return "below " + std::to_string(ord.rank(cut_.upper_copy));
    case K::above_all: return "below " + std::to_string(ord.size());
  }
  return "?";
}

bool same_type_over(const ClassCutExtension& a, const ClassCutExtension& b) {
  return a.base() == b.base() && a.cut_key() == b.cut_key() && a.psi_value() == b.psi_value();
}

std::optional<Element> cut_separator(const Model& m, const SubmodelSpec& s, const Element& a0, const Element& b0) {
  int c = m.compare(a0, b0);
  if (c == 0) return std::nullopt;
  const Element& a = c < 0 ? a0 : b0;
  const Element& b = c < 0 ? b0 : a0;
  auto between = [&](const Element& g) { return m.less(a, g) && m.less(g, b); };
  Element w0 = Element::unit(PsiPosition::omega(0));
  Scalar qa = a.coeff_sum(), qb = b.coeff_sum();
  if (qa != qb) {
    Element g = Scalar(rational_between(qa, qb)) * w0;
    if (between(g)) return g;
  }
  // equal sums: any separator has the same coefficient sum
  if (!in_field(m, s, qa)) return std::nullopt;
  bool rat = field_is_rational(m, s);
  auto proj = [&](const Scalar& x) { return rat ? Scalar(x.rat()) : x; };

  std::set<PsiPosition> cand;
  for (const auto& p : neighbourhood(m, a)) cand.insert(p);
  for (const auto& p : neighbourhood(m, b)) cand.insert(p);
  std::vector<PsiPosition> ms(cand.begin(), cand.end());
  std::sort(ms.begin(), ms.end(), [&](const PsiPosition& x, const PsiPosition& y) { return m.order.less(x, y); });

  // balancing positions above every candidate
  Element both = a + b + Element::unit(ms.back());
  std::vector<PsiPosition> far{far_in(both, PsiPosition::kOmega, true)};
  for (int cp : s.copies) far.push_back(far_in(both, cp, true));

  for (const auto& mpos : ms) {
    for (const Element* src : {&a, &b}) {
      Element prefix;
      for (const auto& [p, x] : src->terms())
        if (s.has(p) && m.order.less(p, mpos)) prefix.add_term(p, proj(x));
      std::vector<Scalar> coeffs{Scalar(0)};
      if (s.has(mpos)) {
        Scalar ca = a.coeff(mpos), cb = b.coeff(mpos);
        coeffs.push_back(proj(ca));
        coeffs.push_back(proj(cb));
        if (ca != cb) coeffs.push_back(Scalar(rational_between(std::min(ca, cb), std::max(ca, cb))));
        for (const Scalar& base : {proj(ca), proj(cb)}) {
          coeffs.push_back(base + Scalar(1));
          coeffs.push_back(base - Scalar(1));
        }
      }
      for (const auto& cm : coeffs) {
        Element g = prefix;
        if (s.has(mpos)) g.add_term(mpos, cm);
        for (const auto& f : far) {
          if (!m.order.less(mpos, f)) continue;
          Element h = g;
          h.add_term(f, qa - h.coeff_sum());
          if (between(h)) return h;
        }
      }
    }
  }
  return std::nullopt;
}

bool same_type_over(const Model& m, const SubmodelSpec& s, const Element& a, const Element& b) {
  for (const Element* x : {&a, &b}) {
    if (submodel_contains(m, s, *x)) throw DomainError("element lies in the span of the submodel");
    TraceResult t = trace_set(m, s, *x);
    if (t.kind == TraceCase::case3)
      throw DomainError("unsupported extension shape: " + format_element(*x) + " does not generate a group-closed extension");
  }
  if (a == b) return true;
  return !cut_separator(m, s, a, b).has_value();
}

PsiPosition Embedding::map(const PsiPosition& p) const {
  auto it = image_.find(p.copy);
  if (p.is_omega() || it == image_.end()) return p;
  return PsiPosition::in_copy(it->second.copy, it->second.k + p.k);
}

Element Embedding::map(const Element& x) const {
  if (x.is_inf()) return x;
  Element out;
  for (const auto& [p, c] : x.terms()) out.add_term(map(p), c);
  return out;
}

Embedding embed_universal(const PsiOrder& old_order, const InsertResult& source, const Model& target,
                          const std::map<int, PsiPosition>& family) {
  const PsiOrder& tord = target.order;
  const auto& old = old_order.copies();
  for (size_t i = 0; i < old.size(); ++i) {
    if (!tord.has_copy(old[i])) throw DomainError("old copy " + copy_name(old[i]) + " missing from target");
    if (i > 0 && tord.rank(old[i - 1]) > tord.rank(old[i])) throw DomainError("old copy order mismatch in target");
  }
  int prev_rank = -1;
  for (int id : source.order.copies()) {
    auto pos = std::find(source.new_ids.begin(), source.new_ids.end(), id);
    if (pos == source.new_ids.end()) continue;
    size_t idx = static_cast<size_t>(pos - source.new_ids.begin());
    auto it = family.find(id);
    if (it == family.end()) throw DomainError("no image given for " + copy_name(id));
    const PsiPosition& img = it->second;
    if (img.is_omega() || !tord.has_copy(img.copy) || old_order.has_copy(img.copy))
      throw DomainError("cut mismatch: image of " + copy_name(id) + " must lie in a target copy outside the old order");
    int r = tord.rank(img.copy);
    int j = source.cuts[idx].j;
    if (j > 0 && r < tord.rank(old[j - 1]))
      throw DomainError("cut mismatch: image of " + copy_name(id) + " lies below old copy " + copy_name(old[j - 1]));
    if (j < static_cast<int>(old.size()) && r > tord.rank(old[j]))
      throw DomainError("cut mismatch: image of " + copy_name(id) + " lies above old copy " + copy_name(old[j]));
    if (r <= prev_rank) throw DomainError("inter-copy order mismatch at " + copy_name(id));
    prev_rank = r;
  }
  return Embedding(source.order, target, family);
}

}  // namespace tlog
