#include "tlog/extensions.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlog {

PseudolimitSpec harmonic_sequence(long count) {
  PseudolimitSpec spec;
  spec.name = "harmonic";
  spec.ambient = Model::prime();
  spec.alpha = [](long n) {
    Element x;
    for (long i = 0; i <= n; ++i) x += Scalar::frac(1, 1 + i) * Element::basis_e(i);
    return x;
  };
  spec.increment = [](long n) { return PsiPosition::omega(n + 1); };
  spec.sigma = [](long) { return 1; };
  spec.count = count;
  return spec;
}

InterleavedCopies interleaved_copies(int copies) {
  InterleavedCopies ex;
  ex.base = Model::with_copies(copies - 1);
  std::vector<SCut> rho;
  for (int j = 0; j < copies; ++j) rho.push_back({j});
  InsertResult ins = insert_copies(ex.base.order, rho);
  ex.ambient = {ins.order, 0};
  ex.new_copies = ins.new_ids;
  std::vector<int> ids = ins.new_ids;
  ex.spec.name = "interleaved";
  ex.spec.ambient = ex.ambient;
  ex.spec.alpha = [ids](long n) {
    Element x;
    for (long j = 0; j <= n; ++j)
      x += Element::unit(PsiPosition::in_copy(ids[j], 1)) - Element::unit(PsiPosition::in_copy(ids[j], 0));
    return x;
  };
  ex.spec.increment = [ids](long n) { return PsiPosition::in_copy(ids[n + 1], 1); };
  ex.spec.sigma = [](long) { return 1; };
  ex.spec.count = copies - 1;
  return ex;
}

long PseudolimitExtension::stable_index(const ExtendedElement& z, long start, bool for_s) const {
  const Model& m = spec_.ambient;
  for (long n = std::max(0L, start); n < spec_.count; ++n) {
    Element zn = z.q * spec_.alpha(n) + z.y;
    if (zn.is_zero()) {
      if (for_s) continue;
      return n;
    }
    Element val = for_s ? m.succ(zn) : m.psi(zn);
    if (m.less(val, Element::unit(spec_.increment(n)))) return n;
  }
  throw DomainError("no stabilization within " + std::to_string(spec_.count) + " indices of " + spec_.name);
}

int PseudolimitExtension::sign(const ExtendedElement& z, long start) const {
  if (z.q.is_zero()) return spec_.ambient.sign(z.y);
  long n = stable_index(z, start, false);
  Element zn = z.q * spec_.alpha(n) + z.y;
  if (zn.is_zero()) return z.q.sign() * spec_.sigma(n);
  return spec_.ambient.sign(zn);
}

Element PseudolimitExtension::psi(const ExtendedElement& z, long start) const {
  if (z.q.is_zero()) return spec_.ambient.psi(z.y);
  long n = stable_index(z, start, false);
  Element zn = z.q * spec_.alpha(n) + z.y;
  if (zn.is_zero()) return Element::unit(spec_.increment(n));
  return spec_.ambient.psi(zn);
}

Element PseudolimitExtension::succ(const ExtendedElement& z, long start) const {
  if (z.q.is_zero()) return spec_.ambient.succ(z.y);
  long n = stable_index(z, start, true);
  return spec_.ambient.succ(z.q * spec_.alpha(n) + z.y);
}

Report pc_check(const PseudolimitSpec& spec, long n) {
  Report r;
  r.title = "pc-sequence " + spec.name;
  r.samples = n;
  n = std::min(n, spec.count);
  const Model& m = spec.ambient;
  std::vector<Element> a;
  for (long i = 0; i < n; ++i) a.push_back(spec.alpha(i));
  auto& inc = r.add("increments strictly increasing");
  for (long i = 0; i + 1 < n; ++i)
    inc.expect(m.less(Element::unit(spec.increment(i)), Element::unit(spec.increment(i + 1))),
               "v_" + std::to_string(i));
  auto& pc = r.add("pseudocauchy inequality");
  auto& matches = r.add("difference matches increment");
  auto& sg = r.add("sign convention");
  std::vector<std::vector<Element>> d(n, std::vector<Element>(n));
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      d[i][j] = m.psi(a[i] - a[j]);
      r.notes.push_back("psi(alpha_" + std::to_string(i) + " - alpha_" + std::to_string(j) +
                        ") = " + format_element(d[i][j]));
      matches.expect(d[i][j] == Element::unit(spec.increment(i)), "indices " + std::to_string(i) + "," + std::to_string(j));
      sg.expect(m.sign(a[j] - a[i]) == spec.sigma(i), "indices " + std::to_string(i) + "," + std::to_string(j));
    }
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      for (long k = j + 1; k < n; ++k)
        pc.expect(m.less(d[i][j], d[j][k]), "indices " + std::to_string(i) + "," + std::to_string(j) + "," +
                                                std::to_string(k));
  return r;
}

PseudolimitExtension adjoin_pseudolimit(const PseudolimitSpec& spec, long check_prefix) {
  Report r = pc_check(spec, check_prefix);
  if (!r.ok()) throw DomainError("not a pseudocauchy prefix: " + r.failed_names().front());
  return PseudolimitExtension(spec);
}

namespace {

int copies_up_to(const PsiOrder& ambient, const SubmodelSpec& s, const PsiPosition& p, bool inclusive) {
  int r = ambient.rank(p), n = 0;
  for (int c : s.copies)
    if (inclusive ? ambient.rank(c) <= r : ambient.rank(c) < r) ++n;
  return n;
}

}  // namespace

TraceResult trace_set(const PseudolimitExtension& ext, const SubmodelSpec& s0, long window) {
  const Model& m = ext.ambient();
  const PsiOrder& ord = m.order;
  SubmodelSpec s = s0;
  std::sort(s.copies.begin(), s.copies.end(), [&](int a, int b) { return ord.rank(a) < ord.rank(b); });
  const PseudolimitSpec& spec = ext.spec();
  long n0 = -1;
  while (n0 + 1 < spec.count && submodel_contains(m, s, spec.alpha(n0 + 1))) ++n0;

  TraceResult t;
  Element a = n0 >= 0 ? spec.alpha(n0) : Element();
  PsiPosition bound;
  if (n0 == spec.count - 1 && s.has(spec.increment(n0))) {
    t.kind = TraceCase::case2;
    t.horizon = true;
    bound = spec.increment(n0);
    t.cut = copies_up_to(ord, s, bound, true);
    t.note = "every available approximation lies in the submodel span";
  } else {
    Element v = ext.psi({Scalar(1), -a});
    if (v.is_inf() || !v.is_unit()) throw DomainError("pseudolimit trace undetermined: psi(lambda - a) is not in Psi");
    bound = v.terms().begin()->first;
    if (s.has(bound)) throw DomainError("pseudolimit trace undetermined for this submodel");
    t.kind = TraceCase::case3;
    t.external = bound;
    t.cut = copies_up_to(ord, s, bound, false);
  }
  t.psi_part.inside = {PsiDownset::Kind::below_cut, {}, t.cut};
  t.s_part.inside = t.psi_part.inside;
  if (t.external) t.psi_part.external = t.external;

  auto check = [&](const PsiPosition& v, bool via_s, const Element& w) {
    // q = 1, gamma = a - w, so q*lambda - gamma = (lambda - a) + w
    Element gamma = a - w;
    ExtendedElement z{Scalar(1), -gamma};
    Element got = via_s ? ext.succ(z) : ext.psi(z);
    if (got != Element::unit(v)) throw std::logic_error("pseudolimit trace witness failed at " + to_string(v));
    t.witnesses.push_back({v, via_s, Scalar(1), gamma});
  };
  Element w0 = Element::unit(PsiPosition::omega(0));
  Element lim = Element::unit(bound);
  for (bool via_s : {false, true}) {
    for (const auto& v : sub_window(m, s, window)) {
      if (!t.psi_part.inside.contains(ord, s, v) || !m.less(Element::unit(v), lim)) continue;
      if (v == PsiPosition::omega(0)) {
        for (long c = 2; c <= 4; ++c) {
          Element w = Scalar(c) * w0;
          Element got = via_s ? ext.succ({Scalar(1), w - a}) : ext.psi({Scalar(1), w - a});
          if (got == w0) {
            check(v, via_s, w);
            break;
          }
        }
        continue;
      }
      PsiPosition pi = *ord.step(v, StepDir::pred);
      Element w = via_s ? Element::unit(pi) : Element::unit(v) - Element::unit(pi);
      check(v, via_s, w);
    }
  }
  if (t.external) check(*t.external, false, Element());
  return t;
}

ExtensionReport classify_simple_extension(const PseudolimitExtension& ext, const SubmodelSpec& s0) {
  const Model& m = ext.ambient();
  ExtensionReport rep;
  SubmodelSpec start = s0;
  std::sort(start.copies.begin(), start.copies.end(),
            [&](int a, int b) { return m.order.rank(a) < m.order.rank(b); });
  SubmodelSpec cur = start;
  for (int guard = 0; guard <= m.order.size() + 1; ++guard) {
    TraceResult t = trace_set(ext, cur);
    rep.steps.push_back(t);
    if (t.kind != TraceCase::case3) {
      rep.terminal = Terminal::span_plus_q_alpha;
      rep.horizon = t.horizon;
      rep.final_sub = cur;
      return rep;
    }
    int copy = t.external->copy;
    rep.adjoined.push_back(copy);
    rep.cuts.push_back({copies_up_to(m.order, start, *t.external, false)});
    cur = cur.with(copy, m.order);
  }
  throw std::logic_error("classifier did not terminate");
}

}  // namespace tlog
