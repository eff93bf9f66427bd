#include "tlog/extensions.hpp"
#include "tlog/sampling.hpp"

#include <algorithm>

namespace tlog {

namespace {

bool outside(const SubmodelSpec& s, const Element& v) { return v.is_unit() && !s.has(v.terms().begin()->first); }

}  // namespace

Report trace_check(long triples, long sweep, std::uint64_t seed) {
  Report r;
  r.title = "trace sets";
  r.seed = seed;
  r.samples = triples;
  Sampler rng(seed);
  auto& wit = r.add("witnesses re-evaluate");
  auto& cover = r.add("window values have witnesses");
  auto& sw = r.add("sweep stays inside the trace");
  auto& down = r.add("psi-part downward closed");
  auto& diff = r.add("psi-part and s-part differ in at most one value");
  auto& ext = r.add("at most one value outside the submodel");
  auto& shape = r.add("case matches its data");
  auto& rem = r.add("p outside => s outside");
  auto& mono = r.add("trace grows with the submodel");
  std::vector<long> by_case(3, 0);

  for (long done = 0, draws = 0; done < triples && draws < 20 * triples; ++draws) {
    Model m = Model::with_copies(static_cast<int>(rng.uniform(0, 3)), rng.coin(0.5) ? 2 : 0);
    SubmodelSpec s;
    for (int c : m.order.copies())
      if (rng.coin(0.5)) s.copies.push_back(c);
    s.rational_only = m.radicand != 0 && rng.coin(0.5);
    Element alpha = rng.element(m);
    for (int tries = 0; submodel_contains(m, s, alpha) && tries < 50; ++tries) alpha = rng.element(m);
    if (submodel_contains(m, s, alpha)) continue;
    ++done;
    std::string tag = "model copies=" + std::to_string(m.order.size()) + " sub=" + format_submodel(s) +
                      " alpha=" + format_element(alpha);
    TraceResult t;
    try {
      t = trace_set(m, s, alpha, 3);
    } catch (const std::exception& e) {
      shape.fail(tag + ": " + e.what());
      continue;
    }
    ++by_case[static_cast<int>(t.kind)];
    const PsiOrder& ord = m.order;

    for (const auto& w : t.witnesses) {
      Element x = w.q * alpha - w.gamma;
      Element got = w.via_s ? m.succ(x) : m.psi(x);
      const TracePart& part = w.via_s ? t.s_part : t.psi_part;
      wit.expect(submodel_contains(m, s, w.gamma) && got == Element::unit(w.value) &&
                     part.contains(ord, s, w.value),
                 tag + " value " + to_string(w.value));
    }
    std::vector<PsiPosition> win = sub_window(m, s, 3);
    for (bool via_s : {false, true}) {
      const TracePart& part = via_s ? t.s_part : t.psi_part;
      for (const auto& v : win)
        if (part.contains(ord, s, v))
          cover.expect(std::any_of(t.witnesses.begin(), t.witnesses.end(),
                                   [&](const TraceWitness& w) { return w.via_s == via_s && w.value == v; }),
                       tag + " missing " + to_string(v));
    }

    // sub_window is ordered within each block; walk it in Psi order
    std::vector<PsiPosition> sorted = win;
    std::sort(sorted.begin(), sorted.end(), [&](const PsiPosition& a, const PsiPosition& b) { return ord.less(a, b); });
    bool gap = false, ok = true;
    for (const auto& v : sorted) {
      bool in = t.psi_part.inside.contains(ord, s, v);
      if (in && gap) ok = false;
      if (!in) gap = true;
    }
    down.expect(ok, tag);
    int differ = 0;
    for (const auto& v : sorted) differ += t.psi_part.contains(ord, s, v) != t.s_part.contains(ord, s, v);
    if (t.psi_part.external != t.s_part.external) differ += (t.psi_part.external ? 1 : 0) + (t.s_part.external ? 1 : 0);
    diff.expect(differ <= 1, tag);
    ext.expect(!(t.psi_part.external && t.s_part.external && *t.psi_part.external != *t.s_part.external) &&
                   (!t.external || !s.has(*t.external)),
               tag);
    bool data = t.kind == TraceCase::case1 ? t.max_inside.has_value() && !t.external
                : t.kind == TraceCase::case3 ? t.external.has_value()
                                             : !t.external.has_value();
    shape.expect(data, tag + " " + to_string(t.kind));

    Element proj = project(m, s, alpha);
    for (long j = 0; j < sweep; ++j) {
      Scalar q = rng.rational(true);
      Element gamma = rng.element_in(m, s.copies, s.rational_only || field_is_rational(m, s));
      if (rng.coin(0.6)) gamma = q * proj + (rng.coin(0.5) ? gamma : Element());
      Element x = q * alpha - gamma;
      if (x.is_zero()) continue;
      Element pv = m.psi(x), sv = m.succ(x);
      std::string why = tag + " q=" + q.str() + " gamma=" + format_element(gamma);
      auto in_trace = [&](const TracePart& part, const Element& v) {
        return v.is_unit() && part.contains(ord, s, v.terms().begin()->first);
      };
      sw.expect(in_trace(t.psi_part, pv), why + " psi=" + format_element(pv));
      sw.expect(in_trace(t.s_part, sv), why + " s=" + format_element(sv));
      Element pr = m.pred(x);
      if (!pr.is_inf() && outside(s, pr)) rem.expect(outside(s, sv), why);
    }

    if (s.copies.size() < static_cast<size_t>(m.order.size())) {
      int extra = -1;
      for (int c : m.order.copies())
        if (!s.has_copy(c)) extra = c;
      SubmodelSpec bigger = s.with(extra, ord);
      if (!submodel_contains(m, bigger, alpha)) {
        TraceResult t2 = trace_set(m, bigger, alpha, 3);
        bool sub = true;
        for (const auto& v : win) {
          if (t.psi_part.contains(ord, s, v) && !t2.psi_part.contains(ord, bigger, v)) sub = false;
          if (t.s_part.contains(ord, s, v) && !t2.s_part.contains(ord, bigger, v)) sub = false;
        }
        for (const auto& e : {t.psi_part.external, t.s_part.external})
          if (e && bigger.has(*e) && !t2.contains(ord, bigger, *e)) sub = false;
        mono.expect(sub, tag + " plus " + copy_name(extra));
      }
    }
  }
  r.notes.push_back("cases seen: Case1 " + std::to_string(by_case[0]) + ", Case2 " + std::to_string(by_case[1]) +
                    ", Case3 " + std::to_string(by_case[2]));
  return r;
}

}  // namespace tlog
