#include "tlog/extensions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tlog {

bool SubmodelSpec::has_copy(int id) const { return std::find(copies.begin(), copies.end(), id) != copies.end(); }

SubmodelSpec SubmodelSpec::with(int copy, const PsiOrder& ambient) const {
  SubmodelSpec out = *this;
  if (!out.has_copy(copy)) out.copies.push_back(copy);
  std::sort(out.copies.begin(), out.copies.end(),
            [&](int a, int b) { return ambient.rank(a) < ambient.rank(b); });
  return out;
}

bool field_is_rational(const Model& ambient, const SubmodelSpec& s) { return ambient.radicand == 0 || s.rational_only; }

bool in_field(const Model& ambient, const SubmodelSpec& s, const Scalar& c) {
  return c.is_rational() || !field_is_rational(ambient, s);
}

Element project(const Model& ambient, const SubmodelSpec& s, const Element& x) {
  Element out;
  if (x.is_inf()) return out;
  bool rat = field_is_rational(ambient, s);
  for (const auto& [p, c] : x.terms())
    if (s.has(p)) out.add_term(p, rat ? Scalar(c.rat()) : c);
  return out;
}

bool submodel_contains(const Model& ambient, const SubmodelSpec& s, const Element& x) {
  if (x.is_inf()) return false;
  return (x - project(ambient, s, x)).is_zero();
}

Model submodel_model(const Model& ambient, const SubmodelSpec& s) {
  std::vector<int> ids = s.copies;
  std::sort(ids.begin(), ids.end(), [&](int a, int b) { return ambient.order.rank(a) < ambient.order.rank(b); });
  return {PsiOrder(ids), field_is_rational(ambient, s) ? 0 : ambient.radicand};
}

std::string format_submodel(const SubmodelSpec& s) {
  std::string out = "omega";
  for (int c : s.copies) out += "+" + copy_name(c);
  if (s.rational_only) out += "/Q";
  return out;
}

SubmodelSpec parse_submodel(const std::string& text) {
  SubmodelSpec s;
  std::string body = text;
  auto slash = body.find('/');
  if (slash != std::string::npos) {
    std::string field = body.substr(slash + 1);
    if (field != "Q") throw DomainError("unknown submodel field '" + field + "'");
    s.rational_only = true;
    body = body.substr(0, slash);
  }
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    if (tok == "omega" || tok == "prime" || tok.empty()) continue;
    if (tok.size() < 2 || tok[0] != 'c') throw DomainError("bad submodel component '" + tok + "'");
    try {
      s.copies.push_back(std::stoi(tok.substr(1)));
    } catch (const std::exception&) {
      throw DomainError("bad submodel component '" + tok + "'");
    }
  }
  return s;
}

namespace {

int sub_index(const SubmodelSpec& s, int copy) {
  for (size_t i = 0; i < s.copies.size(); ++i)
    if (s.copies[i] == copy) return static_cast<int>(i);
  return -1;
}

// number of submodel copies strictly below the copy of p
int sub_copies_below(const PsiOrder& ambient, const SubmodelSpec& s, const PsiPosition& p) {
  int r = ambient.rank(p), n = 0;
  for (int c : s.copies)
    if (ambient.rank(c) < r) ++n;
  return n;
}

SubmodelSpec sorted_sub(const PsiOrder& ambient, SubmodelSpec s) {
  std::sort(s.copies.begin(), s.copies.end(), [&](int a, int b) { return ambient.rank(a) < ambient.rank(b); });
  return s;
}

}  // namespace

bool PsiDownset::contains(const PsiOrder& ambient, const SubmodelSpec& s, const PsiPosition& v) const {
  if (!s.has(v)) return false;
  if (kind == Kind::upto) return ambient.compare(v, top) <= 0;
  if (v.is_omega()) return true;
  SubmodelSpec sorted = sorted_sub(ambient, s);
  return sub_index(sorted, v.copy) < cut;
}

bool TracePart::contains(const PsiOrder& ambient, const SubmodelSpec& s, const PsiPosition& v) const {
  if (external && *external == v) return true;
  return inside.contains(ambient, s, v);
}

std::string to_string(TraceCase c) {
  switch (c) {
    case TraceCase::case1: return "Case1";
    case TraceCase::case2: return "Case2";
    case TraceCase::case3: return "Case3";
  }
  return "?";
}

std::string to_string(Terminal t) { return t == Terminal::in_span ? "InSpan" : "SpanPlusQAlpha"; }

std::vector<PsiPosition> sub_window(const Model& ambient, const SubmodelSpec& s, long window) {
  std::vector<PsiPosition> out;
  for (long n = 0; n <= window; ++n) out.push_back(PsiPosition::omega(n));
  for (int c : sorted_sub(ambient.order, s).copies)
    for (long k = -window; k <= window; ++k) out.push_back(PsiPosition::in_copy(c, k));
  return out;
}

namespace {

struct FiniteTrace {
  const Model& m;
  const SubmodelSpec& s;
  const Element& alpha;
  Element proj, r;
  Scalar A;
  PsiPosition pi1;
  std::optional<PsiPosition> sigma;  // a submodel position above pi1

  Element make(const PsiPosition& v, bool via_s, Scalar& q) const {
    Scalar target = via_s ? Scalar(1) : Scalar(0);
    Element w0 = Element::unit(PsiPosition::omega(0));
    q = Scalar(1);
    if (v == PsiPosition::omega(0)) {
      for (long c = 1; c <= 3; ++c) {
        Scalar total = A + Scalar(c);
        if (total != target) return r + Scalar(c) * w0;
      }
    }
    PsiPosition next = m.order.succ(pi1);
    if (v == next) {
      if (sigma) return r + (target - A) * Element::unit(*sigma);
      if (!via_s) return r;
      q = Scalar(1) / A;
      return q * r;
    }
    PsiPosition pi = *m.order.step(v, StepDir::pred);
    return r + Element::unit(pi) + (target - A - Scalar(1)) * Element::unit(v);
  }

  TraceWitness witness(const PsiPosition& v, bool via_s) const {
    Scalar q;
    Element x = make(v, via_s, q);
    Element gamma = q * alpha - x;
    Element got = via_s ? m.succ(x) : m.psi(x);
    if (got != Element::unit(v) || !submodel_contains(m, s, gamma))
      throw std::logic_error("trace witness failed at " + to_string(v));
    return {v, via_s, q, gamma};
  }
};

}  // namespace

TraceResult trace_set(const Model& ambient, const SubmodelSpec& s0, const Element& alpha, long window) {
  ambient.check(alpha);
  SubmodelSpec s = sorted_sub(ambient.order, s0);
  if (submodel_contains(ambient, s, alpha)) throw DomainError("alpha lies in the span of the submodel");
  FiniteTrace ft{ambient, s, alpha, {}, {}, {}, {}, {}};
  ft.proj = project(ambient, s, alpha);
  ft.r = alpha - ft.proj;
  ft.A = ft.r.coeff_sum();
  ft.pi1 = ambient.min_support(ft.r);
  const PsiOrder& ord = ambient.order;

  TraceResult t;
  PsiPosition w0 = PsiPosition::omega(0);
  std::vector<PsiPosition> values = sub_window(ambient, s, window);
  if (!in_field(ambient, s, ft.A)) {
    t.kind = TraceCase::case1;
    t.max_inside = w0;
    t.psi_part.inside = {PsiDownset::Kind::upto, w0, 0};
    t.s_part = t.psi_part;
    t.note = "coefficient sum of the uncancellable part lies outside the field";
  } else {
    bool pi1_in = s.has(ft.pi1);
    if (pi1_in) {
      ft.sigma = ord.succ(ft.pi1);
    } else {
      for (int c : s.copies)
        if (ord.rank(c) > ord.rank(ft.pi1)) {
          ft.sigma = PsiPosition::in_copy(c, 0);
          break;
        }
    }
    bool G = ft.sigma.has_value();
    bool psi_incl = G || ft.A.is_zero();
    bool s_incl = G || (ft.A.is_rational() && !ft.A.is_zero());
    PsiPosition next = ord.succ(ft.pi1);
    values.push_back(ft.pi1);
    values.push_back(next);
    if (pi1_in) {
      t.kind = TraceCase::case1;
      t.psi_part.inside = {PsiDownset::Kind::upto, psi_incl ? next : ft.pi1, 0};
      t.s_part.inside = {PsiDownset::Kind::upto, s_incl ? next : ft.pi1, 0};
      t.max_inside = (psi_incl || s_incl) ? next : ft.pi1;
    } else {
      int j = sub_copies_below(ord, s, ft.pi1);
      t.psi_part.inside = {PsiDownset::Kind::below_cut, {}, j};
      t.s_part.inside = t.psi_part.inside;
      if (psi_incl) t.psi_part.external = next;
      if (s_incl) t.s_part.external = next;
      t.cut = j;
      if (psi_incl || s_incl) {
        t.kind = TraceCase::case3;
        t.external = next;
      } else {
        t.kind = TraceCase::case2;
        t.note = "no submodel position above the least uncancellable position and an irrational coefficient sum";
      }
    }
  }
  std::sort(values.begin(), values.end(), [&](const PsiPosition& a, const PsiPosition& b) { return ord.less(a, b); });
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (bool via_s : {false, true}) {
    const TracePart& part = via_s ? t.s_part : t.psi_part;
    for (const auto& v : values)
      if (part.contains(ord, s, v)) t.witnesses.push_back(ft.witness(v, via_s));
  }
  return t;
}

namespace {

std::string listing(const Model& ambient, const SubmodelSpec& s, const TracePart& part) {
  // finite enumeration when the part is a finite omega segment
  if (part.inside.kind == PsiDownset::Kind::upto && part.inside.top.is_omega() && !part.external) {
    std::string out = "{";
    for (long n = 0; n <= part.inside.top.k; ++n) out += (n ? ", " : "") + psi_label(PsiPosition::omega(n));
    return out + "}";
  }
  std::string out;
  if (part.inside.kind == PsiDownset::Kind::upto) {
    out = "Psi_S up to " + psi_label(part.inside.top);
  } else {
    SubmodelSpec sorted = sorted_sub(ambient.order, s);
    if (part.inside.cut >= static_cast<int>(sorted.copies.size())) out = "all of Psi_S";
    else out = "Psi_S below copy " + copy_name(sorted.copies[part.inside.cut]);
  }
  if (part.external) out += " plus " + psi_label(*part.external);
  return out;
}

}  // namespace

std::string format_trace(const Model& ambient, const SubmodelSpec& s, const TraceResult& t) {
  std::ostringstream os;
  os << to_string(t.kind);
  if (t.kind == TraceCase::case1 && t.max_inside) os << "  max " << psi_label(*t.max_inside);
  if (t.kind != TraceCase::case1) {
    SubmodelSpec sorted = sorted_sub(ambient.order, s);
    os << "  cut B = ";
    if (t.cut >= static_cast<int>(sorted.copies.size())) os << "empty";
    else os << "tail from " << copy_name(sorted.copies[t.cut]);
  }
  if (t.external) os << "  external " << psi_label(*t.external);
  if (t.horizon) os << "  (finite horizon)";
  os << "\n";
  TracePart all = t.psi_part;
  bool same = t.psi_part.inside.kind == t.s_part.inside.kind && t.psi_part.inside.top == t.s_part.inside.top &&
              t.psi_part.inside.cut == t.s_part.inside.cut;
  if (same && !all.external) all.external = t.s_part.external;
  if (same) os << "trace: " << listing(ambient, s, all) << "\n";
  os << "psi-part: " << listing(ambient, s, t.psi_part) << "\n";
  os << "s-part: " << listing(ambient, s, t.s_part) << "\n";
  if (!t.note.empty()) os << "note: " << t.note << "\n";
  for (const auto& w : t.witnesses)
    os << "  " << (w.via_s ? "s" : "psi") << "(" << w.q.str() << "*alpha - (" << format_element(w.gamma)
       << ")) = " << psi_label(w.value) << "\n";
  return os.str();
}

std::string trace_machine(const Model& ambient, const SubmodelSpec& s, const TraceResult& t) {
  std::ostringstream os;
  os << "case=" << to_string(t.kind) << "\n";
  if (t.max_inside) os << "max=" << to_string(*t.max_inside) << "\n";
  if (t.kind != TraceCase::case1) os << "cut=" << t.cut << "\n";
  if (t.external) os << "external=" << to_string(*t.external) << "\n";
  os << "horizon=" << (t.horizon ? 1 : 0) << "\n";
  os << "submodel=" << format_submodel(s) << "\n";
  (void)ambient;
  for (const auto& w : t.witnesses)
    os << "witness=" << (w.via_s ? "s" : "psi") << ";" << to_string(w.value) << ";" << w.q.str() << ";"
       << format_element(w.gamma) << "\n";
  return os.str();
}

ExtensionReport classify_simple_extension(const Model& ambient, const SubmodelSpec& s0, const Element& alpha) {
  ExtensionReport rep;
  SubmodelSpec start = sorted_sub(ambient.order, s0);
  SubmodelSpec cur = start;
  for (int guard = 0; guard <= ambient.order.size() + 1; ++guard) {
    if (submodel_contains(ambient, cur, alpha)) {
      rep.terminal = Terminal::in_span;
      rep.final_sub = cur;
      return rep;
    }
    TraceResult t = trace_set(ambient, cur, alpha);
    rep.steps.push_back(t);
    if (t.kind != TraceCase::case3) {
      rep.terminal = Terminal::span_plus_q_alpha;
      rep.final_sub = cur;
      return rep;
    }
    int copy = t.external->copy;
    rep.adjoined.push_back(copy);
    rep.cuts.push_back({sub_copies_below(ambient.order, start, *t.external)});
    cur = cur.with(copy, ambient.order);
  }
  throw std::logic_error("classifier did not terminate");
}

std::string format_report(const Model& ambient, const SubmodelSpec& start, const ExtensionReport& r) {
  std::ostringstream os;
  os << "adjoined:";
  if (r.adjoined.empty()) os << " none";
  for (size_t i = 0; i < r.adjoined.size(); ++i)
    os << " " << copy_name(r.adjoined[i]) << "@B" << r.cuts[i].j;
  os << "\nterminal: " << to_string(r.terminal);
  if (r.horizon) os << " (finite horizon)";
  os << "\nfinal: " << format_submodel(r.final_sub) << "\n";
  SubmodelSpec cur = start;
  for (size_t i = 0; i < r.steps.size(); ++i) {
    os << "step " << i << ": " << to_string(r.steps[i].kind);
    if (r.steps[i].external) os << " external " << psi_label(*r.steps[i].external);
    os << "\n";
    if (i < r.adjoined.size()) cur = cur.with(r.adjoined[i], ambient.order);
  }
  return os.str();
}

std::vector<int> primitive_strip(const Model& ambient, const SubmodelSpec& s0, const Element& alpha) {
  SubmodelSpec cur = sorted_sub(ambient.order, s0);
  if (submodel_contains(ambient, cur, alpha)) throw DomainError("alpha lies in the span of the submodel");
  std::vector<int> found;
  while (!submodel_contains(ambient, cur, alpha)) {
    Element u = alpha - project(ambient, cur, alpha);
    Scalar total = u.coeff_sum();
    // psi or s of the normalized remainder sits right above its least position
    Element exposed = total.is_zero() ? ambient.psi(u) : ambient.succ((Scalar(1) / total) * u);
    PsiPosition p = exposed.terms().begin()->first;
    if (p.is_omega() || cur.has_copy(p.copy))
      throw DomainError("alpha is not a combination of copy units over the submodel");
    found.push_back(p.copy);
    cur = cur.with(p.copy, ambient.order);
  }
  return found;
}

AclResult acl_generate(const Model& ambient, const SubmodelSpec& s, const Element& x) {
  ExtensionReport r = classify_simple_extension(ambient, s, x);
  if (submodel_contains(ambient, s, x)) return {sorted_sub(ambient.order, s), false};
  return {r.final_sub, r.terminal == Terminal::span_plus_q_alpha};
}

bool in_acl(const Model& ambient, const SubmodelSpec& s, const Element& b, const Element& a) {
  AclResult r = acl_generate(ambient, s, b);
  if (submodel_contains(ambient, r.sub, a)) return true;
  if (!r.plus_q_x) return false;
  Element ub = b - project(ambient, r.sub, b);
  Element ua = a - project(ambient, r.sub, a);
  const auto& [p, c] = *ub.terms().begin();
  Scalar q = ua.coeff(p) / c;
  if (!q.is_rational()) return false;
  return submodel_contains(ambient, r.sub, a - q * b);
}

}  // namespace tlog
