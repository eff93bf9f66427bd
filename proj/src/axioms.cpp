#include "tlog/axioms.hpp"

#include "tlog/sampling.hpp"

#include <algorithm>

namespace tlog {

std::vector<Element> axiom_pool(const Model& m, long samples, std::uint64_t seed) {
  Sampler rng(seed);
  std::vector<Element> pool;
  pool.reserve(samples);
  pool.push_back(Element());
  pool.push_back(m.s0());
  for (long i = static_cast<long>(pool.size()); i < samples; ++i) pool.push_back(rng.element(m));
  return pool;
}

namespace {

std::string F(const Element& x) { return format_element(x); }

struct Suite {
  const Couple& c;
  const Model& m;
  Report& r;
  const std::vector<Element>& pool;
  Sampler rng;

  bool lt(const Element& a, const Element& b) const { return m.compare(a, b) < 0; }
  bool le(const Element& a, const Element& b) const { return m.compare(a, b) <= 0; }

  void valuation(long i, const Element& x, const Element& y) {
    if (x.is_zero()) r.add("psi(0) = inf").expect(c.psi(x).is_inf(), [&] { return "psi(0) = " + F(c.psi(x)); });
    if (x.is_zero()) return;
    Element px = c.psi(x);
    auto& ac2 = r.add("AC2");
    for (long k = 1; k <= 10; ++k)
      for (long sg : {1L, -1L}) ac2.expect(c.psi(Scalar(sg * k) * x) == px, [&] { return "x=" + F(x) + " n=" + std::to_string(sg * k); });
    if (y.is_zero()) return;
    Element py = c.psi(y);
    Element sum = x + y;
    if (!sum.is_zero()) {
      Element mn = lt(px, py) ? px : py;
      r.add("AC1").expect(le(mn, c.psi(sum)), [&] { return "x=" + F(x) + " y=" + F(y); });
    }
    if (m.sign(x) > 0) r.add("AC3").expect(lt(py, x + px), [&] { return "x=" + F(x) + " y=" + F(y); });
    Element a = m.abs(x), b = m.abs(y);
    if (lt(b, a)) std::swap(a, b);
    r.add("HC").expect(le(c.psi(b), c.psi(a)), [&] { return "a=" + F(a) + " b=" + F(b); });
    if (lt(px, py)) r.add("valuation strict min").expect(c.psi(sum) == px, [&] { return "x=" + F(x) + " y=" + F(y); });
    if (lt(py, px)) r.add("valuation strict min").expect(c.psi(sum) == py, [&] { return "x=" + F(x) + " y=" + F(y); });
    Element xp = x + px, yp = y + py;
    if (lt(x, y)) r.add("prime strictly increasing").expect(lt(xp, yp), [&] { return "x=" + F(x) + " y=" + F(y); });
    if (lt(y, x)) r.add("prime strictly increasing").expect(lt(yp, xp), [&] { return "x=" + F(x) + " y=" + F(y); });
    (void)i;
  }

  void integration(const Element& x, const Element& y) {
    Element sx = c.succ(x);
    Element b = x - sx;
    r.add("asymptotic integration")
        .expect(!b.is_zero() && b + c.psi(b) == x, [&] { return "x=" + F(x) + " s(x)=" + F(sx); });
    int ib = m.sign(b);
    if (ib < 0) r.add("negative integral => x < s x").expect(lt(x, sx), [&] { return "x=" + F(x); });
    if (ib > 0) r.add("positive integral => x > s x").expect(lt(sx, x), [&] { return "x=" + F(x); });

    Element lo = x, hi = y;
    if (lt(hi, lo)) std::swap(lo, hi);
    if (lt(lo, hi)) {
      if (m.sign(c.integral(hi)) < 0)
        r.add("s monotone below (G>)'").expect(le(c.succ(lo), c.succ(hi)), [&] { return "lo=" + F(lo) + " hi=" + F(hi); });
      if (m.sign(c.integral(lo)) > 0)
        r.add("s antitone above (G<)'").expect(le(c.succ(hi), c.succ(lo)), [&] { return "lo=" + F(lo) + " hi=" + F(hi); });
    }

    auto& fixed = r.add("b = psi(x-b) iff b = s x");
    fixed.expect(c.psi(x - sx) == sx, [&] { return "forward x=" + F(x); });
    std::vector<Element> cands{c.psi(y), c.succ(y), c.s0()};
    for (const auto& w : c.psi_witnesses(x)) cands.push_back(c.psi(w));
    for (const auto& bb : cands) {
      if (bb.is_inf()) continue;
      if (c.psi(x - bb) == bb) fixed.expect(bb == sx, [&] { return "reverse x=" + F(x) + " b=" + F(bb); });
    }

    Element sy = c.succ(y);
    if (lt(sx, sy)) r.add("psi of successor gap").expect(c.psi(y - x) == sx, [&] { return "x=" + F(x) + " y=" + F(y); });
    if (lt(sy, sx)) r.add("psi of successor gap").expect(c.psi(x - y) == sy, [&] { return "x=" + F(x) + " y=" + F(y); });
  }

  void contraction(const Element& x, const Element& y) {
    if (m.sign(x) >= 0) return;
    Element cx = c.contraction(x);
    r.add("contraction lowers class").expect(m.sign(cx) < 0 && c.class_compare(x, cx) > 0, [&] { return "x=" + F(x); });
    r.add("contraction identity").expect(cx + c.psi(cx) == c.psi(x), [&] { return "x=" + F(x); });
    if (m.sign(y) < 0) {
      Element lo = x, hi = y;
      if (lt(hi, lo)) std::swap(lo, hi);
      if (lt(lo, hi))
        r.add("contraction monotone").expect(le(c.contraction(lo), c.contraction(hi)), [&] { return "lo=" + F(lo) + " hi=" + F(hi); });
    }
  }

  std::vector<Element> psi_values(const Element& x, const Element& y) {
    std::vector<Element> vals;
    auto push = [&](const Element& v) {
      if (!v.is_inf() && std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
    };
    push(c.psi(x));
    push(c.psi(y));
    for (const auto& w : c.psi_witnesses(x + y)) push(c.psi(w));
    return vals;
  }

  void sum_formulas(const Element& x, const Element& y) {
    std::vector<Element> vals = psi_values(x, y);
    long n = std::min<long>(rng.uniform(1, 8), static_cast<long>(vals.size()));
    std::shuffle(vals.begin(), vals.end(), std::mt19937_64(rng.next()));
    vals.resize(n);
    std::sort(vals.begin(), vals.end(), [&](const Element& a, const Element& b) { return lt(a, b); });
    std::vector<Scalar> q(n);
    for (auto& v : q) v = rng.rational(true);
    long mode = rng.uniform(0, 2);
    if (mode > 0 && n > 1) {
      Scalar rest;
      for (long j = 1; j < n; ++j) rest += q[j];
      Scalar want = mode == 1 ? Scalar(0) : Scalar(1);
      if (want - rest != Scalar(0)) q[0] = want - rest;
    }
    Element a;
    Scalar total;
    for (long j = 0; j < n; ++j) {
      a += q[j] * vals[j];
      total += q[j];
    }
    std::string tag = "alpha=" + F(a);
    if (total.is_zero()) r.add("sum 0 => psi = s(least)").expect(c.psi(a) == c.succ(vals[0]), tag);
    else r.add("sum != 0 => psi = s0").expect(c.psi(a) == c.s0(), tag);
    if (total == Scalar(1)) r.add("sum 1 => s = s(least)").expect(c.succ(a) == c.succ(vals[0]), tag);
    else r.add("sum != 1 => s = s0").expect(c.succ(a) == c.s0(), tag);
  }

  void far_from_zero(const Element& x) {
    Element s0 = c.s0();
    Element as0 = m.abs(s0), ax = m.abs(x);
    for (Scalar q : {Scalar::frac(1, 2), Scalar(1), Scalar(7)}) {
      if (lt((Scalar(1) + q) * as0, ax)) r.add("s = psi far from zero").expect(c.succ(x) == c.psi(x), [&] { return "x=" + F(x); });
    }
  }

  void top_copy(const Element& x) {
    if (!dynamic_cast<const BaseCouple*>(&c)) return;
    InsertResult ext = insert_copies(m.order, {SCut{m.order.size()}});
    Model star{ext.order, m.radicand};
    Element g = Element::unit(PsiPosition::in_copy(ext.new_ids[0], rng.uniform(-5, 5)));
    r.add("s via new top copy").expect(c.succ(x) == star.psi(x - g), [&] { return "x=" + F(x); });
  }

  Element least_seen;
  bool have_least = false;

  void t0(const Element& x, const Element& y) {
    Element s0 = c.s0();
    if (x.is_zero()) return;
    Element v = c.psi(x);
    if (!have_least || lt(v, least_seen)) {
      least_seen = v;
      have_least = true;
    }
    r.add("T0 least element").expect(le(s0, v), [&] { return "psi(" + F(x) + ") = " + F(v) + " < s0 = " + F(s0); });
    Element sv = c.succ(v);
    r.add("T0 successor set").expect(lt(v, sv) && c.in_psi_set(sv), [&] { return "v=" + F(v) + " s(v)=" + F(sv); });
    auto& imm = r.add("T0 immediate successor is s");
    bool clean = true;
    std::vector<Element> probes{c.psi(y)};
    for (const auto& w : c.psi_witnesses(v)) probes.push_back(c.psi(w));
    for (const auto& w : c.psi_witnesses(sv)) probes.push_back(c.psi(w));
    std::string bad;
    for (const auto& u : probes)
      if (!u.is_inf() && lt(v, u) && lt(u, sv)) {
        clean = false;
        bad = F(u);
      }
    imm.expect(clean, [&] { return "between " + F(v) + " and " + F(sv) + ": " + bad; });
    auto& bij = r.add("T0 s bijective");
    if (!y.is_zero()) {
      Element u = c.psi(y);
      if (c.succ(u) == sv) bij.expect(u == v, [&] { return "s(" + F(u) + ") = s(" + F(v) + ")"; });
    }
    if (lt(s0, v)) {
      Element pv = c.pred(v);
      bij.expect(!pv.is_inf() && c.in_psi_set(pv) && c.succ(pv) == v, [&] { return "no preimage for " + F(v); });
    }
  }
};

}  // namespace

Report axiom_check(const Couple& c, long samples, std::uint64_t seed, AxiomOptions opts) {
  Report r;
  r.title = "axioms";
  r.seed = seed;
  r.samples = samples;
  const Model& m = c.model();
  std::vector<Element> pool = axiom_pool(m, samples, seed);
  Suite s{c, m, r, pool, Sampler(seed ^ 0x9e3779b97f4a7c15ULL), Element(), false};
  long n = static_cast<long>(pool.size());
  if (opts.t0) {
    Element s0 = c.s0();
    r.add("T0 s0 positive").expect(m.sign(s0) > 0, [&] { return "s0 = " + F(s0); });
    r.add("T0 least element").expect(c.in_psi_set(s0), [&] { return "s0 = " + F(s0) + " not in Psi"; });
  }
  if (opts.core_formulas) {
    Element s0 = c.s0();
    r.add("s = psi far from zero").expect(c.succ(s0) != c.psi(s0), [&] { return "boundary s0"; });
  }
  for (long i = 0; i < n; ++i) {
    const Element& x = pool[i];
    const Element& y = pool[(i * 7919 + 13) % n];
    s.valuation(i, x, y);
    s.integration(x, y);
    s.contraction(x, y);
    if (opts.core_formulas) {
      s.sum_formulas(x, y);
      s.far_from_zero(x);
      s.top_copy(x);
    }
    if (opts.t0) s.t0(x, y);
  }
  if (opts.t0 && s.have_least) {
    Element s0 = c.s0();
    if (s.least_seen != s0) {
      if (s.least_seen.is_zero()) r.notes.push_back("least element is 0");
      else r.notes.push_back("least element is " + F(s.least_seen) + ", not s0");
      auto& le = r.add("T0 least element");
      if (!le.failed) le.fail("least psi value " + F(s.least_seen) + " differs from s0 = " + F(s0));
    }
  }
  return r;
}

Report axiom_check_models(long samples_per_model, std::uint64_t seed, long radicand) {
  Report all;
  all.title = "axioms over prime and 1..4 copies";
  all.seed = seed;
  all.samples = samples_per_model;
  for (int m = 0; m <= 4; ++m) {
    BaseCouple c(Model::with_copies(m, radicand));
    Report r = axiom_check(c, samples_per_model, seed + static_cast<std::uint64_t>(m));
    all.merge(r);
  }
  return all;
}

}  // namespace tlog
