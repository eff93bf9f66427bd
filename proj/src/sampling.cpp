#include "tlog/sampling.hpp"

namespace tlog {

long Sampler::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(gen_); }

Scalar Sampler::rational(bool nonzero) {
  while (true) {
    long p = uniform(-6, 6), q = uniform(1, 4);
    if (coin(0.5)) q = 1;
    if (nonzero && p == 0) continue;
    return Scalar::frac(p, q);
  }
}

Scalar Sampler::scalar(const Model& m, bool nonzero) {
  if (m.radicand == 0 || coin(0.6)) return rational(nonzero);
  return Scalar(rational().rat(), rational(true).rat(), m.radicand);
}

PsiPosition Sampler::position(const Model& m) {
  std::vector<int> all = m.order.copies();
  return position_in(m, all);
}

PsiPosition Sampler::position_in(const Model&, const std::vector<int>& copies) {
  if (copies.empty() || coin(0.4)) return PsiPosition::omega(uniform(0, omega_window));
  int id = copies[uniform(0, static_cast<long>(copies.size()) - 1)];
  return PsiPosition::in_copy(id, uniform(-copy_window, copy_window));
}

Element Sampler::element(const Model& m) { return element_in(m, m.order.copies(), m.radicand == 0); }

Element Sampler::element_in(const Model& m, const std::vector<int>& copies, bool rational_only) {
  long shape = uniform(0, 99);
  if (shape < 2) return Element();
  if (shape < 12) return Element::unit(position_in(m, copies), coin(0.7) ? Scalar(1) : rational(true));
  if (shape < 20) {
    Element x;
    long n = uniform(1, 3);
    for (long i = 0; i < n; ++i) x += rational(true) * Element::basis_e(uniform(0, omega_window));
    return x;
  }
  Element x;
  int n = static_cast<int>(uniform(1, max_terms));
  auto coef = [&](bool nz) { return rational_only ? rational(nz) : scalar(m, nz); };
  for (int i = 0; i < n; ++i) x.add_term(position_in(m, copies), coef(true));
  if (x.is_zero()) return x;
  if (shape < 75) {
    // force the coefficient sum to 0 or 1 on one term
    Scalar target = shape < 55 ? Scalar(0) : Scalar(1);
    const PsiPosition p = x.terms().begin()->first;
    x.add_term(p, target - x.coeff_sum());
  }
  return x;
}

Element Sampler::omega_element(long max_index) {
  std::vector<Scalar> v(max_index + 1);
  long lead = uniform(0, max_index);
  for (long i = lead; i <= max_index; ++i)
    if (i == lead || coin(0.5)) v[i] = rational(i == lead);
  return from_vector(v);
}

}  // namespace tlog
