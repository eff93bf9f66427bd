#pragma once

#include "tlog/element.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace tlog {

// Deterministic generator for scalars, positions and elements of a model.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi);  // inclusive
  bool coin(double p);
  std::uint64_t next() { return gen_(); }

  Scalar rational(bool nonzero = false);
  Scalar scalar(const Model& m, bool nonzero = false);
  PsiPosition position(const Model& m);
  PsiPosition position_in(const Model& m, const std::vector<int>& copies);  // omega or one of the copies
  Element psi_unit(const Model& m) { return Element::unit(position(m)); }
  // mixture of shapes: zero, units, e-basis vectors, sum-zero and sum-one
  // combinations, free combinations
  Element element(const Model& m);
  Element element_in(const Model& m, const std::vector<int>& copies, bool rational_only);
  Element omega_element(long max_index);

  long omega_window = 7;
  long copy_window = 3;
  int max_terms = 5;

private:
  std::mt19937_64 gen_;
};

}  // namespace tlog
