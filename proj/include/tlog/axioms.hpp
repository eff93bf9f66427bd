#pragma once

#include "tlog/couple.hpp"
#include "tlog/report.hpp"

#include <cstdint>
#include <vector>

namespace tlog {

struct AxiomOptions {
  bool t0 = true;             // the five T0 clauses
  bool core_formulas = true;  // sum formulas, successor gap, far-from-zero agreement
};

// the deterministic sample pool the suite runs over
std::vector<Element> axiom_pool(const Model& m, long samples, std::uint64_t seed);

Report axiom_check(const Couple& c, long samples, std::uint64_t seed, AxiomOptions opts = {});

// the same suite over the prime model and models with 1..4 copies
Report axiom_check_models(long samples_per_model, std::uint64_t seed, long radicand = 0);

}  // namespace tlog
