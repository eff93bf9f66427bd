#pragma once

#include "tlog/couple.hpp"
#include "tlog/report.hpp"
#include "tlog/sampling.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>

namespace tlog {

// psi + eps on the fibre of the s-cut B, psi elsewhere. No cut means B = Psi.
class ShiftedCouple : public Couple {
public:
  ShiftedCouple(Model base, std::optional<SCut> cut, Element eps);

  const std::optional<SCut>& cut() const { return cut_; }
  const Element& eps() const { return eps_; }
  const BaseCouple& base() const { return base_; }
  bool whole_psi() const { return !cut_.has_value(); }
  bool in_shift_set(const Element& v) const;  // v a base psi-value

  Element psi(const Element& x) const override;
  Element succ(const Element& x) const override;
  std::vector<Element> psi_witnesses(const Element& x) const override;
  // every b with b = psi~(x - b) among the candidates
  std::vector<Element> succ_solutions(const Element& x) const;
  std::string describe() const;

private:
  BaseCouple base_;
  std::optional<SCut> cut_;
  Element eps_;
  // solved successors; not safe to share one couple across threads
  std::shared_ptr<std::map<Element, Element>> succ_cache_ = std::make_shared<std::map<Element, Element>>();
  std::vector<Element> candidates(const Element& x) const;
};

// B a tail cut strictly inside Psi and eps with psi(eps) in B; needs at least one copy
ShiftedCouple random_shift(const Model& m, Sampler& rng);

Report shift_check(const ShiftedCouple& c, long samples, std::uint64_t seed);

// odd extension of the contraction map
Element precontraction_chi(const Couple& c, const Element& x);
using ChiMap = std::function<Element(const Element&)>;
Report precontraction_check(const Model& m, const ChiMap& chi, long samples, std::uint64_t seed);
inline Report precontraction_check(const Couple& c, long samples, std::uint64_t seed) {
  return precontraction_check(c.model(), [&c](const Element& x) { return precontraction_chi(c, x); }, samples, seed);
}

// psi and a shift of it past copy 1 of a two-copy model share chi_PG but differ at a witness
Report chi_collision_demo(long samples, std::uint64_t seed);

}  // namespace tlog
