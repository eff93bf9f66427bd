#pragma once

#include "tlog/element.hpp"

#include <optional>
#include <vector>

namespace tlog {

// An asymptotic couple on the group of a Model: psi and s are supplied by
// the concrete couple, everything else is derived from them.
class Couple {
public:
  explicit Couple(Model m) : model_(std::move(m)) {}
  virtual ~Couple() = default;

  const Model& model() const { return model_; }

  virtual Element psi(const Element& x) const = 0;
  virtual Element succ(const Element& x) const = 0;
  virtual Element pred(const Element& x) const;
  // elements whose psi values enumerate the Psi-set around the support of x
  virtual std::vector<Element> psi_witnesses(const Element& x) const;

  int sign(const Element& x) const { return model_.sign(x); }
  int compare(const Element& x, const Element& y) const { return model_.compare(x, y); }
  bool less(const Element& x, const Element& y) const { return model_.less(x, y); }
  Element s0() const { return succ(Element()); }
  Element integral(const Element& x) const;
  Element contraction(const Element& x) const;
  Element prime_of(const Element& x) const;
  // the group's archimedean classes do not depend on psi
  int class_compare(const Element& x, const Element& y) const { return model_.class_compare(x, y); }
  bool in_positive_integrals(const Element& x) const { return sign(integral(x)) > 0; }
  std::optional<Element> psi_preimage(const Element& v) const;  // x with psi(x) == v
  bool in_psi_set(const Element& v) const { return psi_preimage(v).has_value(); }

protected:
  Model model_;
};

class BaseCouple : public Couple {
public:
  using Couple::Couple;
  Element psi(const Element& x) const override { return model_.psi(x); }
  Element succ(const Element& x) const override { return model_.succ(x); }
  Element pred(const Element& x) const override { return model_.pred(x); }
};

// A couple that differs from another at one point; used for fault injection.
class MutatedCouple : public Couple {
public:
  enum class Target { psi, succ };
  MutatedCouple(const Couple& base, Target t, Element at, Element value)
      : Couple(base.model()), base_(base), target_(t), at_(std::move(at)), value_(std::move(value)) {}
  Element psi(const Element& x) const override {
    return target_ == Target::psi && x == at_ ? value_ : base_.psi(x);
  }
  Element succ(const Element& x) const override {
    return target_ == Target::succ && x == at_ ? value_ : base_.succ(x);
  }

private:
  const Couple& base_;
  Target target_;
  Element at_, value_;
};

// positions in the support of x together with their neighbours and w0
std::vector<PsiPosition> neighbourhood(const Model& m, const Element& x);

}  // namespace tlog
