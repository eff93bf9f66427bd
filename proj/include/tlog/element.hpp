#pragma once

#include "tlog/psi_order.hpp"
#include "tlog/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace tlog {

// Finite scalar combination of Psi positions, or infinity.
class Element {
public:
  using Terms = std::map<PsiPosition, Scalar>;

  Element() = default;
  static Element inf();
  static Element unit(const PsiPosition& p, Scalar c = 1);
  static Element basis_e(long n);  // e_n in the vector view

  bool is_inf() const { return inf_; }
  bool is_zero() const { return !inf_ && terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Scalar coeff(const PsiPosition& p) const;
  Scalar coeff_sum() const;
  bool is_unit() const;  // exactly one term with coefficient 1

  void add_term(const PsiPosition& p, const Scalar& c);

  Element operator-() const;
  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator*(const Scalar& c, const Element& x);
  Element& operator+=(const Element& y) {
    if (inf_ || y.inf_) return *this = inf();
    if (this == &y) return *this = Element(*this) + y;
    for (const auto& [p, c] : y.terms_) add_term(p, c);
    return *this;
  }
  Element& operator-=(const Element& y) {
    if (inf_ || y.inf_) return *this = inf();
    if (this == &y) return *this = Element();
    for (const auto& [p, c] : y.terms_) add_term(p, -c);
    return *this;
  }
  Element div(long n) const;  // delta_n

  friend bool operator==(const Element&, const Element&) = default;
  friend bool operator<(const Element& x, const Element& y) {  // storage order, for containers
    if (x.inf_ != y.inf_) return y.inf_;
    return x.terms_ < y.terms_;
  }

private:
  Terms terms_;
  bool inf_ = false;
};

// Finitely presented model: omega followed by the copies of its PsiOrder,
// coefficients in Q or Q(sqrt d).
struct Model {
  PsiOrder order;
  long radicand = 0;

  static Model prime(long radicand = 0) { return {PsiOrder{}, radicand}; }
  static Model with_copies(int m, long radicand = 0) { return {PsiOrder::with_copies(m), radicand}; }

  void check(const Element& x) const;
  PsiPosition min_support(const Element& x) const;
  std::vector<std::pair<PsiPosition, Scalar>> sorted_terms(const Element& x) const;

  int sign(const Element& x) const;
  int compare(const Element& x, const Element& y) const;  // inf is the maximum
  bool less(const Element& x, const Element& y) const { return compare(x, y) < 0; }
  Element abs(const Element& x) const { return sign(x) < 0 ? -x : x; }

  Element s0() const { return Element::unit(PsiPosition::omega(0)); }
  Element psi(const Element& x) const;
  Element succ(const Element& x) const;  // s
  Element pred(const Element& x) const;  // p
  Element integral(const Element& x) const;
  Element contraction(const Element& x) const;
  Element dagger(const Element& x) const { return psi(x); }
  Element prime_of(const Element& x) const;  // x' = x + psi(x)
  int class_compare(const Element& x, const Element& y) const;
  bool in_positive_integrals(const Element& x) const;
  bool in_psi(const Element& x) const;  // x is a unit at some position

  friend bool operator==(const Model&, const Model&) = default;
};

// vector view: coefficients of e_0, e_1, ... (omega-supported elements only)
std::vector<Scalar> to_vector(const Element& x);
Element from_vector(const std::vector<Scalar>& v);
// lexicographic sign of a coefficient vector: sign of the first nonzero entry
int lex_sign(const std::vector<Scalar>& v);

std::string format_element(const Element& x);
// omega part in the e-basis, copy part unchanged
std::string format_element_e(const Element& x);
std::string psi_label(const PsiPosition& p);  // w_n printed as s^{n+1}0

}  // namespace tlog
