#pragma once

#include "tlog/scalar.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace tlog {

// Omega(n) when copy == kOmega (k = n >= 0), else Copy(copy, k).
struct PsiPosition {
  static constexpr int kOmega = -1;
  int copy = kOmega;
  long k = 0;

  static PsiPosition omega(long n) { return {kOmega, n}; }
  static PsiPosition in_copy(int id, long k) { return {id, k}; }
  bool is_omega() const { return copy == kOmega; }

  // storage order only; the Psi order needs a PsiOrder
  friend auto operator<=>(const PsiPosition&, const PsiPosition&) = default;
};

std::string copy_name(int id);
std::string to_string(const PsiPosition& p);
PsiPosition parse_position(const std::string& text);

enum class StepDir { succ, pred };
enum class SRelation { same, much_less, much_greater };

// s-cut B_j: the tail of copies j..m-1; j == m is the empty cut
struct SCut {
  int j = 0;
  friend auto operator<=>(const SCut&, const SCut&) = default;
};

struct CutDescriptor {
  enum class Kind { at_position, between_omega_and_copies, between_copies, above_all };
  enum class Side { left, right };
  Kind kind = Kind::above_all;
  PsiPosition pos{};
  Side side = Side::right;
  int lower_copy = -1, upper_copy = -1;

  static CutDescriptor at(PsiPosition p, Side side) { return {Kind::at_position, p, side}; }
  static CutDescriptor omega_top() { return {Kind::between_omega_and_copies}; }
  static CutDescriptor between(int lo, int hi) {
    CutDescriptor c{Kind::between_copies};
    c.lower_copy = lo;
    c.upper_copy = hi;
    return c;
  }
  static CutDescriptor top() { return {Kind::above_all}; }
};

class PsiOrder {
public:
  PsiOrder() = default;
  explicit PsiOrder(std::vector<int> copies);
  static PsiOrder with_copies(int m);  // ids 0..m-1 in order

  const std::vector<int>& copies() const { return copies_; }
  int size() const { return static_cast<int>(copies_.size()); }
  bool has_copy(int id) const;
  // -1 for the omega part, else index of the copy in the sequence
  int rank(int copy) const;
  int rank(const PsiPosition& p) const { return p.is_omega() ? -1 : rank(p.copy); }
  int next_id() const;

  void validate(const PsiPosition& p) const;
  int compare(const PsiPosition& a, const PsiPosition& b) const;
  bool less(const PsiPosition& a, const PsiPosition& b) const { return compare(a, b) < 0; }
  std::optional<PsiPosition> step(const PsiPosition& p, StepDir dir) const;
  PsiPosition succ(const PsiPosition& p) const { return *step(p, StepDir::succ); }
  SRelation s_class_relation(const PsiPosition& a, const PsiPosition& b) const;

  std::vector<SCut> scut_list() const;
  bool in_cut(const PsiPosition& p, const SCut& b) const;  // p in B
  // s-cut a copy realizes relative to this order (copies of this order above it)
  SCut cut_of_rank(int ambient_rank_of_copy, const std::vector<int>& ambient_copies) const;

  friend bool operator==(const PsiOrder&, const PsiOrder&) = default;

private:
  std::vector<int> copies_;
  std::vector<int> rank_;  // indexed by id, -2 when absent
  void rebuild();
};

struct InsertResult {
  PsiOrder order;
  std::vector<int> new_ids;
  std::vector<SCut> cuts;
  PsiPosition relabel(const PsiPosition& p) const { return p; }
};

InsertResult insert_copies(const PsiOrder& p, const std::vector<SCut>& rho);

}  // namespace tlog
