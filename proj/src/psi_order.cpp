#include "tlog/psi_order.hpp"

#include <algorithm>
#include <cctype>

namespace tlog {

std::string copy_name(int id) { return "c" + std::to_string(id); }

std::string to_string(const PsiPosition& p) {
  if (p.is_omega()) return "w" + std::to_string(p.k);
  return "b[" + copy_name(p.copy) + "," + std::to_string(p.k) + "]";
}

static int parse_copy_id(const std::string& s) {
  if (s.size() < 2 || s[0] != 'c' || !std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw DomainError("bad copy identifier '" + s + "'");
  return std::stoi(s.substr(1));
}

PsiPosition parse_position(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() >= 2 && t[0] == 'w') {
    if (!std::all_of(t.begin() + 1, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw DomainError("bad position '" + text + "'");
    return PsiPosition::omega(std::stol(t.substr(1)));
  }
  if (t.size() > 4 && t.rfind("b[", 0) == 0 && t.back() == ']') {
    auto comma = t.find(',');
    if (comma == std::string::npos) throw DomainError("bad position '" + text + "'");
    int id = parse_copy_id(t.substr(2, comma - 2));
    return PsiPosition::in_copy(id, std::stol(t.substr(comma + 1, t.size() - comma - 2)));
  }
  throw DomainError("bad position '" + text + "'");
}

PsiOrder::PsiOrder(std::vector<int> copies) : copies_(std::move(copies)) { rebuild(); }

PsiOrder PsiOrder::with_copies(int m) {
  std::vector<int> ids(m);
  for (int i = 0; i < m; ++i) ids[i] = i;
  return PsiOrder(ids);
}

void PsiOrder::rebuild() {
  int top = 0;
  for (int id : copies_) {
    if (id < 0) throw DomainError("copy ids must be nonnegative");
    top = std::max(top, id + 1);
  }
  rank_.assign(top, -2);
  for (size_t i = 0; i < copies_.size(); ++i) {
    if (rank_[copies_[i]] != -2) throw DomainError("duplicate copy id " + copy_name(copies_[i]));
    rank_[copies_[i]] = static_cast<int>(i);
  }
}

bool PsiOrder::has_copy(int id) const { return id >= 0 && id < static_cast<int>(rank_.size()) && rank_[id] >= 0; }

int PsiOrder::rank(int copy) const {
  if (copy == PsiPosition::kOmega) return -1;
  if (!has_copy(copy)) throw DomainError("unknown copy id " + copy_name(copy));
  return rank_[copy];
}

int PsiOrder::next_id() const { return static_cast<int>(rank_.size()); }

void PsiOrder::validate(const PsiPosition& p) const {
  if (p.is_omega()) {
    if (p.k < 0) throw DomainError("omega index must be nonnegative");
  } else {
    rank(p.copy);
  }
}

int PsiOrder::compare(const PsiPosition& a, const PsiPosition& b) const {
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  if (a.k != b.k) return a.k < b.k ? -1 : 1;
  return 0;
}

std::optional<PsiPosition> PsiOrder::step(const PsiPosition& p, StepDir dir) const {
  validate(p);
  if (dir == StepDir::succ) return PsiPosition{p.copy, p.k + 1};
  if (p.is_omega() && p.k == 0) return std::nullopt;
  return PsiPosition{p.copy, p.k - 1};
}

SRelation PsiOrder::s_class_relation(const PsiPosition& a, const PsiPosition& b) const {
  int ra = rank(a), rb = rank(b);
  if (ra == rb) return SRelation::same;
  return ra < rb ? SRelation::much_less : SRelation::much_greater;
}

std::vector<SCut> PsiOrder::scut_list() const {
  std::vector<SCut> out;
  for (int j = 0; j <= size(); ++j) out.push_back({j});
  return out;
}

bool PsiOrder::in_cut(const PsiPosition& p, const SCut& b) const {
  if (b.j < 0 || b.j > size()) throw DomainError("invalid s-cut index");
  int r = rank(p);
  return r >= 0 && r >= b.j;
}

SCut PsiOrder::cut_of_rank(int ambient_rank, const std::vector<int>& ambient_copies) const {
  int below = 0;
  for (int r = 0; r < ambient_rank; ++r)
    if (has_copy(ambient_copies[r])) ++below;
  return {below};
}

InsertResult insert_copies(const PsiOrder& p, const std::vector<SCut>& rho) {
  for (size_t i = 0; i < rho.size(); ++i) {
    if (rho[i].j < 0 || rho[i].j > p.size()) throw DomainError("invalid s-cut index " + std::to_string(rho[i].j));
    if (i > 0 && rho[i].j < rho[i - 1].j) throw DomainError("cut list must be nondecreasing");
  }
  InsertResult res;
  res.cuts = rho;
  std::vector<int> seq;
  int fresh = p.next_id();
  size_t next = 0;
  const auto& old = p.copies();
  for (int j = 0; j <= p.size(); ++j) {
    // new copies for cut B_j sit just below old copy j, in list order
    while (next < rho.size() && rho[next].j == j) {
      seq.push_back(fresh);
      res.new_ids.push_back(fresh);
      ++fresh;
      ++next;
    }
    if (j < p.size()) seq.push_back(old[j]);
  }
  res.order = PsiOrder(seq);
  return res;
}

}  // namespace tlog
