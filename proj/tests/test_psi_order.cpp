#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlog/psi_order.hpp"
#include "tlog/scalar.hpp"

#include <random>
#include <set>

using namespace tlog;

namespace {

PsiPosition w(long n) { return PsiPosition::omega(n); }
PsiPosition b(int c, long k) { return PsiPosition::in_copy(c, k); }

std::vector<PsiPosition> window(const PsiOrder& o, long r) {
  std::vector<PsiPosition> out;
  for (long n = 0; n <= r; ++n) out.push_back(w(n));
  for (int c : o.copies())
    for (long k = -r; k <= r; ++k) out.push_back(b(c, k));
  return out;
}

}  // namespace

TEST_CASE("compare examples") {
  PsiOrder o = PsiOrder::with_copies(2);
  CHECK(o.compare(w(0), w(3)) < 0);
  CHECK(o.compare(w(100), b(0, -50)) < 0);
  CHECK(o.compare(b(0, 5), b(1, -9)) < 0);
  CHECK(o.compare(b(1, 2), b(1, 2)) == 0);
  CHECK_THROWS_AS(o.compare(b(7, 0), w(0)), DomainError);
}

TEST_CASE("total order on random triples") {
  PsiOrder o = PsiOrder::with_copies(3);
  std::vector<PsiPosition> all = window(o, 6);
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int i = 0; i < 3000; ++i) {
    const auto &x = all[pick(gen)], &y = all[pick(gen)], &z = all[pick(gen)];
    CHECK(o.compare(x, y) == -o.compare(y, x));
    CHECK((o.compare(x, y) == 0) == (x == y));
    if (o.less(x, y) && o.less(y, z)) CHECK(o.less(x, z));
  }
}

TEST_CASE("successor and predecessor") {
  PsiOrder o = PsiOrder::with_copies(2);
  CHECK(o.succ(w(2)) == w(3));
  CHECK(o.succ(b(0, -1)) == b(0, 0));
  CHECK_FALSE(o.step(w(0), StepDir::pred).has_value());
  for (const auto& p : window(o, 8)) {
    PsiPosition s = o.succ(p);
    CHECK(o.less(p, s));
    CHECK(*o.step(s, StepDir::pred) == p);
    if (p != w(0)) CHECK(o.succ(*o.step(p, StepDir::pred)) == p);
    // nothing strictly between p and s
    for (const auto& q : window(o, 9)) CHECK_FALSE((o.less(p, q) && o.less(q, s)));
  }
}

TEST_CASE("s-class relation") {
  PsiOrder o = PsiOrder::with_copies(2);
  CHECK(o.s_class_relation(w(3), w(7)) == SRelation::same);
  CHECK(o.s_class_relation(w(9), b(0, 0)) == SRelation::much_less);
  CHECK(o.s_class_relation(b(1, 2), b(0, 2)) == SRelation::much_greater);
  CHECK(o.s_class_relation(b(1, -20), b(1, 20)) == SRelation::same);
}

TEST_CASE("scut list examples") {
  CHECK(PsiOrder().scut_list() == std::vector<SCut>{{0}});
  PsiOrder o = PsiOrder::with_copies(2);
  CHECK(o.scut_list() == std::vector<SCut>{{0}, {1}, {2}});
  // B_0 is the larger set: ordering by reverse inclusion puts it first
  for (const auto& p : window(o, 4))
    if (o.in_cut(p, {1})) CHECK(o.in_cut(p, {0}));
}

TEST_CASE("s-cuts are exactly the copy tails") {
  // per-block thresholds: block X contains (X,k) for k >= t; none and all as extremes
  const long kNone = 1000, kAll = -1000;
  for (int m = 0; m <= 3; ++m) {
    PsiOrder o = PsiOrder::with_copies(m);
    std::vector<PsiPosition> win = window(o, 5);
    std::vector<long> choices{kNone, kAll, -1, 0, 2};
    std::vector<size_t> idx(m + 1, 0);
    std::set<std::vector<long>> found;
    for (;;) {
      std::vector<long> t;
      for (size_t i : idx) t.push_back(choices[i]);
      auto in_b = [&](const PsiPosition& p) {
        long th = t[p.is_omega() ? 0 : o.rank(p) + 1];
        return p.k >= th;
      };
      bool up = true, sclosed = true;
      for (const auto& p : win)
        for (const auto& q : win) {
          if (in_b(p) && o.less(p, q) && !in_b(q)) up = false;
        }
      for (const auto& p : win)
        if (!in_b(p) && in_b(o.succ(p))) sclosed = false;
      bool everything = std::all_of(win.begin(), win.end(), in_b);
      if (up && sclosed && !everything) found.insert(t);
      size_t i = 0;
      while (i < idx.size() && ++idx[i] == choices.size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
    std::set<std::vector<long>> expected;
    for (const auto& cut : o.scut_list()) {
      std::vector<long> t{kNone};
      for (int r = 0; r < m; ++r) t.push_back(r >= cut.j ? kAll : kNone);
      expected.insert(t);
      for (const auto& p : win) CHECK(o.in_cut(p, cut) == (!p.is_omega() && o.rank(p) >= cut.j));
    }
    CHECK(found == expected);
  }
}

TEST_CASE("insert copies examples") {
  InsertResult two = insert_copies(PsiOrder(), {{0}, {0}});
  REQUIRE(two.new_ids.size() == 2);
  CHECK(two.order.copies() == two.new_ids);  // first list entry to the left

  PsiOrder one = PsiOrder::with_copies(1);
  InsertResult below = insert_copies(one, {{0}});
  CHECK(below.order.copies() == std::vector<int>{below.new_ids[0], 0});
  CHECK(below.new_ids[0] == one.next_id());

  PsiOrder three = PsiOrder::with_copies(3);
  CHECK_THROWS_AS(insert_copies(three, {{2}, {1}}), DomainError);
  CHECK_THROWS_AS(insert_copies(three, {{4}}), DomainError);
}

TEST_CASE("inserted copies realize their cuts") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    int m = static_cast<int>(gen() % 4);
    PsiOrder o = PsiOrder::with_copies(m);
    std::vector<SCut> rho;
    int n = 1 + static_cast<int>(gen() % 3);
    for (int i = 0; i < n; ++i) rho.push_back({static_cast<int>(gen() % (m + 1))});
    std::sort(rho.begin(), rho.end());
    InsertResult ins = insert_copies(o, rho);
    const PsiOrder& p = ins.order;
    // old positions keep their order
    for (const auto& x : window(o, 4))
      for (const auto& y : window(o, 4)) CHECK(p.compare(ins.relabel(x), ins.relabel(y)) == o.compare(x, y));
    for (size_t i = 0; i < rho.size(); ++i) {
      int id = ins.new_ids[i];
      for (long k = -16; k <= 16; ++k) {
        PsiPosition nk = b(id, k);
        CHECK(p.succ(nk) == b(id, k + 1));
        for (long l = -16; l <= 16; ++l) {
          CHECK(p.less(w(l < 0 ? -l : l), nk));
          for (int r = 0; r < m; ++r) {
            bool in_b = r >= rho[i].j;
            CHECK(p.less(nk, b(o.copies()[r], l)) == in_b);
          }
          for (size_t j = i + 1; j < rho.size(); ++j) CHECK(p.less(nk, b(ins.new_ids[j], l)));
        }
      }
    }
  }
}

TEST_CASE("position text") {
  CHECK(to_string(w(4)) == "w4");
  CHECK(to_string(b(2, -3)) == "b[c2,-3]");
  CHECK(parse_position("b[c2,-3]") == b(2, -3));
  CHECK(parse_position("w4") == w(4));
  CHECK_THROWS_AS(parse_position("q7"), DomainError);
}
