#pragma once

#include <concepts>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

namespace tlog {

struct CheckResult {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::vector<std::string> examples;  // first few counterexamples

  void pass() { ++checked; }
  void fail(const std::string& why);
  void expect(bool ok, const std::string& why) { ok ? pass() : fail(why); }
  // the message is only built on failure
  template <std::invocable F>
  void expect(bool ok, F&& why) {
    ok ? pass() : fail(std::string(why()));
  }
};

struct Report {
  std::string title;
  std::uint64_t seed = 0;
  long samples = 0;
  std::deque<CheckResult> checks;
  std::vector<std::string> notes;

  CheckResult& add(const std::string& name);
  CheckResult* find(const std::string& name);
  bool ok() const;
  std::vector<std::string> failed_names() const;
  std::string plain() const;
  std::string machine() const;
  void merge(const Report& other, const std::string& prefix = "");
};

}  // namespace tlog
