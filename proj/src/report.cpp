#include "tlog/report.hpp"

#include <sstream>

namespace tlog {

void CheckResult::fail(const std::string& why) {
  ++checked;
  ++failed;
  if (examples.size() < 3) examples.push_back(why);
}

CheckResult& Report::add(const std::string& name) {
  if (auto* c = find(name)) return *c;
  checks.push_back(CheckResult{name, 0, 0, {}});
  return checks.back();
}

CheckResult* Report::find(const std::string& name) {
  for (auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::ok() const {
  for (const auto& c : checks)
    if (c.failed) return false;
  return true;
}

std::vector<std::string> Report::failed_names() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.failed) out.push_back(c.name);
  return out;
}

std::string Report::plain() const {
  std::ostringstream os;
  os << title << " (samples " << samples << ", seed " << seed << ")\n";
  for (const auto& c : checks) {
    os << "  " << (c.failed ? "FAIL" : "ok  ") << "  " << c.name << "  [" << c.checked << " checked";
    if (c.failed) os << ", " << c.failed << " failed";
    os << "]\n";
    for (const auto& e : c.examples) os << "        " << e << "\n";
  }
  for (const auto& n : notes) os << "  note: " << n << "\n";
  os << (ok() ? "all checks passed" : "FAILURES present") << "\n";
  return os.str();
}

std::string Report::machine() const {
  std::ostringstream os;
  os << "suite=" << title << "\nseed=" << seed << "\nsamples=" << samples << "\n";
  for (const auto& c : checks) {
    os << "check=" << c.name << ";checked=" << c.checked << ";failed=" << c.failed << "\n";
    for (const auto& e : c.examples) os << "counterexample=" << c.name << ";" << e << "\n";
  }
  for (const auto& n : notes) os << "note=" << n << "\n";
  os << "ok=" << (ok() ? 1 : 0) << "\n";
  return os.str();
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    CheckResult& mine = add(prefix + c.name);
    mine.checked += c.checked;
    mine.failed += c.failed;
    for (const auto& e : c.examples)
      if (mine.examples.size() < 3) mine.examples.push_back(e);
  }
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

}  // namespace tlog
