#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

std::filesystem::path workdir() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("tlog-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  std::string cmd = "cd '" + workdir().string() + "' && '" TLOG_CLI "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("eval") {
  CHECK(run("eval 'psi(e0+e1)'").out == "e0\n");
  CHECK(run("--basis w eval 'psi(e0+e1)'").out == "w0\n");
  CHECK(run("eval 's(0) < e0 + e0'").out == "true\n");
  CHECK(run("eval 'p(0)'").out == "inf\n");
  CHECK(run("--format machine eval 'psi(e0+e1)'").out == "value=e0\n");
}

TEST_CASE("trace of the irrational coefficient") {
  Run r = run("trace --model prime:2 --sub omega/Q --alpha 'sqrt2*e2'");
  CHECK(r.code == 0);
  CHECK(r.out.find("Case1") != std::string::npos);
  CHECK(r.out.find("{s0, s^2 0, s^3 0}") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("eval 'psi(e0'").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("eval 'b[c0,0]'").code == 1);
  CHECK(run("sign 'psi(0)'").code == 1);
  CHECK(run("eval 'e0'").code == 0);
}

TEST_CASE("check reports are reproducible") {
  Run a = run("check --suite axioms --samples 300 --seed 7");
  Run b = run("check --suite axioms --samples 300 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed") != std::string::npos);
}

TEST_CASE("workspace and render") {
  std::filesystem::remove(workdir() / "tlog-workspace.json");
  CHECK(run("model new M --copies 0").code == 0);
  Run plain = run("render psi --model M");
  CHECK(plain.code == 0);
  CHECK(plain.out.find("sup Psi") != std::string::npos);
  CHECK(run("model extend M --cuts 0,0 --as M2").code == 0);
  Run ext = run("render psi --model M2");
  CHECK(ext.out.find("c0") != std::string::npos);
  CHECK(ext.out.find("c1") != std::string::npos);
  CHECK(run("let a 'b[c1,0] - w3' --model M2").code == 0);
  Run sign = run("sign a --model M2");
  CHECK(sign.out == "1\n");
  Run shown = run("model show M2");
  CHECK(shown.out.find("a = -w3 + b[c1,0]") != std::string::npos);
}

TEST_CASE("repl") {
  Run r = run("repl <<'END'\nlet x = e0 + e1\npsi(x)\nsign -x\nquit\nEND");
  CHECK(r.out.find("x = e0 + e1") != std::string::npos);
  CHECK(r.out.find("e0\n") != std::string::npos);
  CHECK(r.out.find("-1\n") != std::string::npos);
}
