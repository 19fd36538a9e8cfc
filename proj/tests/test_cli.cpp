// Golden tests for the command-line front end.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(UXL_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {127, ""};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

int failures = 0;

void expect_eq(const std::string& what, const std::string& got, const std::string& want) {
  if (got != want) {
    ++failures;
    std::cerr << "FAIL " << what << "\n  got:  <<<" << got << ">>>\n  want: <<<" << want
              << ">>>\n";
  }
}

void expect(const std::string& what, bool ok) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL " << what << "\n";
  }
}

}  // namespace

int main() {
  {
    RunResult r = run("stype --term \"w\"");
    expect("stype exit", r.exit_code == 0);
    expect_eq("stype text", r.out, "w + 1\n");
  }
  {
    RunResult r = run("stype --term \"w\" --json");
    expect_eq("stype json", r.out,
              "{\n  \"iterate\": 1,\n  \"result\": \"w + 1\",\n  \"term\": \"w\"\n}\n");
  }
  {
    RunResult r = run("rel --term \"w\" --rel lt --left \"L:top#a\" --right \"L:top#a\"");
    expect("rel exit", r.exit_code == 0);
    expect_eq("rel text", r.out, "true\n");
  }
  {
    RunResult r = run("rel --term \"w\" --rel lt --left \"L:top#a\" --right \"L:top#a\" --json");
    expect_eq("rel json", r.out,
              "{\n  \"left\": \"L:top#a\",\n  \"rel\": \"lt\",\n  \"result\": true,\n"
              "  \"right\": \"L:top#a\",\n  \"term\": \"w\"\n}\n");
  }
  {
    RunResult r = run("minmax --term \"w\" --op max --left \"pt:5\" --right \"L:top#a\"");
    expect("minmax exit", r.exit_code == 0);
    expect_eq("minmax text", r.out, "L:top#a\n");
  }
  {
    RunResult r = run("minmax --term \"w\" --op max --left \"pt:5\" --right \"L:top#a\" --json");
    expect_eq("minmax json", r.out,
              "{\n  \"left\": \"pt:5\",\n  \"op\": \"max\",\n  \"result\": \"L:top#a\",\n"
              "  \"right\": \"L:top#a\",\n  \"term\": \"w\"\n}\n");
  }
  {
    RunResult r = run("supports --term \"z\" --budget 1");
    expect("supports exit", r.exit_code == 0);
    expect_eq("supports text", r.out, "R:bottom\npt:0\nL:top\n");
  }
  {
    RunResult r = run("stype --term \"w +\"");
    expect("syntax error exit", r.exit_code == 2);
  }
  {
    RunResult r = run("rel --term \"w\" --rel lt --left \"pt:5#x\" --right \"pt:4\"");
    expect("principal label rejected", r.exit_code == 2);
  }
  {
    RunResult r = run("stype --term \"e\"");
    expect("dense stype exit", r.exit_code == 2);
  }
  {
    RunResult r = run("laws --term \"3\" --tokens \"pt:0,pt:1,pt:2\"");
    expect("laws principal exit", r.exit_code == 0);
  }
  {
    RunResult r = run(
        "laws --term \"z\" --tokens \"pt:0,R:bottom#a,R:bottom#b,L:top#a\" --json");
    expect("laws multi-token exit reports the failing identities", r.exit_code == 1);
    expect("laws json shape", r.out.find("\"law\": \"distributivity(min-over-max,left)\"") !=
                                  std::string::npos);
  }
  {
    std::ofstream cfg("/tmp/uxl_cli_config.json");
    cfg << "{\"terms\": [\"w\"], \"suites\": [\"theorem1\", \"sbuilder\"], \"budget\": 3}";
    cfg.close();
    RunResult r = run("verify --config /tmp/uxl_cli_config.json");
    expect("verify exit", r.exit_code == 0);
    expect("verify all passed", r.out.find("ALL SUITES PASSED") != std::string::npos);
  }
  {
    RunResult r = run("verify --config /nonexistent.json");
    expect("verify missing config", r.exit_code == 2);
  }
  if (failures) std::cerr << failures << " CLI check(s) failed\n";
  return failures == 0 ? 0 : 1;
}
