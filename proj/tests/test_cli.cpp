// Integration tests for the command-line tool: spawns the real binary and
// checks stdout plus exit codes.  Takes the binary path as argv[1].

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

int g_failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (p == nullptr) {
    std::cerr << "popen failed for: " << cmd << "\n";
    std::exit(3);
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void check(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok   " << what << "\n";
  } else {
    ++g_failures;
    std::cout << "FAIL " << what << "\n";
  }
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::string strip_volatile(std::string json_text) {
  json_text = std::regex_replace(json_text, std::regex("\"timestamp\": \"[^\"]*\""),
                                 "\"timestamp\": \"\"");
  json_text = std::regex_replace(json_text, std::regex("\"wall_ms\": [0-9]+"), "\"wall_ms\": 0");
  return json_text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-dilog7-binary>\n";
    return 3;
  }
  const std::string bin = argv[1];

  {
    RunResult r = run(bin + " eval cl2 --theta pi/2 --digits 30");
    check(r.exit_code == 0, "eval cl2 exit code");
    check(starts_with(r.out, "0.915965594177219015054603514932"), "eval cl2 value");
  }
  {
    RunResult r = run(bin + " eval hurwitz --s 2 --a 1 --digits 20");
    check(r.exit_code == 0, "eval hurwitz exit code");
    check(starts_with(r.out, "1.6449340668482264365"), "eval hurwitz value");
  }
  {
    RunResult r = run(bin + " eval lseries --d -7 --s 2 --digits 30");
    check(r.exit_code == 0, "eval lseries exit code");
    check(starts_with(r.out, "1.15192547054449104710169239732"), "eval lseries value");
  }
  {
    RunResult r = run(bin + " eval hurwitz --s 0.5 --a 1 --digits 20");
    check(r.exit_code == 2, "eval domain error exits 2");
  }
  {
    RunResult r = run("DILOG7_DIGITS=20 " + bin + " eval cl2 --theta pi/2");
    check(r.exit_code == 0, "env default digits accepted");
    check(starts_with(r.out, "0.91596559417721901505") && r.out.size() <= 24,
          "env default digit count honoured");
  }
  {
    RunResult r = run("DILOG7_DIGITS=20 " + bin + " eval cl2 --theta pi/2 --digits 25");
    check(starts_with(r.out, "0.915965594177219015054603"), "flag overrides env default");
  }

  {
    RunResult r = run(bin + " integrate --digits 20");
    check(r.exit_code == 0, "integrate exit code");
    check(r.out.find("1.1519254705444910471") != std::string::npos, "integrate value");
    check(r.out.find("levels") != std::string::npos, "integrate diagnostics");
  }
  {
    RunResult r = run(bin + " integrate --digits 15");
    check(r.exit_code == 2, "integrate below digit floor exits 2");
  }
  {
    RunResult r = run(bin + " integrate --digits 40 --max-levels 3");
    check(r.exit_code == 2, "integrate non-convergence exits 2");
  }

  {
    RunResult r = run(bin + " verify --identity CONJ_15 --identity MULT_FORMULA --digits 40"
                            " --format json");
    check(r.exit_code == 0, "verify selected identities exit code");
    auto doc = nlohmann::json::parse(r.out, nullptr, false);
    check(!doc.is_discarded(), "verify emits parseable JSON");
    if (!doc.is_discarded()) {
      check(doc["overall"] == "pass", "verify overall pass");
      check(doc["reports"].size() == 2, "verify report count");
      check(doc["reports"][0]["id"] == "CONJ_15", "reports follow enum order");
      check(doc["reports"][1]["id"] == "MULT_FORMULA", "reports follow enum order (2)");
      check(doc["reports"][0]["kind"] == "conjecture", "conjecture labelled");
      check(doc["reports"][1]["kind"] == "theorem", "theorem labelled");
      // semantic round-trip
      nlohmann::json again = nlohmann::json::parse(doc.dump());
      check(again == doc, "JSON round-trips");
    }
  }
  {
    RunResult text = run(bin + " verify --identity CONJ_15 --digits 40");
    RunResult json = run(bin + " verify --identity CONJ_15 --digits 40 --format json");
    std::smatch m;
    bool found = std::regex_search(text.out, m, std::regex("digits_agreed=([0-9]+)"));
    check(found, "text report carries digits_agreed");
    if (found) {
      auto doc = nlohmann::json::parse(json.out);
      check(doc["reports"][0]["digits_agreed"] == std::stoi(m[1]),
            "text and JSON agree on digits_agreed");
    }
  }
  {
    RunResult r = run(bin + " verify --identity CONJ_13 --digits 12");
    check(r.exit_code == 2, "verify below digit floor exits 2");
  }
  {
    RunResult r = run(bin + " verify --identity BOGUS_ID --digits 40");
    check(r.exit_code == 2, "unknown identity exits 2");
  }
  {
    RunResult r = run(bin + " verify --identity COFFEY_12A --digits 40 --max-levels 3"
                            " --format json");
    check(r.exit_code == 2, "forced quadrature non-convergence exits 2");
    auto doc = nlohmann::json::parse(r.out, nullptr, false);
    check(!doc.is_discarded() && doc["overall"] == "fail", "non-convergence marked as failure");
    check(!doc.is_discarded() && doc["reports"][0].contains("error"),
          "non-convergence carries diagnostics");
  }
  {
    RunResult a = run(bin + " verify --identity CONJ_15 --identity MULT_FORMULA"
                            " --identity L7_THREE_WAYS --digits 40 --jobs 4 --format json");
    RunResult b = run(bin + " verify --identity CONJ_15 --identity MULT_FORMULA"
                            " --identity L7_THREE_WAYS --digits 40 --jobs 4 --format json");
    check(a.exit_code == 0 && b.exit_code == 0, "parallel verify runs");
    check(strip_volatile(a.out) == strip_volatile(b.out),
          "parallel runs are byte-identical up to timestamp/wall_ms");
  }

  {
    const std::string path = "/tmp/dilog7_report_test.json";
    RunResult r = run(bin + " verify --identity MULT_FORMULA --digits 40 --format json --out " +
                      path);
    check(r.exit_code == 0 && r.out.empty(), "verify --out keeps stdout quiet");
    std::FILE* fp = std::fopen(path.c_str(), "r");
    check(fp != nullptr, "verify --out wrote the report file");
    if (fp != nullptr) {
      std::string content;
      char buf[4096];
      size_t n;
      while ((n = fread(buf, 1, sizeof buf, fp)) > 0) content.append(buf, n);
      std::fclose(fp);
      std::remove(path.c_str());
      auto doc = nlohmann::json::parse(content, nullptr, false);
      check(!doc.is_discarded() && doc["overall"] == "pass", "report file is valid JSON");
    }
  }
  {
    RunResult r = run(bin + " pslq 1 1 --digits 64");
    check(r.exit_code == 0, "pslq trivial pair exit code");
    check(r.out.find("coefficients: 1 -1") != std::string::npos, "pslq trivial pair relation");
  }
  {
    RunResult r = run(bin + " pslq 1 'sqrt(2)' --norm-bound 10 --digits 64");
    check(r.exit_code == 0, "pslq exclusion exit code");
    check(r.out.find("no relation") != std::string::npos, "pslq reports exclusion");
  }
  {
    RunResult r = run(bin + " pslq 'cl2(2*phi7)' 'cl2(4*phi7)' 'cl2(6*phi7)'"
                            " '7*sqrt(7)/4*L(-7,2)' --digits 120 --norm-bound 100");
    check(r.exit_code == 0, "pslq six-value relation exit code");
    check(r.out.find("coefficients: 3 -3 1 -1") != std::string::npos,
          "pslq six-value relation coefficients");
  }

  std::cout << (g_failures == 0 ? "all CLI checks passed\n" : "CLI checks FAILED\n");
  return g_failures == 0 ? 0 : 1;
}
