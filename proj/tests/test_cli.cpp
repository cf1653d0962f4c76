#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef PPSYM_CLI
#error "PPSYM_CLI must name the command-line binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(PPSYM_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp(const std::string& name) { return std::string(PPSYM_TMP) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify a single class") {
  Run r = run("verify --class 6i --seed 42");
  CHECK(r.code == 1);  // amended commutators and potentials
  CHECK(r.out.find("pass  conformal-class  C_4^(6i)  (ProperConformal)") != std::string::npos);
  CHECK(r.out.find("pass  conformal-class  C_5^(6i)  (ProperConformal)") != std::string::npos);
  CHECK(r.out.find("pass  wave-psi  C_4^(6i)") != std::string::npos);
  CHECK(run("verify --class 6i --accept-amended").code == 0);
  CHECK(run("verify --class 7").code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("verify --class nosuch").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify --class 6i --samples -3").code == 2);
  CHECK(run("verify --class 6i --param nosuch=1").code == 2);
  CHECK(run("classify --xi '[u,0,0]'").code == 2);
  CHECK(run("classify --H 'u +* y' --xi '[0,1,0,0]'").code == 2);
  CHECK(run("kg-check --xi '[0,1,0,0]'").code == 2);
}

TEST_CASE("classify") {
  Run r = run("classify --H 0 --xi '[0,1,0,0]'");
  CHECK(r.code == 0);
  CHECK(r.out.find("Killing, psi = 0") != std::string::npos);
  r = run("classify --H 'zeta*ln(r)/u^2' --xi '[u^2, r^2/2 - zeta*ln(u), u*y, u*z]' --psi u");
  CHECK(r.code == 0);
  CHECK(r.out.find("SpecialConformal, psi = u") != std::string::npos);
  r = run("classify --H 0 --xi '[y,0,0,0]'");
  CHECK(r.code == 1);
  CHECK(r.out.find("NotConformal") != std::string::npos);
}

TEST_CASE("kg-check") {
  Run r = run("kg-check --H 0 --xi '[0,1,0,0]' --V 'u*y + v/10'");
  CHECK(r.code == 1);
  CHECK(r.out.find("witness value 0.1") != std::string::npos);
  r = run("kg-check --H 'delta/r^2' --param delta=2/5 --xi '[u^2, r^2/2, u*y, u*z]' --V 'V0(r/u)/u^2' --noether");
  CHECK(r.code == 0);
  CHECK(r.out.find("pass  noether-condition") != std::string::npos);
  CHECK(r.out.find("pass  noether-divergence") != std::string::npos);
}

TEST_CASE("ad-hoc evaluation failure exits with 3") {
  Run r = run("classify --H 'sqrt(y - 5)*z' --xi '[0,0,0,1]'");
  CHECK(r.code == 3);
}

TEST_CASE("config file") {
  std::string path = tmp("ppsym_test.cfg");
  {
    std::ofstream f(path);
    f << "# class 4 profile in the rotated frame\n"
         "H = W(y*sin(u/2) - z*cos(u/2), y*cos(u/2) + z*sin(u/2))\n"
         "xi = [2, 1, -z, y]\n"
         "V = V0(v - u/2, y*sin(u/2) - z*cos(u/2), y*cos(u/2) + z*sin(u/2))\n"
         "noether = true\n"
         "seed = 9\n";
  }
  Run r = run("kg-check --config " + path);
  CHECK(r.code == 0);
  CHECK(r.out.find("seed 9") != std::string::npos);
  CHECK(r.out.find("noether-divergence") != std::string::npos);
  CHECK(run("kg-check --config " + path + " --seed 11").out.find("seed 11") != std::string::npos);
  {
    std::ofstream f(path, std::ios::app);
    f << "colour = blue\n";
  }
  r = run("kg-check --config " + path);
  CHECK(r.code == 2);
  CHECK(r.out.find("unknown key 'colour'") != std::string::npos);
  CHECK(run("kg-check --config /nonexistent/file.cfg").code == 2);
}

TEST_CASE("JSON output and determinism") {
  std::string a = tmp("ppsym_a.json"), b = tmp("ppsym_b.json");
  Run r1 = run("verify --class 5ii --class 10 --seed 42 --json " + a);
  Run r2 = run("verify --class 5ii --class 10 --seed 42 --json " + b);
  CHECK(r1.code == 1);
  CHECK(r1.out.find("summary:") != std::string::npos);
  std::string ja = slurp(a);
  CHECK(!ja.empty());
  CHECK(ja == slurp(b));
  auto j = nlohmann::json::parse(ja);
  CHECK(j["summary"]["fail"] == 0);
  Run stdout_json = run("verify --class 5ii --class 10 --json -");
  CHECK(stdout_json.out == ja);
}

TEST_CASE("commutators command") {
  Run r = run("commutators --class 5ii");
  CHECK(r.code == 1);
  CHECK(r.out.find("commutator") != std::string::npos);
  CHECK(r.out.find("kg-potential") == std::string::npos);
  CHECK(r.out.find("(sigma+2)/(2-sigma)*C4") != std::string::npos);
}

TEST_CASE("export-catalog") {
  std::string path = tmp("ppsym_catalog.json");
  Run r = run("export-catalog --output " + path);
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(slurp(path));
  REQUIRE(j.is_array());
  CHECK(j.size() == 32);
  CHECK(j[0]["id"] == "1");
  for (const auto& cls : j)
    for (const char* key : {"id", "H", "generators", "potentials", "commutators", "table5"}) CHECK(cls.contains(key));
}
