#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = BEREZIN_CLI;

int run(const std::string& args) {
  std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("coeffs CSV carries the exact h table") {
  REQUIRE(run("coeffs --n 1 --m 1 --kmax 10 --route oracle --format csv --out /tmp/bz_c1.csv") ==
          0);
  std::string csv = slurp("/tmp/bz_c1.csv");
  CHECK(csv.find("k,value_num,value_den,route,value_float") == 0);
  CHECK(csv.find("0,1,4,h-gram-oracle") != std::string::npos);   // h(0) = 1/4
  CHECK(csv.find("1,1,8,h-gram-oracle") != std::string::npos);   // h(1) = 1/8
}

TEST_CASE("coeffs m = 0 rows are the dyadic sequence") {
  REQUIRE(run("coeffs --n 1 --m 0 --kmax 5 --route 2f1 --format csv --out /tmp/bz_c0.csv") == 0);
  std::string csv = slurp("/tmp/bz_c0.csv");
  CHECK(csv.find("5,1,64,h-gauss2F1") != std::string::npos);  // 2^-(1+5)
  CHECK(csv.find("0,1,2,h-gauss2F1") != std::string::npos);
}

TEST_CASE("invalid parameters exit with code 2") {
  CHECK(run("coeffs --n 0 --m 1") == 2);
  CHECK(run("coeffs --n 1 --route bogus") == 2);
  CHECK(run("apply --n 1 --m 0 --z 1") == 2);
  CHECK(run("verify --suite nosuchsuite") == 2);
  CHECK(run("") == 2);
}

TEST_CASE("verify expansion suite passes") {
  CHECK(run("verify --suite expansion --n 1 --m 1 --K 80 --out /tmp/bz_exp.json") == 0);
  auto doc = nlohmann::json::parse(slurp("/tmp/bz_exp.json"));
  CHECK(doc["summary"]["failed"].get<int>() == 0);
  bool saw_residual = false;
  for (const auto& r : doc["reports"])
    if (r["check"] == "expansion-parseval-residual") {
      saw_residual = true;
      CHECK(r["pass"].get<bool>());
      CHECK(r["abs_dev"].get<double>() < 1e-16);
    }
  CHECK(saw_residual);
}

TEST_CASE("apply reports the closed-form transform values") {
  REQUIRE(run("apply --n 1 --m 0 --phi constant --z 0,0 --out /tmp/bz_ap0.json") == 0);
  auto doc = nlohmann::json::parse(slurp("/tmp/bz_ap0.json"));
  CHECK(std::abs(doc["direct"]["re"].get<double>() - 1.5707963267948966) < 1e-8);
  CHECK(std::abs(doc["spectral"]["re"].get<double>() - 1.5707963267948966) < 1e-6);

  REQUIRE(run("apply --n 1 --m 1 --phi constant --z 1,0 --out /tmp/bz_ap1.json") == 0);
  auto doc1 = nlohmann::json::parse(slurp("/tmp/bz_ap1.json"));
  CHECK(std::abs(doc1["direct"]["re"].get<double>() - 0.7853981633974483) < 1e-8);

  REQUIRE(run("apply --n 1 --m 2 --phi zero --z 0.5,0.25 --out /tmp/bz_apz.json") == 0);
  auto docz = nlohmann::json::parse(slurp("/tmp/bz_apz.json"));
  CHECK(docz["direct"]["re"].get<double>() == 0.0);
  CHECK(docz["direct"]["im"].get<double>() == 0.0);
}

TEST_CASE("verify output is byte-identical across runs") {
  REQUIRE(run("verify --suite eigen --seed 11 --out /tmp/bz_d1.json") == 0);
  REQUIRE(run("verify --suite eigen --seed 11 --out /tmp/bz_d2.json") == 0);
  CHECK(slurp("/tmp/bz_d1.json") == slurp("/tmp/bz_d2.json"));
}

TEST_CASE("flat key=value config file with flag precedence") {
  {
    std::ofstream f("/tmp/bz_cfg.ini");
    f << "n=2\nm=1\nkmax=4\n";
  }
  REQUIRE(run("coeffs --config /tmp/bz_cfg.ini --m 0 --format json --out /tmp/bz_cfg.json") == 0);
  auto doc = nlohmann::json::parse(slurp("/tmp/bz_cfg.json"));
  CHECK(doc["config"]["n"].get<int>() == 2);    // from the config file
  CHECK(doc["config"]["m"].get<int>() == 0);    // flag wins over the file
  CHECK(doc["config"]["kmax"].get<int>() == 4);
}

TEST_CASE("CSV report flattening") {
  REQUIRE(run("verify --suite conjugation --format csv --out /tmp/bz_conj.csv") == 0);
  std::string csv = slurp("/tmp/bz_conj.csv");
  CHECK(csv.find("check,n,m,route,value,reference,abs_dev,rel_dev,tol,pass,status,notes") == 0);
  CHECK(csv.find("schroedinger-conjugation-panel") != std::string::npos);
}
