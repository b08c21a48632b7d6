#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded; stdout must be deterministic.
RunResult run(const std::string& args) {
  std::string cmd = std::string(CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start < s.size()) {
    size_t nl = s.find('\n', start);
    if (nl == std::string::npos) nl = s.size();
    out.push_back(s.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("order emits one json record") {
  RunResult r = run("order A1 --q 5");
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 1);
  json j = json::parse(ls[0]);
  CHECK(j["group"] == "A1");
  CHECK(j["order"] == "120");
  CHECK(j["bg_count"]["den"] == "120");
}

TEST_CASE("order respects the extension degree") {
  RunResult r = run("order A1 --q 2 --ext 2");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["order"] == "60");
}

TEST_CASE("bg emits the count or the truncated sum") {
  RunResult plain = run("bg T1 --q 2");
  CHECK(plain.code == 0);
  CHECK(json::parse(plain.out)["order"] == "1");

  RunResult series = run("bg T1 --q 2 --series 3");
  CHECK(series.code == 0);
  json j = json::parse(series.out);
  CHECK(j["cutoff"] == 3);
  CHECK(j["partial"]["num"] == "15");
  CHECK(j["within_tail_bound"] == true);
}

TEST_CASE("zeta emits exp and optionally euler records") {
  RunResult exp_only = run("zeta T1 --q 2 --coeffs 2");
  CHECK(exp_only.code == 0);
  auto ls = lines(exp_only.out);
  REQUIRE(ls.size() == 1);
  CHECK(json::parse(ls[0])["mode"] == "exp");

  RunResult both = run("zeta T1 --q 2 --coeffs 2 --euler --weight 10");
  CHECK(both.code == 0);
  auto ls2 = lines(both.out);
  REQUIRE(ls2.size() == 2);
  json exp_rec = json::parse(ls2[0]);
  json euler_rec = json::parse(ls2[1]);
  CHECK(exp_rec["mode"] == "exp");
  CHECK(euler_rec["mode"] == "euler");
  CHECK(euler_rec["W"] == 10);
  CHECK(euler_rec["factor_count"] == 10);
}

TEST_CASE("weight only combines with euler") {
  CHECK(run("zeta T1 --q 2 --coeffs 2 --weight 10").code == 2);
}

TEST_CASE("betti emits the array") {
  RunResult r = run("betti A2 --max 6");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json({1, 0, 1, 1, 1, 1, 2}));
}

TEST_CASE("oracle keeps timing off stdout") {
  RunResult r = run("oracle --family sl --n 2 --q 2");
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 1);
  json j = json::parse(ls[0]);
  CHECK(j["order"] == 6);
  CHECK(r.out.find("elapsed") == std::string::npos);
}

TEST_CASE("verify reports per-suite lines and exit zero on success") {
  RunResult r = run("verify --suite oracle --max-rank 2 --max-q 3");
  CHECK(r.code == 0);
  json j = json::parse(lines(r.out)[0]);
  CHECK(j["suite"] == "oracle");
  CHECK(j["failures"] == 0);
}

TEST_CASE("usage problems exit with code two") {
  CHECK(run("order A1").code == 2);               // missing --q
  CHECK(run("order H9 --q 2").code == 2);         // unparseable label
  CHECK(run("order T0 --q 2").code == 2);         // inadmissible label
  CHECK(run("order A1 --q 6").code == 2);         // not a prime power
  CHECK(run("order 2A2 --q 2").code == 2);        // twist demands an even exponent
  CHECK(run("nonsense").code == 2);               // unknown subcommand
  CHECK(run("order A1 --q 5 --format xml").code == 2);
  CHECK(run("").code == 2);                       // a subcommand is required
}

TEST_CASE("budget overruns exit with code three") {
  CHECK(run("oracle --family sp --n 4 --q 4").code == 3);
}

TEST_CASE("stdout is byte identical across runs") {
  for (const char* args : {"catalog --max-rank 6", "zeta G2 --q 2 --coeffs 3 --euler --weight 30",
                           "verify --suite series --max-rank 3 --max-q 4",
                           "order E8 --q 3", "betti B3 --max 8"}) {
    CAPTURE(args);
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("csv count output") {
  RunResult r = run("order A1 --q 5 --format csv");
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "group,q,i,order,bg_num,bg_den,approx");
  CHECK(ls[1].rfind("A1,5,1,120,1,120,", 0) == 0);
}

TEST_CASE("csv zeta output tags every row") {
  RunResult r = run("zeta T1 --q 2 --coeffs 1 --euler --weight 4 --format csv");
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(!ls.empty());
  CHECK(ls[0] == "group,q,mode,W,series,m,num,den,approx");
  // exp rows, then euler coefficient/discrepancy/majorant rows.
  CHECK(ls[1].rfind("T1,2,exp,,coefficient,0,", 0) == 0);
  bool saw_disc = false;
  for (const auto& l : ls)
    if (l.rfind("T1,2,euler,4,discrepancy,1,", 0) == 0) saw_disc = true;
  CHECK(saw_disc);
}

TEST_CASE("csv betti and catalog output") {
  RunResult betti = run("betti A2 --max 2 --format csv");
  auto ls = lines(betti.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "group,m,b");
  CHECK(ls[1] == "A2,0,1");
  CHECK(ls[2] == "A2,1,0");
  CHECK(ls[3] == "A2,2,1");

  RunResult cat = run("catalog --max-rank 4 --format csv");
  auto cls = lines(cat.out);
  REQUIRE(!cls.empty());
  CHECK(cls[0] == "spec,family,rank,twist,dim,degrees,eigenvalues");
  bool saw_triality = false;
  for (const auto& l : cls)
    if (l == "3D4,D,4,twist3,28,2;4;4;6,0/1;1/3;2/3;0/1") saw_triality = true;
  CHECK(saw_triality);
}
