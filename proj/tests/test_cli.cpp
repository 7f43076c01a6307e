#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(UHSL2_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("cli: decompose") {
  const Result r = run("decompose --j1 1/2 --j2 1/2");
  CHECK(r.code == 0);
  CHECK(r.out == "1 ⊕ 0\n");
  CHECK(run("decompose --j1 1 --j2 0.5").out == "3/2 ⊕ 1/2\n");
}

TEST_CASE("cli: irrep at h = 0 is the classical Z- matrix") {
  const Result r = run("irrep --j 1 --gen Y --h-eval 0 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == "# Y\n0,0,0\n1*sqrt(2),0,0\n0,1*sqrt(2),0\n");
}

TEST_CASE("cli: JSON output and the format variable") {
  const Result r = run("irrep --j 1/2 --gen X --format json");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["matrices"]["X"]["shape"] == nlohmann::json::array({2, 2}));
  const Result env = run("decompose --j1 1 --j2 1");
  CHECK(env.out == "2 ⊕ 1 ⊕ 0\n");
  const std::string cmd = std::string("UHSL2_FORMAT=csv ") + UHSL2_CLI + " decompose --j1 1 --j2 1";
  FILE* p = popen(cmd.c_str(), "r");
  char buf[256] = {};
  const std::size_t n = fread(buf, 1, sizeof buf - 1, p);
  pclose(p);
  CHECK(std::string(buf, n) == "j,multiplicity\n2,1\n1,1\n0,1\n");
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(run("irrep --j 1/3").code == 2);
  CHECK(run("irrep").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("alpha --j1 1/2 --j2 1/2 --m1 3/2").code == 2);
  CHECK(run("cgc --j1 1/2 --j2 1/2 --j 3").code == 2);
  CHECK(run("tensorop --realization nope").code == 2);
  CHECK(run("tensorop --realization boson-lowering --j 0").code == 2);
  CHECK(run("irrep --j 1 --format xml").code == 2);
  CHECK(run("irrep --j 1 --h-eval 1/0").code == 2);
}

TEST_CASE("cli: wigner-eckart and tensorop") {
  const Result r = run("wigner-eckart --realization boson-raising --j2 1/2 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["cases"][0]["I"][0]["radicand"] == "2");
  CHECK(run("tensorop --realization fermion1").code == 0);
  CHECK(run("tensorop --realization rank1 --j 3/2 --m1 0 --format csv").code == 0);
}

TEST_CASE("cli: verify is deterministic and writes --out") {
  const std::string file = "cli_verify_test.json";
  CHECK(run("verify --max-j 1 --format json --out " + file).code == 0);
  std::FILE* f = std::fopen(file.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string text;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, f)) text.append(buf, n);
  std::fclose(f);
  std::remove(file.c_str());
  auto strip = [](nlohmann::ordered_json j) {
    j.erase("seconds");
    for (auto& s : j["suites"]) s.erase("seconds");
    return j.dump();
  };
  const auto a = nlohmann::ordered_json::parse(text);
  CHECK(a["passed"] == true);
  CHECK(strip(a) == strip(nlohmann::ordered_json::parse(run("verify --max-j 1 --format json").out)));
}
