#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

std::string env(const char *name) {
  const char *v = std::getenv(name);
  REQUIRE_MESSAGE(v != nullptr, name << " is not set");
  return v;
}

Run qh(const std::string &args) {
  std::string cmd = env("QH_BIN") + " " + args + " 2>/dev/null";
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
    out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data(const std::string &f) { return env("QH_DATA") + "/" + f; }

nlohmann::json parsed(const Run &r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("classify") {
  auto r = qh("classify --quiver " + data("kronecker.json"));
  CHECK(r.code == 0);
  auto j = parsed(r);
  CHECK(j["tool"] == "qh");
  CHECK(j["quiver_sha256"].get<std::string>().size() == 64);
  CHECK(j["result"]["kronecker"] == true);
  CHECK(j["result"]["type"] == "A(1)_1");
  CHECK(parsed(qh("classify --quiver " + data("c3.json")))["result"]["cyclic"] == 3);
  CHECK(parsed(qh("classify --quiver " + data("d4.json")))["result"]["finite"] == true);
}

TEST_CASE("roots up to a cap") {
  auto j = parsed(qh("roots --quiver " + data("kronecker.json") + " --cap 3"));
  // real roots (n,n+1), (n+1,n) for n < 3 plus delta, 2 delta, 3 delta
  CHECK(j["result"]["count"] == 9);
  std::size_t imaginary = 0;
  for (const auto &r : j["result"]["roots"])
    imaginary += r["kind"] == "imaginary";
  CHECK(imaginary == 3);
}

TEST_CASE("cyclic roots of affine D4") {
  auto r = qh("cyclic-roots --quiver " + data("d4aff.json"));
  CHECK(r.code == 0);
  auto j = parsed(r)["result"];
  CHECK(j["L"] == 3);
  CHECK(j["N"] == nlohmann::json::array({2, 2, 2}));
}

TEST_CASE("verify-presentation needs an extending sink") {
  auto r = qh("verify-presentation --quiver " + data("d4aff_sink.json"));
  CHECK(r.code == 0);
  CHECK(parsed(r)["ok"] == true);
  CHECK(qh("verify-presentation --quiver " + data("d4aff.json")).code == 2);
}

TEST_CASE("verify ringel exits cleanly") {
  auto r = qh("verify ringel --quiver " + data("a3.json"));
  CHECK(r.code == 0);
  auto j = parsed(r);
  CHECK(j["ok"] == true);
  CHECK(j["result"]["roots"].size() == 6);
}

TEST_CASE("lie-epsilon structure constants") {
  auto j = parsed(qh("lie-epsilon --quiver " + data("a2.json")));
  auto sc = j["result"]["structure_constants"];
  CHECK(sc["basis"].size() == 3);
  REQUIRE(sc["nonzero_brackets"].size() == 1);
  for (const auto &[k, v] : sc["nonzero_brackets"][0]["bracket"].items()) {
    CHECK(k == "e(1,1)");
    CHECK((v == "1" || v == "-1"));
  }
  CHECK(j["result"]["jacobi"]["ok"] == true);
}

TEST_CASE("hall-number") {
  auto args = "hall-number --quiver " + data("kronecker.json") +
              " --sub 'KronU(1,0)' --quot 'KronU(0,0)' --target 'Tube((1:1),1)'";
  auto r = qh(args);
  CHECK(r.code == 0);
  auto j = parsed(r)["result"];
  CHECK(j["chi"] == "1");
  CHECK(j["polynomial"] == nlohmann::json::array({"1"}));
  CHECK(j["primes"].size() >= 2);
  CHECK(j["held_out_ok"] == true);

  auto csv = qh(args + " --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("sub,quot,target,primes", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 2);
}

TEST_CASE("output is deterministic and can go to a file") {
  auto a = qh("verify affine --quiver " + data("kronecker.json") + " --cap 2");
  auto b = qh("verify affine --quiver " + data("kronecker.json") + " --cap 2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto path = std::filesystem::temp_directory_path() / "qh_cli_test.json";
  auto c = qh("verify affine --quiver " + data("kronecker.json") + " --cap 2 --out " + path.string());
  CHECK(c.code == 0);
  std::ifstream in(path);
  std::string written((std::istreambuf_iterator<char>(in)), {});
  CHECK(written == a.out);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(qh("classify --quiver /nonexistent.json").code == 2);
  auto bad = std::filesystem::temp_directory_path() / "qh_cli_bad.json";
  std::ofstream(bad) << "{\"vertices\": [\"0\"";
  auto r = qh("classify --quiver " + bad.string());
  CHECK(r.code == 2);
  CHECK(parsed(r)["ok"] == false);
  std::filesystem::remove(bad);

  auto p = qh("hall-number --quiver " + data("a2.json") +
              " --sub 'Root(0,1)' --quot 'Root(1,0)' --target 'Root(1,1)' --primes 2");
  CHECK(p.code == 3);
  CHECK(parsed(p)["result"]["exit_code"] == 3);
  CHECK(qh("identify --quiver " + data("a2.json") + " --rep " + data("a2_p11.json")).code == 0);
  CHECK(qh("verify affine --quiver " + data("d4aff.json")).code == 2);
}
