#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string esum_bin() {
  if (const char* p = std::getenv("ESUM_BIN")) return p;
  return "./esum";
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = esum_bin() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int rc = pclose(p);
  return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("eval prints reference digits and honors --digits") {
  RunResult r = run("eval h1/k^3 --digits 20");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1.2981755157718671257") != std::string::npos);

  RunResult j = run("--json eval h1/k^3 --digits 20");
  CHECK(j.exit_code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("value").get<std::string>().substr(0, 21) == "1.2981755157718671257");
  CHECK(doc.at("terms_summed").get<long>() < 100000000);
  // text and json agree digit for digit
  std::string text_val = r.out.substr(r.out.find("= ") + 2);
  text_val = text_val.substr(0, text_val.find('\n'));
  CHECK(doc.at("value").get<std::string>() == text_val);
}

TEST_CASE("eval rejects divergent and malformed input with exit 2") {
  CHECK(run("eval h1/k^1").exit_code == 2);
  CHECK(run("eval 'x*/k^3'").exit_code == 2);
}

TEST_CASE("verify: filters, suspects, unknown ids") {
  RunResult one = run("verify --family 8 --order 4");
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("1 passed") != std::string::npos);

  RunResult byid = run("verify --id 'F0.v(4,4)'");
  CHECK(byid.exit_code == 0);

  RunResult nomatch = run("verify --family 99");
  CHECK(nomatch.exit_code == 0);
  CHECK(nomatch.out.find("0 records") != std::string::npos);

  RunResult unknown = run("verify --id not.a.record");
  CHECK(unknown.exit_code == 2);

  // suspects are reported but do not fail the run
  RunResult sus = run("verify --id F5.o4.H1h1_odd2");
  CHECK(sus.exit_code == 0);
  CHECK(sus.out.find("SUSPECT") != std::string::npos);

  // a zero tolerance can never be met by the accelerated side, which
  // exercises the verification-failure exit path
  RunResult fail = run("lemma-check --lemma 1 --i-max 1 --lemma-tolerance 0");
  CHECK(fail.exit_code == 1);
}

TEST_CASE("catalog list json has at least 120 records with the documented keys") {
  RunResult r = run("--json catalog list");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.is_array());
  CHECK(doc.size() >= 120);
  for (const auto& rec : doc) {
    for (const char* key : {"id", "family", "order", "lhs", "rhs", "citation", "status"})
      CHECK(rec.contains(key));
  }
  RunResult f = run("--json catalog list --family 8 --order 4");
  auto fd = nlohmann::json::parse(f.out);
  CHECK(fd.size() == 1);
  CHECK(fd[0]["id"] == "F8.o4.h1h1_k2");
}

TEST_CASE("lemma-check selections and exit codes") {
  RunResult r = run("lemma-check --lemma 4b --i-max 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("4/4 pass") != std::string::npos);
  CHECK(run("lemma-check --lemma nope").exit_code == 2);

  RunResult j = run("--json lemma-check --lemma k2 --i-max 3");
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.is_array());
  CHECK(doc[0]["passed"] == 3);
}

TEST_CASE("constants cache round trip through the cli") {
  std::string cache = "/tmp/esum_cli_cache.json";
  std::remove(cache.c_str());
  std::string flags = "--cache " + cache + " --precision-bits 128 ";
  RunResult a = run(flags + "constants --recompute");
  CHECK(a.exit_code == 0);
  RunResult b = run(flags + "constants");
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("zeta(2)") != std::string::npos);
  CHECK(a.out.find("sigma(9)") != std::string::npos);
  std::remove(cache.c_str());
}
