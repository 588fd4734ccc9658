// End-to-end checks of the command line tool: JSON shape, determinism,
// distinct error exit codes. Runs the installed binary via popen.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

nlohmann::json result_of(const RunResult& r) {
  const auto doc = nlohmann::json::parse(r.out);
  return doc.at("result");
}

}  // namespace

TEST_CASE("member reports congruence membership") {
  const auto r = run("member --word '1 1 1' --mod 3");
  CHECK(r.status == 0);
  CHECK(result_of(r).at("member") == true);
  const auto r2 = run("member --word '1' --mod 2");
  CHECK(result_of(r2).at("member") == false);
}

TEST_CASE("burau matrices serialize as decimal strings") {
  const auto r = run("burau --word '1 1 1' --n 3 --reduced");
  CHECK(r.status == 0);
  const auto m = result_of(r).at("matrix");
  CHECK(m[0][0] == "1");
  CHECK(m[1][0] == "3");
}

TEST_CASE("image and abelianize summaries") {
  const auto r = run("image --mod 3");
  CHECK(result_of(r).at("order") == 24);
  const auto q = run("image --mod 3 --quotient-center");
  CHECK(result_of(q).at("order") == 12);
  CHECK(result_of(q).at("catalog_match") == "A4");

  const auto a = run("abelianize --mod 4 --mode full");
  CHECK(result_of(a).at("free_rank") == 6);
  CHECK(result_of(a).at("invariant_factors").empty());
}

TEST_CASE("verdict subcommand") {
  const auto r = run("verdict --mod 3 --mode center-quotient");
  CHECK(r.status == 0);
  const auto v = result_of(r);
  CHECK(v.at("bieberbach") == true);
  CHECK(v.at("dimension") == 4);
  CHECK(v.at("holonomy_name") == "A4");
}

TEST_CASE("witt formula") {
  const auto r = run("witt --M 3 --k 2");
  CHECK(result_of(r).at("witt_rank") == "3");
}

TEST_CASE("identical invocations are byte identical") {
  const auto a = run("image --mod 4");
  const auto b = run("image --mod 4");
  CHECK(a.out == b.out);
  const auto c = run("verdict --mod 2 --mode full");
  const auto d = run("verdict --mod 2 --mode full");
  CHECK(c.out == d.out);
}

TEST_CASE("error exit codes are distinct per failure class") {
  CHECK(run("member --word 'zzz' --mod 3").status == 2);   // malformed word
  CHECK(run("member --word '1' --mod 1").status == 3);     // precondition
  CHECK(run("class --word '1' --mod 3 --mode full").status == 5);  // not in subgroup
  CHECK(run("image --mod 1009 --guard 500").status == 4);  // order guard
  CHECK(run("abelianize --mod 3 --mode nonsense").status == 3);
}
