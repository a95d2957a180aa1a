// End-to-end checks of the command-line tool: pipelines, exit codes, and
// output shapes, driven through a shell exactly as a user would run them.
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

const std::string kBcp = CLI_PATH;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("gen | partition | stats pipeline") {
  const auto r = run(kBcp + " gen gnp 128 0.4 --seed 7 | " + kBcp +
                     " partition --algo ep | " + kBcp + " stats");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"kind\":\"partition\""));
  CHECK(contains(r.out, "\"weight\""));
  CHECK(contains(r.out, "\"max_load\""));
  CHECK(contains(r.out, "\"w_lg_ratio\""));
}

TEST_CASE("empty graph partitions to the empty partition, exit 0") {
  const auto r = run("echo '0 0' | " + kBcp + " partition --algo density");
  CHECK(r.code == 0);
  CHECK(r.out == "bp 0 0\n");
}

TEST_CASE("compress | decompress round trip reproduces the graph text") {
  const auto gen = run(kBcp + " gen gnp 96 0.3 --seed 21");
  REQUIRE(gen.code == 0);
  const std::string base = "/tmp/bcp_cli_roundtrip";
  {
    FILE* f = fopen((base + ".graph").c_str(), "w");
    REQUIRE(f != nullptr);
    fwrite(gen.out.data(), 1, gen.out.size(), f);
    fclose(f);
  }
  const auto comp = run(kBcp + " partition --algo ep < " + base + ".graph | " +
                        kBcp + " compress > " + base + ".sbp; echo -n $?");
  REQUIRE(comp.out == "0");
  const auto back = run(kBcp + " decompress < " + base + ".sbp");
  CHECK(back.code == 0);
  CHECK(back.out == gen.out);
  const auto part = run(kBcp + " decompress --partition < " + base + ".sbp | " +
                        kBcp + " stats");
  CHECK(part.code == 0);
  CHECK(contains(part.out, "\"kind\":\"partition\""));
}

TEST_CASE("query answers from compressed bytes") {
  const std::string mk = "printf '4 3\\n0 1\\n1 2\\n2 3\\n' | " + kBcp +
                         " partition --algo ep | " + kBcp +
                         " compress > /tmp/bcp_cli_path.sbp";
  REQUIRE(run(mk + "; echo -n $?").out == "0");
  const auto indep = run(kBcp + " query --independent-set '0 2' < /tmp/bcp_cli_path.sbp");
  CHECK(indep.code == 0);
  CHECK(contains(indep.out, "\"independent\":true"));
  const auto dep = run(kBcp + " query --independent-set '0 1' < /tmp/bcp_cli_path.sbp");
  CHECK(contains(dep.out, "\"independent\":false"));
  const auto cut = run(kBcp + " query --cut-s '0 2' --cut-t '1 3' < /tmp/bcp_cli_path.sbp");
  CHECK(cut.code == 0);
  CHECK(contains(cut.out, "\"edges\":3"));
}

TEST_CASE("densest reports the exact best density of a triangle") {
  const auto r = run("printf '3 3\\n0 1\\n0 2\\n1 2\\n' | " + kBcp + " densest --alpha 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"density_num\":1"));
  CHECK(contains(r.out, "\"density_den\":1"));
  CHECK(contains(r.out, "\"size\":3"));
}

TEST_CASE("find-biclique emits a sound record") {
  const auto r = run(kBcp + " gen gnp 256 0.5 --seed 5 | " + kBcp +
                     " find-biclique --method topdeg");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"method\":\"topdeg\""));
  CHECK(contains(r.out, "\"t\":"));
}

TEST_CASE("hypergraph pipeline") {
  const auto r = run(kBcp + " gen hypergraph 24 3 0.05 --seed 2 | " + kBcp +
                     " dpartition --algo stepup | " + kBcp + " stats");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"kind\":\"dpartition\""));
  CHECK(contains(r.out, "\"d\":3"));
}

TEST_CASE("directed pipeline") {
  const auto r = run(kBcp + " gen dgnp 48 0.3 --seed 3 | " + kBcp +
                     " partition --algo directed");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("bp 48 ", 0) == 0);
}

TEST_CASE("generation is deterministic per seed") {
  const auto a = run(kBcp + " gen gnp 64 0.5 --seed 11");
  const auto b = run(kBcp + " gen gnp 64 0.5 --seed 11");
  const auto c = run(kBcp + " gen gnp 64 0.5 --seed 12");
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("input errors exit 1") {
  CHECK(run("echo garbage | " + kBcp + " partition --algo ep 2>/dev/null").code == 1);
  CHECK(run(kBcp + " --frobnicate 2>/dev/null").code == 1);
  CHECK(run("echo '2 0' | " + kBcp + " find-biclique 2>/dev/null").code == 1);
  CHECK(run("printf 'XXXX' | " + kBcp + " decompress 2>/dev/null").code == 1);
  CHECK(run("printf '2 1\\n0 1\\n' | " + kBcp + " densest --alpha 1 2>/dev/null").code == 1);
  CHECK(run(kBcp + " query --cut-s 0 < /dev/null 2>/dev/null").code == 1);
}

TEST_SUITE_END();
