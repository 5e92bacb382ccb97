#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "support.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(std::string const& args) {
  std::string cmd = std::string(JUSTFP_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), n);
  }
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fx(char const* name) { return testing::fixture_path(name); }

std::string write_temp(std::string const& name, std::string const& text) {
  std::string path = std::string(JUSTFP_TMP_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("order") {
  Run r = run("order " + fx("bs12_k4"));
  CHECK(r.code == 0);
  CHECK(r.out == "60\n");
  Run o = run("order " + fx("infinite_cyclic"));
  CHECK(o.code == 2);
  CHECK(o.out.find("overflow") != std::string::npos);
  Run j = run("--format json order " + fx("d8_classical"));
  CHECK(nlohmann::json::parse(j.out)["order"] == 8);
}

TEST_CASE("transform") {
  Run r = run("transform " + fx("d8_classical"));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("< s, t, b, b1, b2 | ", 0) == 0);
  Run trivial = run("transform " + fx("infinite_cyclic"));
  CHECK(trivial.code == 0);
  CHECK(trivial.out.rfind("< x | >\n", 0) == 0);
  Run cyclic = run("--cyclic-shortcut transform " +
                   write_temp("z6.fp", "< x, y | x^2, y^3, x*y = y*x >"));
  CHECK(cyclic.out == "< x | x^6 >\n");
}

TEST_CASE("input errors exit 1") {
  CHECK(run("order " + write_temp("bad.fp", "< x | y >")).code == 1);
  CHECK(run("order /nonexistent/file.fp").code == 1);
  CHECK(run("order").code == 1);
  CHECK(run("--format yaml order " + fx("s3")).code == 1);
  std::string cmd = std::string(JUSTFP_CLI) + " order " +
                    write_temp("bad2.fp", "< x | x^2, q >") + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  std::string err(buf.data(), fread(buf.data(), 1, buf.size(), pipe));
  pclose(pipe);
  CHECK(err.find("1:12:") != std::string::npos);
  CHECK(err.find("^") != std::string::npos);
}

TEST_CASE("stdin") {
  Run r = run("order - < " + fx("a4"));
  CHECK(r.code == 0);
  CHECK(r.out == "12\n");
}

TEST_CASE("abelian, low-index, certify-infinite") {
  CHECK(run("abelian " + fx("d8_classical")).out == "Z/2 x Z/2\n");
  Run li = run("--format json --max-index 4 low-index " + fx("s3"));
  CHECK(li.code == 0);
  CHECK(nlohmann::json::parse(li.out)["subgroups"].size() == 3);
  Run c = run("--format json certify-infinite " + fx("infinite_cyclic"));
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["certificate_kind"] == "InfiniteViaZSurjection");
  Run f = run("certify-infinite " + fx("s3"));
  CHECK(f.code == 0);
  CHECK(f.out.rfind("Finite(order 6)", 0) == 0);
  Run u = run("--max-cosets 20 --max-index 1 certify-infinite " +
              write_temp("h2.fp", "< s, t | s^4, t^2 >"));
  CHECK(u.code == 2);
}

TEST_CASE("transform then verify-same on every finite fixture") {
  for (auto const& f : testing::finite_fixtures()) {
    CAPTURE(f.name);
    std::string out = write_temp(std::string(f.name) + ".t.fp",
                                 run("transform " + fx(f.name)).out);
    Run r = run("verify-same " + fx(f.name) + " " + out);
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
  }
}

TEST_CASE("report") {
  Run r = run("--format json report " + fx("d8_transformed_abc"));
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"] == "just-finite");
  CHECK(j["schema"] == "justfp.report/1");
  CHECK(j["transform"]["pairs"].size() == 3);
  Run classical = run("report " + fx("d8_classical"));
  CHECK(classical.code == 0);
  CHECK(classical.out.find("summary: not-just-finite") != std::string::npos);
  Run infinite = run("report " + fx("infinite_cyclic"));
  CHECK(infinite.code == 0);
}

TEST_CASE("JSON output has the documented shape for every fixture") {
  for (auto const& f : testing::finite_fixtures()) {
    if (f.order > 64) {
      continue;
    }
    CAPTURE(f.name);
    Run r = run("--format json report " + fx(f.name));
    REQUIRE((r.code == 0 || r.code == 2));
    auto j = nlohmann::json::parse(r.out);
    for (auto const* key : {"schema", "presentation", "deficiency", "group_order",
                            "irredundancy", "transform", "verdicts", "summary",
                            "notes"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["group_order"] == f.order);
    CHECK((r.code == 2) == (j["summary"] == "inconclusive"));
    for (auto const& v : j["verdicts"]) {
      CHECK(v.contains("relator_index"));
      CHECK(v.contains("relator"));
      CHECK(v.contains("witness"));
      CHECK(v["budget_used"].contains("cosets_defined"));
      std::string kind = v["certificate_kind"];
      CHECK((kind == "Finite" || kind == "InfiniteViaZSurjection" ||
             kind == "InfiniteViaSubgroup" || kind == "InfiniteViaAmalgam" ||
             kind == "Unknown"));
    }
  }
}
