#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
  const char* env = std::getenv("ASD_CLI_BIN");
  REQUIRE_MESSAGE(env != nullptr, "ASD_CLI_BIN must point at the built binary");
  return env;
}

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run_cmd(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return CmdResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Fixture {
 public:
  Fixture() {
    dir_ = fs::temp_directory_path() / ("asd_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Fixture() { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("cli end to end") {
  Fixture fx;
  const std::string a = fx.file("a.txt", "interleaved streams everywhere");
  const std::string b = fx.file("b.txt", "interleaved dreams anywhere..");

  SUBCASE("exact on identical files reports zero") {
    const std::string c = fx.file("c.txt", "interleaved streams everywhere");
    const CmdResult res = run_cmd("exact --metric ed --offline " + a + " --online " + c);
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["estimate"] == 0);
    CHECK(j["algo"] == "exact-ed");
  }

  SUBCASE("streaming subcommands emit one report object") {
    const std::string c = fx.file("c.txt", "interleaved dreams anywhere!!");
    for (const std::string sub :
         {std::string("ed-const --delta 0.5"), std::string("closest --delta 0.5"),
          std::string("lcs-eps --epsilon 0.25"), std::string("ed-eps --epsilon 0.25")}) {
      const CmdResult res = run_cmd(sub + " --offline " + b + " --online " + c + " --with-oracle");
      INFO(sub);
      if (sub.rfind("closest", 0) == 0) {
        // closest has no --with-oracle flag
        const CmdResult plain = run_cmd(sub + " --offline " + b + " --online " + c);
        CHECK(plain.exit_code == 0);
        const auto j = nlohmann::json::parse(plain.out);
        CHECK(j.contains("l"));
        CHECK(j.contains("r"));
        continue;
      }
      CHECK(res.exit_code == 0);
      const auto j = nlohmann::json::parse(res.out);
      CHECK(j["oracle_reread"] == true);
      CHECK(j["n"] == 29);
      REQUIRE(j.contains("oracle"));
      if (j["algo"] == "lcs-eps") {
        const double est = j["estimate"].get<double>();
        const double oracle = j["oracle"].get<double>();
        CHECK(est <= oracle);
        CHECK(est >= 0.75 * oracle);
      }
    }
  }

  SUBCASE("unequal lengths exit 2") {
    const std::string shorter = fx.file("short.txt", "tiny");
    const CmdResult res =
        run_cmd("ed-const --delta 0.5 --offline " + a + " --online " + shorter);
    CHECK(res.exit_code == 2);
    CHECK(res.out.empty());  // diagnostics stay off stdout
  }

  SUBCASE("usage errors exit 1") {
    CHECK(run_cmd("ed-const --offline " + a + " --online " + b).exit_code == 1);  // no --delta
    CHECK(run_cmd("no-such-subcommand").exit_code == 1);
    CHECK(run_cmd("lcs-eps --epsilon 1.5 --offline " + a + " --online " + b).exit_code == 1);
  }

  SUBCASE("integer alphabet mode") {
    const std::string ia = fx.file("ia.txt", "3 1 4 1 5 9 2 6");
    const std::string ib = fx.file("ib.txt", "3 1 4 1 5 9 2 7");
    const CmdResult res = run_cmd("exact --metric lcs --alphabet int --offline " + ia +
                                  " --online " + ib);
    CHECK(res.exit_code == 0);
    CHECK(nlohmann::json::parse(res.out)["estimate"] == 7);

    const CmdResult stream = run_cmd("ed-eps --epsilon 0.5 --alphabet int --offline " + ia +
                                     " --online " + ib);
    CHECK(stream.exit_code == 0);

    const std::string longer = fx.file("ic.txt", "3 1 4 1 5 9 2 7 8");
    const CmdResult trailing = run_cmd("ed-eps --epsilon 0.5 --alphabet int --offline " + ia +
                                       " --online " + longer);
    CHECK(trailing.exit_code == 2);
    const std::string shorter = fx.file("id.txt", "3 1 4");
    const CmdResult early = run_cmd("ed-eps --epsilon 0.5 --alphabet int --offline " + ia +
                                    " --online " + shorter);
    CHECK(early.exit_code == 2);
  }

  SUBCASE("enumeration guard exits 2 and force overrides it") {
    const std::string n9a = fx.file("n9a.txt", "abcabcabc");
    const std::string n9b = fx.file("n9b.txt", "abcabcabb");
    const std::string base = "ed-const --delta 0.5 --offline " + n9a + " --online " + n9b;

    const std::string guarded = "ASD_MAX_ENUM=10 " + cli_path() + " " + base + " 2>/dev/null";
    FILE* pipe = popen(guarded.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[256];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {
    }
    CHECK(WEXITSTATUS(pclose(pipe)) == 2);

    const std::string forced = "ASD_MAX_ENUM=10 " + cli_path() + " " + base + " --force";
    FILE* fpipe = popen((forced + " 2>/dev/null").c_str(), "r");
    REQUIRE(fpipe != nullptr);
    while (fread(buf, 1, sizeof buf, fpipe) > 0) {
    }
    CHECK(WEXITSTATUS(pclose(fpipe)) == 0);
  }

  SUBCASE("bench emits one JSON line per run") {
    const std::string cfg = fx.file("bench.json",
                                    R"({"algo":"lcs-eps","sizes":[16,36],"epsilons":["0.5"],)"
                                    R"("trials":2,"seed":9})");
    const CmdResult res = run_cmd("bench --config " + cfg);
    CHECK(res.exit_code == 0);
    int lines = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t end = res.out.find('\n', start);
      if (end == std::string::npos) break;
      const std::string line = res.out.substr(start, end - start);
      if (!line.empty()) {
        ++lines;
        const auto j = nlohmann::json::parse(line);
        CHECK(j["algo"] == "lcs-eps");
        REQUIRE(j.contains("oracle"));
        const double est = j["estimate"].get<double>();
        CHECK(est >= 0.5 * j["oracle"].get<double>());
        CHECK(est <= j["oracle"].get<double>());
      }
      start = end + 1;
    }
    CHECK(lines == 4);
  }
}
