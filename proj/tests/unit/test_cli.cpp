#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "segeuler_cli/cli.hpp"

using segeuler::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "segeuler");
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table command") {
  Run t = run({"table", "--stat", "T", "--n", "3", "--format", "csv"});
  CHECK(t.code == 0);
  CHECK(t.out == "k,count\n0,13\n1,10\n2,1\n");
  Run a = run({"table", "--stat", "A", "--n", "3", "--format", "csv"});
  CHECK(a.out == "k,count\n0,1\n1,4\n2,1\n");
  Run k = run({"--format", "json", "table", "--stat", "K", "--n", "2"});
  nlohmann::json j = nlohmann::json::parse(k.out);
  CHECK(j["kind"] == "K");
  CHECK(j["entries"].size() == 3);
  Run md = run({"table", "--stat", "T", "--n", "3"});
  CHECK(md.out.find("| 0 | 13 |") != std::string::npos);
  // enumeration agrees with the closed form
  for (const char* stat : {"A", "T", "K"}) {
    Run closed = run({"table", "--stat", stat, "--n", "6", "--format", "json"});
    Run counted = run({"table", "--stat", stat, "--n", "6", "--format", "json", "--enumerate", "--threads", "2"});
    CHECK(closed.out == counted.out);
  }
  CHECK(run({"table", "--stat", "T", "--n", "21"}).code == 3);
  CHECK(run({"table", "--stat", "X", "--n", "3"}).code == 2);
  CHECK(run({"table", "--stat", "T"}).code == 2);
  CHECK(run({"table", "--stat", "T", "--n", "0"}).code == 2);
  CHECK(run({"table", "--stat", "T", "--n", "11", "--enumerate"}).code == 3);
}

TEST_CASE("enumerate command") {
  Run two = run({"enumerate", "--n", "2"});
  CHECK(two.code == 0);
  CHECK(two.out ==
        "12 des=0 seg=0 w'=y_2\n"
        "1|2 des=0 seg=1 w'=w_2\n"
        "21 des=1 seg=0 w'=x_2\n"
        "2|1 des=0 seg=1 w'=z_2\n"
        "total 4\n");
  CHECK(run({"enumerate", "--n", "1"}).out == "1 des=0 seg=0 w'=1\ntotal 1\n");
  Run six = run({"enumerate", "--n", "6"});
  CHECK(six.out.find("\n2|516|34 des=1 seg=2 ") != std::string::npos);
  CHECK(six.out.find("total 23040\n") != std::string::npos);
  Run js = run({"enumerate", "--n", "3", "--format", "json"});
  CHECK(nlohmann::json::parse(js.out)["total"] == 24);
  CHECK(run({"enumerate", "--n", "7"}).code == 3);
}

TEST_CASE("verify command") {
  CHECK(run({"verify", "--which", "identity", "--n-max", "5"}).code == 0);
  CHECK(run({"verify", "--which", "conjecture", "--n-max", "12"}).code == 0);
  CHECK(run({"verify", "--which", "roots", "--n-max-p", "20", "--n-max-kl", "10"}).code == 0);
  Run js = run({"verify", "--which", "gf", "--n-max", "3", "--format", "json"});
  CHECK(js.code == 0);
  nlohmann::json cells = nlohmann::json::parse(js.out);
  CHECK(cells.size() == 3);
  CHECK(cells[0]["verdict"] == true);
  CHECK(run({"verify", "--which", "nonsense"}).code == 2);
  CHECK(run({"verify", "--which", "identity", "--n-max", "9"}).code == 3);

  auto dir = std::filesystem::temp_directory_path() / "segeuler-cli-cache";
  std::filesystem::remove_all(dir);
  CHECK(run({"--cache-dir", dir.string(), "verify", "--which", "specializations", "--n-max", "5"}).code == 0);
  CHECK(std::filesystem::exists(dir / "verify-cells.jsonl"));
  CHECK(run({"verify", "--which", "specializations", "--n-max", "5", "--cache-dir", dir.string(), "--force"}).code == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("roots command") {
  Run c = run({"roots", "--poly", "13,10,1", "--action", "count"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["count"] == 2);
  CHECK(nlohmann::json::parse(run({"roots", "--poly", "1,0,1"}).out)["count"] == 0);
  Run bounded = run({"roots", "--poly", "-1,0,1", "--lo", "-1", "--hi", "1"});
  CHECK(nlohmann::json::parse(bounded.out)["count"] == 1);
  Run iso = run({"roots", "--poly", "-2,0,1", "--action", "isolate", "--width", "1/4"});
  nlohmann::json roots = nlohmann::json::parse(iso.out)["roots"];
  CHECK(roots.size() == 2);
  Run il = run({"roots", "--g", "6,6", "--f", "1,4,1", "--action", "interlace"});
  CHECK(nlohmann::json::parse(il.out)["certificate"]["verdict"] == true);

  CHECK(run({"roots", "--poly", "1,0,1", "--action", "isolate"}).code == 1);
  CHECK(run({"roots", "--poly", "1,x"}).code == 2);
  CHECK(run({"roots", "--action", "count"}).code == 2);
  CHECK(run({"roots", "--g", "1", "--f", "0,0,1", "--action", "interlace"}).code == 1);
  CHECK(run({"roots", "--poly", "0"}).code == 1);
}

TEST_CASE("bench command and global flags") {
  Run b = run({"bench", "--n", "6", "--threads", "2", "--format", "json"});
  CHECK(b.code == 0);
  nlohmann::json j = nlohmann::json::parse(b.out);
  CHECK(j["objects"] == 23040);
  CHECK(j["matches_closed_form"] == true);
  CHECK(run({"bench", "--n", "1"}).code == 0);
  CHECK(run({"bench", "--n", "11"}).code == 3);
  CHECK(run({"--threads", "0", "bench", "--n", "3"}).code == 2);
  CHECK(run({"--seed", "0x10", "verify", "--which", "probes", "--n-max", "2", "--samples", "20"}).code == 0);
  CHECK(run({"--seed", "zz", "verify", "--which", "probes", "--n-max", "2"}).code == 2);
  CHECK(run({"--format", "yaml", "table", "--stat", "T", "--n", "2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical output") {
  for (std::vector<std::string> args : {std::vector<std::string>{"table", "--stat", "K", "--n", "9"},
                                        std::vector<std::string>{"enumerate", "--n", "4", "--format", "csv"},
                                        std::vector<std::string>{"roots", "--poly", "1,4,1", "--action", "isolate"},
                                        std::vector<std::string>{"verify", "--which", "probes", "--n-max", "2",
                                                                 "--samples", "30"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
