#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "zipkit/dump.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("prove_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = work_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p.string();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_prove(const std::string& args) {
  fs::path out_path = work_dir() / "stdout.txt";
  fs::path err_path = work_dir() / "stderr.txt";
  std::string cmd = std::string(PROVE_BIN) + " " + args + " > " + out_path.string() + " 2> " +
                    err_path.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = read_file(out_path);
  r.err = read_file(err_path);
  return r;
}

std::string rules5() {
  static const std::string path = write_file("rules5.json", R"([
  {"rule": "disjI_left", "priority": 0.8},
  {"rule": "disjI_right", "priority": 0.8},
  {"rule": "impI", "priority": 0.6},
  {"rule": "conjI", "priority": 0.5},
  {"rule": "assm", "priority": 0.3}
])");
  return path;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("prove exits 0 on a proved goal") {
  auto r = run_prove("--goal \"A |- (B -> C) | (A & A)\" --rules " + rules5());
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "status: proved\n"));
  REQUIRE(contains(r.out, "steps: 6\n"));
  REQUIRE(contains(r.out, "revision: 6\n"));
  REQUIRE(r.err.empty());
}

TEST_CASE("prove exits 1 when stuck") {
  auto r = run_prove("--goal \"A |- B\" --rules " + rules5());
  REQUIRE(r.code == 1);
  REQUIRE(contains(r.out, "status: stuck\n"));
  REQUIRE(contains(r.out, "steps: 0\n"));
}

TEST_CASE("prove exits 2 when the budget runs out") {
  auto r = run_prove("--goal \"A |- (B -> C) | (A & A)\" --rules " + rules5() + " --max-steps 3");
  REQUIRE(r.code == 2);
  REQUIRE(contains(r.out, "status: budget_exhausted\n"));
  REQUIRE(contains(r.out, "steps: 3\n"));
}

TEST_CASE("trace prints one line per selection") {
  auto r = run_prove("--goal \"A |- (B -> C) | (A & A)\" --rules " + rules5() + " --trace");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "step 1: disjI_left @0 score=0.8 node=0.0.1 pos=[[0],[0],[0]]\n"));
  REQUIRE(contains(r.out, "step 2: disjI_right @0 score=0.8 node=0.0.0 pos=[[1],[0],[0]]\n"));
  REQUIRE(contains(r.out, "step 5: assm"));
  REQUIRE(contains(r.out, "step 6: assm"));
  REQUIRE_FALSE(contains(r.out, "step 7:"));
  REQUIRE_FALSE(contains(r.out, "(failed, disabled)"));
}

TEST_CASE("dump files are written and parseable") {
  fs::path tree = work_dir() / "tree.json";
  fs::path dot = work_dir() / "tree.dot";
  auto r = run_prove("--goal \"A |- (B -> C) | (A & A)\" --rules " + rules5() + " --dump-tree " +
                     tree.string() + " --dump-dot " + dot.string());
  REQUIRE(r.code == 0);

  zipkit::TreeDump d = zipkit::parse_dump(read_file(tree));
  REQUIRE(d.schema_version == 1);
  REQUIRE(d.status == "proved");
  REQUIRE(d.revision == 6);
  REQUIRE(d.nodes.size() == 25);
  REQUIRE(d.trace.size() == 6);
  REQUIRE(d.nodes[0].id == "0");
  REQUIRE(d.nodes[0].proved);

  std::string dot_text = read_file(dot);
  REQUIRE(dot_text.rfind("digraph proof {", 0) == 0);
  REQUIRE(contains(dot_text, "shape=box"));
  REQUIRE(contains(dot_text, "style=bold"));
}

TEST_CASE("clustering can be toggled from the command line") {
  auto both_on = run_prove("--goal \"|- (A & B) & (C & D)\" --rules " + rules5() + " --clusters on");
  auto both_off = run_prove("--goal \"|- (A & B) & (C & D)\" --rules " + rules5() + " --clusters off");
  REQUIRE(both_on.code == 1);
  REQUIRE(both_off.code == 1);
  REQUIRE(contains(both_on.out, "status: stuck\n"));
  REQUIRE(contains(both_off.out, "status: stuck\n"));

  // independent subgoals explored once under clustering, duplicated without
  std::istringstream on_s(both_on.out), off_s(both_off.out);
  std::string line;
  int on_steps = -1, off_steps = -1;
  while (std::getline(on_s, line))
    if (line.rfind("steps: ", 0) == 0) on_steps = std::stoi(line.substr(7));
  while (std::getline(off_s, line))
    if (line.rfind("steps: ", 0) == 0) off_steps = std::stoi(line.substr(7));
  REQUIRE(on_steps > 0);
  REQUIRE(off_steps > on_steps);
}

TEST_CASE("a malformed goal exits 3 with line and column on stderr") {
  auto r = run_prove("--goal \"A &\" --rules " + rules5());
  REQUIRE(r.code == 3);
  REQUIRE(contains(r.err, "goal: parse error at line 1, column 4"));
}

TEST_CASE("rules errors exit 3 with a diagnostic") {
  auto bad_json = write_file("bad.json", "[ {\"rule\": \"assm\",\n");
  auto r1 = run_prove("--goal \"|- A\" --rules " + bad_json);
  REQUIRE(r1.code == 3);
  REQUIRE(contains(r1.err, "rules: invalid JSON at line 2"));

  auto unknown = write_file("unknown.json", R"([{"rule": "frobnicate", "priority": 0.5}])");
  auto r2 = run_prove("--goal \"|- A\" --rules " + unknown);
  REQUIRE(r2.code == 3);
  REQUIRE(contains(r2.err, "unknown rule \"frobnicate\""));

  auto dup = write_file("dup.json", R"([{"rule": "assm", "priority": 0.5},
                                        {"rule": "assm", "priority": 0.2}])");
  auto r3 = run_prove("--goal \"|- A\" --rules " + dup);
  REQUIRE(r3.code == 3);
  REQUIRE(contains(r3.err, "appears twice"));

  auto range = write_file("range.json", R"([{"rule": "assm", "priority": 1.5}])");
  auto r4 = run_prove("--goal \"|- A\" --rules " + range);
  REQUIRE(r4.code == 3);
  REQUIRE(contains(r4.err, "outside [0, 1]"));

  auto empty = write_file("empty.json", "[]");
  auto r5 = run_prove("--goal \"|- A\" --rules " + empty);
  REQUIRE(r5.code == 3);
  REQUIRE(contains(r5.err, "empty"));

  auto r6 = run_prove("--goal \"|- A\" --rules " + (work_dir() / "missing.json").string());
  REQUIRE(r6.code == 3);
  REQUIRE(contains(r6.err, "cannot open"));
}

TEST_CASE("usage errors exit 3 and help exits 0") {
  auto missing = run_prove("--rules " + rules5());
  REQUIRE(missing.code == 3);

  auto bad_flag = run_prove("--goal \"|- A\" --rules " + rules5() + " --clusters sideways");
  REQUIRE(bad_flag.code == 3);

  auto help = run_prove("--help");
  REQUIRE(help.code == 0);
  REQUIRE(contains(help.out, "--goal"));
  REQUIRE(contains(help.out, "--rules"));
}
