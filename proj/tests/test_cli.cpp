#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(BCAST_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / ("bcast_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string write(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has_line(const std::string& out, const std::string& line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("cli solve, path and oracle") {
  auto dir = scratch();
  auto p4 = write(dir / "p4.txt", "4\n0 1\n1 2\n2 3\n");
  auto solve = run("solve --input " + p4);
  CHECK(solve.code == 0);
  CHECK(has_line(solve.out, "cost: 2"));
  CHECK(has_line(solve.out, "dominating: true"));
  CHECK(has_line(solve.out, "efficient: true"));

  auto path = run("path --input " + p4);
  CHECK(path.code == 0);
  CHECK(has_line(path.out, "cost: 2"));
  CHECK(has_line(path.out, "path_shaped: true"));

  auto k1 = write(dir / "k1.txt", "1\n");
  auto oracle = run("oracle --input " + k1);
  CHECK(oracle.code == 0);
  CHECK(has_line(oracle.out, "cost: 0"));
  CHECK(has_line(run("solve --input " + k1).out, "cost: 0"));
  CHECK(has_line(run("oracle --path --input " + p4).out, "cost: 2"));

  auto stdin_run = run("solve < " + p4);
  CHECK(stdin_run.out == solve.out);

  auto base = run("solve --baseline --input " + p4);
  CHECK(has_line(base.out, "cost: 2"));
  CHECK(has_line(base.out, "routine: anchored"));
  fs::remove_all(dir);
}

TEST_CASE("cli verify") {
  auto dir = scratch();
  auto p4 = write(dir / "p4.txt", "4\n0 1\n1 2\n2 3\n");
  auto miss = run("verify --input " + p4 + " --broadcast " + write(dir / "f1.txt", "1 1\n"));
  CHECK(miss.code == 2);
  CHECK(has_line(miss.out, "dominating: false"));
  CHECK(has_line(miss.out, "undominated: 3"));
  CHECK(has_line(miss.out, "result: fail"));

  auto ok = run("verify --input " + p4 + " --broadcast " + write(dir / "f2.txt", "0 1\n3 1\n"));
  CHECK(ok.code == 0);
  CHECK(has_line(ok.out, "result: pass"));

  auto clash = write(dir / "f3.txt", "1 1\n2 1\n");
  CHECK(run("verify --input " + p4 + " --broadcast " + clash).code == 2);
  CHECK(run("verify --check dominating --input " + p4 + " --broadcast " + clash).code == 0);
  CHECK(run("verify --check nonsense --input " + p4 + " --broadcast " + clash).code == 1);
  fs::remove_all(dir);
}

TEST_CASE("cli exit codes") {
  auto dir = scratch();
  CHECK(run("solve --input " + write(dir / "bad.txt", "3\n0 0\n")).code == 1);
  CHECK(run("solve --input " + (dir / "missing.txt").string()).code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("solve --threads 0 --input x").code == 1);
  CHECK(run("solve --input " + write(dir / "split.txt", "4\n0 1\n2 3\n")).code == 2);
  CHECK(run("gen --family wheel --n 3").code == 1);
  auto p14 = write(dir / "p14.txt", run("gen --family path --n 14").out);
  CHECK(run("oracle --input " + p14).code == 2);
  CHECK(run("oracle --oracle-limit 14 --input " + p14).code == 0);
  fs::remove_all(dir);
}

TEST_CASE("cli gen and dump-dag") {
  auto dir = scratch();
  auto gen = run("gen --family path --n 4");
  CHECK(gen.code == 0);
  CHECK(gen.out == "4\n0 1\n1 2\n2 3\n");
  CHECK(run("gen --family sparse-random --n 20 --seed 9").out == run("gen --family sparse-random --n 20 --seed 9").out);
  CHECK(run("gen --family random-tree --n 20 --seed 1").out != run("gen --family random-tree --n 20 --seed 2").out);

  auto p4 = write(dir / "p4.txt", gen.out);
  auto dot = dir / "p4.dot";
  CHECK(run("path --input " + p4 + " --dump-dag " + dot.string()).code == 0);
  auto text = slurp(dot);
  CHECK(text.rfind("digraph", 0) == 0);
  CHECK(text.find("s0 -> s11;") != std::string::npos);
  CHECK(run("path --baseline --input " + p4 + " --dump-dag " + dot.string()).code == 1);

  auto out = dir / "report.txt";
  CHECK(run("solve --input " + p4 + " --out " + out.string()).out.empty());
  CHECK(has_line(slurp(out), "cost: 2"));
  fs::remove_all(dir);
}

TEST_CASE("cli reports are byte-identical across runs and thread counts") {
  auto dir = scratch();
  auto g = write(dir / "g.txt", run("gen --family sparse-random --n 24 --seed 5").out);
  for (const char* cmd : {"solve", "path"}) {
    auto a = run(std::string(cmd) + " --input " + g);
    REQUIRE(a.code == 0);
    CHECK(run(std::string(cmd) + " --input " + g).out == a.out);
    auto t4 = run(std::string(cmd) + " --threads 4 --input " + g);
    CHECK(run(std::string(cmd) + " --threads 4 --input " + g).out == t4.out);
    std::string serial = a.out;
    auto cut = serial.find("candidates_connected");
    if (cut != std::string::npos) serial.resize(cut);
    CHECK(t4.out == serial);
  }
  fs::remove_all(dir);
}
