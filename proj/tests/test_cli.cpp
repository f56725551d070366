#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string &args) {
  const std::string cmd = std::string(MLTL_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r{-1, {}};
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path write_temp(const std::string &name,
                                 const std::string &content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

} // namespace

TEST_CASE("check exit codes") {
  CHECK(run_cli("check \"G[0,2] p\"").exit_code == 0);
  CHECK(run_cli("check \"F[5,3] true\"").exit_code == 2);
  CHECK(run_cli("check \"!(\"").exit_code == 1);
}

TEST_CASE("eval") {
  const auto single = write_temp("mltl_cli_single.trace", "x\n");
  auto r = run_cli("eval \"G[1,3] false\" " + single.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "true\n");

  const auto fut = write_temp("mltl_cli_fut.trace", "-\n-\np\n");
  r = run_cli("eval \"F[0,2] p\" " + fut.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "true\n");

  r = run_cli("eval \"F[5,3] p\" " + single.string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("progress and classify") {
  const auto fig4 = write_temp("mltl_cli_fig4.trace", "p\np\n-\n");
  auto r = run_cli("progress \"G[0,2] p\" " + fig4.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(! ((! true) | ((! true) | (! false))))\n");

  r = run_cli("progress \"G[0,2] p\" " + fig4.string() + " --steps");
  CHECK(r.exit_code == 0);
  // one residual per consumed state
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);

  r = run_cli("classify \"G[0,2] p\" " + fig4.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "FALSE\n");

  const auto one = write_temp("mltl_cli_one.trace", "p\n");
  r = run_cli("classify \"G[0,2] p\" " + one.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.starts_with("RESIDUAL "));
}

TEST_CASE("nnf and complen") {
  auto r = run_cli("nnf \"!G[0,2] p\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(F[0,2] (! p))\n");

  r = run_cli("complen \"F[0,2] p\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n");

  r = run_cli("complen \"G[1,3] false\"");
  CHECK(r.out == "4\n");
}

TEST_CASE("equiv") {
  auto r = run_cli("equiv \"G[0,2] p\" \"! F[0,2] ! p\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "equivalent\n");

  r = run_cli("equiv \"p\" \"q\"");
  CHECK(r.exit_code == 0);
  REQUIRE(r.out.starts_with("inequivalent\n"));
  // the witness pipes back into eval as a trace file
  const auto witness = r.out.substr(std::string("inequivalent\n").size());
  const auto wfile = write_temp("mltl_cli_witness.trace", witness);
  const auto on_p = run_cli("eval \"p\" " + wfile.string());
  const auto on_q = run_cli("eval \"q\" " + wfile.string());
  CHECK(on_p.out != on_q.out);

  // budget refusal
  r = run_cli("equiv \"G[0,40] p\" \"true\"");
  CHECK(r.exit_code == 3);
}

TEST_CASE("gen determinism") {
  const auto out1 = std::filesystem::temp_directory_path() / "mltl_cli_gen1.jsonl";
  const auto out2 = std::filesystem::temp_directory_path() / "mltl_cli_gen2.jsonl";
  const std::string base =
      "gen --seed 42 --cases 50 --depth 2 --bound 1 --props 2 --policy at";
  CHECK(run_cli(base + " --out " + out1.string()).exit_code == 0);
  CHECK(run_cli(base + " --threads 4 --out " + out2.string()).exit_code == 0);

  std::ifstream a(out1, std::ios::binary);
  std::ifstream b(out2, std::ios::binary);
  const std::string sa((std::istreambuf_iterator<char>(a)), {});
  const std::string sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);
  CHECK_FALSE(sa.empty());
}

TEST_CASE("selftest") {
  const auto r = run_cli("selftest --cases 50 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  CHECK(r.out.find("FAIL") == std::string::npos);

  // deterministic for a fixed seed
  const auto r2 = run_cli("selftest --cases 50 --seed 7");
  CHECK(r.out == r2.out);
}
