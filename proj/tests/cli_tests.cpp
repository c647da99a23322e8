// End-to-end tests of the latloc executable: flags, formats, exit codes,
// and byte-determinism of machine-readable output. The binary path comes in
// through the LATLOC_CLI_PATH compile definition.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "",
              bool merge_stderr = false) {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string(LATLOC_CLI_PATH) + " " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, p)) r.out += buf;
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const std::string& square_poly() {
  static std::string path = [] {
    auto p = std::filesystem::temp_directory_path() /
             ("latloc_cli_square_" + std::to_string(getpid()) + ".poly");
    std::ofstream f(p);
    f << R"({"dim": 2, "facets": [
      {"normal": [1, 0], "offset": 0},
      {"normal": [-1, 0], "offset": -2},
      {"normal": [0, 1], "offset": 0},
      {"normal": [0, -1], "offset": -2}
    ]})";
    return p.string();
  }();
  return path;
}

}  // namespace

TEST_CASE("model-index prints a bare integer in text mode") {
  RunResult r = run("model-index --kind cylinder --rho 0 --tau 1 --grid-n 201");
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
  RunResult d = run("model-index --kind disc --rho 1 --tau 3 --grid-n 201");
  CHECK(d.code == 0);
  CHECK(d.out == "0\n");
}

TEST_CASE("model-index JSON is byte-identical across runs") {
  std::string args =
      "model-index --kind cylinder --rho 0 --tau 1 --grid-n 201 --format json";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"grid_n\": 201") != std::string::npos);
  CHECK(a.out.find("\"index\": 0") != std::string::npos);
}

TEST_CASE("LATLOC_GRID_N sets the default grid; the flag wins") {
  RunResult env = run(
      "model-index --kind cylinder --rho 0 --tau 1 --format json",
      "LATLOC_GRID_N=101");
  CHECK(env.code == 0);
  CHECK(env.out.find("\"grid_n\": 101") != std::string::npos);
  RunResult both = run(
      "model-index --kind cylinder --rho 0 --tau 1 --grid-n 201 --format json",
      "LATLOC_GRID_N=101");
  CHECK(both.out.find("\"grid_n\": 201") != std::string::npos);
  RunResult bad = run("model-index --kind cylinder --rho 0 --tau 1",
                      "LATLOC_GRID_N=banana", true);
  CHECK(bad.code == 2);
}

TEST_CASE("quantize evaluates membership") {
  RunResult in = run("quantize --polytope " + square_poly() + " --eval 1,1");
  CHECK(in.code == 0);
  CHECK(in.out == "1\n");
  RunResult out = run("quantize --polytope " + square_poly() + " --eval 3,0");
  CHECK(out.code == 0);
  CHECK(out.out == "0\n");
}

TEST_CASE("quantize lists support deterministically") {
  RunResult r = run("quantize --polytope " + square_poly());
  CHECK(r.code == 0);
  CHECK(r.out.find("total 9") != std::string::npos);
  std::string args = "quantize --polytope " + square_poly() + " --format json";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"total\": 9") != std::string::npos);
}

TEST_CASE("verify-qr reports and encodes pass/fail in the exit code") {
  RunResult pass =
      run("verify-qr --polytope " + square_poly() + " --xi 1,0 --level 1");
  CHECK(pass.code == 0);
  CHECK(pass.out.find("lhs 3") != std::string::npos);
  CHECK(pass.out.find("rhs 3") != std::string::npos);
  CHECK(pass.out.find("pass yes") != std::string::npos);

  RunResult irr =
      run("verify-qr --polytope " + square_poly() + " --xi 1,1 --level 0");
  CHECK(irr.code == 1);
  CHECK(irr.out.find("regular no") != std::string::npos);
  CHECK(irr.out.find("pass no") != std::string::npos);

  RunResult js = run("verify-qr --polytope " + square_poly() +
                     " --xi 1,0 --level 1 --format json");
  CHECK(js.code == 0);
  CHECK(js.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("reduce prints the slice") {
  RunResult r =
      run("reduce --polytope " + square_poly() + " --xi 1,0 --level 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("dim 1") != std::string::npos);
  RunResult irr =
      run("reduce --polytope " + square_poly() + " --xi 1,0 --level 0", "",
          true);
  CHECK(irr.code == 1);
  CHECK(irr.out.find("irregular") != std::string::npos);
}

TEST_CASE("localize prints the bookkeeping") {
  RunResult r = run("localize --polytope " + square_poly() + " --rho 2,2");
  CHECK(r.code == 0);
  CHECK(r.out.find("total 1") != std::string::npos);
  CHECK(r.out.find("fiber 1") != std::string::npos);
  CHECK(r.out.find("fixed-point-vanishing") != std::string::npos);
  RunResult far = run("localize --polytope " + square_poly() + " --rho 9,9");
  CHECK(far.out.find("total 0") != std::string::npos);
}

TEST_CASE("sweep emits the pinned CSV header") {
  RunResult r = run(
      "sweep --kind cylinder --rho 0 --taus 1,2 --family constant_t "
      "--values 50,100 --grid-n 201");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("rho,tau,deformation,index,gap,resolved\n", 0) == 0);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 5);  // header + 2 taus x 2 values
  CHECK(r.out.find("0,1,constant_t(t=50),0,") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("frobnicate", "", true).code == 2);
  CHECK(run("model-index --kind cylinder --rho 0 --tau 1 --bogus 1", "", true)
            .code == 2);
  CHECK(run("quantize --polytope /nonexistent.poly", "", true).code == 2);
  CHECK(run("quantize --polytope " + square_poly() + " --eval a,b", "", true)
            .code == 2);
  CHECK(run("quantize --polytope " + square_poly() + " --eval 1", "", true)
            .code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("model-index --help").code == 0);
}

TEST_CASE("domain errors exit 1 with a reason on stderr") {
  RunResult r = run(
      "model-index --kind cylinder --rho 0 --tau 1 --grid-n 10", "", true);
  CHECK(r.code == 1);
  CHECK(r.out.find("at least 64") != std::string::npos);
  RunResult np = run(
      "reduce --polytope " + square_poly() + " --xi 2,0 --level 1", "", true);
  CHECK(np.code == 1);
  CHECK(np.out.find("primitive") != std::string::npos);
}
