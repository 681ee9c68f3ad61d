// End-to-end checks of the command-line tool: exit codes and key output.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(KMOS_BINARY) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string fixture(const std::string& name) {
  return std::string(KMOS_SOURCE_DIR) + "/data/mosaics/" + name;
}

std::string table_arg() {
  return "--table " + std::string(KMOS_SOURCE_DIR) + "/data/knot_table.csv ";
}

}  // namespace

TEST_CASE("validate reports connectivity and exit codes") {
  auto ok = run("validate " + fixture("unknot_2x2.txt"));
  REQUIRE(ok.exit_code == 0);
  REQUIRE(ok.output.find("connected, tiles=4, components=1") != std::string::npos);

  auto broken = run("validate " + fixture("broken_2x2.txt"));
  REQUIRE(broken.exit_code == 3);

  auto missing = run("validate /nonexistent/file.txt");
  REQUIRE(missing.exit_code == 2);
}

TEST_CASE("trace prints the PD code") {
  auto res = run("trace " + fixture("trefoil_4x4.txt"));
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.output.find("PD[") != std::string::npos);
  REQUIRE(res.output.find("crossings=3 writhe=3 reduced=yes alternating=yes") !=
          std::string::npos);
  REQUIRE(run("trace " + fixture("two_circles_4x4.txt")).exit_code == 3);
}

TEST_CASE("identify names the trefoil and the unknot") {
  auto res = run(table_arg() + "identify " + fixture("trefoil_4x4.txt") + " " +
                 fixture("unknot_2x2.txt"));
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.output.find("3_1") != std::string::npos);
  REQUIRE(res.output.find("0_1") != std::string::npos);
  REQUIRE(res.output.find("fingerprint") != std::string::npos);
}

TEST_CASE("render produces text and svg") {
  auto text = run("render " + fixture("unknot_2x2.txt"));
  REQUIRE(text.exit_code == 0);
  auto svg = run("render --format svg " + fixture("unknot_2x2.txt"));
  REQUIRE(svg.exit_code == 0);
  REQUIRE(svg.output.rfind("<svg", 0) == 0);
  REQUIRE(run("render --format bogus " + fixture("unknot_2x2.txt")).exit_code == 2);
}

TEST_CASE("enumerate, tables, and catalog run end to end") {
  std::string out = "/tmp/kmos_cli_test_out";
  std::string base = std::string(KMOS_SOURCE_DIR);
  auto enum_res = run(table_arg() + "enumerate --masks 22a --crossings 8..9 --masks-dir " +
                      base + "/data/masks --out " + out);
  REQUIRE(enum_res.exit_code == 0);
  auto tables_res =
      run("tables --report " + out + " --expected " + base + "/data/expected_tile_numbers.csv");
  REQUIRE(tables_res.exit_code == 0);
  REQUIRE(tables_res.output.find("tile number 22") != std::string::npos);
  auto cat_res = run("catalog --report " + out);
  REQUIRE(cat_res.exit_code == 0);
  // identical run is byte-identical (determinism across invocations)
  std::string out2 = "/tmp/kmos_cli_test_out2";
  run(table_arg() + "enumerate --masks 22a --crossings 8..9 --masks-dir " + base +
      "/data/masks --out " + out2);
  auto diff = run("");  // placeholder to keep RunResult available
  (void)diff;
  FILE* a = fopen((out + "/summary.json").c_str(), "r");
  FILE* b = fopen((out2 + "/summary.json").c_str(), "r");
  REQUIRE(a != nullptr);
  REQUIRE(b != nullptr);
  std::string sa, sb;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), a)) > 0) sa.append(buf.data(), n);
  while ((n = fread(buf.data(), 1, buf.size(), b)) > 0) sb.append(buf.data(), n);
  fclose(a);
  fclose(b);
  REQUIRE(sa == sb);
}

TEST_CASE("enumerate rejects out-of-range crossing requests") {
  std::string base = std::string(KMOS_SOURCE_DIR);
  auto res = run(table_arg() + "enumerate --masks 22a --crossings 2..20 --masks-dir " + base +
                 "/data/masks --out /tmp/kmos_cli_bad");
  REQUIRE(res.exit_code == 3);
}
