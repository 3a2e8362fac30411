#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "bps/text_format.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run run(const std::string& args) {
  const std::string cmd = std::string(BPS_CLI_PATH) + " " + args + " 2>&1";
  Run r{0, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string body(const std::string& text) {
  std::istringstream in(text);
  return bps::read_sequence(in).sequence.to_string();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("bps_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen writes the sequence format") {
  auto r = run("gen dseq --q 13 --len 12");
  REQUIRE(r.status == 0);
  CHECK(body(r.out) == "000100111011");
  CHECK(r.out.rfind("# kind=dseq\n# q=13\n# n=12\n", 0) == 0);

  r = run("gen bps --n 10 --shifts 0,1");
  REQUIRE(r.status == 0);
  CHECK(body(r.out) == "0101111100");
  CHECK(r.out.find("# shifts=0,1\n") != std::string::npos);

  r = run("gen bps --n 10 --shifts 0");
  CHECK(body(r.out) == "0110101000");

  // 0 is prepended when omitted.
  CHECK(body(run("gen bps --n 10 --shifts 1").out) == "0101111100");

  r = run("gen hardened --q 13 --n 10 --shifts 0,1");
  REQUIRE(r.status == 0);
  CHECK(body(r.out) == "0100110010");
}

TEST_CASE("gen error exit codes") {
  CHECK(run("gen dseq --q 15 --len 4").status == 3);
  CHECK(run("gen bps --n 10 --shifts 0,10").status == 3);
  CHECK(run("gen bps --n 10 --shifts 0,x").status == 2);
  CHECK(run("gen bogus").status == 2);
  CHECK(run("gen dseq --q 13 --out /nonexistent/dir/x.txt").status == 4);
  const auto r = run("gen dseq --q 9");
  CHECK(r.out.find("not prime") != std::string::npos);
}

TEST_CASE("gen is deterministic with a seed") {
  TempDir tmp;
  const auto a = tmp / "a.txt", b = tmp / "b.txt";
  REQUIRE(run("gen bps --n 300 --strategy uniform-random --count 4 --seed 9 --out " + a).status == 0);
  REQUIRE(run("gen bps --n 300 --strategy uniform-random --count 4 --seed 9 --out " + b).status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run("gen bps --n 300 --strategy uniform-random --count 4").status == 2);
}

TEST_CASE("analyze prints a report and the CSV") {
  TempDir tmp;
  const auto seq = tmp / "b199.txt", csv = tmp / "c.csv";
  REQUIRE(run("gen bps --n 199 --shifts 0,7,11,22 --out " + seq).status == 0);
  const auto r = run("analyze " + seq + " --csv " + csv);
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["randomness"].get<double>() > 0.0);
  CHECK(j["convention"]["mapping"] == "bipolar");
  const auto text = slurp(csv);
  CHECK(text.rfind("lag,c\n0,1\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 200);

  std::ofstream(tmp / "ones.txt") << "11111111\n";
  const auto ones = nlohmann::json::parse(run("analyze " + (tmp / "ones.txt")).out);
  CHECK(ones["randomness"].get<double>() == 0.0);

  const auto raw = nlohmann::json::parse(
      run("analyze " + seq + " --convention raw01 --normalize by-peak").out);
  CHECK(raw["convention"]["mapping"] == "raw01");
  CHECK(raw["convention"]["normalization"] == "by-peak");
}

TEST_CASE("analyze rejects malformed input") {
  TempDir tmp;
  std::ofstream(tmp / "bad.txt") << "# kind=x\n0101\n0121\n";
  const auto r = run("analyze " + (tmp / "bad.txt"));
  CHECK(r.status == 3);
  CHECK(r.out.find("line 3") != std::string::npos);
  CHECK(run("analyze " + (tmp / "missing.txt")).status == 4);
}

TEST_CASE("round trip through files") {
  TempDir tmp;
  const auto path = tmp / "h.txt";
  REQUIRE(run("gen hardened --q 997 --shifts 0,11,77,111 --out " + path).status == 0);
  const auto file = bps::read_sequence_file(path);
  CHECK(file.sequence.size() == 997);
  CHECK(run("analyze " + path).status == 0);
}

TEST_CASE("complexity") {
  auto j = nlohmann::json::parse(run("complexity --n 1000000").out);
  CHECK(j["log10_paper_formula"].get<double>() == doctest::Approx(434305.0405).epsilon(1e-9));
  CHECK_FALSE(j.contains("exact_count"));
  j = nlohmann::json::parse(run("complexity --n 10 --l-max 2").out);
  CHECK(j["exact_count"] == 180);
  CHECK(j.size() == 3);
  CHECK(run("complexity --n 2").status != 0);
}

TEST_CASE("attack") {
  TempDir tmp;
  const auto path = tmp / "planted.txt";
  REQUIRE(run("gen hardened --q 13 --n 10 --shifts 0,1 --out " + path).status == 0);
  auto j = nlohmann::json::parse(run("attack " + path + " --l-max 1").out);
  CHECK(j["hypotheses_tested"] == 36);
  bool found = false;
  for (const auto& h : j["consistent_hypotheses"]) {
    found |= h["q"] == 13 && h["shifts"] == nlohmann::json::array({0, 1}) && h["matched"] == true;
  }
  CHECK(found);
  j = nlohmann::json::parse(run("attack " + path + " --l-max 2").out);
  CHECK(j["hypotheses_tested"] == 180);

  const auto long_path = tmp / "long.txt";
  REQUIRE(run("gen dseq --q 31 --len 30 --out " + long_path).status == 0);
  const auto r = run("attack " + long_path);
  CHECK(r.status == 3);
  CHECK(r.out.find("24") != std::string::npos);
}

TEST_CASE("reproduce writes CSV artifacts") {
  TempDir tmp;
  auto r = run("reproduce table1 --out " + (tmp / "t1.csv"));
  REQUIRE(r.status == 0);
  CHECK(r.out.find("3/3 rows match") != std::string::npos);
  r = run("reproduce --fig table2 --out " + (tmp / "t2.csv"));
  REQUIRE(r.status == 0);
  const auto t2 = slurp(tmp / "t2.csv");
  CHECK(t2.find("4,sum,0100010110,0100010100,4,3,false,9\n") != std::string::npos);
  CHECK(run("reproduce fig9").status == 2);
  CHECK(run("reproduce fig1 --out /nonexistent/dir/f.csv").status == 4);
}
