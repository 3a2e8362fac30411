#include <doctest.h>

#include <random>
#include <sstream>

#include "bps/error.hpp"
#include "bps/report.hpp"
#include "bps/text_format.hpp"
#include "oracles.hpp"

TEST_CASE("sequence files round-trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const bps::BitSequence s(oracle::random_bits(rng, 1 + rng() % 300));
    std::stringstream io;
    bps::write_sequence(io, {{{"kind", "bps"}, {"n", std::to_string(s.size())}}, s});
    const auto back = bps::read_sequence(io);
    REQUIRE(back.sequence == s);
    REQUIRE(back.sequence.label() == "bps");
    REQUIRE(back.metadata.size() == 2);
  }
}

TEST_CASE("reader tolerates wrapped bodies and CRLF") {
  std::istringstream in("# kind=dseq\r\n# q = 13\r\n0001\r\n0011\r\n\r\n1011\r\n");
  const auto file = bps::read_sequence(in);
  CHECK(file.sequence.to_string() == "000100111011");
  REQUIRE(file.metadata.size() == 2);
  CHECK(file.metadata[1] == std::pair<std::string, std::string>{"q", "13"});
}

TEST_CASE("reader names the offending line") {
  std::istringstream bad("# kind=bps\n0101\n01x1\n");
  try {
    bps::read_sequence(bad);
    FAIL("expected parse error");
  } catch (const bps::Error& e) {
    CHECK(e.kind() == bps::ErrorKind::Parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  std::istringstream empty("# kind=bps\n");
  CHECK_THROWS_AS(bps::read_sequence(empty), bps::Error);
  std::istringstream late("0101\n# n=4\n");
  CHECK_THROWS_AS(bps::read_sequence(late), bps::Error);
}

TEST_CASE("missing file is an I/O error") {
  try {
    bps::read_sequence_file("/nonexistent/definitely/missing.txt");
    FAIL("expected io error");
  } catch (const bps::Error& e) {
    CHECK(e.kind() == bps::ErrorKind::Io);
  }
}

TEST_CASE("correlation CSV") {
  const auto corr = bps::autocorrelation(bps::BitSequence::from_string("0101111100"));
  const auto csv = bps::correlation_csv(corr);
  CHECK(csv.rfind("lag,c\n0,1\n1,0.2\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
  CHECK(csv.find('\r') == std::string::npos);

  // Reals survive the text round trip exactly.
  std::istringstream rows(csv);
  std::string line;
  std::getline(rows, line);
  for (std::size_t k = 0; std::getline(rows, line); ++k) {
    const auto comma = line.find(',');
    REQUIRE(std::stod(line.substr(comma + 1)) == corr.values[k]);
  }
}

TEST_CASE("report JSON field names") {
  const auto report = bps::analyze(bps::BitSequence::from_string("0101111100", "t1"));
  const auto j = bps::to_json(report);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"randomness", "max_offpeak", "mean_offpeak",
                                         "ones_fraction", "convention", "sequence_label"});
  CHECK(j["convention"]["mapping"] == "bipolar");
  CHECK(j["convention"]["normalization"] == "by-n");
}
