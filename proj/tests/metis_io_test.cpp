#include <doctest.h>
#include <zlib.h>

#include <cstdio>
#include <string>

#include "mincut/metis_io.hpp"
#include "test_util.hpp"

using namespace mincut;
using namespace mincut::testutil;

TEST_SUITE_BEGIN("metis-io");

TEST_CASE("parses weighted and unweighted bodies") {
  CHECK(parse_metis("3 2 1\n2 1\n1 1 3 1\n2 1\n") == path(3));
  CHECK(parse_metis("2 1\n2\n1\n") == make_graph(2, {{0, 1, 1}}));
  CHECK(parse_metis("% a comment\n2 1 0\n2\n% inline comment\n1\n") ==
        make_graph(2, {{0, 1, 1}}));
}

TEST_CASE("entry count mismatch names expected vs found") {
  try {
    parse_metis("3 2 1\n2 1\n1 1\n\n");
    FAIL("expected GraphFormatError");
  } catch (const GraphFormatError& e) {
    const std::string msg = e.what();
    CHECK(msg.find('4') != std::string::npos);
    CHECK(msg.find('2') != std::string::npos);
  }
}

TEST_CASE("bad tokens and indices are rejected with their line") {
  CHECK_THROWS_AS(parse_metis("2 1\n3\n1\n"), GraphFormatError);
  CHECK_THROWS_AS(parse_metis("2 1 1\n2\n1 1\n"), GraphFormatError);  // odd pair count
  CHECK_THROWS_AS(parse_metis("2 1\nx\n1\n"), GraphFormatError);
  CHECK_THROWS_AS(parse_metis("0 0\n"), GraphFormatError);
  CHECK_THROWS_AS(parse_metis("2 1 3\n2\n1\n"), GraphFormatError);  // unsupported fmt
  try {
    parse_metis("2 1\n3\n1\n");
  } catch (const GraphFormatError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("asymmetric input is rejected, not repaired") {
  // reverse entry missing
  CHECK_THROWS_AS(parse_metis("3 2 1\n2 1 3 1\n1 1\n2 1\n"), GraphFormatError);
  // weights differ between the two directions
  try {
    parse_metis("2 1 1\n2 3\n1 4\n");
    FAIL("expected GraphFormatError");
  } catch (const GraphFormatError& e) {
    CHECK(std::string(e.what()).find("asymmetric") != std::string::npos);
    CHECK(e.line() == 2);
  }
}

TEST_CASE("write_metis emits the canonical form") {
  CHECK(write_metis(path(3)) == "3 2 1\n2 1\n1 1 3 1\n2 1\n");
  // isolated vertex keeps its blank line
  const Graph g = make_graph(3, {{0, 1, 2}});
  CHECK(write_metis(g) == "3 1 1\n2 2\n1 2\n\n");
  // merged parallel edge surfaces as one weight token
  const Graph merged = make_graph(2, {{0, 1, 2}, {0, 1, 3}});
  CHECK(write_metis(merged) == "2 1 1\n2 5\n1 5\n");
}

TEST_CASE("round-trip is exact on random graphs") {
  Rng rng(2024);
  for (int iter = 0; iter < 200; ++iter) {
    const NodeID n = static_cast<NodeID>(rng.uniform(1, 100));
    const Graph g = random_graph(rng, n, 0.15, 1, 100);
    CHECK(parse_metis(write_metis(g)) == g);
  }
}

TEST_CASE("gzip-compressed files are read transparently") {
  const Graph g = cycle({1, 2, 3, 4});
  const std::string text = write_metis(g);
  const std::string path = "metis_io_test_tmp.metis.gz";
  gzFile f = gzopen(path.c_str(), "wb");
  REQUIRE(f != nullptr);
  gzwrite(f, text.data(), static_cast<unsigned>(text.size()));
  gzclose(f);
  CHECK(read_metis_file(path) == g);
  std::remove(path.c_str());
}

TEST_SUITE_END();
