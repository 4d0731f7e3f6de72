#include "fixtures.hpp"
#include "isoharmonic/errors.hpp"
#include "isoharmonic/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace fixtures;

TEST_CASE("config round trip") {
  const TCurveConfig c = config_g3();
  const io::json j = io::json::parse(io::dump(io::to_json(c)));
  const TCurveConfig back = io::config_from_json(j);
  CHECK(back.x == c.x);
  CHECK(back.u == c.u);
  CHECK(back.y0 == c.y0);
  CHECK(back.sigma == c.sigma);
  CHECK(io::dump(io::to_json(back)) == io::dump(io::to_json(c)));
}

TEST_CASE("doubles survive serialization") {
  for (double x : {0.1, 1.0 / 3.0, -2.718281828459045, 1e-300, 6.02214076e23}) {
    CHECK(std::stod(io::format_double(x)) == x);
  }
  const IntervalSystem E = cubic_preimage();
  CHECK(io::intervals_from_json(io::json::parse(io::dump(io::to_json(E)))).c == E.c);
}

TEST_CASE("invalid input") {
  io::json j = io::to_json(config_g2());
  j["x"] = {2.0, 2.0};
  CHECK_THROWS_AS(io::config_from_json(j), NumericalError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/config.json"), std::invalid_argument);
  const std::string path = "io_test_malformed.json";
  {
    std::ofstream(path) << "{\"x\": [1, 2";
  }
  CHECK_THROWS_AS(io::read_file(path), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("csv layout") {
  std::ostringstream os;
  io::write_csv(os, {"a", "b"}, {{1.0, 0.5}, {2.0, -1.0}});
  CHECK(os.str() == "a,b\n1,0.5\n2,-1\n");
}
