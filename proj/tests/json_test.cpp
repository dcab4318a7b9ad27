#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cqwa/json_io.hpp"

using namespace cqwa;

namespace {
Json golden(const std::string& name) {
  std::ifstream in(std::string(CQWA_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  return Json::parse(in);
}
}  // namespace

TEST_CASE("scalar encoding") {
  LaurentScalar s = LaurentScalar::q() - LaurentScalar::monomial(Rational(1, 2), -1);
  Json j = to_json(s);
  CHECK(j.dump() == R"([[-1,"-1/2"],[2,"1"]])");
  CHECK(laurent_from_json(j) == s);
  CHECK(laurent_from_json(Json(3)) == LaurentScalar(3));
}

TEST_CASE("presentation round trip") {
  for (const Presentation& p : {preset_linear(4), preset_cyclic(5)}) {
    Presentation back = presentation_from_json(Json::parse(to_json(p).dump()));
    CHECK(back.n() == p.n());
    for (std::size_t i = 0; i < p.n(); ++i)
      for (std::size_t j = 0; j < p.n(); ++j) {
        CHECK(back.q(i, j) == p.q(i, j));
        CHECK(back.r(i, j) == p.r(i, j));
      }
  }
}

TEST_CASE("golden seed after one mutation") {
  CHECK(to_json(mutate_seed(preset_cycle(3), 0)) == golden("seed_cycle3_mutated0.json"));
}

TEST_CASE("golden report") {
  Report r("demo");
  r.pass("a/1", "tag-one");
  r.fail("a/2", "tag-two", "x1 - x2");
  CHECK(to_json(r) == golden("report_demo.json"));
}

TEST_CASE("bracket table lists the nonzero upper entries") {
  Json j = to_json(bracket_linear(3));
  CHECK(j["m"] == 3);
  CHECK(j["ambient"] == "polynomial");
  CHECK(j["entries"].size() == 3);
  CHECK(j["entries"][0]["poly"] == "x1*x2 - 1");
}
