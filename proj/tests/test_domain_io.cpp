#include <doctest.h>

#include <string>

#include "slitsqueeze/domain_io.hpp"
#include "slitsqueeze/error.hpp"

using namespace slitsqueeze;

namespace {

Error parse_error(const std::string& text) {
  try {
    parse_domain(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("text was accepted");
  return Error(ErrorKind::InvalidArgument, "");
}

}  // namespace

TEST_SUITE("domain_io") {
  TEST_CASE("parses holes in order") {
    const auto d = parse_domain(R"({"holes":[{"center":[-0.4,0],"radius":0.15},{"center":[0.45,0.1],"radius":0.2}]})");
    REQUIRE(d.hole_count() == 2);
    CHECK(d.holes()[0].center == Complex(-0.4, 0.0));
    CHECK(d.holes()[1].center == Complex(0.45, 0.1));
    CHECK(d.holes()[1].radius == 0.2);
  }

  TEST_CASE("round trip keeps every bit") {
    const auto d = make_circular_domain({{Complex(0.1 / 3.0, -0.2 / 7.0), 0.123456789012345678}, {0.6, 0.1}});
    const auto back = parse_domain(domain_to_json(d));
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(back.holes()[k].center == d.holes()[k].center);
      CHECK(back.holes()[k].radius == d.holes()[k].radius);
    }
  }

  TEST_CASE("syntax errors carry a position") {
    const Error e = parse_error("{\n  \"holes\": [\n    {\"center\": [0.5 0.0], \"radius\": 0.1}\n  ]\n}");
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  TEST_CASE("schema errors name the field") {
    CHECK(std::string(parse_error(R"({"holes":[{"center":[0.1],"radius":0.1}]})").what()).find("/holes/0/center") !=
          std::string::npos);
    CHECK(std::string(parse_error(R"({"holes":[{"center":[0.1,0],"radius":"x"}]})").what()).find("/holes/0/radius") !=
          std::string::npos);
    CHECK(parse_error(R"({"hole":[]})").kind() == ErrorKind::ParseError);
    CHECK(parse_error(R"({"holes":[{"center":[0.1,0]}]})").kind() == ErrorKind::ParseError);
  }

  TEST_CASE("geometry errors keep their kind") {
    CHECK(parse_error(R"({"holes":[]})").kind() == ErrorKind::EmptyHoleList);
    CHECK(parse_error(R"({"holes":[{"center":[0.5,0],"radius":0.6}]})").kind() == ErrorKind::HoleOutsideDisc);
    CHECK(parse_error(R"({"holes":[{"center":[0.1,0],"radius":0.2},{"center":[0.2,0],"radius":0.2}]})").kind() ==
          ErrorKind::HolesOverlap);
  }

  TEST_CASE("files") {
    CHECK(load_domain(SLITSQUEEZE_TEST_DATA "/three.json").hole_count() == 2);
    CHECK(load_domain(SLITSQUEEZE_TEST_DATA "/annulus.json").is_concentric_annulus());
    CHECK_THROWS_AS(load_domain(SLITSQUEEZE_TEST_DATA "/missing.json"), Error);
  }
}
