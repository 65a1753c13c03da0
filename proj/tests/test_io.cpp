#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "abseq/io.hpp"

using namespace abseq;

TEST_CASE("parse polygons") {
  CHECK(parse_polygon("2,7+5,3") == make_polygon({{2, 7}, {5, 3}}));
  CHECK(parse_polygon("5,3+2,7").to_string() == "2,7+5,3");
  CHECK(parse_polygon("1,1") == make_polygon({{1, 1}}));
  CHECK_THROWS_AS(parse_polygon("2,4+1,1"), ParseError);
  CHECK_THROWS_AS(parse_polygon(""), ParseError);
  CHECK_THROWS_AS(parse_polygon("2,7+"), ParseError);
  CHECK_THROWS_AS(parse_polygon("2;7"), ParseError);
  CHECK_THROWS_AS(parse_polygon("-1,2"), ParseError);
  CHECK_THROWS_AS(parse_polygon("a,b"), ParseError);
}

TEST_CASE("JSON shapes") {
  auto xi = make_polygon({{2, 7}, {5, 3}});
  CHECK(to_json(xi).dump() == R"({"segments":[[2,7],[5,3]]})");
  Abs s = minimal_abs(make_polygon({{0, 1}, {1, 0}}));
  CHECK(to_json(s).dump() ==
        R"({"elements":[{"delta":0,"index":1,"origin":"A"},{"delta":1,"index":1,"origin":"B"}],"pi":[1,2]})");
  CHECK_THROWS_AS(abs_from_json(nlohmann::json::parse(R"({"elements":[{"delta":0,"index":1,"origin":"A"}],"pi":[2]})")),
                  ParseError);
}

TEST_CASE("JSON round trips on the sweep") {
  for (int h = 2; h <= 14; ++h)
    for (const auto& xi : straddling_polygons(h)) {
      auto text = to_json(xi).dump();
      CHECK(polygon_from_json(nlohmann::json::parse(text)) == xi);
      CHECK(parse_polygon(xi.to_string()) == xi);
      Abs s = minimal_abs(xi);
      CHECK(abs_from_json(nlohmann::json::parse(to_json(s).dump())) == s);
      for (const auto& site : all_sites(shape_of(xi))) {
        Abs sp = specialize(s, site);
        CHECK(abs_from_json(to_json(sp)) == sp);
      }
    }
  Abs three = minimal_abs(make_polygon({{1, 2}, {1, 1}, {2, 1}}));
  CHECK(abs_from_json(to_json(three)) == three);
}

TEST_CASE("diagram") {
  Abs s = minimal_abs(make_polygon({{0, 1}, {1, 0}}));
  CHECK(render_diagram(s) == "pos    1  2\n"
                             "bit    0  1\n"
                             "elt   A1 B1\n"
                             "pi   1->1 2->2\n");
  Abs big = minimal_abs(make_polygon({{2, 7}, {5, 3}}));
  CHECK(render_diagram(big) == render_diagram(big));
  CHECK(render_diagram(big).find(" 1->11 ") != std::string::npos);
  CHECK(element_set_string({{0, 7, 0}, {0, 5, 0}}) == "{0^A_7, 0^A_5}");
  CHECK(element_set_string({}) == "{}");
}
