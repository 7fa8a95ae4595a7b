#include <doctest.h>

#include <stdexcept>

#include <regex>
#include <string>

#include "generators.hpp"
#include "rosette/render.hpp"

using namespace rosette;

namespace {

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("layer tokens") {
  CHECK(parse_layer("base").kind == LayerKind::Base);
  const auto w = parse_layer("wigner:2");
  CHECK(w.kind == LayerKind::Wigner);
  CHECK(w.k == 2);
  const auto e = parse_layer("equidistant:0.3,4@2");
  CHECK(e.kind == LayerKind::Equidistant);
  CHECK(e.lambda == 0.3);
  CHECK(e.k == 4);
  CHECK(e.curve == 2);
  CHECK(parse_layer("offset:-1.5").alpha == -1.5);
  const auto p = parse_layer("pair:1.7,3");
  CHECK(p.kind == LayerKind::Pair);
  CHECK(p.lambda == 1.7);
  for (const char* bad : {"wobble", "wigner", "wigner:x", "cwms:1", "equidistant:0.3", "pair:0.5,1@2", "sms@0"}) {
    CHECK_THROWS_AS(parse_layer(bad), std::invalid_argument);
  }
  const auto list = parse_layers("base,equidistant:0.3,2, cwms;wigner:1");
  REQUIRE(list.size() == 4);
  CHECK(list[1].k == 2);
  CHECK(list[2].kind == LayerKind::Cwms);
}

TEST_CASE("circle layer renders one closed polyline") {
  SceneSpec scene{{circle(1.0)}, parse_layers("base"), 64};
  const std::string svg = render_svg(scene);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(count(svg, "<polyline") == 1);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // base curves dashed
  // 65 vertices, first repeated at the end
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex("points=\"([^\"]*)\"")));
  const std::string pts = m[1];
  CHECK(count(pts, " ") == 64);
  CHECK(pts.substr(0, pts.find(' ')) == pts.substr(pts.rfind(' ') + 1));
  // unit circle plus 5% margin
  CHECK(svg.find("viewBox=\"-1.100000 -1.100000 2.200000 2.200000\"") != std::string::npos);
}

TEST_CASE("y axis points up") {
  // circle of radius 1 centred at (0, 5): drawn at negative SVG y
  SceneSpec scene{{make_support(1, 1.0, {{1, 0.0, 5.0}})}, parse_layers("base"), 64};
  const std::string svg = render_svg(scene);
  CHECK(svg.find("viewBox=\"-1.100000 -6.100000 2.200000 2.200000\"") != std::string::npos);
}

TEST_CASE("point-degenerate SMS is a single marked point") {
  SceneSpec scene{{circle(2.0)}, parse_layers("sms"), 256};
  const std::string svg = render_svg(scene);
  CHECK(count(svg, "<polyline") == 0);
  CHECK(count(svg, "<circle") == 1);
}

TEST_CASE("reference scene: dashed base, solid derived curves, cusps marked") {
  SceneSpec scene{{gen::reference_m2()}, parse_layers("base;cwms;wigner:1"), 1024, 1.0, true};
  const std::string svg = render_svg(scene);
  CHECK(count(svg, "<polyline") == 3);
  CHECK(count(svg, "stroke-dasharray") == 1);
  CHECK(count(svg, "<circle") > 0);
  CHECK(render_svg(scene) == svg);
}

TEST_CASE("pair layers use curves 1 and 2; bad references throw") {
  SceneSpec scene{{gen::pair_first(), gen::pair_second()}, parse_layers("base;pair:0.5,0"), 512};
  CHECK(count(render_svg(scene), "<polyline") == 3);
  scene.curves.pop_back();
  CHECK_THROWS(render_svg(scene));
  SceneSpec few{{circle(1.0)}, parse_layers("base"), 8};
  CHECK_THROWS_AS(render_svg(few), std::invalid_argument);
}
