#include <regex>

#include "digifrac/errors.hpp"
#include "digifrac/render.hpp"
#include "doctest.h"

using namespace digifrac;

namespace {

std::size_t count_rects(const std::string& svg) {
  std::size_t n = 0;
  for (auto pos = svg.find("<rect "); pos != std::string::npos; pos = svg.find("<rect ", pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("rasterize examples") {
  const auto t1 = rasterize(generate(DigitSystem(2, 0), 1));
  CHECK(t1.width == 2);
  CHECK(t1.height == 2);
  CHECK(t1.at(0, 0));
  CHECK_FALSE(t1.at(1, 0));  // top-right clear
  CHECK(t1.at(0, 1));
  CHECK(t1.at(1, 1));

  const auto t0 = rasterize(generate(DigitSystem(2, 0), 0));
  CHECK(t0.width == 1);
  CHECK(t0.height == 1);
  CHECK(t0.at(0, 0));

  const auto h1 = rasterize(generate(DigitSystem(3, 1), 1));
  CHECK(h1.width == 3);
  CHECK(h1.height == 3);
  CHECK(h1.origin_i == -1);
  CHECK(h1.origin_j == -1);
  CHECK(h1.set_count() == 7);
  CHECK_FALSE(h1.at(2, 0));  // top-right
  CHECK_FALSE(h1.at(0, 2));  // bottom-left

  CHECK_THROWS_AS(rasterize(Prefractal(DigitSystem(2, 0), 1, {})), DomainError);
}

TEST_CASE("PBM output") {
  CHECK(pbm_string(rasterize(generate(DigitSystem(2, 0), 0))) == "P1\n1 1\n1\n");
  CHECK(pbm_string(rasterize(generate(DigitSystem(2, 0), 1))) == "P1\n2 2\n1 0\n1 1\n");
  CHECK(pbm_string(rasterize(generate(DigitSystem(3, 1), 1))) == "P1\n3 3\n1 1 0\n1 1 1\n0 1 1\n");
  CHECK(pbm_string(rasterize(generate(DigitSystem(2, 0), 2))) ==
        "P1\n4 4\n1 0 0 0\n1 1 0 0\n1 0 1 0\n1 1 1 1\n");
}

TEST_CASE("set pixels equal square count; output is deterministic") {
  for (const auto& sys : {DigitSystem(2, 0), DigitSystem(3, 0), DigitSystem(3, 1), DigitSystem(4, 2),
                          DigitSystem(5, 2)}) {
    for (int n = 0; n <= 3; ++n) {
      const auto p = generate(sys, n);
      const auto bm = rasterize(p);
      CHECK(bm.set_count() == p.size());
      CHECK(pbm_string(bm) == pbm_string(rasterize(generate(sys, n))));
      CHECK(svg_string(p) == svg_string(generate(sys, n)));
      CHECK(count_rects(svg_string(p)) == p.size());
    }
  }
}

TEST_CASE("SVG output") {
  const auto unit = svg_string(generate(DigitSystem(2, 0), 0));
  CHECK(unit ==
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1 1\" width=\"1\" "
        "height=\"1\" shape-rendering=\"crispEdges\">\n"
        "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\"/>\n"
        "</svg>\n");
  CHECK(count_rects(svg_string(generate(DigitSystem(2, 0), 2))) == 9);

  const auto hex = svg_string(generate(DigitSystem(3, 1), 2));
  CHECK(count_rects(hex) == 49);
  CHECK(hex.find("viewBox=\"-4 0 9 9\"") != std::string::npos);
  CHECK(std::regex_search(hex, std::regex("<rect x=\"-4\"")));

  // y is flipped: the (2, 0) depth-1 square (0, 1) is drawn in the top row.
  const auto t1 = svg_string(generate(DigitSystem(2, 0), 1));
  CHECK(t1.find("<rect x=\"0\" y=\"0\" ") != std::string::npos);
  CHECK(t1.find("<rect x=\"1\" y=\"1\" ") != std::string::npos);
  CHECK(t1.find("<rect x=\"1\" y=\"0\" ") == std::string::npos);
}
