#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cpoly/dissect.hpp"
#include "cpoly/io.hpp"
#include "cpoly/shapes.hpp"
#include "cpoly/svg.hpp"

using namespace cpoly;

TEST_CASE("figure round trip") {
  const Tolerance t;
  for (const auto& c : {make_square(2.0), make_lens(1.0, kPi),
                        make_stadium(0.5, 1.5), make_circle(0.7)}) {
    const std::string text = write_figure(c);
    const auto back = read_figure(text, t);
    CHECK(congruent(back, c, t).has_value());
    // canonical files round-trip byte for byte
    CHECK(write_figure(back) == text);
  }
}

TEST_CASE("loader validates and redistributes closure") {
  const Tolerance t;
  SUBCASE("bad turning is rejected") {
    const std::string bad = R"({"format":"cpfig/1","start":[0,0],"heading":0,
      "elements":[{"k":"seg","len":1},{"k":"corner","turn":1.5707963267948966},
                  {"k":"seg","len":1},{"k":"corner","turn":1.5707963267948966}]})";
    CHECK_THROWS_AS((void)read_figure(bad, t), Error);
  }
  SUBCASE("small closure residual is absorbed into segments") {
    // a square written with slightly wrong segment lengths; the raw chain
    // fails the closure check, the loader fixes it
    const std::string wobbly = R"({"format":"cpfig/1","start":[0,0],"heading":0,
      "elements":[{"k":"seg","len":2.00000002},{"k":"corner","turn":1.5707963267948966},
                  {"k":"seg","len":2},{"k":"corner","turn":1.5707963267948966},
                  {"k":"seg","len":1.99999997},{"k":"corner","turn":1.5707963267948966},
                  {"k":"seg","len":2},{"k":"corner","turn":1.5707963267948966}]})";
    CHECK_FALSE(validate(read_figure_raw(wobbly), t).ok());
    const auto c = read_figure(wobbly, t);
    CHECK(validate(c, t).ok());
    CHECK(area(c) == doctest::Approx(4.0).epsilon(1e-6));
  }
  SUBCASE("grossly open chains are rejected, not repaired") {
    const std::string open_chain = R"({"format":"cpfig/1","start":[0,0],"heading":0,
      "elements":[{"k":"seg","len":3},{"k":"corner","turn":1.5707963267948966},
                  {"k":"seg","len":2},{"k":"corner","turn":1.5707963267948966},
                  {"k":"seg","len":2},{"k":"corner","turn":1.5707963267948966},
                  {"k":"seg","len":2},{"k":"corner","turn":1.5707963267948966}]})";
    CHECK_THROWS_AS((void)read_figure(open_chain, t), Error);
  }
  SUBCASE("unknown format is rejected") {
    CHECK_THROWS_AS((void)read_figure("{\"format\":\"x\"}", t), Error);
  }
}

TEST_CASE("dissection round trip preserves the verdict") {
  const Tolerance t;
  const auto d = dissect(make_square(2.0), make_rect(1.0, 4.0), t);
  const std::string text = write_dissection(d);
  const auto back = read_dissection(text, t);
  CHECK(back.pieces.size() == d.pieces.size());
  const auto rep1 = verify(d, 30000, 5, t);
  const auto rep2 = verify(back, 30000, 5, t);
  CHECK(rep1.pass);
  CHECK(rep2.pass);
  CHECK(rep1.coverage_defect == doctest::Approx(rep2.coverage_defect));
  // byte-identical re-serialization
  CHECK(write_dissection(back) == text);
}

TEST_CASE("figure svg is deterministic and well formed") {
  const auto svg1 = render_figure_svg(make_lens(1.0, kPi));
  const auto svg2 = render_figure_svg(make_lens(1.0, kPi));
  CHECK(svg1 == svg2);
  CHECK(svg1.find("<svg") == 0);
  // two arc commands and two corner markers
  std::size_t arcs = 0, markers = 0, pos = 0;
  while ((pos = svg1.find(" A ", pos)) != std::string::npos) { ++arcs; pos += 3; }
  pos = 0;
  while ((pos = svg1.find("<circle", pos)) != std::string::npos) { ++markers; pos += 7; }
  CHECK(arcs >= 2);
  CHECK(markers == 2);
}

TEST_CASE("dissection svg keeps piece colors consistent across panels") {
  const Tolerance t;
  const auto d = dissect(make_square(2.0), make_rect(1.0, 4.0), t);
  const auto svg = render_dissection_svg(d);
  CHECK(svg.find("<svg") == 0);
  // each piece color appears exactly twice (source and target panels)
  std::size_t count = 0, pos = 0;
  while ((pos = svg.find("#4e79a7", pos)) != std::string::npos) { ++count; pos += 7; }
  CHECK(count >= 2);
  CHECK(count % 2 == 0);
  CHECK(render_dissection_svg(d) == svg);
}

TEST_CASE("dissection svg regression against the stored rendering") {
  const Tolerance t;
  const auto d = dissect(make_square(2.0), make_rect(1.0, 4.0), t);
  const auto svg = render_dissection_svg(d);
  std::ifstream in(std::string(CPOLY_GOLDEN_DIR) + "/square_rect.svg",
                   std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  CHECK(svg == os.str());
}
