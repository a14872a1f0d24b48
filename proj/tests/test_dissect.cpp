#include <doctest.h>

#include "cpoly/dissect.hpp"
#include "cpoly/shapes.hpp"
#include "cpoly/transform.hpp"

using namespace cpoly;

namespace {
Piece polygon_piece(const std::vector<Point>& v) {
  return {"x", polygon_path(v)};
}
}  // namespace

TEST_CASE("chord_arcs splits a circle into square plus four lumps") {
  const Tolerance t;
  const auto c = make_circle(1.0);
  const auto ch = chord_arcs(c, uniform_refinement(c), t);
  CHECK(ch.lumps.size() == 4);
  double lump_area = 0.0;
  for (const auto& l : ch.lumps) lump_area += path_area(l.path);
  CHECK(path_area(ch.polygon.path) + lump_area ==
        doctest::Approx(kPi).epsilon(1e-12));
  CHECK(path_area(ch.polygon.path) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("chord_arcs on a square is the square") {
  const auto sq = make_square(2.0);
  const auto ch = chord_arcs(sq, uniform_refinement(sq));
  CHECK(ch.lumps.empty());
  CHECK(path_area(ch.polygon.path) == doctest::Approx(4.0));
}

TEST_CASE("chord_arcs area bookkeeping on a lens refinement") {
  const Tolerance t;
  const auto l = make_lens(1.0, kPi);
  const auto ref = uniform_refinement(l, kPi / 4);
  const auto ch = chord_arcs(l, ref, t);
  CHECK(ch.lumps.size() == 4);
  double s = path_area(ch.polygon.path);
  for (const auto& lump : ch.lumps) s += path_area(lump.path);
  CHECK(s == doctest::Approx(area(l)).epsilon(1e-12));
}

TEST_CASE("sweep cap enforced") {
  const auto c = make_circle(1.0);
  ArcRefinement bad;
  bad[0] = {kPi, kPi};
  CHECK_THROWS_AS((void)chord_arcs(c, bad), Error);
}

TEST_CASE("triangle to rectangle") {
  const Tolerance t;
  SUBCASE("3-4-5 right triangle") {
    const auto d =
        triangle_to_rectangle(polygon_piece({{0, 0}, {4, 0}, {0, 3}}), t);
    CHECK(area(d.target) == doctest::Approx(6.0).epsilon(1e-12));
    const auto rep = verify(d, 20000, 1, t);
    INFO(rep.detail);
    CHECK(rep.pass);
  }
  SUBCASE("equilateral side 2") {
    const auto d = triangle_to_rectangle(
        polygon_piece({{0, 0}, {2, 0}, {1, std::sqrt(3.0)}}), t);
    CHECK(area(d.target) ==
          doctest::Approx(2.0 * std::sqrt(3.0) / 2.0).epsilon(1e-12));
    const auto rep = verify(d, 20000, 2, t);
    INFO(rep.detail);
    CHECK(rep.pass);
  }
  SUBCASE("sliver is rejected") {
    CHECK_THROWS_AS((void)triangle_to_rectangle(
                        polygon_piece({{0, 0}, {4, 0}, {2, 1e-9}}), t),
                    Error);
  }
}

TEST_CASE("rectangle to width") {
  const Tolerance t;
  SUBCASE("identity") {
    const auto d = rectangle_to_width(
        polygon_piece({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 1.0, t);
    CHECK(d.pieces.size() == 1);
    CHECK(verify(d, 5000, 3, t).pass);
  }
  SUBCASE("1x6 to 2x3") {
    const auto d = rectangle_to_width(
        polygon_piece({{0, 0}, {1, 0}, {1, 6}, {0, 6}}), 2.0, t);
    const auto rep = verify(d, 30000, 4, t);
    INFO(rep.detail, " pieces=", rep.piece_count);
    CHECK(rep.pass);
    CHECK(area(d.target) == doctest::Approx(6.0).epsilon(1e-9));
  }
  SUBCASE("1x10 to width 3") {
    const auto d = rectangle_to_width(
        polygon_piece({{0, 0}, {10, 0}, {10, 1}, {0, 1}}), 3.0, t);
    const auto rep = verify(d, 30000, 5, t);
    INFO(rep.detail, " pieces=", rep.piece_count);
    CHECK(rep.pass);
    CHECK(rep.piece_count < 40);
  }
  SUBCASE("rotated source rectangle") {
    // rectangle rotated by 0.7 rad in the plane
    const Isometry m = make_rotation(0.7, {0.3, 0.2});
    std::vector<Point> v = {{0, 0}, {3, 0}, {3, 2}, {0, 2}};
    for (auto& p : v) p = m(p);
    const auto d = rectangle_to_width(polygon_piece(v), 1.5, t);
    const auto rep = verify(d, 30000, 6, t);
    INFO(rep.detail);
    CHECK(rep.pass);
  }
}

TEST_CASE("polygons_dissect") {
  const Tolerance t;
  SUBCASE("square to rectangle") {
    const auto d = polygons_dissect(
        polygon_piece({{0, 0}, {2, 0}, {2, 2}, {0, 2}}),
        polygon_piece({{0, 0}, {1, 0}, {1, 4}, {0, 4}}), t);
    const auto rep = verify(d, 50000, 7, t);
    INFO(rep.detail, " pieces=", rep.piece_count);
    CHECK(rep.pass);
  }
  SUBCASE("square to itself short-circuits") {
    const auto d = polygons_dissect(
        polygon_piece({{0, 0}, {2, 0}, {2, 2}, {0, 2}}),
        polygon_piece({{1, 1}, {3, 1}, {3, 3}, {1, 3}}), t);
    CHECK(d.pieces.size() == 1);
    CHECK(verify(d, 5000, 8, t).pass);
  }
  SUBCASE("square to right triangle") {
    const auto d = polygons_dissect(
        polygon_piece({{0, 0}, {2, 0}, {2, 2}, {0, 2}}),
        polygon_piece({{0, 0}, {4, 0}, {0, 2}}), t);
    const auto rep = verify(d, 50000, 9, t);
    INFO(rep.detail, " pieces=", rep.piece_count);
    CHECK(rep.pass);
  }
  SUBCASE("area mismatch rejected") {
    CHECK_THROWS_AS(
        (void)polygons_dissect(polygon_piece({{0, 0}, {2, 0}, {2, 2}, {0, 2}}),
                               polygon_piece({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
                               t),
        Error);
  }
}

TEST_CASE("compose") {
  const Tolerance t;
  const auto d1 = rectangle_to_width(
      polygon_piece({{0, 0}, {4, 0}, {4, 1}, {0, 1}}), 2.0, t);
  const auto d2 = rectangle_to_width(
      {"r", chain_to_path(d1.target)}, 1.0, t);
  SUBCASE("chained certificates verify") {
    const auto d = compose(d1, d2, t);
    CHECK(verify(d, 30000, 10, t).pass);
    CHECK(d.pieces.size() <= d1.pieces.size() * d2.pieces.size());
  }
  SUBCASE("identity composes to the same certificate") {
    Dissection idd;
    idd.source = d1.source;
    idd.target = d1.source;
    idd.pieces.push_back({"p0", chain_to_path(d1.source)});
    idd.src_pose.push_back(identity_isometry());
    idd.tgt_pose.push_back(identity_isometry());
    const auto d = compose(idd, d1, t);
    CHECK(d.pieces.size() == d1.pieces.size());
    CHECK(verify(d, 20000, 11, t).pass);
  }
  SUBCASE("mismatched middles are rejected") {
    const auto other = rectangle_to_width(
        polygon_piece({{0, 0}, {5, 0}, {5, 1}, {0, 1}}), 2.5, t);
    CHECK_THROWS_AS((void)compose(d1, other, t), Error);
  }
  SUBCASE("associativity at the certificate level") {
    const auto d3 = rectangle_to_width({"r", chain_to_path(d2.target)}, 3.0, t);
    const auto left = compose(compose(d1, d2, t), d3, t);
    const auto right = compose(d1, compose(d2, d3, t), t);
    CHECK(verify(left, 30000, 12, t).pass);
    CHECK(verify(right, 30000, 12, t).pass);
  }
}

TEST_CASE("dissect end to end") {
  const Tolerance t;
  SUBCASE("square to rectangle") {
    const auto d = dissect(make_square(2.0), make_rect(1.0, 4.0), t);
    const auto rep = verify(d, 100000, 13, t);
    INFO(rep.detail, " pieces=", rep.piece_count);
    CHECK(rep.pass);
  }
  SUBCASE("congruence short-circuit") {
    const auto c = make_circle(1.0);
    const auto d = dissect(c, transformed(c, make_rotation(1.0)), t);
    CHECK(d.pieces.size() == 1);
    const auto rep = verify(d, 20000, 14, t);
    INFO(rep.detail);
    CHECK(rep.pass);
  }
  SUBCASE("not equidecomposable errors carry the clause") {
    try {
      (void)dissect(make_circle(1.0), make_square(std::sqrt(kPi)), t);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code == ErrorCode::not_equidecomposable);
      CHECK(std::string(e.what()).find("signatures") != std::string::npos);
    }
  }
  SUBCASE("lens-class generated pair") {
    ArcSignature sig;
    sig.corners = kTwoPi - kPi;
    sig.buckets = {{1.0, kPi}};
    const auto f = random_centrally_symmetric(sig, 11, t);
    auto g = random_centrally_symmetric(sig, 12, t);
    const double diff = area(f) - area(g);
    if (diff > 0)
      g = insert_segment_pair(g, diff, 5, t);
    else
      g = insert_segment_pair(g, 0.0, 5, t);
    auto f2 = f;
    if (diff < 0) f2 = insert_segment_pair(f, -diff, 5, t);
    REQUIRE(equidecomposable(f2, g, t));
    const auto d = dissect(f2, g, t);
    const auto rep = verify(d, 100000, 15, t);
    INFO(rep.detail, " pieces=", rep.piece_count);
    CHECK(rep.pass);
    CHECK(rep.coverage_defect <= 2e-3);
  }
}

TEST_CASE("verify catches broken certificates") {
  const Tolerance t;
  auto d = dissect(make_square(2.0), make_rect(1.0, 4.0), t);
  SUBCASE("translated piece fails") {
    REQUIRE(d.pieces.size() >= 2);
    d.tgt_pose[0] = compose(make_translation({0.1, 0}), d.tgt_pose[0]);
    const auto rep = verify(d, 50000, 16, t);
    CHECK_FALSE(rep.pass);
    CHECK(rep.coverage_defect > 2e-3);
  }
  SUBCASE("empty dissection fails on area") {
    Dissection empty;
    empty.source = make_square(2.0);
    empty.target = make_square(2.0);
    const auto rep = verify(empty, 1000, 17, t);
    CHECK_FALSE(rep.pass);
    CHECK(rep.src_area_residual == doctest::Approx(4.0));
  }
}

TEST_CASE("dissect stadium onto an area-matched segmented circle figure") {
  const Tolerance t;
  const auto st = make_stadium(1.0, 2.0);
  // same positive-radius content as the circle; add segments to match areas
  const auto g = insert_segment_pair(make_circle(1.0), area(st) - kPi, 3, t);
  REQUIRE(equidecomposable(st, g, t));
  const auto d = dissect(st, g, t);
  const auto rep = verify(d, 100000, 21, t);
  INFO(rep.detail, " pieces=", rep.piece_count);
  CHECK(rep.pass);
  CHECK(rep.coverage_defect <= 2e-3);
}

TEST_CASE("compose rejects partially overlapping curved pieces") {
  const Tolerance t;
  const auto circle = make_circle(1.0);
  auto half_disk_pair = [&](double angle) {
    Dissection d;
    d.source = circle;
    d.target = circle;
    for (int k = 0; k < 2; ++k) {
      const double a0 = angle + k * kPi;
      const Point pa = unit(a0), pb = unit(a0 + kPi);
      EdgePath path;
      path.edges.push_back(ArcEdge{{0, 0}, 1.0, pa, pb, true});
      path.edges.push_back(LineEdge{pb, pa});
      d.pieces.push_back({"h" + std::to_string(k), path});
      d.src_pose.push_back(identity_isometry());
      d.tgt_pose.push_back(identity_isometry());
    }
    return d;
  };
  const auto d1 = half_disk_pair(0.0);
  const auto d2 = half_disk_pair(kPi / 2);  // halves cross at right angles
  CHECK_THROWS_AS((void)compose(d1, d2, t), Error);
  try {
    (void)compose(d1, d2, t);
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::clipping_failure);
  }
}

TEST_CASE("verify reports overlap depth on a doubled piece") {
  const Tolerance t;
  auto d = dissect(make_square(2.0), make_rect(1.0, 4.0), t);
  REQUIRE(d.pieces.size() >= 2);
  // duplicate one piece on the source side: coverage depth reaches 2
  d.pieces.push_back(d.pieces[0]);
  d.src_pose.push_back(d.src_pose[0]);
  d.tgt_pose.push_back(compose(make_translation({50, 50}), d.tgt_pose[0]));
  const auto rep = verify(d, 50000, 22, t);
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_overlap_depth >= 2);
}
