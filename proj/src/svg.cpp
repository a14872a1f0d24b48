#include "cpoly/svg.hpp"

#include <cstdio>
#include <sstream>

namespace cpoly {

namespace {

// world y points up; svg y points down
Point flip(Point p) { return {p.x, -p.y}; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v + 0.0);  // normalize -0
  return buf;
}

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                          "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                          "#9c755f", "#bab0ac"};

void svg_arc_to(std::ostringstream& os, const ArcEdge& a) {
  // split full and large arcs so every A command spans less than pi
  const double sweep = arc_edge_sweep(a);
  const double ta = arg(a.a - a.center);
  const int parts = sweep > kPi ? 2 : 1;
  for (int i = 1; i <= parts; ++i) {
    const double ang = ta + (a.ccw ? 1 : -1) * sweep * i / parts;
    const Point to = flip(a.center + a.radius * unit(ang));
    // world-ccw becomes screen-cw after the y flip
    os << " A " << num(a.radius) << " " << num(a.radius) << " 0 0 "
       << (a.ccw ? 0 : 1) << " " << num(to.x) << " " << num(to.y);
  }
}

std::string path_d(const EdgePath& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : p.edges) {
    if (auto* l = std::get_if<LineEdge>(&e)) {
      const Point a = flip(l->a), b = flip(l->b);
      if (first) { os << "M " << num(a.x) << " " << num(a.y); first = false; }
      os << " L " << num(b.x) << " " << num(b.y);
    } else {
      const auto& a = std::get<ArcEdge>(e);
      const Point s = flip(a.a);
      if (first) { os << "M " << num(s.x) << " " << num(s.y); first = false; }
      svg_arc_to(os, a);
    }
  }
  os << " Z";
  return os.str();
}

struct View {
  double x, y, w, h;
};

View view_of(Box b, double margin) {
  return {b.lo.x - margin, -b.hi.y - margin, b.hi.x - b.lo.x + 2 * margin,
          b.hi.y - b.lo.y + 2 * margin};
}

std::string document(const View& v, const std::string& body) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
     << "viewBox=\"" << num(v.x) << " " << num(v.y) << " " << num(v.w) << " "
     << num(v.h) << "\" width=\"640\">\n"
     << body << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_figure_svg(const ConvexChain& c) {
  require_valid(c);
  const EdgePath path = chain_to_path(c);
  const Box bb = path_bbox(path);
  const double margin = 0.06 * std::max(bb.hi.x - bb.lo.x, bb.hi.y - bb.lo.y);
  std::ostringstream body;
  const double stroke = margin / 3;
  body << " <path d=\"" << path_d(path) << "\" fill=\"#dbe7f5\" stroke=\"#333\""
       << " stroke-width=\"" << num(stroke) << "\"/>\n";
  const auto poses = element_poses(c);
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (!is_corner(c.elements[i])) continue;
    const Point p = flip(poses[i].point);
    body << " <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
         << "\" r=\"" << num(stroke * 2) << "\" fill=\"#e15759\"/>\n";
  }
  return document(view_of(bb, margin), body.str());
}

std::string render_dissection_svg(const Dissection& d) {
  const Box src_bb = path_bbox(chain_to_path(d.source));
  const Box tgt_bb = path_bbox(chain_to_path(d.target));
  const double gap = 0.15 * (src_bb.hi.x - src_bb.lo.x);
  const double shift = src_bb.hi.x - src_bb.lo.x + gap;
  const Isometry panel2 =
      make_translation({src_bb.lo.x + shift - tgt_bb.lo.x, 0});

  Box all = src_bb;
  const Box t2{panel2(tgt_bb.lo), panel2(tgt_bb.hi)};
  all.lo.x = std::min(all.lo.x, t2.lo.x);
  all.lo.y = std::min(all.lo.y, t2.lo.y);
  all.hi.x = std::max(all.hi.x, t2.hi.x);
  all.hi.y = std::max(all.hi.y, t2.hi.y);
  const double margin = 0.05 * std::max(all.hi.x - all.lo.x, all.hi.y - all.lo.y);
  const double stroke = margin / 4;

  std::ostringstream body;
  auto draw = [&](const EdgePath& p, std::size_t i) {
    body << " <path d=\"" << path_d(p) << "\" fill=\""
         << kPalette[i % (sizeof kPalette / sizeof *kPalette)]
         << "\" fill-opacity=\"0.85\" stroke=\"#222\" stroke-width=\""
         << num(stroke) << "\"/>\n";
  };
  body << " <g>\n";
  for (std::size_t i = 0; i < d.pieces.size(); ++i)
    draw(transformed(d.pieces[i].path, d.src_pose[i]), i);
  body << " </g>\n <g>\n";
  for (std::size_t i = 0; i < d.pieces.size(); ++i)
    draw(transformed(d.pieces[i].path, compose(panel2, d.tgt_pose[i])), i);
  body << " </g>\n";
  return document(view_of(all, margin), body.str());
}

}  // namespace cpoly
