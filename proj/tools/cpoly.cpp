// cpoly: circular-polygon scissors congruence toolkit.
//
// Subcommands mirror the library: figure queries (validate, area,
// signature, profile, is-oval, unique, diameter), the decision and the
// constructive dissection (equidecomposable, dissect, verify), surgeries
// (offset, inner, excise, hinge, double, balance, round-corners), seeded
// generators, SVG rendering, and the acceptance property suite.
//
// Exit codes: 0 success / true verdict, 1 false verdict, 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <sstream>
#include <iostream>
#include <json.hpp>

#include "cpoly/dissect.hpp"
#include "cpoly/io.hpp"
#include "cpoly/oval.hpp"
#include "cpoly/shapes.hpp"
#include "cpoly/suite.hpp"
#include "cpoly/svg.hpp"
#include "cpoly/transform.hpp"

using json = nlohmann::ordered_json;
using namespace cpoly;

namespace {

struct Global {
  Tolerance tol;
  std::uint64_t seed = 0;
  std::size_t samples = 100000;
};

json sig_json(const ArcSignature& s) {
  json j;
  j["corners"] = s.corners;
  json arcs = json::array();
  for (const auto& b : s.buckets) arcs.push_back({{"r", b.radius}, {"sweep", b.sweep}});
  j["arcs"] = arcs;
  j["segTotal"] = s.seg_total;
  return j;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int run_cli(int argc, char** argv) {
  CLI::App app{"scissors congruence for convex circular polygons"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--tol-len", g.tol.eps_len, "length tolerance");
  app.add_option("--tol-ang", g.tol.eps_ang, "angle tolerance");
  app.add_option("--tol-area", g.tol.eps_area, "area tolerance");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--samples", g.samples, "verification sample count");

  int exit_code = 0;

  // ---- figure queries ----
  std::string in1, in2, out1, out2;

  auto* validate_cmd = app.add_subcommand("validate", "check figure invariants");
  validate_cmd->add_option("figure", in1)->required();
  validate_cmd->callback([&] {
    ConvexChain c;
    try {
      std::ifstream in(in1, std::ios::binary);
      if (!in) throw Error(ErrorCode::bad_input, "cannot open " + in1);
      std::ostringstream os;
      os << in.rdbuf();
      c = read_figure_raw(os.str());
    } catch (const Error& e) {
      emit({{"valid", false}, {"error", e.what()}});
      exit_code = 1;
      return;
    }
    const auto rep = validate(c, g.tol);
    json v = json::array();
    for (const auto& viol : rep.violations)
      v.push_back({{"what", viol.what}, {"residual", viol.residual}});
    emit({{"valid", rep.ok()}, {"violations", v}});
    exit_code = rep.ok() ? 0 : 1;
  });

  auto* area_cmd = app.add_subcommand("area", "figure area");
  area_cmd->add_option("figure", in1)->required();
  area_cmd->callback([&] {
    const auto c = load_figure_file(in1, g.tol);
    emit({{"area", area(c)},
          {"perimeter", perimeter(c)},
          {"diameter", diameter(c)},
          {"width", width(c)}});
  });

  auto* sig_cmd = app.add_subcommand("signature", "per-radius boundary totals");
  sig_cmd->add_option("figure", in1)->required();
  sig_cmd->callback([&] {
    emit(sig_json(signature(load_figure_file(in1, g.tol), g.tol)));
  });

  auto* prof_cmd = app.add_subcommand("profile", "boundary profile step map");
  prof_cmd->add_option("figure", in1)->required();
  prof_cmd->callback([&] {
    const auto p = profile(load_figure_file(in1, g.tol), g.tol);
    json steps = json::array();
    double acc = p.corners;
    for (const auto& s : p.steps) {
      acc += s.sweep;
      steps.push_back({{"r", s.radius}, {"rho", acc}});
    }
    emit({{"corners", p.corners}, {"steps", steps}, {"limit", p.limit()}});
  });

  auto* isoval_cmd = app.add_subcommand("is-oval", "oval recognition");
  isoval_cmd->add_option("figure", in1)->required();
  isoval_cmd->callback([&] {
    const bool v = is_oval(load_figure_file(in1, g.tol), g.tol);
    emit({{"is_oval", v}});
    exit_code = v ? 0 : 1;
  });

  auto* unique_cmd = app.add_subcommand("unique", "unique composition test");
  unique_cmd->add_option("figure", in1)->required();
  unique_cmd->callback([&] {
    const bool v = uniquely_composed(load_figure_file(in1, g.tol), g.tol);
    emit({{"uniquely_composed", v}});
    exit_code = v ? 0 : 1;
  });

  auto* ovalof_cmd =
      app.add_subcommand("oval-of", "canonical oval of the figure's class");
  ovalof_cmd->add_option("figure", in1)->required();
  ovalof_cmd->add_option("-o,--output", out1)->required();
  ovalof_cmd->callback([&] {
    const auto c = load_figure_file(in1, g.tol);
    const auto v = oval_from_profile(signature(c, g.tol), g.tol);
    save_figure_file(out1, v.chain);
    emit({{"written", out1},
          {"area", area(v.chain)},
          {"axisA", 2 * v.axis_a_half},
          {"axisB", 2 * v.axis_b_half}});
  });

  auto* eq_cmd = app.add_subcommand("equidecomposable", "the decision");
  eq_cmd->add_option("figure_a", in1)->required();
  eq_cmd->add_option("figure_b", in2)->required();
  eq_cmd->callback([&] {
    const auto f = load_figure_file(in1, g.tol);
    const auto h = load_figure_file(in2, g.tol);
    const bool v = equidecomposable(f, h, g.tol);
    emit({{"equidecomposable", v},
          {"area_a", area(f)},
          {"area_b", area(h)},
          {"boundaries_stably_equidecomposable",
           boundary_stably_equidecomposable(f, h, g.tol)}});
    exit_code = v ? 0 : 1;
  });

  auto* dis_cmd = app.add_subcommand("dissect", "construct a certificate");
  dis_cmd->add_option("figure_a", in1)->required();
  dis_cmd->add_option("figure_b", in2)->required();
  dis_cmd->add_option("-o,--output", out1)->required();
  dis_cmd->callback([&] {
    const auto f = load_figure_file(in1, g.tol);
    const auto h = load_figure_file(in2, g.tol);
    const auto d = dissect(f, h, g.tol);
    save_dissection_file(out1, d);
    emit({{"written", out1}, {"pieces", d.pieces.size()}});
  });

  auto* ver_cmd = app.add_subcommand("verify", "check a certificate");
  ver_cmd->add_option("dissection", in1)->required();
  ver_cmd->callback([&] {
    const auto d = load_dissection_file(in1, g.tol);
    const auto rep = verify(d, g.samples, g.seed, g.tol);
    emit({{"pass", rep.pass},
          {"pieces", rep.piece_count},
          {"coverage_defect", rep.coverage_defect},
          {"escape_defect", rep.escape_defect},
          {"max_overlap_depth", rep.max_overlap_depth},
          {"src_area_residual", rep.src_area_residual},
          {"tgt_area_residual", rep.tgt_area_residual},
          {"samples_used", rep.samples_used},
          {"declared_bound", rep.declared_bound},
          {"detail", rep.detail}});
    exit_code = rep.pass ? 0 : 1;
  });

  // ---- offsets ----
  double radius = 1.0;
  auto* off_cmd = app.add_subcommand("offset", "r-neighborhood");
  off_cmd->add_option("figure", in1)->required();
  off_cmd->add_option("radius", radius)->required();
  off_cmd->add_option("-o,--output", out1)->required();
  off_cmd->callback([&] {
    const auto c = r_offset(load_figure_file(in1, g.tol), radius, g.tol);
    save_figure_file(out1, c);
    emit({{"written", out1}, {"area", area(c)}});
  });

  auto* inner_cmd = app.add_subcommand("inner", "inverse offset");
  inner_cmd->add_option("figure", in1)->required();
  inner_cmd->add_option("radius", radius)->required();
  inner_cmd->add_option("-o,--output", out1)->required();
  inner_cmd->callback([&] {
    const auto c = inner_polygon(load_figure_file(in1, g.tol), radius, g.tol);
    save_figure_file(out1, c);
    emit({{"written", out1}, {"area", area(c)}});
  });

  // ---- surgeries ----
  auto surgery_json = [](const SurgeryResult& res) {
    json chords = json::array();
    for (const auto& [a, b] : res.cut_chords)
      chords.push_back({{"a", {a.x, a.y}}, {"b", {b.x, b.y}}});
    return json{{"area_delta", res.area_delta},
                {"signature_delta", res.signature_delta.describe()},
                {"cut_chords", chords},
                {"notes", res.notes}};
  };

  int pair_index = 0;
  auto* exc_cmd = app.add_subcommand("excise", "parallelogram excision");
  exc_cmd->add_option("figure", in1)->required();
  exc_cmd->add_option("-o,--output", out1)->required();
  exc_cmd->add_option("--pair", pair_index, "segment pair index");
  exc_cmd->callback([&] {
    const auto c = load_figure_file(in1, g.tol);
    const auto pairs = segment_pairs(c, g.tol);
    if (pairs.empty())
      throw Error(ErrorCode::not_a_pair, "no symmetric segment pair");
    const auto res = excise_parallelogram(
        c, pairs[std::size_t(pair_index) % pairs.size()], g.tol);
    save_figure_file(out1, res.figure);
    json j = surgery_json(res);
    j["written"] = out1;
    emit(j);
  });

  std::vector<int> hinge_pairs{0, 1};
  auto* hin_cmd = app.add_subcommand("hinge", "four-hinge shift");
  hin_cmd->add_option("figure", in1)->required();
  hin_cmd->add_option("-o,--output", out1)->required();
  hin_cmd->add_option("--pairs", hinge_pairs, "two corner pair indices")
      ->expected(2);
  hin_cmd->callback([&] {
    const auto c = load_figure_file(in1, g.tol);
    const auto cps = corner_pairs(c, g.tol);
    if (cps.size() < 2)
      throw Error(ErrorCode::not_corners, "need two corner pairs");
    const auto res = hinge_shift(
        c,
        {cps[std::size_t(hinge_pairs[0]) % cps.size()],
         cps[std::size_t(hinge_pairs[1]) % cps.size()]},
        g.tol);
    save_figure_file(out1, res.figure);
    json j = surgery_json(res);
    j["written"] = out1;
    emit(j);
  });

  auto* bal_cmd = app.add_subcommand("balance", "balanced antipodal points");
  bal_cmd->add_option("figure", in1)->required();
  bal_cmd->callback([&] {
    const auto c = load_figure_file(in1, g.tol);
    const auto res = balance_points(c, g.tol);
    emit({{"A", {res.a.point.x, res.a.point.y}},
          {"B", {res.b.point.x, res.b.point.y}},
          {"alpha", res.alpha},
          {"beta", res.beta},
          {"support_normal", res.support_normal}});
  });

  auto* dbl_cmd = app.add_subcommand("double", "double both halves");
  dbl_cmd->add_option("figure", in1)->required();
  dbl_cmd->add_option("--minus", out1, "output for the doubled a->b half")
      ->required();
  dbl_cmd->add_option("--plus", out2, "output for the doubled b->a half")
      ->required();
  dbl_cmd->callback([&] {
    const auto c = load_figure_file(in1, g.tol);
    const auto bal = balance_points(c, g.tol);
    const auto [fm, fp] = double_figure(c, bal.a, bal.b, g.tol);
    save_figure_file(out1, fm);
    save_figure_file(out2, fp);
    emit({{"written", {out1, out2}},
          {"area_sum", area(fm) + area(fp)},
          {"area_source", area(c)}});
  });

  auto* rnd_cmd = app.add_subcommand("round-corners", "corner fillets");
  rnd_cmd->add_option("figure", in1)->required();
  rnd_cmd->add_option("-o,--output", out1)->required();
  rnd_cmd->callback([&] {
    const auto res = round_corners(load_figure_file(in1, g.tol), g.tol);
    save_figure_file(out1, res.figure);
    json j = surgery_json(res);
    j["written"] = out1;
    emit(j);
  });

  // ---- generators ----
  std::string cls = "lens";
  double omega = kPi, gen_radius = 1.0, segs = 0.0;
  auto* gen_cmd = app.add_subcommand("generate", "seeded random figures");
  gen_cmd->add_option("-o,--output", out1)->required();
  gen_cmd->add_option("--class", cls,
                      "circle|lens|polygon|three-radius|sym-lens|sym-polygon");
  gen_cmd->add_option("--omega", omega, "lens arc measure");
  gen_cmd->add_option("--radius", gen_radius, "lens radius");
  gen_cmd->add_option("--segments", segs, "segment content for sym classes");
  gen_cmd->callback([&] {
    ConvexChain c;
    if (cls == "circle") {
      c = make_circle(gen_radius);
    } else if (cls == "lens") {
      c = make_lens(gen_radius, omega);
    } else if (cls == "polygon") {
      c = random_convex_polygon(g.seed, 5, -1.0);
    } else if (cls == "sym-lens") {
      ArcSignature s;
      s.corners = kTwoPi - omega;
      s.buckets = {{gen_radius, omega}};
      s.seg_total = segs;
      c = random_centrally_symmetric(s, g.seed, g.tol);
    } else if (cls == "three-radius") {
      ArcSignature s;
      s.corners = 1.0;
      s.buckets = {{0.6, 1.2}, {1.3, 1.8}, {2.2, kTwoPi - 4.0}};
      s.seg_total = segs;
      c = random_centrally_symmetric(s, g.seed, g.tol);
    } else if (cls == "sym-polygon") {
      ArcSignature s;
      s.corners = kTwoPi;
      s.seg_total = segs > 0 ? segs : 8.0;
      c = random_centrally_symmetric(s, g.seed, g.tol);
    } else {
      throw Error(ErrorCode::bad_input, "unknown class '" + cls + "'");
    }
    save_figure_file(out1, c);
    emit({{"written", out1}, {"area", area(c)}});
  });

  // ---- rendering ----
  auto* rendraw_cmd = app.add_subcommand("render", "SVG output");
  rendraw_cmd->add_option("input", in1, "cpfig or cpdis file")->required();
  rendraw_cmd->add_option("-o,--output", out1)->required();
  rendraw_cmd->callback([&] {
    std::string svg;
    try {
      svg = render_figure_svg(load_figure_file(in1, g.tol));
    } catch (const Error&) {
      svg = render_dissection_svg(load_dissection_file(in1, g.tol));
    }
    std::ofstream out(out1, std::ios::binary);
    if (!out) throw Error(ErrorCode::bad_input, "cannot write " + out1);
    out << svg;
    emit({{"written", out1}, {"bytes", svg.size()}});
  });

  // ---- the acceptance suite ----
  double count_scale = 1.0;
  auto* suite_cmd = app.add_subcommand("suite", "acceptance property suite");
  suite_cmd->add_option("--count", count_scale, "case count scale factor");
  suite_cmd->callback([&] {
    SuiteOptions so;
    so.seed = g.seed;
    so.count_scale = count_scale;
    so.verify_samples = g.samples;
    bool all = true;
    run_acceptance_suite(so, [&](const CheckResult& r) {
      json j = {{"check", r.name},
                {"pass", r.pass},
                {"seconds", r.seconds},
                {"detail", r.detail}};
      if (!r.log.empty()) j["log"] = r.log;
      emit(j);
      all = all && r.pass;
    });
    exit_code = all ? 0 : 1;
  });

  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const Error& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
