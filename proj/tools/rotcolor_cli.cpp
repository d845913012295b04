// rotcolor: enumeration tables, classification, verification suites and
// SVG renders for trochoid colorings of torus-knot diagrams.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rotcolor/commands.hpp"
#include "rotcolor/errors.hpp"

namespace {

using namespace rotcolor;

struct SpecFlags {
  int k = 1;
  int l = 1;
  std::string anchor = "0";
  std::string direction = "0";
  std::string chirality = "plus";
  std::string side = "1";

  void add(CLI::App* app, const std::string& suffix) {
    app->add_option("--k" + suffix, k, "polygon step of P0, 1 <= k <= |p|-1");
    app->add_option("--l" + suffix, l, "polygon step of Q, 1 <= l <= |q|-1");
    app->add_option("--anchor" + suffix, anchor, "anchor vertex: x | x,y | cycN:c0,c1,...");
    app->add_option("--direction" + suffix, direction, "first edge direction as a turn n/d");
    app->add_option("--chirality" + suffix, chirality, "plus or minus");
    app->add_option("--side" + suffix, side, "positive rational side length");
  }

  TrochoidSpec build(int p, int q) const {
    Rational s(side);
    s.canonicalize();
    TrochoidSpec spec{p, q, k, l, parse_point(anchor), RationalTurn::parse(direction), s, parse_chirality(chirality)};
    spec.validate();
    return spec;
  }
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw InvalidArgument("cannot write '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rot E2 quandle colorings of torus-knot diagrams via trochoids"};
  app.require_subcommand(1);

  int p = 3;
  int q = 2;
  std::string out_path;
  std::string format = "json";
  SpecFlags spec_a;
  SpecFlags spec_b;

  auto* enumerate = app.add_subcommand("enumerate", "table of (k,l) rows with theta, alpha and weights");
  enumerate->add_option("--p", p)->required();
  enumerate->add_option("--q", q)->required();
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_option("--out", out_path);

  auto* classify_cmd = app.add_subcommand("classify", "decide R-equivalence of two trochoid colorings");
  classify_cmd->add_option("--p", p)->required();
  classify_cmd->add_option("--q", q)->required();
  spec_a.add(classify_cmd, "");
  spec_b.add(classify_cmd, "2");
  classify_cmd->add_option("--out", out_path);

  std::string suite;
  VerifyOptions vopts;
  bool have_spec = false;
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite, "axioms | cocycle | weights | appendix | orbit")->required();
  verify->add_option("--level", vopts.level, "cyclotomic level for appendix");
  verify->add_option("--bound", vopts.bound, "coefficient bound for appendix");
  verify->add_option("--grid", vopts.grid, "small or full");
  verify->add_option("--depth", vopts.depth, "move depth for orbit");
  verify->add_option("--threads", vopts.threads);
  verify->add_option("--seed", vopts.seed);
  verify->add_option("--p", p);
  verify->add_option("--q", q);
  verify->add_flag("--with-spec", have_spec, "use --p/--q/--k/... as the orbit start");
  spec_a.add(verify, "");

  RenderConfig rcfg;
  auto* render = app.add_subcommand("render", "SVG of the trochoid diagram");
  render->add_option("--p", p)->required();
  render->add_option("--q", q)->required();
  spec_a.add(render, "");
  render->add_option("--out", out_path);
  render->add_option("--width", rcfg.width);
  render->add_option("--height", rcfg.height);
  render->add_option("--format", format)->check(CLI::IsMember({"svg"}));

  OrbitOptions oopts;
  auto* orbit = app.add_subcommand("orbit", "breadth-first orbit under shift and switch");
  orbit->add_option("--p", p)->required();
  orbit->add_option("--q", q)->required();
  spec_a.add(orbit, "");
  orbit->add_option("--depth", oopts.max_moves);
  orbit->add_option("--threads", oopts.threads);
  orbit->add_option("--max-states", oopts.max_states);
  orbit->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) {
      write_output(cmd_enumerate(p, q, format), out_path);
    } else if (*classify_cmd) {
      const auto outcome = cmd_classify(spec_a.build(p, q), spec_b.build(p, q));
      write_output(outcome.json.dump(2) + "\n", out_path);
      return outcome.exit_code;
    } else if (*verify) {
      if (have_spec) vopts.spec = spec_a.build(p, q);
      const auto report = cmd_verify(suite, vopts);
      std::cout << report.text;
      return report.pass ? 0 : 1;
    } else if (*render) {
      write_output(cmd_render(spec_a.build(p, q), rcfg), out_path);
    } else if (*orbit) {
      write_output(cmd_orbit(spec_a.build(p, q), oopts), out_path);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " (frontier " << e.frontier() << ")\n";
    return 3;
  } catch (const LevelError& e) {
    std::cerr << "level error: " << e.what() << " (required level " << e.required_level() << ")\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
