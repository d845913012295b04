#include "rotcolor/commands.hpp"

#include <random>
#include <sstream>

#include "rotcolor/errors.hpp"
#include "rotcolor/quandle.hpp"

namespace rotcolor {

namespace {

TrochoidSpec unit_spec(int p, int q, int k, int l) { return TrochoidSpec{p, q, k, l, Point(), RationalTurn(), Rational(1)}; }

}  // namespace

std::string cmd_enumerate(int p, int q, const std::string& format) {
  const TorusDiagram d(p, q);
  if (format != "json" && format != "csv") throw InvalidArgument("enumerate supports json and csv");
  std::ostringstream csv;
  csv << "p,q,k,l,weight_float,weight_exact\n";
  Json rows = Json::array();
  for (int k = 1; k < d.strands(); ++k) {
    for (int l = 1; l < d.blocks(); ++l) {
      const TrochoidSpec s = unit_spec(p, q, k, l);
      const AreaValue w = total_weight(d, derive_coloring(s));
      const long long g = static_cast<long long>(s.p_prime()) * s.q_prime();
      csv << p << ',' << q << ',' << k << ',' << l << ',' << format_float(w.approx()) << ','
          << w.exact().to_string() << '\n';
      rows.push_back(Json{{"k", k},
                          {"l", l},
                          {"theta", theta(d.strands(), k, d.blocks(), l).to_string()},
                          {"p_prime", s.p_prime()},
                          {"q_prime", s.q_prime()},
                          {"alpha", s.alpha()},
                          {"parity", g % 2 == 0 ? "even" : "odd"},
                          {"weight_float", float_json(w.approx())},
                          {"weight_exact", to_json(w.exact())},
                          {"weight_scaled", to_json(w.scaled())}});
    }
  }
  if (format == "csv") return csv.str();
  return Json{{"p", p}, {"q", q}, {"rows", std::move(rows)}}.dump(2) + "\n";
}

ClassifyOutcome cmd_classify(const TrochoidSpec& a, const TrochoidSpec& b) {
  const ClassificationResult r = classify(a, b);
  ClassifyOutcome out;
  out.json = Json{{"spec_a", to_json(a)}, {"spec_b", to_json(b)}};
  const Json verdict = to_json(r);
  for (const auto& [key, value] : verdict.items()) out.json[key] = value;
  out.exit_code = r.verdict == Verdict::Equivalent ? 0 : r.verdict == Verdict::NotEquivalent ? 10 : 20;
  return out;
}

std::string cmd_render(const TrochoidSpec& spec, const RenderConfig& cfg) { return render_trochoid_svg(spec, cfg); }

std::string cmd_orbit(const TrochoidSpec& spec, const OrbitOptions& opts) {
  const auto states = orbit_bfs(spec, opts);
  Json list = Json::array();
  for (const auto& e : states) list.push_back(Json{{"spec", to_json(e.spec)}, {"witness", to_json(e.witness)}});
  Json out{{"start", to_json(spec)}, {"max_moves", opts.max_moves}, {"count", states.size()}, {"states", std::move(list)}};
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// verify

namespace {

class Report {
 public:
  void check(bool ok, const std::string& name, std::size_t cases, const std::string& counterexample = "") {
    os_ << (ok ? "PASS " : "FAIL ") << name << " (" << cases << " cases)";
    if (!ok && !counterexample.empty()) os_ << "\n  counterexample: " << counterexample;
    os_ << '\n';
    pass_ = pass_ && ok;
  }
  void note(const std::string& text) { os_ << "  " << text << '\n'; }
  VerifyReport finish(const std::string& suite) {
    os_ << (pass_ ? "PASS" : "FAIL") << " suite " << suite << '\n';
    return {pass_, os_.str()};
  }

 private:
  std::ostringstream os_;
  bool pass_ = true;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  CycNum cyc(int level, int bound = 3) {
    std::vector<Rational> exps(level);
    for (auto& e : exps) e = pick(-bound, bound);
    return CycNum::from_exponents(level, exps);
  }

  RotElem rot(int level) {
    return RotElem{Point(cyc(level)), RationalTurn(pick(0, level - 1), level)};
  }

 private:
  std::mt19937_64 rng_;
};

constexpr int kRotLevels[] = {3, 4, 6, 8, 12, 24};

std::string show(const RotElem& e) { return "(" + e.center.value.to_string() + ", " + e.angle.to_string() + ")"; }

void axioms(Report& rep, const VerifyOptions& opts) {
  for (int n : {3, 5, 7}) {
    const DihedralQuandle dq(n);
    const auto els = dq.elements();
    bool q1 = true, q2 = true, q3 = true;
    std::string bad;
    for (const auto& x : els) {
      q1 = q1 && q_op(x, x) == x;
      for (const auto& y : els) {
        if (!(q_inv_op(q_op(x, y), y) == x) || !(q_op(q_inv_op(x, y), y) == x)) q2 = false;
        for (const auto& z : els) {
          if (!(q_op(q_op(x, y), z) == q_op(q_op(x, z), q_op(y, z)))) {
            q3 = false;
            bad = std::to_string(x.value) + "," + std::to_string(y.value) + "," + std::to_string(z.value);
          }
        }
      }
    }
    const std::string tag = "dihedral-" + std::to_string(n);
    rep.check(q1, "Q1 " + tag, els.size());
    rep.check(q2, "Q2 " + tag, els.size() * els.size());
    rep.check(q3, "Q3 " + tag, els.size() * els.size() * els.size(), bad);
  }
  Sampler s(opts.seed);
  bool q1 = true, q2 = true, q3 = true, keep = true;
  std::string bad;
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    const int level = kRotLevels[s.pick(0, 5)];
    const RotElem x = s.rot(level), y = s.rot(level), z = s.rot(level);
    q1 = q1 && q_op(x, x) == x;
    q2 = q2 && q_inv_op(q_op(x, y), y) == x && q_op(q_inv_op(x, y), y) == x;
    keep = keep && q_op(x, y).angle == x.angle;
    if (!(q_op(q_op(x, y), z) == q_op(q_op(x, z), q_op(y, z)))) {
      q3 = false;
      bad = show(x) + " " + show(y) + " " + show(z);
    }
  }
  rep.check(q1, "Q1 Rot E2", trials);
  rep.check(q2, "Q2 Rot E2", trials);
  rep.check(q3, "Q3 Rot E2", trials, bad);
  rep.check(keep, "Rot E2 operation keeps the angle of its first argument", trials);
}

void cocycle(Report& rep, const VerifyOptions& opts) {
  Sampler s(opts.seed + 1);
  bool qc1 = true, qc2 = true;
  std::string bad;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const int level = 12;
    const Point o(s.cyc(level));
    const RotElem x = s.rot(level), y = s.rot(level), z = s.rot(level);
    qc2 = qc2 && cocycle_phi(o, x, x).is_zero();
    if (!verify_qc1(o, x, y, z).is_zero()) {
      qc1 = false;
      bad = "o=" + o.value.to_string() + " " + show(x) + " " + show(y) + " " + show(z);
    }
  }
  rep.check(qc2, "QC2 Phi_o(x, x) = 0", trials);
  rep.check(qc1, "QC1 cocycle relation", trials, bad);
}

void weights(Report& rep, const VerifyOptions& opts) {
  std::vector<std::pair<int, int>> grid{{2, 3}, {3, 2}, {2, 5}, {5, 2}, {3, 4}, {4, 3}};
  if (opts.grid == "full") {
    grid.emplace_back(3, 5);
    grid.emplace_back(4, 5);
  } else if (opts.grid != "small") {
    throw InvalidArgument("grid must be small or full");
  }
  Sampler s(opts.seed + 2);
  std::size_t cells = 0;
  bool closed = true, nonzero = true, o_free = true;
  std::string bad;
  for (auto [p, q] : grid) {
    const TorusDiagram d(p, q);
    for (int k = 1; k < d.strands(); ++k) {
      for (int l = 1; l < d.blocks(); ++l) {
        ++cells;
        const TrochoidSpec spec = unit_spec(p, q, k, l);
        const auto c = derive_coloring(spec);
        const AreaValue w = total_weight(d, c);
        const std::string cell = "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(k) +
                                 "," + std::to_string(l) + ")";
        if (!(w == closed_form_weight(p, q, k, l, spec.base_polygon(), spec.start_polygon()))) {
          closed = false;
          bad = cell;
        }
        nonzero = nonzero && !w.is_zero();
        for (int r = 0; r < 3; ++r) o_free = o_free && total_weight(d, c, Point(s.cyc(12))) == w;
      }
    }
  }
  rep.check(closed, "direct weight equals closed form", cells, bad);
  rep.check(nonzero, "weight of non-trivial trochoid coloring is nonzero", cells);
  rep.check(o_free, "weight independent of o", cells * 3);
}

void appendix(Report& rep, const VerifyOptions& opts) {
  const auto units = enumerate_unit_elements(opts.level, opts.bound);
  const long long n = opts.level;
  const long long bound_order = n % 2 == 0 ? n : 2 * n;
  bool roots = true;
  std::string bad;
  for (const auto& u : units) {
    const auto order = is_root_of_unity(u);
    if (!order || bound_order % *order != 0) {
      roots = false;
      bad = u.to_string();
    }
  }
  rep.note("level " + std::to_string(n) + ", bound " + std::to_string(opts.bound) + ": " +
           std::to_string(units.size()) + " elements of absolute value 1 (exhaustive within budget)");
  rep.check(roots, "every unit-modulus cyclotomic integer is a root of unity", units.size(), bad);
  rep.check(static_cast<long long>(units.size()) == bound_order, "count equals " + std::to_string(bound_order),
            1, std::to_string(units.size()) + " found");
}

void orbit(Report& rep, const VerifyOptions& opts) {
  const TrochoidSpec spec = opts.spec.value_or(unit_spec(3, 2, 1, 1));
  OrbitOptions o;
  o.max_moves = opts.depth;
  o.threads = opts.threads;
  const auto states = orbit_bfs(spec, o);
  const LatticeSpec lat = lattice_of(spec);
  const long long two_alpha = 2 * lat.alpha;
  const TorusDiagram d(spec.p, spec.q);
  const AreaValue w0 = total_weight(d, derive_coloring(spec));
  bool in_lattice = true, in_v = true, same_weight = true, replays = true;
  std::string bad;
  for (const auto& e : states) {
    if (!lattice_contains(lat, e.spec.anchor)) {
      in_lattice = false;
      bad = to_json(e.spec).dump();
    }
    const RationalTurn delta = e.spec.direction - lat.base_direction;
    in_v = in_v && two_alpha % delta.den() == 0;
    const auto c = derive_coloring(e.spec);
    same_weight = same_weight && total_weight(d, c) == w0;
    replays = replays && replay(e.witness, derive_coloring(spec)) == c;
  }
  rep.note(std::to_string(states.size()) + " states on D(" + std::to_string(spec.p) + "," + std::to_string(spec.q) +
           ") within " + std::to_string(opts.depth) + " moves");
  rep.check(in_lattice, "every reached anchor lies in W1", states.size(), bad);
  rep.check(in_v, "every reached edge direction lies in V", states.size());
  rep.check(same_weight, "every reached coloring has the start weight", states.size());
  rep.check(replays, "every witness replays at the coloring level", states.size());
}

}  // namespace

VerifyReport cmd_verify(const std::string& suite, const VerifyOptions& opts) {
  Report rep;
  if (suite == "axioms") {
    axioms(rep, opts);
    cocycle(rep, opts);
  } else if (suite == "cocycle") {
    cocycle(rep, opts);
  } else if (suite == "weights") {
    weights(rep, opts);
  } else if (suite == "appendix") {
    appendix(rep, opts);
  } else if (suite == "orbit") {
    orbit(rep, opts);
  } else {
    throw InvalidArgument("unknown suite '" + suite + "' (axioms, cocycle, weights, appendix, orbit)");
  }
  return rep.finish(suite);
}

}  // namespace rotcolor
