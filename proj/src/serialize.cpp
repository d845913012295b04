#include "rotcolor/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "rotcolor/errors.hpp"

namespace rotcolor {

std::string format_float(double v, int digits) {
  if (!std::isfinite(v)) throw InvalidArgument("non-finite value in output");
  if (std::abs(v) < 1e-12) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

Json float_json(double v) { return Json(std::strtod(format_float(v).c_str(), nullptr)); }

Json to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const Rational& c : x.coeffs()) coeffs.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
  return Json{{"level", x.level()}, {"coeffs", std::move(coeffs)}};
}

CycNum cyc_from_json(const Json& j) {
  try {
    const int level = j.at("level").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      Rational r(mpz_class(c.at(0).get<std::string>()), mpz_class(c.at(1).get<std::string>()));
      r.canonicalize();
      coeffs.push_back(r);
    }
    return CycNum::from_canonical(level, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed cyclotomic number: ") + e.what());
  }
}

Json to_json(const Point& p) {
  const auto z = p.embed();
  return Json{{"value", to_json(p.value)}, {"float", Json::array({float_json(z.real()), float_json(z.imag())})}};
}

Json to_json(const AreaValue& a) {
  return Json{{"scaled", to_json(a.scaled())}, {"float", float_json(a.approx())}};
}

Json to_json(const PolygonSpec& s) {
  return Json{{"m", s.m},
              {"k", s.k},
              {"anchor", to_json(s.anchor)},
              {"direction", s.direction.to_string()},
              {"side", s.side.get_str()}};
}

Json to_json(const DihedralElem& e) { return Json{{"dihedral", {{"n", e.n}, {"value", e.value}}}}; }

Json to_json(const RotElem& e) {
  return Json{{"rot", {{"center", to_json(e.center)}, {"angle", e.angle.to_string()}}}};
}

const char* chirality_name(Chirality c) { return c == Chirality::Plus ? "plus" : "minus"; }

Chirality parse_chirality(const std::string& text) {
  if (text == "plus" || text == "+") return Chirality::Plus;
  if (text == "minus" || text == "-") return Chirality::Minus;
  throw InvalidArgument("chirality must be plus or minus, got '" + text + "'");
}

Json to_json(const TrochoidSpec& s) {
  return Json{{"p", s.p},
              {"q", s.q},
              {"k", s.k},
              {"l", s.l},
              {"anchor", to_json(s.anchor)},
              {"direction", s.direction.to_string()},
              {"chirality", chirality_name(s.chirality)},
              {"side", s.side.get_str()}};
}

TrochoidSpec spec_from_json(const Json& j) {
  try {
    TrochoidSpec s;
    s.p = j.at("p").get<int>();
    s.q = j.at("q").get<int>();
    s.k = j.at("k").get<int>();
    s.l = j.at("l").get<int>();
    s.anchor = Point(cyc_from_json(j.at("anchor").at("value")));
    s.direction = RationalTurn::parse(j.at("direction").get<std::string>());
    s.chirality = parse_chirality(j.value("chirality", std::string("plus")));
    s.side = Rational(j.value("side", std::string("1")));
    s.side.canonicalize();
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed spec: ") + e.what());
  }
}

Json to_json(const MoveSeq& m) {
  Json out = Json::array();
  for (Move mv : m.moves) out.push_back(move_name(mv));
  return out;
}

Json to_json(const ClassificationResult& r) {
  Json out{{"verdict", verdict_name(r.verdict)}};
  if (r.verdict == Verdict::NotEquivalent) out["reason"] = reason_name(r.reason);
  if (r.verdict == Verdict::Equivalent) out["witness"] = to_json(r.witness);
  out["note"] = r.note;
  return out;
}

namespace {

Rational parse_rational(const std::string& text) {
  try {
    Rational r(text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("cannot parse rational '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Point parse_point(const std::string& text) {
  if (text.rfind("cyc", 0) == 0) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InvalidArgument("expected cycN:c0,c1,... in '" + text + "'");
    int level = 0;
    try {
      level = std::stoi(text.substr(3, colon - 3));
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad level in '" + text + "'");
    }
    std::vector<Rational> exps;
    for (const auto& part : split(text.substr(colon + 1), ',')) exps.push_back(parse_rational(part));
    return Point(CycNum::from_exponents(level, exps));
  }
  const auto parts = split(text, ',');
  if (parts.size() == 1) return Point(CycNum(parse_rational(parts[0])));
  if (parts.size() == 2) {
    return Point(CycNum(parse_rational(parts[0])) + cyc_root(4, 1).scaled(parse_rational(parts[1])));
  }
  throw InvalidArgument("cannot parse point '" + text + "'");
}

}  // namespace rotcolor
