#pragma once

#include <string>

#include <json.hpp>

#include "rotcolor/diagram.hpp"
#include "rotcolor/trochoid.hpp"

namespace rotcolor {

using Json = nlohmann::ordered_json;

/// Twelve significant digits by default; negative zero and |v| < 1e-12 print as 0.
std::string format_float(double v, int digits = 12);
/// The same value as a JSON number that dumps to a stable text.
Json float_json(double v);

Json to_json(const CycNum& x);
CycNum cyc_from_json(const Json& j);
Json to_json(const Point& p);
Json to_json(const AreaValue& a);
Json to_json(const PolygonSpec& s);
Json to_json(const DihedralElem& e);
Json to_json(const RotElem& e);
Json to_json(const TrochoidSpec& s);
TrochoidSpec spec_from_json(const Json& j);
Json to_json(const MoveSeq& m);
Json to_json(const ClassificationResult& r);

template <class Elem>
Json coloring_json(const Coloring<Elem>& c) {
  const TorusDiagram d(c.p, c.q);
  Json colors = Json::object();
  for (int a = 0; a < d.arc_count(); ++a) colors[d.arc_label(a)] = to_json(c.colors[a]);
  return Json{{"p", c.p}, {"q", c.q}, {"colors", std::move(colors)}};
}

/// Point syntax: "x" or "x,y" for x + y i with rational parts, or
/// "cycN:c0,c1,..." for sum c_e zeta_N^e.
Point parse_point(const std::string& text);
Chirality parse_chirality(const std::string& text);
const char* chirality_name(Chirality c);

}  // namespace rotcolor
