#pragma once

// JSON for points and reports. Exact values are "p/q" strings.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zastava/error.hpp"
#include "zastava/point.hpp"
#include "zastava/report.hpp"
#include "zastava/root_data.hpp"
#include "zastava/scalar.hpp"
#include "zastava/unipoly.hpp"

namespace zastava {

using json = nlohmann::ordered_json;

inline json scalars_to_json(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline std::vector<Scalar> scalars_from_json(const json& j) {
  if (!j.is_array()) throw error(errc::parse, "expected an array of rationals");
  std::vector<Scalar> out;
  for (const auto& x : j) {
    if (x.is_string()) out.push_back(parse_scalar(x.get<std::string>()));
    else if (x.is_number_integer()) out.push_back(Scalar(x.get<long>()));
    else throw error(errc::parse, "rationals must be strings or integers");
  }
  return out;
}

/// Point file:
///   {"datum": "A1", "colors": [{"Q": "z^2-4z+3", "R": "z+1", "w": ["1","3"], "y": ["2","4"]}]}
/// Either the polynomial pair or the coordinates may be omitted. When both are
/// given they are loaded as-is; consistency_problems() reports disagreement.
inline ZastavaPoint point_from_json(const json& j) {
  try {
    const RootDatum datum = parse_datum(j.at("datum").get<std::string>());
    const json& cs = j.at("colors");
    if (!cs.is_array() || cs.empty()) throw error(errc::parse, "colors must be a nonempty array");
    bool all_poly = true, all_coord = true;
    for (const auto& c : cs) {
      const bool p = c.contains("Q") && c.contains("R");
      const bool k = c.contains("w") && c.contains("y");
      if (!p && !k) throw error(errc::parse, "each color needs Q,R or w,y");
      all_poly &= p;
      all_coord &= k;
    }
    if (all_poly && all_coord) {
      std::vector<Color> colors;
      for (const auto& c : cs)
        colors.push_back({parse_unipoly(c.at("Q").get<std::string>()), parse_unipoly(c.at("R").get<std::string>()),
                          scalars_from_json(c.at("w")), scalars_from_json(c.at("y"))});
      return ZastavaPoint::unchecked(datum, std::move(colors));
    }
    if (all_coord) {
      std::vector<std::vector<Scalar>> w, y;
      for (const auto& c : cs) {
        w.push_back(scalars_from_json(c.at("w")));
        y.push_back(scalars_from_json(c.at("y")));
      }
      return ZastavaPoint::from_coords(datum, w, y);
    }
    if (all_poly) {
      std::vector<UniPoly> Q, R;
      for (const auto& c : cs) {
        Q.push_back(parse_unipoly(c.at("Q").get<std::string>()));
        R.push_back(parse_unipoly(c.at("R").get<std::string>()));
      }
      return ZastavaPoint::from_polys(datum, Q, R);
    }
    throw error(errc::parse, "colors must all use the same form");
  } catch (const json::exception& e) {
    throw error(errc::parse, std::string("point file: ") + e.what());
  }
}

inline json point_to_json(const ZastavaPoint& p) {
  json j;
  j["datum"] = p.datum().name();
  j["tier"] = to_string(p.tier());
  json cs = json::array();
  for (const auto& c : p.colors()) {
    json o;
    o["Q"] = to_string(c.Q);
    o["R"] = to_string(c.R);
    if (c.has_coords()) {
      o["w"] = scalars_to_json(*c.w);
      o["y"] = scalars_to_json(*c.y);
    }
    cs.push_back(o);
  }
  j["colors"] = cs;
  return j;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::precondition, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::parse, path + ": " + e.what());
  }
}

inline ZastavaPoint load_point(const std::string& path) { return point_from_json(read_json_file(path)); }

inline json report_to_json(const VerificationReport& r, bool timing = true) {
  json j;
  j["suite"] = r.suite;
  j["status"] = r.passed() ? "pass" : "fail";
  json cs = json::array();
  for (const auto& c : r.checks) {
    json o;
    o["id"] = c.id;
    o["status"] = to_string(c.status);
    if (!c.witness.empty()) o["witness"] = c.witness;
    if (timing) o["seconds"] = c.seconds;
    cs.push_back(o);
  }
  j["checks"] = cs;
  return j;
}

}  // namespace zastava
