#include "solenoid/io.hpp"

#include <fstream>
#include <sstream>

#include "solenoid/error.hpp"

namespace solenoid::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::kParse, what);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::int64_t positive_int(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
    schema_error(std::string(what) + " must be a positive integer");
  }
  return j.get<std::int64_t>();
}

double as_double(const Json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_rational(j.get<std::string>()).get_d();
  schema_error(std::string(what) + " must be a number");
}

std::vector<Knot> parse_knots(const Json& list, const char* what) {
  if (!list.is_array()) schema_error(std::string(what) + " must be an array of [x, y] pairs");
  std::vector<Knot> knots;
  knots.reserve(list.size());
  for (const Json& pair : list) {
    if (!pair.is_array() || pair.size() != 2) {
      schema_error(std::string(what) + " entries must be [x, y] pairs");
    }
    knots.push_back({parse_rational_json(pair[0]), parse_rational_json(pair[1])});
  }
  return knots;
}

Json knots_json(const std::vector<Knot>& knots) {
  Json out = Json::array();
  for (const Knot& k : knots) out.push_back(Json::array({to_string(k.x), to_string(k.y)}));
  return out;
}

Json optional_rational(const std::optional<Rational>& r) {
  return r ? Json(to_string(*r)) : Json(nullptr);
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Rational parse_rational_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(static_cast<long>(j.get<std::int64_t>())));
  if (j.is_number_float()) return from_double(j.get<double>());
  schema_error("expected a rational \"p/q\" string or a number");
}

CircleLift parse_map(const Json& j) {
  if (!j.is_object()) schema_error("map descriptor must be a JSON object");
  const std::int64_t degree = j.contains("degree") ? positive_int(j.at("degree"), "degree") : 1;
  const Json& variant = require(j, "variant");
  if (!variant.is_string()) schema_error("'variant' must be a string");
  const std::string kind = variant.get<std::string>();
  if (kind == "pl") {
    return CircleLift(PlLift(degree, parse_knots(require(j, "breakpoints"), "breakpoints")));
  }
  if (kind == "analytic") {
    const double alpha = as_double(require(j, "alpha"), "alpha");
    std::vector<AnalyticTerm> terms;
    if (j.contains("terms")) {
      const Json& list = j.at("terms");
      if (!list.is_array()) schema_error("'terms' must be an array of [a, T] pairs");
      for (const Json& pair : list) {
        if (!pair.is_array() || pair.size() != 2) schema_error("terms entries must be [a, T]");
        terms.push_back({as_double(pair[0], "amplitude"), as_double(pair[1], "period")});
      }
    }
    return CircleLift(AnalyticLift(degree, alpha, std::move(terms)));
  }
  schema_error("unknown variant '" + kind + "'");
}

Json map_to_json(const CircleLift& f) {
  Json out;
  out["degree"] = f.degree();
  if (f.is_pl()) {
    out["variant"] = "pl";
    out["breakpoints"] = knots_json(f.pl().knots());
    return out;
  }
  const AnalyticLift& a = *f.analytic();
  out["variant"] = "analytic";
  out["alpha"] = a.alpha();
  Json terms = Json::array();
  for (const AnalyticTerm& t : a.terms()) terms.push_back(Json::array({t.amplitude, t.period}));
  out["terms"] = terms;
  return out;
}

InducedHomeo parse_homeo(const Json& j) {
  if (!j.is_object()) schema_error("homeomorphism descriptor must be a JSON object");
  if (!j.contains("lift")) return induce(parse_map(j), 0);
  CircleLift lift = parse_map(j.at("lift"));
  if (j.contains("degree")) {
    const std::int64_t degree = positive_int(j.at("degree"), "degree");
    if (degree != lift.degree()) lift = embed_degree(lift, degree);
  }
  Integer offset = 0;
  if (j.contains("offset")) {
    Rational o = parse_rational_json(j.at("offset"));
    if (o.get_den() != 1) schema_error("'offset' must be an integer");
    offset = o.get_num();
  }
  return induce(lift, offset);
}

Json homeo_to_json(const InducedHomeo& f) {
  Json out;
  out["degree"] = f.degree();
  out["offset"] = to_string(f.offset());
  out["lift"] = map_to_json(f.base());
  return out;
}

LimitPeriodicHomeo parse_lp(const Json& j) {
  const Json& body = require(j, "lp");
  const Json& tower_json = require(body, "tower");
  if (!tower_json.is_array()) schema_error("'tower' must be an array of periods");
  std::vector<std::int64_t> tower;
  for (const Json& t : tower_json) tower.push_back(positive_int(t, "tower period"));
  const Json& summands_json = require(body, "summands");
  if (!summands_json.is_array() || summands_json.size() != tower.size()) {
    schema_error("'summands' must hold one knot list per tower level");
  }
  std::vector<PlFunction> summands;
  for (std::size_t i = 0; i < tower.size(); ++i) {
    summands.emplace_back(tower[i], parse_knots(summands_json[i], "summand"));
  }
  Rational tail = body.contains("tail_bound") ? parse_rational_json(body.at("tail_bound")) : Rational(0);
  return lp_build(std::move(tower), std::move(summands), tail);
}

Json lp_to_json(const LimitPeriodicHomeo& h) {
  Json summands = Json::array();
  for (const PlFunction& s : h.summands()) summands.push_back(knots_json(s.knots()));
  Json body;
  body["tower"] = h.tower();
  body["summands"] = summands;
  body["tail_bound"] = to_string(h.tail_bound());
  Json out;
  out["lp"] = body;
  return out;
}

AnyHomeo parse_any_homeo(const Json& j) {
  if (j.is_object() && j.contains("lp")) return parse_lp(j);
  return parse_homeo(j);
}

Json enclosure_to_json(const RotationEnclosure& e) {
  Json out;
  out["lo"] = to_string(e.lo);
  out["hi"] = to_string(e.hi);
  out["exact"] = optional_rational(e.exact);
  out["witness"] = optional_rational(e.witness);
  out["iterations"] = e.iterations;
  out["certified"] = e.certified;
  out["searched_denominator"] = e.searched_denominator;
  return out;
}

Json semiconjugacy_to_json(const SemiconjugacyReport& r) {
  Json out;
  out["max_error"] = to_string(r.max_error);
  out["exact"] = r.exact;
  out["samples"] = r.samples;
  out["period"] = std::to_string(r.period);
  return out;
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, "'" + path.string() + "': " + e.what());
  }
}

}  // namespace solenoid::io
