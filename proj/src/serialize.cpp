#include "tailmatch/serialize.hpp"

#include "tailmatch/errors.hpp"

namespace tailmatch {

Json to_json(const WeightFunction& w) {
  Json weights = Json::object();
  for (const auto& [index, value] : w.carrier) weights[std::to_string(index)] = value.str();
  return Json{{"role", to_string(w.role)}, {"size", w.size.str()}, {"weights", weights}};
}

Json to_json(const DiscreteDistribution& d) {
  Json atoms = Json::array();
  for (const auto& a : d.atoms()) atoms.push_back(Json::array({a.value.str(), a.prob.str()}));
  return atoms;
}

DiscreteDistribution distribution_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("distribution must be a non-empty array of [value, prob] pairs");
  }
  std::vector<Atom> atoms;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw ParseError("distribution entry must be [\"p/q\", \"p/q\"], got " + pair.dump());
    }
    atoms.push_back({Rational::parse(pair[0].get<std::string>()),
                     Rational::parse(pair[1].get<std::string>())});
  }
  return DiscreteDistribution(std::move(atoms));
}

DiscreteDistribution parse_distribution(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("distribution JSON: ") + e.what());
  }
  return distribution_from_json(j);
}

Json to_json(const SearchReport& r) {
  Json out;
  out["k"] = r.k;
  out["x"] = r.x.str();
  out["grid"] = Json{{"m", r.grid.value_denominator},
                     {"n_den", r.grid.prob_denominator},
                     {"max_support", r.grid.max_support}};
  out["best_tail"] = r.best_tail.str();
  out["best_tail_decimal"] = r.best_tail.decimal();
  out["ceiling"] = r.ceiling.str();
  out["ceiling_decimal"] = r.ceiling.decimal();
  out["best_dist"] = r.best_dist ? to_json(*r.best_dist) : Json::array();
  out["exhausted"] = r.exhausted;
  out["candidates"] = r.candidates;
  out["feasible"] = r.feasible;
  return out;
}

Json sidecar_json(const BridgeInstance& b) {
  Json weights = Json::array();
  for (const auto& w : b.weights) weights.push_back(w.str());
  return Json{{"k", b.k}, {"r", b.r}, {"n", b.n}, {"weights", weights}, {"source", to_json(b.source)}};
}

}  // namespace tailmatch
