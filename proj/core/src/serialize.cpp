#include "truncirc/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "truncirc/errors.hpp"

namespace truncirc {

namespace {
using nlohmann::json;

json density_to_json(const TrigPoly& p) {
  json coeffs = json::array();
  for (int k = -p.degree(); k <= p.degree(); ++k)
    coeffs.push_back({p.coeff(k).real(), p.coeff(k).imag()});
  return json{{"degree", p.degree()}, {"coeffs", coeffs}};
}

TrigPoly density_from_json(const json& j) {
  const int degree = j.at("degree").get<int>();
  const auto& coeffs = j.at("coeffs");
  if (int(coeffs.size()) != 2 * degree + 1)
    throw DomainError("density: expected 2*degree+1 coefficient pairs");
  TrigPoly p(degree);
  for (int k = -degree; k <= degree; ++k) {
    const auto& c = coeffs.at(size_t(k + degree));
    p.set_coeff(k, {c.at(0).get<double>(), c.at(1).get<double>()});
  }
  return p;
}

}  // namespace

std::string to_json(const PureState& state) {
  json j{{"type", "pure"}, {"n", state.size()}, {"roots", state.roots()}};
  return j.dump(2);
}

std::string to_json(const MomentState& state) {
  json moments = json::array();
  for (int k = 0; k < state.size(); ++k)
    moments.push_back({state.moment(k).real(), state.moment(k).imag()});
  json j{{"type", "moment"}, {"n", state.size()}, {"moments", moments}};
  return j.dump(2);
}

std::string to_json(const CircleMeasure& measure) {
  json atoms = json::array();
  for (const auto& atom : measure.atoms)
    atoms.push_back({{"angle", atom.angle}, {"weight", atom.weight}});
  json j{{"type", "measure"}, {"atoms", atoms}};
  if (measure.density) j["density"] = density_to_json(*measure.density);
  return j.dump(2);
}

AnyState parse_state_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("state JSON parse error: ") + e.what());
  }
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "pure") {
      auto roots = j.at("roots").get<std::vector<double>>();
      const int n = j.value("n", int(roots.size()) + 1);
      if (n != int(roots.size()) + 1)
        throw DomainError("pure state: n must equal root count + 1");
      return PureState(std::move(roots));
    }
    if (type == "moment") {
      const int n = j.at("n").get<int>();
      std::vector<std::complex<double>> moments;
      for (const auto& pair : j.at("moments"))
        moments.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
      return MomentState(n, std::move(moments));
    }
    if (type == "measure") {
      CircleMeasure m;
      for (const auto& atom : j.value("atoms", json::array()))
        m.atoms.push_back({atom.at("angle").get<double>(),
                           atom.at("weight").get<double>()});
      if (j.contains("density")) m.density = density_from_json(j.at("density"));
      return m;
    }
    throw DomainError("unknown state type '" + type + "'");
  } catch (const json::exception& e) {
    throw DomainError(std::string("state JSON structure error: ") + e.what());
  }
}

AnyState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open state file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_state_json(buffer.str());
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

MomentState to_moment_state(const AnyState& state, int n) {
  if (const auto* pure = std::get_if<PureState>(&state)) {
    if (pure->size() != n)
      throw DomainError("state size " + std::to_string(pure->size()) +
                        " does not match requested n");
    return moment_state(*pure);
  }
  if (const auto* moment = std::get_if<MomentState>(&state)) {
    if (moment->size() != n)
      throw DomainError("state size " + std::to_string(moment->size()) +
                        " does not match requested n");
    return *moment;
  }
  return moments_from_measure(std::get<CircleMeasure>(state), n);
}

CircleMeasure to_measure(const AnyState& state) {
  if (const auto* pure = std::get_if<PureState>(&state)) return pullback(*pure);
  if (const auto* moment = std::get_if<MomentState>(&state))
    return pullback(*moment);
  return std::get<CircleMeasure>(state);
}

}  // namespace truncirc
