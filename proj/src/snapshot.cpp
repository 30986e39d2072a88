#include "eulerwalk/snapshot.hpp"

namespace eulerwalk {

using nlohmann::json;

json lattice_to_json(const Lattice& lattice) {
  if (lattice.is_torus()) {
    return {{"topology", "torus"}, {"M", lattice.width()}, {"N", lattice.height()}};
  }
  return {{"topology", "grid"}, {"Lx", lattice.width()}, {"Ly", lattice.height()}};
}

Lattice lattice_from_json(const json& j) {
  try {
    const auto topology = j.at("topology").get<std::string>();
    if (topology == "torus") return Lattice::torus(j.at("M").get<int>(), j.at("N").get<int>());
    if (topology == "grid") return Lattice::planar_grid(j.at("Lx").get<int>(), j.at("Ly").get<int>());
    throw InputError("unknown topology '" + topology + "'");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed lattice record: ") + e.what());
  }
}

std::string arrows_to_string(const RotorState& state) {
  std::string out;
  out.reserve(state.arrows.size());
  for (Direction d : state.arrows) out.push_back(to_char(d));
  return out;
}

json to_json(const Lattice& lattice, const RotorState& state) {
  json j = lattice_to_json(lattice);
  j["arrows"] = arrows_to_string(state);
  j["chip"] = state.chip;
  return j;
}

Snapshot snapshot_from_json(const json& j) {
  Lattice lattice = lattice_from_json(j);
  RotorState state;
  try {
    const auto arrows = j.at("arrows").get<std::string>();
    state.arrows.reserve(arrows.size());
    for (char c : arrows) state.arrows.push_back(direction_from_char(c));
    state.chip = j.at("chip").get<VertexId>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed state record: ") + e.what());
  }
  validate_state(state, lattice);
  return {std::move(lattice), std::move(state)};
}

}  // namespace eulerwalk
