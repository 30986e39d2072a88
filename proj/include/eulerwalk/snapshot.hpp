#pragma once

#include <string>

#include <json.hpp>

#include "eulerwalk/lattice.hpp"
#include "eulerwalk/rotor.hpp"

namespace eulerwalk {

/// Flat record of a lattice plus rotor state:
///   {"topology": "torus", "M": 8, "N": 8, "arrows": "NESW...", "chip": 0}
/// Planar grids use "grid" with "Lx"/"Ly". Arrows are listed in vertex-id order.
struct Snapshot {
  Lattice lattice;
  RotorState state;
};

nlohmann::json lattice_to_json(const Lattice& lattice);
Lattice lattice_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Lattice& lattice, const RotorState& state);
Snapshot snapshot_from_json(const nlohmann::json& j);

std::string arrows_to_string(const RotorState& state);

}  // namespace eulerwalk
