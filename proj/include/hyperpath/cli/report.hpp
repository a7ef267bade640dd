#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperpath/hypergraph.hpp"
#include "hyperpath/reductions.hpp"

namespace hyperpath::cli {

inline constexpr const char* kRunSchema = "hyperpath.run/1";
inline constexpr const char* kGadgetSchema = "hyperpath.gadget/1";

struct RunReport {
  std::string command;
  std::string problem;  // "path" or "cycle"
  std::size_t r = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  bool directed = true;
  bool yes = false;
  std::string method;  // "algebraic" or "oracle"
  std::size_t trials_used = 0;
  double false_negative_bound = 0.0;
  bool exact = false;
  std::size_t circuit_gates = 0;
  std::optional<std::vector<VertexId>> witness;
  double wall_time_s = 0.0;
  std::uint64_t seed = 0;
  std::size_t repetitions = 0;
  unsigned field_degree = 0;
  std::vector<std::string> warnings;
};

nlohmann::json to_json(const RunReport& report);

/// One `path.to.field: value` line per leaf of the JSON document, so the text
/// and JSON forms always carry the same fields.
std::string to_text(const nlohmann::json& doc);

nlohmann::json gadget_map_to_json(const GadgetMap& map, std::size_t k);

struct LoadedGadgetMap {
  GadgetMap map;
  std::size_t k = 0;
};

/// Throws std::invalid_argument on a malformed sidecar.
LoadedGadgetMap gadget_map_from_json(const nlohmann::json& doc);

}  // namespace hyperpath::cli
