#include "hyperpath/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace hyperpath::cli {

using nlohmann::json;

json to_json(const RunReport& report) {
  json doc;
  doc["schema"] = kRunSchema;
  doc["command"] = report.command;
  doc["instance"] = {{"problem", report.problem}, {"r", report.r},         {"n", report.n},
                     {"m", report.m},             {"k", report.k},         {"directed", report.directed}};
  doc["decision"] = {{"answer", report.yes ? "yes" : "no"},
                     {"method", report.method},
                     {"trials_used", report.trials_used},
                     {"false_negative_bound", report.false_negative_bound},
                     {"exact", report.exact},
                     {"circuit_gates", report.circuit_gates}};
  doc["witness"] = report.witness ? json(*report.witness) : json(nullptr);
  doc["parameters"] = {{"seed", report.seed},
                       {"repetitions", report.repetitions},
                       {"field_degree", report.field_degree}};
  doc["warnings"] = report.warnings;
  doc["wall_time_s"] = report.wall_time_s;
  return doc;
}

namespace {

void flatten(const json& node, const std::string& prefix, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  out << prefix << ": ";
  if (node.is_string()) {
    out << node.get<std::string>();
  } else if (node.is_array() && std::all_of(node.begin(), node.end(), [](const json& x) { return x.is_number(); })) {
    bool first = true;
    for (const auto& x : node) {
      out << (first ? "" : " ") << x.dump();
      first = false;
    }
  } else {
    out << node.dump();
  }
  out << '\n';
}

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::element:
      return "element";
    case NodeKind::set_node:
      return "set";
    case NodeKind::x_start:
      return "x_start";
    case NodeKind::x_end:
      return "x_end";
    case NodeKind::u_start:
      return "u_start";
    case NodeKind::u_end:
      return "u_end";
  }
  return "?";
}

NodeKind kind_from(const std::string& s) {
  for (NodeKind k : {NodeKind::element, NodeKind::set_node, NodeKind::x_start, NodeKind::x_end, NodeKind::u_start,
                     NodeKind::u_end}) {
    if (s == kind_name(k)) return k;
  }
  throw std::invalid_argument("unknown gadget node kind '" + s + "'");
}

std::vector<VertexId>& specials(GadgetMap& map, NodeKind kind) {
  switch (kind) {
    case NodeKind::x_start:
      return map.x_start;
    case NodeKind::x_end:
      return map.x_end;
    case NodeKind::u_start:
      return map.u_start;
    default:
      return map.u_end;
  }
}

}  // namespace

std::string to_text(const json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

json gadget_map_to_json(const GadgetMap& map, std::size_t k) {
  json nodes = json::array();
  for (VertexId v = 0; v < map.labels.size(); ++v) {
    const NodeLabel& l = map.labels[v];
    json node = {{"id", v}, {"kind", kind_name(l.kind)}, {"label", describe(l)}};
    if (l.kind == NodeKind::element) node["element"] = l.index;
    if (l.kind == NodeKind::set_node) {
      node["set"] = l.set;
      node["position"] = l.index;
    } else if (l.kind != NodeKind::element && l.set != kSharedSpecial) {
      node["set"] = l.set;
    }
    nodes.push_back(std::move(node));
  }
  return {{"schema", kGadgetSchema},
          {"r", map.r},
          {"n", map.n},
          {"k", k},
          {"num_sets", map.set_nodes.size()},
          {"variant", map.variant == GadgetVariant::corrected ? "corrected" : "literal"},
          {"vertices", std::move(nodes)}};
}

LoadedGadgetMap gadget_map_from_json(const json& doc) {
  try {
    if (doc.at("schema").get<std::string>() != kGadgetSchema) throw std::invalid_argument("unexpected schema");
    LoadedGadgetMap out;
    GadgetMap& map = out.map;
    map.r = doc.at("r").get<std::size_t>();
    map.n = doc.at("n").get<std::size_t>();
    out.k = doc.at("k").get<std::size_t>();
    map.variant = doc.at("variant").get<std::string>() == "literal" ? GadgetVariant::literal : GadgetVariant::corrected;
    map.set_nodes.resize(doc.at("num_sets").get<std::size_t>());
    const auto& nodes = doc.at("vertices");
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      const auto& node = nodes[v];
      if (node.at("id").get<std::size_t>() != v) throw std::invalid_argument("vertex ids must be dense and ordered");
      NodeLabel l;
      l.kind = kind_from(node.at("kind").get<std::string>());
      const auto id = static_cast<VertexId>(v);
      switch (l.kind) {
        case NodeKind::element:
          l.index = node.at("element").get<std::uint32_t>();
          break;
        case NodeKind::set_node: {
          l.set = node.at("set").get<std::uint32_t>();
          l.index = node.at("position").get<std::uint32_t>();
          auto& row = map.set_nodes.at(l.set);
          if (l.index != row.size() + 1) throw std::invalid_argument("set-node positions must be consecutive");
          row.push_back(id);
          break;
        }
        case NodeKind::x_start:
        case NodeKind::x_end:
        case NodeKind::u_start:
        case NodeKind::u_end: {
          l.set = node.contains("set") ? node.at("set").get<std::uint32_t>() : kSharedSpecial;
          auto& ids = specials(map, l.kind);
          if (l.set == kSharedSpecial) {
            ids.assign(map.set_nodes.size(), id);
          } else {
            ids.resize(map.set_nodes.size(), id);
            ids.at(l.set) = id;
          }
          break;
        }
      }
      map.labels.push_back(l);
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed gadget map: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("malformed gadget map: ") + e.what());
  }
}

}  // namespace hyperpath::cli
