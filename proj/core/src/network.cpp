#include "netobs/network.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace netobs {

using nlohmann::json;

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Junction: return "junction";
    case NodeKind::Tank: return "tank";
    case NodeKind::Reservoir: return "reservoir";
  }
  throw std::logic_error("bad node kind");
}

NodeKind node_kind_from_string(const std::string& s) {
  if (s == "junction") return NodeKind::Junction;
  if (s == "tank") return NodeKind::Tank;
  if (s == "reservoir") return NodeKind::Reservoir;
  throw std::invalid_argument("unknown node kind '" + s + "'");
}

int NetworkModel::node_index(const std::string& id) const {
  for (int i = 0; i < node_count(); ++i)
    if (nodes[i].id == id) return i;
  return -1;
}

namespace {

void require_length(const RealVector& v, int len, const char* name) {
  if (static_cast<int>(v.size()) != len)
    throw std::invalid_argument(std::string("parameter ") + name +
                                " has wrong length");
}

void require_positive(const RealVector& v, const char* name) {
  for (int i = 0; i < v.size(); ++i)
    if (!(v(i) > 0.0))
      throw std::invalid_argument(std::string("parameter ") + name +
                                  " must be strictly positive");
}

}  // namespace

void NetworkModel::validate() const {
  if (nodes.empty()) throw std::invalid_argument("network has no nodes");
  for (const auto& e : edges) {
    if (e.tail < 0 || e.tail >= node_count() || e.head < 0 ||
        e.head >= node_count())
      throw std::invalid_argument("edge '" + e.id +
                                  "' references a missing node");
  }
  if (params) {
    const int m = edge_count();
    const int n = node_count();
    require_length(params->inductance, m, "L");
    require_length(params->resistance, m, "R");
    require_length(params->discharge, n, "D");
    require_length(params->link_capacitance, m, "Cl");
    require_length(params->node_capacitance, n, "Cn");
    require_length(params->demand, n, "Q");
    require_positive(params->inductance, "L");
    require_positive(params->resistance, "R");
    require_positive(params->link_capacitance, "Cl");
    require_positive(params->node_capacitance, "Cn");
    for (int i = 0; i < n; ++i)
      if (params->discharge(i) < 0.0)
        throw std::invalid_argument("parameter D must be nonnegative");
  }
}

std::pair<RealMatrix, RealMatrix> adjacency_and_incidence(
    const NetworkModel& net) {
  net.validate();
  const int n = net.node_count();
  const int m = net.edge_count();
  RealMatrix adj = RealMatrix::Zero(n, n);
  RealMatrix inc = RealMatrix::Zero(n, m);
  for (int j = 0; j < m; ++j) {
    const auto& e = net.edges[j];
    adj(e.tail, e.head) = 1.0;
    inc(e.tail, j) = -1.0;
    inc(e.head, j) = 1.0;
  }
  return {adj, inc};
}

namespace {

RealVector vector_from_json(const json& arr) {
  RealVector v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) v(i) = arr[i].get<double>();
  return v;
}

json vector_to_json(const RealVector& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

}  // namespace

NetworkModel network_from_json(const std::string& text) {
  json j = json::parse(text);
  NetworkModel net;
  for (const auto& jn : j.at("nodes")) {
    NetworkNode node;
    node.id = jn.at("id").get<std::string>();
    node.kind = jn.contains("kind")
                    ? node_kind_from_string(jn["kind"].get<std::string>())
                    : NodeKind::Junction;
    if (net.node_index(node.id) >= 0)
      throw std::invalid_argument("duplicate node id '" + node.id + "'");
    net.nodes.push_back(std::move(node));
  }
  if (j.contains("edges")) {
    for (const auto& je : j["edges"]) {
      NetworkEdge e;
      e.id = je.at("id").get<std::string>();
      e.tail = net.node_index(je.at("tail").get<std::string>());
      e.head = net.node_index(je.at("head").get<std::string>());
      if (e.tail < 0 || e.head < 0)
        throw std::invalid_argument("edge '" + e.id +
                                    "' references a missing node");
      net.edges.push_back(std::move(e));
    }
  }
  if (j.contains("params") && !j["params"].is_null()) {
    const auto& jp = j["params"];
    HydraulicParams p;
    p.inductance = vector_from_json(jp.at("L"));
    p.resistance = vector_from_json(jp.at("R"));
    p.discharge = vector_from_json(jp.at("D"));
    p.link_capacitance = vector_from_json(jp.at("Cl"));
    p.node_capacitance = vector_from_json(jp.at("Cn"));
    p.demand = vector_from_json(jp.at("Q"));
    net.params = std::move(p);
  }
  net.validate();
  return net;
}

NetworkModel load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open network file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return network_from_json(buf.str());
}

std::string network_to_json(const NetworkModel& net) {
  json j;
  j["nodes"] = json::array();
  for (const auto& n : net.nodes)
    j["nodes"].push_back({{"id", n.id}, {"kind", to_string(n.kind)}});
  j["edges"] = json::array();
  for (const auto& e : net.edges)
    j["edges"].push_back({{"id", e.id},
                          {"tail", net.nodes[e.tail].id},
                          {"head", net.nodes[e.head].id}});
  if (net.params) {
    j["params"] = {{"L", vector_to_json(net.params->inductance)},
                   {"R", vector_to_json(net.params->resistance)},
                   {"D", vector_to_json(net.params->discharge)},
                   {"Cl", vector_to_json(net.params->link_capacitance)},
                   {"Cn", vector_to_json(net.params->node_capacitance)},
                   {"Q", vector_to_json(net.params->demand)}};
  }
  return j.dump(2);
}

}  // namespace netobs
