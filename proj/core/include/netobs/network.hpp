#pragma once

#include "netobs/pattern.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace netobs {

enum class NodeKind { Junction, Tank, Reservoir };

std::string to_string(NodeKind k);
NodeKind node_kind_from_string(const std::string& s);

struct NetworkNode {
  std::string id;
  NodeKind kind = NodeKind::Junction;
};

struct NetworkEdge {
  std::string id;
  int tail = -1;  // node index
  int head = -1;
};

/// Diagonal hydraulic parameters; lengths follow the model (m = edges,
/// n = nodes). All vectors are the diagonals / plain vectors of the model
/// matrices.
struct HydraulicParams {
  RealVector inductance;        // L, size m, > 0
  RealVector resistance;        // R, size m, > 0
  RealVector discharge;         // D, size n, >= 0
  RealVector link_capacitance;  // C_l, size m, > 0
  RealVector node_capacitance;  // C_n, size n, > 0
  RealVector demand;            // Q, size n
};

/// Node/edge topology with optional hydraulic parameters. States of the
/// derived dynamical model are the m pipe flows followed by the n heads.
struct NetworkModel {
  std::vector<NetworkNode> nodes;
  std::vector<NetworkEdge> edges;
  std::optional<HydraulicParams> params;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int state_count() const { return node_count() + edge_count(); }

  int node_index(const std::string& id) const;  // -1 when absent

  /// Validates topology and, when present, the parameter invariants.
  void validate() const;
};

/// Adjacency and incidence matrices. A_adj(i,j) = 1 iff there is an edge
/// with tail v_i and head v_j; A_inc(i,j) = -1 if v_i is the tail of e_j,
/// +1 if the head, 0 otherwise, columns in declaration order.
std::pair<RealMatrix, RealMatrix> adjacency_and_incidence(
    const NetworkModel& net);

NetworkModel network_from_json(const std::string& text);
NetworkModel load_network(const std::string& path);
std::string network_to_json(const NetworkModel& net);

}  // namespace netobs
