#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cover.hpp"
#include "spanner.hpp"
#include "tree.hpp"

namespace hopnav {

// Fixed-port model: every vertex numbers its incident spanner edges with a
// seeded-random permutation of 1..deg, and forwarding names ports only.
struct PortedGraph {
  std::vector<std::vector<std::pair<int, int>>> adj;  // slot -> (neighbor, edge id)
  std::vector<std::vector<int>> port_of;              // slot -> port, 1..deg
  std::vector<std::vector<int>> slot_of;              // port-1 -> slot
};

struct AddrEntry {
  int node = -1;  // recursion-tree node id
  int port = 0;   // 0 when the hub is the vertex itself
};

// What the world may know about a vertex: its id and the ports its hub
// ancestors use to reach it, listed from the root down.
struct Address {
  long long dest = -1;
  std::vector<AddrEntry> down;
};

struct Header {
  Address to;
  int tree = -1;  // cover routing writes the selected tree here
};

// What a vertex itself knows: ports toward its hub ancestors and next-hop
// ports for the vertices sharing its base leaf.
struct VertexTable {
  long long self = -1;
  int node = -1;  // recursion-tree node of this vertex
  std::vector<AddrEntry> up;
  std::vector<std::pair<long long, int>> q;  // co-resident -> next-hop port
};

struct Decision {
  enum class Act { Deliver, Forward, Drop };
  Act act = Act::Drop;
  int port = 0;
  std::string reason;
  long long comparisons = 0;  // id comparisons spent deciding
};

// The routing decision: pure over one table and one header, no global state.
Decision decide(const VertexTable& table, const Header& header);

struct RoutingScheme {
  WeightedTree tree;  // every vertex required
  HopSpanner spanner;
  PortedGraph ports;
  std::vector<Address> addr;        // by internal index
  std::vector<VertexTable> table;   // by internal index
};

// Builds the 2-hop spanner, assigns ports from the seed, and derives
// addresses and tables. The scheme is defined for hop budget 2 only.
RoutingScheme build_routing(const WeightedTree& t, uint64_t seed);

Header header_for(const RoutingScheme& rs, long long to);

struct RouteResult {
  bool delivered = false;
  std::vector<long long> trace;  // vertex ids walked, empty for self-routes
  Weight weight = 0;
  int hops = 0;
  long long max_comparisons = 0;  // worst single decision on the route
  std::string drop_reason;
  int tree = -1;  // cover routing reports the tree used
};

RouteResult route(const RoutingScheme& rs, long long from, long long to);
RouteResult route_header(const RoutingScheme& rs, long long from, const Header& header);

// Information-theoretic size of one vertex's address plus tables, in bits.
long long table_bits(const RoutingScheme& rs, int v);

// Per-tree schemes behind a Ramsey cover; the source picks its tree and
// writes the index into the header.
struct CoverRouting {
  FiniteMetric metric;
  TreeCover cover;
  std::vector<RoutingScheme> schemes;
};

CoverRouting build_cover_routing(const FiniteMetric& m, const TreeCover& c, uint64_t seed);
RouteResult cover_route(const CoverRouting& cr, long long from, long long to);

}  // namespace hopnav
