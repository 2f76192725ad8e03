#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nomstruct/class_table.hpp"
#include "nomstruct/signature.hpp"

namespace nomstruct {

enum class SubtypeMode { WidthOnly, Variance };

using NodeId = std::uint32_t;

// Possibly-cyclic graph of record types. Nodes carry member names and
// member shapes only; class names are erased entirely.
struct RecordTypeGraph {
  struct Member {
    MemberSig::Kind kind;
    std::vector<NodeId> params;  // methods only
    NodeId type;                 // field type / method return type
  };
  struct Node {
    std::vector<std::pair<std::string, Member>> members;
  };
  std::vector<Node> nodes;
};

// Whole-program graph: one node per class, in declaration order. The
// class-to-node map and per-node origin names live outside the graph; the
// origins feed only the renderer's binder letters.
struct TableRecordTypes {
  RecordTypeGraph graph;
  std::map<std::string, NodeId, std::less<>> class_node;
  std::vector<std::string> node_origin;
};

TableRecordTypes build_table_record_types(const ClassTable& table);

// Record type of one class: the subgraph reachable from it, root node 0.
struct RecordType {
  RecordTypeGraph graph;
  NodeId root = 0;
  std::vector<std::string> node_origin;
};

RecordType record_type_of(const ClassTable& table, std::string_view name);

// Coinductive equality (bisimulation) and subtyping. WidthOnly compares
// shared member types by struct_equal; Variance applies co/contravariant
// subtyping to field types, returns and parameters.
bool struct_equal(const RecordTypeGraph& g, NodeId a, NodeId b);
bool struct_subtype(const RecordTypeGraph& g, NodeId sub, NodeId sup,
                    SubtypeMode mode);

// Decision procedures with cross-query caches for repeated questions about
// one graph. Results match the free functions exactly.
class StructuralDecider {
 public:
  explicit StructuralDecider(const RecordTypeGraph& g);

  bool equal(NodeId a, NodeId b);
  bool subtype(NodeId sub, NodeId sup, SubtypeMode mode);

 private:
  enum : std::uint8_t { kUnknown = 0, kProven = 1, kDisproven = 2 };

  std::size_t key(NodeId a, NodeId b) const { return a * n_ + b; }
  bool run_equal(NodeId a, NodeId b);
  bool equal_rec(NodeId a, NodeId b);
  bool run_variance(NodeId sub, NodeId sup);
  bool variance_rec(NodeId sub, NodeId sup);
  bool width_once(NodeId sub, NodeId sup);

  const RecordTypeGraph& g_;
  std::size_t n_;
  // Member lookup per node, name-sorted.
  std::vector<std::map<std::string_view, const RecordTypeGraph::Member*>>
      members_;
  std::vector<std::uint8_t> eq_state_, width_state_, var_state_;
  std::vector<std::uint8_t> hyp_;
  std::vector<std::size_t> hyp_keys_;
};

// Renders a node in mu-notation. Cyclic nodes get binders; acyclic nodes
// referenced deeper than inline_depth are named instead of expanded.
// Binder letters come from the node origins with numeric suffixes on
// collision; named definitions are appended, joined with "and".
std::string render_mu(const RecordTypeGraph& g, NodeId node,
                      const std::vector<std::string>& node_origin,
                      int inline_depth = 1);
std::string render_mu(const RecordType& rt, int inline_depth = 1);

}  // namespace nomstruct
