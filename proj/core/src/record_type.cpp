#include "nomstruct/record_type.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace nomstruct {

TableRecordTypes build_table_record_types(const ClassTable& table) {
  TableRecordTypes out;
  const auto& decls = table.declarations();
  out.graph.nodes.resize(decls.size());
  out.node_origin.reserve(decls.size());
  for (std::size_t i = 0; i < decls.size(); ++i) {
    out.class_node.emplace(decls[i].name, static_cast<NodeId>(i));
    out.node_origin.push_back(decls[i].name);
  }
  for (std::size_t i = 0; i < decls.size(); ++i) {
    ClassSignature sig = signature_of(table, decls[i].name);
    auto& members = out.graph.nodes[i].members;
    members.reserve(sig.members.size());
    for (auto& [name, msig] : sig.members) {
      RecordTypeGraph::Member member;
      member.kind = msig.kind;
      for (const std::string& p : msig.params)
        member.params.push_back(out.class_node.find(p)->second);
      member.type = out.class_node.find(msig.type)->second;
      members.emplace_back(name, std::move(member));
    }
  }
  return out;
}

RecordType record_type_of(const ClassTable& table, std::string_view name) {
  TableRecordTypes whole = build_table_record_types(table);
  auto root_it = whole.class_node.find(name);
  if (root_it == whole.class_node.end()) throw UnknownClassError(name);

  // Restrict to the subgraph reachable from the root; discovery order
  // numbers the nodes, root first.
  std::vector<NodeId> old_of_new;
  std::map<NodeId, NodeId> new_of_old;
  std::deque<NodeId> work{root_it->second};
  new_of_old.emplace(root_it->second, 0);
  old_of_new.push_back(root_it->second);
  auto reach = [&](NodeId old) {
    if (new_of_old.emplace(old, static_cast<NodeId>(old_of_new.size())).second) {
      old_of_new.push_back(old);
      work.push_back(old);
    }
  };
  while (!work.empty()) {
    NodeId old = work.front();
    work.pop_front();
    for (const auto& [mname, member] : whole.graph.nodes[old].members) {
      (void)mname;
      for (NodeId p : member.params) reach(p);
      reach(member.type);
    }
  }

  RecordType rt;
  rt.root = 0;
  rt.graph.nodes.resize(old_of_new.size());
  rt.node_origin.resize(old_of_new.size());
  for (std::size_t i = 0; i < old_of_new.size(); ++i) {
    NodeId old = old_of_new[i];
    rt.node_origin[i] = whole.node_origin[old];
    auto& members = rt.graph.nodes[i].members;
    for (const auto& [mname, member] : whole.graph.nodes[old].members) {
      RecordTypeGraph::Member remapped;
      remapped.kind = member.kind;
      for (NodeId p : member.params) remapped.params.push_back(new_of_old[p]);
      remapped.type = new_of_old[member.type];
      members.emplace_back(mname, std::move(remapped));
    }
  }
  return rt;
}

StructuralDecider::StructuralDecider(const RecordTypeGraph& g)
    : g_(g), n_(g.nodes.size()) {
  members_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (const auto& [name, member] : g.nodes[i].members) {
      members_[i].emplace(name, &member);
    }
  }
  eq_state_.assign(n_ * n_, kUnknown);
  width_state_.assign(n_ * n_, kUnknown);
  var_state_.assign(n_ * n_, kUnknown);
  hyp_.assign(n_ * n_, 0);
}

// The deciders assume each candidate pair while checking it; a pair already
// assumed counts as related. Failures never rest on an assumption, so a
// false answer is final and cached immediately. A true answer at the top
// means every assumption made along the way is part of a valid (bi)simulation
// and can be cached as proven.

bool StructuralDecider::equal_rec(NodeId a, NodeId b) {
  if (a == b) return true;
  if (a > b) std::swap(a, b);  // bisimilarity is symmetric
  std::size_t k = key(a, b);
  if (eq_state_[k] == kProven) return true;
  if (eq_state_[k] == kDisproven) return false;
  if (hyp_[k]) return true;
  hyp_[k] = 1;
  hyp_keys_.push_back(k);

  const auto& ma = members_[a];
  const auto& mb = members_[b];
  bool ok = ma.size() == mb.size();
  if (ok) {
    auto ita = ma.begin();
    auto itb = mb.begin();
    for (; ok && ita != ma.end(); ++ita, ++itb) {
      if (ita->first != itb->first) {
        ok = false;
        break;
      }
      const RecordTypeGraph::Member& x = *ita->second;
      const RecordTypeGraph::Member& y = *itb->second;
      if (x.kind != y.kind || x.params.size() != y.params.size()) {
        ok = false;
        break;
      }
      for (std::size_t i = 0; ok && i < x.params.size(); ++i)
        ok = equal_rec(x.params[i], y.params[i]);
      if (ok) ok = equal_rec(x.type, y.type);
    }
  }
  if (!ok) eq_state_[k] = kDisproven;
  return ok;
}

bool StructuralDecider::run_equal(NodeId a, NodeId b) {
  if (a == b) return true;
  if (a > b) std::swap(a, b);
  std::size_t k = key(a, b);
  if (eq_state_[k] == kProven) return true;
  if (eq_state_[k] == kDisproven) return false;
  hyp_keys_.clear();
  bool ok = equal_rec(a, b);
  for (std::size_t hk : hyp_keys_) {
    if (ok) eq_state_[hk] = kProven;
    hyp_[hk] = 0;
  }
  hyp_keys_.clear();
  return ok;
}

bool StructuralDecider::equal(NodeId a, NodeId b) { return run_equal(a, b); }

// Width-only subtyping: the sub side carries every member of the sup side,
// and shared members have bisimilar types. There is no recursion through
// the subtype relation itself, so no hypothesis set here.
bool StructuralDecider::width_once(NodeId sub, NodeId sup) {
  std::size_t k = key(sub, sup);
  if (width_state_[k] == kProven) return true;
  if (width_state_[k] == kDisproven) return false;

  bool ok = true;
  for (const auto& [name, y] : members_[sup]) {
    auto it = members_[sub].find(name);
    if (it == members_[sub].end()) {
      ok = false;
      break;
    }
    const RecordTypeGraph::Member& x = *it->second;
    if (x.kind != y->kind || x.params.size() != y->params.size()) {
      ok = false;
      break;
    }
    for (std::size_t i = 0; ok && i < x.params.size(); ++i)
      ok = run_equal(x.params[i], y->params[i]);
    if (ok) ok = run_equal(x.type, y->type);
    if (!ok) break;
  }
  width_state_[k] = ok ? kProven : kDisproven;
  return ok;
}

bool StructuralDecider::variance_rec(NodeId sub, NodeId sup) {
  if (sub == sup) return true;
  std::size_t k = key(sub, sup);
  if (var_state_[k] == kProven) return true;
  if (var_state_[k] == kDisproven) return false;
  if (hyp_[k]) return true;
  hyp_[k] = 1;
  hyp_keys_.push_back(k);

  bool ok = true;
  for (const auto& [name, y] : members_[sup]) {
    auto it = members_[sub].find(name);
    if (it == members_[sub].end()) {
      ok = false;
      break;
    }
    const RecordTypeGraph::Member& x = *it->second;
    if (x.kind != y->kind || x.params.size() != y->params.size()) {
      ok = false;
      break;
    }
    if (x.kind == MemberSig::Kind::Field) {
      ok = variance_rec(x.type, y->type);  // covariant
    } else {
      for (std::size_t i = 0; ok && i < x.params.size(); ++i)
        ok = variance_rec(y->params[i], x.params[i]);  // contravariant
      if (ok) ok = variance_rec(x.type, y->type);  // covariant return
    }
    if (!ok) break;
  }
  if (!ok) var_state_[k] = kDisproven;
  return ok;
}

bool StructuralDecider::run_variance(NodeId sub, NodeId sup) {
  if (sub == sup) return true;
  std::size_t k = key(sub, sup);
  if (var_state_[k] == kProven) return true;
  if (var_state_[k] == kDisproven) return false;
  hyp_keys_.clear();
  bool ok = variance_rec(sub, sup);
  for (std::size_t hk : hyp_keys_) {
    if (ok) var_state_[hk] = kProven;
    hyp_[hk] = 0;
  }
  hyp_keys_.clear();
  return ok;
}

bool StructuralDecider::subtype(NodeId sub, NodeId sup, SubtypeMode mode) {
  if (mode == SubtypeMode::WidthOnly) return width_once(sub, sup);
  return run_variance(sub, sup);
}

bool struct_equal(const RecordTypeGraph& g, NodeId a, NodeId b) {
  StructuralDecider decider(g);
  return decider.equal(a, b);
}

bool struct_subtype(const RecordTypeGraph& g, NodeId sub, NodeId sup,
                    SubtypeMode mode) {
  StructuralDecider decider(g);
  return decider.subtype(sub, sup, mode);
}

namespace {

// Rendering happens in two passes over the same traversal structure: the
// first assigns binder names (and so fixes the definition order), the
// second emits text. A reference is expanded in place when its target is
// acyclic and no deeper than inline_depth; anything else goes by name.
class MuRenderer {
 public:
  MuRenderer(const RecordTypeGraph& g, NodeId root,
             const std::vector<std::string>& origin, int inline_depth)
      : g_(g), origin_(origin), root_(root), depth_(inline_depth) {
    mark_reachable(root);
    for (NodeId x : reach_order_) cyclic_[x] = reaches_itself(x);
  }

  std::string render() {
    if (cyclic_[root_]) ensure_named(root_);
    name_pass(root_);
    for (std::size_t i = 0; i < named_order_.size(); ++i) {
      name_pass(named_order_[i]);
    }
    std::string out = "record_type ";
    if (auto it = names_.find(root_); it != names_.end()) {
      out += "μ" + it->second + ". ";
    }
    out += body(root_, 0);
    for (NodeId x : named_order_) {
      if (x == root_) continue;
      out += " and μ" + names_[x] + ". " + body(x, 0);
    }
    return out;
  }

 private:
  void mark_reachable(NodeId from) {
    if (!reachable_.insert(from).second) return;
    reach_order_.push_back(from);
    for (const auto& [name, m] : g_.nodes[from].members) {
      (void)name;
      for (NodeId p : m.params) mark_reachable(p);
      mark_reachable(m.type);
    }
  }

  bool reaches_itself(NodeId x) const {
    std::set<NodeId> seen;
    std::vector<NodeId> work;
    auto expand = [&](NodeId from) {
      for (const auto& [name, m] : g_.nodes[from].members) {
        (void)name;
        for (NodeId p : m.params)
          if (seen.insert(p).second) work.push_back(p);
        if (seen.insert(m.type).second) work.push_back(m.type);
      }
    };
    expand(x);
    while (!work.empty()) {
      NodeId cur = work.back();
      work.pop_back();
      if (cur == x) return true;
      expand(cur);
    }
    return false;
  }

  bool named_ref(NodeId target, int level) const {
    return cyclic_.at(target) || level + 1 > depth_;
  }

  void ensure_named(NodeId x) {
    if (names_.count(x)) return;
    std::string base = origin_[x].empty() ? "T" : origin_[x].substr(0, 1);
    std::string name = base;
    int suffix = 2;
    while (used_names_.count(name)) name = base + std::to_string(suffix++);
    used_names_.insert(name);
    names_.emplace(x, name);
    named_order_.push_back(x);
  }

  // Mirrors the emission recursion; visits method parameters before the
  // return type so definition order follows the written member structure.
  void name_pass(NodeId x, int level = 0) {
    if (level == 0) {
      if (!pass_done_.insert(x).second) return;
    }
    for (const auto& [name, m] : g_.nodes[x].members) {
      (void)name;
      auto ref = [&](NodeId t) {
        if (named_ref(t, level)) {
          ensure_named(t);
        } else {
          name_pass(t, level + 1);
        }
      };
      for (NodeId p : m.params) ref(p);
      ref(m.type);
    }
  }

  std::string type_ref(NodeId t, int level) {
    if (named_ref(t, level)) return names_.at(t);
    return "record_type " + body(t, level + 1);
  }

  std::string body(NodeId x, int level) {
    const auto& members = g_.nodes[x].members;
    if (members.empty()) return "{}";
    std::string out = "{ ";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) out += ", ";
      const auto& [name, m] = members[i];
      out += type_ref(m.type, level) + " " + name;
      if (m.kind == MemberSig::Kind::Method) {
        out += "(";
        for (std::size_t p = 0; p < m.params.size(); ++p) {
          if (p) out += ", ";
          out += type_ref(m.params[p], level);
        }
        out += ")";
      }
    }
    out += " }";
    return out;
  }

  const RecordTypeGraph& g_;
  const std::vector<std::string>& origin_;
  NodeId root_;
  int depth_;
  std::set<NodeId> reachable_;
  std::vector<NodeId> reach_order_;
  std::map<NodeId, bool> cyclic_;
  std::map<NodeId, std::string> names_;
  std::set<std::string> used_names_;
  std::vector<NodeId> named_order_;
  std::set<NodeId> pass_done_;
};

}  // namespace

std::string render_mu(const RecordTypeGraph& g, NodeId node,
                      const std::vector<std::string>& node_origin,
                      int inline_depth) {
  return MuRenderer(g, node, node_origin, inline_depth).render();
}

std::string render_mu(const RecordType& rt, int inline_depth) {
  return render_mu(rt.graph, rt.root, rt.node_origin, inline_depth);
}

}  // namespace nomstruct
