#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zipkit/engine.hpp"

namespace zipkit {

struct DumpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat snapshot of one tree node. `id` is the stable right-based sibling path
// (immune to later prepends), `position` the left-based path that replays to
// the node in the tree as dumped, `proved` the bottom-up recomputation. The
// per-kind extras are meaningful only for their kind and defaulted otherwise.
struct DumpNode {
  std::string id;
  std::string parent;
  int level = 0;
  std::string kind;
  std::string label;
  Position position;
  bool proved = false;

  std::string solved;                     // goal_state: stored label
  std::vector<std::size_t> goal_indices;  // cluster
  std::string name;                       // action
  std::size_t goal_index = 0;             // action
  bool enabled = false;                   // action
  double score = 0.0;                     // action
  std::string result;                     // application
  bool promising = false;                 // application
};

struct TreeDump {
  int schema_version = 1;
  std::int64_t revision = 0;
  std::string status;
  std::vector<DumpNode> nodes;
  std::vector<TraceStep> trace;
};

namespace dump_detail {

// Document-order walk over the whole tree, parents before children, forcing
// the pure child suspensions read-only. Returns each subtree's proved verdict
// so it can be stamped onto the emitted node after its children are known.
template <class Kit>
class Walker {
 public:
  explicit Walker(const typename Kit::State& s) : s_(s) {}

  std::vector<DumpNode> run(const typename Kit::Co1& root) {
    const auto& co = root.first.container;
    for (std::size_t i = 0; i < co.size(); ++i) walk<0>(co[i], "", Position{}, i, co.size() - 1 - i);
    return std::move(out_);
  }

 private:
  template <std::size_t I>
  bool walk(const typename Kit::template Node<I>& n, const std::string& parent_id,
            const Position& parent_pos, std::size_t left, std::size_t right) {
    std::string id = parent_id.empty() ? std::to_string(right) : parent_id + "." + std::to_string(right);
    Position pos = parent_pos;
    pos.insert(pos.begin(), std::vector<std::int64_t>{static_cast<std::int64_t>(left)});

    std::size_t at = out_.size();
    out_.push_back(describe<I>(n.content, id, parent_id, pos));

    auto forced = n.next.run(s_);
    bool proved = false;
    if (!succeeded(forced)) {
      proved = leaf_proved<I>(n.content);
    } else {
      const auto& kids = std::get<1>(forced).first;
      constexpr std::size_t J = (I + 1) % Kit::level_count;
      bool all = true, any = false;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        bool p = walk<J>(kids[i], id, pos, i, kids.size() - 1 - i);
        all = all && p;
        any = any || p;
      }
      if constexpr (I == 0)
        proved = n.content.state.goals.empty() || (!kids.empty() && all);
      else if constexpr (I == 3)
        proved = all;
      else
        proved = any;
    }
    out_[at].proved = proved;
    return proved;
  }

  template <std::size_t I, class C>
  bool leaf_proved(const C& content) const {
    if constexpr (I == 0)
      return content.state.goals.empty();
    else if constexpr (I == 3)
      return true;
    else
      return false;
  }

  template <std::size_t I, class C>
  DumpNode describe(const C& content, std::string id, std::string parent, Position pos) const {
    DumpNode n;
    n.id = std::move(id);
    n.parent = std::move(parent);
    n.level = static_cast<int>(I);
    n.position = std::move(pos);
    if constexpr (I == 0) {
      n.kind = "goal_state";
      n.label = to_string(content.state);
      n.solved = to_string(content.solved);
    } else if constexpr (I == 1) {
      n.kind = "cluster";
      n.label = to_string(content.cluster_state);
      n.goal_indices = content.goal_indices;
    } else if constexpr (I == 2) {
      n.kind = "action";
      n.label = content.name + " @" + std::to_string(content.goal_index);
      n.name = content.name;
      n.goal_index = content.goal_index;
      n.enabled = content.priority.enabled;
      n.score = content.priority.score;
    } else {
      n.kind = "application";
      n.label = content.result;
      n.result = content.result;
      n.promising = content.promising;
    }
    return n;
  }

  const typename Kit::State& s_;
  std::vector<DumpNode> out_;
};

}  // namespace dump_detail

template <class Kit>
TreeDump build_dump(const typename Kit::Co1& root, const typename Kit::State& s, Status status,
                    const std::vector<TraceStep>& trace) {
  TreeDump d;
  d.revision = s.revision;
  d.status = to_string(status);
  d.nodes = dump_detail::Walker<Kit>(s).run(root);
  d.trace = trace;
  return d;
}

// ----- JSON ---------------------------------------------------------------

using ojson = nlohmann::ordered_json;

inline ojson to_json(const TraceStep& t) {
  return ojson{{"step", t.step},       {"action", t.action},   {"goal_index", t.goal_index},
               {"score", t.score},     {"node_id", t.node_id}, {"position", t.position},
               {"applied", t.applied}, {"revision", t.revision}};
}

inline ojson to_json(const DumpNode& n) {
  ojson o{{"id", n.id},       {"parent", n.parent},     {"level", n.level},   {"kind", n.kind},
          {"label", n.label}, {"position", n.position}, {"proved", n.proved}};
  if (n.kind == "goal_state") o["solved"] = n.solved;
  if (n.kind == "cluster") o["goal_indices"] = n.goal_indices;
  if (n.kind == "action") {
    o["name"] = n.name;
    o["goal_index"] = n.goal_index;
    o["enabled"] = n.enabled;
    o["score"] = n.score;
  }
  if (n.kind == "application") {
    o["result"] = n.result;
    o["promising"] = n.promising;
  }
  return o;
}

inline std::string export_json(const TreeDump& d) {
  ojson o{{"schema_version", d.schema_version}, {"revision", d.revision}, {"status", d.status}};
  o["nodes"] = ojson::array();
  for (const auto& n : d.nodes) o["nodes"].push_back(to_json(n));
  o["trace"] = ojson::array();
  for (const auto& t : d.trace) o["trace"].push_back(to_json(t));
  return o.dump(2) + "\n";
}

// Reads a dump back, ignoring fields it does not know so newer writers stay
// readable. Missing fields fall back to defaults; a wrong top-level shape or
// unreadable JSON throws DumpError.
inline TreeDump parse_dump(const std::string& text) {
  ojson o;
  try {
    o = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DumpError(std::string("dump: invalid JSON: ") + e.what());
  }
  if (!o.is_object()) throw DumpError("dump: expected a top-level object");

  TreeDump d;
  d.schema_version = o.value("schema_version", 1);
  d.revision = o.value("revision", static_cast<std::int64_t>(0));
  d.status = o.value("status", std::string{});

  if (o.contains("nodes")) {
    if (!o["nodes"].is_array()) throw DumpError("dump: \"nodes\" is not an array");
    for (const auto& j : o["nodes"]) {
      DumpNode n;
      n.id = j.value("id", std::string{});
      n.parent = j.value("parent", std::string{});
      n.level = j.value("level", 0);
      n.kind = j.value("kind", std::string{});
      n.label = j.value("label", std::string{});
      if (j.contains("position")) n.position = j["position"].get<Position>();
      n.proved = j.value("proved", false);
      n.solved = j.value("solved", std::string{});
      if (j.contains("goal_indices")) n.goal_indices = j["goal_indices"].get<std::vector<std::size_t>>();
      n.name = j.value("name", std::string{});
      n.goal_index = j.value("goal_index", static_cast<std::size_t>(0));
      n.enabled = j.value("enabled", false);
      n.score = j.value("score", 0.0);
      n.result = j.value("result", std::string{});
      n.promising = j.value("promising", false);
      d.nodes.push_back(std::move(n));
    }
  }
  if (o.contains("trace")) {
    if (!o["trace"].is_array()) throw DumpError("dump: \"trace\" is not an array");
    for (const auto& j : o["trace"]) {
      TraceStep t;
      t.step = j.value("step", static_cast<std::size_t>(0));
      t.action = j.value("action", std::string{});
      t.goal_index = j.value("goal_index", static_cast<std::size_t>(0));
      t.score = j.value("score", 0.0);
      t.node_id = j.value("node_id", std::string{});
      if (j.contains("position")) t.position = j["position"].get<Position>();
      t.applied = j.value("applied", true);
      t.revision = j.value("revision", static_cast<std::int64_t>(0));
      d.trace.push_back(std::move(t));
    }
  }
  return d;
}

// ----- DOT ------------------------------------------------------------------

namespace dump_detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace dump_detail

// Goal states draw solid, clusters dotted, actions dashed, applications
// rounded; everything proved is bold, and an edge is bold when both of its
// ends are, so the extracted proof stands out. Sibling order is reversed on
// output: the tree prepends new applications, the picture reads in creation
// order.
inline std::string export_dot(const TreeDump& d) {
  std::map<std::string, bool> proved;
  std::map<std::string, std::vector<const DumpNode*>> children;
  std::vector<const DumpNode*> order;
  for (const auto& n : d.nodes) {
    proved[n.id] = n.proved;
    order.push_back(&n);
    if (!n.parent.empty()) children[n.parent].push_back(&n);
  }

  std::string out = "digraph proof {\n  rankdir=TB;\n  node [fontname=\"Helvetica\"];\n";
  for (const DumpNode* n : order) {
    std::string shape, style;
    if (n->kind == "goal_state") {
      shape = "box";
      style = "solid";
    } else if (n->kind == "cluster") {
      shape = "ellipse";
      style = "dotted";
    } else if (n->kind == "action") {
      shape = "ellipse";
      style = "dashed";
    } else {
      shape = "box";
      style = "rounded";
    }
    if (n->proved) style += ",bold";
    out += "  \"" + n->id + "\" [shape=" + shape + ", style=\"" + style + "\", label=\"" +
           dump_detail::dot_escape(n->label) + "\"];\n";
  }
  for (const DumpNode* n : order) {
    auto it = children.find(n->id);
    if (it == children.end()) continue;
    const auto& kids = it->second;
    for (auto k = kids.rbegin(); k != kids.rend(); ++k) {
      bool bold = n->proved && (*k)->proved;
      out += "  \"" + n->id + "\" -> \"" + (*k)->id + "\"";
      if (bold) out += " [style=bold]";
      out += ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace zipkit
