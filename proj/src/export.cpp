#include "starics/export.hpp"

#include <sstream>
#include <stdexcept>

namespace starics {

namespace {

std::string quoted(const IndexString& id) { return "\"" + id.dotted() + "\""; }

ordered_json node_json(const LambdaNode& node) {
  ordered_json j;
  j["id"] = node.id.indices();
  j["w"] = node.weight;
  j["ell"] = node.ell;
  j["m"] = node.mult;
  j["a"] = node.a;
  j["b"] = node.b;
  j["d"] = node.d;
  j["card"] = to_decimal(node.card);
  j["sigma"] = std::vector<int>(node.sigma.entries().begin(), node.sigma.entries().end());
  j["ics"] = {{"c1", node.ics.c1}, {"others", node.ics.others}};
  return j;
}

void write_nodes_dot(std::ostringstream& out, const std::map<IndexString, LambdaNode>& nodes) {
  out << "  node [shape=box];\n";
  for (const auto& [id, node] : nodes)
    out << "  " << quoted(id) << " [label=\"" << id.dotted() << " | " << node.weight << ","
        << to_decimal(node.card) << "\"];\n";
}

// Horizontal arcs carry the tail's ell (the "*ell" reindexed multiplier),
// vertical ones the divisor d.
std::string arc_label(ArcKind kind, int indication, int tail_ell) {
  switch (kind) {
    case ArcKind::horizontal: return "*" + std::to_string(tail_ell);
    case ArcKind::vertical: return "/" + std::to_string(indication);
    case ArcKind::thread: return "/" + std::to_string(indication);
  }
  return {};
}

}  // namespace

std::string tree_to_dot(const LambdaTree& tree) {
  std::ostringstream out;
  out << "digraph Lambda_" << tree.n << " {\n";
  write_nodes_dot(out, tree.nodes);
  for (const auto& arc : tree.arcs)
    out << "  " << quoted(arc.from) << " -> " << quoted(arc.to) << " [style=solid, label=\""
        << arc_label(arc.kind, arc.indication, tree.node(arc.from).ell) << "\"];\n";
  out << "}\n";
  return out.str();
}

ordered_json tree_to_json(const LambdaTree& tree) {
  ordered_json doc;
  doc["n"] = tree.n;
  doc["pruned"] = tree.pruned;
  doc["nodes"] = ordered_json::array();
  for (const auto& [id, node] : tree.nodes) doc["nodes"].push_back(node_json(node));
  doc["arcs"] = ordered_json::array();
  for (const auto& arc : tree.arcs)
    doc["arcs"].push_back({{"from", arc.from.indices()},
                           {"to", arc.to.indices()},
                           {"kind", arc_kind_name(arc.kind)},
                           {"indication", arc.indication}});
  return doc;
}

LambdaTree tree_from_json(const nlohmann::json& doc) {
  LambdaTree tree;
  tree.n = doc.at("n").get<int>();
  tree.pruned = doc.at("pruned").get<bool>();
  for (const auto& j : doc.at("nodes")) {
    LambdaNode node;
    node.id = IndexString(j.at("id").get<std::vector<int>>());
    node.weight = j.at("w").get<int>();
    node.ell = j.at("ell").get<int>();
    node.mult = j.at("m").get<int>();
    node.a = j.at("a").get<int>();
    node.b = j.at("b").get<int>();
    node.d = j.at("d").get<int>();
    node.card = BigInt(j.at("card").get<std::string>());
    node.sigma = Permutation(j.at("sigma").get<std::vector<int>>());
    node.ics.c1 = j.at("ics").at("c1").get<int>();
    node.ics.others = j.at("ics").at("others").get<std::vector<int>>();
    if (node.a >= 2) {
      node.sigma_closed = apply_star_generator(node.sigma, node.sigma.position_of(1));
      node.ctuple = node.id.steps();
    }
    tree.nodes.emplace(node.id, std::move(node));
  }
  for (const auto& j : doc.at("arcs")) {
    TreeArc arc;
    arc.from = IndexString(j.at("from").get<std::vector<int>>());
    arc.to = IndexString(j.at("to").get<std::vector<int>>());
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "horizontal")
      arc.kind = ArcKind::horizontal;
    else if (kind == "vertical")
      arc.kind = ArcKind::vertical;
    else
      throw std::invalid_argument("tree arcs are horizontal or vertical, got '" + kind + "'");
    arc.indication = j.at("indication").get<int>();
    tree.arcs.push_back(std::move(arc));
  }
  return tree;
}

std::string gamma_to_dot(const GammaGraph& gamma) {
  std::ostringstream out;
  out << "digraph Gamma_" << gamma.n << " {\n";
  write_nodes_dot(out, gamma.nodes);
  for (const auto& arc : gamma.arcs) {
    const bool thread = arc.kind == ArcKind::thread;
    const int shown = thread ? arc.thread_a : arc.indication;
    out << "  " << quoted(arc.from) << " -> " << quoted(arc.to) << " [style=" << (thread ? "dashed" : "solid")
        << ", label=\"" << arc_label(arc.kind, shown, gamma.nodes.at(arc.from).ell) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

ordered_json gamma_to_json(const GammaGraph& gamma) {
  ordered_json doc;
  doc["n"] = gamma.n;
  doc["nodes"] = ordered_json::array();
  for (const auto& [id, node] : gamma.nodes) doc["nodes"].push_back(node_json(node));
  doc["arcs"] = ordered_json::array();
  for (const auto& arc : gamma.arcs) {
    ordered_json j{{"from", arc.from.indices()},
                   {"to", arc.to.indices()},
                   {"kind", arc_kind_name(arc.kind)},
                   {"indication", arc.indication}};
    if (arc.kind == ArcKind::thread) j["a"] = arc.thread_a;
    doc["arcs"].push_back(std::move(j));
  }
  return doc;
}

std::string distribution_csv(const WeightDistribution& classes, const WeightDistribution& vertices) {
  std::string out = "omega,classes,vertices\n";
  for (int w = 0; w <= vertices.max_weight(); ++w)
    out += std::to_string(w) + "," + to_decimal(classes[w]) + "," + to_decimal(vertices[w]) + "\n";
  return out;
}

ordered_json distribution_json(const WeightDistribution& classes, const WeightDistribution& vertices) {
  ordered_json doc;
  doc["n"] = vertices.n();
  doc["diameter"] = vertices.max_weight();
  doc["rows"] = ordered_json::array();
  for (int w = 0; w <= vertices.max_weight(); ++w)
    doc["rows"].push_back({{"omega", w}, {"classes", to_decimal(classes[w])}, {"vertices", to_decimal(vertices[w])}});
  doc["total_classes"] = to_decimal(classes.total());
  doc["total_vertices"] = to_decimal(vertices.total());
  return doc;
}

std::string eset_csv(const EsetDistribution& eset) {
  std::string out = "omega,vertices\n";
  for (std::size_t w = 0; w < eset.counts.size(); ++w)
    out += std::to_string(w) + "," + to_decimal(eset.counts[w]) + "\n";
  return out;
}

ordered_json eset_json(const EsetDistribution& eset) {
  ordered_json doc;
  doc["n"] = eset.n;
  doc["i"] = eset.symbol;
  doc["rows"] = ordered_json::array();
  for (std::size_t w = 0; w < eset.counts.size(); ++w)
    doc["rows"].push_back({{"omega", w}, {"vertices", to_decimal(eset.counts[w])}});
  doc["total"] = to_decimal(eset.total());
  return doc;
}

}  // namespace starics
