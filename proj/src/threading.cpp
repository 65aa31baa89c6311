#include "starics/threading.hpp"

#include <algorithm>
#include <stdexcept>

namespace starics {

std::vector<GammaArc> GammaGraph::threads() const {
  std::vector<GammaArc> out;
  std::copy_if(arcs.begin(), arcs.end(), std::back_inserter(out),
               [](const GammaArc& arc) { return arc.kind == ArcKind::thread; });
  return out;
}

std::vector<GammaArc> GammaGraph::out_arcs(const IndexString& id) const {
  std::vector<GammaArc> out;
  std::copy_if(arcs.begin(), arcs.end(), std::back_inserter(out),
               [&](const GammaArc& arc) { return arc.from == id; });
  return out;
}

IndexString thread_source(const IndexString& s) {
  if (s.last_step() < 2 || divisor_factor(s) != 0)
    throw std::invalid_argument("vertex " + s.str() + " does not start a thread (needs b_u = 0, a_u >= 2)");
  auto steps = s.steps();
  std::sort(steps.begin(), steps.end());
  return IndexString::from_steps(steps);
}

IndexString thread_target(const IndexString& s) { return thread_source(s).duplicated(); }

GammaGraph build_gamma(int n) {
  const LambdaTree tree = generate_pruned(n);
  GammaGraph gamma;
  gamma.n = n;
  gamma.nodes = tree.nodes;
  for (const auto& arc : tree.arcs) gamma.arcs.push_back({arc.from, arc.to, arc.kind, arc.indication, 0});
  for (const auto& [id, node] : tree.nodes) {
    if (node.b != 0 || node.a < 2) continue;
    const IndexString head = thread_target(id);
    const BigInt ratio = exact_divide(node.card, tree.node(head).card, "thread divisor");
    gamma.arcs.push_back({id, head, ArcKind::thread, static_cast<int>(ratio), node.a});
  }
  std::sort(gamma.arcs.begin(), gamma.arcs.end());
  return gamma;
}

}  // namespace starics
