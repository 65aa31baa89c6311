#pragma once

#include <map>
#include <vector>

#include "starics/lambda_tree.hpp"

namespace starics {

struct GammaArc {
  IndexString from;
  IndexString to;
  ArcKind kind = ArcKind::horizontal;
  /// m_e (horizontal), d_e (vertical), or for threads the exact ratio c(u)/c(psi(u)).
  int indication = 0;
  /// Threads only: a_u of the thread tail, the other candidate divisor.
  int thread_a = 0;

  auto operator<=>(const GammaArc&) const = default;
};

/// Lambda_n plus its threads: an orientation of the quotient of ST_n by 1-ics classes.
struct GammaGraph {
  int n = 0;
  std::map<IndexString, LambdaNode> nodes;
  std::vector<GammaArc> arcs;  // sorted

  std::vector<GammaArc> threads() const;
  std::vector<GammaArc> out_arcs(const IndexString& id) const;
};

/// phi(u): the vertex with the same C-multiset that keeps its vertical arc.
IndexString thread_source(const IndexString& s);

/// psi(u), the head of phi(u)'s vertical arc. Requires b_u = 0 and a_u >= 2.
IndexString thread_target(const IndexString& s);

GammaGraph build_gamma(int n);

}  // namespace starics
