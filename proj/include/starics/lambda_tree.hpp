#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starics/big_int.hpp"
#include "starics/perm_core.hpp"

namespace starics {

/// The subindex string i_0 i_1 ... i_j naming a vertex of Lambda_n.
///
/// Ordering is the Pruning Algorithm's visiting order: shorter strings first,
/// then lexicographic by numeric index value.
class IndexString {
 public:
  IndexString() : indices_{0} {}
  explicit IndexString(std::vector<int> indices);
  IndexString(std::initializer_list<int> indices) : IndexString(std::vector<int>(indices)) {}

  /// Prefix sums of a t-sequence.
  static IndexString from_steps(const std::vector<int>& steps);

  const std::vector<int>& indices() const { return indices_; }
  int length() const { return static_cast<int>(indices_.size()); }
  /// j, the number of vertical arcs on the root path.
  int depth() const { return length() - 1; }
  int last() const { return indices_.back(); }
  int first() const { return indices_.front(); }

  /// t_k = i_k - i_{k-1} with i_{-1} = 0.
  std::vector<int> steps() const;
  int last_step() const;

  bool is_root() const { return indices_.size() == 1 && indices_[0] == 0; }

  IndexString advanced() const;    // horizontal successor: last index + 1
  IndexString duplicated() const;  // vertical successor: last index repeated

  /// Compact digits (a=10) when every index is below 36, else dot-separated decimals.
  std::string str() const;
  /// Always dot-separated decimals.
  std::string dotted() const;

  std::strong_ordering operator<=>(const IndexString& other) const;
  bool operator==(const IndexString& other) const = default;

 private:
  std::vector<int> indices_;
};

IndexString parse_index_string(const std::string& text);

enum class ArcKind { horizontal, vertical, thread };

const char* arc_kind_name(ArcKind kind);

struct TreeArc {
  IndexString from;
  IndexString to;
  ArcKind kind = ArcKind::horizontal;
  /// m_e for horizontal arcs, d_e for vertical arcs.
  int indication = 0;

  auto operator<=>(const TreeArc&) const = default;
};

struct LambdaNode {
  IndexString id;
  int weight = 0;
  int ell = 0;
  int mult = 0;  // m_u = n - ell, 0 at the end of an mhdp
  int a = 0;     // t_j
  int b = 0;
  int d = 0;     // b * a
  BigInt card;
  Permutation sigma = Permutation::identity(2);
  std::optional<Permutation> sigma_closed;  // absent for the first two vertices of an mhdp
  std::optional<std::vector<int>> ctuple;   // C(u) in t-sequence order
  IcsKey ics;

  bool operator==(const LambdaNode&) const = default;
};

struct LambdaTree {
  int n = 0;
  bool pruned = false;
  std::map<IndexString, LambdaNode> nodes;
  std::vector<TreeArc> arcs;

  const LambdaNode& node(const IndexString& id) const;
  bool contains(const IndexString& id) const { return nodes.count(id) != 0; }
  std::vector<TreeArc> out_arcs(const IndexString& id) const;

  bool operator==(const LambdaTree&) const = default;
};

struct LedgerRow {
  IndexString id;
  int weight = 0;
  std::string sigma;         // first ell symbols of Sigma(u)
  std::string cycles;        // Pi(u)
  int ell = 0;
  std::string sigma_closed;  // blank for the first two vertices of an mhdp
  std::string cycles_closed;
  std::optional<std::vector<int>> ctuple;
  int b = 0;
  int a = 0;
};

/// Admissibility of an index string inside Lambda_n.
bool is_admissible(const IndexString& s, int n);

/// Exact divisor factor b_u: 0 unless the vertex keeps its vertical arc,
/// otherwise the multiplicity of t_j among t_0..t_j.
int divisor_factor(const IndexString& s);

/// The b_u of the closed form read literally (1, or j+1 when all t's
/// agree). Differs from divisor_factor when t_j repeats but not every t does.
int literal_divisor_factor(const IndexString& s);

/// Every node field except Sigma(u) and Sigma[u], which need the path replay.
/// `card` comes from class_size_closed.
LambdaNode node_attrs(const IndexString& s, int n);

IcsKey ics_of(const IndexString& s);

/// Cardinality via the root path: product of m over horizontal tails divided
/// by product of d over vertical tails, exact at every step.
BigInt class_size(const IndexString& s, int n);

/// (n-1)! / ((n-1-i_j)! * prod l^{mult_l} * prod mult_l!) over the non-1 cycles.
BigInt class_size_closed(const IcsKey& key, int n);

IndexString string_of_perm(const Permutation& p);

struct PathStep {
  IndexString node;
  std::optional<ArcKind> next;  // arc leaving `node` along the path; empty at the target
  int indication = 0;
};

/// Root-to-target path in Lambda_n, reconstructed backwards along mhdps and
/// vertical predecessors.
std::vector<PathStep> path_to_root(const IndexString& s, int n);

LambdaTree generate_pruned(int n);
LambdaTree generate_unpruned(int n);

struct PruneResult {
  LambdaTree tree;
  std::vector<LedgerRow> ledger;
};

PruneResult prune(const LambdaTree& unpruned);

std::string format_ledger(const std::vector<LedgerRow>& rows);

struct TableRow {
  int depth = 0;
  std::vector<IndexString> nodes;  // one mhdp, in path order
};

struct TableLayout {
  int n = 0;
  int diameter = 0;
  std::vector<TableRow> rows;

  /// Index strings whose weight is `omega`, in row order.
  std::vector<IndexString> column(int omega) const;
};

TableLayout table_T(int n);

std::string format_table(const TableLayout& table);

}  // namespace starics
