#include "starics/lambda_tree.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace starics {

namespace {

constexpr std::string_view kIndexDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2, got " + std::to_string(n));
}

int diameter_of(int n) { return (n - 1) / 2 + n - 1; }

// Predecessor on the root path and the kind of arc joining them.
std::pair<IndexString, ArcKind> predecessor(const IndexString& s) {
  auto idx = s.indices();
  if (idx.size() == 1) {
    idx.back() -= 1;
    return {IndexString(idx), ArcKind::horizontal};
  }
  if (idx.back() > idx[idx.size() - 2]) {
    idx.back() -= 1;
    return {IndexString(idx), ArcKind::horizontal};
  }
  idx.pop_back();
  return {IndexString(idx), ArcKind::vertical};
}

int multiplicity_of_last_step(const IndexString& s) {
  const auto t = s.steps();
  return static_cast<int>(std::count(t.begin(), t.end(), t.back()));
}

// Divisor c(tail)/c(head) of the vertical arc closing 1's cycle at `s`.
int closing_divisor(const IndexString& s) { return s.last_step() * multiplicity_of_last_step(s); }

Permutation close_first_cycle(const Permutation& sigma) {
  return apply_star_generator(sigma, sigma.position_of(1));
}

// Shared by both generators: fills the tree from the root, deciding which
// vertical arcs exist through `keep_vertical`.
template <typename KeepVertical>
LambdaTree grow(int n, bool pruned, KeepVertical keep_vertical) {
  LambdaTree tree;
  tree.n = n;
  tree.pruned = pruned;

  auto make_node = [&](const IndexString& id, Permutation sigma, BigInt card) {
    LambdaNode node;
    node.id = id;
    node.weight = id.last() + id.depth();
    node.ell = id.last() + 1;
    node.mult = n - node.ell;
    node.a = id.last_step();
    node.b = node.a >= 2 && keep_vertical(id) ? multiplicity_of_last_step(id) : 0;
    node.d = node.b * node.a;
    node.card = std::move(card);
    node.ics = ics_of(id);
    if (node.a >= 2) {
      node.sigma_closed = close_first_cycle(sigma);
      node.ctuple = id.steps();
    }
    node.sigma = std::move(sigma);
    return node;
  };

  std::vector<IndexString> work{IndexString{0}};
  tree.nodes.emplace(IndexString{0}, make_node(IndexString{0}, Permutation::identity(n), BigInt(1)));
  while (!work.empty()) {
    const IndexString id = work.back();
    work.pop_back();
    const LambdaNode& node = tree.nodes.at(id);
    if (node.mult > 0) {
      const IndexString next = id.advanced();
      auto child = make_node(next, apply_star_generator(node.sigma, node.ell + 1), node.card * node.mult);
      tree.arcs.push_back({id, next, ArcKind::horizontal, node.mult});
      tree.nodes.emplace(next, std::move(child));
      work.push_back(next);
    }
    if (node.b > 0) {
      const IndexString next = id.duplicated();
      const LambdaNode& tail = tree.nodes.at(id);
      auto child = make_node(next, *tail.sigma_closed,
                             exact_divide(tail.card, BigInt(tail.d), "vertical arc cardinality"));
      tree.arcs.push_back({id, next, ArcKind::vertical, tail.d});
      tree.nodes.emplace(next, std::move(child));
      work.push_back(next);
    }
  }
  std::sort(tree.arcs.begin(), tree.arcs.end());
  return tree;
}

std::string join_compact(const std::vector<int>& values) {
  std::string out;
  const bool compact =
      std::all_of(values.begin(), values.end(), [](int v) { return v >= 0 && v < 36; });
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (compact) {
      out.push_back(kIndexDigits[static_cast<std::size_t>(values[k])]);
    } else {
      if (k > 0) out.push_back('.');
      out += std::to_string(values[k]);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// IndexString

IndexString::IndexString(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("index string must be nonempty");
  for (int v : indices_)
    if (v < 0) throw std::invalid_argument("index string entries must be nonnegative");
}

IndexString IndexString::from_steps(const std::vector<int>& steps) {
  std::vector<int> idx;
  int running = 0;
  for (int t : steps) {
    running += t;
    idx.push_back(running);
  }
  return IndexString(std::move(idx));
}

std::vector<int> IndexString::steps() const {
  std::vector<int> t(indices_.size());
  int prev = 0;
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    t[k] = indices_[k] - prev;
    prev = indices_[k];
  }
  return t;
}

int IndexString::last_step() const {
  return indices_.size() == 1 ? indices_[0] : indices_.back() - indices_[indices_.size() - 2];
}

IndexString IndexString::advanced() const {
  auto idx = indices_;
  idx.back() += 1;
  return IndexString(std::move(idx));
}

IndexString IndexString::duplicated() const {
  auto idx = indices_;
  idx.push_back(idx.back());
  return IndexString(std::move(idx));
}

std::string IndexString::str() const { return join_compact(indices_); }

std::string IndexString::dotted() const {
  std::string out;
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k > 0) out.push_back('.');
    out += std::to_string(indices_[k]);
  }
  return out;
}

std::strong_ordering IndexString::operator<=>(const IndexString& other) const {
  if (auto c = indices_.size() <=> other.indices_.size(); c != 0) return c;
  return indices_ <=> other.indices_;
}

IndexString parse_index_string(const std::string& text) {
  std::vector<int> idx;
  if (text.find_first_of(".,") != std::string::npos) {
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, text.find('.') != std::string::npos ? '.' : ',')) {
      if (token.empty()) throw std::invalid_argument("empty index in '" + text + "'");
      std::size_t used = 0;
      idx.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument("bad index string '" + text + "'");
    }
  } else {
    for (char c : text) {
      const auto pos = kIndexDigits.find(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      if (pos == std::string_view::npos) throw std::invalid_argument("bad index string '" + text + "'");
      idx.push_back(static_cast<int>(pos));
    }
  }
  return IndexString(std::move(idx));
}

const char* arc_kind_name(ArcKind kind) {
  switch (kind) {
    case ArcKind::horizontal: return "horizontal";
    case ArcKind::vertical: return "vertical";
    case ArcKind::thread: return "thread";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// LambdaTree

const LambdaNode& LambdaTree::node(const IndexString& id) const {
  const auto it = nodes.find(id);
  if (it == nodes.end()) throw std::out_of_range("no vertex " + id.str() + " in Lambda_" + std::to_string(n));
  return it->second;
}

std::vector<TreeArc> LambdaTree::out_arcs(const IndexString& id) const {
  std::vector<TreeArc> out;
  for (const auto& arc : arcs)
    if (arc.from == id) out.push_back(arc);
  return out;
}

// ---------------------------------------------------------------------------
// Per-vertex formulas

bool is_admissible(const IndexString& s, int n) {
  if (n < 2) return false;
  const auto& idx = s.indices();
  const int j = s.depth();
  if (idx[0] > n - 1) return false;
  if (j > 0 && idx[0] < 2) return false;
  const auto t = s.steps();
  for (int k = 0; k + 1 <= j - 1; ++k)
    if (t[static_cast<std::size_t>(k)] > t[static_cast<std::size_t>(k + 1)]) return false;
  if (j > 0 && idx[static_cast<std::size_t>(j - 1)] > idx[static_cast<std::size_t>(j)]) return false;
  return s.last() <= n - 1;
}

int divisor_factor(const IndexString& s) {
  const auto t = s.steps();
  const int j = s.depth();
  if (j == 0) return s.first() > 1 ? 1 : 0;
  if (s.first() < 2) return 0;
  if (t[1] < s.first()) return 0;
  for (int k = 1; k < j; ++k)
    if (t[static_cast<std::size_t>(k)] > t[static_cast<std::size_t>(k + 1)]) return 0;
  return multiplicity_of_last_step(s);
}

int literal_divisor_factor(const IndexString& s) {
  if (divisor_factor(s) == 0) return 0;
  const auto t = s.steps();
  const bool all_equal = std::all_of(t.begin(), t.end(), [&](int v) { return v == t.front(); });
  return all_equal && s.depth() > 0 ? s.depth() + 1 : 1;
}

IcsKey ics_of(const IndexString& s) {
  auto t = s.steps();
  IcsKey key;
  key.c1 = t.back() + 1;
  t.pop_back();
  std::sort(t.begin(), t.end());
  key.others = std::move(t);
  return key;
}

LambdaNode node_attrs(const IndexString& s, int n) {
  require_n(n);
  if (!is_admissible(s, n))
    throw std::invalid_argument("index string " + s.str() + " is not a vertex of Lambda_" + std::to_string(n));
  LambdaNode node;
  node.id = s;
  node.weight = s.last() + s.depth();
  node.ell = s.last() + 1;
  node.mult = n - s.last() - 1;
  node.a = s.last_step();
  node.b = divisor_factor(s);
  node.d = node.a * node.b;
  node.ics = ics_of(s);
  node.card = class_size_closed(node.ics, n);
  if (node.a >= 2) node.ctuple = s.steps();
  return node;
}

std::vector<PathStep> path_to_root(const IndexString& s, int n) {
  require_n(n);
  if (!is_admissible(s, n))
    throw std::invalid_argument("index string " + s.str() + " is not a vertex of Lambda_" + std::to_string(n));
  std::vector<PathStep> reversed{{s, std::nullopt, 0}};
  IndexString current = s;
  while (!current.is_root()) {
    auto [prev, kind] = predecessor(current);
    const int indication = kind == ArcKind::horizontal ? n - prev.last() - 1 : closing_divisor(prev);
    reversed.push_back({prev, kind, indication});
    current = prev;
  }
  return {reversed.rbegin(), reversed.rend()};
}

BigInt class_size(const IndexString& s, int n) {
  BigInt card = 1;
  for (const auto& step : path_to_root(s, n)) {
    if (!step.next) break;
    if (*step.next == ArcKind::horizontal)
      card *= step.indication;
    else
      card = exact_divide(card, BigInt(step.indication), "class_size path product");
  }
  return card;
}

BigInt class_size_closed(const IcsKey& key, int n) {
  require_n(n);
  if (key.c1 < 1 || std::any_of(key.others.begin(), key.others.end(), [](int l) { return l < 2; }))
    throw std::invalid_argument("malformed 1-ics key " + format_ics(key));
  if (!key.fits(n)) throw std::invalid_argument("1-ics key " + format_ics(key) + " does not fit in S_" + std::to_string(n));
  BigInt denominator = 1;
  std::map<int, int> mult;
  for (int l : key.others) ++mult[l];
  for (const auto& [length, count] : mult) {
    for (int k = 0; k < count; ++k) denominator *= length;
    denominator *= factorial(count);
  }
  return exact_divide(falling_factorial(n - 1, key.last_index()), denominator, "class_size_closed");
}

IndexString string_of_perm(const Permutation& p) {
  const auto key = ics_key(p);
  auto steps = key.others;
  steps.push_back(key.c1 - 1);
  return IndexString::from_steps(steps);
}

// ---------------------------------------------------------------------------
// Trees

LambdaTree generate_pruned(int n) {
  require_n(n);
  return grow(n, true, [](const IndexString& id) { return divisor_factor(id) > 0; });
}

LambdaTree generate_unpruned(int n) {
  require_n(n);
  return grow(n, false, [](const IndexString&) { return true; });
}

PruneResult prune(const LambdaTree& unpruned) {
  PruneResult out;
  out.tree.n = unpruned.n;
  out.tree.pruned = true;
  std::set<std::vector<int>> seen_tuples;

  for (const auto& [id, original] : unpruned.nodes) {
    if (!id.is_root()) {
      const auto [prev, kind] = predecessor(id);
      const auto kept = out.tree.nodes.find(prev);
      if (kept == out.tree.nodes.end()) continue;
      if (kind == ArcKind::vertical && kept->second.b == 0) continue;
    }
    LambdaNode node = original;
    node.b = 0;
    if (node.ctuple) {
      auto multiset = *node.ctuple;
      std::sort(multiset.begin(), multiset.end());
      if (seen_tuples.insert(multiset).second) node.b = multiplicity_of_last_step(id);
    }
    node.d = node.b * node.a;

    LedgerRow row;
    row.id = id;
    row.weight = node.weight;
    row.sigma = format_prefix(node.sigma, node.ell);
    row.cycles = format_cycles(cycle_structure(node.sigma));
    row.ell = node.ell;
    if (node.sigma_closed) {
      row.sigma_closed = format_prefix(*node.sigma_closed, node.ell);
      row.cycles_closed = format_cycles(cycle_structure(*node.sigma_closed));
    }
    row.ctuple = node.ctuple;
    row.b = node.b;
    row.a = node.a;
    out.ledger.push_back(std::move(row));
    out.tree.nodes.emplace(id, std::move(node));
  }

  for (const auto& arc : unpruned.arcs) {
    if (!out.tree.contains(arc.from) || !out.tree.contains(arc.to)) continue;
    if (arc.kind == ArcKind::vertical && out.tree.node(arc.from).b == 0) continue;
    out.tree.arcs.push_back(arc);
  }
  return out;
}

std::string format_ledger(const std::vector<LedgerRow>& rows) {
  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"u(i,w)", "Sigma(u)Pi(u)", "l_u", "Sigma[u]Pi[u]", "C(u)", "b_ua_u"});
  for (const auto& r : rows) {
    cells.push_back({
        "u(" + r.id.str() + "," + std::to_string(r.weight) + ")",
        r.sigma + r.cycles,
        std::to_string(r.ell),
        r.sigma_closed + r.cycles_closed,
        r.ctuple ? join_compact(*r.ctuple) : std::string(),
        join_compact({r.b, r.a}),
    });
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table T_n

std::vector<IndexString> TableLayout::column(int omega) const {
  std::vector<IndexString> out;
  for (const auto& row : rows)
    for (const auto& id : row.nodes)
      if (id.last() + id.depth() == omega) out.push_back(id);
  return out;
}

TableLayout table_T(int n) {
  const LambdaTree tree = generate_pruned(n);
  TableLayout table;
  table.n = n;
  table.diameter = diameter_of(n);
  for (const auto& [id, node] : tree.nodes) {
    if (node.a != 0) continue;  // mhdps start at the root or at a vertical head
    TableRow row;
    row.depth = id.depth();
    for (IndexString cur = id;; cur = cur.advanced()) {
      row.nodes.push_back(cur);
      if (cur.last() == n - 1) break;
    }
    table.rows.push_back(std::move(row));
  }
  std::stable_sort(table.rows.begin(), table.rows.end(), [](const TableRow& x, const TableRow& y) {
    if (x.depth != y.depth) return x.depth < y.depth;
    if (x.nodes.size() != y.nodes.size()) return x.nodes.size() > y.nodes.size();
    return x.nodes.front() < y.nodes.front();
  });
  return table;
}

std::string format_table(const TableLayout& table) {
  const int columns = table.diameter + 1;
  std::vector<std::size_t> width(static_cast<std::size_t>(columns));
  for (int w = 0; w < columns; ++w) width[static_cast<std::size_t>(w)] = std::to_string(w).size();
  for (const auto& row : table.rows)
    for (const auto& id : row.nodes) {
      auto& cell = width[static_cast<std::size_t>(id.last() + id.depth())];
      cell = std::max(cell, id.str().size());
    }

  auto render = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (int w = 0; w < columns; ++w) {
      const auto& text = cells[static_cast<std::size_t>(w)];
      line += std::string(width[static_cast<std::size_t>(w)] - text.size(), ' ') + text;
      if (w + 1 < columns) line += ' ';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line + "\n";
  };

  std::vector<std::string> header;
  for (int w = 0; w < columns; ++w) header.push_back(std::to_string(w));
  std::string out = render(header);
  int depth = -1;
  for (const auto& row : table.rows) {
    if (row.depth != depth) {
      std::size_t total = 0;
      for (auto w : width) total += w + 1;
      out += std::string(total - 1, '-') + "\n";
      depth = row.depth;
    }
    std::vector<std::string> cells(static_cast<std::size_t>(columns));
    for (const auto& id : row.nodes) cells[static_cast<std::size_t>(id.last() + id.depth())] = id.str();
    out += render(cells);
  }
  return out;
}

}  // namespace starics
