#include "starics/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace starics::oracle {

namespace {

constexpr int kMaxN = 10;
constexpr std::uint8_t kUnseen = 0xFF;

using Word = std::array<std::int8_t, kMaxN>;

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t rank_word(const Word& w, int n) {
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int k = i + 1; k < n; ++k) smaller += w[static_cast<std::size_t>(k)] < w[static_cast<std::size_t>(i)];
    r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return r;
}

Word unrank_word(std::uint64_t r, int n) {
  std::array<int, kMaxN> digits{};
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(r % base);
    r /= base;
  }
  std::array<std::int8_t, kMaxN> pool{};
  for (int k = 0; k < n; ++k) pool[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(k + 1);
  int pool_size = n;
  Word w{};
  for (int i = 0; i < n; ++i) {
    const int d = digits[static_cast<std::size_t>(i)];
    w[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(d)];
    for (int k = d; k + 1 < pool_size; ++k) pool[static_cast<std::size_t>(k)] = pool[static_cast<std::size_t>(k + 1)];
    --pool_size;
  }
  return w;
}

Permutation to_permutation(const Word& w, int n) {
  return Permutation(std::vector<int>(w.begin(), w.begin() + n));
}

void guard(int n, int max_n, bool allow_ten, const char* what) {
  if (n < 2) throw std::invalid_argument(std::string(what) + " needs n >= 2");
  const int limit = allow_ten ? std::max(max_n, kMaxN) : max_n;
  if (n > limit) {
    const double megabytes = static_cast<double>(factorial_u64(std::min(n, 20))) / (1024.0 * 1024.0);
    std::ostringstream msg;
    msg << what << " refuses n = " << n << " (limit " << limit << "): the distance table alone needs about "
        << megabytes << " MB";
    if (n == kMaxN) msg << "; n = 10 must be requested explicitly";
    throw ResourceGuardError(msg.str());
  }
}

}  // namespace

int worker_limit() {
  if (const char* env = std::getenv("STAR_ICS_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t rank(const Permutation& p) {
  if (p.size() > kMaxN) throw std::invalid_argument("rank supports n <= 10");
  Word w{};
  for (int i = 0; i < p.size(); ++i) w[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(p.at(i + 1));
  return rank_word(w, p.size());
}

Permutation unrank(std::uint64_t r, int n) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("unrank supports 2 <= n <= 10");
  if (r >= factorial_u64(n)) throw std::invalid_argument("rank out of range");
  return to_permutation(unrank_word(r, n), n);
}

BfsResult bfs(int n, const BfsOptions& options) {
  guard(n, 9, options.allow_ten, "bfs");
  const std::uint64_t total = factorial_u64(n);
  BfsResult result;
  result.n = n;
  result.distance.assign(total, kUnseen);

  const int workers = static_cast<int>(std::max<std::size_t>(
      1, std::min<std::size_t>(static_cast<std::size_t>(options.threads > 0 ? options.threads : worker_limit()), 64)));

  std::vector<std::uint64_t> frontier{0};
  result.distance[0] = 0;
  std::uint8_t level = 0;
  while (!frontier.empty()) {
    // Workers only read `distance`; writes happen in the ordered merge below,
    // so the result is identical for any worker count.
    const std::size_t chunk = (frontier.size() + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
    std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(workers));
    auto expand = [&](std::size_t part) {
      const std::size_t begin = part * chunk;
      const std::size_t end = std::min(frontier.size(), begin + chunk);
      auto& out = found[part];
      for (std::size_t f = begin; f < end; ++f) {
        Word w = unrank_word(frontier[f], n);
        for (int i = 1; i < n; ++i) {
          std::swap(w[0], w[static_cast<std::size_t>(i)]);
          const auto r = rank_word(w, n);
          if (result.distance[r] == kUnseen) out.push_back(r);
          std::swap(w[0], w[static_cast<std::size_t>(i)]);
        }
      }
    };
    if (workers == 1 || frontier.size() < 4096) {
      for (std::size_t part = 0; part < found.size(); ++part) expand(part);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t part = 0; part < found.size(); ++part) pool.emplace_back(expand, part);
      for (auto& t : pool) t.join();
    }
    std::vector<std::uint64_t> next;
    for (const auto& part : found)
      for (auto r : part)
        if (result.distance[r] == kUnseen) {
          result.distance[r] = static_cast<std::uint8_t>(level + 1);
          next.push_back(r);
        }
    frontier = std::move(next);
    ++level;
  }

  for (auto d : result.distance) result.max_distance = std::max<int>(result.max_distance, d);
  result.histogram.assign(static_cast<std::size_t>(result.max_distance) + 1, 0);
  for (auto d : result.distance) ++result.histogram[d];
  return result;
}

ClassHistogram class_histogram(int n) {
  guard(n, 9, false, "class_histogram");
  return class_histogram(bfs(n));
}

ClassHistogram class_histogram(const BfsResult& distances) {
  ClassHistogram out;
  out.n = distances.n;
  for (std::uint64_t r = 0; r < distances.distance.size(); ++r) {
    const auto key = ics_key(to_permutation(unrank_word(r, distances.n), distances.n));
    auto& entry = out.classes[key];
    const int d = distances.distance[r];
    if (entry.size == 0) entry.distance = d;
    if (entry.distance != d) {
      entry.consistent = false;
      out.consistent = false;
    }
    ++entry.size;
  }
  return out;
}

std::vector<std::uint64_t> eset_histogram(int n, int symbol) {
  guard(n, 9, false, "eset_histogram");
  return eset_histogram(bfs(n), symbol);
}

std::vector<std::uint64_t> eset_histogram(const BfsResult& distances, int symbol) {
  const int n = distances.n;
  if (symbol < 1 || symbol > n) throw std::invalid_argument("symbol outside 1..n");
  // Lexicographic ranks: sigma_1 = symbol exactly on one contiguous block.
  const std::uint64_t block = factorial_u64(n - 1);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(distances.max_distance) + 1, 0);
  const auto begin = block * static_cast<std::uint64_t>(symbol - 1);
  for (std::uint64_t r = begin; r < begin + block; ++r) ++counts[distances.distance[r]];
  return counts;
}

// ---------------------------------------------------------------------------
// Quotient verification

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out = nlohmann::json::object();
  out["passed"] = passed();
  out["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    out["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"diagnostic", c.diagnostic}});
  return out;
}

std::string VerificationReport::summary() const {
  std::string out;
  for (const auto& c : checks) out += std::string(c.passed ? "PASS " : "FAIL ") + c.name + "\n";
  return out;
}

VerificationReport verify_quotient(int n, const GammaGraph& gamma) {
  guard(n, 8, false, "verify_quotient");
  if (gamma.n != n) throw std::invalid_argument("verify_quotient: Gamma graph built for a different n");
  const std::uint64_t total = factorial_u64(n);

  std::vector<IndexString> ids;
  std::map<IndexString, int> index_of;
  for (const auto& [id, node] : gamma.nodes) {
    index_of.emplace(id, static_cast<int>(ids.size()));
    ids.push_back(id);
  }

  VerificationReport report;

  // Class of every vertex.
  std::vector<int> cls(total, -1);
  std::vector<std::uint64_t> observed(ids.size(), 0);
  nlohmann::json unknown = nlohmann::json::array();
  for (std::uint64_t r = 0; r < total; ++r) {
    const auto id = string_of_perm(to_permutation(unrank_word(r, n), n));
    const auto it = index_of.find(id);
    if (it == index_of.end()) {
      if (unknown.size() < 20) unknown.push_back(id.str());
      continue;
    }
    cls[r] = it->second;
    ++observed[static_cast<std::size_t>(it->second)];
  }

  {
    CheckResult c{"class_sizes", unknown.empty(), nlohmann::json::object()};
    nlohmann::json mismatches = nlohmann::json::array();
    for (std::size_t k = 0; k < ids.size(); ++k) {
      const auto& card = gamma.nodes.at(ids[k]).card;
      if (card != observed[k]) {
        c.passed = false;
        mismatches.push_back({{"node", ids[k].str()}, {"c", to_decimal(card)}, {"observed", observed[k]}});
      }
    }
    c.diagnostic = {{"classes", ids.size()}, {"unmapped_vertices", unknown}, {"mismatches", mismatches}};
    report.checks.push_back(std::move(c));
  }

  struct Fiber {
    std::uint64_t edges = 0;
    std::unordered_map<std::uint64_t, int> tail_degree;
    std::unordered_map<std::uint64_t, int> head_degree;
  };
  std::map<std::pair<int, int>, std::size_t> arc_of;
  for (std::size_t k = 0; k < gamma.arcs.size(); ++k)
    arc_of.emplace(std::pair{index_of.at(gamma.arcs[k].from), index_of.at(gamma.arcs[k].to)}, k);
  std::vector<Fiber> fibers(gamma.arcs.size());
  std::map<std::pair<int, int>, std::uint64_t> uncovered;
  std::map<std::pair<int, int>, std::uint64_t> doubly_covered;
  std::uint64_t intra_class = 0;
  std::uint64_t edges = 0;

  for (std::uint64_t r = 0; r < total; ++r) {
    Word w = unrank_word(r, n);
    for (int i = 1; i < n; ++i) {
      std::swap(w[0], w[static_cast<std::size_t>(i)]);
      const auto q = rank_word(w, n);
      std::swap(w[0], w[static_cast<std::size_t>(i)]);
      if (q < r) continue;  // each edge once
      ++edges;
      const int cu = cls[r], cv = cls[q];
      if (cu < 0 || cv < 0) continue;
      if (cu == cv) {
        ++intra_class;
        continue;
      }
      const auto forward = arc_of.find({cu, cv});
      const auto backward = arc_of.find({cv, cu});
      if (forward != arc_of.end() && backward != arc_of.end()) {
        ++doubly_covered[{std::min(cu, cv), std::max(cu, cv)}];
        continue;
      }
      if (forward == arc_of.end() && backward == arc_of.end()) {
        ++uncovered[{std::min(cu, cv), std::max(cu, cv)}];
        continue;
      }
      const bool is_forward = forward != arc_of.end();
      auto& fiber = fibers[is_forward ? forward->second : backward->second];
      ++fiber.edges;
      ++fiber.tail_degree[is_forward ? r : q];
      ++fiber.head_degree[is_forward ? q : r];
    }
  }

  {
    CheckResult c{"no_intra_class_edges", intra_class == 0, {{"intra_class_edges", intra_class}}};
    report.checks.push_back(std::move(c));
  }

  {
    std::uint64_t uncovered_edges = 0;
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [pair, count] : uncovered) {
      uncovered_edges += count;
      if (pairs.size() < 50) pairs.push_back({{"classes", {ids[static_cast<std::size_t>(pair.first)].str(), ids[static_cast<std::size_t>(pair.second)].str()}}, {"edges", count}});
    }
    nlohmann::json doubled = nlohmann::json::array();
    for (const auto& [pair, count] : doubly_covered)
      doubled.push_back({{"classes", {ids[static_cast<std::size_t>(pair.first)].str(), ids[static_cast<std::size_t>(pair.second)].str()}}, {"edges", count}});
    CheckResult c{"edge_projection", uncovered.empty() && doubly_covered.empty(), nlohmann::json::object()};
    c.diagnostic = {{"edges", edges},
                    {"arcs", gamma.arcs.size()},
                    {"uncovered_class_pairs", uncovered.size()},
                    {"uncovered_edges", uncovered_edges},
                    {"uncovered_examples", pairs},
                    {"pairs_with_arcs_both_ways", doubled}};
    report.checks.push_back(std::move(c));
  }

  CheckResult horizontal{"horizontal_fibers", true, nlohmann::json::array()};
  CheckResult vertical{"vertical_fibers", true, nlohmann::json::array()};
  nlohmann::json thread_divisors = nlohmann::json::array();
  for (std::size_t k = 0; k < gamma.arcs.size(); ++k) {
    const auto& arc = gamma.arcs[k];
    const auto& fiber = fibers[k];
    const BigInt& tail_card = gamma.nodes.at(arc.from).card;
    const BigInt& head_card = gamma.nodes.at(arc.to).card;
    auto all_equal = [](const std::unordered_map<std::uint64_t, int>& degrees, int value) {
      return std::all_of(degrees.begin(), degrees.end(), [&](const auto& e) { return e.second == value; });
    };
    bool ok = false;
    nlohmann::json detail = {{"arc", arc.from.str() + "->" + arc.to.str()},
                             {"kind", arc_kind_name(arc.kind)},
                             {"edges", fiber.edges},
                             {"indication", arc.indication}};
    if (arc.kind == ArcKind::horizontal) {
      // c(head) edges in c(tail) groups of m_e, one per head vertex.
      ok = head_card == fiber.edges && tail_card == fiber.tail_degree.size() &&
           all_equal(fiber.tail_degree, arc.indication) && all_equal(fiber.head_degree, 1);
      if (!ok) {
        horizontal.passed = false;
        horizontal.diagnostic.push_back(detail);
      }
    } else {
      // c(tail) edges in c(head) groups, one per tail vertex.
      int group = fiber.head_degree.empty() ? 0 : fiber.head_degree.begin()->second;
      ok = tail_card == fiber.edges && head_card == fiber.head_degree.size() && all_equal(fiber.tail_degree, 1) &&
           all_equal(fiber.head_degree, group) && group == arc.indication;
      if (arc.kind == ArcKind::thread)
        thread_divisors.push_back({{"arc", arc.from.str() + "->" + arc.to.str()},
                                   {"group_size", group},
                                   {"ratio", arc.indication},
                                   {"a_u", arc.thread_a}});
      if (!ok) {
        vertical.passed = false;
        vertical.diagnostic.push_back(detail);
      }
    }
  }
  vertical.diagnostic = {{"failures", vertical.diagnostic}, {"threads", thread_divisors}};
  horizontal.diagnostic = {{"failures", horizontal.diagnostic}};
  report.checks.push_back(std::move(horizontal));
  report.checks.push_back(std::move(vertical));
  return report;
}

CheckResult spot_check_thread(const GammaGraph& gamma, const IndexString& tail) {
  const auto& node = gamma.nodes.at(tail);
  const auto head = thread_target(tail);
  const auto moved = apply_star_generator(node.sigma, node.sigma.position_of(1));
  const auto landed = string_of_perm(moved);
  CheckResult c{"thread_" + tail.str() + "_" + head.str(), landed == head && gamma.nodes.count(head) == 1,
                {{"tail", tail.str()}, {"expected_head", head.str()}, {"landed", landed.str()}}};
  return c;
}

}  // namespace starics::oracle
