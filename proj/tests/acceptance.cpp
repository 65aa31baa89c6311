// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance [--deep] [--only K] [--skip K]
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "starics/distributions.hpp"
#include "starics/lambda_tree.hpp"
#include "starics/oracle.hpp"
#include "starics/threading.hpp"

using namespace starics;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

bool deep = false;

std::vector<BigInt> to_big(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + to_decimal(x);
  return "[" + s + "]";
}

int max_oracle_n() { return deep ? 9 : 8; }

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= max_oracle_n(); ++n) {
    const auto bfs = to_big(oracle::bfs(n).histogram);
    if (bfs != vertex_weight_distribution(n).counts()) {
      o.passed = false;
      o.detail += " n=" + std::to_string(n) + " bfs=" + join(bfs);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail += " n=2.." + std::to_string(max_oracle_n()) + " in " + std::to_string(secs) + "s";
  if (secs > 60) o.passed = false;
  return o;
}

Outcome reference_figures() {
  const auto d4 = vertex_weight_distribution(4).counts();
  const auto d5 = vertex_weight_distribution(5).counts();
  const std::vector<BigInt> e4{1, 3, 6, 9, 5}, e5{1, 4, 12, 30, 44, 26, 3};
  return {d4 == e4 && d5 == e5, " dist(4)=" + join(d4) + " dist(5)=" + join(d5)};
}

Outcome mass_conservation() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 40; ++n)
    if (vertex_weight_distribution(n, Method::enumerate).total() != factorial(n)) {
      o.passed = false;
      o.detail += " n=" + std::to_string(n);
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail += " n=2..40 in " + std::to_string(secs) + "s";
  if (secs > 5) o.passed = false;
  return o;
}

Outcome ledger_fidelity() {
  struct Expected {
    IndexString id;
    std::string sigma;
    int ell;
    std::string sigma_closed;
    std::multiset<int> c;
    int b, a;
  };
  // ell = 0 marks a row whose ell is not printed.
  const std::vector<Expected> rows{
      {{0}, "1", 1, "", {}, 0, 0},
      {{3, 5}, "642315", 6, "142365", {3, 2}, 0, 2},
      {{2, 4, 4}, "13254", 5, "", {}, 0, 0},
      {{2, 4, 6, 7}, "83254761", 8, "", {}, 0, 1},
  };
  const auto ledger = prune(generate_unpruned(9)).ledger;
  Outcome o;
  for (const auto& e : rows) {
    const auto it = std::find_if(ledger.begin(), ledger.end(), [&](const LedgerRow& r) { return r.id == e.id; });
    bool ok = it != ledger.end();
    if (ok) {
      const std::multiset<int> c = it->ctuple ? std::multiset<int>(it->ctuple->begin(), it->ctuple->end())
                                              : std::multiset<int>{};
      ok = it->sigma == e.sigma && it->ell == e.ell && it->sigma_closed == e.sigma_closed && c == e.c &&
           it->b == e.b && it->a == e.a;
    }
    o.passed = o.passed && ok;
    o.detail += " u(" + e.id.str() + ")" + (ok ? "=" : "!=");
  }
  return o;
}

Outcome thread_fidelity() {
  const std::set<std::string> expected{"35->255", "46->266",   "47->377",   "57->277",  "58->388",
                                       "68->288", "257->2477", "268->2488", "368->2588"};
  std::set<std::string> got;
  for (const auto& arc : build_gamma(9).threads()) got.insert(arc.from.str() + "->" + arc.to.str());
  std::string detail;
  for (const auto& t : got) detail += " " + t;
  return {got == expected, detail};
}

Outcome diameter_check() {
  Outcome o;
  for (int n = 2; n <= max_oracle_n(); ++n) {
    const int bfs = oracle::bfs(n).max_distance;
    if (bfs != diameter(n)) {
      o.passed = false;
      o.detail += " n=" + std::to_string(n) + " bfs=" + std::to_string(bfs);
    }
  }
  o.passed = o.passed && diameter(9) == 12;
  o.detail += " diameter(9)=" + std::to_string(diameter(9));
  return o;
}

Outcome antipodes() {
  Outcome o;
  const std::map<int, BigInt> expected{{5, 3}, {7, 15}, {9, 105}};
  for (const auto& [n, count] : expected) {
    const auto& counts = vertex_weight_distribution(n).counts();
    const bool ok = counts.back() == count && antipode_count(n) == count &&
                    oracle::bfs(n).histogram.back() == count.convert_to<std::uint64_t>();
    o.passed = o.passed && ok;
    o.detail += " n=" + std::to_string(n) + ":" + to_decimal(counts.back());
  }
  return o;
}

Outcome esets() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    const auto bfs = oracle::bfs(n);
    const auto prev = vertex_weight_distribution(n - 1).counts();
    for (int i = 1; i <= n; ++i) {
      const auto formula = eset_distribution(n, i).counts;
      auto oracle_counts = to_big(oracle::eset_histogram(bfs, i));
      oracle_counts.resize(formula.size(), 0);
      bool ok = formula == oracle_counts;
      if (i >= 2)
        for (std::size_t w = 1; w <= prev.size(); ++w) ok = ok && formula[w] == prev[w - 1];
      if (!ok) {
        o.passed = false;
        o.detail += " n=" + std::to_string(n) + ",i=" + std::to_string(i);
      }
    }
  }
  if (o.passed) o.detail = " n=3..8, every i";
  return o;
}

Outcome quotient_orientation() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    const auto report = oracle::verify_quotient(n, build_gamma(n));
    for (const auto& c : report.checks)
      if (!c.passed) {
        o.passed = false;
        o.detail += " n=" + std::to_string(n) + ":" + c.name;
      }
  }
  if (!o.passed) {
    const auto r4 = oracle::verify_quotient(4, build_gamma(4));
    o.detail += " | n=4 edge_projection " + r4.check("edge_projection").diagnostic.dump();
  }
  return o;
}

Outcome pruning_equals_generation() {
  Outcome o;
  for (int n = 2; n <= 12; ++n)
    if (prune(generate_unpruned(n)).tree.nodes != generate_pruned(n).nodes) {
      o.passed = false;
      o.detail += " n=" + std::to_string(n);
    }
  if (o.passed) o.detail = " n=2..12";
  return o;
}

Outcome cardinalities() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    const auto classes = oracle::class_histogram(n);
    for (const auto& [id, node] : generate_pruned(n).nodes) {
      const auto path = class_size(id, n);
      const auto closed = class_size_closed(node.ics, n);
      const auto it = classes.classes.find(node.ics);
      if (path != closed || it == classes.classes.end() || BigInt(it->second.size) != path) {
        o.passed = false;
        o.detail += " n=" + std::to_string(n) + ":" + id.str();
      }
    }
  }
  for (int n = 9; n <= 40; ++n)
    for (const auto& [id, node] : generate_pruned(n).nodes)
      if (class_size(id, n) != class_size_closed(node.ics, n)) {
        o.passed = false;
        o.detail += " n=" + std::to_string(n) + ":" + id.str();
      }
  const auto c = class_size(parse_index_string("2468aa"), 11);
  o.passed = o.passed && c == 945;
  o.detail += " c(2468aa,11)=" + to_decimal(c);
  return o;
}

Outcome fibonacci() {
  const auto tree = generate_unpruned(26);
  std::vector<long> per_last(26, 0);
  for (const auto& [id, node] : tree.nodes) ++per_last[static_cast<std::size_t>(id.last())];
  Outcome o;
  long a = 1, b = 1;
  for (int k = 0; k < 26; ++k) {
    o.passed = o.passed && per_last[static_cast<std::size_t>(k)] == a;
    b = a + b;
    a = b - a;
  }
  o.detail = " columns 0..25 end with " + std::to_string(per_last[24]) + "," + std::to_string(per_last[25]);
  return o;
}

Outcome table_fidelity() {
  const std::vector<std::set<std::string>> expected{
      {"0"},
      {"1"},
      {"2"},
      {"3", "22"},
      {"4", "23", "33"},
      {"5", "24", "34", "44"},
      {"6", "25", "35", "45", "55", "244"},
      {"7", "26", "36", "46", "56", "66", "245", "255"},
      {"8", "27", "37", "47", "57", "67", "77", "246", "256", "266", "366"},
      {"9", "28", "38", "48", "58", "68", "78", "88", "247", "257", "267", "277", "367", "377", "2466"},
      {"a", "29", "39", "49", "59", "69", "79", "89", "99", "248", "258", "268", "278", "288", "368", "378", "388",
       "488", "2467", "2477"},
      {"2a", "3a", "4a", "5a", "6a", "7a", "8a", "9a", "aa", "249", "259", "269", "279", "289", "299", "369", "379",
       "389", "399", "489", "499", "2468", "2478", "2488", "2588"},
      {"24a", "25a", "26a", "27a", "28a", "29a", "2aa", "36a", "37a", "38a", "39a", "3aa", "48a", "49a", "4aa", "5aa",
       "2469", "2479", "2489", "2499", "2589", "2599", "3699", "24688"},
      {"246a", "247a", "248a", "249a", "24aa", "258a", "259a", "25aa", "26aa", "369a", "36aa", "24689", "24699"},
      {"2468a", "2469a", "246aa", "247aa"},
      {"2468aa"},
  };
  const auto table = table_T(11);
  Outcome o;
  for (int w = 0; w <= table.diameter; ++w) {
    std::set<std::string> got;
    for (const auto& id : table.column(w)) got.insert(id.str());
    if (static_cast<std::size_t>(w) >= expected.size() || got != expected[static_cast<std::size_t>(w)]) {
      o.passed = false;
      o.detail += " column " + std::to_string(w);
    }
  }
  o.passed = o.passed && table.diameter + 1 == static_cast<int>(expected.size());
  if (o.passed) o.detail = " 16 columns, omega=15 holds 2468aa";
  return o;
}

Outcome s_recurrence() {
  for (int j = 1; j <= 30; ++j)
    for (int h = 1; h <= 30; ++h)
      if (S(j, h) != S_by_recurrence(j, h)) return {false, " j=" + std::to_string(j) + " h=" + std::to_string(h)};
  return {true, " 1<=j,h<=30"};
}

Outcome closed_form_divergence() {
  const auto rows = compare_closed_forms(10, 3);
  int diverging = 0;
  bool sample = false;
  std::ostringstream report;
  for (const auto& r : rows) {
    if (r.closed != r.enumerated) ++diverging;
    if (r.omega == 6 && r.k == 2) sample = r.closed == 27 && r.enumerated == 4;
  }
  report << " (omega=6,k=2): W_closed=" << W_closed(6, 2) << " W_enum=" << W_enum(6, 2) << "; " << diverging
         << " of " << rows.size() << " cells differ";
  return {sample && diverging > 0, report.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only, skip;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--deep"))
      deep = true;
    else if (!std::strcmp(argv[i], "--only") && i + 1 < argc)
      only.insert(std::atoi(argv[++i]));
    else if (!std::strcmp(argv[i], "--skip") && i + 1 < argc)
      skip.insert(std::atoi(argv[++i]));
    else {
      std::cerr << "usage: acceptance [--deep] [--only K] [--skip K]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence (distributions)", oracle_equivalence},
      {"reference distributions dist(4), dist(5)", reference_figures},
      {"mass conservation n<=40", mass_conservation},
      {"ledger fidelity P_9", ledger_fidelity},
      {"thread fidelity Gamma_9", thread_fidelity},
      {"diameter", diameter_check},
      {"antipodes", antipodes},
      {"E-sets", esets},
      {"quotient orientation", quotient_orientation},
      {"pruning = direct generation", pruning_equals_generation},
      {"cardinality triple agreement", cardinalities},
      {"Fibonacci columns", fibonacci},
      {"table T_11", table_fidelity},
      {"S recurrence", s_recurrence},
      {"closed-form divergence report", closed_form_divergence},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if ((!only.empty() && !only.count(id)) || skip.count(id)) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string(" threw: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::printf("%s %2d %s:%s\n", o.passed ? "PASS" : "FAIL", id, criteria[k].first.c_str(), o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
