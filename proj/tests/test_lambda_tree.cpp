#include "doctest.h"

#include <algorithm>
#include <set>

#include "starics/lambda_tree.hpp"

using namespace starics;

namespace {

std::multiset<int> as_multiset(const std::vector<int>& v) { return {v.begin(), v.end()}; }

const LedgerRow& row(const std::vector<LedgerRow>& rows, const IndexString& id) {
  const auto it = std::find_if(rows.begin(), rows.end(), [&](const LedgerRow& r) { return r.id == id; });
  REQUIRE(it != rows.end());
  return *it;
}

}  // namespace

TEST_CASE("index strings") {
  const auto s = parse_index_string("2468aa");
  CHECK(s.indices() == std::vector<int>{2, 4, 6, 8, 10, 10});
  CHECK(s.steps() == std::vector<int>{2, 2, 2, 2, 2, 0});
  CHECK(s.str() == "2468aa");
  CHECK(s.dotted() == "2.4.6.8.10.10");
  CHECK(parse_index_string("2.4.6") == IndexString{2, 4, 6});
  CHECK(IndexString::from_steps({2, 3, 3}) == IndexString{2, 5, 8});
  CHECK(IndexString{9} < IndexString{2, 2});
  CHECK(IndexString{2, 10} > IndexString{2, 9});
  CHECK(IndexString{2, 4}.advanced() == IndexString{2, 5});
  CHECK(IndexString{2, 4}.duplicated() == IndexString{2, 4, 4});
}

TEST_CASE("admissibility") {
  CHECK(is_admissible({0}, 4));
  CHECK(is_admissible({3, 3}, 4));
  CHECK_FALSE(is_admissible({1, 1}, 4));  // a vertical arc needs i_0 >= 2
  CHECK_FALSE(is_admissible({4}, 4));
  CHECK_FALSE(is_admissible({3, 4, 4}, 9));  // t: 3,1 decreasing
  CHECK(is_admissible({2, 4, 6, 8, 10, 10}, 11));
  CHECK_FALSE(is_admissible({2, 4, 6, 8, 10, 10}, 10));
}

TEST_CASE("node attributes") {
  const auto u = node_attrs({3, 5}, 9);
  CHECK(u.weight == 6);
  CHECK(u.ell == 6);
  CHECK(u.mult == 3);
  CHECK(u.a == 2);
  CHECK(u.b == 0);
  CHECK(u.ics == IcsKey{3, {3}});
  CHECK_THROWS_AS(node_attrs({1, 1}, 9), std::invalid_argument);

  CHECK(divisor_factor({2, 4, 6, 8}) == 4);
  CHECK(divisor_factor({2, 4}) == 2);
  CHECK(divisor_factor({3, 5}) == 0);
  CHECK(divisor_factor({2, 5, 8}) == 2);
  CHECK(literal_divisor_factor({2, 5, 8}) == 1);
}

TEST_CASE("class sizes") {
  CHECK(class_size({2, 4, 6, 8, 10, 10}, 11) == 945);
  CHECK(class_size_closed(ics_of({2, 4, 6, 8, 10, 10}), 11) == 945);
  CHECK(class_size({3}, 4) == 6);
  CHECK(class_size({2, 3}, 4) == 3);
  CHECK(class_size({3, 3}, 4) == 2);
  for (int n = 2; n <= 16; ++n)
    for (const auto& [id, node] : generate_pruned(n).nodes) CHECK(class_size(id, n) == class_size_closed(node.ics, n));
}

TEST_CASE("string_of_perm inverts the replayed Sigma") {
  for (int n = 2; n <= 10; ++n)
    for (const auto& [id, node] : generate_pruned(n).nodes) {
      CHECK(string_of_perm(node.sigma) == id);
      CHECK(ics_key(node.sigma) == node.ics);
      CHECK(weight(node.sigma) == node.weight);
    }
}

TEST_CASE("root path of 2468aa") {
  const auto path = path_to_root(parse_index_string("2468aa"), 11);
  std::string text;
  for (const auto& step : path) {
    text += step.node.str();
    if (step.next) text += (*step.next == ArcKind::horizontal ? "^" : "_") + std::to_string(step.indication);
    text += " ";
  }
  CHECK(text ==
        "0^10 1^9 2_2 22^8 23^7 24_4 244^6 245^5 246_6 2466^4 2467^3 2468_8 24688^2 24689^1 2468a_10 2468aa ");
}

TEST_CASE("small trees") {
  const auto t4 = generate_pruned(4);
  std::set<std::string> ids;
  for (const auto& [id, node] : t4.nodes) ids.insert(id.str());
  CHECK(ids == std::set<std::string>{"0", "1", "2", "3", "22", "23", "33"});
  CHECK(t4.arcs.size() == 6);

  const auto t2 = generate_pruned(2);
  CHECK(t2.nodes.size() == 2);
  REQUIRE(t2.arcs.size() == 1);
  CHECK(t2.arcs[0].indication == 1);
}

TEST_CASE("P_9 ledger rows") {
  const auto pruned = prune(generate_unpruned(9));
  const auto& rows = pruned.ledger;

  const auto& root = row(rows, {0});
  CHECK(root.weight == 0);
  CHECK(root.sigma == "1");
  CHECK(root.sigma_closed.empty());
  CHECK_FALSE(root.ctuple);
  CHECK(root.b * 10 + root.a == 0);

  const auto& u35 = row(rows, {3, 5});
  CHECK(u35.weight == 6);
  CHECK(u35.sigma == "642315");
  CHECK(u35.cycles == "(165.432)");
  CHECK(u35.ell == 6);
  CHECK(u35.sigma_closed == "142365");
  REQUIRE(u35.ctuple);
  CHECK(as_multiset(*u35.ctuple) == std::multiset<int>{3, 2});
  CHECK(u35.b == 0);
  CHECK(u35.a == 2);

  const auto& u244 = row(rows, {2, 4, 4});
  CHECK(u244.weight == 6);
  CHECK(u244.sigma == "13254");
  CHECK(u244.ell == 5);
  CHECK(u244.sigma_closed.empty());
  CHECK(u244.b == 0);
  CHECK(u244.a == 0);

  const auto& u2467 = row(rows, {2, 4, 6, 7});
  CHECK(u2467.weight == 10);
  CHECK(u2467.sigma == "83254761");
  CHECK(u2467.ell == 8);
  CHECK(u2467.sigma_closed.empty());
  CHECK_FALSE(u2467.ctuple);
  CHECK(u2467.a == 1);

  const auto& u2468 = row(rows, {2, 4, 6, 8});
  CHECK(u2468.sigma_closed == "132547698");
  CHECK(as_multiset(*u2468.ctuple) == std::multiset<int>{2, 2, 2, 2});
  CHECK(u2468.b == 4);
  CHECK(u2468.a == 2);

  const auto& u24 = row(rows, {2, 4});
  CHECK(u24.sigma == "53214");
  CHECK(u24.sigma_closed == "13254");
  CHECK(u24.b == 2);
  CHECK(u24.a == 2);
}

TEST_CASE("pruning equals direct generation") {
  for (int n = 2; n <= 12; ++n) CHECK(prune(generate_unpruned(n)).tree == generate_pruned(n));
}

TEST_CASE("pruned nodes have distinct 1-ics") {
  for (int n = 2; n <= 12; ++n) {
    std::set<IcsKey> keys;
    for (const auto& [id, node] : generate_pruned(n).nodes) CHECK(keys.insert(node.ics).second);
  }
}

TEST_CASE("unpruned column sizes are Fibonacci") {
  const auto t = generate_unpruned(20);
  std::vector<int> per_last(20, 0);
  for (const auto& [id, node] : t.nodes) ++per_last[static_cast<std::size_t>(id.last())];
  int a = 1, b = 1;
  for (int k = 0; k < 20; ++k) {
    CHECK(per_last[static_cast<std::size_t>(k)] == a);
    b = a + b;
    a = b - a;
  }
}

TEST_CASE("T_11 edges of the table") {
  const auto t = table_T(11);
  CHECK(t.diameter == 15);
  const auto col = [&](int w) {
    std::set<std::string> s;
    for (const auto& id : t.column(w)) s.insert(id.str());
    return s;
  };
  CHECK(col(0) == std::set<std::string>{"0"});
  CHECK(col(3) == std::set<std::string>{"3", "22"});
  CHECK(col(14) == std::set<std::string>{"2468a", "2469a", "246aa", "247aa"});
  CHECK(col(15) == std::set<std::string>{"2468aa"});
}

TEST_CASE("ledger text is aligned and deterministic") {
  const auto a = format_ledger(prune(generate_unpruned(6)).ledger);
  CHECK(a == format_ledger(prune(generate_unpruned(6)).ledger));
  CHECK(a.find("u(24,5)") != std::string::npos);
}
