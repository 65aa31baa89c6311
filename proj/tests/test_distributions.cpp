#include "doctest.h"

#include <vector>

#include "starics/distributions.hpp"

using namespace starics;

namespace {

std::vector<BigInt> big(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

}  // namespace

TEST_CASE("diameter") {
  CHECK(diameter(2) == 1);
  CHECK(diameter(4) == 4);
  CHECK(diameter(5) == 6);
  CHECK(diameter(9) == 12);
  CHECK(diameter(11) == 15);
}

TEST_CASE("vertex distributions of small star graphs") {
  CHECK(vertex_weight_distribution(2).counts() == big({1, 1}));
  CHECK(vertex_weight_distribution(3).counts() == big({1, 2, 2, 1}));
  CHECK(vertex_weight_distribution(4).counts() == big({1, 3, 6, 9, 5}));
  CHECK(vertex_weight_distribution(5).counts() == big({1, 4, 12, 30, 44, 26, 3}));
  CHECK(class_weight_distribution(4).counts() == big({1, 1, 1, 2, 2}));
}

TEST_CASE("both methods agree and conserve mass") {
  for (int n = 2; n <= 40; ++n) {
    const auto e = vertex_weight_distribution(n, Method::enumerate);
    CHECK(e.total() == factorial(n));
    if (n <= 30) CHECK(e.counts() == vertex_weight_distribution(n, Method::cycle_counts).counts());
    CHECK(class_weight_distribution(n).counts() == class_weight_distribution(n, Method::cycle_counts).counts());
  }
}

TEST_CASE("antipodes") {
  CHECK(antipode_count(5) == 3);
  CHECK(antipode_count(7) == 15);
  CHECK(antipode_count(9) == 105);
  for (int n = 3; n <= 25; n += 2) CHECK(vertex_weight_distribution(n).counts().back() == antipode_count(n));
  CHECK_THROWS(antipode_count(6));
}

TEST_CASE("E-sets") {
  CHECK(eset_distribution(4, 2).counts == big({0, 1, 2, 2, 1}));
  CHECK(eset_distribution(4, 1).counts == big({1, 0, 0, 3, 2}));
  CHECK(eset_distribution(3, 3).counts == big({0, 1, 1, 0}));
  for (int n = 3; n <= 12; ++n) {
    for (int i = 1; i <= n; ++i) {
      const auto e = eset_distribution(n, i);
      CHECK(e.total() == factorial(n - 1));
      if (i >= 2) CHECK(e.counts == eset_distribution(n, 2).counts);
      for (std::size_t w = 0; w < e.counts.size(); ++w) CHECK(e.counts[w] >= 0);
    }
  }
  CHECK_THROWS_AS(eset_distribution(4, 5), std::invalid_argument);
}

TEST_CASE("S recurrence") {
  CHECK(S(3, 2) == 6);
  CHECK(S(0, 4) == 0);
  for (int j = 1; j <= 30; ++j)
    for (int h = 1; h <= 30; ++h) CHECK(S(j, h) == S_by_recurrence(j, h));
}

TEST_CASE("closed-form string counts diverge from enumeration") {
  CHECK(W_closed(6, 2) == 27);
  CHECK(W_enum(6, 2) == 4);
  CHECK(W_closed(1, 1) == 1);
  CHECK(W_enum(3, 2) == 1);
  const auto rows = compare_closed_forms(12, 4);
  bool differs = false;
  for (const auto& r : rows) differs = differs || r.closed != r.enumerated;
  CHECK(differs);
}

TEST_CASE("restricted counts sum to the class distribution") {
  for (int n = 2; n <= 12; ++n) {
    const auto classes = class_weight_distribution(n);
    for (int w = 0; w <= diameter(n); ++w) {
      BigInt sum = 0;
      for (int len = 1; len <= n; ++len) sum += W_restricted(w, len, n);
      CHECK(sum == classes[w]);
    }
  }
}

TEST_CASE("zero counts are rejected") {
  CHECK_THROWS_AS(WeightDistribution(4, DistributionKind::vertices, big({1, 3, 0, 9, 5})), std::logic_error);
  CHECK_THROWS_AS(WeightDistribution(4, DistributionKind::vertices, big({1, 3})), std::logic_error);
}
